use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over `Z`, coefficients lowest degree first.
///
/// Trailing zero coefficients are stripped on construction, so the last
/// stored coefficient is the leading one; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        super::content(&self.coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`; the division must be exact.
    pub(crate) fn div_exact(&self, k: &BigInt) -> Self {
        debug_assert!(self.coeffs.iter().all(|c| (c % k).is_zero()));
        Self::new(self.coeffs.iter().map(|c| c / k).collect())
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().map_or(false, Signed::is_negative) {
            c = -c;
        }
        self.div_exact(&c)
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Pseudo-remainder: `lc(d)^(deg self − deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(ds) = self.degree() else {
            return UniPoly::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut steps = 0usize;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(lc) - &d.scale(&lr).shift(dr - dd);
            steps += 1;
        }
        let missing = ds - dd + 1 - steps;
        if missing > 0 {
            r = r.scale(&Pow::pow(lc, missing));
        }
        r
    }

    /// Gcd up to a unit, computed by the primitive remainder sequence; the
    /// result is primitive with positive leading coefficient.
    pub fn primitive_gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "T")?,
                (1, false) => write!(f, "{a}*T")?,
                (_, true) => write!(f, "T^{i}")?,
                (_, false) => write!(f, "{a}*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Resultant with the convention `Res(f, g) = lc(f)^deg(g) · ∏ g(α)` over
/// the roots `α` of `f` (the Sylvester determinant with the rows of `f`
/// first).
///
/// Computed by the subresultant algorithm, so every intermediate division is
/// exact in `Z`. A zero argument gives `0` unless both are zero.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return if f.is_zero() && g.is_zero() {
            Err(Error::UndefinedResultant)
        } else {
            Ok(BigInt::zero())
        };
    };
    if df == 0 {
        return Ok(Pow::pow(f.leading().unwrap(), dg));
    }
    if dg == 0 {
        return Ok(Pow::pow(g.leading().unwrap(), df));
    }

    let (cf, cg) = (f.content(), g.content());
    let t = Pow::pow(&cf, dg) * Pow::pow(&cg, df);
    let mut a = f.div_exact(&cf);
    let mut b = g.div_exact(&cg);
    let mut sign = 1i8;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            sign = -sign;
        }
    }

    let mut lead = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.div_exact(&(&lead * Pow::pow(&h, delta)));
        lead = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            Pow::pow(&lead, delta) / Pow::pow(&h, delta - 1)
        };
        match b.degree() {
            None => return Ok(BigInt::zero()),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = a.degree().unwrap();
    let h = Pow::pow(b.leading().unwrap(), da) / Pow::pow(&h, da - 1);
    let res = t * h;
    Ok(if sign < 0 { -res } else { res })
}

/// `Disc(f) = (−1)^(n(n−1)/2) · Res(f, f′) / lc(f)` for `deg f = n ≥ 2`.
pub fn disc_poly(f: &UniPoly) -> Result<BigInt> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        d => return Err(Error::DegreeTooSmall(d)),
    };
    let r = resultant(f, &f.derivative())?;
    let (q, rem) = r.div_rem(f.leading().unwrap());
    debug_assert!(rem.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}
