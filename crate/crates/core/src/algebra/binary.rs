use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::{disc_poly, Mat2, UniPoly};
use crate::error::{Error, Result};

/// Integer binary form of degree `n`.
///
/// `coeffs[i]` is the coefficient of `U^(n−i) V^i`, so the U-degree is
/// descending. The degree is part of the value: `0·U² + UV` is a quadratic
/// form, not a linear one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigInt>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![BigInt::zero(); degree + 1])
    }

    /// The linear form `a·U + b·V`.
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Self::new(vec![a, b])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        // Horner in u; the i-th step adds cᵢ·vⁱ.
        let mut acc = BigInt::zero();
        let mut vp = BigInt::one();
        for c in &self.coeffs {
            acc = acc * u + c * &vp;
            vp *= v;
        }
        acc
    }

    /// `F(U, 1)` as a univariate polynomial.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `F(U, v)` as a polynomial in `U` for a fixed `v`.
    pub fn specialize_v(&self, v: &BigInt) -> UniPoly {
        let n = self.degree();
        let mut vp = BigInt::one();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - i] = c * &vp;
            vp *= v;
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, o: &BinaryForm) -> Self {
        assert_eq!(self.degree(), o.degree(), "adding forms of different degree");
        Self::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn mul(&self, o: &BinaryForm) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = BinaryForm::from_i64(&[1]);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `F_A(U, V) = F(aU + bV, cU + dV)`.
    ///
    /// This is a right action: `F_(AB) = (F_A)_B`, and the discriminant
    /// scales as `D(F_A) = (det A)^(n(n−1)) · D(F)`.
    pub fn act(&self, m: &Mat2) -> BinaryForm {
        let n = self.degree();
        let first = BinaryForm::linear(m.a.clone(), m.b.clone());
        let second = BinaryForm::linear(m.c.clone(), m.d.clone());
        let first_pows: Vec<_> = (0..=n).map(|k| first.pow(k)).collect();
        let second_pows: Vec<_> = (0..=n).map(|k| second.pow(k)).collect();
        let mut out = BinaryForm::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = first_pows[n - i].mul(&second_pows[i]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Discriminant `∏_{i<j} (αᵢβⱼ − αⱼβᵢ)²` of `F = ∏ (αᵢU − βᵢV)`.
    ///
    /// When the `U^n` coefficient vanishes, the form is first moved by a
    /// unimodular shear `V ↦ kU + V` (which leaves the discriminant unchanged)
    /// so that `F(U, 1)` has full degree.
    pub fn discriminant(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let n = self.degree();
        if n < 2 {
            return Ok(BigInt::one());
        }
        let mut k = BigInt::zero();
        loop {
            if !self.eval(&BigInt::one(), &k).is_zero() {
                break;
            }
            k = if k.is_positive() { -k } else { -k + 1 };
        }
        let shifted = if k.is_zero() {
            self.clone()
        } else {
            self.act(&Mat2::new(BigInt::one(), BigInt::zero(), k, BigInt::one()))
        };
        disc_poly(&shifted.dehomogenize())
    }

    /// Detects `F = c·ℓⁿ` for a primitive linear form `ℓ` and returns `(c, ℓ)`.
    pub fn as_power_of_linear(&self) -> Option<(BigInt, BinaryForm)> {
        let n = self.degree();
        if n == 0 || self.is_zero() {
            return None;
        }
        let c = &self.coeffs;
        if c[0].is_zero() {
            // Only c·Vⁿ is possible.
            if c[..n].iter().all(Zero::is_zero) {
                return Some((c[n].clone(), BinaryForm::from_i64(&[0, 1])));
            }
            return None;
        }
        // c₀(U − rV)ⁿ with r = −c₁/(n·c₀); check cᵢ(n·c₀)ⁱ = c₀·C(n,i)·c₁ⁱ.
        let nc0 = BigInt::from(n) * &c[0];
        let mut binom = BigInt::one();
        for i in 0..=n {
            if i > 0 {
                binom = binom * BigInt::from(n - i + 1) / BigInt::from(i);
            }
            let lhs = &c[i] * Pow::pow(&nc0, i);
            let rhs = &c[0] * &binom * Pow::pow(&c[1], i);
            if lhs != rhs {
                return None;
            }
        }
        // ℓ ∝ n·c₀·U + c₁·V, made primitive; c absorbs the scaling.
        let g = super::content([&nc0, &c[1]]);
        let mut l = (nc0 / &g, &c[1] / &g);
        if l.0.is_negative() {
            l = (-l.0, -l.1);
        }
        let lead = Pow::pow(&l.0, n);
        let coeff = &c[0] / lead;
        Some((coeff, BinaryForm::linear(l.0, l.1)))
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let mono = match (n - i, i) {
                (0, 0) => String::new(),
                (p, 0) => monomial("U", p),
                (0, q) => monomial("V", q),
                (p, q) => format!("{}*{}", monomial("U", p), monomial("V", q)),
            };
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn monomial(var: &str, p: usize) -> String {
    if p == 1 {
        var.to_string()
    } else {
        format!("{var}^{p}")
    }
}
