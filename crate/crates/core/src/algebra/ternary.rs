use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{det3, BinaryForm};

/// An integer point `(x, y, z)`.
pub type Triple = [BigInt; 3];

/// Integer ternary quadratic form
/// `xx·X² + yy·Y² + zz·Z² + xy·XY + xz·XZ + yz·YZ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TernaryQuadForm {
    pub xx: BigInt,
    pub yy: BigInt,
    pub zz: BigInt,
    pub xy: BigInt,
    pub xz: BigInt,
    pub yz: BigInt,
}

impl TernaryQuadForm {
    /// Coefficients in the order `xx, yy, zz, xy, xz, yz`.
    pub fn new(c: [BigInt; 6]) -> Self {
        let [xx, yy, zz, xy, xz, yz] = c;
        TernaryQuadForm { xx, yy, zz, xy, xz, yz }
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        Self::new(c.map(BigInt::from))
    }

    pub fn coeffs(&self) -> [&BigInt; 6] {
        [&self.xx, &self.yy, &self.zz, &self.xy, &self.xz, &self.yz]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, v: &Triple) -> BigInt {
        let [x, y, z] = v;
        &self.xx * x * x
            + &self.yy * y * y
            + &self.zz * z * z
            + &self.xy * x * y
            + &self.xz * x * z
            + &self.yz * y * z
    }

    /// Doubled Gram matrix `G` with `vᵗGv = 2·Q(v)`; all entries are integers.
    pub fn gram_doubled(&self) -> [[BigInt; 3]; 3] {
        let two = BigInt::from(2);
        [
            [&self.xx * &two, self.xy.clone(), self.xz.clone()],
            [self.xy.clone(), &self.yy * &two, self.yz.clone()],
            [self.xz.clone(), self.yz.clone(), &self.zz * &two],
        ]
    }

    /// `det G`; the form is nondegenerate iff this is nonzero.
    pub fn gram_det(&self) -> BigInt {
        det3(&self.gram_doubled())
    }

    /// Polar form `B(a, b) = Q(a + b) − Q(a) − Q(b) = aᵗGb`.
    pub fn bilinear(&self, a: &Triple, b: &Triple) -> BigInt {
        let g = self.gram_doubled();
        let mut acc = BigInt::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += &a[i] * &g[i][j] * &b[j];
            }
        }
        acc
    }

    /// `s·self + t·other`.
    pub fn combine(&self, s: &BigInt, other: &TernaryQuadForm, t: &BigInt) -> Self {
        let a = self.coeffs();
        let b = other.coeffs();
        Self::new(std::array::from_fn(|i| s * a[i] + t * b[i]))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs().map(|c| -c))
    }

    /// True when `Q(v) ≠ 0` for every real `v ≠ 0`.
    pub fn is_definite(&self) -> bool {
        let g = self.gram_doubled();
        let d1 = g[0][0].clone();
        let d2 = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        let d3 = det3(&g);
        d2.is_positive() && !d3.is_zero() && d1.signum() == d3.signum()
    }

    /// `Q(X(P,Q), Y(P,Q), Z(P,Q))` for binary forms of a common degree.
    pub fn compose(&self, x: &BinaryForm, y: &BinaryForm, z: &BinaryForm) -> BinaryForm {
        let terms = [
            (&self.xx, x, x),
            (&self.yy, y, y),
            (&self.zz, z, z),
            (&self.xy, x, y),
            (&self.xz, x, z),
            (&self.yz, y, z),
        ];
        let mut out = BinaryForm::zero(2 * x.degree());
        for (c, a, b) in terms {
            if !c.is_zero() {
                out = out.add(&a.mul(b).scale(c));
            }
        }
        out
    }

    pub fn to_form(&self) -> TernaryForm {
        let mut f = TernaryForm::zero(2);
        *f.coeff_mut(2, 0, 0) = self.xx.clone();
        *f.coeff_mut(0, 2, 0) = self.yy.clone();
        *f.coeff_mut(0, 0, 2) = self.zz.clone();
        *f.coeff_mut(1, 1, 0) = self.xy.clone();
        *f.coeff_mut(1, 0, 1) = self.xz.clone();
        *f.coeff_mut(0, 1, 1) = self.yz.clone();
        f
    }
}

impl fmt::Display for TernaryQuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_form().fmt(f)
    }
}

/// Homogeneous ternary form of a fixed degree `d`.
///
/// Monomials `X^i Y^j Z^k` (with `i + j + k = d`) are stored in decreasing
/// order of `i`, then of `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    coeffs: Vec<BigInt>,
}

fn slot(d: u32, i: u32, j: u32) -> usize {
    let a = (d - i) as usize;
    a * (a + 1) / 2 + (d - i - j) as usize
}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        let n = ((degree + 1) * (degree + 2) / 2) as usize;
        TernaryForm { degree, coeffs: vec![BigInt::zero(); n] }
    }

    pub fn constant(c: BigInt) -> Self {
        TernaryForm { degree: 0, coeffs: vec![c] }
    }

    /// The linear form `a·X + b·Y + c·Z`.
    pub fn linear(a: BigInt, b: BigInt, c: BigInt) -> Self {
        TernaryForm { degree: 1, coeffs: vec![a, b, c] }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exponent triples in storage order.
    pub fn monomials(&self) -> impl Iterator<Item = (u32, u32, u32)> {
        let d = self.degree;
        (0..=d)
            .rev()
            .flat_map(move |i| (0..=d - i).rev().map(move |j| (i, j, d - i - j)))
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> &BigInt {
        assert_eq!(i + j + k, self.degree);
        &self.coeffs[slot(self.degree, i, j)]
    }

    pub fn coeff_mut(&mut self, i: u32, j: u32, k: u32) -> &mut BigInt {
        assert_eq!(i + j + k, self.degree);
        &mut self.coeffs[slot(self.degree, i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, v: &Triple) -> BigInt {
        let d = self.degree as usize;
        let powers = |b: &BigInt| {
            let mut p = vec![BigInt::one(); d + 1];
            for e in 1..=d {
                p[e] = &p[e - 1] * b;
            }
            p
        };
        let (px, py, pz) = (powers(&v[0]), powers(&v[1]), powers(&v[2]));
        self.monomials()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j, k), c)| c * &px[i as usize] * &py[j as usize] * &pz[k as usize])
            .sum()
    }

    pub fn add(&self, o: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, o.degree);
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, o.degree);
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> TernaryForm {
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn neg(&self) -> TernaryForm {
        self.scale(&-BigInt::one())
    }

    pub fn mul(&self, o: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero(self.degree + o.degree);
        for ((i, j, k), a) in self.monomials().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for ((p, q, r), b) in o.monomials().zip(&o.coeffs) {
                if !b.is_zero() {
                    *out.coeff_mut(i + p, j + q, k + r) += a * b;
                }
            }
        }
        out
    }

    /// `F(U, V)` with `U`, `V` replaced by ternary forms of a common degree.
    pub fn compose_binary(f: &BinaryForm, u: &TernaryForm, v: &TernaryForm) -> TernaryForm {
        let n = f.degree();
        let up: Vec<_> = std::iter::successors(Some(TernaryForm::constant(BigInt::one())), |p| {
            Some(p.mul(u))
        })
        .take(n + 1)
        .collect();
        let vp: Vec<_> = std::iter::successors(Some(TernaryForm::constant(BigInt::one())), |p| {
            Some(p.mul(v))
        })
        .take(n + 1)
        .collect();
        let mut out = TernaryForm::zero(u.degree * n as u32);
        for (i, c) in f.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&up[n - i].mul(&vp[i]).scale(c));
            }
        }
        out
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j, k), c) in self.monomials().zip(&self.coeffs) {
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
            let mut parts = Vec::new();
            let a = c.abs();
            if !a.is_one() || i + j + k == 0 {
                parts.push(a.to_string());
            }
            for (var, e) in [("X", i), ("Y", j), ("Z", k)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Degree-6 ternary form; the index form of a quartic order lives here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernarySexticForm(TernaryForm);

impl TernarySexticForm {
    /// `None` unless `form` has degree 6.
    pub fn new(form: TernaryForm) -> Option<Self> {
        (form.degree() == 6).then_some(TernarySexticForm(form))
    }

    pub fn as_form(&self) -> &TernaryForm {
        &self.0
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> &BigInt {
        self.0.coeff(i, j, k)
    }

    pub fn eval(&self, v: &Triple) -> BigInt {
        self.0.eval(v)
    }
}

impl fmt::Display for TernarySexticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
