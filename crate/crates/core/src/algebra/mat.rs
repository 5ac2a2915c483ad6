use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    /// Inverse of a matrix in GL₂(Z).
    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        // det = ±1, so dividing by it is multiplying by it.
        Ok(Mat2::new(
            &self.d * &det,
            -&self.b * &det,
            -&self.c * &det,
            &self.a * &det,
        ))
    }

    /// Matrix–vector product `M · (u, v)ᵗ`.
    pub fn apply(&self, u: &BigInt, v: &BigInt) -> (BigInt, BigInt) {
        (&self.a * u + &self.b * v, &self.c * u + &self.d * v)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Extended gcd with a canonical choice of cofactors.
///
/// Returns `(g, s, t)` with `g = gcd(u, v) > 0` and `s·u + t·v = g`, where
/// `s` has minimal absolute value among all valid pairs and ties go to
/// `s ≥ 0`. When `v = 0` the cofactor `t` is free and is set to `0`.
pub fn extended_gcd(u: &BigInt, v: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if u.is_zero() && v.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let e = u.extended_gcd(v);
    let (mut g, mut s0) = (e.gcd, e.x);
    if g.is_negative() {
        g = -g;
        s0 = -s0;
    }
    if v.is_zero() {
        return Ok((g, u.signum(), BigInt::zero()));
    }
    // All solutions: s = s0 + k·(v/g).
    let m = v.abs() / &g;
    let r = s0.mod_floor(&m);
    let s = if &m - &r < r { r - &m } else { r };
    let t = (&g - &s * u) / v;
    Ok((g, s, t))
}

/// Determinant of a 3×3 integer matrix.
pub fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn egcd(u: i64, v: i64) -> (i64, i64, i64) {
        let (g, s, t) = extended_gcd(&u.into(), &v.into()).unwrap();
        (
            g.try_into().unwrap(),
            s.try_into().unwrap(),
            t.try_into().unwrap(),
        )
    }

    #[test]
    fn extended_gcd_normalization() {
        assert_eq!(egcd(1, 1), (1, 0, 1));
        assert_eq!(egcd(0, -1), (1, 0, -1));
        assert_eq!(egcd(4, 7), (1, 2, -1));
        assert_eq!(egcd(1, 0), (1, 1, 0));
        assert_eq!(egcd(-3, 0), (3, -1, 0));
        // s ∈ {1, −1} tie goes to the positive one
        assert_eq!(egcd(1, 2), (1, 1, 0));
        assert_eq!(egcd(-6, 4), (2, 1, 2));
        assert_eq!(extended_gcd(&BigInt::zero(), &BigInt::zero()), Err(Error::ZeroGcd));
    }

    #[test]
    fn extended_gcd_is_minimal_by_brute_force() {
        for u in -12i64..=12 {
            for v in -12i64..=12 {
                if u == 0 && v == 0 {
                    continue;
                }
                let (g, s, t) = egcd(u, v);
                assert_eq!(s * u + t * v, g);
                assert_eq!(g, num_integer::gcd(u, v));
                if v == 0 {
                    continue;
                }
                let best = (-30i64..=30)
                    .filter(|s| (g - s * u) % v == 0)
                    .min_by_key(|s| (s.abs(), -s.signum()))
                    .unwrap();
                assert_eq!(s, best, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn inverse_and_products() {
        let m = Mat2::from_i64(2, 1, 7, 4);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat2::identity());
        let n = Mat2::from_i64(0, 1, 1, 0);
        assert_eq!(n.inverse().unwrap(), n);
        assert!(Mat2::from_i64(2, 0, 0, 1).inverse().is_err());
    }

    #[test]
    fn det3_of_doubled_gram() {
        let m = [
            [0.into(), 0.into(), (-1).into()],
            [0.into(), 2.into(), 0.into()],
            [(-1).into(), 0.into(), 0.into()],
        ];
        assert_eq!(det3(&m), BigInt::from(-2));
    }
}
