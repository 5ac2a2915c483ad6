//! Exact integer algebra: univariate polynomials, binary forms, ternary forms,
//! 2×2 integer matrices, resultants and discriminants.

mod binary;
mod mat;
mod poly;
mod roots;
mod ternary;

pub use binary::BinaryForm;
pub use mat::{det3, extended_gcd, Mat2};
pub use poly::{disc_poly, resultant, UniPoly};
pub use roots::integer_roots;
pub use ternary::{TernaryForm, TernaryQuadForm, TernarySexticForm, Triple};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Non-negative gcd of a list; zero for an all-zero list.
pub fn content<'a, I: IntoIterator<Item = &'a BigInt>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Rounds `n / d` down; `d` must be nonzero.
pub(crate) fn floor_div(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

pub(crate) fn signum(n: &BigInt) -> i8 {
    if n.is_zero() {
        0
    } else if n.is_positive() {
        1
    } else {
        -1
    }
}
