//! Exact integer root extraction.
//!
//! Real roots are located at integer resolution by recursion on the
//! derivative: between consecutive critical points the polynomial is
//! monotone, so integer bisection on each monotone stretch finds the unique
//! sign change. Nothing is ever approximated; every candidate is confirmed by
//! exact evaluation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{floor_div, signum, UniPoly};

/// All integer roots of a nonzero polynomial, sorted ascending.
///
/// Returns `None` for the zero polynomial (every integer is a root).
pub fn integer_roots(g: &UniPoly) -> Option<Vec<BigInt>> {
    let d = g.degree()?;
    if d == 0 {
        return Some(Vec::new());
    }
    let bound = cauchy_bound(g);
    let mut floors = Vec::new();
    root_floors(g, &-&bound, &bound, &mut floors);
    let mut roots: Vec<BigInt> = floors
        .into_iter()
        .flat_map(|k| {
            let k1 = &k + 1;
            [k, k1]
        })
        .filter(|k| k.abs() <= bound && g.eval(k).is_zero())
        .collect();
    roots.sort();
    roots.dedup();
    Some(roots)
}

/// `1 + ⌈max |cᵢ| / |lc|⌉`: every complex root has absolute value below it.
fn cauchy_bound(g: &UniPoly) -> BigInt {
    let lc = g.leading().unwrap().abs();
    let max = g.coeffs()[..g.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigInt::one() - floor_div(&-max, &lc)
}

/// Pushes a superset of `{⌊r⌋ : r real root of g, lo ≤ r ≤ hi}`, every
/// element lying in `[lo, hi]`.
fn root_floors(g: &UniPoly, lo: &BigInt, hi: &BigInt, out: &mut Vec<BigInt>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let r = floor_div(&-g.coeff(0), &g.coeff(1));
            if lo <= &r && &r <= hi {
                out.push(r);
            }
        }
        Some(_) => {
            let mut crit = Vec::new();
            root_floors(&g.derivative(), lo, hi, &mut crit);
            crit.sort();
            crit.dedup();
            let mut start = lo.clone();
            for c in crit {
                monotone_root(g, &start, &c, out);
                // A root of g may sit next to the turning point in [c, c + 1].
                out.push(c.clone());
                start = c + 1;
            }
            monotone_root(g, &start, hi, out);
        }
    }
}

/// On `[a, b]` where `g` is monotone, pushes the floor of its root if any.
fn monotone_root(g: &UniPoly, a: &BigInt, b: &BigInt, out: &mut Vec<BigInt>) {
    if a > b {
        return;
    }
    let (ga, gb) = (g.eval(a), g.eval(b));
    let (sa, sb) = (signum(&ga), signum(&gb));
    if sa == 0 {
        out.push(a.clone());
    }
    if sb == 0 {
        out.push(b.clone());
    }
    if sa * sb >= 0 {
        return;
    }
    let (mut lo, mut hi) = (a.clone(), b.clone());
    while &hi - &lo > BigInt::one() {
        let mid = floor_div(&(&lo + &hi), &BigInt::from(2));
        let sm = signum(&g.eval(&mid));
        if sm == 0 {
            out.push(mid);
            return;
        }
        if sm == sa {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.push(lo);
}
