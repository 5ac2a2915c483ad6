//! Bounded-height solver for `F(U, V) ∈ R` with `F` a binary form of degree
//! at least 3.
//!
//! Results are claims about a box only: a `SolutionSet` lists every solution
//! with `|v| ≤ height`, nothing more.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{integer_roots, BinaryForm, Mat2, UniPoly};
use crate::error::{Error, Result};
use crate::forms::divisors;

pub type Pair = (BigInt, BigInt);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThueProblem {
    form: BinaryForm,
    rhs: Vec<BigInt>,
    height: u64,
}

impl ThueProblem {
    pub fn new(form: BinaryForm, rhs: impl IntoIterator<Item = BigInt>, height: u64) -> Result<Self> {
        if form.degree() < 3 {
            return Err(Error::NotThueForm(form.degree()));
        }
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        let rhs: Vec<BigInt> = rhs.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if rhs.is_empty() {
            return Err(Error::EmptyRhs);
        }
        if height == 0 {
            return Err(Error::ZeroHeight);
        }
        Ok(ThueProblem { form, rhs, height })
    }

    pub fn form(&self) -> &BinaryForm {
        &self.form
    }

    /// Right-hand sides, sorted and duplicate-free.
    pub fn rhs(&self) -> &[BigInt] {
        &self.rhs
    }

    pub fn height(&self) -> u64 {
        self.height
    }
}

/// Solutions found within `|v| ≤ height`, one per `±` class, sorted.
///
/// A class whose two members both solve the equation is stored with its
/// first nonzero coordinate positive; otherwise the member that solves it is
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub solutions: Vec<Pair>,
    pub rhs: Vec<BigInt>,
    pub height: u64,
    /// The listing is exhaustive for the box. Never a global claim.
    pub complete_within_height: bool,
    /// The equation may have infinitely many solutions, so the box listing
    /// is a truncation of an infinite family.
    pub potentially_infinite: bool,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains_class(&self, u: &BigInt, v: &BigInt) -> bool {
        let neg = (-u, -v);
        self.solutions.iter().any(|s| (&s.0, &s.1) == (u, v) || *s == neg)
    }
}

fn canonical_pair(u: BigInt, v: BigInt) -> Pair {
    if u.is_negative() || (u.is_zero() && v.is_negative()) {
        (-u, -v)
    } else {
        (u, v)
    }
}

/// Collapses `±` classes of a set of solutions under the storage rule.
pub(crate) fn normalize_classes(found: BTreeSet<Pair>) -> Vec<Pair> {
    let mut out = BTreeSet::new();
    for (u, v) in &found {
        let neg = (-u, -v);
        if found.contains(&neg) {
            out.insert(canonical_pair(u.clone(), v.clone()));
        } else {
            out.insert((u.clone(), v.clone()));
        }
    }
    out.into_iter().collect()
}

/// Every `(u, v)` with `|v| ≤ height` and `F(u, v) ∈ rhs`.
///
/// For each `v` the integer roots of `F(U, v) − r` are extracted exactly; the
/// `v`-range is split across the rayon pool and merged in sorted order.
pub fn solve_bounded(p: &ThueProblem) -> SolutionSet {
    let h = p.height as i64;
    let per_v = |v: i64| -> (Vec<Pair>, bool) {
        let v = BigInt::from(v);
        let base = p.form.specialize_v(&v);
        let mut sols = Vec::new();
        let mut degenerate = false;
        for r in &p.rhs {
            let shifted = &base - &UniPoly::constant(r.clone());
            match integer_roots(&shifted) {
                Some(us) => sols.extend(us.into_iter().map(|u| (u, v.clone()))),
                None => degenerate = true,
            }
        }
        (sols, degenerate)
    };
    let (found, degenerate) = (-h..=h)
        .into_par_iter()
        .map(per_v)
        .fold(
            || (BTreeSet::new(), false),
            |(mut acc, d), (sols, dd)| {
                acc.extend(sols);
                (acc, d || dd)
            },
        )
        .reduce(
            || (BTreeSet::new(), false),
            |(mut a, da), (b, db)| {
                a.extend(b);
                (a, da || db)
            },
        );
    let potentially_infinite = degenerate || may_have_infinitely_many(&p.form, &p.rhs);
    SolutionSet {
        solutions: normalize_classes(found),
        rhs: p.rhs.clone(),
        height: p.height,
        complete_within_height: true,
        potentially_infinite,
    }
}

/// Structural test for infinitely many solutions.
///
/// `F = r` with `r ≠ 0` has infinitely many solutions only when `F` is a
/// constant times a power of a linear form, or a constant times the square
/// of an indefinite binary quadratic form with non-square discriminant
/// (a Pell family). `F = 0` has infinitely many as soon as `F` has a
/// rational linear factor.
pub fn may_have_infinitely_many(form: &BinaryForm, rhs: &[BigInt]) -> bool {
    if form.as_power_of_linear().is_some() {
        return true;
    }
    if rhs.iter().any(Zero::is_zero) && has_rational_linear_factor(form) {
        return true;
    }
    form.degree() == 4 && is_pell_square(form)
}

fn has_rational_linear_factor(form: &BinaryForm) -> bool {
    let c = form.coeffs();
    // U or V divides F, or F(a, b) = 0 with a | c_n, b | c_0.
    if c[0].is_zero() || c[c.len() - 1].is_zero() {
        return true;
    }
    let nums = divisors(&c[c.len() - 1]);
    let dens = divisors(&c[0]);
    for b in &dens {
        for a in &nums {
            for a in [a.clone(), -a] {
                // b^n F(a/b, 1) = F(a, b)
                if form.eval(&a, b).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// `F = c·q²` for an indefinite binary quadratic `q` with non-square
/// discriminant.
fn is_pell_square(form: &BinaryForm) -> bool {
    // A shear that makes the U⁴ coefficient nonzero keeps both properties.
    let mut k = BigInt::zero();
    while form.eval(&BigInt::from(1), &k).is_zero() {
        k = if k.is_positive() { -k } else { -k + 1 };
    }
    let sheared = form.act(&Mat2::new(1.into(), 0.into(), k, 1.into()));
    let f = sheared.dehomogenize();
    let g = f.primitive_gcd(&f.derivative());
    if g.degree() != Some(2) {
        return false;
    }
    let sq = &g * &g;
    // f = c·g² exactly?
    let lead_ratio = f.leading().unwrap() / sq.leading().unwrap();
    if &sq.scale(&lead_ratio) != &f {
        return false;
    }
    let (c0, c1, c2) = (g.coeff(0), g.coeff(1), g.coeff(2));
    let disc = &c1 * &c1 - BigInt::from(4) * &c2 * &c0;
    if !disc.is_positive() {
        return false;
    }
    let r = disc.sqrt();
    &r * &r != disc
}

/// Carries solutions of `F = r` to solutions of `F_{A⁻¹} = r` via `w ↦ A·w`.
///
/// Since `F_{A⁻¹}(A·w) = F(w)` values are preserved exactly; with `A` the
/// Bézout matrix of `(u₀, v₀)` the solution `(u₀, v₀)` is carried to `(1, 0)`.
/// Classes are re-normalized under the storage rule for the new form.
pub fn transport_solutions(f: &BinaryForm, a: &Mat2, s: &SolutionSet) -> Result<SolutionSet> {
    let inv = a.inverse()?;
    let g = f.act(&inv);
    let rhs: BTreeSet<&BigInt> = s.rhs.iter().collect();
    let mut out = BTreeSet::new();
    for (u, v) in &s.solutions {
        let (x, y) = a.apply(u, v);
        let neg_solves = rhs.contains(&g.eval(&-&x, &-&y));
        out.insert(if neg_solves { canonical_pair(x, y) } else { (x, y) });
    }
    Ok(SolutionSet {
        solutions: out.into_iter().collect(),
        rhs: s.rhs.clone(),
        height: s.height,
        complete_within_height: s.complete_within_height && a == &Mat2::identity(),
        potentially_infinite: s.potentially_infinite,
    })
}
