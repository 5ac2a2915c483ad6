//! Brute-force references: plain loops over a box with exact evaluation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{BinaryForm, Triple};
use crate::forms::{canonical_triple, QuadraticPair, QuarticGenerator};
use crate::thue::{normalize_classes, Pair};

/// Coordinates range over `[−bound, bound]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBox {
    bound: u64,
}

impl SearchBox {
    /// `None` for a zero bound.
    pub fn new(bound: u64) -> Option<Self> {
        (bound >= 1).then_some(SearchBox { bound })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn contains(&self, coords: &[BigInt]) -> bool {
        let b = BigInt::from(self.bound);
        coords.iter().all(|c| c <= &b && c >= &-&b)
    }

    fn range(&self) -> std::ops::RangeInclusive<i64> {
        let b = self.bound as i64;
        -b..=b
    }
}

/// Runs `f` on every triple of the box whose first nonzero coordinate is
/// positive (one representative per `±` pair) and collects the hits.
fn half_box_triples<F>(b: SearchBox, f: F) -> BTreeSet<Triple>
where
    F: Fn(&Triple) -> bool + Sync,
{
    b.range()
        .into_par_iter()
        .filter(|&x| x >= 0)
        .flat_map_iter(|x| {
            let mut hits = Vec::new();
            for y in b.range() {
                if x == 0 && y < 0 {
                    continue;
                }
                for z in b.range() {
                    if x == 0 && y == 0 && z <= 0 {
                        continue;
                    }
                    let t = [BigInt::from(x), BigInt::from(y), BigInt::from(z)];
                    if f(&t) {
                        hits.push(t);
                    }
                }
            }
            hits
        })
        .collect()
}

/// Sign-normalized triples in the box with `index_of = 1`.
pub fn oracle_monogenizers(p: &QuarticGenerator, b: SearchBox) -> BTreeSet<Triple> {
    half_box_triples(b, |t| p.index_of(t).is_one())
}

/// Sign-normalized triples in the box with `Q₁ = u₀` and `Q₂ = v₀`.
///
/// Both coordinates of the pair are even in the triple, so a triple and its
/// negation solve the system together.
pub fn oracle_system(pair: &QuadraticPair, u0: &BigInt, v0: &BigInt, b: SearchBox) -> BTreeSet<Triple> {
    half_box_triples(b, |t| pair.q2.eval(t) == *v0 && pair.q1.eval(t) == *u0)
}

/// Sign-normalized pairs in the box with `F(u, v) ∈ rhs`.
pub fn oracle_thue(f: &BinaryForm, rhs: &[BigInt], b: SearchBox) -> Vec<Pair> {
    let found: BTreeSet<Pair> = b
        .range()
        .into_par_iter()
        .flat_map_iter(|u| {
            let u = BigInt::from(u);
            b.range()
                .map(BigInt::from)
                .filter(|v| rhs.contains(&f.eval(&u, v)))
                .map(|v| (u.clone(), v))
                .collect::<Vec<_>>()
        })
        .collect();
    normalize_classes(found)
}

/// Canonical classes that are nonzero; a convenience for comparisons.
pub fn canonical_set<'a>(ts: impl IntoIterator<Item = &'a Triple>) -> BTreeSet<Triple> {
    ts.into_iter()
        .filter(|t| !t.iter().all(Zero::is_zero))
        .map(canonical_triple)
        .collect()
}
