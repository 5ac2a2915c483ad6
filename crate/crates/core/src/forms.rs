//! Forms attached to a quartic generator `ξ`: the cubic resolvent, the pair of
//! ternary quadratic forms `(Q₁, Q₂)`, the index form, conic
//! parametrizations and the branch quartic forms.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    content, det3, disc_poly, extended_gcd, BinaryForm, Mat2, TernaryForm, TernaryQuadForm,
    TernarySexticForm, Triple, UniPoly,
};
use crate::error::{Error, Result};

/// Default coordinate bound for [`conic_point`].
pub const DEFAULT_CONIC_POINT_BOUND: u64 = 10_000;

/// The monic quartic `T⁴ + a₁T³ + a₂T² + a₃T + a₄`, irreducible over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticGenerator {
    a: [BigInt; 4],
}

impl QuarticGenerator {
    /// Rejects polynomials that factor over `Q`.
    pub fn new(a1: BigInt, a2: BigInt, a3: BigInt, a4: BigInt) -> Result<Self> {
        let a = [a1, a2, a3, a4];
        if let Some(reason) = factorization_witness(&a) {
            return Err(Error::Reducible(reason));
        }
        let g = QuarticGenerator { a };
        if g.discriminant().is_zero() {
            return Err(Error::Reducible("zero discriminant".into()));
        }
        Ok(g)
    }

    pub fn from_i64(a: [i64; 4]) -> Result<Self> {
        let [a1, a2, a3, a4] = a.map(BigInt::from);
        Self::new(a1, a2, a3, a4)
    }

    /// `[a₁, a₂, a₃, a₄]`.
    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.a
    }

    pub fn min_poly(&self) -> UniPoly {
        let [a1, a2, a3, a4] = &self.a;
        UniPoly::new(vec![a4.clone(), a3.clone(), a2.clone(), a1.clone(), BigInt::one()])
    }

    pub fn discriminant(&self) -> BigInt {
        disc_poly(&self.min_poly()).expect("quartic has degree 4")
    }

    /// `F(U,V) = U³ − a₂U²V + (a₁a₃ − 4a₄)UV² + (4a₂a₄ − a₃² − a₁²a₄)V³`.
    ///
    /// Its roots `F(T, 1) = 0` are `ξ⁽ⁱ⁾ξ⁽ʲ⁾ + ξ⁽ᵏ⁾ξ⁽ˡ⁾` over the three ways of
    /// pairing the conjugates, and `D(F) = Disc(P)`.
    pub fn cubic_resolvent(&self) -> BinaryForm {
        let [a1, a2, a3, a4] = &self.a;
        let four = BigInt::from(4);
        BinaryForm::new(vec![
            BigInt::one(),
            -a2,
            a1 * a3 - &four * a4,
            &four * a2 * a4 - a3 * a3 - a1 * a1 * a4,
        ])
    }

    pub fn quadratic_pair(&self) -> QuadraticPair {
        let [a1, a2, a3, a4] = &self.a;
        let q1 = TernaryQuadForm {
            xx: BigInt::one(),
            yy: a2.clone(),
            zz: a2 * a2 - a1 * a3 + a4,
            xy: -a1,
            xz: a1 * a1 - BigInt::from(2) * a2,
            yz: a3 - a1 * a2,
        };
        let q2 = TernaryQuadForm {
            xx: BigInt::zero(),
            yy: BigInt::one(),
            zz: a2.clone(),
            xy: BigInt::zero(),
            xz: -BigInt::one(),
            yz: -a1,
        };
        QuadraticPair { q1, q2 }
    }

    /// `X = P² − a₁PQ + a₂Q²`, `Y = PQ`, `Z = Q²`: every primitive zero of
    /// `Q₂` is `±(X, Y, Z)(p, q)` for a primitive `(p, q)`.
    pub fn trivial_parametrization(&self) -> ConicParametrization {
        let [a1, a2, _, _] = &self.a;
        ConicParametrization {
            x: BinaryForm::new(vec![BigInt::one(), -a1, a2.clone()]),
            y: BinaryForm::from_i64(&[0, 1, 0]),
            z: BinaryForm::from_i64(&[0, 0, 1]),
            multiplier: BigInt::one(),
        }
    }

    /// Branch form for the cubic solution `(1, 0)`: `Q₁ ∘ (X, Y, Z)`, which
    /// equals `Q⁴·P(P/Q − a₁)`.
    pub fn trivial_quartic(&self) -> BranchQuarticForm {
        let pair = self.quadratic_pair();
        let parametrization = self.trivial_parametrization();
        let form = parametrization.compose(&pair.q1);
        BranchQuarticForm {
            form,
            source: (BigInt::one(), BigInt::zero()),
            bezout: Mat2::identity(),
            first: pair.q1.clone(),
            conic: pair.q2.neg(),
            rhs: parametrization.rhs_values(),
            parametrization,
        }
    }

    /// `Q⁴·P(P/Q − a₁)` expanded directly from the minimal polynomial.
    pub fn shifted_quartic(&self) -> BinaryForm {
        // Σ cₖ (P − a₁Q)ᵏ Q^(4−k)
        let shift = BinaryForm::new(vec![BigInt::one(), -&self.a[0]]);
        let q = BinaryForm::from_i64(&[0, 1]);
        let p = self.min_poly();
        let mut out = BinaryForm::zero(4);
        for k in 0..=4 {
            let c = p.coeff(k);
            if !c.is_zero() {
                out = out.add(&shift.pow(k).mul(&q.pow(4 - k)).scale(&c));
            }
        }
        out
    }

    /// The index form `I(X, Y, Z)` of `Z[ξ]` relative to `{1, ξ, ξ², ξ³}`.
    ///
    /// It is the determinant of the coordinates of `1, L, L², L³` for
    /// `L = Xξ + Yξ² + Zξ³`, so `I(1, 0, 0) = 1`.
    pub fn index_form(&self) -> TernarySexticForm {
        let zero = TernaryForm::zero(1);
        let l = [
            zero,
            TernaryForm::linear(BigInt::one(), BigInt::zero(), BigInt::zero()),
            TernaryForm::linear(BigInt::zero(), BigInt::one(), BigInt::zero()),
            TernaryForm::linear(BigInt::zero(), BigInt::zero(), BigInt::one()),
        ];
        let l2 = self.mul_mod(&l, &l);
        let l3 = self.mul_mod(&l2, &l);
        let m = [&l, &l2, &l3];
        let e = |r: usize, c: usize| &m[r][c + 1];
        let minor = |r1: usize, c1: usize, r2: usize, c2: usize| {
            e(r1, c1).mul(e(r2, c2)).sub(&e(r1, c2).mul(e(r2, c1)))
        };
        let det = e(0, 0)
            .mul(&minor(1, 1, 2, 2))
            .sub(&e(0, 1).mul(&minor(1, 0, 2, 2)))
            .add(&e(0, 2).mul(&minor(1, 0, 2, 1)));
        TernarySexticForm::new(det).expect("degree 1 + 2 + 3")
    }

    /// `[Z[ξ] : Z[α]]` for `α = xξ + yξ² + zξ³`, as `|det|` of the change of
    /// basis from `{1, ξ, ξ², ξ³}` to `{1, α, α², α³}`; zero when `α` does
    /// not generate a quartic field.
    pub fn index_of(&self, t: &Triple) -> BigInt {
        let alpha = [BigInt::zero(), t[0].clone(), t[1].clone(), t[2].clone()];
        let a2 = self.mul_mod(&alpha, &alpha);
        let a3 = self.mul_mod(&a2, &alpha);
        let rows = [&alpha, &a2, &a3];
        let m: [[BigInt; 3]; 3] = std::array::from_fn(|r| std::array::from_fn(|c| rows[r][c + 1].clone()));
        det3(&m).abs()
    }

    /// Product in `R[ξ]/(P)` for coordinates on `{1, ξ, ξ², ξ³}`.
    fn mul_mod<T: Coef>(&self, x: &[T; 4], y: &[T; 4]) -> [T; 4] {
        let mut prod: Vec<Option<T>> = vec![None; 7];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                accumulate(&mut prod[i + j], xi.mul(yj));
            }
        }
        // ξ⁴ = −a₁ξ³ − a₂ξ² − a₃ξ − a₄
        for k in (4..7).rev() {
            let c = prod[k].take().expect("filled above");
            for (off, a) in self.a.iter().enumerate() {
                accumulate(&mut prod[k - off - 1], c.scale(&-a));
            }
        }
        std::array::from_fn(|i| prod[i].take().expect("filled above"))
    }
}

impl fmt::Display for QuarticGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.min_poly().fmt(f)
    }
}

trait Coef: Clone {
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, k: &BigInt) -> Self;
}

impl Coef for BigInt {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, k: &BigInt) -> Self {
        self * k
    }
}

impl Coef for TernaryForm {
    fn add(&self, o: &Self) -> Self {
        TernaryForm::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        TernaryForm::mul(self, o)
    }
    fn scale(&self, k: &BigInt) -> Self {
        TernaryForm::scale(self, k)
    }
}

fn accumulate<T: Coef>(slot: &mut Option<T>, term: T) {
    *slot = Some(match slot.take() {
        None => term,
        Some(s) => s.add(&term),
    });
}

/// Positive divisors of `|n|`, ascending; `n` must be nonzero.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let root = n.sqrt();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while d <= root {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Describes a factorization over `Z` of the monic quartic, if one exists.
///
/// By Gauss's lemma a monic integer quartic is reducible over `Q` iff it has
/// an integer root or splits into two monic integer quadratics, and both
/// are decided exactly by running over the divisors of `a₄`.
fn factorization_witness(a: &[BigInt; 4]) -> Option<String> {
    let [a1, a2, a3, a4] = a;
    if a4.is_zero() {
        return Some("T divides the polynomial".into());
    }
    let p = UniPoly::new(vec![a4.clone(), a3.clone(), a2.clone(), a1.clone(), BigInt::one()]);
    let divs = divisors(a4);
    for d in &divs {
        for r in [d.clone(), -d] {
            if p.eval(&r).is_zero() {
                return Some(format!("integer root {r}"));
            }
        }
    }
    // (T² + bT + c)(T² + dT + e) with c·e = a₄
    for d in &divs {
        for c in [d.clone(), -d] {
            let e = a4 / &c;
            let found = if e != c {
                let (b, rem) = (a3 - a1 * &c).div_rem(&(&e - &c));
                let d2 = a1 - &b;
                (rem.is_zero() && &b * &d2 + &c + &e == *a2).then_some(b)
            } else if *a3 == a1 * &c {
                let disc = a1 * a1 - BigInt::from(4) * (a2 - BigInt::from(2) * &c);
                is_square(&disc)
                    .filter(|s| (a1 + s).is_even())
                    .map(|s| (a1 + s) / 2)
            } else {
                None
            };
            if let Some(b) = found {
                return Some(format!(
                    "factors as (T^2 + {b}T + {c})(T^2 + {}T + {e})",
                    a1 - &b
                ));
            }
        }
    }
    None
}

/// The ternary quadratic forms `(Q₁, Q₂)` attached to the generator.
///
/// `I(x, y, z) = F(Q₁(x, y, z), Q₂(x, y, z))` for the cubic resolvent `F`
/// and the index form `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticPair {
    pub q1: TernaryQuadForm,
    pub q2: TernaryQuadForm,
}

impl QuadraticPair {
    pub fn eval(&self, t: &Triple) -> (BigInt, BigInt) {
        (self.q1.eval(t), self.q2.eval(t))
    }
}

/// `v₀·Q₁ − u₀·Q₂`; every solution of `Q₁ = u₀, Q₂ = v₀` is a zero of it.
pub fn combined_conic(pair: &QuadraticPair, u0: &BigInt, v0: &BigInt) -> Result<TernaryQuadForm> {
    require_coprime(u0, v0)?;
    Ok(pair.q1.combine(v0, &pair.q2, &-u0))
}

/// Result of checking `|det G| = 2·|F(u₀, v₀)|` for the conic
/// `u₀Q₂ − v₀Q₁` with doubled Gram matrix `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramCheck {
    pub gram_det_abs: BigInt,
    pub resolvent_value: BigInt,
}

impl GramCheck {
    pub fn holds(&self) -> bool {
        self.gram_det_abs == BigInt::from(2) * self.resolvent_value.abs()
    }
}

/// `F` must be the cubic resolvent of the generator `pair` came from.
pub fn gram_determinant_check(
    pair: &QuadraticPair,
    resolvent: &BinaryForm,
    u0: &BigInt,
    v0: &BigInt,
) -> GramCheck {
    let q = pair.q2.combine(u0, &pair.q1, &-v0);
    GramCheck {
        gram_det_abs: q.gram_det().abs(),
        resolvent_value: resolvent.eval(u0, v0),
    }
}

fn require_coprime(u0: &BigInt, v0: &BigInt) -> Result<()> {
    match extended_gcd(u0, v0) {
        Ok((g, _, _)) if g.is_one() => Ok(()),
        _ => Err(Error::NotCoprime(u0.to_string(), v0.to_string())),
    }
}

/// `A = [[s, t], [−v₀, u₀]]` with `s·u₀ + t·v₀ = 1`, so `A·(u₀, v₀)ᵗ = (1, 0)ᵗ`.
pub fn bezout_matrix(u0: &BigInt, v0: &BigInt) -> Result<Mat2> {
    let (g, s, t) = extended_gcd(u0, v0)
        .map_err(|_| Error::NotCoprime(u0.to_string(), v0.to_string()))?;
    if !g.is_one() {
        return Err(Error::NotCoprime(u0.to_string(), v0.to_string()));
    }
    Ok(Mat2::new(s, t, -v0, u0.clone()))
}

/// Quadratic forms `(X, Y, Z)(p, q)` tracing out a conic.
///
/// Every primitive integer zero of the conic equals `(X, Y, Z)(p, q) / e` for
/// some primitive `(p, q)` and some positive `e` dividing `multiplier`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicParametrization {
    pub x: BinaryForm,
    pub y: BinaryForm,
    pub z: BinaryForm,
    pub multiplier: BigInt,
}

impl ConicParametrization {
    pub fn eval(&self, p: &BigInt, q: &BigInt) -> Triple {
        [self.x.eval(p, q), self.y.eval(p, q), self.z.eval(p, q)]
    }

    /// `Q(X(P,Q), Y(P,Q), Z(P,Q))`.
    pub fn compose(&self, form: &TernaryQuadForm) -> BinaryForm {
        form.compose(&self.x, &self.y, &self.z)
    }

    /// `{±e² : e | multiplier}`, ascending.
    pub fn rhs_values(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = divisors(&self.multiplier)
            .into_iter()
            .flat_map(|e| {
                let sq = &e * &e;
                [-sq.clone(), sq]
            })
            .collect();
        out.sort();
        out
    }
}

/// Sign-normalizes a triple so its first nonzero coordinate is positive.
pub fn canonical_triple(t: &Triple) -> Triple {
    match t.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => t.clone().map(|c| -c),
        _ => t.clone(),
    }
}

fn is_primitive(t: &Triple) -> bool {
    content(t.iter()).is_one()
}

/// Integer `s` with `|s| ≤ bound` and `a·s² + b·s + c = 0`.
fn solve_quadratic(a: &BigInt, b: &BigInt, c: &BigInt, bound: &BigInt, out: &mut Vec<BigInt>) {
    if a.is_zero() {
        if b.is_zero() {
            if c.is_zero() {
                let mut s = -bound;
                while &s <= bound {
                    out.push(s.clone());
                    s += 1;
                }
            }
            return;
        }
        let (s, r) = (-c).div_rem(b);
        if r.is_zero() && s.abs() <= *bound {
            out.push(s);
        }
        return;
    }
    let disc = b * b - BigInt::from(4) * a * c;
    let Some(root) = is_square(&disc) else {
        return;
    };
    let two_a = BigInt::from(2) * a;
    for num in [-b + &root, -b - &root] {
        let (s, r) = num.div_rem(&two_a);
        if r.is_zero() && s.abs() <= *bound {
            out.push(s);
        }
    }
}

/// Smallest primitive zero of `q` with coordinates bounded by `bound`.
///
/// Points are searched shell by shell in the max-norm; within a shell the
/// sign-normalized candidates are ordered by their 1-norm and then in
/// decreasing lexicographic order, so `(1,0,0)` precedes `(0,1,0)` precedes
/// `(0,0,1)`. Definite forms have no nonzero real zeros and return `None`
/// immediately.
pub fn conic_point(q: &TernaryQuadForm, bound: u64) -> Option<Triple> {
    if q.is_definite() {
        return None;
    }
    // Q as a quadratic in the third coordinate given the other two.
    let in_z = |x: &BigInt, y: &BigInt| {
        (
            q.zz.clone(),
            &q.xz * x + &q.yz * y,
            &q.xx * x * x + &q.xy * x * y + &q.yy * y * y,
        )
    };
    let in_y = |x: &BigInt, z: &BigInt| {
        (
            q.yy.clone(),
            &q.xy * x + &q.yz * z,
            &q.xx * x * x + &q.xz * x * z + &q.zz * z * z,
        )
    };
    for h in 1..=bound {
        let hb = BigInt::from(h);
        let inner = BigInt::from(h - 1);
        let mut found: Vec<Triple> = Vec::new();
        let mut sols = Vec::new();
        let mut x = -&hb;
        while x <= hb {
            let x_on_shell = x.abs() == hb;
            // Y on the shell (or X already on it): solve for Z.
            let mut y = -&hb;
            while y <= hb {
                if x_on_shell || y.abs() == hb {
                    let (a, b, c) = in_z(&x, &y);
                    sols.clear();
                    solve_quadratic(&a, &b, &c, &hb, &mut sols);
                    found.extend(sols.iter().map(|z| [x.clone(), y.clone(), z.clone()]));
                }
                y += 1;
            }
            // Only Z on the shell: solve for Y strictly inside.
            if !x_on_shell {
                for z in [-&hb, hb.clone()] {
                    let (a, b, c) = in_y(&x, &z);
                    sols.clear();
                    solve_quadratic(&a, &b, &c, &inner, &mut sols);
                    found.extend(sols.iter().map(|y| [x.clone(), y.clone(), z.clone()]));
                }
            }
            x += 1;
        }
        let best = found
            .into_iter()
            .filter(|t| is_primitive(t))
            .map(|t| canonical_triple(&t))
            .min_by_key(|t| {
                let l1: BigInt = t.iter().map(|c| c.abs()).sum();
                (l1, Reverse(t.clone()))
            });
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Completes a primitive vector to a basis `{point, w₁, w₂}` of `Z³`.
fn complete_basis(point: &Triple) -> (Triple, Triple) {
    let [a, b, c] = point;
    let one = BigInt::one;
    let zero = BigInt::zero;
    if a.is_zero() && b.is_zero() {
        return ([one(), zero(), zero()], [zero(), one(), zero()]);
    }
    let (g, s, t) = extended_gcd(a, b).expect("(a, b) ≠ (0, 0)");
    let (_, x, y) = extended_gcd(&g, c).expect("g ≠ 0");
    // (a/g, b/g) and (−t, s) span Z²; g·x + c·y = 1 lets the first of them
    // trade places with the point itself.
    let w1 = [-&y * a / &g, -&y * b / &g, x];
    let w2 = [-t, s, zero()];
    (w1, w2)
}

/// Line-pencil parametrization of the conic `q = 0` through `point`.
///
/// In a basis `{point, w₁, w₂}` the form reads `a·L(b, c) + R(b, c)`; the
/// line through `point` with direction `(p, q)` meets the conic again at
/// `−R(p,q)·point + L(p,q)·(p·w₁ + q·w₂)`. Primitive zeros come out divided
/// by a factor of `gcd(L(p,q), R(p,q))`, which divides the resultant of `L`
/// and `R`, i.e. `|det G| / 2`.
pub fn conic_parametrize(q: &TernaryQuadForm, point: &Triple) -> Result<ConicParametrization> {
    let det = q.gram_det();
    if det.is_zero() {
        return Err(Error::DegenerateConic);
    }
    if !is_primitive(point) {
        return Err(Error::NotPrimitivePoint);
    }
    if !q.eval(point).is_zero() {
        return Err(Error::PointNotOnConic);
    }
    let (w1, w2) = complete_basis(point);
    let lin = BinaryForm::linear(q.bilinear(point, &w1), q.bilinear(point, &w2));
    let rest = BinaryForm::new(vec![q.eval(&w1), q.bilinear(&w1, &w2), q.eval(&w2)]);
    let comps: [BinaryForm; 3] = std::array::from_fn(|i| {
        let direction = BinaryForm::linear(w1[i].clone(), w2[i].clone());
        rest.scale(&-&point[i]).add(&lin.mul(&direction))
    });
    let c0 = content(comps.iter().flat_map(|f| f.coeffs()));
    let [x, y, z] = comps.map(|f| BinaryForm::new(f.coeffs().iter().map(|c| c / &c0).collect()));
    let half: BigInt = det.abs() / 2;
    debug_assert!((&half % &c0).is_zero());
    let param = ConicParametrization { x, y, z, multiplier: half / c0 };
    debug_assert!(param.compose(q).is_zero());
    Ok(param)
}

/// Quartic form of one branch `(u₀, v₀)` of `F(U, V) = ±1`.
///
/// The branch handles both systems `(Q₁, Q₂) = ±(u₀, v₀)`: its solutions are
/// the primitive zeros `w` of the conic `Q′₂ = v₀Q₁ − u₀Q₂` with
/// `Q′₁(w) = s·Q₁(w) + t·Q₂(w) = ±1`, and along the parametrization they
/// satisfy `form(p, q) = ±e²` for a divisor `e` of the multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchQuarticForm {
    pub form: BinaryForm,
    pub source: (BigInt, BigInt),
    pub bezout: Mat2,
    /// `Q′₁ = s·Q₁ + t·Q₂`
    pub first: TernaryQuadForm,
    /// `Q′₂ = v₀·Q₁ − u₀·Q₂`
    pub conic: TernaryQuadForm,
    pub parametrization: ConicParametrization,
    pub rhs: Vec<BigInt>,
}

/// Builds the branch quartic for a solution `(u₀, v₀)` of `F(U, V) = ±1`.
///
/// Returns `Ok(None)` when no conic point is found within `conic_bound`.
pub fn branch_quartic(
    generator: &QuarticGenerator,
    u0: &BigInt,
    v0: &BigInt,
    conic_bound: u64,
) -> Result<Option<BranchQuarticForm>> {
    let resolvent = generator.cubic_resolvent();
    require_coprime(u0, v0)?;
    if !resolvent.eval(u0, v0).abs().is_one() {
        return Err(Error::NotUnitSolution(u0.to_string(), v0.to_string()));
    }
    let pair = generator.quadratic_pair();
    let bezout = bezout_matrix(u0, v0)?;
    let first = pair.q1.combine(&bezout.a, &pair.q2, &bezout.b);
    let conic = combined_conic(&pair, u0, v0)?;
    let parametrization = if v0.is_zero() {
        generator.trivial_parametrization()
    } else {
        let Some(point) = conic_point(&conic, conic_bound) else {
            return Ok(None);
        };
        conic_parametrize(&conic, &point)?
    };
    Ok(Some(BranchQuarticForm {
        form: parametrization.compose(&first),
        source: (u0.clone(), v0.clone()),
        bezout,
        first,
        conic,
        rhs: parametrization.rhs_values(),
        parametrization,
    }))
}

/// `Q′₁` composed with the trivial-branch parametrization, for any branch.
///
/// The image of that parametrization lies on `Q₂ = 0`, so for `v₀ ≠ 0` it
/// does not cover the solutions of the branch system; this is kept for
/// comparison reporting only.
pub fn literal_branch_quartic(
    generator: &QuarticGenerator,
    u0: &BigInt,
    v0: &BigInt,
) -> Result<BinaryForm> {
    let pair = generator.quadratic_pair();
    let bezout = bezout_matrix(u0, v0)?;
    let first = pair.q1.combine(&bezout.a, &pair.q2, &bezout.b);
    Ok(generator.trivial_parametrization().compose(&first))
}
