mod common;

use common::{close, complex_roots, random_form, random_generator, rng, to_f64};
use monogen_core::algebra::{disc_poly, resultant, BinaryForm, Mat2, TernaryForm, Triple, UniPoly};
use monogen_core::forms::{
    branch_quartic, canonical_triple, conic_point, gram_determinant_check, QuarticGenerator,
};
use monogen_core::monogenize::canonicalize;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn roots_of(p: &QuarticGenerator) -> Vec<Complex64> {
    let mut c: Vec<f64> = p.coeffs().iter().rev().map(to_f64).collect();
    c.push(1.0);
    complex_roots(&c)
}

#[test]
fn resolvent_roots_are_pair_products_numerically() {
    let mut r = rng(11);
    for _ in 0..40 {
        let p = random_generator(&mut r, 9);
        let xi = roots_of(&p);
        let f = p.cubic_resolvent();
        let c: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
        for (i, j, k, l) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
            let t = xi[i] * xi[j] + xi[k] * xi[l];
            let val = c.iter().fold(Complex64::new(0.0, 0.0), |acc, &ci| acc * t + ci);
            let scale = 1.0 + t.norm().powi(3) + c.iter().map(|x| x.abs()).sum::<f64>() * (1.0 + t.norm()).powi(3);
            assert!(val.norm() < 1e-8 * scale, "{p}: F({t}) = {val}");
        }
        let mut disc = Complex64::new(1.0, 0.0);
        for i in 0..4 {
            for j in i + 1..4 {
                disc *= (xi[i] - xi[j]).powu(2);
            }
        }
        let exact = to_f64(&p.discriminant());
        assert!(close(disc.re, exact, 1e-6) && disc.im.abs() < 1e-6 * (1.0 + exact.abs()), "{p}");
        assert_eq!(f.discriminant().unwrap(), p.discriminant());
    }
}

#[test]
fn index_form_against_conjugate_products() {
    let mut r = rng(12);
    for _ in 0..25 {
        let p = random_generator(&mut r, 6);
        let xi = roots_of(&p);
        let index = p.index_form();
        for _ in 0..6 {
            let t: Triple = [(); 3].map(|_| int(r.gen_range(-3..=3)));
            let (x, y, z) = (to_f64(&t[0]), to_f64(&t[1]), to_f64(&t[2]));
            let alpha: Vec<Complex64> = xi.iter().map(|&s| s * x + s * s * y + s * s * s * z).collect();
            let mut q = Complex64::new(1.0, 0.0);
            for i in 0..4 {
                for j in i + 1..4 {
                    q *= (alpha[i] - alpha[j]) / (xi[i] - xi[j]);
                }
            }
            let exact = to_f64(&index.eval(&t));
            assert!(close(q.norm(), exact.abs(), 1e-6), "{p} at {t:?}: {q} vs {exact}");
            assert_eq!(index.eval(&t).abs(), p.index_of(&t));
        }
    }
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> BigInt {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for k in 0..=m {
            a[i][i + k] = f.coeff(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            a[n + i][i + k] = g.coeff(n - k);
        }
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[size - 1][size - 1]
}

#[test]
fn resultant_agrees_with_sylvester_determinant() {
    let mut r = rng(13);
    for _ in 0..300 {
        let df = r.gen_range(1..=6);
        let dg = r.gen_range(1..=6);
        let mut pick = |d: usize| loop {
            let c: Vec<i64> = (0..=d).map(|_| r.gen_range(-9..=9)).collect();
            let p = UniPoly::from_i64(&c);
            if p.degree() == Some(d) {
                return p;
            }
        };
        let f = pick(df);
        let g = pick(dg);
        assert_eq!(resultant(&f, &g).unwrap(), sylvester_resultant(&f, &g), "{f} | {g}");
    }
}

#[test]
fn exact_identities_on_random_generators() {
    let mut r = rng(14);
    for _ in 0..60 {
        let p = random_generator(&mut r, 20);
        let f = p.cubic_resolvent();
        let pair = p.quadratic_pair();
        assert_eq!(disc_poly(&p.min_poly()).unwrap(), f.discriminant().unwrap());
        let composed = TernaryForm::compose_binary(&f, &pair.q1.to_form(), &pair.q2.to_form());
        assert_eq!(p.index_form().as_form(), &composed, "{p}");
        let triv = p.trivial_quartic();
        assert_eq!(triv.form, p.shifted_quartic());
        assert!(triv.form.coeffs()[0].is_one());
        assert_eq!(triv.form.discriminant().unwrap(), p.discriminant());
        for _ in 0..5 {
            let (u, v) = (int(r.gen_range(-30..=30)), int(r.gen_range(-30..=30)));
            if u.is_zero() && v.is_zero() {
                continue;
            }
            let chk = gram_determinant_check(&pair, &f, &u, &v);
            assert!(chk.holds(), "{p} at ({u}, {v})");
        }
    }
}

#[test]
fn branch_quartics_parametrize_the_branch_system() {
    // For every cubic solution of some random generators: the parametrization
    // lies on the combined conic and the quartic is Q′₁ along it.
    let mut r = rng(15);
    let mut nontrivial = 0;
    for _ in 0..30 {
        let p = random_generator(&mut r, 6);
        let f = p.cubic_resolvent();
        let problem = monogen_core::thue::ThueProblem::new(f.clone(), [int(1), int(-1)], 200).unwrap();
        for (u0, v0) in monogen_core::thue::solve_bounded(&problem).solutions {
            let Some(b) = branch_quartic(&p, &u0, &v0, 2_000).unwrap() else {
                continue;
            };
            assert!(b.parametrization.compose(&b.conic).is_zero());
            assert_eq!(b.parametrization.compose(&b.first), b.form);
            assert_eq!(b.bezout.apply(&u0, &v0), (int(1), int(0)));
            if !v0.is_zero() {
                nontrivial += 1;
                // The conic is unimodular up to the factor 2, so no scaling.
                assert_eq!(b.parametrization.multiplier, int(1));
                assert_eq!(b.form.discriminant().unwrap(), p.discriminant(), "{p} ({u0}, {v0})");
            }
        }
    }
    assert!(nontrivial > 0);
}

fn generator() -> impl Strategy<Value = QuarticGenerator> {
    proptest::array::uniform4(-12i64..=12).prop_filter_map("irreducible", |a| QuarticGenerator::from_i64(a).ok())
}

fn unimodular() -> impl Strategy<Value = Mat2> {
    (-20i64..=20, -20i64..=20, -3i64..=3, any::<bool>()).prop_filter_map("coprime", |(a, c, k, flip)| {
        let (g, s, t) = monogen_core::algebra::extended_gcd(&int(a), &int(c)).ok()?;
        if !g.is_one() {
            return None;
        }
        // [[a, −t + k·a], [c, s + k·c]] has determinant 1; flipping a column gives −1.
        let m = Mat2::new(int(a), -t + int(k) * int(a), int(c), s + int(k) * int(c));
        Some(if flip { Mat2::new(m.b.clone(), m.a.clone(), m.d.clone(), m.c.clone()) } else { m })
    })
}

fn binary_form(deg: usize) -> impl Strategy<Value = BinaryForm> {
    proptest::collection::vec(-9i64..=9, deg + 1)
        .prop_map(|c| BinaryForm::from_i64(&c))
        .prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn right_action_composes(f in binary_form(4), a in unimodular(), b in unimodular()) {
        prop_assert_eq!(f.act(&a.mul(&b)), f.act(&a).act(&b));
    }

    #[test]
    fn discriminant_scales_with_determinant(f in binary_form(3), a in -5i64..=5, b in -5i64..=5, c in -5i64..=5, d in -5i64..=5) {
        let m = Mat2::from_i64(a, b, c, d);
        let lhs = f.act(&m).discriminant().unwrap_or_else(|_| BigInt::zero());
        let rhs = num_traits::pow(m.det(), 6) * f.discriminant().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn index_form_factors_through_the_resolvent(p in generator()) {
        let pair = p.quadratic_pair();
        let composed = TernaryForm::compose_binary(&p.cubic_resolvent(), &pair.q1.to_form(), &pair.q2.to_form());
        let index = p.index_form();
        prop_assert_eq!(index.as_form(), &composed);
    }

    #[test]
    fn gram_identity(p in generator(), u in -40i64..=40, v in -40i64..=40) {
        prop_assume!(u != 0 || v != 0);
        let chk = gram_determinant_check(&p.quadratic_pair(), &p.cubic_resolvent(), &int(u), &int(v));
        prop_assert!(chk.holds());
    }

    #[test]
    fn index_of_is_invariant_under_sign(p in generator(), x in -4i64..=4, y in -4i64..=4, z in -4i64..=4) {
        let t: Triple = [int(x), int(y), int(z)];
        let n: Triple = t.clone().map(|c| -c);
        prop_assert_eq!(p.index_of(&t), p.index_of(&n));
        if !(x == 0 && y == 0 && z == 0) {
            let c = canonicalize(&n).unwrap();
            prop_assert_eq!(&c, &canonical_triple(&t));
            prop_assert_eq!(canonicalize(&c).unwrap(), c.clone());
        }
    }

    #[test]
    fn conic_points_are_primitive_zeros(p in generator(), u in -6i64..=6, v in 1i64..=6) {
        prop_assume!(num_integer::gcd(u, v) == 1);
        let q = monogen_core::forms::combined_conic(&p.quadratic_pair(), &int(u), &int(v)).unwrap();
        if let Some(w) = conic_point(&q, 60) {
            prop_assert!(q.eval(&w).is_zero());
            prop_assert!(monogen_core::algebra::content(w.iter()).is_one());
        }
    }

    #[test]
    fn random_binary_forms_have_integer_discriminants(f in binary_form(4)) {
        // D is invariant under the swap U ↔ V
        let swapped = f.act(&Mat2::from_i64(0, 1, 1, 0));
        prop_assert_eq!(f.discriminant().unwrap(), swapped.discriminant().unwrap());
    }
}

#[test]
fn random_forms_have_consistent_roots() {
    // Thue forms of both degrees: every found solution is a solution.
    let mut r = rng(16);
    for _ in 0..20 {
        let deg = r.gen_range(3..=4);
        let f = random_form(&mut r, deg, 10);
        let p = monogen_core::thue::ThueProblem::new(f.clone(), [int(1), int(-1)], 50).unwrap();
        for (u, v) in monogen_core::thue::solve_bounded(&p).solutions {
            assert!(f.eval(&u, &v).abs().is_one());
        }
    }
}
