#![allow(dead_code)]

use monogen_core::algebra::BinaryForm;
use monogen_core::QuarticGenerator;
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x6d6f_6e6f;

/// Seeded generator; `MONOGEN_SEED` overrides the pinned seed.
pub fn rng(stream: u64) -> ChaCha8Rng {
    let seed = std::env::var("MONOGEN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn random_generator(r: &mut impl Rng, bound: i64) -> QuarticGenerator {
    loop {
        let a = [(); 4].map(|_| r.gen_range(-bound..=bound));
        if let Ok(p) = QuarticGenerator::from_i64(a) {
            return p;
        }
    }
}

pub fn random_form(r: &mut impl Rng, degree: usize, bound: i64) -> BinaryForm {
    loop {
        let c: Vec<i64> = (0..=degree).map(|_| r.gen_range(-bound..=bound)).collect();
        let f = BinaryForm::from_i64(&c);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn to_f64(n: &BigInt) -> f64 {
    n.to_string().parse().unwrap()
}

/// Complex roots of a monic polynomial (coefficients lowest first) by
/// Durand–Kerner iteration.
pub fn complex_roots(monic_low_first: &[f64]) -> Vec<Complex64> {
    let n = monic_low_first.len() - 1;
    let eval = |z: Complex64| {
        monic_low_first
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}
