use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Q;

use super::SpectralCurve;

/// Seeded source of small-height rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
    pub fn q(&mut self, height: i64) -> Q {
        let n = self.rng.gen_range(-height..=height);
        let d = self.rng.gen_range(1..=height.max(1));
        Q::new(BigInt::from(n), BigInt::from(d))
    }
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// n parameter points with distinct, regular x-values whose fibers are rational.
pub fn regular_samples(curve: &SpectralCurve, sampler: &mut Sampler, n: usize, bad_x: &[Q]) -> Vec<Q> {
    let xp = curve.xprime();
    let mut out: Vec<Q> = Vec::new();
    let mut xs: Vec<Q> = Vec::new();
    let mut tries = 0;
    while out.len() < n && tries < 200 * n + 1000 {
        tries += 1;
        let z = sampler.q(12 + (tries / 50) as i64);
        let (Some(x0), Some(_)) = (curve.x.eval(&z), curve.y.eval(&z)) else { continue };
        if xp.eval(&z).is_none_or(|v| v.is_zero()) || xs.contains(&x0) || bad_x.contains(&x0) {
            continue;
        }
        let Ok(fib) = curve.fiber(&x0) else { continue };
        if fib.iter().any(|w| curve.y.eval(w).is_none() || xp.eval(w).is_none_or(|v| v.is_zero())) {
            continue;
        }
        let ys: Vec<Q> = fib.iter().map(|w| curve.y.eval(w).unwrap()).collect();
        if ys.iter().enumerate().any(|(i, a)| ys[..i].contains(a)) {
            continue;
        }
        if let Some(s) = &curve.s {
            if fib.iter().any(|w| s.eval(w).is_none()) {
                continue;
            }
        }
        xs.push(x0);
        out.push(z);
    }
    out
}
