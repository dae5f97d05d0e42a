use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::linsolve::nullspace;
use super::matrix::Matrix;
use super::poly::Poly;
use super::rational::Q;
use super::rf::RF;
use crate::{Error, Result};

/// Rational function with deg num ≤ dn, deg den ≤ dd through the samples.
/// Needs ≥ dn + dd + 2 samples; the last two (or all beyond dn + dd + 1) are held out.
pub fn rational_reconstruct(samples: &[(Q, Q)], dn: usize, dd: usize) -> Result<RF> {
    let need = dn + dd + 1;
    if samples.len() < need + 1 {
        return Err(Error::Invalid(alloc::format!("{} samples for degree bounds ({dn}, {dd})", samples.len())));
    }
    let fit = if samples.len() >= need + 2 { samples.len() - 2 } else { need };
    let fit = fit.max(need);
    let rows: Vec<Vec<Q>> = samples[..fit]
        .iter()
        .map(|(z, v)| {
            let mut r = Vec::with_capacity(need + 1);
            let mut p = Q::one();
            for _ in 0..=dn {
                r.push(p.clone());
                p *= z;
            }
            let mut p = Q::one();
            for _ in 0..=dd {
                r.push(-(v * &p));
                p *= z;
            }
            r
        })
        .collect();
    let a = Matrix::from_rows(rows);
    let ker = nullspace(&a);
    let fail = || Error::Reconstruction(dn, dd);
    for v in ker {
        let num = Poly::new(v[..=dn].to_vec());
        let den = Poly::new(v[dn + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        let f = RF::new(num, den)?;
        if samples.iter().all(|(z, val)| f.eval(z).as_ref() == Some(val)) {
            return Ok(f);
        }
    }
    Err(fail())
}

/// Smallest total degree dn + dd ≤ max_total that reproduces every sample.
pub fn reconstruct_auto(samples: &[(Q, Q)], max_total: usize) -> Result<RF> {
    if samples.iter().all(|(_, v)| v.is_zero()) {
        return Ok(RF::zero());
    }
    for t in 0..=max_total {
        if samples.len() < t + 3 {
            break;
        }
        for dd in 0..=t {
            if let Ok(f) = rational_reconstruct(samples, t - dd, dd) {
                return Ok(f);
            }
        }
    }
    Err(Error::Reconstruction(max_total, max_total))
}
