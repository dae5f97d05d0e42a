use alloc::vec::Vec;

use crate::algebra::rational::to_f64;
use crate::algebra::{Poly, Q, RF};
use crate::curve::SpectralCurve;
use crate::{Error, Result};

use super::LaxPair;

fn abs(v: f64) -> f64 {
    if v < 0.0 {
        -v
    } else {
        v
    }
}

fn peval(p: &Poly, z: f64) -> f64 {
    p.coeffs().iter().rev().fold(0.0, |acc, c| acc * z + to_f64(c))
}

fn reval(f: &RF, z: f64) -> f64 {
    peval(f.num(), z) / peval(f.den(), z)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PoissonSample {
    pub x: f64,
    /// (Y(x, t2) − Y(x, t1))/(t2 − t1)
    pub dt_y: f64,
    /// ∂ₓS averaged over the two instances.
    pub dx_s: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PoissonReport {
    pub samples: Vec<PoissonSample>,
    pub max_error: f64,
    pub passed: bool,
}

/// Finite-difference check of ∂ₜY_i = ∂ₓS_i between two instances at nearby t.
pub fn poisson_check(a: (&LaxPair, &SpectralCurve), b: (&LaxPair, &SpectralCurve), samples: &[Q], tol: f64) -> Result<PoissonReport> {
    let ((la, ca), (lb, cb)) = (a, b);
    if la.d != lb.d || ca.d != cb.d {
        return Err(Error::Invalid("instances differ in rank".into()));
    }
    let t = |lp: &LaxPair| lp.param("t").cloned().ok_or_else(|| Error::Invalid("parameter t missing".into()));
    let (t1, t2) = (t(la)?, t(lb)?);
    if t1 == t2 {
        return Err(Error::Invalid("instances share the same t".into()));
    }
    let (Some(sa), Some(sb)) = (&ca.s, &cb.s) else {
        return Err(Error::Invalid("auxiliary function s(z) missing".into()));
    };
    let dt = to_f64(&(&t2 - &t1));
    let (xpa, xpb) = (ca.xprime(), cb.xprime());
    let (spa, spb) = (sa.derivative(), sb.derivative());
    let mut out = Vec::new();
    let mut max_error: f64 = 0.0;
    for z in samples {
        let z1 = to_f64(z);
        let x0 = reval(&ca.x, z1);
        // follow the same sheet into the second instance
        let mut z2 = z1;
        let mut converged = false;
        for _ in 0..60 {
            let step = (reval(&cb.x, z2) - x0) / reval(&xpb, z2);
            z2 -= step;
            if abs(step) < 1e-15 * (1.0 + abs(z2)) {
                converged = true;
                break;
            }
        }
        if !converged || !z2.is_finite() {
            return Err(Error::Check("sheet matching between the two instances failed".into()));
        }
        let dt_y = (reval(&cb.y, z2) - reval(&ca.y, z1)) / dt;
        let dx_s = 0.5 * (reval(&spa, z1) / reval(&xpa, z1) + reval(&spb, z2) / reval(&xpb, z2));
        max_error = max_error.max(abs(dt_y - dx_s));
        out.push(PoissonSample { x: x0, dt_y, dx_s });
    }
    Ok(PoissonReport { samples: out, max_error, passed: max_error <= tol })
}
