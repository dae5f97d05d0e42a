use alloc::vec::Vec;

use num_traits::Zero;

use super::MSeries;
use crate::algebra::{HSeries, Point, Poly, Q, RF};
use crate::curve::SpectralCurve;
use crate::laxpair::LaxPair;
use crate::{Error, Result};

/// ω₁⁽ᵏ⁾(z) = W₁⁽ᵏ⁾ x′ for k = −1..K−1, with W₁ = ℏ⁻¹Tr(LM).
pub fn omega1_series(ms: &MSeries) -> Vec<RF> {
    (0..=ms.k())
        .map(|j| {
            let mut w = RF::zero();
            for l in 0..=j.min(ms.l.len() - 1) {
                w = &w + &ms.l[l].mat_mul(&ms.m[j - l]).trace();
            }
            &w * &ms.xprime
        })
        .collect()
}

/// Preimages in z of the x-value of p; irrational ones are returned as the factor they solve.
fn fiber_over(curve: &SpectralCurve, p: &Point) -> Result<(Vec<Point>, Poly)> {
    let xv = match p {
        Point::Infinity => None,
        Point::Finite(a) => curve.x.eval(a),
    };
    let (poly, at_inf) = match &xv {
        None => (curve.x.den().clone(), curve.x.num().deg() > curve.x.den().deg()),
        Some(q) => {
            let f = curve.x.num() - &curve.x.den().scale(q);
            let inf = f.deg() < curve.d as i64;
            (f, inf)
        }
    };
    let mut pts: Vec<Point> = poly.rational_roots().into_iter().map(|(r, _)| Point::Finite(r)).collect();
    if at_inf {
        pts.push(Point::Infinity);
    }
    Ok((pts, poly.irrational_part()))
}

/// ℏ ∂_t ln τ = Σ_q Σ_i Res_{x→q} s_i(x) ω₁(x.e_i) over q ∈ poles of x and s, as residues in z.
pub fn tau_t_derivative(lp: &LaxPair, curve: &SpectralCurve, ms: &MSeries) -> Result<HSeries<Q>> {
    if lp.r.is_none() {
        return Err(Error::Invalid("τ-derivative needs R".into()));
    }
    let s = curve.s.as_ref().ok_or_else(|| Error::Invalid("τ-derivative needs the auxiliary curve s(z)".into()))?;
    let w = omega1_series(ms);
    if s.is_zero() {
        return Ok(HSeries::new(-1, alloc::vec![Q::zero(); w.len()]));
    }
    let mut seeds: Vec<Point> = curve.x.poles()?.into_iter().map(|p| p.0).collect();
    seeds.extend(s.poles()?.into_iter().map(|p| p.0));
    let mut pts: Vec<Point> = Vec::new();
    let mut irr: Vec<Poly> = Vec::new();
    for p in &seeds {
        let (f, ip) = fiber_over(curve, p)?;
        for q in f {
            if !pts.contains(&q) {
                pts.push(q);
            }
        }
        if !ip.is_constant() {
            irr.push(ip);
        }
    }
    let mut out = Vec::with_capacity(w.len());
    for wk in &w {
        let f = s * wk;
        if irr.iter().any(|ip| !Poly::gcd(ip, f.den()).is_constant()) {
            return Err(Error::NonRational("pole of s ω₁ over an irrational fiber point".into()));
        }
        let mut acc = Q::zero();
        for p in &pts {
            acc += f.residue(p);
        }
        out.push(acc);
    }
    Ok(HSeries::new(-1, out))
}
