//! Genus-0 spectral-curve geometry.

mod branch;
mod double;
mod poles;
mod sample;

use alloc::vec::Vec;

use num_traits::{One, Zero};

pub use branch::{branchpoints, branchpoints_of, involution_series, BranchKind, BranchPoint, InvolutionSeries};
pub use double::{double_points, DoublePoint, DoublePoints};
pub use sample::{regular_samples, Sampler};
pub use poles::{build_c, fiber_identities, partial_fractions, vandermonde_vector, FiberIdentities, HalfVec, Pole, PoleData};

use crate::algebra::{Point, Poly, Q, RF};
use crate::{Error, Result};

/// Rational parametrization (x(z), y(z)) with optional auxiliary s(z).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCurve {
    pub x: RF,
    pub y: RF,
    pub s: Option<RF>,
    pub d: usize,
}

impl SpectralCurve {
    pub fn new(x: RF, y: RF, s: Option<RF>) -> Result<Self> {
        let d = x.degree();
        if d == 0 {
            return Err(Error::Invalid("x(z) is constant".into()));
        }
        Ok(SpectralCurve { x, y, s, d })
    }
    pub fn xprime(&self) -> RF {
        self.x.derivative()
    }
    /// y(z) x'(z), the coefficient of dz in y dx.
    pub fn omega01(&self) -> RF {
        &self.y * &self.xprime()
    }
    /// Preimages of x0, ascending; all must be finite, simple and rational.
    pub fn fiber(&self, x0: &Q) -> Result<Vec<Q>> {
        let p = &self.x.num().clone() - &self.x.den().scale(x0);
        if p.deg() < self.d as i64 {
            return Err(Error::Singular(alloc::format!("x = {} has a preimage at infinity", crate::algebra::rational::fmt_q(x0))));
        }
        let roots = p.rational_roots();
        if roots.iter().any(|r| r.1 > 1) {
            return Err(Error::Singular("branch value".into()));
        }
        if roots.len() != self.d {
            return Err(Error::NonRational("fiber".into()));
        }
        Ok(roots.into_iter().map(|r| r.0).collect())
    }
    /// Apply z = m(u); the returned curve is in the u coordinate.
    pub fn transform(&self, m: &Mobius) -> Result<SpectralCurve> {
        let g = m.as_rf()?;
        SpectralCurve::new(self.x.compose(&g), self.y.compose(&g), self.s.as_ref().map(|s| s.compose(&g)))
    }
}

/// z = (a u + b)/(c u + d)
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
}

impl Mobius {
    pub fn identity() -> Self {
        Mobius { a: Q::one(), b: Q::zero(), c: Q::zero(), d: Q::one() }
    }
    pub fn as_rf(&self) -> Result<RF> {
        RF::new(Poly::new(alloc::vec![self.b.clone(), self.a.clone()]), Poly::new(alloc::vec![self.d.clone(), self.c.clone()]))
    }
}

/// Move every pole of x off z = ∞ with z = c + 1/u, c the first non-pole in 0, 1, −1, 2, ...
pub fn normalize_chart(curve: &SpectralCurve) -> Result<(SpectralCurve, Mobius)> {
    if curve.x.eval_point(&Point::Infinity).is_some() {
        return Ok((curve.clone(), Mobius::identity()));
    }
    let c = core::iter::once(Q::zero())
        .chain(crate::algebra::rational::small_rationals(64))
        .find(|c| curve.x.eval(c).is_some())
        .ok_or_else(|| Error::Invalid("no regular chart center".into()))?;
    let m = Mobius { a: c, b: Q::one(), c: Q::one(), d: Q::zero() };
    Ok((curve.transform(&m)?, m))
}

/// B(z1, z2) = 1/(z1 − z2)², coefficient of dz1 dz2.
pub fn bergman(z1: &Q, z2: &Q) -> Result<Q> {
    if z1 == z2 {
        return Err(Error::CoincidingPoints);
    }
    let d = z1 - z2;
    Ok((&d * &d).recip())
}

/// (z1 − z2)², the prime form squared times dz1 dz2.
pub fn prime_form_sq(z1: &Q, z2: &Q) -> Q {
    let d = z1 - z2;
    &d * &d
}

/// x'(z)/E_y(x(z), y(z)) for a monic characteristic polynomial Σ e_j(x) y^j.
pub fn dx_over_ey(curve: &SpectralCurve, e_monic: &[RF]) -> RF {
    let mut acc = RF::zero();
    let mut ypow = RF::one();
    for (j, c) in e_monic.iter().enumerate().skip(1) {
        acc = &acc + &(&c.compose(&curve.x) * &ypow).scale(&Q::from_integer((j as i64).into()));
        ypow = &ypow * &curve.y;
    }
    curve.xprime().checked_div(&acc).expect("E_y vanishes identically on the curve")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    #[test]
    fn chart_moves_pole_from_infinity() {
        let c = SpectralCurve::new(RF::poly(Poly::from_i64(&[0, 0, 1])), RF::z(), None).unwrap();
        let (n, m) = normalize_chart(&c).unwrap();
        assert_eq!(m.a, qi(0));
        assert_eq!(n.x, RF::new(Poly::one(), Poly::from_i64(&[0, 0, 1])).unwrap());
        let pd = partial_fractions(&n.x).unwrap();
        assert_eq!(pd.poles.len(), 1);
        assert_eq!(pd.poles[0].coeffs, alloc::vec![qi(0), qi(1)]);
        let (_, id) = normalize_chart(&n).unwrap();
        assert_eq!(id, Mobius::identity());
    }

    #[test]
    fn chart_for_z_plus_inverse() {
        let x = RF::new(Poly::from_i64(&[1, 0, 1]), Poly::from_i64(&[0, 1])).unwrap();
        let c = SpectralCurve::new(x, RF::z(), None).unwrap();
        let (n, m) = normalize_chart(&c).unwrap();
        assert_ne!(m.a, qi(0));
        let pd = partial_fractions(&n.x).unwrap();
        assert!(pd.poles.iter().all(|p| !p.at.is_infinite()));
        assert_eq!(pd.rebuild(), n.x);
    }

    #[test]
    fn bergman_examples() {
        assert_eq!(bergman(&qi(1), &qi(0)).unwrap(), qi(1));
        assert_eq!(bergman(&qi(3), &qi(5)).unwrap(), bergman(&qi(5), &qi(3)).unwrap());
        assert!(bergman(&qi(2), &qi(2)).is_err());
    }

    #[test]
    fn airy_dx_over_ey_is_one() {
        let c = SpectralCurve::new(RF::poly(Poly::from_i64(&[0, 0, 1])), RF::z(), None).unwrap();
        // E = y² − x
        let e = alloc::vec![RF::poly(Poly::from_i64(&[0, -1])), RF::zero(), RF::one()];
        assert_eq!(dx_over_ey(&c, &e), RF::one());
    }
}
