use alloc::vec::Vec;

use num_traits::{One, Zero};


use crate::algebra::{Point, Series, Q, RF};
use crate::{Error, Result};

use super::SpectralCurve;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchKind {
    ZeroOfDx,
    PoleOfX,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPoint {
    pub at: Point,
    pub kind: BranchKind,
    pub order: usize,
    /// The differential of the companion function does not vanish there.
    pub regular: bool,
}

pub fn branchpoints(curve: &SpectralCurve) -> Result<Vec<BranchPoint>> {
    branchpoints_of(&curve.x, &curve.y)
}

/// df ≠ 0 at p: f has a pole there, or f − f(p) has a simple zero.
pub fn df_nonvanishing(f: &RF, p: &Point) -> bool {
    match f.eval_point(p) {
        None => true,
        Some(v) => (f - &RF::constant(v)).order_at(p) == Some(1),
    }
}

/// Ramification points of z ↦ x(z), with regularity judged by f.
pub fn branchpoints_of(x: &RF, f: &RF) -> Result<Vec<BranchPoint>> {
    let xp = x.derivative();
    let roots = xp.num().rational_roots();
    let tot: usize = roots.iter().map(|r| r.1).sum();
    if tot as i64 != xp.num().deg() {
        return Err(Error::NonRational("branchpoint".into()));
    }
    let mut out: Vec<BranchPoint> = roots
        .into_iter()
        .map(|(a, m)| {
            let at = Point::Finite(a);
            BranchPoint { regular: df_nonvanishing(f, &at), at, kind: BranchKind::ZeroOfDx, order: m + 1 }
        })
        .collect();
    for (p, m) in x.poles()? {
        if m >= 2 {
            out.push(BranchPoint { regular: df_nonvanishing(f, &p), at: p, kind: BranchKind::PoleOfX, order: m });
        }
    }
    if let Some(v) = x.eval_point(&Point::Infinity) {
        let ord = (x - &RF::constant(v)).order_at(&Point::Infinity).unwrap_or(0);
        if ord >= 2 {
            let at = Point::Infinity;
            out.push(BranchPoint { regular: df_nonvanishing(f, &at), at, kind: BranchKind::ZeroOfDx, order: ord as usize });
        }
    }
    out.sort_by(|a, b| a.at.cmp(&b.at));
    Ok(out)
}

/// Local deck transformation σ(ζ) = −ζ + Σ c_j ζ^j in ζ = z − a (ζ = 1/z at ∞).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionSeries {
    pub branchpoint: BranchPoint,
    pub sigma: Series,
}

/// Local function with a double zero at the branchpoint that is invariant under σ.
fn local_invariant(x: &RF, p: &Point, order: i64) -> Result<Series> {
    let f = match x.eval_point(p) {
        Some(v) => x - &RF::constant(v),
        None => x.inv()?,
    };
    let s = f.laurent_at(p, order);
    if s.val() != 2 {
        return Err(Error::Unsupported("branchpoint of order above 2".into()));
    }
    Ok(s)
}

pub fn involution_series(curve: &SpectralCurve, bp: &BranchPoint, t: i64) -> Result<InvolutionSeries> {
    if bp.order != 2 {
        return Err(Error::Unsupported("branchpoint of order above 2".into()));
    }
    let f = local_invariant(&curve.x, &bp.at, t + 1)?;
    let f2 = f.coeff(2);
    let mut c = alloc::vec![Q::zero(), -Q::one()];
    for n in 2..=t {
        c.push(Q::zero());
        let sigma = Series::new(0, c.clone(), t);
        let e = f.compose(&sigma)?.sub(&f).coeff(n + 1);
        c[n as usize] = e / (&f2 + &f2);
    }
    Ok(InvolutionSeries { branchpoint: bp.clone(), sigma: Series::new(0, c, t) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;
    use crate::algebra::Poly;

    fn curve(x: &[i64], y: &[i64]) -> SpectralCurve {
        SpectralCurve::new(RF::poly(Poly::from_i64(x)), RF::poly(Poly::from_i64(y)), None).unwrap()
    }

    #[test]
    fn airy_branchpoints() {
        let c = curve(&[0, 0, 1], &[0, 1]);
        let bps = branchpoints(&c).unwrap();
        assert_eq!(bps.len(), 2);
        assert_eq!(bps[0].at, Point::Finite(qi(0)));
        assert_eq!((bps[1].at.clone(), bps[1].kind), (Point::Infinity, BranchKind::PoleOfX));
        assert!(bps.iter().all(|b| b.regular && b.order == 2));
        let s = involution_series(&c, &bps[0], 8).unwrap();
        assert_eq!(s.sigma, Series::new(0, alloc::vec![qi(0), qi(-1)], 8));
    }

    #[test]
    fn cubic_branchpoints() {
        let c = curve(&[0, -3, 0, 1], &[0, 1]);
        let bps = branchpoints(&c).unwrap();
        let locs: Vec<Point> = bps.iter().filter(|b| b.kind == BranchKind::ZeroOfDx).map(|b| b.at.clone()).collect();
        assert_eq!(locs, alloc::vec![Point::Finite(qi(-1)), Point::Finite(qi(1))]);
    }

    #[test]
    fn involution_of_z2_plus_z3() {
        let c = curve(&[0, 0, 1, 1], &[0, 1]);
        let bp = branchpoints(&c).unwrap().into_iter().find(|b| b.at == Point::Finite(qi(0))).unwrap();
        let s = involution_series(&c, &bp, 6).unwrap();
        assert_eq!(s.sigma.coeff(1), qi(-1));
        assert_eq!(s.sigma.coeff(2), qi(-1));
        let f = local_invariant(&c.x, &bp.at, 7).unwrap();
        let diff = f.compose(&s.sigma).unwrap().sub(&f);
        for e in 0..=6 {
            assert_eq!(diff.coeff(e), qi(0));
        }
        let twice = s.sigma.compose(&s.sigma).unwrap();
        assert_eq!(twice.coeff(1), qi(1));
        for e in 2..=6 {
            assert_eq!(twice.coeff(e), qi(0));
        }
    }
}
