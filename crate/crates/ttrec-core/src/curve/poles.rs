use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::rational::sqrt_q;
use crate::algebra::{Matrix, Point, Poly, Ring, Q, RF};
use crate::{Error, Result};

use super::SpectralCurve;

/// Polar part of x at one pole: Σ_l X_l (z − α)^{−l}, or Σ_l X_l z^l at ∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pole {
    pub at: Point,
    pub order: usize,
    /// X_{k,1}, ..., X_{k,d_k}
    pub coeffs: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleData {
    pub x_inf0: Q,
    /// Finite poles in descending order, then ∞.
    pub poles: Vec<Pole>,
}

impl PoleData {
    pub fn total_order(&self) -> usize {
        self.poles.iter().map(|p| p.order).sum()
    }
    /// Flattened (pole index, l) labels in C/𝒱 order.
    pub fn labels(&self) -> Vec<(usize, usize)> {
        self.poles.iter().enumerate().flat_map(|(k, p)| (1..=p.order).map(move |l| (k, l))).collect()
    }
    pub fn rebuild(&self) -> RF {
        let mut acc = RF::constant(self.x_inf0.clone());
        for p in &self.poles {
            for (i, c) in p.coeffs.iter().enumerate() {
                let l = i as u32 + 1;
                let term = match &p.at {
                    Point::Finite(a) => RF::inv_linear_pow(a, l).scale(c),
                    Point::Infinity => RF::poly(Poly::monomial(c.clone(), l as usize)),
                };
                acc = &acc + &term;
            }
        }
        acc
    }
    /// Basis functions w_{k,l}: (z − α_k)^{−l}, or z^{l−1} at ∞.
    pub fn basis(&self) -> Vec<RF> {
        self.labels()
            .into_iter()
            .map(|(k, l)| match &self.poles[k].at {
                Point::Finite(a) => RF::inv_linear_pow(a, l as u32),
                Point::Infinity => RF::poly(Poly::monomial(Q::one(), l - 1)),
            })
            .collect()
    }
    pub fn basis_at(&self, z0: &Q) -> Result<Vec<Q>> {
        self.basis().iter().map(|w| w.eval(z0).ok_or_else(|| Error::Singular("basis evaluated at a pole".into()))).collect()
    }
}

pub fn partial_fractions(x: &RF) -> Result<PoleData> {
    let (poly_part, rem) = x.num().divrem(x.den());
    let mut finite = x.finite_poles()?;
    finite.sort_by(|a, b| b.0.cmp(&a.0));
    let mut poles: Vec<Pole> = finite
        .into_iter()
        .map(|(a, m)| {
            let s = x.laurent_at(&Point::Finite(a.clone()), -1);
            let coeffs = (1..=m as i64).map(|l| s.coeff(-l)).collect();
            Pole { at: Point::Finite(a), order: m, coeffs }
        })
        .collect();
    let _ = rem;
    if let Some(deg) = poly_part.degree().filter(|&d| d > 0) {
        poles.push(Pole { at: Point::Infinity, order: deg, coeffs: (1..=deg).map(|l| poly_part.coeff(l)).collect() });
    }
    let pd = PoleData { x_inf0: poly_part.coeff(0), poles };
    debug_assert_eq!(&pd.rebuild(), x);
    Ok(pd)
}

/// Block-diagonal Hankel pairing matrix: −X_{k,l+l′−1} at finite poles, +X_{∞,l+l′−1} at ∞.
pub fn build_c(pd: &PoleData) -> Result<Matrix<Q>> {
    let labels = pd.labels();
    let n = labels.len();
    let mut c = Matrix::filled(n, n, Q::zero());
    for (i, &(k, l)) in labels.iter().enumerate() {
        for (j, &(k2, l2)) in labels.iter().enumerate() {
            if k != k2 {
                continue;
            }
            let p = &pd.poles[k];
            let m = l + l2 - 1;
            if m <= p.order {
                let v = p.coeffs[m - 1].clone();
                c.set(i, j, if p.at.is_infinite() { v } else { -v });
            }
        }
    }
    if c.det().vanishes() {
        return Err(Error::Singular("pairing matrix C".into()));
    }
    Ok(c)
}

/// Vector with entries rat_i/√arg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfVec {
    pub rat: Vec<Q>,
    pub arg: Q,
}

impl HalfVec {
    /// uᵀ M v, rational only when √(arg_u·arg_v) is.
    pub fn bilinear(&self, m: &Matrix<Q>, v: &HalfVec) -> Result<Q> {
        let mv = m.mul_vec(&v.rat);
        let s: Q = self.rat.iter().zip(&mv).map(|(a, b)| a * b).sum();
        if s.is_zero() {
            return Ok(s);
        }
        let root = if self.arg == v.arg { Some(self.arg.clone()) } else { sqrt_q(&(&self.arg * &v.arg)) };
        root.map(|r| s / r).ok_or_else(|| Error::NonRational("odd power of a square-root tag".into()))
    }
}

/// 𝒱(z0): entries w_{k,l}(z0)/√x'(z0).
pub fn vandermonde_vector(curve: &SpectralCurve, pd: &PoleData, z0: &Q) -> Result<HalfVec> {
    let xp = curve.xprime().eval(z0).ok_or_else(|| Error::Singular("z0 is a pole of x".into()))?;
    if xp.is_zero() {
        return Err(Error::Singular("z0 is a branchpoint".into()));
    }
    Ok(HalfVec { rat: pd.basis_at(z0)?, arg: xp })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberIdentities {
    pub vt_c_v_is_identity: bool,
    pub v_vt_is_c_inverse: bool,
}

/// Checks 𝒱ᵀC𝒱 = Id and 𝒱𝒱ᵀ = C⁻¹ on the fiber over x0.
pub fn fiber_identities(curve: &SpectralCurve, pd: &PoleData, c: &Matrix<Q>, x0: &Q) -> Result<FiberIdentities> {
    let fib = curve.fiber(x0)?;
    let vs: Vec<HalfVec> = fib.iter().map(|z| vandermonde_vector(curve, pd, z)).collect::<Result<_>>()?;
    let d = vs.len();
    let mut ok1 = true;
    for i in 0..d {
        for j in 0..d {
            let v = vs[i].bilinear(c, &vs[j]);
            let want = if i == j { Q::one() } else { Q::zero() };
            // off-diagonal entries vanish before any square root is taken
            ok1 &= v.map(|v| v == want).unwrap_or(false);
        }
    }
    let mut vvt = Matrix::filled(d, d, Q::zero());
    for v in &vs {
        for a in 0..d {
            for b in 0..d {
                let e = vvt.get(a, b) + &v.rat[a] * &v.rat[b] / &v.arg;
                vvt.set(a, b, e);
            }
        }
    }
    let ok2 = vvt.mat_mul(c) == Matrix::identity(d, &Q::one());
    Ok(FiberIdentities { vt_c_v_is_identity: ok1, v_vt_is_c_inverse: ok2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{q, qi};
    use crate::algebra::Poly;

    fn rf(n: &[i64], d: &[i64]) -> RF {
        RF::new(Poly::from_i64(n), Poly::from_i64(d)).unwrap()
    }

    #[test]
    fn inverse_z() {
        let pd = partial_fractions(&rf(&[1], &[0, 1])).unwrap();
        assert_eq!(pd.x_inf0, qi(0));
        assert_eq!(pd.poles, alloc::vec![Pole { at: Point::Finite(qi(0)), order: 1, coeffs: alloc::vec![qi(1)] }]);
    }

    #[test]
    fn pvi_shape() {
        // b + (b − a)/((z−1)(z+1)) with a = 0, b = 2
        let x = rf(&[0, 0, 2], &[-1, 0, 1]);
        let pd = partial_fractions(&x).unwrap();
        assert_eq!(pd.x_inf0, qi(2));
        assert_eq!(pd.poles.iter().map(|p| p.at.clone()).collect::<Vec<_>>(), alloc::vec![Point::Finite(qi(1)), Point::Finite(qi(-1))]);
        assert_eq!(pd.poles[0].coeffs, alloc::vec![qi(1)]);
        assert_eq!(pd.poles[1].coeffs, alloc::vec![qi(-1)]);
        let c = build_c(&pd).unwrap();
        assert_eq!(c, crate::algebra::matrix::qmat(&[&[(-1, 1), (0, 1)], &[(0, 1), (1, 1)]]));
    }

    #[test]
    fn inverse_square() {
        let pd = partial_fractions(&rf(&[1], &[0, 0, 1])).unwrap();
        assert_eq!(pd.poles[0].coeffs, alloc::vec![qi(0), qi(1)]);
        let c = build_c(&pd).unwrap();
        assert_eq!(c, crate::algebra::matrix::qmat(&[&[(0, 1), (-1, 1)], &[(-1, 1), (0, 1)]]));
        let curve = SpectralCurve::new(rf(&[1], &[0, 0, 1]), RF::z(), None).unwrap();
        let v = vandermonde_vector(&curve, &pd, &qi(2)).unwrap();
        assert_eq!(v.rat, alloc::vec![q(1, 2), q(1, 4)]);
        assert_eq!(v.arg, q(-1, 4));
        let ids = fiber_identities(&curve, &pd, &c, &q(1, 4)).unwrap();
        assert!(ids.vt_c_v_is_identity && ids.v_vt_is_c_inverse);
    }

    #[test]
    fn pole_at_infinity_identities() {
        let x = rf(&[1, -2, 1, 1], &[1]);
        let curve = SpectralCurve::new(x.clone(), RF::z(), None).unwrap();
        let pd = partial_fractions(&x).unwrap();
        assert_eq!(pd.poles.last().unwrap().at, Point::Infinity);
        let c = build_c(&pd).unwrap();
        // x = z³ + z² − 2z + 1 has rational fiber over x(0) = 1: z ∈ {0, 1, −2}
        let ids = fiber_identities(&curve, &pd, &c, &qi(1)).unwrap();
        assert!(ids.vt_c_v_is_identity && ids.v_vt_is_c_inverse);
    }
}
