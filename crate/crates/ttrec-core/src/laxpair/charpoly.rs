use alloc::vec::Vec;


use crate::algebra::bivariate::BiPoly;
use crate::algebra::{Matrix, Poly, Q, RF};
use crate::curve::SpectralCurve;
use crate::Result;

use super::LaxPair;

/// det(y − A) = Σ_j c_j y^j (c_d = 1) by Faddeev–LeVerrier.
pub fn char_poly<T: crate::algebra::Field>(a: &Matrix<T>) -> Vec<T> {
    let d = a.rows();
    let one = a.get(0, 0).one_like();
    let id = Matrix::identity(d, &one);
    let mut c = alloc::vec![one.zero_like(); d + 1];
    c[d] = one.clone();
    let mut m = id.zeros_like();
    for k in 1..=d {
        m = a.mat_mul(&m).mat_add(&id.scale_by(&c[d - k + 1]));
        let t = a.mat_mul(&m).trace();
        c[d - k] = t.scaled(&Q::new((-1).into(), (k as i64).into()));
    }
    c
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    /// Monic coefficients in y, rational in x.
    pub monic: Vec<RF>,
    /// Denominators cleared: polynomial in x and y.
    pub cleared: BiPoly,
}

impl CharPoly {
    pub fn from_monic(monic: Vec<RF>) -> Self {
        let l = monic.iter().fold(Poly::one(), |l, c| {
            let g = Poly::gcd(&l, c.den());
            &l * &c.den().exact_div(&g)
        });
        let cleared = BiPoly::new(monic.iter().map(|c| c.num() * &l.exact_div(c.den())).collect());
        CharPoly { monic, cleared }
    }
    /// Σ c_j(x(z)) y(z)^j
    pub fn on_curve(&self, x: &RF, y: &RF) -> RF {
        let mut acc = RF::zero();
        for c in self.monic.iter().rev() {
            acc = &(&acc * y) + &c.compose(x);
        }
        acc
    }
    /// ∂_y E on the curve, monic normalization.
    pub fn ey_on_curve(&self, x: &RF, y: &RF) -> RF {
        let mut acc = RF::zero();
        let mut yp = RF::one();
        for (j, c) in self.monic.iter().enumerate().skip(1) {
            acc = &acc + &(&c.compose(x) * &yp).scale(&Q::from_integer((j as i64).into()));
            yp = &yp * y;
        }
        acc
    }
}

pub fn char_poly_curve(lp: &LaxPair) -> CharPoly {
    CharPoly::from_monic(char_poly(lp.l0()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamReport {
    pub identity: bool,
    pub sheet_count: bool,
    pub separates_sheets: bool,
    pub auxiliary_identity: Option<bool>,
    pub commutes: Option<bool>,
}

impl ParamReport {
    pub fn passed(&self) -> bool {
        self.identity && self.sheet_count && self.separates_sheets && self.auxiliary_identity != Some(false) && self.commutes != Some(false)
    }
}

pub fn verify_parametrization(lp: &LaxPair, curve: &SpectralCurve) -> Result<ParamReport> {
    let e = char_poly_curve(lp);
    let identity = e.on_curve(&curve.x, &curve.y).is_zero();
    let separates_sheets = identity && !e.ey_on_curve(&curve.x, &curve.y).is_zero();
    let (auxiliary_identity, commutes) = match (lp.r0(), &curve.s) {
        (Some(r0), Some(s)) => {
            let er = CharPoly::from_monic(char_poly(r0));
            (Some(er.on_curve(&curve.x, s).is_zero()), Some(lp.l0().commutator(r0).is_zero_matrix()))
        }
        (Some(r0), None) => (None, Some(lp.l0().commutator(r0).is_zero_matrix())),
        _ => (None, None),
    };
    Ok(ParamReport { identity, sheet_count: curve.d == lp.d, separates_sheets, auxiliary_identity, commutes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    fn xrf() -> RF {
        RF::z()
    }

    #[test]
    fn airy_and_diagonal() {
        let l = Matrix::from_rows(alloc::vec![alloc::vec![RF::zero(), RF::one()], alloc::vec![xrf(), RF::zero()]]);
        let lp = LaxPair::new(2, 0, alloc::vec![l], None).unwrap();
        let e = char_poly_curve(&lp);
        assert_eq!(e.cleared.cy, alloc::vec![Poly::from_i64(&[0, -1]), Poly::zero(), Poly::one()]);
        let c = |a| RF::constant(qi(a));
        let diag = Matrix::from_rows(alloc::vec![alloc::vec![c(1), c(0)], alloc::vec![c(0), c(2)]]);
        assert_eq!(char_poly(&diag), alloc::vec![c(2), c(-3), c(1)]);
        let good = SpectralCurve::new(RF::poly(Poly::from_i64(&[0, 0, 1])), RF::z(), None).unwrap();
        assert!(verify_parametrization(&lp, &good).unwrap().passed());
        let bad = SpectralCurve::new(RF::poly(Poly::from_i64(&[0, 0, 1])), RF::poly(Poly::from_i64(&[0, 0, 1])), None).unwrap();
        let r = verify_parametrization(&lp, &bad).unwrap();
        assert!(!r.identity);
        assert_eq!(e.on_curve(&bad.x, &bad.y), RF::poly(Poly::from_i64(&[0, 0, -1, 0, 1])));
    }
}
