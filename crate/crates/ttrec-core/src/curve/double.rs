use alloc::vec::Vec;

use crate::algebra::bivariate::{divided_difference, resultant};
use crate::algebra::{Poly, Q, RF};
use crate::{Error, Result};

/// b ≠ b̄ with x(b) = x(b̄), y(b) = y(b̄).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePoint {
    pub b: Q,
    pub b_bar: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DoublePoints {
    pub points: Vec<DoublePoint>,
    /// Degree of the resultant factor without rational roots.
    pub irrational_degree: usize,
}

fn eval_in_w(coeffs: &[Poly], z0: &Q) -> Poly {
    Poly::new(coeffs.iter().map(|c| c.eval(z0)).collect())
}

/// Finite rational double points of z ↦ (x(z), y(z)), each unordered pair once with b < b̄.
pub fn double_points(x: &RF, y: &RF) -> Result<DoublePoints> {
    let p = divided_difference(x);
    let q = divided_difference(y);
    if p.is_empty() || q.is_empty() {
        return Ok(DoublePoints::default());
    }
    let pr: Vec<RF> = p.iter().cloned().map(RF::poly).collect();
    let qr: Vec<RF> = q.iter().cloned().map(RF::poly).collect();
    let res = resultant(&pr, &qr);
    if res.is_zero() {
        return Err(Error::Invalid("(x, y) does not separate points: common component".into()));
    }
    let rnum = res.num().clone();
    let mut points = Vec::new();
    for (z0, _) in rnum.rational_roots() {
        let (Some(x0), Some(y0)) = (x.eval(&z0), y.eval(&z0)) else { continue };
        let g = Poly::gcd(&eval_in_w(&p, &z0), &eval_in_w(&q, &z0));
        for (w0, _) in g.rational_roots() {
            if w0 <= z0 {
                continue;
            }
            if x.eval(&w0).as_ref() == Some(&x0) && y.eval(&w0).as_ref() == Some(&y0) {
                points.push(DoublePoint { b: z0.clone(), b_bar: w0 });
            }
        }
    }
    let irrational_degree = rnum.irrational_part().deg().max(0) as usize;
    Ok(DoublePoints { points, irrational_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    #[test]
    fn examples() {
        let x = RF::poly(Poly::from_i64(&[0, 0, 1]));
        assert!(double_points(&x, &RF::z()).unwrap().points.is_empty());
        let y = RF::poly(Poly::from_i64(&[0, -4, 0, 1]));
        let dp = double_points(&x, &y).unwrap();
        assert_eq!(dp.points, alloc::vec![DoublePoint { b: qi(-2), b_bar: qi(2) }]);
        assert!(double_points(&x, &x).is_err());
    }
}
