use alloc::vec::Vec;

use num_traits::Zero;

use super::matrix::Matrix;
use super::poly::Poly;
use super::rational::Q;
use super::rf::RF;

/// Polynomial in y with polynomial-in-x coefficients: Σ_j c_j(x) y^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    pub cy: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut cy: Vec<Poly>) -> Self {
        while cy.last().is_some_and(|p| p.is_zero()) {
            cy.pop();
        }
        BiPoly { cy }
    }
    pub fn deg_y(&self) -> usize {
        self.cy.len().saturating_sub(1)
    }
    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.cy.iter().rev() {
            acc = acc * y + c.eval(x);
        }
        acc
    }
    pub fn eval_rf(&self, x: &RF, y: &RF) -> RF {
        let mut acc = RF::zero();
        for c in self.cy.iter().rev() {
            acc = &(&acc * y) + &RF::poly(c.clone()).compose(x);
        }
        acc
    }
    pub fn dy(&self) -> BiPoly {
        BiPoly::new(self.cy.iter().enumerate().skip(1).map(|(j, c)| c.scale(&Q::from_integer((j as i64).into()))).collect())
    }
}

/// Sylvester resultant of two polynomials in w whose coefficients (ascending) lie in ℚ(z).
pub fn resultant(p: &[RF], q: &[RF]) -> RF {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    if size == 0 {
        return RF::one();
    }
    let mut s = Matrix::filled(size, size, RF::zero());
    for i in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in q.iter().rev().enumerate() {
            s.set(n + i, i + k, c.clone());
        }
    }
    s.det()
}

/// Coefficients in w of num((f(z) − f(w))/(z − w)), each a polynomial in z.
pub fn divided_difference(f: &RF) -> Vec<Poly> {
    let (n, d) = (f.num(), f.den());
    let deg = n.deg().max(d.deg()).max(0) as usize;
    // H(z, w) = N(z)D(w) − N(w)D(z) = Σ_j h_j(z) w^j
    let h: Vec<Poly> = (0..=deg).map(|j| &n.scale(&d.coeff(j)) - &d.scale(&n.coeff(j))).collect();
    // H = (z − w) G: synthetic division in w by (w − z), then negate
    let mut g = alloc::vec![Poly::zero(); deg];
    let zpoly = Poly::z();
    let mut carry = Poly::zero();
    for j in (1..=deg).rev() {
        carry = &h[j] + &(&carry * &zpoly);
        g[j - 1] = -&carry;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    #[test]
    fn divided_difference_of_square() {
        let f = RF::poly(Poly::from_i64(&[0, 0, 1]));
        let g = divided_difference(&f);
        // (z² − w²)/(z − w) = z + w
        assert_eq!(g, alloc::vec![Poly::z(), Poly::one()]);
    }

    #[test]
    fn resultant_of_linear_pair() {
        // Res_w(w − z, w − 2) = z − 2 up to sign
        let r = resultant(&[RF::z().scale(&qi(-1)), RF::one()], &[RF::constant(qi(-2)), RF::one()]);
        assert!(r == RF::poly(Poly::from_i64(&[-2, 1])) || r == RF::poly(Poly::from_i64(&[2, -1])));
    }
}
