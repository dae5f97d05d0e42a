use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::point::Point;
use super::poly::Poly;
use super::rational::{height, Q};
use super::ring::{Field, Ring};
use super::series::Series;
use crate::{Error, Result};

/// Reduced rational function over ℚ with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RF {
    num: Poly,
    den: Poly,
}

impl RF {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }
    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RF { num, den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_constant() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let l = den.lc().recip();
        RF { num: num.scale(&l), den: den.scale(&l) }
    }
    pub fn poly(p: Poly) -> Self {
        RF { num: p, den: Poly::one() }
    }
    pub fn constant(a: Q) -> Self {
        Self::poly(Poly::constant(a))
    }
    pub fn zero() -> Self {
        Self::poly(Poly::zero())
    }
    pub fn one() -> Self {
        Self::constant(Q::one())
    }
    pub fn z() -> Self {
        Self::poly(Poly::z())
    }
    /// 1/(z − a)^k
    pub fn inv_linear_pow(a: &Q, k: u32) -> Self {
        RF { num: Poly::one(), den: Poly::linear_root(a).pow(k) }
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }
    pub fn as_constant(&self) -> Option<Q> {
        self.is_constant().then(|| self.num.coeff(0))
    }
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }
    /// Degree of the map z ↦ f(z).
    pub fn degree(&self) -> usize {
        self.num.deg().max(self.den.deg()).max(0) as usize
    }
    pub fn checked_div(&self, o: &RF) -> Result<RF> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &RF { num: o.den.clone(), den: o.num.clone() }.renorm())
    }
    fn renorm(self) -> Self {
        let l = self.den.lc().recip();
        RF { num: self.num.scale(&l), den: self.den.scale(&l) }
    }
    pub fn inv(&self) -> Result<RF> {
        RF::one().checked_div(self)
    }
    pub fn scale(&self, a: &Q) -> RF {
        if a.is_zero() {
            return RF::zero();
        }
        RF { num: self.num.scale(a), den: self.den.clone() }
    }
    pub fn pow(&self, e: i32) -> Result<RF> {
        let b = if e < 0 { self.inv()? } else { self.clone() };
        Ok(RF { num: b.num.pow(e.unsigned_abs()), den: b.den.pow(e.unsigned_abs()) })
    }
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
    pub fn eval_point(&self, p: &Point) -> Option<Q> {
        match p {
            Point::Finite(a) => self.eval(a),
            Point::Infinity => {
                let (n, d) = (self.num.deg(), self.den.deg());
                if self.num.is_zero() || n < d {
                    Some(Q::zero())
                } else if n == d {
                    Some(self.num.lc() / self.den.lc())
                } else {
                    None
                }
            }
        }
    }
    pub fn derivative(&self) -> RF {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }
    /// Homogenized evaluation of a polynomial at g = p/q: returns (Σ a_k p^k q^{n−k}, n).
    fn homog(f: &Poly, p: &Poly, q: &Poly) -> (Poly, usize) {
        let n = f.degree().unwrap_or(0);
        let mut acc = Poly::zero();
        let mut ppow = Vec::with_capacity(n + 1);
        let mut qp = Vec::with_capacity(n + 1);
        ppow.push(Poly::one());
        qp.push(Poly::one());
        for k in 1..=n {
            ppow.push(&ppow[k - 1] * p);
            qp.push(&qp[k - 1] * q);
        }
        for (k, a) in f.coeffs().iter().enumerate() {
            if !a.is_zero() {
                acc = &acc + &(&ppow[k] * &qp[n - k]).scale(a);
            }
        }
        (acc, n)
    }
    /// f(g(z))
    pub fn compose(&self, g: &RF) -> RF {
        let (nh, n) = Self::homog(&self.num, &g.num, &g.den);
        let (dh, m) = Self::homog(&self.den, &g.num, &g.den);
        let (num, den) = if m >= n { (&nh * &g.den.pow((m - n) as u32), dh) } else { (nh, &dh * &g.den.pow((n - m) as u32)) };
        Self::reduce(num, den)
    }
    /// Valuation at p (order of zero, negative for poles); None for f = 0.
    pub fn order_at(&self, p: &Point) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(match p {
            Point::Finite(a) => {
                let lin = Poly::linear_root(a);
                mult(&self.num, &lin) as i64 - mult(&self.den, &lin) as i64
            }
            Point::Infinity => self.den.deg() - self.num.deg(),
        })
    }
    /// Laurent expansion at p in t = z − p (or t = 1/z at ∞), known through t^order.
    pub fn laurent_at(&self, p: &Point, order: i64) -> Series {
        let (n, d, shift) = match p {
            Point::Finite(a) => (self.num.taylor_shift(a), self.den.taylor_shift(a), 0i64),
            Point::Infinity => {
                let nd = self.num.deg().max(0) as usize;
                let dd = self.den.deg() as usize;
                (self.num.reversed(nd), self.den.reversed(dd), dd as i64 - nd as i64)
            }
        };
        if n.is_zero() {
            return Series::zero(order);
        }
        let vn = n.valuation().unwrap() as i64;
        let vd = d.valuation().unwrap() as i64;
        let v = vn - vd + shift;
        let rel = order - v;
        if rel < 0 {
            return Series::zero(order);
        }
        let ns = Series::new(0, n.coeffs()[vn as usize..].to_vec(), rel);
        let ds = Series::new(0, d.coeffs()[vd as usize..].to_vec(), rel);
        ns.div(&ds).expect("nonzero leading term").shift(v)
    }
    pub fn residue(&self, p: &Point) -> Q {
        match p {
            Point::Finite(_) => self.laurent_at(p, -1).coeff(-1),
            // Res_∞ f dz = −[w^{-1}] f(1/w)/w²  = −[w^{1}] f(1/w)
            Point::Infinity => -self.laurent_at(p, 1).coeff(1),
        }
    }
    /// Rational finite poles with orders; error if the denominator has irrational roots.
    pub fn finite_poles(&self) -> Result<Vec<(Q, usize)>> {
        let r = self.den.rational_roots();
        let tot: usize = r.iter().map(|x| x.1).sum();
        if tot as i64 != self.den.deg() {
            return Err(Error::NonRational(alloc::format!("pole locations of {self}")));
        }
        Ok(r)
    }
    /// All poles including ∞, finite ones first in ascending order.
    pub fn poles(&self) -> Result<Vec<(Point, usize)>> {
        let mut out: Vec<(Point, usize)> = self.finite_poles()?.into_iter().map(|(a, m)| (Point::Finite(a), m)).collect();
        let k = self.num.deg() - self.den.deg();
        if k > 0 {
            out.push((Point::Infinity, k as usize));
        }
        Ok(out)
    }
    pub fn weight(&self) -> u64 {
        let h = |p: &Poly| p.coeffs().iter().map(height).sum::<u64>();
        ((self.num.deg() + self.den.deg() + 2) as u64) << 32 | (h(&self.num) + h(&self.den)).min(u32::MAX as u64)
    }
}

fn mult(p: &Poly, lin: &Poly) -> usize {
    let mut p = p.clone();
    let mut m = 0;
    loop {
        let (q, r) = p.divrem(lin);
        if !r.is_zero() || p.is_zero() {
            return m;
        }
        p = q;
        m += 1;
    }
}

impl From<Poly> for RF {
    fn from(p: Poly) -> Self {
        RF::poly(p)
    }
}

impl fmt::Debug for RF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RF {
    type Output = RF;
    fn add(self, o: &RF) -> RF {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RF::reduce(&self.num + &o.num, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &o.den);
        let b1 = self.den.exact_div(&g);
        let d1 = o.den.exact_div(&g);
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        let den = &b1 * &o.den;
        RF::reduce(num, den)
    }
}

impl Sub for &RF {
    type Output = RF;
    fn sub(self, o: &RF) -> RF {
        self + &(-o)
    }
}

impl Neg for &RF {
    type Output = RF;
    fn neg(self) -> RF {
        RF { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RF {
    type Output = RF;
    fn mul(self, o: &RF) -> RF {
        if self.is_zero() || o.is_zero() {
            return RF::zero();
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let a = self.num.exact_div(&g1);
        let d = o.den.exact_div(&g1);
        let c = o.num.exact_div(&g2);
        let b = self.den.exact_div(&g2);
        RF { num: &a * &c, den: &b * &d }.renorm()
    }
}

impl Ring for RF {
    fn zero_like(&self) -> Self {
        RF::zero()
    }
    fn one_like(&self) -> Self {
        RF::one()
    }
    fn vanishes(&self) -> bool {
        RF::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

impl Field for RF {
    fn recip(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn weight(&self) -> u64 {
        RF::weight(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{q, qi};

    fn rf(n: &[i64], d: &[i64]) -> RF {
        RF::new(Poly::from_i64(n), Poly::from_i64(d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let inv_z = rf(&[1], &[0, 1]);
        assert_eq!(&inv_z + &inv_z, rf(&[2], &[0, 1]));
        let f = rf(&[1, 0, 1], &[-3, 1]);
        assert_eq!(&f * &f.inv().unwrap(), RF::one());
        assert_eq!(&rf(&[-1, 1], &[1, 1]) * &rf(&[1, 1], &[-1, 1]), RF::one());
        assert!(f.checked_div(&RF::zero()).is_err());
        assert!(RF::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn laurent_examples() {
        let s = rf(&[1], &[0, 1]).laurent_at(&Point::Finite(qi(0)), 0);
        assert_eq!(s.val(), -1);
        assert_eq!(s.coeffs_range(-1, 0), alloc::vec![qi(1), qi(0)]);
        let z2 = rf(&[0, 0, 1], &[1]).laurent_at(&Point::Infinity, 0);
        assert_eq!((z2.val(), z2.coeff(-2)), (-2, qi(1)));
        let g = rf(&[1], &[0, -1, 1]).laurent_at(&Point::Finite(qi(0)), 3);
        assert_eq!(g.coeffs_range(-1, 3), alloc::vec![qi(-1); 5]);
    }

    #[test]
    fn residue_examples() {
        let p0 = Point::Finite(qi(0));
        assert_eq!(rf(&[1], &[0, 1]).residue(&p0), qi(1));
        assert_eq!(rf(&[1], &[0, 0, 1]).residue(&p0), qi(0));
        assert_eq!(rf(&[3, 2], &[-2, 1, 1]).residue(&Point::Finite(qi(1))), q(5, 3));
        assert_eq!(rf(&[1], &[0, 1]).residue(&Point::Infinity), qi(-1));
    }

    #[test]
    fn composition() {
        let f = rf(&[1], &[0, 1]);
        let g = rf(&[0, 0, 1], &[1, 1]);
        let h = f.compose(&g);
        assert_eq!(h, rf(&[1, 1], &[0, 0, 1]));
        assert_eq!(rf(&[2, 0, 1], &[1]).compose(&RF::z()), rf(&[2, 0, 1], &[1]));
    }
}
