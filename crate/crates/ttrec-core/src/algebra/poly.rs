use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{divisors, fmt_q, Q};

/// Dense univariate polynomial over ℚ, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }
    pub fn one() -> Self {
        Self::constant(Q::one())
    }
    pub fn constant(a: Q) -> Self {
        Self::new(vec![a])
    }
    /// The coordinate z.
    pub fn z() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }
    pub fn monomial(a: Q, k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = a;
        Self::new(c)
    }
    /// z − a
    pub fn linear_root(a: &Q) -> Self {
        Self::new(vec![-a.clone(), Q::one()])
    }
    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Q::from_integer(BigInt::from(x))).collect())
    }
    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }
    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    /// Degree with −1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }
    pub fn lc(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }
    pub fn scale(&self, a: &Q) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Poly { c: self.c.iter().map(|x| x * a).collect() }
    }
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().recip())
    }
    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(k, a)| a * Q::from_integer(BigInt::from(k))).collect())
    }
    /// Multiply by z^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().recip();
        let mut r = self.c.clone();
        let mut qv = vec![Q::zero(); r.len() - dd];
        for i in (0..qv.len()).rev() {
            let t = &r[i + dd] * &inv;
            if !t.is_zero() {
                for j in 0..=dd {
                    let s = &t * &d.c[j];
                    r[i + j] -= s;
                }
            }
            qv[i] = t;
        }
        r.truncate(dd);
        (Self::new(qv), Self::new(r))
    }
    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }
    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.monic(), b.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }
    /// p(q(z))
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Self::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * q) + &Self::constant(a.clone());
        }
        acc
    }
    /// p(a + t) as a polynomial in t.
    pub fn taylor_shift(&self, a: &Q) -> Poly {
        self.compose(&Self::new(vec![a.clone(), Q::one()]))
    }
    /// z^n p(1/z) for n ≥ deg p.
    pub fn reversed(&self, n: usize) -> Poly {
        let mut c = vec![Q::zero(); n + 1];
        for (k, a) in self.c.iter().enumerate() {
            c[n - k] = a.clone();
        }
        Self::new(c)
    }
    /// Valuation at 0 (multiplicity of the root z = 0); None for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }
    /// Primitive integer coefficient vector with positive leading coefficient.
    pub fn primitive(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self.c.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
        let mut v: Vec<BigInt> = self.c.iter().map(|a| (a * Q::from_integer(l.clone())).to_integer()).collect();
        let g = v.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
        let sgn = if v.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        for a in v.iter_mut() {
            *a = &*a / &g * &sgn;
        }
        v
    }
    pub fn squarefree(&self) -> Poly {
        let g = Poly::gcd(self, &self.derivative());
        self.exact_div(&g).monic()
    }
    /// Rational roots with multiplicities, ascending.
    pub fn rational_roots(&self) -> Vec<(Q, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let mut p = self.monic();
        if let Some(v) = p.valuation() {
            if v > 0 {
                out.push((Q::zero(), v));
                p = Poly::new(p.c[v..].to_vec());
            }
        }
        if !p.is_constant() {
            let sf = p.squarefree();
            let ints = sf.primitive();
            let a0 = &ints[0];
            let an = ints.last().unwrap();
            let nums = divisors(a0);
            let dens = divisors(an);
            let mut cand: Vec<Q> = Vec::new();
            for dn in &dens {
                for nm in &nums {
                    for s in [1i32, -1] {
                        let r = Q::new(nm * BigInt::from(s), dn.clone());
                        if !cand.contains(&r) && sf.eval(&r).is_zero() {
                            cand.push(r);
                        }
                    }
                }
            }
            for r in cand {
                let lin = Poly::linear_root(&r);
                let mut m = 0;
                loop {
                    let (qq, rr) = p.divrem(&lin);
                    if !rr.is_zero() {
                        break;
                    }
                    p = qq;
                    m += 1;
                }
                out.push((r, m));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
    /// Remaining factor after removing all rational roots.
    pub fn irrational_part(&self) -> Poly {
        let mut p = self.monic();
        for (r, m) in self.rational_roots() {
            let lin = Poly::linear_root(&r);
            for _ in 0..m {
                p = p.exact_div(&lin);
            }
        }
        p
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_q(a))?,
                1 => write!(f, "({})z", fmt_q(a))?,
                _ => write!(f, "({})z^{}", fmt_q(a), k)?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{q, qi};

    #[test]
    fn gcd_and_division() {
        let a = Poly::from_i64(&[-1, 0, 1]);
        let b = Poly::from_i64(&[1, 1]);
        assert_eq!(Poly::gcd(&a, &b), b);
        let (qq, r) = a.divrem(&b);
        assert_eq!(qq, Poly::from_i64(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn roots_with_multiplicity() {
        let p = &(&Poly::from_i64(&[-2, 1]) * &Poly::from_i64(&[-2, 1])) * &Poly::new(alloc::vec![q(1, 3), qi(1)]);
        let p = &p * &Poly::from_i64(&[1, 0, 1]);
        let r = p.rational_roots();
        assert_eq!(r, alloc::vec![(q(-1, 3), 1), (qi(2), 2)]);
        assert_eq!(p.irrational_part(), Poly::from_i64(&[1, 0, 1]));
        let z3 = Poly::from_i64(&[0, 0, 0, 1]);
        assert_eq!(z3.rational_roots(), alloc::vec![(qi(0), 3)]);
    }

    #[test]
    fn shift_and_reverse() {
        let p = Poly::from_i64(&[1, 2, 3]);
        assert_eq!(p.taylor_shift(&qi(1)).eval(&qi(0)), qi(6));
        assert_eq!(p.reversed(2), Poly::from_i64(&[3, 2, 1]));
        assert_eq!(p.derivative(), Poly::from_i64(&[2, 6]));
    }
}
