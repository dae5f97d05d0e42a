use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{height, Q};
use super::ring::{Field, Ring};
use crate::{Error, Result};

/// Precision marker for exactly known series.
pub const EXACT: i64 = i64::MAX / 8;

/// Truncated Laurent series Σ c_i t^{val+i}, known for exponents ≤ `prec`.
/// Coefficients past the stored vector are zero up to `prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    val: i64,
    c: Vec<Q>,
    prec: i64,
}

impl Series {
    pub fn new(val: i64, c: Vec<Q>, prec: i64) -> Self {
        let mut s = Series { val, c, prec };
        s.normalize();
        s
    }
    fn normalize(&mut self) {
        let keep = (self.prec - self.val + 1).max(0);
        if (self.c.len() as i64) > keep {
            self.c.truncate(keep as usize);
        }
        let lead = self.c.iter().position(|a| !a.is_zero());
        match lead {
            Some(k) => {
                if k > 0 {
                    self.c.drain(..k);
                    self.val += k as i64;
                }
                while self.c.last().is_some_and(|a| a.is_zero()) {
                    self.c.pop();
                }
            }
            None => {
                self.c.clear();
                self.val = self.prec.saturating_add(1);
            }
        }
    }
    pub fn zero(prec: i64) -> Self {
        Series { val: prec.saturating_add(1), c: Vec::new(), prec }
    }
    pub fn constant(a: Q, prec: i64) -> Self {
        Self::new(0, vec![a], prec)
    }
    pub fn from_poly(p: &Poly, prec: i64) -> Self {
        Self::new(0, p.coeffs().to_vec(), prec)
    }
    /// The variable t itself, exact.
    pub fn var() -> Self {
        Self::new(1, vec![Q::one()], EXACT)
    }
    pub fn val(&self) -> i64 {
        self.val
    }
    pub fn prec(&self) -> i64 {
        self.prec
    }
    pub fn is_exact(&self) -> bool {
        self.prec >= EXACT / 2
    }
    /// No known nonzero coefficient.
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn coeff(&self, e: i64) -> Q {
        if e < self.val || e > self.prec {
            return Q::zero();
        }
        self.c.get((e - self.val) as usize).cloned().unwrap_or_else(Q::zero)
    }
    /// Coefficients for exponents lo..=hi (zero padded).
    pub fn coeffs_range(&self, lo: i64, hi: i64) -> Vec<Q> {
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }
    pub fn residue(&self) -> Q {
        self.coeff(-1)
    }
    pub fn with_prec(&self, prec: i64) -> Self {
        Self::new(self.val, self.c.clone(), prec.min(self.prec))
    }
    /// Σ_{e<0} c_e t^e
    pub fn polar_part(&self) -> Vec<(i64, Q)> {
        (self.val..0).map(|e| (e, self.coeff(e))).filter(|(_, a)| !a.is_zero()).collect()
    }
    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        Series { val: self.val + k, c: self.c.clone(), prec: self.prec.saturating_add(k) }
    }
    /// t → a t
    pub fn scale_var(&self, a: &Q) -> Self {
        let c = self.c.iter().enumerate().map(|(i, x)| x * super::rational::pow_q(a, (self.val + i as i64) as i32)).collect();
        Self::new(self.val, c, self.prec)
    }
    pub fn scale(&self, a: &Q) -> Self {
        Self::new(self.val, self.c.iter().map(|x| x * a).collect(), self.prec)
    }
    pub fn derivative(&self) -> Self {
        let c = self.c.iter().enumerate().map(|(i, x)| x * Q::from_integer(BigInt::from(self.val + i as i64))).collect();
        Self::new(self.val - 1, c, self.prec.saturating_sub(1))
    }
    /// Antiderivative without constant; fails on a nonzero t^{-1} term.
    pub fn integrate(&self) -> Result<Self> {
        if !self.residue().is_zero() {
            return Err(Error::Invalid("logarithmic term in series integration".into()));
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let e = self.val + i as i64 + 1;
                if e == 0 {
                    Q::zero()
                } else {
                    x / Q::from_integer(BigInt::from(e))
                }
            })
            .collect();
        Ok(Self::new(self.val + 1, c, self.prec.saturating_add(1)))
    }
    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let val = self.val.min(o.val);
        let val = match (self.is_zero(), o.is_zero()) {
            (true, true) => return Self::zero(prec),
            (true, false) => o.val,
            (false, true) => self.val,
            _ => val,
        };
        let top_of = |s: &Self| if s.is_zero() { i64::MIN } else { s.val + s.c.len() as i64 - 1 };
        let hi = top_of(self).max(top_of(o)).min(prec);
        if hi < val {
            return Self::zero(prec);
        }
        Self::new(val, (val..=hi).map(|e| self.coeff(e) + o.coeff(e)).collect(), prec)
    }
    pub fn neg(&self) -> Self {
        Series { val: self.val, c: self.c.iter().map(|x| -x).collect(), prec: self.prec }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let prec = if self.is_zero() || o.is_zero() {
            // zero-known factor: precision limited by the other factor's valuation
            let p1 = self.prec.saturating_add(if o.is_zero() { o.prec + 1 } else { o.val });
            let p2 = o.prec.saturating_add(if self.is_zero() { self.prec + 1 } else { self.val });
            p1.min(p2)
        } else {
            self.prec.saturating_add(o.val).min(o.prec.saturating_add(self.val))
        };
        if self.is_zero() || o.is_zero() {
            return Self::zero(prec.min(EXACT));
        }
        let prec = prec.min(EXACT);
        let val = self.val + o.val;
        let n = ((self.c.len() + o.c.len() - 1) as i64).min(prec - val + 1).max(0) as usize;
        let mut c = vec![Q::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            if i >= n || a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                c[i + j] += a * b;
            }
        }
        Self::new(val, c, prec)
    }
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let rel = self.prec - self.val;
        let n = if self.is_exact() && self.c.len() == 1 { 1 } else { (rel + 1).max(0) as usize };
        if self.is_exact() && self.c.len() > 1 {
            return Err(Error::Invalid("inverse of an exact non-monomial series needs a precision".into()));
        }
        let a0inv = self.c[0].recip();
        let mut b = vec![Q::zero(); n];
        for k in 0..n {
            let mut s = if k == 0 { Q::one() } else { Q::zero() };
            for j in 1..=k.min(self.c.len().saturating_sub(1)) {
                s -= &self.c[j] * &b[k - j];
            }
            b[k] = s * &a0inv;
        }
        let prec = if self.is_exact() { EXACT } else { -self.val + rel };
        Ok(Self::new(-self.val, b, prec))
    }
    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = Series::constant(Q::one(), EXACT);
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }
    /// f(s(t)) for s with positive valuation.
    pub fn compose(&self, s: &Self) -> Result<Self> {
        if s.is_zero() || s.val < 1 {
            return Err(Error::Invalid("composition needs an inner series of positive valuation".into()));
        }
        let pf = self.prec - self.val;
        let target = s.prec.min(s.val.saturating_mul(pf.saturating_add(1)).saturating_sub(1));
        let mut acc = Series::zero(target);
        for k in (0..self.c.len()).rev() {
            acc = acc.mul(s).add(&Series::constant(self.c[k].clone(), EXACT)).with_prec(target);
        }
        let lead = if self.val < 0 {
            let si = s.inv()?;
            si.pow(-self.val)?
        } else {
            s.pow(self.val)?
        };
        Ok(acc.mul(&lead))
    }
    /// Compositional inverse of s = t + O(t²).
    pub fn revert(&self) -> Result<Self> {
        if self.val != 1 || self.c[0] != Q::one() {
            return Err(Error::Invalid("reversion needs s = t + O(t^2)".into()));
        }
        let n = self.prec;
        let mut v = vec![Q::zero(), Q::one()];
        for k in 2..=n {
            v.push(Q::zero());
            let cur = Series::new(0, v.clone(), n);
            let e = self.compose(&cur)?.coeff(k);
            v[k as usize] = -e;
        }
        Ok(Series::new(0, v, n))
    }
    pub fn truncate_exact(&self) -> Poly {
        assert!(self.val >= 0);
        let mut c = vec![Q::zero(); self.val as usize];
        c.extend(self.c.iter().cloned());
        Poly::new(c)
    }
    pub fn stored(&self) -> &[Q] {
        &self.c
    }
}

impl Ring for Series {
    fn zero_like(&self) -> Self {
        Series::zero(EXACT)
    }
    fn one_like(&self) -> Self {
        Series::constant(Q::one(), EXACT)
    }
    fn vanishes(&self) -> bool {
        Series::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

impl Field for Series {
    fn recip(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn weight(&self) -> u64 {
        if self.is_zero() {
            return u64::MAX;
        }
        ((self.val + 1000) as u64) << 20 | height(&self.c[0]).min(1 << 19)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{q, qi};

    fn geom(n: i64) -> Series {
        // 1/(1 - t)
        Series::new(0, alloc::vec![qi(1), qi(-1)], EXACT).with_prec(n).inv().unwrap()
    }

    #[test]
    fn inverse_of_one_minus_t() {
        let g = geom(5);
        assert_eq!(g.prec(), 5);
        for e in 0..=5 {
            assert_eq!(g.coeff(e), qi(1));
        }
    }

    #[test]
    fn compose_and_revert() {
        let s = Series::new(1, alloc::vec![qi(1), qi(1)], 8); // t + t^2
        let r = s.revert().unwrap();
        let id = s.compose(&r).unwrap();
        assert_eq!(id.coeff(1), qi(1));
        for e in 2..=8 {
            assert_eq!(id.coeff(e), qi(0), "e = {e}");
        }
        // Catalan-type coefficients: r = t - t^2 + 2t^3 - 5t^4
        assert_eq!(r.coeff(4), qi(-5));
    }

    #[test]
    fn laurent_products_track_precision() {
        let a = Series::new(-1, alloc::vec![qi(1), qi(2)], 3);
        let b = Series::new(2, alloc::vec![qi(1)], 4);
        let c = a.mul(&b);
        assert_eq!(c.val(), 1);
        assert_eq!(c.prec(), 3);
        let d = a.derivative();
        assert_eq!(d.coeff(-2), qi(-1));
        assert!(a.integrate().is_err());
        let e = Series::new(-2, alloc::vec![q(1, 2)], 5).integrate().unwrap();
        assert_eq!(e.coeff(-1), q(-1, 2));
    }
}
