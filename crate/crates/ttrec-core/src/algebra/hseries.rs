use alloc::vec::Vec;

use super::rational::Q;
use super::ring::{Field, Ring};
use crate::{Error, Result};

/// Truncated ℏ-series Σ_{e=low}^{k} c_e ℏ^e over a ring T.
#[derive(Clone, Debug, PartialEq)]
pub struct HSeries<T> {
    low: i64,
    c: Vec<T>,
}

impl<T: Ring> HSeries<T> {
    /// Coefficients for ℏ^low, ℏ^{low+1}, ...; truncation order is low + len − 1.
    pub fn new(low: i64, c: Vec<T>) -> Self {
        assert!(!c.is_empty(), "ℏ-series needs at least one coefficient");
        HSeries { low, c }
    }
    pub fn constant(a: T, k: i64) -> Self {
        let z = a.zero_like();
        let mut c = alloc::vec![a];
        c.extend((0..k).map(|_| z.clone()));
        HSeries { low: 0, c }
    }
    pub fn low(&self) -> i64 {
        self.low
    }
    /// Truncation order K.
    pub fn k(&self) -> i64 {
        self.low + self.c.len() as i64 - 1
    }
    pub fn coeffs(&self) -> &[T] {
        &self.c
    }
    fn zero_t(&self) -> T {
        self.c[0].zero_like()
    }
    /// Coefficient of ℏ^e; None beyond the truncation order.
    pub fn coef(&self, e: i64) -> Option<T> {
        if e > self.k() {
            None
        } else if e < self.low {
            Some(self.zero_t())
        } else {
            Some(self.c[(e - self.low) as usize].clone())
        }
    }
    pub fn truncate(&self, k: i64) -> Self {
        let k = k.min(self.k());
        assert!(k >= self.low, "truncation below lowest exponent");
        HSeries { low: self.low, c: self.c[..(k - self.low + 1) as usize].to_vec() }
    }
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> HSeries<U> {
        HSeries { low: self.low, c: self.c.iter().map(f).collect() }
    }
    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<HSeries<U>> {
        Ok(HSeries { low: self.low, c: self.c.iter().map(f).collect::<Result<_>>()? })
    }
    /// Multiply by ℏ^m.
    pub fn shift(&self, m: i64) -> Self {
        HSeries { low: self.low + m, c: self.c.clone() }
    }
    pub fn add(&self, o: &Self) -> Self {
        let low = self.low.min(o.low);
        let k = self.k().min(o.k());
        let c = (low..=k).map(|e| self.coef(e).unwrap().plus(&o.coef(e).unwrap())).collect();
        HSeries { low, c }
    }
    pub fn neg(&self) -> Self {
        self.map(|a| a.negated())
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn scale(&self, a: &Q) -> Self {
        self.map(|x| x.scaled(a))
    }
    /// Product, known through min(k_a + low_b, k_b + low_a).
    pub fn mul(&self, o: &Self) -> Self {
        let low = self.low + o.low;
        let k = (self.k() + o.low).min(o.k() + self.low);
        let c = (low..=k)
            .map(|e| {
                let mut acc: Option<T> = None;
                for i in self.low..=self.k() {
                    let j = e - i;
                    if j < o.low || j > o.k() {
                        continue;
                    }
                    let t = self.c[(i - self.low) as usize].times(&o.c[(j - o.low) as usize]);
                    acc = Some(match acc {
                        None => t,
                        Some(a) => a.plus(&t),
                    });
                }
                acc.unwrap_or_else(|| self.zero_t())
            })
            .collect();
        HSeries { low, c }
    }
    /// Raise the lowest exponent by dropping vanishing leading terms.
    pub fn trim_low(&self) -> Self {
        let mut s = self.clone();
        while s.c.len() > 1 && s.c[0].vanishes() {
            s.c.remove(0);
            s.low += 1;
        }
        s
    }
}

impl<T: Field> HSeries<T> {
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.c[0].recip().ok_or(Error::NotInvertible)?;
        let n = self.c.len();
        let mut b: Vec<T> = Vec::with_capacity(n);
        for m in 0..n {
            let mut s = if m == 0 { a0.one_like() } else { a0.zero_like() };
            for j in 1..=m {
                s = s.minus(&self.c[j].times(&b[m - j]));
            }
            b.push(a0.times(&s));
        }
        Ok(HSeries { low: -self.low, c: b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::qi;

    #[test]
    fn examples() {
        let a = HSeries::new(0, alloc::vec![qi(1), qi(3), qi(0)]);
        let b = HSeries::new(0, alloc::vec![qi(1), qi(-3), qi(0)]);
        assert_eq!(a.mul(&b).coeffs(), &[qi(1), qi(0), qi(-9)]);
        let w = HSeries::new(-1, alloc::vec![qi(1), qi(2)]);
        let h = HSeries::new(1, alloc::vec![qi(1), qi(0), qi(0)]);
        assert_eq!(w.mul(&h).low(), 0);
        let f = HSeries::new(0, alloc::vec![qi(1), qi(1), qi(2)]);
        assert_eq!(f.mul(&f).coeffs(), &[qi(1), qi(2), qi(5)]);
        assert!(HSeries::new(0, alloc::vec![qi(0), qi(1)]).inv().is_err());
        let i = f.inv().unwrap();
        assert_eq!(i.mul(&f).coeffs(), &[qi(1), qi(0), qi(0)]);
    }

    #[test]
    fn mixed_truncation_takes_minimum() {
        let a = HSeries::new(0, alloc::vec![qi(1), qi(1), qi(1), qi(1)]);
        let b = HSeries::new(0, alloc::vec![qi(1), qi(1)]);
        assert_eq!(a.add(&b).k(), 1);
        assert_eq!(a.mul(&b).k(), 1);
    }
}

impl<T: Ring> Ring for HSeries<T> {
    fn zero_like(&self) -> Self {
        self.map(|a| a.zero_like())
    }
    fn one_like(&self) -> Self {
        let z = self.c[0].zero_like();
        let k = self.k().max(0);
        let mut c = alloc::vec![z.one_like()];
        c.extend((0..k).map(|_| z.clone()));
        HSeries { low: 0, c }
    }
    fn vanishes(&self) -> bool {
        self.c.iter().all(|a| a.vanishes())
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
