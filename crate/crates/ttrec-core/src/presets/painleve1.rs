//! The (3,2) model as the isomonodromic Painlevé I system, with its ℏ-corrections.
//!
//! R = [[0, 1], [x + 2u, 0]], L = [[ℏu′/2, x − u], [(x − u)(x + 2u) + ℏ²u″/2, −ℏu′/2]] with ℏ²u″ = 6u² + 2t,
//! expanded around u₀ = √(−t/3).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::rational::pow_q;
use crate::algebra::{Matrix, Poly, Q, RF};

/// Laurent polynomial in u₀; d/dt u₀ = −1/(6u₀).
#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct U(BTreeMap<i32, Q>);

impl U {
    fn mono(c: Q, e: i32) -> U {
        let mut u = U::default();
        u.push(e, c);
        u
    }
    fn push(&mut self, e: i32, c: Q) {
        let v = self.0.entry(e).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&e);
        }
    }
    fn add(&self, o: &U) -> U {
        let mut r = self.clone();
        for (e, c) in &o.0 {
            r.push(*e, c.clone());
        }
        r
    }
    fn scale(&self, a: &Q) -> U {
        let mut r = U::default();
        for (e, c) in &self.0 {
            r.push(*e, c * a);
        }
        r
    }
    fn mul(&self, o: &U) -> U {
        let mut r = U::default();
        for (e, c) in &self.0 {
            for (f, d) in &o.0 {
                r.push(e + f, c * d);
            }
        }
        r
    }
    fn d(&self) -> U {
        let mut r = U::default();
        for (e, c) in &self.0 {
            r.push(e - 2, -c * Q::from_integer((*e).into()) / Q::from_integer(6.into()));
        }
        r
    }
    fn at(&self, u0: &Q) -> Q {
        self.0.iter().map(|(e, c)| c * pow_q(u0, *e)).sum()
    }
    #[cfg(test)]
    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// u_{2m} for m ≤ m_max, from 12u₀u_{2m} = u″_{2m−2} − 6 Σ_{0<i<m} u_{2i}u_{2m−2i}.
fn u_series(m_max: usize) -> Vec<U> {
    let mut us = alloc::vec![U::mono(Q::from_integer(1.into()), 1)];
    for m in 1..=m_max {
        let mut s = us[m - 1].d().d();
        for i in 1..m {
            s = s.add(&us[i].mul(&us[m - i]).scale(&Q::from_integer((-6).into())));
        }
        us.push(s.mul(&U::mono(Q::new(1.into(), 12.into()), -1)));
    }
    us
}

/// Polynomial in x with U coefficients.
pub(crate) type XPoly = Vec<U>;

#[cfg(test)]
fn xp_add(a: &XPoly, b: &XPoly) -> XPoly {
    (0..a.len().max(b.len())).map(|i| a.get(i).cloned().unwrap_or_default().add(&b.get(i).cloned().unwrap_or_default())).collect()
}

#[cfg(test)]
fn xp_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut r = alloc::vec![U::default(); (a.len() + b.len()).saturating_sub(1)];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] = r[i + j].add(&x.mul(y));
        }
    }
    r
}

#[cfg(test)]
fn xp_neg(a: &XPoly) -> XPoly {
    a.iter().map(|u| u.scale(&Q::from_integer((-1).into()))).collect()
}

pub(crate) type XMat = [XPoly; 4];

fn one() -> U {
    U::mono(Q::from_integer(1.into()), 0)
}

/// L⁽ʲ⁾ and R⁽ʲ⁾ for j ≤ k as 2×2 matrices [a, b, c, d] of x-polynomials.
pub(crate) fn orders(k: usize) -> (Vec<XMat>, Vec<XMat>) {
    let us = u_series(k / 2 + 1);
    let half = Q::new(1.into(), 2.into());
    let uu = |m: usize| -> U { us.get(m).cloned().unwrap_or_default() };
    let mut l = Vec::new();
    let mut r = Vec::new();
    for j in 0..=k {
        let m = j / 2;
        if j % 2 == 1 {
            let a = uu(m).d().scale(&half);
            l.push([alloc::vec![a.clone()], Vec::new(), Vec::new(), alloc::vec![a.scale(&-Q::from_integer(1.into()))]]);
            r.push([Vec::new(), Vec::new(), Vec::new(), Vec::new()]);
            continue;
        }
        let delta = if m == 0 { one() } else { U::default() };
        let b = alloc::vec![uu(m).scale(&-Q::from_integer(1.into())), delta.clone()];
        let mut sq = U::default();
        for i in 0..=m {
            sq = sq.add(&uu(i).mul(&uu(m - i)));
        }
        let mut c0 = sq.scale(&Q::from_integer((-2).into()));
        if m >= 1 {
            c0 = c0.add(&uu(m - 1).d().d().scale(&half));
        }
        let c = alloc::vec![c0, uu(m), delta.clone()];
        l.push([Vec::new(), b, c, Vec::new()]);
        r.push([Vec::new(), alloc::vec![delta.clone()], alloc::vec![uu(m).scale(&Q::from_integer(2.into())), delta], Vec::new()]);
    }
    (l, r)
}

#[cfg(test)]
fn mat_mul(a: &XMat, b: &XMat) -> XMat {
    [
        xp_add(&xp_mul(&a[0], &b[0]), &xp_mul(&a[1], &b[2])),
        xp_add(&xp_mul(&a[0], &b[1]), &xp_mul(&a[1], &b[3])),
        xp_add(&xp_mul(&a[2], &b[0]), &xp_mul(&a[3], &b[2])),
        xp_add(&xp_mul(&a[2], &b[1]), &xp_mul(&a[3], &b[3])),
    ]
}

#[cfg(test)]
/// Coefficients of ℏʲ in ℏ∂ₜL − ℏ∂ₓR + [L, R] for 1 ≤ j ≤ k; all vanish identically in u₀.
pub(crate) fn lax_defect(k: usize) -> Vec<XMat> {
    let (l, r) = orders(k);
    (0..=k)
        .map(|j| {
            let mut out: XMat = Default::default();
            if j >= 1 {
                for e in 0..4 {
                    out[e] = l[j - 1][e].iter().map(U::d).collect();
                    let dr: XPoly = r[j - 1][e].iter().enumerate().skip(1).map(|(i, u)| u.scale(&Q::from_integer((i as i64).into()))).collect();
                    out[e] = xp_add(&out[e], &xp_neg(&dr));
                }
            }
            for i in 0..=j {
                let lr = mat_mul(&l[i], &r[j - i]);
                let rl = mat_mul(&r[j - i], &l[i]);
                for e in 0..4 {
                    out[e] = xp_add(&out[e], &xp_add(&lr[e], &xp_neg(&rl[e])));
                }
            }
            out
        })
        .collect()
}

fn to_rf(p: &XPoly, u0: &Q, shift: &Q) -> RF {
    let c: Vec<Q> = p.iter().map(|u| u.at(u0)).collect();
    RF::poly(Poly::new(c).compose(&Poly::new(alloc::vec![-shift.clone(), Q::from_integer(1.into())])))
}

/// L⁽⁰..ᵏ⁾ and R⁽⁰..ᵏ⁾ at u₀ in the coordinate ξ = x + shift.
pub fn painleve1_orders(u0: &Q, shift: &Q, k: usize) -> (Vec<Matrix<RF>>, Vec<Matrix<RF>>) {
    let (l, r) = orders(k);
    let conv = |m: &XMat| Matrix::from_rows(alloc::vec![
        alloc::vec![to_rf(&m[0], u0, shift), to_rf(&m[1], u0, shift)],
        alloc::vec![to_rf(&m[2], u0, shift), to_rf(&m[3], u0, shift)],
    ]);
    (l.iter().map(conv).collect(), r.iter().map(conv).collect())
}
