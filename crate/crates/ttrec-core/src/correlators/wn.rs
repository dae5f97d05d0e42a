use alloc::vec::Vec;

use crate::algebra::series::EXACT;
use crate::algebra::{Field, HSeries, Matrix, Point, Ring, Series, Q, RF};
use crate::{Error, Result};

use super::mseries::MSeries;

/// One insertion point: x, y and the matrices L⁽ᵏ⁾(x), M⁽ᵏ⁾(x.e_a) with entries in T.
#[derive(Clone, Debug, PartialEq)]
pub struct Slot<T> {
    pub x: T,
    pub y: T,
    pub l: Vec<Matrix<T>>,
    pub m: Vec<Matrix<T>>,
}

fn eval_rf(f: &RF, z: &Q) -> Result<Q> {
    f.eval(z).ok_or_else(|| Error::Singular(alloc::format!("pole at z = {}", crate::algebra::rational::fmt_q(z))))
}

impl Slot<Q> {
    pub fn at(ms: &MSeries, z: &Q) -> Result<Self> {
        Ok(Slot {
            x: eval_rf(&ms.x, z)?,
            y: eval_rf(&ms.y, z)?,
            l: ms.l.iter().map(|m| m.try_map(|e| eval_rf(e, z))).collect::<Result<_>>()?,
            m: ms.m.iter().map(|m| m.try_map(|e| eval_rf(e, z))).collect::<Result<_>>()?,
        })
    }
}

impl Slot<RF> {
    /// The free slot, as functions of z.
    pub fn symbolic(ms: &MSeries) -> Self {
        Slot { x: ms.x.clone(), y: ms.y.clone(), l: ms.l.clone(), m: ms.m.clone() }
    }
    /// A pinned point lifted to constants in ℚ(z).
    pub fn constant(p: &Slot<Q>) -> Self {
        let c = |a: &Q| RF::constant(a.clone());
        Slot { x: c(&p.x), y: c(&p.y), l: p.l.iter().map(|m| m.map(c)).collect(), m: p.m.iter().map(|m| m.map(c)).collect() }
    }
}

impl Slot<Series> {
    /// The point on the sheet through z0 lying over x(z0) + cδ, expanded in δ through δ^prec.
    pub fn displaced(ms: &MSeries, z0: &Q, c: &Q, prec: i64) -> Result<Self> {
        let p = Point::Finite(z0.clone());
        let x0 = eval_rf(&ms.x, z0)?;
        let xs = Series::new(0, alloc::vec![x0.clone(), c.clone()], prec);
        if c == &Q::from_integer(0.into()) {
            let s = Slot::at(ms, z0)?;
            let k = |a: &Q| Series::constant(a.clone(), EXACT);
            return Ok(Slot { x: xs, y: k(&s.y), l: s.l.iter().map(|m| m.map(k)).collect(), m: s.m.iter().map(|m| m.map(k)).collect() });
        }
        let a1 = eval_rf(&ms.xprime, z0)?;
        if a1 == Q::from_integer(0.into()) {
            return Err(Error::Singular("displaced point at a branchpoint".into()));
        }
        // x(z0 + w) − x0 = a1 f(w), f(w) = w + O(w²); w(δ) = f⁻¹(cδ/a1)
        let f = (&ms.x - &RF::constant(x0)).laurent_at(&p, prec + 1).scale(&a1.recip());
        let w = f.revert()?.compose(&Series::new(1, alloc::vec![c / &a1], EXACT))?;
        let lift = |e: &RF| e.laurent_at(&p, prec).compose(&w);
        let lm = |m: &Matrix<RF>| m.try_map(lift);
        Ok(Slot {
            x: xs,
            y: lift(&ms.y)?,
            l: ms.l.iter().map(lm).collect::<Result<_>>()?,
            m: ms.m.iter().map(lm).collect::<Result<_>>()?,
        })
    }
}

/// Set partitions of `items`, each block listed in ascending order.
pub fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else { return alloc::vec![Vec::new()] };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.insert(0, alloc::vec![first]);
        out.push(q);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return alloc::vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let h = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, h);
            out.push(p);
        }
    }
    out
}

fn mask_items(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|i| mask >> i & 1 == 1).collect()
}

/// Connected and disconnected correlators of a fixed set of slots, memoized by subset.
pub struct Correlators<T> {
    slots: Vec<Slot<T>>,
    /// W₁ through ℏ^{kmax}; W_n (n ≥ 2) through ℏ^{kmax + 1}.
    kmax: i64,
    cache: Vec<Option<HSeries<T>>>,
}

impl<T: Field> Correlators<T> {
    pub fn new(slots: Vec<Slot<T>>, kmax: i64) -> Result<Self> {
        if slots.is_empty() || slots.len() > 12 {
            return Err(Error::Invalid("between 1 and 12 insertion points".into()));
        }
        let need = (kmax + 2) as usize;
        if slots.iter().any(|s| s.m.len() < need || s.l.len() < need) {
            return Err(Error::Invalid(alloc::format!("M-series shorter than order {}", kmax + 1)));
        }
        let n = slots.len();
        Ok(Correlators { slots, kmax, cache: alloc::vec![None; 1 << n] })
    }
    pub fn slots(&self) -> &[Slot<T>] {
        &self.slots
    }
    fn zero(&self) -> T {
        self.slots[0].x.zero_like()
    }
    fn mseries(&self, i: usize, top: i64) -> HSeries<Matrix<T>> {
        HSeries::new(0, self.slots[i].m[..=top as usize].to_vec())
    }
    /// ℏ⁻¹ Tr(L M): orders −1..=kmax.
    fn w1(&self, i: usize) -> HSeries<T> {
        let s = &self.slots[i];
        let c = (-1..=self.kmax)
            .map(|k| {
                let mut acc = self.zero();
                for l in 0..=(k + 1) as usize {
                    acc = acc.plus(&s.l[l].mat_mul(&s.m[(k + 1) as usize - l]).trace());
                }
                acc
            })
            .collect();
        HSeries::new(-1, c)
    }
    /// (−1)^{n−1} Σ over cyclic orders of Tr Π M / Π (x_σ(i+1) − x_σ(i)).
    fn wn(&self, items: &[usize]) -> Result<HSeries<T>> {
        let top = self.kmax + 1;
        let n = items.len();
        let mut acc = HSeries::constant(self.zero(), top);
        for tail in permutations(&items[1..]) {
            let mut order = alloc::vec![items[0]];
            order.extend(tail);
            let mut prod = self.mseries(order[0], top);
            let mut den = self.zero().one_like();
            for w in 0..n {
                if w > 0 {
                    prod = prod.mul(&self.mseries(order[w], top));
                }
                let dx = self.slots[order[(w + 1) % n]].x.minus(&self.slots[order[w]].x);
                den = den.times(&dx);
            }
            let inv = den.recip().ok_or(Error::CoincidingPoints)?;
            acc = acc.add(&prod.map(|m| m.trace().times(&inv)));
        }
        Ok(if n % 2 == 0 { acc.neg() } else { acc })
    }
    /// Connected W_{|S|}(S), S a bitmask of slots.
    pub fn connected(&mut self, mask: usize) -> Result<HSeries<T>> {
        if let Some(w) = &self.cache[mask] {
            return Ok(w.clone());
        }
        let items = mask_items(mask);
        let w = if items.len() == 1 { self.w1(items[0]) } else { self.wn(&items)? };
        self.cache[mask] = Some(w.clone());
        Ok(w)
    }
    /// Ŵ₁ = W₁ − ℏ⁻¹y, Ŵ_n = W_n otherwise.
    pub fn hat(&mut self, mask: usize) -> Result<HSeries<T>> {
        let w = self.connected(mask)?;
        if mask.count_ones() != 1 {
            return Ok(w);
        }
        Ok(HSeries::new(0, w.coeffs()[1..].to_vec()))
    }
    fn part(&mut self, mask: usize, hat: bool) -> Result<HSeries<T>> {
        if hat {
            self.hat(mask)
        } else {
            self.connected(mask)
        }
    }
    fn partition_sum(&mut self, parts: Vec<Vec<Vec<usize>>>, hat: bool) -> Result<HSeries<T>> {
        let mut acc: Option<HSeries<T>> = None;
        for p in parts {
            let mut prod: Option<HSeries<T>> = None;
            for block in p {
                let w = self.part(block.iter().fold(0, |m, i| m | 1 << i), hat)?;
                prod = Some(match prod {
                    None => w,
                    Some(x) => x.mul(&w),
                });
            }
            let prod = prod.expect("non-empty partition");
            acc = Some(match acc {
                None => prod,
                Some(a) => a.add(&prod),
            });
        }
        Ok(acc.unwrap_or_else(|| HSeries::constant(self.zero().one_like(), self.kmax)))
    }
    /// W̃ (or the hat variant) over all set partitions of the mask.
    pub fn disconnected(&mut self, mask: usize, hat: bool) -> Result<HSeries<T>> {
        self.partition_sum(set_partitions(&mask_items(mask)), hat)
    }
    /// 𝒲_{|K|,|A|}(K; A): partitions of K ∪ A whose blocks all meet K.
    pub fn partial(&mut self, k: usize, a: usize, hat: bool) -> Result<HSeries<T>> {
        if k & a != 0 {
            return Err(Error::Invalid("K and A overlap".into()));
        }
        if k == 0 {
            let one = self.zero().one_like();
            let z = self.zero();
            return Ok(HSeries::constant(if a == 0 { one } else { z }, self.kmax));
        }
        let parts = set_partitions(&mask_items(k | a)).into_iter().filter(|p| p.iter().all(|b| b.iter().any(|i| k >> i & 1 == 1))).collect();
        self.partition_sum(parts, hat)
    }
}

/// Coefficient of ℏ^k, failing beyond the known truncation.
pub fn coef<T: Ring>(s: &HSeries<T>, k: i64) -> Result<T> {
    s.coef(k).ok_or_else(|| Error::Invalid(alloc::format!("ℏ^{k} beyond the computed truncation {}", s.k())))
}

/// δ⁰ coefficient of a displaced-point value; fails when precision ran out.
pub fn limit(s: &Series) -> Result<Q> {
    if s.prec() < 0 {
        return Err(Error::Invalid("δ-expansion precision exhausted".into()));
    }
    if s.val() < 0 {
        return Err(Error::Check("correlator diverges at coinciding x".into()));
    }
    Ok(s.coeff(0))
}
