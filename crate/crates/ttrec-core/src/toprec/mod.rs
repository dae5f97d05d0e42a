//! Genus-0 Eynard–Orantin recursion as exact tensors in the local pole basis at the ramification points.
//!
//! ω_{g,n} (2g − 2 + n > 0) is stored as Σ c_{(b₁,m₁)…(bₙ,mₙ)} Π φ_{bᵢ,mᵢ}(zᵢ), where
//! φ_{b,m} = ζ_b^{−m} dζ_b in the local coordinate ζ_b = z − b (ζ_∞ = 1/z).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::series::EXACT;
use crate::algebra::{Point, Poly, Series, Q, RF};
use crate::curve::{branchpoints, involution_series, BranchKind, SpectralCurve};
use crate::{Error, Result};

pub type Key = Vec<(usize, usize)>;

#[derive(Clone, Debug, PartialEq)]
pub struct Omega {
    pub g: usize,
    pub n: usize,
    pub terms: BTreeMap<Key, Q>,
}

/// y(z) x'(z), the coefficient of dz in ω_{0,1}.
pub fn omega01(curve: &SpectralCurve) -> RF {
    curve.omega01()
}

/// 1/(z1 − z2)², the coefficient of dz1 dz2 in ω_{0,2}.
pub fn omega02(z1: &Q, z2: &Q) -> Result<Q> {
    crate::curve::bergman(z1, z2)
}

pub fn chi(g: usize, n: usize) -> i64 {
    2 * g as i64 - 2 + n as i64
}

/// (g, n) with 1 ≤ 2g − 2 + n ≤ chi_max, by increasing 2g − 2 + n then g.
pub fn stable_range(chi_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c in 1..=chi_max as i64 {
        for g in 0..=((c + 2) / 2) as usize {
            let n = c + 2 - 2 * g as i64;
            if n >= 1 {
                out.push((g, n as usize));
            }
        }
    }
    out
}

/// Series coefficients indexed by basis keys of a subset of output slots.
#[derive(Clone, Debug)]
struct STensor {
    slots: Vec<usize>,
    terms: BTreeMap<Key, Series>,
}

impl STensor {
    fn scalar(s: Series) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), s);
        STensor { slots: Vec::new(), terms }
    }
    fn min_val(&self) -> i64 {
        self.terms.values().filter(|s| !s.is_zero()).map(|s| s.val()).min().unwrap_or(0)
    }
    fn add_into(&mut self, o: STensor) {
        if self.terms.is_empty() {
            *self = o;
            return;
        }
        assert_eq!(self.slots, o.slots);
        for (k, v) in o.terms {
            let e = self.terms.entry(k).or_insert_with(|| Series::zero(EXACT));
            *e = e.add(&v);
        }
    }
    fn mul(&self, o: &STensor) -> STensor {
        let mut slots: Vec<usize> = self.slots.iter().chain(&o.slots).copied().collect();
        slots.sort();
        let pos_a: Vec<usize> = self.slots.iter().map(|s| slots.iter().position(|t| t == s).unwrap()).collect();
        let pos_b: Vec<usize> = o.slots.iter().map(|s| slots.iter().position(|t| t == s).unwrap()).collect();
        let mut terms = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &o.terms {
                let mut key = alloc::vec![(0, 0); slots.len()];
                for (i, e) in ka.iter().enumerate() {
                    key[pos_a[i]] = *e;
                }
                for (i, e) in kb.iter().enumerate() {
                    key[pos_b[i]] = *e;
                }
                terms.insert(key, va.mul(vb));
            }
        }
        STensor { slots, terms }
    }
}

/// Local data at one ramification point, expanded through ζ^t.
struct Local {
    p: Point,
    sigma: Series,
    dsigma: Series,
    /// dz/dζ
    jac: Series,
    /// 1/(2 (y(ζ) − y(σ(ζ))) dx/dζ)
    kfac: Series,
}

pub struct TopRec {
    curve: SpectralCurve,
    /// Ramification points of x (simple zeros of dx), ascending with ∞ last.
    pub branchpoints: Vec<Point>,
    t: i64,
    table: BTreeMap<(usize, usize), Omega>,
}

impl TopRec {
    pub fn new(curve: &SpectralCurve) -> Result<Self> {
        let mut bps = Vec::new();
        for b in branchpoints(curve)? {
            if b.kind != BranchKind::ZeroOfDx {
                continue;
            }
            if b.order != 2 {
                return Err(Error::Unsupported(alloc::format!("ramification point of order {} at z = {}", b.order, b.at)));
            }
            if !b.regular {
                return Err(Error::Unsupported(alloc::format!("irregular ramification point at z = {}", b.at)));
            }
            bps.push(b.at);
        }
        Ok(TopRec { curve: curve.clone(), branchpoints: bps, t: 0, table: BTreeMap::new() })
    }

    /// φ_{b,m} as the coefficient of dz.
    pub fn phi(&self, b: usize, m: usize) -> RF {
        match &self.branchpoints[b] {
            Point::Finite(a) => RF::inv_linear_pow(a, m as u32),
            Point::Infinity => {
                assert!(m >= 2, "no φ_{{∞,1}} in the basis");
                RF::poly(Poly::monomial(-Q::from_integer(1.into()), m - 2))
            }
        }
    }

    fn local(&self, b: usize, t: i64) -> Result<Local> {
        let p = self.branchpoints[b].clone();
        let bp = branchpoints(&self.curve)?.into_iter().find(|x| x.at == p && x.kind == BranchKind::ZeroOfDx).expect("listed ramification point");
        let sigma = involution_series(&self.curve, &bp, t)?.sigma;
        let dsigma = sigma.derivative();
        let jac = match p {
            Point::Finite(_) => Series::constant(Q::from_integer(1.into()), EXACT),
            Point::Infinity => Series::new(-2, alloc::vec![-Q::from_integer(1.into())], EXACT),
        };
        let y = self.curve.y.laurent_at(&p, t + 2);
        let dy = y.sub(&y.compose(&sigma)?);
        let dx = self.curve.x.laurent_at(&p, t + 2).derivative();
        let kfac = dy.mul(&dx).scale(&Q::from_integer(2.into())).inv()?;
        Ok(Local { p, sigma, dsigma, jac, kfac })
    }

    /// φ_{b,m}(z) dz/dζ in the chart of `loc`.
    fn phi_at(&self, loc: &Local, li: usize, b: usize, m: usize) -> Series {
        if b == li {
            return Series::new(-(m as i64), alloc::vec![Q::from_integer(1.into())], EXACT);
        }
        self.phi(b, m).laurent_at(&loc.p, self.t).mul(&loc.jac)
    }
    fn phi_sigma(&self, loc: &Local, li: usize, b: usize, m: usize) -> Result<Series> {
        Ok(self.phi_at(loc, li, b, m).compose(&loc.sigma)?.mul(&loc.dsigma))
    }

    /// ω_{g,1+|rest|} with its first argument at z (or σ(z)) and the others on the given output slots.
    fn factor(&self, loc: &Local, li: usize, g: usize, rest: &[usize], at_sigma: bool, other_val: i64) -> Result<STensor> {
        if g == 0 && rest.len() == 1 {
            // B(z, w) = Σ_k (k+1) ζ^k dζ φ_{b,k+2}(w)
            let kmax = (-other_val).max(0) + 1;
            let mut terms = BTreeMap::new();
            for k in 0..=kmax {
                let c = Q::from_integer((k + 1).into());
                let s = if at_sigma { loc.sigma.pow(k)?.mul(&loc.dsigma).scale(&c) } else { Series::new(k, alloc::vec![c], self.t) };
                terms.insert(alloc::vec![(li, k as usize + 2)], s);
            }
            return Ok(STensor { slots: rest.to_vec(), terms });
        }
        let om = self.table.get(&(g, rest.len() + 1)).expect("lower ω computed first");
        let mut terms: BTreeMap<Key, Series> = BTreeMap::new();
        let mut cache: BTreeMap<(usize, usize), Series> = BTreeMap::new();
        for (key, c) in &om.terms {
            let (b, m) = key[0];
            if !cache.contains_key(&(b, m)) {
                let s = if at_sigma { self.phi_sigma(loc, li, b, m)? } else { self.phi_at(loc, li, b, m) };
                cache.insert((b, m), s);
            }
            let s = cache[&(b, m)].scale(c);
            let e = terms.entry(key[1..].to_vec()).or_insert_with(|| Series::zero(EXACT));
            *e = e.add(&s);
        }
        Ok(STensor { slots: rest.to_vec(), terms })
    }

    fn min_val_of(&self, g: usize, n: usize) -> i64 {
        if g == 0 && n == 2 {
            return 0;
        }
        -(self.table.get(&(g, n)).map(|o| o.terms.keys().map(|k| k[0].1 as i64).max().unwrap_or(0)).unwrap_or(0))
    }

    fn recurse(&self, g: usize, n: usize) -> Result<Option<Omega>> {
        let j: Vec<usize> = (1..n).collect();
        let mut out: BTreeMap<Key, Q> = BTreeMap::new();
        for li in 0..self.branchpoints.len() {
            let loc = self.local(li, self.t)?;
            let mut integrand = STensor { slots: j.clone(), terms: BTreeMap::new() };
            if g >= 1 {
                if g == 1 && j.is_empty() {
                    // B(z, σz) = σ'/(ζ − σ)²
                    let d = Series::var().sub(&loc.sigma);
                    integrand.add_into(STensor::scalar(loc.dsigma.mul(&d.mul(&d).inv()?)));
                } else {
                    let om = self.table.get(&(g - 1, n + 1)).expect("lower ω computed first");
                    let mut terms: BTreeMap<Key, Series> = BTreeMap::new();
                    for (key, c) in &om.terms {
                        let s = self.phi_at(&loc, li, key[0].0, key[0].1).mul(&self.phi_sigma(&loc, li, key[1].0, key[1].1)?).scale(c);
                        let e = terms.entry(key[2..].to_vec()).or_insert_with(|| Series::zero(EXACT));
                        *e = e.add(&s);
                    }
                    integrand.add_into(STensor { slots: j.clone(), terms });
                }
            }
            for mask in 0..(1usize << j.len()) {
                let i: Vec<usize> = j.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|x| *x.1).collect();
                let ic: Vec<usize> = j.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 0).map(|x| *x.1).collect();
                for g1 in 0..=g {
                    let g2 = g - g1;
                    if (g1 == 0 && i.is_empty()) || (g2 == 0 && ic.is_empty()) {
                        continue;
                    }
                    let v1 = self.min_val_of(g1, i.len() + 1);
                    let v2 = self.min_val_of(g2, ic.len() + 1);
                    let f1 = self.factor(&loc, li, g1, &i, false, v2 - 2)?;
                    let f2 = self.factor(&loc, li, g2, &ic, true, v1 - 2)?;
                    integrand.add_into(f1.mul(&f2));
                }
            }
            let v = integrand.min_val();
            let mmax = (2 - v).max(2) as usize;
            for m in 2..=mmax {
                let ker = Series::new(m as i64 - 1, alloc::vec![Q::from_integer(1.into())], EXACT).sub(&loc.sigma.pow(m as i64 - 1)?).mul(&loc.kfac);
                for (key, s) in &integrand.terms {
                    let r = ker.mul(s);
                    if r.prec() < -1 {
                        return Ok(None);
                    }
                    let c = r.residue();
                    if c.is_zero() {
                        continue;
                    }
                    let mut k = alloc::vec![(li, m)];
                    k.extend(key.iter().copied());
                    let e = out.entry(k).or_insert_with(Q::zero);
                    *e += c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Some(Omega { g, n, terms: out }))
    }

    /// ω_{g,n}, computing and caching every lower level it depends on.
    pub fn omega(&mut self, g: usize, n: usize) -> Result<&Omega> {
        if chi(g, n) <= 0 || n == 0 {
            return Err(Error::Invalid(alloc::format!("ω_{{{g},{n}}} is not in the stable range")));
        }
        if !self.table.contains_key(&(g, n)) {
            for (g2, n2) in stable_range(chi(g, n) as usize) {
                if self.table.contains_key(&(g2, n2)) {
                    continue;
                }
                let t0 = 6 * g2 as i64 + 2 * n2 as i64 + 4;
                let mut done = None;
                for t in [t0, 2 * t0] {
                    self.t = t;
                    if let Some(o) = self.recurse(g2, n2)? {
                        done = Some(o);
                        break;
                    }
                }
                let o = done.ok_or_else(|| Error::Check(alloc::format!("kernel truncation insufficient for ω_{{{g2},{n2}}}")))?;
                self.table.insert((g2, n2), o);
            }
        }
        Ok(&self.table[&(g, n)])
    }

    /// Coefficient of dz₁…dzₙ at the given points.
    pub fn eval(&mut self, g: usize, n: usize, zs: &[Q]) -> Result<Q> {
        if zs.len() != n {
            return Err(Error::Invalid("wrong number of points".into()));
        }
        let om = self.omega(g, n)?.clone();
        let mut acc = Q::zero();
        for (key, c) in &om.terms {
            let mut t = c.clone();
            for (z, (b, m)) in zs.iter().zip(key) {
                t *= self.phi(*b, *m).eval(z).ok_or_else(|| Error::Singular("point at a ramification point".into()))?;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// ω_{g,n}(z; pins) as a rational function of the free first argument.
    pub fn eval_free(&mut self, g: usize, n: usize, pins: &[Q]) -> Result<RF> {
        if pins.len() + 1 != n {
            return Err(Error::Invalid("need n − 1 pinned points".into()));
        }
        for (i, a) in pins.iter().enumerate() {
            if pins[..i].contains(a) {
                return Err(Error::CoincidingPoints);
            }
            if self.branchpoints.iter().any(|b| b.finite() == Some(a)) {
                return Err(Error::Singular("pin at a ramification point".into()));
            }
        }
        let om = self.omega(g, n)?.clone();
        let mut by_head: BTreeMap<(usize, usize), Q> = BTreeMap::new();
        for (key, c) in &om.terms {
            let mut t = c.clone();
            for (z, (b, m)) in pins.iter().zip(&key[1..]) {
                t *= self.phi(*b, *m).eval(z).expect("pins avoid ramification points");
            }
            *by_head.entry(key[0]).or_insert_with(Q::zero) += t;
        }
        let mut acc = RF::zero();
        for ((b, m), c) in by_head {
            acc = &acc + &self.phi(b, m).scale(&c);
        }
        Ok(acc)
    }

    /// Antiderivative of φ_{b,m}.
    fn phi_primitive(&self, b: usize, m: usize) -> Result<RF> {
        let k = Q::from_integer((m as i64 - 1).into());
        match &self.branchpoints[b] {
            Point::Finite(_) if m == 1 => Err(Error::Unsupported("logarithmic primitive of ω_{g,n}".into())),
            Point::Finite(a) => Ok(RF::inv_linear_pow(a, m as u32 - 1).scale(&(-k.recip()))),
            Point::Infinity => Ok(RF::poly(Poly::monomial(-k.recip(), m - 1))),
        }
    }

    /// ∫…∫ ω_{g,n} with every slot integrated from a to b.
    pub fn integral(&mut self, g: usize, n: usize, a: &Q, b: &Q) -> Result<Q> {
        let om = self.omega(g, n)?.clone();
        let mut cache: BTreeMap<(usize, usize), Q> = BTreeMap::new();
        let mut acc = Q::zero();
        for (key, c) in &om.terms {
            let mut t = c.clone();
            for bm in key {
                if !cache.contains_key(bm) {
                    let p = self.phi_primitive(bm.0, bm.1)?;
                    let at = |z: &Q| p.eval(z).ok_or_else(|| Error::Singular("integration endpoint at a ramification point".into()));
                    cache.insert(*bm, at(b)? - at(a)?);
                }
                t *= &cache[bm];
            }
            acc += t;
        }
        Ok(acc)
    }
}

/// All ω_{g,n} with 1 ≤ 2g − 2 + n ≤ chi_max.
pub fn tr_table(curve: &SpectralCurve, chi_max: usize) -> Result<Vec<Omega>> {
    if chi_max == 0 {
        return Err(Error::Invalid("chi_max ≥ 1".into()));
    }
    let mut tr = TopRec::new(curve)?;
    stable_range(chi_max).into_iter().map(|(g, n)| tr.omega(g, n).cloned()).collect()
}

#[cfg(test)]
mod tests;
