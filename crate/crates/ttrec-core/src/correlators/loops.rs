use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::reconstruct::reconstruct_auto;
use crate::algebra::{HSeries, Matrix, Poly, Ring, Series, Q, RF};
use crate::curve::{Sampler, SpectralCurve};
use crate::laxpair::LaxPair;
use crate::{Error, Result};

use super::mseries::MSeries;
use super::wn::{coef, limit, Correlators, Slot};


/// Loop-equation polynomials at one x over a fixed set of pinned points.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopSample {
    pub x: Q,
    pub fiber: Vec<Q>,
    /// P_n^{(j)}(x, y) as polynomials in y, j = 0..=jmax.
    pub p: Vec<Poly>,
    /// The disconnected variant P̃_n^{(j)}.
    pub p_tilde: Vec<Poly>,
    /// Specialization identity at each sheet holds.
    pub core_ok: bool,
    /// P̃_n agrees with its expansion over P_{|A′|} and hat-disconnected correlators.
    pub remark_ok: bool,
}

fn x_of(ms: &MSeries, z: &Q) -> Result<Q> {
    ms.x.eval(z).ok_or_else(|| Error::Singular("pin at a pole of x".into()))
}

/// Coefficients in y of Σ_I c_I Π_{a∉I} (y − y_a).
fn assemble(c: &[HSeries<Q>], ys: &[Q], jmax: i64) -> Result<Vec<Poly>> {
    let d = ys.len();
    (0..=jmax)
        .map(|j| {
            let mut acc = Poly::zero();
            for (mask, ci) in c.iter().enumerate() {
                let cj = coef(ci, j)?;
                if cj.is_zero() {
                    continue;
                }
                let mut p = Poly::constant(cj);
                for a in 0..d {
                    if mask >> a & 1 == 0 {
                        p = &p * &Poly::new(alloc::vec![-ys[a].clone(), Q::one()]);
                    }
                }
                acc = &acc + &p;
            }
            Ok(acc)
        })
        .collect()
}

fn limit_series(s: &HSeries<Series>) -> Result<HSeries<Q>> {
    s.try_map(limit)
}

/// P_n and P̃_n at x = x(z0): Σ_{I ⊂ sheets} (−ℏ)^{|I|} Ŵ(I; A) Π_{a∉I}(y − y_a), with Ŵ the hat-partially
/// connected (resp. hat-disconnected) correlators, through ℏ^{jmax}.
pub fn loop_sample(curve: &SpectralCurve, ms: &MSeries, z0: &Q, pins: &[Q], jmax: i64) -> Result<LoopSample> {
    let x0 = x_of(ms, z0)?;
    let fiber = curve.fiber(&x0)?;
    let d = fiber.len();
    let n = pins.len();
    let kmax = jmax.max(0);
    let prec = 2 * d as i64 + 2;
    let mut slots = Vec::with_capacity(d + n);
    for (a, z) in fiber.iter().enumerate() {
        slots.push(Slot::displaced(ms, z, &Q::from_integer((a as i64 + 1).into()), prec)?);
    }
    for z in pins {
        if x_of(ms, z)? == x0 {
            return Err(Error::CoincidingPoints);
        }
        slots.push(Slot::displaced(ms, z, &Q::zero(), prec)?);
    }
    let mut cor = Correlators::new(slots, kmax)?;
    let amask = ((1usize << n) - 1) << d;
    let ys: Vec<Q> = fiber.iter().map(|z| curve.y.eval(z).expect("regular fiber")).collect();
    let coefficients = |cor: &mut Correlators<Series>, am: usize, tilde: bool| -> Result<Vec<HSeries<Q>>> {
        (0..(1usize << d))
            .map(|k| {
                let sign = if k.count_ones() % 2 == 1 { -Q::one() } else { Q::one() };
                let w = if tilde {
                    if k | am == 0 { HSeries::constant(Q::one(), kmax) } else { limit_series(&cor.disconnected(k | am, true)?)? }
                } else {
                    limit_series(&cor.partial(k, am, true)?)?
                };
                Ok(w.shift(k.count_ones() as i64).scale(&sign))
            })
            .collect()
    };
    let c = coefficients(&mut cor, amask, false)?;
    let p = assemble(&c, &ys, jmax)?;
    let p_tilde = assemble(&coefficients(&mut cor, amask, true)?, &ys, jmax)?;
    // P_n(x, y_{i0}) = −ℏ Ŵ_{n+1}(x.e_{i0}, A) E_y(y_{i0}) + Σ_{I ∋ i0, |I| ≥ 2} (−ℏ)^{|I|} Ŵ(I; A) Π_{i∉I}(y_{i0} − y_i)
    let mut core_ok = true;
    for i0 in 0..d {
        let ey: Q = (0..d).filter(|&b| b != i0).map(|b| &ys[i0] - &ys[b]).product();
        let w = limit_series(&cor.hat(1 << i0 | amask)?)?;
        for j in 0..=jmax {
            let mut rhs = if j == 0 { Q::zero() } else { -coef(&w, j - 1)? * &ey };
            for k in 0..(1usize << d) {
                if k >> i0 & 1 == 0 || k.count_ones() < 2 {
                    continue;
                }
                let prod: Q = (0..d).filter(|&b| k >> b & 1 == 0).map(|b| &ys[i0] - &ys[b]).product();
                rhs += coef(&c[k], j)? * prod;
            }
            if p[j as usize].eval(&ys[i0]) != rhs {
                core_ok = false;
            }
        }
    }
    // P̃_n(A) = Σ_{A′ ⊂ A} P_{|A′|}(A′) Ŵ̃(A ∖ A′)
    let mut sum = alloc::vec![Poly::zero(); jmax as usize + 1];
    let mut sub = amask;
    loop {
        let pa = if sub == amask { p.clone() } else { assemble(&coefficients(&mut cor, sub, false)?, &ys, jmax)? };
        let rest = amask & !sub;
        let wt = if rest == 0 { HSeries::constant(Q::one(), kmax) } else { limit_series(&cor.disconnected(rest, true)?)? };
        for j in 0..=jmax {
            for i in 0..=j {
                let w = coef(&wt, j - i)?;
                if !w.is_zero() {
                    sum[j as usize] = &sum[j as usize] + &(&pa[i as usize] * &Poly::constant(w));
                }
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & amask;
    }
    let remark_ok = sum == p_tilde;
    Ok(LoopSample { x: x0, fiber, p, p_tilde, core_ok, remark_ok })
}

/// Multilinear polynomials in ε₁..εₙ over ℏ-series.
#[derive(Clone, Debug, PartialEq)]
struct Eps {
    c: Vec<HSeries<Q>>,
}

impl Ring for Eps {
    fn zero_like(&self) -> Self {
        Eps { c: self.c.iter().map(|a| a.zero_like()).collect() }
    }
    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.c[0] = self.c[0].one_like();
        z
    }
    fn vanishes(&self) -> bool {
        self.c.iter().all(|a| a.vanishes())
    }
    fn plus(&self, o: &Self) -> Self {
        Eps { c: self.c.iter().zip(&o.c).map(|(a, b)| a.plus(b)).collect() }
    }
    fn minus(&self, o: &Self) -> Self {
        Eps { c: self.c.iter().zip(&o.c).map(|(a, b)| a.minus(b)).collect() }
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = self.zero_like();
        for (i, a) in self.c.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if i & j == 0 && !b.vanishes() {
                    out.c[i | j] = out.c[i | j].plus(&a.times(b));
                }
            }
        }
        out
    }
    fn negated(&self) -> Self {
        Eps { c: self.c.iter().map(|a| a.negated()).collect() }
    }
    fn scaled(&self, q: &Q) -> Self {
        Eps { c: self.c.iter().map(|a| a.scaled(q)).collect() }
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return alloc::vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let h = rest.remove(i);
        for mut p in permutations_of(&rest) {
            p.insert(0, h);
            out.push(p);
        }
    }
    out
}

/// [ε₁⋯εₙ] det(y − L(x) + ℏ F_ε(X₁..Xₙ)) at x = x0 through ℏ^{jmax}, where F_ε sums the chains
/// ε_{i₁}⋯ε_{iₖ} M(X_{i₁})⋯M(X_{iₖ}) / ((x − x_{i₁})(x_{i₁} − x_{i₂})⋯(x_{iₖ} − x)). This equals P_n.
pub fn determinant_side(lp: &LaxPair, ms: &MSeries, x0: &Q, y: &Q, pins: &[Q], jmax: i64) -> Result<Vec<Q>> {
    let d = lp.d;
    let n = pins.len();
    let top = jmax.max(0);
    let ne = 1usize << n;
    let hz = HSeries::constant(Q::zero(), top);
    let lift = |h: HSeries<Q>, mask: usize| {
        let mut c = alloc::vec![hz.clone(); ne];
        c[mask] = h;
        Eps { c }
    };
    let mut a = Matrix::filled(d, d, lift(hz.clone(), 0));
    for i in 0..d {
        for j in 0..d {
            let lij: Vec<Q> = (0..=top as usize)
                .map(|k| lp.l_order(k).get(i, j).eval(x0).ok_or_else(|| Error::Singular("x at a pole of L".into())))
                .collect::<Result<_>>()?;
            let mut e = HSeries::new(0, lij).neg();
            if i == j {
                e = e.add(&HSeries::constant(y.clone(), top));
            }
            a.set(i, j, lift(e, 0));
        }
    }
    let xs: Vec<Q> = pins.iter().map(|z| x_of(ms, z)).collect::<Result<_>>()?;
    let mhs: Vec<HSeries<Matrix<Q>>> = pins
        .iter()
        .map(|z| Ok(HSeries::new(0, Slot::at(ms, z)?.m[..=top as usize].to_vec())))
        .collect::<Result<_>>()?;
    for mask in 1..ne {
        let items: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        for order in permutations_of(&items) {
            let mut prod = mhs[order[0]].clone();
            let mut den = x0 - &xs[order[0]];
            for w in 1..order.len() {
                prod = prod.mul(&mhs[order[w]]);
                den *= &xs[order[w - 1]] - &xs[order[w]];
            }
            den *= &xs[*order.last().unwrap()] - x0;
            let f = den.recip();
            for i in 0..d {
                for j in 0..d {
                    let e = prod.map(|m| m.get(i, j) * &f).shift(1);
                    let cur = a.get(i, j).clone();
                    a.set(i, j, cur.plus(&lift(e, mask)));
                }
            }
        }
    }
    let det = a.det_expand();
    (0..=jmax).map(|j| coef(&det.c[ne - 1], j)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LoopReport {
    pub n: usize,
    pub jmax: i64,
    pub pins: Vec<Q>,
    /// Reconstructed y-coefficients of P_n^{(j)} as functions of x: [j][power of y].
    pub coefficients: Vec<Vec<RF>>,
    pub sheet_specialization: bool,
    pub rational: bool,
    pub poles_allowed: bool,
    pub determinant_agrees: bool,
    pub witnesses: Vec<String>,
}

impl LoopReport {
    pub fn passed(&self) -> bool {
        self.sheet_specialization && self.rational && self.poles_allowed && self.determinant_agrees
    }
}

/// Loop equations for n pinned points through ℏ^{jmax}: P_n is a polynomial in y whose coefficients are rational
/// in x with poles only at poles of L and at x = x(pinᵢ), and P̃_n matches the determinant formula.
pub fn loop_eq_check(lp: &LaxPair, curve: &SpectralCurve, ms: &MSeries, pins: &[Q], jmax: i64, samples: usize, seed: u64) -> Result<LoopReport> {
    let mut sampler = Sampler::new(seed);
    let pin_x: Vec<Q> = pins.iter().map(|z| x_of(ms, z)).collect::<Result<_>>()?;
    let zs = crate::curve::regular_samples(curve, &mut sampler, samples + 5, &pin_x);
    if zs.len() < samples + 5 {
        return Err(Error::Invalid("not enough regular sample points".into()));
    }
    let mut rows = Vec::new();
    for z in &zs {
        rows.push(loop_sample(curve, ms, z, pins, jmax)?);
    }
    let mut rep = LoopReport {
        n: pins.len(),
        jmax,
        pins: pins.to_vec(),
        coefficients: Vec::new(),
        sheet_specialization: rows.iter().all(|r| r.core_ok && r.remark_ok),
        rational: true,
        poles_allowed: true,
        determinant_agrees: true,
        witnesses: Vec::new(),
    };
    if !rep.sheet_specialization {
        rep.witnesses.push("sheet specialization identity fails".into());
    }
    let mut allowed: Vec<Q> = pin_x.clone();
    for k in 0..lp.l.len() {
        for e in lp.l_order(k).entries() {
            for (a, _) in e.finite_poles()? {
                if !allowed.contains(&a) {
                    allowed.push(a);
                }
            }
        }
    }
    let d = curve.d;
    for j in 0..=jmax as usize {
        let mut per_power = Vec::new();
        for pw in 0..=d {
            let pts: Vec<(Q, Q)> = rows.iter().map(|r| (r.x.clone(), r.p[j].coeff(pw))).collect();
            match reconstruct_auto(&pts, pts.len() - 3) {
                Ok(f) => {
                    for (a, _) in f.den().rational_roots() {
                        if !allowed.contains(&a) {
                            rep.poles_allowed = false;
                            rep.witnesses.push(alloc::format!("P^({j}) coefficient of y^{pw} has a pole at x = {}", crate::algebra::rational::fmt_q(&a)));
                        }
                    }
                    if !f.den().irrational_part().is_constant() {
                        rep.poles_allowed = false;
                        rep.witnesses.push(alloc::format!("P^({j}) coefficient of y^{pw} has irrational poles"));
                    }
                    per_power.push(f);
                }
                Err(_) => {
                    rep.rational = false;
                    rep.witnesses.push(alloc::format!("P^({j}) coefficient of y^{pw} is not reconstructible from {} samples", pts.len()));
                    per_power.push(RF::zero());
                }
            }
        }
        rep.coefficients.push(per_power);
    }
    for r in rows.iter().take(5) {
        for yv in r.fiber.iter().map(|z| curve.y.eval(z).unwrap()).chain([Q::zero(), Q::one()]) {
            let det = determinant_side(lp, ms, &r.x, &yv, pins, jmax)?;
            for j in 0..=jmax as usize {
                if r.p[j].eval(&yv) != det[j] {
                    rep.determinant_agrees = false;
                    rep.witnesses.push(alloc::format!("P^({j}) ≠ determinant at x = {}, y = {}", crate::algebra::rational::fmt_q(&r.x), crate::algebra::rational::fmt_q(&yv)));
                }
            }
        }
    }
    Ok(rep)
}
