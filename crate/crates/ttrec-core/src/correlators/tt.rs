use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::rational::fmt_q;
use crate::algebra::{Point, Q, RF};
use crate::curve::{branchpoints, double_points, regular_samples, Sampler, SpectralCurve};
use crate::laxpair::LaxPair;
use crate::toprec::{stable_range, TopRec};
use crate::Result;

use super::loops::loop_eq_check;
use super::mseries::MSeries;
use super::wn::{coef, Correlators, Slot};

/// ω_n^{(k)} at the given points: W_n^{(k)} · Π x′(zᵢ).
pub fn omega_at(ms: &MSeries, zs: &[Q], k: i64) -> Result<Q> {
    let slots = zs.iter().map(|z| Slot::at(ms, z)).collect::<Result<Vec<_>>>()?;
    let mut c = Correlators::new(slots, k.max(0))?;
    let w = coef(&c.connected((1 << zs.len()) - 1)?, k)?;
    let jac: Q = zs.iter().map(|z| ms.xprime.eval(z).expect("regular point")).product();
    Ok(w * jac)
}

/// ω_n^{(k)}(z; pins) as exact rational functions of z, for 1 ≤ n ≤ nmax and −1 ≤ k ≤ kmax.
pub fn symbolic_table(ms: &MSeries, pins: &[Q], nmax: usize, kmax: i64) -> Result<BTreeMap<(usize, i64), RF>> {
    let mut slots = alloc::vec![Slot::<RF>::symbolic(ms)];
    for z in &pins[..nmax - 1] {
        slots.push(Slot::constant(&Slot::at(ms, z)?));
    }
    let mut c = Correlators::new(slots, kmax)?;
    let mut out = BTreeMap::new();
    let mut jn = ms.xprime.clone();
    for n in 1..=nmax {
        if n > 1 {
            jn = jn.scale(ms.xprime.eval(&pins[n - 2]).as_ref().expect("regular pin"));
        }
        let w = c.connected((1 << n) - 1)?;
        for k in -1..=kmax {
            out.insert((n, k), &coef(&w, k)? * &jn);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Condition {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl Condition {
    fn new(name: &str, witnesses: Vec<String>) -> Self {
        Condition { name: name.into(), passed: witnesses.is_empty(), witnesses }
    }
}

/// ω₁^{(−1)} = y dx and ω₂^{(0)} = dz₁dz₂/(z₁ − z₂)² on a grid of regular points.
pub fn leading_terms(curve: &SpectralCurve, ms: &MSeries, zs: &[Q]) -> Result<Condition> {
    let mut wit = Vec::new();
    for z in zs {
        let w = omega_at(ms, core::slice::from_ref(z), -1)?;
        let want = curve.y.eval(z).unwrap() * ms.xprime.eval(z).unwrap();
        if w != want {
            wit.push(format!("ω1^(-1)({}) = {} ≠ y dx = {}", fmt_q(z), fmt_q(&w), fmt_q(&want)));
        }
    }
    for pair in zs.windows(2) {
        let w = omega_at(ms, pair, 0)?;
        let want = crate::curve::bergman(&pair[0], &pair[1])?;
        if w != want {
            wit.push(format!("ω2^(0)({}, {}) = {} ≠ {}", fmt_q(&pair[0]), fmt_q(&pair[1]), fmt_q(&w), fmt_q(&want)));
        }
    }
    Ok(Condition::new("leading terms", wit))
}

fn classify(curve: &SpectralCurve, p: &Point, pins: &[Q], doubles: &[Q]) -> &'static str {
    if let Point::Finite(a) = p {
        if doubles.contains(a) {
            return "double point";
        }
        if let Some(xa) = curve.x.eval(a) {
            if pins.iter().any(|w| curve.x.eval(w).as_ref() == Some(&xa)) {
                return "coinciding point";
            }
        }
    }
    if curve.x.order_at(p).is_some_and(|o| o < 0) || curve.y.order_at(p).is_some_and(|o| o < 0) {
        return "puncture";
    }
    "regular point"
}

/// Poles of ω_n^{(k)}(z; pins) away from the branchpoints, for (n, k) ∉ {(1, −1), (2, 0)}.
pub fn pole_witnesses(curve: &SpectralCurve, table: &BTreeMap<(usize, i64), RF>, pins: &[Q]) -> Result<Vec<String>> {
    let bps: Vec<Point> = branchpoints(curve)?.into_iter().map(|b| b.at).collect();
    let doubles: Vec<Q> = double_points(&curve.x, &curve.y)?.points.into_iter().flat_map(|d| [d.b, d.b_bar]).collect();
    let mut wit = Vec::new();
    for (&(n, k), f) in table {
        if (n, k) == (1, -1) || (n, k) == (2, 0) || f.is_zero() {
            continue;
        }
        let mut bad: Vec<Point> = Vec::new();
        for (a, _) in f.den().rational_roots() {
            bad.push(Point::Finite(a));
        }
        let irr = f.den().irrational_part();
        if !irr.is_constant() {
            wit.push(format!("ω{n}^({k}) has poles at the roots of {irr}"));
        }
        if f.order_at(&Point::Infinity).is_some_and(|o| o < 2) {
            bad.push(Point::Infinity);
        }
        for p in bad.into_iter().filter(|p| !bps.contains(p)) {
            let order = f.order_at(&p).unwrap_or(0) - if p == Point::Infinity { 2 } else { 0 };
            wit.push(format!("ω{n}^({k}) has a pole of order {} at {} z = {p}", -order, classify(curve, &p, &pins[..n - 1], &doubles)));
        }
    }
    Ok(wit)
}

/// Parity: ω_n^{(k)} ≡ 0 when n + k is odd.
pub fn parity_witnesses(table: &BTreeMap<(usize, i64), RF>) -> Vec<String> {
    table
        .iter()
        .filter(|(&(n, k), f)| (n as i64 + k) % 2 != 0 && !f.is_zero())
        .map(|(&(n, k), f)| format!("ω{n}^({k}) = {f} ≠ 0"))
        .collect()
}

/// Leading order: ω_n^{(k)} ≡ 0 for k < n − 2.
pub fn leading_order_witnesses(table: &BTreeMap<(usize, i64), RF>) -> Vec<String> {
    table
        .iter()
        .filter(|(&(n, k), f)| k < n as i64 - 2 && !f.is_zero())
        .map(|(&(n, k), f)| format!("ω{n}^({k}) = {f} ≠ 0"))
        .collect()
}

/// ω_n^{(2g−2+n)} against the recursion's ω_{g,n} with the same pins, exactly.
pub fn identification(tr: &mut TopRec, table: &BTreeMap<(usize, i64), RF>, pins: &[Q], chi_max: usize) -> Result<Vec<(usize, usize, bool)>> {
    let mut out = Vec::new();
    for (g, n) in stable_range(chi_max) {
        let k = 2 * g as i64 - 2 + n as i64;
        let Some(w) = table.get(&(n, k)) else { continue };
        let t = tr.eval_free(g, n, &pins[..n - 1])?;
        out.push((g, n, *w == t));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct TtConfig {
    pub chi_max: usize,
    pub grid: usize,
    pub loop_n: usize,
    pub loop_j: i64,
    pub loop_samples: usize,
    pub seed: u64,
}

impl Default for TtConfig {
    fn default() -> Self {
        TtConfig { chi_max: 2, grid: 50, loop_n: 2, loop_j: 3, loop_samples: 20, seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct TtReport {
    pub conditions: Vec<Condition>,
    pub identification: Vec<(usize, usize, bool)>,
}

impl TtReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed) && self.identification.iter().all(|i| i.2)
    }
}

/// The five topological-type conditions and the identification with the recursion.
pub fn tt_check(lp: &LaxPair, curve: &SpectralCurve, ms: &MSeries, cfg: &TtConfig) -> Result<TtReport> {
    let mut sampler = Sampler::new(cfg.seed);
    let zs = regular_samples(curve, &mut sampler, cfg.grid.max(cfg.chi_max + 2), &[]);
    let nmax = cfg.chi_max + 2;
    let pins = &zs[..nmax - 1];
    let kmax = ms.k() as i64 - 1;
    let table = symbolic_table(ms, pins, nmax, kmax)?;
    let mut conditions = alloc::vec![leading_terms(curve, ms, &zs)?];
    let mut lw = Vec::new();
    for n in 0..=cfg.loop_n {
        let rep = loop_eq_check(lp, curve, ms, &zs[nmax..nmax + n], cfg.loop_j.min(kmax), cfg.loop_samples, cfg.seed + 1 + n as u64)?;
        lw.extend(rep.witnesses);
    }
    conditions.push(Condition::new("loop equations", lw));
    conditions.push(Condition::new("pole property", pole_witnesses(curve, &table, pins)?));
    conditions.push(Condition::new("parity", parity_witnesses(&table)));
    conditions.push(Condition::new("leading order", leading_order_witnesses(&table)));
    let identification = match TopRec::new(curve) {
        Ok(mut tr) => identification(&mut tr, &table, pins, cfg.chi_max)?,
        Err(_) => Vec::new(),
    };
    Ok(TtReport { conditions, identification })
}
