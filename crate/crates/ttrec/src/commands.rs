//! The pipelines behind each subcommand. Each returns a JSON result and a pass flag.

use std::fmt::Write as _;

use serde_json::{json, Value};
use ttrec_core::algebra::rational::fmt_q;
use ttrec_core::algebra::{Q, RF};
use ttrec_core::correlators::{coef, identification, m_series, symbolic_table, tau_t_derivative, tt_check, Correlators, MSeries, Slot, TtConfig};
use ttrec_core::curve::{branchpoints, build_c, double_points, partial_fractions, regular_samples, Sampler, SpectralCurve};
use ttrec_core::laxpair::{assumption_report, classify_y_poles, classify_y_powers, AssumptionReport, LaxPair};
use ttrec_core::numeric::{conjecture_check, psi_check};
use ttrec_core::toprec::{stable_range, TopRec};

use crate::json::{curve_from, hseries_to, lax_from, matrix_to, point_to, q_to, rf_to, status_to, FormatError, LaxFile};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RunConfig {
    pub k_order: usize,
    pub chi_max: usize,
    pub precision: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { k_order: ttrec_core::presets::DEFAULT_K, chi_max: 2, precision: ttrec_core::numeric::DEFAULT_DIGITS, seed: 0 }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] ttrec_core::Error),
    #[error("{0}")]
    Usage(String),
}

type R<T> = Result<T, CmdError>;

pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub text: String,
}

fn core<T>(r: ttrec_core::Result<T>, ctx: &str) -> R<T> {
    r.map_err(|e| CmdError::Usage(format!("{ctx}: {e}")))
}

fn rf_or_err<T>(r: ttrec_core::Result<T>, f: impl FnOnce(T) -> Value) -> Value {
    match r {
        Ok(v) => f(v),
        Err(e) => json!({"error": e.to_string()}),
    }
}

fn load_curve(v: &Value) -> R<SpectralCurve> {
    if let Some(p) = v.get("parametrization") {
        if p.is_null() {
            return Err(CmdError::Usage("missing parametrization".into()));
        }
        return Ok(curve_from(p, "$.parametrization")?);
    }
    Ok(curve_from(v, "$")?)
}

fn load_lax(v: &Value) -> R<(LaxPair, SpectralCurve)> {
    let LaxFile { lax, curve, .. } = lax_from(v)?;
    let curve = curve.ok_or_else(|| CmdError::Usage("missing parametrization".into()))?;
    Ok((lax, curve))
}

pub fn curve_inspect(v: &Value) -> R<Outcome> {
    let curve = load_curve(v)?;
    let pd = partial_fractions(&curve.x);
    let poles = rf_or_err(pd.clone(), |pd| {
        json!({
            "x_inf0": q_to(&pd.x_inf0),
            "poles": pd.poles.iter().map(|p| json!({"at": point_to(&p.at), "order": p.order, "coeffs": p.coeffs.iter().map(q_to).collect::<Vec<_>>()})).collect::<Vec<_>>(),
        })
    });
    let bps = rf_or_err(branchpoints(&curve), |b| {
        Value::Array(b.iter().map(|b| json!({"at": point_to(&b.at), "kind": format!("{:?}", b.kind), "order": b.order, "regular": b.regular})).collect())
    });
    let dps = rf_or_err(double_points(&curve.x, &curve.y), |d| {
        json!({
            "points": d.points.iter().map(|p| json!([q_to(&p.b), q_to(&p.b_bar)])).collect::<Vec<_>>(),
            "irrational_degree": d.irrational_degree,
        })
    });
    let c = rf_or_err(pd.and_then(|pd| build_c(&pd)), |c| matrix_to(&c, q_to));
    let powers = rf_or_err(classify_y_powers(&curve), |f| Value::Array(f.iter().map(rf_to).collect()));
    let by_pole = rf_or_err(classify_y_poles(&curve), |f| Value::Array(f.iter().map(|((k, r), rf)| json!({"pole": k, "r": r, "f": rf_to(rf)})).collect()));
    let result = json!({
        "curve": crate::json::curve_to(&curve),
        "poles": poles,
        "branchpoints": bps,
        "double_points": dps,
        "C": c,
        "classification": {"y_powers": powers, "y_poles": by_pole},
    });
    let mut text = String::new();
    let _ = writeln!(text, "x = {}\ny = {}", curve.x, curve.y);
    if let Some(b) = result["branchpoints"].as_array() {
        let _ = writeln!(text, "branchpoints: {}", b.iter().map(|b| format!("{} ({})", b["at"].as_str().unwrap_or("?"), b["kind"].as_str().unwrap_or("?"))).collect::<Vec<_>>().join(", "));
    }
    let _ = writeln!(text, "double points: {}", result["double_points"]);
    let _ = writeln!(text, "C = {}", result["C"]);
    Ok(Outcome { passed: true, result, text })
}

fn assumptions_json(r: &AssumptionReport) -> Value {
    let qm = |m: &Option<ttrec_core::algebra::Matrix<Q>>| m.as_ref().map(|m| matrix_to(m, q_to));
    json!({
        "checks": r.checks.iter().map(|c| json!({"assumption": c.assumption, "status": status_to(c.status), "witnesses": c.witnesses})).collect::<Vec<_>>(),
        "C": qm(&r.c),
        "v": qm(&r.v),
        "gamma": r.gamma.as_ref().map(|g| hseries_to(g, |m| matrix_to(m, q_to))),
    })
}

fn tt_config(cfg: &RunConfig) -> TtConfig {
    TtConfig { chi_max: cfg.chi_max, seed: cfg.seed, ..Default::default() }
}

fn mseries(lp: &LaxPair, curve: &SpectralCurve, cfg: &RunConfig) -> R<MSeries> {
    core(m_series(lp, curve, cfg.k_order), "M-series")
}

pub fn lax_certify(v: &Value, cfg: &RunConfig) -> R<Outcome> {
    let (lp, curve) = load_lax(v)?;
    let rep = assumption_report(&lp, &curve);
    let mut text = String::new();
    for c in &rep.checks {
        let _ = writeln!(text, "A{} {:<14} {}", c.assumption, status_to(c.status).as_str().unwrap_or(""), c.witnesses.join("; "));
    }
    let mut result = json!({"assumptions": assumptions_json(&rep)});
    if rep.any_failed() {
        result["tt"] = json!({"status": "skipped", "reason": "an assumption failed"});
        let _ = writeln!(text, "TT check skipped: an assumption failed");
        return Ok(Outcome { passed: false, result, text });
    }
    let ms = mseries(&lp, &curve, cfg)?;
    let tt = core(tt_check(&lp, &curve, &ms, &tt_config(cfg)), "TT check")?;
    let mut conds = serde_json::Map::new();
    for c in &tt.conditions {
        conds.insert(c.name.clone(), json!({"status": if c.passed { "pass" } else { "fail" }, "witnesses": c.witnesses}));
        let _ = writeln!(text, "{:<22} {}{}", c.name, if c.passed { "pass" } else { "FAIL" }, c.witnesses.first().map(|w| format!("  ({w})")).unwrap_or_default());
    }
    let ident: Vec<Value> = tt.identification.iter().map(|(g, n, ok)| json!({"g": g, "n": n, "status": if *ok { "equal" } else { "differ" }})).collect();
    for (g, n, ok) in &tt.identification {
        let _ = writeln!(text, "omega_{{{g},{n}}}              {}", if *ok { "equal" } else { "DIFFER" });
    }
    result["tt"] = json!({"conditions": conds, "identification": ident});
    Ok(Outcome { passed: tt.passed(), result, text })
}

fn pins(curve: &SpectralCurve, n: usize, seed: u64) -> Vec<Q> {
    regular_samples(curve, &mut Sampler::new(seed), n, &[])
}

pub fn tr_compute(v: &Value, cfg: &RunConfig) -> R<Outcome> {
    let curve = load_curve(v)?;
    let mut tr = core(TopRec::new(&curve), "topological recursion")?;
    let zs = pins(&curve, cfg.chi_max + 1 + 8, cfg.seed);
    let (pin_pool, grid) = zs.split_at(cfg.chi_max + 1);
    let mut table = serde_json::Map::new();
    let mut text = String::new();
    for (g, n) in stable_range(cfg.chi_max) {
        let p = &pin_pool[..n - 1];
        let rf = core(tr.eval_free(g, n, p), "ω_{g,n}")?;
        let pts: Vec<Value> = grid.iter().filter_map(|z| rf.eval(z).map(|w| json!([q_to(z), q_to(&w)]))).collect();
        let _ = writeln!(text, "omega_{{{g},{n}}}(z; {}) = {rf}", p.iter().map(fmt_q).collect::<Vec<_>>().join(", "));
        table.insert(format!("({g},{n})"), json!({"pins": p.iter().map(q_to).collect::<Vec<_>>(), "rf_z1": rf_to(&rf), "grid": pts}));
    }
    Ok(Outcome { passed: true, result: Value::Object(table), text })
}

/// Sheet label of z: its position in the ascending fiber over x(z), when that fiber is rational.
fn sheet_of(curve: &SpectralCurve, z: &Q) -> Value {
    curve.x.eval(z).and_then(|x| curve.fiber(&x).ok()).and_then(|f| f.iter().position(|w| w == z)).map_or(Value::Null, |i| json!(i))
}

pub fn correlate(v: &Value, cfg: &RunConfig, points: &[Q], k: i64) -> R<Outcome> {
    let (lp, curve) = load_lax(v)?;
    if points.is_empty() {
        return Err(CmdError::Usage("--points is empty".into()));
    }
    let ms = mseries(&lp, &curve, cfg)?;
    let slots = points.iter().map(|z| Slot::at(&ms, z)).collect::<ttrec_core::Result<Vec<_>>>()?;
    let mut c = Correlators::new(slots, cfg.k_order as i64 - 1)?;
    let w = core(c.connected((1 << points.len()) - 1).and_then(|s| coef(&s, k)), "W_n")?;
    let result = json!({
        "n": points.len(),
        "k": k,
        "points": points.iter().map(|z| json!([q_to(z), sheet_of(&curve, z)])).collect::<Vec<_>>(),
        "value": q_to(&w),
    });
    let text = format!("W_{}^({k}) = {}\n", points.len(), fmt_q(&w));
    Ok(Outcome { passed: true, result, text })
}

pub fn compare(v: &Value, cfg: &RunConfig) -> R<Outcome> {
    let (lp, curve) = load_lax(v)?;
    let ms = mseries(&lp, &curve, cfg)?;
    let nmax = cfg.chi_max + 2;
    let p = pins(&curve, nmax - 1, cfg.seed);
    let table = core(symbolic_table(&ms, &p, nmax, cfg.k_order as i64 - 1), "correlator table")?;
    let mut tr = core(TopRec::new(&curve), "topological recursion")?;
    let ident = core(identification(&mut tr, &table, &p, cfg.chi_max), "identification")?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for (g, n, ok) in &ident {
        let k = 2 * *g as i64 - 2 + *n as i64;
        let rec: RF = core(tr.eval_free(*g, *n, &p[..n - 1]), "ω_{g,n}")?;
        rows.push(json!({"g": g, "n": n, "status": if *ok { "equal" } else { "differ" }, "determinantal": rf_to(&table[&(*n, k)]), "recursion": rf_to(&rec)}));
        let _ = writeln!(text, "(g,n) = ({g},{n})  {}", if *ok { "equal" } else { "DIFFER" });
    }
    let passed = !ident.is_empty() && ident.iter().all(|i| i.2);
    Ok(Outcome { passed, result: json!({"pins": p.iter().map(q_to).collect::<Vec<_>>(), "identification": rows}), text })
}

pub fn tau(v: &Value, cfg: &RunConfig) -> R<Outcome> {
    let (lp, curve) = load_lax(v)?;
    let ms = mseries(&lp, &curve, cfg)?;
    let t = core(tau_t_derivative(&lp, &curve, &ms), "τ-derivative")?;
    let text = t.coeffs().iter().enumerate().map(|(i, c)| format!("hbar^{}: {}\n", t.low() + i as i64, fmt_q(c))).collect();
    Ok(Outcome { passed: true, result: json!({"tau_t_derivative": hseries_to(&t, q_to)}), text })
}

/// Sample pairs (z, z′) for the exponential-formula check.
pub fn default_pairs() -> Vec<(Q, Q)> {
    let q = |n: i64, d: i64| Q::new(n.into(), d.into());
    vec![(q(2, 1), q(1, 1)), (q(5, 2), q(3, 2)), (q(3, 1), q(2, 1)), (q(3, 2), q(11, 4)), (q(6, 5), q(13, 5))]
}

pub fn wkb(v: &Value, cfg: &RunConfig, pairs: &[(Q, Q)], max_order: usize) -> R<Outcome> {
    let (lp, curve) = load_lax(v)?;
    let ms = mseries(&lp, &curve, cfg)?;
    let (z, zp) = pairs.first().ok_or_else(|| CmdError::Usage("no sample pairs".into()))?;
    let k_check = cfg.k_order.min(3);
    let pc = core(psi_check(&ms, &[zp.clone(), z.clone()], cfg.precision, k_check), "Ψ recovery")?;
    let mut tr = core(TopRec::new(&curve), "topological recursion")?;
    let rep = core(conjecture_check(&curve, &mut tr, &ms, pairs, max_order, cfg.precision), "exponential formula")?;
    let tol = rep.tolerance;
    let psi_ok = pc.ode.iter().all(|r| *r < tol) && pc.projector < tol;
    let rows: Vec<Value> = rep.rows.iter().map(|r| json!({"z": q_to(&r.z), "zp": q_to(&r.zp), "order": r.order, "lhs": r.lhs, "rhs": r.rhs, "diff": format!("{:.3e}", r.diff)})).collect();
    let mut text = String::new();
    let _ = writeln!(text, "psi: ode residuals {:?}, projector {:.3e}", pc.ode.iter().map(|r| format!("{r:.3e}")).collect::<Vec<_>>(), pc.projector);
    for r in &rep.rows {
        let _ = writeln!(text, "z={} z'={} hbar^{:<2} diff {:.3e}", fmt_q(&r.z), fmt_q(&r.zp), r.order, r.diff);
    }
    let result = json!({
        "tolerance": format!("{tol:.1e}"),
        "psi": {"ode": pc.ode.iter().map(|r| format!("{r:.3e}")).collect::<Vec<_>>(), "projector": format!("{:.3e}", pc.projector)},
        "conjecture": rows,
    });
    Ok(Outcome { passed: psi_ok && rep.passed(), result, text })
}

/// Parses "p/q,p/q,..." into rationals.
pub fn parse_points(s: &str) -> R<Vec<Q>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| ttrec_core::algebra::rational::parse_q(t).map_err(|e| CmdError::Usage(e.to_string()))).collect()
}

/// Parses "z:z',z:z',..." into pairs.
pub fn parse_pairs(s: &str) -> R<Vec<(Q, Q)>> {
    s.split(',')
        .map(|t| {
            let (a, b) = t.split_once(':').ok_or_else(|| CmdError::Usage(format!("pair '{t}' is not z:z'")))?;
            let p = |u: &str| ttrec_core::algebra::rational::parse_q(u).map_err(|e| CmdError::Usage(e.to_string()));
            Ok((p(a)?, p(b)?))
        })
        .collect()
}
