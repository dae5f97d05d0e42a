//! JSON encodings of the exact types, Lax-pair files and golden data.

use serde_json::{json, Map, Value};
use ttrec_core::algebra::rational::{fmt_q, parse_q};
use ttrec_core::algebra::{HSeries, Matrix, Point, Poly, Q, RF};
use ttrec_core::curve::SpectralCurve;
use ttrec_core::laxpair::{LaxPair, Status};
use ttrec_core::presets::{Golden, Preset};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),
    #[error("at {path}: {msg}")]
    Shape { path: String, msg: String },
    #[error(transparent)]
    Core(#[from] ttrec_core::Error),
}

type R<T> = Result<T, FormatError>;

fn shape<T>(path: &str, msg: impl Into<String>) -> R<T> {
    Err(FormatError::Shape { path: path.into(), msg: msg.into() })
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> R<&'a Value> {
    v.get(key).map_or_else(|| shape(path, format!("missing \"{key}\"")), Ok)
}

fn array<'a>(v: &'a Value, path: &str) -> R<&'a Vec<Value>> {
    v.as_array().map_or_else(|| shape(path, "expected an array"), Ok)
}

pub fn q_to(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn q_from(v: &Value, path: &str) -> R<Q> {
    match v {
        Value::String(s) => Ok(parse_q(s)?),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().unwrap().into())),
        _ => shape(path, "expected a rational string \"p/q\""),
    }
}

pub fn point_to(p: &Point) -> Value {
    Value::String(p.to_string())
}

pub fn point_from(v: &Value, path: &str) -> R<Point> {
    if v.as_str() == Some("inf") {
        return Ok(Point::Infinity);
    }
    Ok(Point::Finite(q_from(v, path)?))
}

pub fn poly_to(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(q_to).collect())
}

pub fn poly_from(v: &Value, path: &str) -> R<Poly> {
    let c = array(v, path)?.iter().enumerate().map(|(i, c)| q_from(c, &format!("{path}[{i}]"))).collect::<R<Vec<_>>>()?;
    Ok(Poly::new(c))
}

pub fn rf_to(f: &RF) -> Value {
    json!({"num": poly_to(f.num()), "den": poly_to(f.den())})
}

pub fn rf_from(v: &Value, path: &str) -> R<RF> {
    let num = poly_from(field(v, "num", path)?, &format!("{path}.num"))?;
    let den = poly_from(field(v, "den", path)?, &format!("{path}.den"))?;
    Ok(RF::new(num, den)?)
}

pub fn matrix_to<T: Clone>(m: &Matrix<T>, f: impl Fn(&T) -> Value) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(&f).collect())).collect())
}

pub fn matrix_from<T: Clone>(v: &Value, path: &str, f: impl Fn(&Value, &str) -> R<T>) -> R<Matrix<T>> {
    let rows = array(v, path)?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        let p = format!("{path}[{i}]");
        out.push(array(r, &p)?.iter().enumerate().map(|(j, e)| f(e, &format!("{p}[{j}]"))).collect::<R<Vec<T>>>()?);
    }
    let cols = out.first().map_or(0, Vec::len);
    if out.is_empty() || out.iter().any(|r| r.len() != cols) {
        return shape(path, "ragged or empty matrix");
    }
    Ok(Matrix::from_rows(out))
}

pub fn hseries_to<T: ttrec_core::algebra::Ring>(s: &HSeries<T>, f: impl Fn(&T) -> Value) -> Value {
    json!({"lowest": s.low(), "coeffs": s.coeffs().iter().map(f).collect::<Vec<_>>()})
}

pub fn curve_to(c: &SpectralCurve) -> Value {
    json!({"x": rf_to(&c.x), "y": rf_to(&c.y), "s": c.s.as_ref().map(rf_to), "d": c.d})
}

pub fn curve_from(v: &Value, path: &str) -> R<SpectralCurve> {
    let x = rf_from(field(v, "x", path)?, &format!("{path}.x"))?;
    let y = rf_from(field(v, "y", path)?, &format!("{path}.y"))?;
    let s = match v.get("s") {
        None | Some(Value::Null) => None,
        Some(s) => Some(rf_from(s, &format!("{path}.s"))?),
    };
    let c = SpectralCurve::new(x, y, s)?;
    if let Some(d) = v.get("d").and_then(Value::as_u64) {
        if d as usize != c.d {
            return shape(path, format!("d = {d} but x(z) has degree {}", c.d));
        }
    }
    Ok(c)
}

/// A Lax-pair file: the pair itself plus its parametrization, if any.
#[derive(Clone, Debug)]
pub struct LaxFile {
    pub name: Option<String>,
    pub lax: LaxPair,
    pub curve: Option<SpectralCurve>,
}

pub fn lax_to(name: &str, lp: &LaxPair, curve: &SpectralCurve) -> Value {
    let mats = |ms: &[Matrix<RF>]| Value::Array(ms.iter().map(|m| matrix_to(m, rf_to)).collect());
    let params: Map<String, Value> = lp.params.iter().map(|(k, v)| (k.clone(), q_to(v))).collect();
    json!({
        "name": name,
        "d": lp.d,
        "K": lp.k,
        "params": params,
        "L": mats(&lp.l),
        "R": lp.r.as_deref().map(mats),
        "parametrization": {"x": rf_to(&curve.x), "y": rf_to(&curve.y), "s": curve.s.as_ref().map(rf_to)},
    })
}

pub fn lax_from(v: &Value) -> R<LaxFile> {
    let d = field(v, "d", "$")?.as_u64().map_or_else(|| shape("$.d", "expected a positive integer"), Ok)? as usize;
    let k = field(v, "K", "$")?.as_u64().map_or_else(|| shape("$.K", "expected an integer"), Ok)? as usize;
    let mats = |key: &str, val: &Value| -> R<Vec<Matrix<RF>>> {
        array(val, &format!("$.{key}"))?.iter().enumerate().map(|(i, m)| matrix_from(m, &format!("$.{key}[{i}]"), rf_from)).collect()
    };
    let l = mats("L", field(v, "L", "$")?)?;
    let r = match v.get("R") {
        None | Some(Value::Null) => None,
        Some(r) => Some(mats("R", r)?),
    };
    let mut params = Vec::new();
    if let Some(p) = v.get("params") {
        let obj = p.as_object().map_or_else(|| shape("$.params", "expected an object"), Ok)?;
        for (key, val) in obj {
            params.push((key.clone(), q_from(val, &format!("$.params.{key}"))?));
        }
    }
    let lax = LaxPair::new(d, k, l, r)?.with_params(params);
    let curve = match v.get("parametrization") {
        None | Some(Value::Null) => None,
        Some(p) => Some(curve_from(p, "$.parametrization")?),
    };
    Ok(LaxFile { name: v.get("name").and_then(Value::as_str).map(String::from), lax, curve })
}

pub fn status_to(s: Status) -> Value {
    Value::String(
        match s {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotCheckable => "not-checkable",
        }
        .into(),
    )
}

fn status_from(v: &Value, path: &str) -> R<Status> {
    match v.as_str() {
        Some("pass") => Ok(Status::Pass),
        Some("fail") => Ok(Status::Fail),
        Some("not-checkable") => Ok(Status::NotCheckable),
        _ => shape(path, "expected pass|fail|not-checkable"),
    }
}

pub fn golden_to(g: &Golden) -> Value {
    let qm = |m: &Option<Matrix<Q>>| m.as_ref().map(|m| matrix_to(m, q_to));
    json!({
        "C": qm(&g.c),
        "v": qm(&g.v),
        "gamma0": qm(&g.gamma0),
        "gamma0_up_to_scale": g.gamma0_up_to_scale,
        "branchpoints": g.branchpoints.iter().map(point_to).collect::<Vec<_>>(),
        "statuses": g.statuses.iter().map(|s| status_to(*s)).collect::<Vec<_>>(),
    })
}

pub fn golden_from(v: &Value) -> R<Golden> {
    let qm = |key: &str| -> R<Option<Matrix<Q>>> {
        match v.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(m) => Ok(Some(matrix_from(m, &format!("$.{key}"), q_from)?)),
        }
    };
    let st = array(field(v, "statuses", "$")?, "$.statuses")?;
    if st.len() != 6 {
        return shape("$.statuses", "expected six statuses");
    }
    let mut statuses = [Status::Pass; 6];
    for (i, s) in st.iter().enumerate() {
        statuses[i] = status_from(s, &format!("$.statuses[{i}]"))?;
    }
    Ok(Golden {
        c: qm("C")?,
        v: qm("v")?,
        gamma0: qm("gamma0")?,
        gamma0_up_to_scale: v.get("gamma0_up_to_scale").and_then(Value::as_bool).unwrap_or(false),
        branchpoints: array(field(v, "branchpoints", "$")?, "$.branchpoints")?.iter().enumerate().map(|(i, p)| point_from(p, &format!("$.branchpoints[{i}]"))).collect::<R<_>>()?,
        statuses,
    })
}

/// A preset from its Lax file and sibling golden file.
pub fn preset_from(lax: &Value, golden: &Value) -> R<Preset> {
    let f = lax_from(lax)?;
    let Some(curve) = f.curve else { return shape("$", "preset needs a parametrization") };
    Ok(Preset { name: f.name.unwrap_or_default(), lax: f.lax, curve, golden: golden_from(golden)? })
}

/// Serializes with two-space indentation and a trailing newline.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
