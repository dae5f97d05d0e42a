//! Primary outputs against the committed CAS fixtures: exact for rationals, 1e-30 for numerics.

use serde_json::Value;
use ttrec::fixtures::{by_id, load_all};
use ttrec::json::{q_from, rf_from};
use ttrec_core::algebra::rational::parse_q;
use ttrec_core::algebra::{Poly, Q, RF};
use ttrec_core::correlators::{coef, loop_eq_check, m_series, tau_t_derivative};
use ttrec_core::numeric::{conjecture_check, to_f, F};
use ttrec_core::presets;
use ttrec_core::toprec::TopRec;

fn qv(v: &Value) -> Q {
    q_from(v, "$").unwrap()
}

fn pins(v: &Value) -> Vec<Q> {
    v.as_array().unwrap().iter().map(qv).collect()
}

fn gn(key: &str) -> (usize, usize) {
    let (g, n) = key.trim_matches(|c| c == '(' || c == ')').split_once(',').unwrap();
    (g.parse().unwrap(), n.parse().unwrap())
}

#[test]
fn fixtures_follow_the_schema() {
    let all = load_all().unwrap();
    assert!(all.len() >= 6);
    for f in all {
        assert!(!f.id.is_empty() && f.inputs.is_object() && f.expected.is_object());
        assert!(!f.provenance.script.is_empty() && f.provenance.cas_version.starts_with("sympy"));
    }
}

#[test]
fn airy_m_series_matches() {
    let f = by_id("airy_m_series").unwrap();
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let want = f.expected["M"].as_array().unwrap();
    assert_eq!(want.len(), 5);
    for (k, m) in want.iter().enumerate() {
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(ms.m[k].get(i, j), &rf_from(&m[i][j], "$").unwrap(), "M^({k})_{i}{j}");
            }
        }
    }
}

#[test]
fn airy_recursion_values_match() {
    let f = by_id("airy_tr_values").unwrap();
    let mut tr = TopRec::new(&presets::airy().curve).unwrap();
    for (key, want) in f.expected.as_object().unwrap() {
        let (g, n) = gn(key);
        let z = pins(&f.inputs["points"][key]);
        assert_eq!(z.len(), n);
        assert_eq!(tr.eval(g, n, &z).unwrap(), qv(want), "ω_{key}");
    }
    let f = by_id("airy_tr_free").unwrap();
    for (key, want) in f.expected.as_object().unwrap() {
        let (g, n) = gn(key);
        assert_eq!(tr.eval_free(g, n, &pins(&f.inputs["pins"][key])).unwrap(), rf_from(want, "$").unwrap(), "ω_{key}");
    }
}

#[test]
fn airy_loop_polynomial_matches() {
    let f = by_id("airy_loop_p1").unwrap();
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let r = loop_eq_check(&p.lax, &p.curve, &ms, &[qv(&f.inputs["pin"])], 3, 12, 3).unwrap();
    assert!(r.passed(), "{:?}", r.witnesses);
    for (j, want) in f.expected.as_object().unwrap() {
        let j: usize = j.parse().unwrap();
        let want: Vec<RF> = want.as_array().unwrap().iter().map(|c| rf_from(c, "$").unwrap()).collect();
        for (pw, got) in r.coefficients[j].iter().enumerate() {
            assert_eq!(got, want.get(pw).unwrap_or(&RF::poly(Poly::zero())), "P^({j}) coefficient of y^{pw}");
        }
    }
}

#[test]
fn painleve6_tau_matches() {
    let f = by_id("painleve6_tau_minus1").unwrap();
    let p = presets::painleve6(&presets::P6Witness::default()).unwrap();
    assert_eq!(p.curve.s.as_ref(), Some(&rf_from(&f.inputs["s"], "$").unwrap()));
    assert_eq!(p.curve.x, rf_from(&f.inputs["x"], "$").unwrap());
    assert_eq!(p.curve.y, rf_from(&f.inputs["y"], "$").unwrap());
    let ms = m_series(&p.lax, &p.curve, 2).unwrap();
    let t = tau_t_derivative(&p.lax, &p.curve, &ms).unwrap();
    assert_eq!(coef(&t, -1).unwrap(), qv(&f.expected["value"]));
}

#[test]
fn airy_exponential_formula_lhs_matches_oracle_rhs() {
    let f = by_id("airy_exponential_formula_rhs").unwrap();
    let rows = f.expected["rows"].as_array().unwrap();
    let pairs: Vec<(Q, Q)> = rows.iter().map(|r| (qv(&r["z"]), qv(&r["zp"]))).collect();
    let p = presets::airy();
    let ms = m_series(&p.lax, &p.curve, 4).unwrap();
    let mut tr = TopRec::new(&p.curve).unwrap();
    let rep = conjecture_check(&p.curve, &mut tr, &ms, &pairs, 2, 50).unwrap();
    let tol = to_f(&parse_q(&format!("1/1{}", "0".repeat(30))).unwrap(), 50);
    for (i, want) in rows.iter().enumerate() {
        for k in 0..=2usize {
            let row = rep.rows.iter().find(|r| r.z == pairs[i].0 && r.zp == pairs[i].1 && r.order == k as i64).unwrap();
            let got: F = row.lhs.parse().unwrap();
            let d = got - to_f(&qv(&want[format!("hbar{k}")]), 50);
            assert!(d < tol && -d < tol, "pair {i}, ℏ^{k}: {}", row.lhs);
        }
    }
}

