use serde_json::{json, Value};
use ttrec::fixtures::workspace_root;
use ttrec::json::{golden_from, golden_to, lax_from, lax_to, preset_from, pretty, q_from, q_to, rf_from, rf_to, FormatError};
use ttrec_core::algebra::{q, Poly, RF};
use ttrec_core::presets::{by_name, NAMES};

fn read(path: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn exact_values_roundtrip() {
    for x in [q(0, 1), q(-7, 3), q(123456789, 1000)] {
        assert_eq!(q_from(&q_to(&x), "$").unwrap(), x);
    }
    assert_eq!(q_from(&json!(5), "$").unwrap(), q(5, 1));
    let f = RF::new(Poly::new(vec![q(1, 2), q(0, 1), q(-3, 1)]), Poly::from_i64(&[-4, 0, 1])).unwrap();
    assert_eq!(rf_from(&rf_to(&f), "$").unwrap(), f);
    assert!(rf_from(&json!({"num": ["1"], "den": []}), "$").is_err());
    assert!(matches!(q_from(&json!("1/x"), "$"), Err(FormatError::Core(_))));
}

#[test]
fn presets_roundtrip_through_json() {
    for name in NAMES {
        let p = by_name(name).unwrap();
        let f = lax_from(&lax_to(&p.name, &p.lax, &p.curve)).unwrap();
        assert_eq!(f.lax, p.lax, "{name}");
        assert_eq!(f.curve.as_ref(), Some(&p.curve), "{name}");
        assert_eq!(golden_from(&golden_to(&p.golden)).unwrap(), p.golden, "{name}");
    }
}

#[test]
fn committed_presets_match_builtins() {
    let dir = workspace_root().join("presets");
    for name in NAMES {
        let p = by_name(name).unwrap();
        let lax_path = dir.join(format!("{name}.json"));
        let golden_path = dir.join(format!("{name}.golden.json"));
        assert_eq!(std::fs::read_to_string(&lax_path).unwrap(), pretty(&lax_to(&p.name, &p.lax, &p.curve)), "{name}");
        assert_eq!(std::fs::read_to_string(&golden_path).unwrap(), pretty(&golden_to(&p.golden)), "{name}");
        assert_eq!(preset_from(&read(&lax_path), &read(&golden_path)).unwrap(), p);
    }
}

#[test]
fn shape_errors_name_the_offending_path() {
    let mut v = lax_to("airy", &by_name("airy").unwrap().lax, &by_name("airy").unwrap().curve);
    v["L"][0][1][0] = json!({"num": ["1"]});
    let e = lax_from(&v).unwrap_err().to_string();
    assert!(e.contains("$.L[0][1][0]") && e.contains("den"), "{e}");
    v["L"] = json!([[[]]]);
    assert!(lax_from(&v).is_err());
}
