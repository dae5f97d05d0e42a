use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use ttrec::fixtures::workspace_root;

fn ttrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttrec")).args(args).env_remove("TTREC_PRECISION").output().unwrap()
}

fn preset(name: &str) -> String {
    workspace_root().join("presets").join(format!("{name}.json")).display().to_string()
}

fn scratch(name: &str, body: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn certify_exit_codes() {
    let o = ttrec(&["lax", "certify", &preset("airy")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["command"], "lax certify");
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);

    let o = ttrec(&["lax", "certify", &preset("negative_a3")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("(-2/1, 2/1)"));

    let o = ttrec(&["lax", "certify", &preset("negative_a5")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_input_is_an_error() {
    let o = ttrec(&["lax", "certify", &scratch("broken.json", "{\"d\": 2, \"K\": ")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(preset("airy")).unwrap()).unwrap();
    v["parametrization"] = Value::Null;
    let o = ttrec(&["lax", "certify", &scratch("no_param.json", &v.to_string())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parametrization"));

    let o = ttrec(&["lax", "certify", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tau_with_vanishing_s_is_zero() {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(preset("airy")).unwrap()).unwrap();
    v["parametrization"]["s"] = serde_json::json!({"num": [], "den": ["1/1"]});
    let o = ttrec(&["tau", &scratch("airy_s0.json", &v.to_string())]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    let coeffs = r["result"]["tau_t_derivative"]["coeffs"].as_array().unwrap();
    assert!(!coeffs.is_empty() && coeffs.iter().all(|c| c == "0/1"), "{r}");
}

#[test]
fn reports_are_deterministic() {
    let args = ["--seed", "3", "tr", "compute", &preset("airy")];
    let a = ttrec(&args);
    let b = ttrec(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn precision_flag_overrides_environment() {
    let p = preset("airy");
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_ttrec"));
        c.env_remove("TTREC_PRECISION");
        if let Some(e) = env {
            c.env("TTREC_PRECISION", e);
        }
        let mut args = vec!["wkb", p.as_str(), "--pairs", "2:1", "--max-order", "1"];
        if let Some(f) = flag {
            args.extend(["--precision", f]);
        }
        json(&c.args(args).output().unwrap())["config"]["precision"].as_u64().unwrap()
    };
    assert_eq!(run(None, None), 50);
    assert_eq!(run(Some("40"), None), 40);
    assert_eq!(run(Some("40"), Some("60")), 60);
}

#[test]
fn correlate_and_compare_on_airy() {
    let p = preset("airy");
    let o = ttrec(&["correlate", &p, "--points", "1,2,3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    // W₃⁽¹⁾ = ω₀,₃ / (x′(1)x′(2)x′(3)) = (−1/72) / 48
    assert_eq!(json(&o)["result"]["value"], "-1/3456");
    let o = ttrec(&["compare", &p]);
    assert_eq!(o.status.code(), Some(0));
    let o = ttrec(&["--format", "text", "curve", "inspect", &p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("curve inspect: pass"));
}

#[test]
fn preset_export_writes_both_files() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("export");
    std::fs::create_dir_all(&dir).unwrap();
    let o = ttrec(&["preset", "export", "painleve6", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for f in ["painleve6.json", "painleve6.golden.json"] {
        assert_eq!(std::fs::read(dir.join(f)).unwrap(), std::fs::read(workspace_root().join("presets").join(f)).unwrap());
    }
    assert_eq!(ttrec(&["preset", "export", "nope", dir.to_str().unwrap()]).status.code(), Some(2));
}
