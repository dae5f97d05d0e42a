//! Report envelope: tool version, configuration, seed and input hash around a command result.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::commands::RunConfig;

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn envelope(command: &str, input: &str, input_bytes: &[u8], cfg: &RunConfig, passed: bool, result: Value) -> Value {
    json!({
        "tool": "ttrec",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input": input,
        "input_sha256": sha256_hex(input_bytes),
        "config": cfg,
        "status": if passed { "pass" } else { "fail" },
        "result": result,
    })
}
