//! Fixture files: {"id", "inputs", "expected", "provenance": {"script", "cas_version"}}.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

#[derive(Clone, Debug, Deserialize)]
pub struct Provenance {
    pub script: String,
    pub cas_version: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub inputs: Value,
    pub expected: Value,
    pub provenance: Provenance,
}

/// Workspace root, two levels above this crate.
pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn load(path: &Path) -> Result<Fixture, String> {
    let s = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&s).map_err(|e| format!("{}: {e}", path.display()))
}

/// Every fixture under `fixtures/`, sorted by file name.
pub fn load_all() -> Result<Vec<Fixture>, String> {
    let dir = workspace_root().join("fixtures");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir).map_err(|e| format!("{}: {e}", dir.display()))?.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "json")).collect();
    paths.sort();
    paths.iter().map(|p| load(p)).collect()
}

pub fn by_id(id: &str) -> Result<Fixture, String> {
    load_all()?.into_iter().find(|f| f.id == id).ok_or_else(|| format!("no fixture with id {id}"))
}
