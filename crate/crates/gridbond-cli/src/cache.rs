//! Append-only result cache, one JSON record per line.
//!
//! Records are keyed by the grid shape, the sorted removal masks, and the
//! operation name; a record written by a different tool version is
//! ignored. Cached values are the deterministic part of a result, so a
//! hit is byte-identical to recomputation.

use gridbond::grid::GridGraph;
use serde_json::{json, Value};
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

const VERSION: &str = env!("CARGO_PKG_VERSION");

pub struct Cache {
    file: Option<PathBuf>,
    entries: HashMap<String, Value>,
}

impl Cache {
    /// Resolution order: explicit flag, `GRIDBOND_CACHE_DIR`, system temp
    /// directory. `disabled` turns the cache into a no-op.
    pub fn open(dir: Option<PathBuf>, disabled: bool) -> Cache {
        if disabled {
            return Cache { file: None, entries: HashMap::new() };
        }
        let dir = dir
            .or_else(|| std::env::var_os("GRIDBOND_CACHE_DIR").map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("gridbond-cache"));
        let file = dir.join("results.jsonl");
        let mut entries = HashMap::new();
        if let Ok(text) = fs::read_to_string(&file) {
            for line in text.lines() {
                let Ok(record) = serde_json::from_str::<Value>(line) else { continue };
                if record["version"].as_str() != Some(VERSION) {
                    continue;
                }
                if let (Some(key), Some(value)) = (record.get("key"), record.get("value")) {
                    entries.insert(key.to_string(), value.clone());
                }
            }
        }
        Cache { file: Some(file), entries }
    }

    pub fn lookup(&self, key: &Value) -> Option<Value> {
        self.file.as_ref()?;
        self.entries.get(&key.to_string()).cloned()
    }

    /// Appends the record; cache write failures are not fatal.
    pub fn store(&self, key: &Value, value: &Value) {
        let Some(file) = &self.file else { return };
        let record = json!({ "key": key, "value": value, "version": VERSION });
        let Some(dir) = file.parent() else { return };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        if let Ok(mut f) = fs::OpenOptions::new().create(true).append(true).open(file) {
            let _ = writeln!(f, "{record}");
        }
    }
}

/// Canonical cache key for an operation on a graph.
pub fn key(g: &GridGraph, op: &str) -> Value {
    let removed: Vec<String> = g.removed_edges().iter().map(|e| e.to_string()).collect();
    let deleted: Vec<String> = g.deleted_vertices().iter().map(|v| v.to_string()).collect();
    json!({
        "n": g.spec().n(),
        "m": g.spec().m(),
        "removed": removed,
        "deleted": deleted,
        "op": op,
    })
}
