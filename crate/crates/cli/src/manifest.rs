use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config_hash: String,
    pub config: serde_json::Value,
    pub started: String,
    pub finished: String,
    pub outputs: Vec<PathBuf>,
    pub exit_code: i32,
}

/// SHA-256 of the compact JSON form of `config`. Object keys serialize in
/// declaration order, so the hash depends only on the values.
pub fn config_hash<T: Serialize>(config: &T) -> Result<String> {
    let bytes = serde_json::to_vec(config)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

pub fn write_manifest(dir: &Path, m: &RunManifest) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join("manifest.json");
    let text = serde_json::to_string_pretty(m)?;
    fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}
