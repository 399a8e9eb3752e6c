use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const MANIFEST_SCHEMA: &str = "artin-manifest/1";
pub const MANIFEST_NAME: &str = "manifest.json";

/// Writes through a sibling temporary file and a rename, so readers never
/// see a partial artifact.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let name = path.file_name().context("artifact path has no file name")?.to_string_lossy();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
    f.write_all(bytes)?;
    f.sync_all()?;
    drop(f);
    fs::rename(&tmp, path).with_context(|| format!("renaming onto {}", path.display()))?;
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut v = serde_json::to_vec_pretty(value)?;
    v.push(b'\n');
    Ok(v)
}

#[derive(Serialize)]
struct ArtifactDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunManifest<'a> {
    schema: &'a str,
    command: String,
    arguments: &'a [String],
    parameters: serde_json::Value,
    seed: Option<u64>,
    version: &'a str,
    wall_seconds: f64,
    phases: Vec<(String, f64)>,
    verdict: &'a str,
    artifacts: Vec<ArtifactDigest>,
}

/// Collects artifacts for one run and writes them with a manifest.
pub struct Run {
    dir: PathBuf,
    argv: Vec<String>,
    started: Instant,
    phases: Vec<(String, f64)>,
    written: Vec<(String, Vec<u8>)>,
}

impl Run {
    pub fn new(dir: &Path, argv: &[String]) -> Run {
        Run {
            dir: dir.to_path_buf(),
            argv: argv.to_vec(),
            started: Instant::now(),
            phases: Vec::new(),
            written: Vec::new(),
        }
    }

    pub fn phase(&mut self, name: &str, seconds: f64) {
        self.phases.push((name.to_string(), seconds));
    }

    pub fn write(&mut self, relative: &str, bytes: Vec<u8>) -> Result<()> {
        write_atomic(&self.dir.join(relative), &bytes)?;
        self.written.push((relative.to_string(), bytes));
        Ok(())
    }

    pub fn finish(self, parameters: serde_json::Value, seed: Option<u64>, pass: bool) -> Result<()> {
        let artifacts = self
            .written
            .iter()
            .map(|(p, b)| ArtifactDigest {
                path: p.clone(),
                sha256: hex::encode(Sha256::digest(b)),
            })
            .collect();
        let manifest = RunManifest {
            schema: MANIFEST_SCHEMA,
            command: self.argv.first().cloned().unwrap_or_default(),
            arguments: &self.argv,
            parameters,
            seed,
            version: env!("CARGO_PKG_VERSION"),
            wall_seconds: self.started.elapsed().as_secs_f64(),
            phases: self.phases,
            verdict: if pass { "pass" } else { "fail" },
            artifacts,
        };
        write_atomic(&self.dir.join(MANIFEST_NAME), &to_json(&manifest)?)
    }
}

/// `Cyc(3) x Sym(3)` becomes `cyc-3-x-sym-3`.
pub fn slug(spec: &str) -> String {
    let mut out = String::new();
    for ch in spec.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.ends_with('-') && !out.is_empty() {
            out.push('-');
        }
    }
    out.trim_end_matches('-').to_string()
}
