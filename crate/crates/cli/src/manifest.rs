//! Run manifests and tracked output directories.
//!
//! Every command ends by writing a `manifest.json` describing what ran:
//! the resolved flags, SHA-256 of every input and output, tool version,
//! and a UTC timestamp. The timestamp is the only field that varies between
//! identical runs; all data outputs are byte-reproducible.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};
use socnet_core::{Error, Result};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        let _ = write!(out, "{b:02x}");
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub command: &'static str,
    pub tool_version: &'static str,
    /// RFC 3339; informational only and deliberately excluded from any
    /// reproducibility comparison.
    pub created_utc: String,
    pub seed: Option<u64>,
    pub flags: BTreeMap<&'static str, String>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

impl RunManifest {
    pub fn new(command: &'static str) -> Self {
        let created_utc = time::OffsetDateTime::now_utc()
            .format(&time::format_description::well_known::Rfc3339)
            .unwrap_or_else(|_| String::from("unknown"));
        RunManifest {
            command,
            tool_version: env!("CARGO_PKG_VERSION"),
            created_utc,
            seed: None,
            flags: BTreeMap::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            details: serde_json::Value::Null,
        }
    }

    pub fn flag(&mut self, name: &'static str, value: impl std::fmt::Display) {
        self.flags.insert(name, value.to_string());
    }

    /// Records outputs written so far and lands the manifest itself.
    pub fn write(mut self, out: &mut OutDir) -> Result<()> {
        self.outputs = out.digests();
        let bytes = to_json_bytes(&self)?;
        out.write("manifest.json", &bytes)
    }
}

pub fn to_json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// An output directory that remembers what it wrote. Files land via a
/// temp-file rename, and a failed command can discard everything it
/// produced so far instead of leaving partial results behind.
pub struct OutDir {
    dir: PathBuf,
    written: Vec<FileDigest>,
}

impl OutDir {
    pub fn create(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(OutDir {
            dir: dir.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn write(&mut self, name: &str, bytes: &[u8]) -> Result<()> {
        let tmp = self.dir.join(format!("{name}.tmp"));
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, self.dir.join(name))?;
        self.written.push(FileDigest {
            path: name.to_string(),
            sha256: sha256_hex(bytes),
        });
        Ok(())
    }

    /// Digests of everything written so far, except manifests.
    pub fn digests(&self) -> Vec<FileDigest> {
        self.written
            .iter()
            .filter(|d| d.path != "manifest.json")
            .cloned()
            .collect()
    }

    /// Removes every file this run managed to write.
    pub fn discard(&self) {
        for d in &self.written {
            let _ = fs::remove_file(self.dir.join(&d.path));
        }
    }
}
