//! Plain-file cache of rendered artifacts, keyed by command, arguments and code
//! version.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Identifies the code that produced an artifact.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "-", env!("SEXTIC_CODE_HASH"));

#[derive(Serialize, Deserialize)]
struct Entry {
    schema: u32,
    key: String,
    command: String,
    output: String,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(command: &str, args: &[&str]) -> String {
        let mut h = Sha256::new();
        for part in [CODE_VERSION, command].iter().chain(args) {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// The cached output for `(command, args)`, or the result of `compute`, which is
    /// stored on success.
    pub fn get_or_compute(
        &self,
        command: &str,
        args: &[&str],
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        let key = Self::key(command, args);
        let Some(path) = self.path(&key) else {
            return compute();
        };
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(e) = serde_json::from_str::<Entry>(&text) {
                if e.schema == 1 && e.key == key {
                    return Ok(e.output);
                }
            }
        }
        let output = compute()?;
        let dir = self.dir.as_ref().expect("path implies dir");
        fs::create_dir_all(dir).with_context(|| format!("creating cache dir {}", dir.display()))?;
        let entry = Entry {
            schema: 1,
            key,
            command: command.to_string(),
            output: output.clone(),
        };
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&entry)?)
            .with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &path).with_context(|| format!("writing {}", path.display()))?;
        Ok(output)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_separate_arguments() {
        assert_ne!(Cache::key("a", &["bc"]), Cache::key("a", &["b", "c"]));
        assert_eq!(Cache::key("a", &["b"]), Cache::key("a", &["b"]));
    }
}
