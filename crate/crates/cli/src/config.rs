//! Run configuration shared by all commands.

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

pub const DEFAULT_COSET_LIMIT: usize = 1_000_000;
pub const MIN_COSET_LIMIT: usize = 1_000;
/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SEXTIC_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub coset_limit: usize,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
    pub quiet: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            coset_limit: DEFAULT_COSET_LIMIT,
            format: Format::Json,
            cache_dir: None,
            seed: 0,
            quiet: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.coset_limit < MIN_COSET_LIMIT {
            bail!("--limit must be at least {MIN_COSET_LIMIT}");
        }
        Ok(())
    }
}
