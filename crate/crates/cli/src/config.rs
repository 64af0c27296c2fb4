use std::path::Path;

use limcom_core::formats::read_json;
use limcom_core::{Caps, Result, SearchBudget};
use serde::Deserialize;

use crate::args::{Cli, Format};

/// Contents of a config file. Every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    caps: Caps,
    seed: Option<u64>,
    parallelism: Option<usize>,
    format: Option<Format>,
    budget: Option<SearchBudget>,
}

/// Effective settings: flags over config file over defaults.
#[derive(Debug, Clone)]
pub struct Settings {
    pub caps: Caps,
    pub budget: SearchBudget,
    pub jobs: Option<usize>,
    pub format: Format,
}

impl Settings {
    pub fn resolve(cli: &Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => read_json::<ConfigFile>(Path::new(path))?,
            None => ConfigFile::default(),
        };
        let mut budget = file.budget.unwrap_or_default();
        if let Some(seed) = cli.seed.or(file.seed) {
            budget.seed = seed;
        }
        Ok(Self {
            caps: file.caps,
            budget,
            jobs: cli.jobs.or(file.parallelism),
            format: cli.format.or(file.format).unwrap_or(Format::Json),
        })
    }
}
