use c4energy_core::MARGIN;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("tolerance must be a positive finite number, got {0}")]
    BadTolerance(f64),
}

/// Settings shared by every sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub max_order: usize,
    jobs: NonZeroUsize,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// `|E − n|` below this is recomputed before classification.
    margin: f64,
    /// Keep every examined graph in the report, not only the flagged ones.
    pub keep_all: bool,
}

impl RunConfig {
    pub fn new(max_order: usize) -> RunConfig {
        RunConfig {
            max_order,
            jobs: NonZeroUsize::MIN,
            out: None,
            format: Format::Csv,
            margin: MARGIN,
            keep_all: false,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Result<RunConfig, ConfigError> {
        self.jobs = NonZeroUsize::new(jobs).ok_or(ConfigError::NoWorkers)?;
        Ok(self)
    }

    pub fn with_margin(mut self, margin: f64) -> Result<RunConfig, ConfigError> {
        if !(margin.is_finite() && margin > 0.0) {
            return Err(ConfigError::BadTolerance(margin));
        }
        self.margin = margin;
        Ok(self)
    }

    pub fn jobs(&self) -> usize {
        self.jobs.get()
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }
}
