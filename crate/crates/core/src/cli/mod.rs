//! Library side of the `orbitframe` command: configuration, analyses,
//! demos, and JSON reports.

pub mod analyze;
pub mod config;
pub mod d3;
pub mod demos;
pub mod json;
pub mod report;

pub use analyze::{run_analyze, run_config};
pub use config::AnalysisConfig;
pub use d3::D3Model;
pub use demos::{demo_comb, demo_dihedral, demo_fiberization, FiberInput};
pub use report::{Document, Report, Status};

use crate::linalg::{DEFAULT_RANK_CUTOFF, DEFAULT_TOL};

/// Agreement required between a certificate and its oracle.
pub const ORACLE_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 20;

/// Command-line values, which win over the config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub tol: Option<f64>,
    pub rank_cutoff: Option<f64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub tol: f64,
    pub rank_cutoff: f64,
    pub seed: u64,
    pub samples: usize,
}

impl Settings {
    pub fn resolve(
        overrides: &Overrides,
        tol: Option<f64>,
        rank_cutoff: Option<f64>,
        seed: Option<u64>,
        samples: Option<usize>,
    ) -> Self {
        Self {
            tol: overrides.tol.or(tol).unwrap_or(DEFAULT_TOL),
            rank_cutoff: overrides.rank_cutoff.or(rank_cutoff).unwrap_or(DEFAULT_RANK_CUTOFF),
            seed: overrides.seed.or(seed).unwrap_or(DEFAULT_SEED),
            samples: samples.unwrap_or(DEFAULT_SAMPLES),
        }
    }
}

impl Default for Settings {
    fn default() -> Self {
        Self::resolve(&Overrides::default(), None, None, None, None)
    }
}
