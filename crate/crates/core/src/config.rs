use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

pub const DEFAULT_PRECISION: u32 = 256;
pub const MIN_PRECISION: u32 = 64;

/// Runtime limits and numeric settings shared by the library and the CLI.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub precision_bits: u32,
    /// Largest n for brute-force partition enumeration.
    pub n_cap_enumeration: u64,
    /// Largest n for the full (m, n) crank table.
    pub n_cap_dense: u64,
    /// Largest n for residue tables.
    pub n_cap_residue: u64,
    /// Relative size of the discarded imaginary part tolerated in estimates.
    pub realness_tolerance: f64,
    pub output_path: Option<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision_bits: DEFAULT_PRECISION,
            n_cap_enumeration: 45,
            n_cap_dense: 500,
            n_cap_residue: 5000,
            realness_tolerance: 1e-6,
            output_path: None,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < MIN_PRECISION {
            return domain(format!(
                "precision_bits must be at least {MIN_PRECISION}, got {}",
                self.precision_bits
            ));
        }
        if self.n_cap_enumeration == 0 || self.n_cap_dense == 0 || self.n_cap_residue == 0 {
            return domain("caps must be positive");
        }
        if self.realness_tolerance.is_nan() || self.realness_tolerance <= 0.0 {
            return domain("realness_tolerance must be positive");
        }
        Ok(())
    }
}
