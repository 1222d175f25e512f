use fulton_core::{Field, FieldKind, Fp31, Rational};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum FieldMode {
    /// Residues modulo 2^31 - 1.
    Prime,
    Rational,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Sweep bounds and sampling controls. Echoed verbatim into every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub r_max: usize,
    /// Bound on `|μ| + |ν|`.
    pub size_max: usize,
    pub n_list: Vec<usize>,
    pub n_max: usize,
    pub s_max: usize,
    pub seed: u64,
    pub trials: usize,
    pub field: FieldMode,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            r_max: 3,
            size_max: 12,
            n_list: vec![2, 3],
            n_max: 6,
            s_max: 4,
            seed: 0,
            trials: 3,
            field: FieldMode::Prime,
        }
    }
}

impl SweepConfig {
    pub fn field_kind(&self) -> FieldKind {
        match self.field {
            FieldMode::Prime => Fp31::kind(),
            FieldMode::Rational => Rational::kind(),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bounds = [
            ("r_max", self.r_max),
            ("size_max", self.size_max),
            ("n_max", self.n_max),
            ("s_max", self.s_max),
            ("trials", self.trials),
        ];
        for (name, value) in bounds {
            if value < 1 {
                return Err(CliError::Usage(format!("{name} must be at least 1")));
            }
        }
        if self.n_list.is_empty() {
            return Err(CliError::Usage("n_list must be nonempty".into()));
        }
        if self.n_list.contains(&0) {
            return Err(CliError::Usage("scaling factors must be at least 1".into()));
        }
        Ok(())
    }
}
