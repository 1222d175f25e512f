use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use fulton_core::{Fp31, Rational};

use crate::commands::{self, Checkpointing};
use crate::config::{FieldMode, OutputFormat, SweepConfig};
use crate::error::CliError;
use crate::formats::{parse_lr_fixture, parse_n_list, parse_partition, parse_problem};
use crate::report::Report;
use crate::sweep::CHECKPOINT_EVERY;

/// Exact checks around Schubert calculus, Littlewood-Richardson
/// coefficients and the tangent space filtration.
#[derive(Debug, Parser)]
#[command(name = "fulton", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Largest partition length (LR sweeps) or subspace dimension (problem sweeps).
    #[arg(long, global = true, default_value_t = 3)]
    pub r_max: usize,
    /// Bound on |μ| + |ν|.
    #[arg(long, global = true, default_value_t = 12)]
    pub size_max: usize,
    /// Scaling factors, comma-separated.
    #[arg(long, global = true, default_value = "2,3")]
    pub n_list: String,
    /// Largest ambient dimension.
    #[arg(long, global = true, default_value_t = 6)]
    pub n_max: usize,
    /// Largest number of conditions.
    #[arg(long, global = true, default_value_t = 4)]
    pub s_max: usize,
    #[arg(long, global = true, env = "FULTON_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Samples per agreement batch.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = FieldMode::Prime)]
    pub field: FieldMode,
    /// Report destination; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Progress file for sweeps; an existing file from the same run is resumed.
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = CHECKPOINT_EVERY, hide = true)]
    pub checkpoint_every: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// c = 1 iff c_N = 1 over all triples in range.
    Fulton,
    /// c = 0 iff c_N = 0 over all triples in range.
    Saturation,
    /// Intersection numbers against generic Hom dimensions.
    Crosscheck,
    /// Semistability of problem weights, or of one weight table.
    Semistable {
        /// Weight table, one comma-separated row per flag.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Trace and audit of one problem, e.g. `2,4@4 1,4@4`.
    Filtration {
        #[arg(required = true, num_args = 1..)]
        sets: Vec<String>,
    },
    /// One coefficient `MU NU LAMBDA`, or a fixture of expected values.
    Lr {
        #[arg(num_args = 0..=3)]
        partitions: Vec<String>,
        /// JSON list of {mu, nu, lambda, expected}.
        #[arg(long, conflicts_with = "partitions")]
        fixture: Option<PathBuf>,
    },
}

impl CommonArgs {
    pub fn config(&self) -> Result<SweepConfig, CliError> {
        let cfg = SweepConfig {
            r_max: self.r_max,
            size_max: self.size_max,
            n_list: parse_n_list(&self.n_list)?,
            n_max: self.n_max,
            s_max: self.s_max,
            seed: self.seed,
            trials: self.trials,
            field: self.field,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Runs the parsed command and stamps the wall time.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let cfg = cli.common.config()?;
    let ckpt = Checkpointing {
        path: cli.common.checkpoint.as_deref(),
        every: cli.common.checkpoint_every,
    };
    let mut report = match &cli.command {
        Command::Fulton => commands::cmd_fulton(&cfg, ckpt)?,
        Command::Saturation => commands::cmd_saturation(&cfg, ckpt)?,
        Command::Crosscheck => match cfg.field {
            FieldMode::Prime => commands::cmd_crosscheck::<Fp31>(&cfg, ckpt)?,
            FieldMode::Rational => commands::cmd_crosscheck::<Rational>(&cfg, ckpt)?,
        },
        Command::Semistable { weights: None } => commands::cmd_semistable(&cfg, ckpt)?,
        Command::Semistable {
            weights: Some(path),
        } => commands::cmd_semistable_weights(&cfg, &std::fs::read_to_string(path)?)?,
        Command::Filtration { sets } => {
            let problem = parse_problem(sets)?;
            match cfg.field {
                FieldMode::Prime => commands::cmd_filtration::<Fp31>(&cfg, &problem)?,
                FieldMode::Rational => commands::cmd_filtration::<Rational>(&cfg, &problem)?,
            }
        }
        Command::Lr {
            partitions,
            fixture,
        } => {
            let entries = match fixture {
                Some(path) => commands::lr_fixture_entries(&parse_lr_fixture(
                    &std::fs::read_to_string(path)?,
                )?)?,
                None if partitions.len() == 3 => vec![(
                    parse_partition(&partitions[0])?,
                    parse_partition(&partitions[1])?,
                    parse_partition(&partitions[2])?,
                    None,
                )],
                None => {
                    return Err(CliError::Usage(
                        "lr takes MU NU LAMBDA or --fixture FILE".into(),
                    ))
                }
            };
            commands::cmd_lr(&cfg, &entries)?
        }
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
