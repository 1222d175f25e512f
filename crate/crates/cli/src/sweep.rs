//! Parallel evaluation of enumerated instances with ordered aggregation and
//! optional checkpointing.

use std::path::Path;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::SweepConfig;
use crate::error::CliError;
use crate::report::{CheckCount, Counterexample, SCHEMA_VERSION};

pub const CHECKPOINT_EVERY: usize = 10_000;

/// Generator for instance `index`: the master seed picks the key, the index
/// picks the stream, so instances never share randomness.
pub fn instance_rng(master: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng
}

/// What one instance contributed: `(check index, passed)` pairs and any
/// counterexamples.
#[derive(Debug, Default)]
pub struct InstanceOutcome {
    pub results: Vec<(usize, bool)>,
    pub counterexamples: Vec<Counterexample>,
}

impl InstanceOutcome {
    pub fn record(&mut self, check: usize, passed: bool) {
        self.results.push((check, passed));
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct Checkpoint {
    schema_version: u32,
    command: String,
    config: SweepConfig,
    total: u64,
    next_index: u64,
    checks: Vec<CheckCount>,
    counterexamples: Vec<Counterexample>,
}

pub struct Sweep<'a> {
    pub command: &'a str,
    pub config: &'a SweepConfig,
    pub checkpoint: Option<&'a Path>,
    pub chunk: usize,
}

#[derive(Debug)]
pub struct SweepTotals {
    pub checks: Vec<CheckCount>,
    pub counterexamples: Vec<Counterexample>,
}

impl Sweep<'_> {
    /// Evaluates `instances` in chunks of `self.chunk`. Within a chunk the
    /// work is parallel; results are folded in enumeration order, and the
    /// checkpoint (if any) is rewritten after every chunk. A checkpoint
    /// left by an identical run is resumed from.
    pub fn run<I, S, Init, Eval>(
        &self,
        names: &[&str],
        instances: &[I],
        init: Init,
        eval: Eval,
    ) -> Result<SweepTotals, CliError>
    where
        I: Sync,
        Init: Fn() -> S + Sync + Send,
        Eval: Fn(&mut S, u64, &I) -> Result<InstanceOutcome, CliError> + Sync + Send,
    {
        let total = instances.len() as u64;
        let mut state = Checkpoint {
            schema_version: SCHEMA_VERSION,
            command: self.command.into(),
            config: self.config.clone(),
            total,
            next_index: 0,
            checks: names.iter().map(|n| CheckCount::new(n)).collect(),
            counterexamples: Vec::new(),
        };
        if let Some(path) = self.checkpoint.filter(|p| p.exists()) {
            let saved: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            if saved.command != state.command
                || saved.config != state.config
                || saved.total != total
                || saved.schema_version != SCHEMA_VERSION
            {
                return Err(CliError::Usage(format!(
                    "checkpoint {} belongs to a different run",
                    path.display()
                )));
            }
            state = saved;
        }
        let chunk = self.chunk.max(1);
        while state.next_index < total {
            let start = state.next_index as usize;
            let end = (start + chunk).min(instances.len());
            let outcomes: Vec<Result<InstanceOutcome, CliError>> = instances[start..end]
                .par_iter()
                .enumerate()
                .map_init(&init, |s, (k, inst)| eval(s, (start + k) as u64, inst))
                .collect();
            for outcome in outcomes {
                let outcome = outcome?;
                for (check, passed) in outcome.results {
                    state.checks[check].record(passed);
                }
                state.counterexamples.extend(outcome.counterexamples);
            }
            state.next_index = end as u64;
            if let Some(path) = self.checkpoint {
                let tmp = path.with_extension("tmp");
                std::fs::write(&tmp, serde_json::to_string(&state)?)?;
                std::fs::rename(&tmp, path)?;
            }
        }
        Ok(SweepTotals {
            checks: state.checks,
            counterexamples: state.counterexamples,
        })
    }
}
