//! Text forms accepted on the command line and in fixture files.
//!
//! Partitions: `3,2,1`; `0` or the empty string is the empty partition.
//! Index sets: `1,3@4` is `{1, 3}` inside `[4]`.

use fulton_core::{IndexSet, Partition, SchubertProblem};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

fn parse_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{t:?} is not a nonnegative integer")))
        })
        .collect()
}

pub fn parse_partition(text: &str) -> Result<Partition, CliError> {
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok(Partition::empty());
    }
    Ok(Partition::new(parse_list(text)?)?)
}

pub fn format_partition(lambda: &Partition) -> String {
    if lambda.is_empty() {
        return "0".into();
    }
    lambda
        .parts()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_index_set(text: &str) -> Result<IndexSet, CliError> {
    let (elements, n) = text
        .split_once('@')
        .ok_or_else(|| CliError::Usage(format!("{text:?} lacks the @n suffix")))?;
    let n = n
        .trim()
        .parse::<usize>()
        .map_err(|_| CliError::Usage(format!("bad ambient dimension in {text:?}")))?;
    Ok(IndexSet::new(n, parse_list(elements)?)?)
}

pub fn parse_problem(sets: &[String]) -> Result<SchubertProblem, CliError> {
    if sets.is_empty() {
        return Err(CliError::Usage(
            "a problem needs at least one index set".into(),
        ));
    }
    let sets = sets
        .iter()
        .map(|s| parse_index_set(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SchubertProblem::from_sets(sets)?)
}

pub fn parse_n_list(text: &str) -> Result<Vec<usize>, CliError> {
    parse_list(text)
}

/// One line of an `lr --fixture` file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrFixtureEntry {
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub expected: u64,
}

impl LrFixtureEntry {
    pub fn partitions(&self) -> Result<[Partition; 3], CliError> {
        Ok([
            Partition::new(self.mu.clone())?,
            Partition::new(self.nu.clone())?,
            Partition::new(self.lambda.clone())?,
        ])
    }
}

pub fn parse_lr_fixture(text: &str) -> Result<Vec<LrFixtureEntry>, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("fixture: {e}")))
}
