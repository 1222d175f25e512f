use std::io::Write;
use std::path::Path;

use fulton_core::FieldKind;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::{OutputFormat, SweepConfig};
use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "fulton";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub name: String,
    pub instances: u64,
    pub passes: u64,
    pub failures: u64,
}

impl CheckCount {
    pub fn new(name: &str) -> Self {
        CheckCount {
            name: name.into(),
            instances: 0,
            passes: 0,
            failures: 0,
        }
    }

    pub fn record(&mut self, passed: bool) {
        self.instances += 1;
        if passed {
            self.passes += 1;
        } else {
            self.failures += 1;
        }
    }
}

/// A failed check with its full input and both sides of the equivalence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    /// Position in the documented enumeration order.
    pub index: u64,
    pub input: Value,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub config: SweepConfig,
    pub field: FieldKindEcho,
    pub seed: u64,
    pub checks: Vec<CheckCount>,
    pub counterexamples: Vec<Counterexample>,
    /// Command-specific payload, e.g. a trace or a single verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub wall_time_ms: u64,
}

/// `FieldKind` as plain data so reports can be read back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldKindEcho {
    Prime { p: u64 },
    Rational,
}

impl From<FieldKind> for FieldKindEcho {
    fn from(kind: FieldKind) -> Self {
        match kind {
            FieldKind::Prime { p } => FieldKindEcho::Prime { p },
            FieldKind::Rational => FieldKindEcho::Rational,
        }
    }
}

impl Report {
    pub fn new(command: &str, config: &SweepConfig, field: FieldKind) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: TOOL.into(),
            tool_version: TOOL_VERSION.into(),
            command: command.into(),
            config: config.clone(),
            field: field.into(),
            seed: config.seed,
            checks: Vec::new(),
            counterexamples: Vec::new(),
            result: None,
            wall_time_ms: 0,
        }
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0 && self.counterexamples.is_empty()
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    /// One row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("command,check,instances,passes,failures\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.command, c.name, c.instances, c.passes, c.failures
            ));
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => Ok(self.to_csv()),
        }
    }

    pub fn write(&self, format: OutputFormat, out: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(format)?;
        match out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fulton_core::{Field, Fp31};

    #[test]
    fn json_round_trip_and_exit_code() {
        let mut report = Report::new("fulton", &SweepConfig::default(), Fp31::kind());
        let mut check = CheckCount::new("fulton_n2");
        check.record(true);
        report.checks.push(check.clone());
        assert_eq!(report.exit_code(), 0);
        let back: Report = serde_json::from_str(&report.to_json().unwrap()).unwrap();
        assert_eq!(back, report);

        check.record(false);
        report.checks[0] = check;
        report.counterexamples.push(Counterexample {
            check: "fulton_n2".into(),
            index: 7,
            input: serde_json::json!({"mu": [1]}),
            detail: serde_json::json!({"c": 1, "c_scaled": 2}),
        });
        assert_eq!(report.exit_code(), 1);
        let csv = report.to_csv();
        assert_eq!(csv.lines().nth(1), Some("fulton,fulton_n2,2,1,1"));
    }
}
