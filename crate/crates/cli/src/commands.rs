//! One function per subcommand. Each returns a [`Report`]; the caller sets
//! the wall time and chooses the output.

use std::path::Path;

use fulton_core::filtration::{run_filtration, run_filtration_seeded, verify_trace};
use fulton_core::hom::{generic_hom_dim, random_flags};
use fulton_core::lr::LrCalculator;
use fulton_core::parabolic::{clincher, parse_weight_table, ParabolicWeights};
use fulton_core::pieri::lr_coefficient_pieri;
use fulton_core::{Field, Partition, SchubertCalculus, SchubertProblem};
use serde_json::json;

use crate::config::SweepConfig;
use crate::enumerate::{dimension_zero_problems, lr_triples};
use crate::error::CliError;
use crate::formats::LrFixtureEntry;
use crate::report::{CheckCount, Counterexample, Report};
use crate::sweep::{instance_rng, InstanceOutcome, Sweep};

/// Where sweeps keep their progress.
#[derive(Clone, Copy, Debug)]
pub struct Checkpointing<'a> {
    pub path: Option<&'a Path>,
    pub every: usize,
}

impl Default for Checkpointing<'_> {
    fn default() -> Self {
        Checkpointing {
            path: None,
            every: crate::sweep::CHECKPOINT_EVERY,
        }
    }
}

fn sweep<'a>(command: &'a str, cfg: &'a SweepConfig, ckpt: Checkpointing<'a>) -> Sweep<'a> {
    Sweep {
        command,
        config: cfg,
        checkpoint: ckpt.path,
        chunk: ckpt.every,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LrProperty {
    /// `c = 1 ⟺ c_N = 1`.
    Fulton,
    /// `c = 0 ⟺ c_N = 0`.
    Saturation,
}

fn lr_sweep(
    command: &str,
    property: LrProperty,
    cfg: &SweepConfig,
    ckpt: Checkpointing<'_>,
) -> Result<Report, CliError> {
    cfg.validate()?;
    let triples = lr_triples(cfg.r_max, cfg.size_max);
    let names: Vec<String> = cfg
        .n_list
        .iter()
        .map(|n| format!("{command}_n{n}"))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let totals = sweep(command, cfg, ckpt).run(
        &name_refs,
        &triples,
        LrCalculator::new,
        |lr, index, t| {
            let mut out = InstanceOutcome::default();
            let c = lr.coefficient(&t.mu, &t.nu, &t.lambda);
            for (k, &n) in cfg.n_list.iter().enumerate() {
                let c_n = lr.coefficient(&t.mu.scale(n), &t.nu.scale(n), &t.lambda.scale(n));
                let (lhs, rhs) = match property {
                    LrProperty::Fulton => (c == 1, c_n == 1),
                    LrProperty::Saturation => (c == 0, c_n == 0),
                };
                out.record(k, lhs == rhs);
                if lhs != rhs {
                    out.counterexamples.push(Counterexample {
                        check: names[k].clone(),
                        index,
                        input: json!({"mu": t.mu, "nu": t.nu, "lambda": t.lambda, "n": n}),
                        detail: json!({"c": c, "c_scaled": c_n, "lhs": lhs, "rhs": rhs}),
                    });
                }
            }
            Ok(out)
        },
    )?;
    let mut report = Report::new(command, cfg, cfg.field_kind());
    report.checks = totals.checks;
    report.counterexamples = totals.counterexamples;
    report.result = Some(json!({"instances": triples.len()}));
    Ok(report)
}

/// `c^λ_{μν} = 1 ⟺ c^{Nλ}_{Nμ,Nν} = 1` over all triples in range.
pub fn cmd_fulton(cfg: &SweepConfig, ckpt: Checkpointing<'_>) -> Result<Report, CliError> {
    lr_sweep("fulton", LrProperty::Fulton, cfg, ckpt)
}

/// `c^λ_{μν} = 0 ⟺ c^{Nλ}_{Nμ,Nν} = 0` over all triples in range.
pub fn cmd_saturation(cfg: &SweepConfig, ckpt: Checkpointing<'_>) -> Result<Report, CliError> {
    lr_sweep("saturation", LrProperty::Saturation, cfg, ckpt)
}

pub const CHECK_TRANSVERSALITY: &str = "transversality";
pub const CHECK_FILTRATION_AUDIT: &str = "filtration_audit";

/// Intersection number against generic `dim Hom` on every dimension-zero
/// problem; every problem with nonzero `Hom` also gets an audited trace.
pub fn cmd_crosscheck<F: Field + Send + Sync>(
    cfg: &SweepConfig,
    ckpt: Checkpointing<'_>,
) -> Result<Report, CliError> {
    cfg.validate()?;
    let problems = dimension_zero_problems(cfg.r_max, cfg.n_max, cfg.s_max);
    let names = [CHECK_TRANSVERSALITY, CHECK_FILTRATION_AUDIT];
    let totals = sweep("crosscheck", cfg, ckpt).run(
        &names,
        &problems,
        SchubertCalculus::new,
        |calc, index, p| {
            let mut out = InstanceOutcome::default();
            let mut rng = instance_rng(cfg.seed, index);
            let number = calc.intersection_number(p)?;
            let estimate = generic_hom_dim::<F, _>(p, cfg.trials, &mut rng)?;
            let agree = (number > 0) == (estimate.dim == 0);
            out.record(0, agree);
            if !agree {
                out.counterexamples.push(Counterexample {
                    check: CHECK_TRANSVERSALITY.into(),
                    index,
                    input: json!({"problem": p}),
                    detail: json!({"intersection_number": number, "generic_hom_dim": estimate}),
                });
            }
            if estimate.dim > 0 {
                let (f, g) = random_flags::<F, _>(p, &mut rng)?;
                let trace = run_filtration(p, &f, &g, cfg.trials, &mut rng)?;
                let audit = verify_trace(&trace)?;
                out.record(1, audit.passed());
                if !audit.passed() {
                    out.counterexamples.push(Counterexample {
                        check: CHECK_FILTRATION_AUDIT.into(),
                        index,
                        input: json!({"problem": p}),
                        detail: json!({"trace": trace, "audit": audit}),
                    });
                }
            }
            Ok(out)
        },
    )?;
    let mut report = Report::new("crosscheck", cfg, F::kind());
    report.checks = totals.checks;
    report.counterexamples = totals.counterexamples;
    report.result = Some(json!({"instances": problems.len()}));
    Ok(report)
}

pub const CHECK_SEMISTABLE: &str = "semistable_when_nonempty";
pub const CHECK_CLINCHER_NONPOSITIVE: &str = "clincher_nonpositive_when_nonempty";
pub const CHECK_CLINCHER_SIGN: &str = "clincher_sign_matches_semistability";

/// Largest clincher value over all nonvanishing position tuples, `None`
/// when there are none (`r = 1`).
fn max_clincher(calc: &mut SchubertCalculus, p: &SchubertProblem) -> Result<Option<i64>, CliError> {
    let (r, s) = (p.r(), p.s());
    let mut best: Option<i64> = None;
    for d in 1..r {
        for positions in calc.nonvanishing_positions(d, r, s, d * (r - d)) {
            let value = clincher(p, &positions)?;
            best = Some(best.map_or(value, |b| b.max(value)));
        }
    }
    Ok(best)
}

/// Semistability of the problem's own weights on every dimension-zero
/// problem.
pub fn cmd_semistable(cfg: &SweepConfig, ckpt: Checkpointing<'_>) -> Result<Report, CliError> {
    cfg.validate()?;
    let problems = dimension_zero_problems(cfg.r_max, cfg.n_max, cfg.s_max);
    let names = [
        CHECK_SEMISTABLE,
        CHECK_CLINCHER_NONPOSITIVE,
        CHECK_CLINCHER_SIGN,
    ];
    let totals = sweep("semistable", cfg, ckpt).run(&names, &problems, SchubertCalculus::new, |calc, index, p| {
        let mut out = InstanceOutcome::default();
        let number = calc.intersection_number(p)?;
        let weights = ParabolicWeights::from_problem(p);
        let verdict = calc.is_generically_semistable(&weights)?;
        let worst = max_clincher(calc, p)?;
        let nonpositive = worst.is_none_or(|c| c <= 0);
        let mut results = Vec::new();
        if number > 0 {
            results.push((0, verdict.semistable));
            results.push((1, nonpositive));
        }
        results.push((2, nonpositive == verdict.semistable));
        for (k, passed) in results {
            out.record(k, passed);
            if !passed {
                out.counterexamples.push(Counterexample {
                    check: names[k].into(),
                    index,
                    input: json!({"problem": p}),
                    detail: json!({"intersection_number": number, "verdict": verdict, "max_clincher": worst}),
                });
            }
        }
        Ok(out)
    })?;
    let mut report = Report::new("semistable", cfg, cfg.field_kind());
    report.checks = totals.checks;
    report.counterexamples = totals.counterexamples;
    report.result = Some(json!({"instances": problems.len()}));
    Ok(report)
}

/// Verdict for a single weight table. The verdict is data, not a check, so
/// the report carries no failures either way.
pub fn cmd_semistable_weights(cfg: &SweepConfig, table: &str) -> Result<Report, CliError> {
    let weights = parse_weight_table(table)?;
    let verdict = SchubertCalculus::new().is_generically_semistable(&weights)?;
    let mut report = Report::new("semistable", cfg, cfg.field_kind());
    report.result = Some(json!({"weights": weights.rows(), "verdict": verdict}));
    Ok(report)
}

/// Trace and audit of one problem at flags drawn from the configured seed.
pub fn cmd_filtration<F: Field>(
    cfg: &SweepConfig,
    problem: &SchubertProblem,
) -> Result<Report, CliError> {
    if cfg.trials < 1 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    let trace = run_filtration_seeded::<F>(problem, cfg.seed, cfg.trials)?;
    let audit = verify_trace(&trace)?;
    let mut report = Report::new("filtration", cfg, F::kind());
    for verdict in &audit.checks {
        let mut count = CheckCount::new(verdict.name);
        count.record(verdict.passed);
        report.checks.push(count);
        if !verdict.passed {
            report.counterexamples.push(Counterexample {
                check: verdict.name.into(),
                index: 0,
                input: json!({"problem": problem}),
                detail: json!({"detail": verdict.detail}),
            });
        }
    }
    report.result = Some(json!({"trace": trace, "audit": audit}));
    Ok(report)
}

/// `(μ, ν, λ, expected)`.
pub type LrQuery = (Partition, Partition, Partition, Option<u64>);

pub const CHECK_DUAL_ORACLE: &str = "dual_oracle";
pub const CHECK_FIXTURE: &str = "fixture";

/// Tableau count and the Pieri fold for each entry; with an expected value
/// the entry is also checked against it.
pub fn cmd_lr(cfg: &SweepConfig, entries: &[LrQuery]) -> Result<Report, CliError> {
    let mut report = Report::new("lr", cfg, cfg.field_kind());
    let mut dual = CheckCount::new(CHECK_DUAL_ORACLE);
    let mut fixture = CheckCount::new(CHECK_FIXTURE);
    let mut lr = LrCalculator::new();
    let mut values = Vec::new();
    for (index, (mu, nu, lambda, expected)) in entries.iter().enumerate() {
        let tableau = lr.coefficient(mu, nu, lambda);
        let pieri = lr_coefficient_pieri(mu, nu, lambda);
        let input = json!({"mu": mu, "nu": nu, "lambda": lambda});
        let detail = json!({"tableau": tableau, "pieri": pieri, "expected": expected});
        let agree = i64::try_from(tableau).is_ok_and(|t| t == pieri);
        dual.record(agree);
        if !agree {
            report.counterexamples.push(Counterexample {
                check: CHECK_DUAL_ORACLE.into(),
                index: index as u64,
                input: input.clone(),
                detail: detail.clone(),
            });
        }
        if let Some(expected) = expected {
            let ok = tableau == *expected;
            fixture.record(ok);
            if !ok {
                report.counterexamples.push(Counterexample {
                    check: CHECK_FIXTURE.into(),
                    index: index as u64,
                    input: input.clone(),
                    detail: detail.clone(),
                });
            }
        }
        values.push(json!({"mu": mu, "nu": nu, "lambda": lambda, "c": tableau}));
    }
    report.checks.push(dual);
    if fixture.instances > 0 {
        report.checks.push(fixture);
    }
    report.result = Some(json!({"coefficients": values}));
    Ok(report)
}

pub fn lr_fixture_entries(entries: &[LrFixtureEntry]) -> Result<Vec<LrQuery>, CliError> {
    entries
        .iter()
        .map(|e| {
            let [mu, nu, lambda] = e.partitions()?;
            Ok((mu, nu, lambda, Some(e.expected)))
        })
        .collect()
}
