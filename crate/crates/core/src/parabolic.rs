//! Parabolic weights, slopes and semistability.
//!
//! A subspace `S ⊆ V` of dimension `d` at positions `K^j ⊆ [r]` has slope
//! `(Σ_j Σ_{a ∈ K^j} w^j_a) / d`. At generic flags the positions that occur
//! are exactly the tuples with `∏_j σ_{K^j} ≠ 0` in `H*(Gr(d, r))`, so
//! generic semistability is a finite check over those tuples.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::cohomology::SchubertCalculus;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::flag::Flag;
use crate::geometry::schubert_position;
use crate::schubert::{IndexSet, SchubertProblem};
use crate::subspace::Subspace;

pub type Slope = Ratio<i64>;

fn serialize_slope<S: Serializer>(
    slope: &Slope,
    serializer: S,
) -> core::result::Result<S::Ok, S::Error> {
    serializer.collect_str(slope)
}

/// The table `w^j_a`, `j ∈ [s]`, `a ∈ [r]`, weakly decreasing in `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicWeights {
    r: usize,
    w: Vec<Vec<i64>>,
}

impl ParabolicWeights {
    pub fn new(r: usize, w: Vec<Vec<i64>>) -> Result<Self> {
        for (j, row) in w.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidWeights(format!(
                    "row {} has {} entries, expected {r}",
                    j + 1,
                    row.len()
                )));
            }
            if row.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::InvalidWeights(format!(
                    "row {} is not weakly decreasing: {row:?}",
                    j + 1
                )));
            }
        }
        Ok(ParabolicWeights { r, w })
    }

    /// `w^j_a = λ^j_a = n - r + a - i^j_a`.
    pub fn from_problem(problem: &SchubertProblem) -> Self {
        let r = problem.r();
        let w = problem
            .partitions()
            .iter()
            .map(|lambda| lambda.padded(r).into_iter().map(|p| p as i64).collect())
            .collect();
        ParabolicWeights { r, w }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.w.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.w
    }

    /// `w^j_a` with 1-based `j`, `a`.
    pub fn get(&self, j: usize, a: usize) -> i64 {
        self.w[j - 1][a - 1]
    }

    pub fn scale(&self, factor: i64) -> Self {
        ParabolicWeights {
            r: self.r,
            w: self
                .w
                .iter()
                .map(|row| row.iter().map(|x| x * factor).collect())
                .collect(),
        }
    }

    /// `Σ_j Σ_a w^j_a`.
    pub fn total(&self) -> i64 {
        self.w.iter().flatten().sum()
    }
}

/// `μ(S) = (Σ_j Σ_{a ∈ K^j} w^j_a) / d`.
pub fn slope(positions: &[IndexSet], w: &ParabolicWeights) -> Result<Slope> {
    if positions.len() != w.s() {
        return Err(Error::DimensionMismatch {
            context: "positions against weight rows",
            expected: w.s(),
            found: positions.len(),
        });
    }
    let d = positions.first().map_or(0, IndexSet::r);
    if d == 0 {
        return Err(Error::ZeroSubspace);
    }
    let mut sum = 0i64;
    for (j, k) in positions.iter().enumerate() {
        if k.n() != w.r() || k.r() != d {
            return Err(Error::InvalidIndexSet(format!(
                "{k} is not a {d}-subset of [{}]",
                w.r()
            )));
        }
        sum += k.elements().iter().map(|&a| w.get(j + 1, a)).sum::<i64>();
    }
    Ok(Slope::new(sum, d as i64))
}

/// `μ(V) = (Σ_j Σ_a w^j_a) / r`.
pub fn total_slope(w: &ParabolicWeights) -> Result<Slope> {
    if w.r() == 0 {
        return Err(Error::ZeroSubspace);
    }
    Ok(Slope::new(w.total(), w.r() as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Destabilizer {
    pub positions: Vec<IndexSet>,
    #[serde(serialize_with = "serialize_slope")]
    pub slope: Slope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemistabilityVerdict {
    pub semistable: bool,
    #[serde(serialize_with = "serialize_slope")]
    pub total_slope: Slope,
    /// First violating tuple in enumeration order (`d` ascending, then
    /// lexicographic).
    pub violation: Option<Destabilizer>,
    /// Number of position tuples examined.
    pub tuples: usize,
}

impl SchubertCalculus {
    /// For every `1 ≤ d < r` and every `K` with `∏_j σ_{K^j} ≠ 0` in
    /// `H*(Gr(d, r))`, `μ(K) ≤ μ(V)`.
    pub fn is_generically_semistable(
        &mut self,
        w: &ParabolicWeights,
    ) -> Result<SemistabilityVerdict> {
        let r = w.r();
        let total = if r == 0 {
            Slope::from_integer(0)
        } else {
            total_slope(w)?
        };
        let mut tuples = 0;
        for d in 1..r {
            for positions in self.nonvanishing_positions(d, r, w.s(), d * (r - d)) {
                tuples += 1;
                let mu = slope(&positions, w)?;
                if mu > total {
                    return Ok(SemistabilityVerdict {
                        semistable: false,
                        total_slope: total,
                        violation: Some(Destabilizer {
                            positions,
                            slope: mu,
                        }),
                        tuples,
                    });
                }
            }
        }
        Ok(SemistabilityVerdict {
            semistable: true,
            total_slope: total,
            violation: None,
            tuples,
        })
    }
}

/// [`SchubertCalculus::is_generically_semistable`] with a throwaway memo.
pub fn is_generically_semistable(w: &ParabolicWeights) -> Result<SemistabilityVerdict> {
    SchubertCalculus::new().is_generically_semistable(w)
}

/// `(V, F, w)` with `V = F^r` and `s` complete flags on it.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicVectorSpace<F: Field> {
    flags: Vec<Flag<F>>,
    weights: ParabolicWeights,
}

impl<F: Field> ParabolicVectorSpace<F> {
    pub fn new(flags: Vec<Flag<F>>, weights: ParabolicWeights) -> Result<Self> {
        if flags.len() != weights.s() {
            return Err(Error::DimensionMismatch {
                context: "flags against weight rows",
                expected: weights.s(),
                found: flags.len(),
            });
        }
        if let Some(bad) = flags.iter().find(|e| e.dim() != weights.r()) {
            return Err(Error::DimensionMismatch {
                context: "flag dimension",
                expected: weights.r(),
                found: bad.dim(),
            });
        }
        Ok(ParabolicVectorSpace { flags, weights })
    }

    pub fn flags(&self) -> &[Flag<F>] {
        &self.flags
    }

    pub fn weights(&self) -> &ParabolicWeights {
        &self.weights
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub positions: Vec<IndexSet>,
    #[serde(serialize_with = "serialize_slope")]
    pub slope_s: Slope,
    #[serde(serialize_with = "serialize_slope")]
    pub slope_v: Slope,
    pub destabilizing: bool,
}

/// Positions and slope of one explicit subspace.
pub fn check_witness<F: Field>(
    pv: &ParabolicVectorSpace<F>,
    s: &Subspace<F>,
) -> Result<WitnessReport> {
    if s.ambient_dim() != pv.weights.r() {
        return Err(Error::NotContained("witness subspace in V"));
    }
    let positions = pv
        .flags
        .iter()
        .map(|e| schubert_position(s, e))
        .collect::<Result<Vec<_>>>()?;
    let slope_s = slope(&positions, &pv.weights)?;
    let slope_v = total_slope(&pv.weights)?;
    Ok(WitnessReport {
        positions,
        slope_s,
        slope_v,
        destabilizing: slope_s > slope_v,
    })
}

/// `Σ_j Σ_{a ∈ K^j} (n - r + a - i^j_a) - d(n - r)`.
pub fn clincher(problem: &SchubertProblem, positions: &[IndexSet]) -> Result<i64> {
    if positions.len() != problem.s() {
        return Err(Error::DimensionMismatch {
            context: "positions against conditions",
            expected: problem.s(),
            found: positions.len(),
        });
    }
    let (n, r) = (problem.n(), problem.r());
    let d = positions.first().map_or(0, IndexSet::r);
    let weights = ParabolicWeights::from_problem(problem);
    let mut value = -((d * (n - r)) as i64);
    for (j, k) in positions.iter().enumerate() {
        if k.n() != r || k.r() != d {
            return Err(Error::InvalidIndexSet(format!(
                "{k} is not a {d}-subset of [{r}]"
            )));
        }
        value += k
            .elements()
            .iter()
            .map(|&a| weights.get(j + 1, a))
            .sum::<i64>();
    }
    Ok(value)
}

/// Parses one weight row, `"2,1,0"`.
pub fn parse_weight_row(line: &str) -> Result<Vec<i64>> {
    line.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidWeights(format!("{t:?} is not an integer")))
        })
        .collect()
}

/// Parses a weight table, one row per flag; blank lines and `#` comments
/// are skipped.
pub fn parse_weight_table(text: &str) -> Result<ParabolicWeights> {
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_weight_row)
        .collect::<Result<_>>()?;
    let r = rows.first().map_or(0, Vec::len);
    ParabolicWeights::new(r, rows)
}

/// One row per flag, comma-separated.
pub fn format_weight_table(w: &ParabolicWeights) -> String {
    let mut out = String::new();
    for row in w.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
