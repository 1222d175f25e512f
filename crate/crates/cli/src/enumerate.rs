//! Instance enumeration in a fixed, documented order.

use fulton_core::partition::partitions_in_box;
use fulton_core::{Partition, SchubertProblem};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
}

/// All `(μ, ν, λ)` with `|λ| = |μ| + |ν| ≤ size_max` and every length at most
/// `r_max`.
///
/// Order: `|λ|` ascending; then `λ` in reverse lexicographic order; then
/// `|μ|` ascending; then `μ`, then `ν`, each in reverse lexicographic order.
pub fn lr_triples(r_max: usize, size_max: usize) -> Vec<Triple> {
    let by_size: Vec<Vec<Partition>> = (0..=size_max)
        .map(|k| partitions_in_box(k, r_max, k))
        .collect();
    let mut out = Vec::new();
    for (total, lambdas) in by_size.iter().enumerate() {
        for lambda in lambdas {
            for k in 0..=total {
                for mu in &by_size[k] {
                    for nu in &by_size[total - k] {
                        out.push(Triple {
                            mu: mu.clone(),
                            nu: nu.clone(),
                            lambda: lambda.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Problems with expected dimension zero on `Gr(r, n)`, `1 ≤ r ≤ r_max`,
/// `r < n ≤ n_max`, `1 ≤ s ≤ s_max`.
///
/// Order: `r`, then `n`, then `s` ascending, then the tuple order of
/// [`SchubertProblem::enumerate`].
pub fn dimension_zero_problems(r_max: usize, n_max: usize, s_max: usize) -> Vec<SchubertProblem> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for n in r + 1..=n_max {
            for s in 1..=s_max {
                out.extend(
                    SchubertProblem::enumerate(n, r, s)
                        .into_iter()
                        .filter(|p| p.expected_dim() == 0),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_triple_counts() {
        // Per |λ|: 1, 2, 10, 16, 42.
        let counts: Vec<usize> = (0..=4).map(|k| lr_triples(2, k).len()).collect();
        assert_eq!(counts, [1, 3, 13, 29, 71]);
        let first = &lr_triples(2, 1)[1];
        assert!(first.mu.is_empty());
        assert_eq!(first.lambda.parts(), &[1]);
    }

    #[test]
    fn problems_have_expected_dimension_zero() {
        let problems = dimension_zero_problems(2, 4, 4);
        assert!(problems.iter().all(|p| p.expected_dim() == 0));
        // On P^1: one point condition padded by s - 1 trivial ones.
        let p1: Vec<_> = problems.iter().filter(|p| p.n() == 2).collect();
        assert_eq!(p1.len(), 4);
        assert!(problems
            .windows(2)
            .all(|w| (w[0].r(), w[0].n()) <= (w[1].r(), w[1].n())));
    }
}
