//! Littlewood-Richardson coefficients by enumerating LR skew tableaux.
//!
//! A filling of `λ/μ` is an LR tableau when rows weakly increase, columns
//! strictly increase, and the reverse reading word (right to left, top to
//! bottom) is a lattice word. `c^λ_{μν}` counts those with content `ν`.
//!
//! Rows are filled as multiplicity vectors: row `i` (0-based) holds `m_k`
//! copies of each `k ∈ 1..=i+1`, in increasing order. Column strictness and
//! the lattice condition then become linear inequalities on the running
//! counts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::partition::Partition;

/// Content multiplicities of all LR tableaux of a fixed skew shape.
pub type ContentTable = BTreeMap<Partition, u64>;

/// LR engine with a memo keyed by the skew shape `(λ, μ)`.
///
/// One enumeration of `λ/μ` yields `c^λ_{μν}` for every `ν` at once, which is
/// what sweeps over triples need. The memo is owned; share work across
/// threads by giving each its own calculator.
#[derive(Debug, Default)]
pub struct LrCalculator {
    memo: BTreeMap<(Partition, Partition), ContentTable>,
}

impl LrCalculator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c^λ_{μν}`; zero unless `|λ| = |μ| + |ν|`.
    pub fn coefficient(&mut self, mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
        if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
            return 0;
        }
        self.contents(lambda, mu).get(nu).copied().unwrap_or(0)
    }

    /// All contents `ν` with `c^λ_{μν} > 0`, with multiplicities.
    pub fn contents(&mut self, outer: &Partition, inner: &Partition) -> &ContentTable {
        self.memo
            .entry((outer.clone(), inner.clone()))
            .or_insert_with(|| enumerate_skew(outer, inner))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// `c^λ_{μν}` with a throwaway memo.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    LrCalculator::new().coefficient(mu, nu, lambda)
}

fn enumerate_skew(outer: &Partition, inner: &Partition) -> ContentTable {
    let mut table = ContentTable::new();
    if !outer.contains(inner) {
        return table;
    }
    let rows = outer.len();
    let mut filler = Filler {
        outer: outer.padded(rows),
        inner: inner.padded(rows),
        totals: vec![0; rows],
        table: &mut table,
    };
    filler.row(0, &[]);
    table
}

struct Filler<'a> {
    outer: Vec<usize>,
    inner: Vec<usize>,
    // totals[k - 1] = number of entries equal to k placed so far
    totals: Vec<usize>,
    table: &'a mut ContentTable,
}

impl Filler<'_> {
    /// `prev[k]` = column reached in the previous row by its skew offset plus
    /// its entries `≤ k`; empty for the first row.
    fn row(&mut self, i: usize, prev: &[usize]) {
        if i == self.outer.len() {
            let content =
                Partition::new(self.totals.clone()).expect("lattice words give partitions");
            *self.table.entry(content).or_insert(0) += 1;
            return;
        }
        let cells = self.outer[i] - self.inner[i];
        let mut counts = vec![0; i + 1];
        self.entry(i, 1, cells, self.inner[i], prev, &mut counts);
    }

    /// Chooses the multiplicity of entry `k` in row `i`.
    fn entry(
        &mut self,
        i: usize,
        k: usize,
        remaining: usize,
        reached: usize,
        prev: &[usize],
        counts: &mut Vec<usize>,
    ) {
        if k > i + 1 {
            if remaining != 0 {
                return;
            }
            let mut next = Vec::with_capacity(i + 2);
            next.push(self.inner[i]);
            let mut col = self.inner[i];
            for &m in counts.iter() {
                col += m;
                next.push(col);
            }
            for (k, &m) in counts.iter().enumerate() {
                self.totals[k] += m;
            }
            self.row(i + 1, &next);
            for (k, &m) in counts.iter().enumerate() {
                self.totals[k] -= m;
            }
            return;
        }
        let mut cap = remaining;
        if i > 0 {
            // cells holding k must sit below cells of the previous row that
            // are in μ or hold something < k
            let above = prev[k - 1];
            if reached > above {
                return;
            }
            cap = cap.min(above - reached);
        }
        if k >= 2 {
            // reading k's of this row before its (k-1)'s
            let allowance = self.totals[k - 2].saturating_sub(self.totals[k - 1]);
            if self.totals[k - 1] > self.totals[k - 2] {
                return;
            }
            cap = cap.min(allowance);
        }
        for m in (0..=cap).rev() {
            counts[k - 1] = m;
            self.entry(i, k + 1, remaining - m, reached + m, prev, counts);
        }
        counts[k - 1] = 0;
    }
}
