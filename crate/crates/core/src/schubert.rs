//! Index sets, the partition dictionary and Schubert problems.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A subset `{i_1 < … < i_r}` of `[n] = {1, …, n}`.
///
/// Serializes as the sorted list of its elements; the ambient `n` is carried
/// by the surrounding record.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    n: usize,
    elements: Vec<usize>,
}

impl Serialize for IndexSet {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> core::result::Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

impl IndexSet {
    pub fn new(n: usize, elements: Vec<usize>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "{elements:?} is not strictly increasing"
            )));
        }
        if elements.first().is_some_and(|&i| i < 1) || elements.last().is_some_and(|&i| i > n) {
            return Err(Error::InvalidIndexSet(format!(
                "{elements:?} is not inside [1, {n}]"
            )));
        }
        Ok(IndexSet { n, elements })
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        IndexSet {
            n,
            elements: (1..=n).collect(),
        }
    }

    /// `{n - r + 1, …, n}`: the open cell, codimension zero.
    pub fn open_cell(n: usize, r: usize) -> Self {
        IndexSet {
            n,
            elements: (n - r + 1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// `i_a` for 1-based `a`.
    pub fn at(&self, a: usize) -> usize {
        self.elements[a - 1]
    }

    /// `λ_a = n - r + a - i_a`.
    pub fn to_partition(&self) -> Partition {
        let (n, r) = (self.n, self.r());
        let parts = self
            .elements()
            .iter()
            .enumerate()
            .map(|(idx, &i)| n - r + idx + 1 - i)
            .collect();
        Partition::new(parts).expect("index sets give weakly decreasing parts")
    }

    /// `i_a = n - r + a - λ_a`.
    pub fn from_partition(lambda: &Partition, n: usize, r: usize) -> Result<Self> {
        if r > n || !lambda.fits(r, n - r) {
            return Err(Error::OutsideRectangle {
                rows: r,
                cols: n.saturating_sub(r),
            });
        }
        let elements = (1..=r).map(|a| n - r + a - lambda.part(a - 1)).collect();
        IndexSet::new(n, elements)
    }

    /// `Σ_a (n - r + a - i_a)`.
    pub fn codim(&self) -> usize {
        self.to_partition().size()
    }

    /// `[n] \ I` in increasing order.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|i| !self.elements().contains(i))
            .collect()
    }

    /// All `r`-subsets of `[n]` in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        if r > n {
            return out;
        }
        let mut current: Vec<usize> = (1..=r).collect();
        loop {
            out.push(IndexSet {
                n,
                elements: current.clone(),
            });
            // advance to the next combination
            let Some(pos) = (0..r).rev().find(|&k| current[k] < n - r + k + 1) else {
                break;
            };
            current[pos] += 1;
            for k in pos + 1..r {
                current[k] = current[k - 1] + 1;
            }
        }
        out
    }
}

impl fmt::Display for IndexSet {
    /// `1,3@4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.elements().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "@{}", self.n)
    }
}

/// An `s`-tuple of `r`-subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SchubertProblem {
    n: usize,
    r: usize,
    sets: Vec<IndexSet>,
}

impl SchubertProblem {
    pub fn new(n: usize, r: usize, sets: Vec<IndexSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidProblem("need at least one index set".into()));
        }
        if r > n {
            return Err(Error::InvalidProblem(format!("r = {r} exceeds n = {n}")));
        }
        if let Some(bad) = sets.iter().find(|s| s.n() != n || s.r() != r) {
            return Err(Error::InvalidProblem(format!(
                "{bad} does not have ambient {n} and size {r}"
            )));
        }
        Ok(SchubertProblem { n, r, sets })
    }

    /// Builds a problem from index sets, reading `n` and `r` from the first one.
    pub fn from_sets(sets: Vec<IndexSet>) -> Result<Self> {
        let first = sets
            .first()
            .ok_or_else(|| Error::InvalidProblem("need at least one index set".into()))?;
        let (n, r) = (first.n(), first.r());
        Self::new(n, r, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    /// `dim Gr(r, n) = r (n - r)`.
    pub fn grassmannian_dim(&self) -> usize {
        self.r * (self.n - self.r)
    }

    pub fn total_codim(&self) -> usize {
        self.sets.iter().map(IndexSet::codim).sum()
    }

    /// `r(n - r) - Σ_j codim(I^j)`; may be negative.
    pub fn expected_dim(&self) -> i64 {
        self.grassmannian_dim() as i64 - self.total_codim() as i64
    }

    /// The weights `λ(I^j)`.
    pub fn partitions(&self) -> Vec<Partition> {
        self.sets.iter().map(IndexSet::to_partition).collect()
    }

    /// The same problem with its conditions reordered by `order`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        SchubertProblem {
            n: self.n,
            r: self.r,
            sets: order.iter().map(|&j| self.sets[j].clone()).collect(),
        }
    }

    /// All problems on `Gr(r, n)` with exactly `s` conditions, taken as
    /// weakly increasing tuples in the lexicographic order of [`IndexSet::all`]
    /// (one representative per reordering), in lexicographic tuple order.
    pub fn enumerate(n: usize, r: usize, s: usize) -> Vec<SchubertProblem> {
        let all = IndexSet::all(n, r);
        let mut out = Vec::new();
        let mut idx = Vec::with_capacity(s);
        multisets(all.len(), s, 0, &mut idx, &mut |choice| {
            out.push(SchubertProblem {
                n,
                r,
                sets: choice.iter().map(|&k| all[k].clone()).collect(),
            });
        });
        out
    }
}

fn multisets(
    size: usize,
    len: usize,
    start: usize,
    idx: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx.len() == len {
        visit(idx);
        return;
    }
    for k in start..size {
        idx.push(k);
        multisets(size, len, k, idx, visit);
        idx.pop();
    }
}

impl fmt::Display for SchubertProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})[", self.r, self.n)?;
        for (j, set) in self.sets.iter().enumerate() {
            if j > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{set}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn index_to_partition_examples() {
        assert_eq!(set(4, &[1, 3]).to_partition(), part(&[2, 1]));
        assert_eq!(set(4, &[3, 4]).to_partition(), part(&[0, 0]));
        assert_eq!(set(4, &[1, 2]).to_partition(), part(&[2, 2]));
    }

    #[test]
    fn partition_to_index_examples() {
        assert_eq!(
            IndexSet::from_partition(&part(&[2, 1]), 4, 2).unwrap(),
            set(4, &[1, 3])
        );
        assert_eq!(
            IndexSet::from_partition(&Partition::empty(), 6, 3).unwrap(),
            set(6, &[4, 5, 6])
        );
        assert_eq!(
            IndexSet::from_partition(&part(&[2]), 4, 2).unwrap(),
            set(4, &[1, 4])
        );
        assert!(IndexSet::from_partition(&part(&[3]), 4, 2).is_err());
        assert!(IndexSet::from_partition(&part(&[1, 1, 1]), 4, 2).is_err());
    }

    #[test]
    fn codim_examples() {
        assert_eq!(set(4, &[3, 4]).codim(), 0);
        assert_eq!(set(4, &[1, 2]).codim(), 4);
        assert_eq!(set(4, &[2, 4]).codim(), 1);
    }

    #[test]
    fn expected_dim_examples() {
        let open = SchubertProblem::new(5, 2, vec![IndexSet::open_cell(5, 2)]).unwrap();
        assert_eq!(open.expected_dim(), 6);
        let four = SchubertProblem::new(4, 2, vec![set(4, &[2, 4]); 4]).unwrap();
        assert_eq!(four.expected_dim(), 0);
        let two_points = SchubertProblem::new(4, 2, vec![set(4, &[1, 2]); 2]).unwrap();
        assert_eq!(two_points.expected_dim(), -4);
    }

    #[test]
    fn round_trip_is_exhaustive_up_to_eight() {
        for n in 0..=8 {
            for r in 0..=n {
                for i in IndexSet::all(n, r) {
                    let lambda = i.to_partition();
                    assert_eq!(i.codim(), lambda.size());
                    assert_eq!(IndexSet::from_partition(&lambda, n, r).unwrap(), i);
                }
            }
        }
    }

    #[test]
    fn subsets_are_counted_by_binomials() {
        assert_eq!(IndexSet::all(6, 3).len(), 20);
        assert_eq!(IndexSet::all(4, 0).len(), 1);
        assert_eq!(IndexSet::all(3, 4).len(), 0);
        // 20 sets, multisets of size 2: C(21, 2)
        assert_eq!(SchubertProblem::enumerate(6, 3, 2).len(), 210);
    }

    #[test]
    fn invalid_sets_rejected() {
        assert!(IndexSet::new(4, vec![3, 1]).is_err());
        assert!(IndexSet::new(4, vec![0, 1]).is_err());
        assert!(IndexSet::new(4, vec![2, 5]).is_err());
        assert!(SchubertProblem::new(4, 2, vec![]).is_err());
        assert!(SchubertProblem::new(4, 2, vec![set(5, &[1, 2])]).is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(alloc::format!("{}", set(4, &[1, 3])), "1,3@4");
    }
}
