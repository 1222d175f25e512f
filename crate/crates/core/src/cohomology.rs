//! Products in `H*(Gr(r, n))` and the numbers derived from them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr::LrCalculator;
use crate::partition::{partitions_in_box, Partition};
use crate::schubert::{IndexSet, SchubertProblem};

/// A nonnegative integer combination of Schubert classes `σ_λ` on `Gr(r, n)`,
/// keyed by partitions inside the `r x (n - r)` rectangle in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyClass {
    r: usize,
    n: usize,
    #[serde(serialize_with = "serialize_terms")]
    terms: BTreeMap<Partition, u64>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &BTreeMap<Partition, u64>,
    serializer: S,
) -> core::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(terms.len()))?;
    for term in terms {
        seq.serialize_element(&term)?;
    }
    seq.end()
}

impl CohomologyClass {
    pub fn zero(r: usize, n: usize) -> Self {
        CohomologyClass {
            r,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `σ_λ`.
    pub fn schubert(r: usize, n: usize, lambda: Partition) -> Result<Self> {
        if r > n || !lambda.fits(r, n - r) {
            return Err(Error::OutsideRectangle {
                rows: r,
                cols: n.saturating_sub(r),
            });
        }
        let mut class = Self::zero(r, n);
        class.terms.insert(lambda, 1);
        Ok(class)
    }

    /// `ω_I = σ_{λ(I)}`.
    pub fn of_index_set(set: &IndexSet) -> Self {
        Self::schubert(set.r(), set.n(), set.to_partition()).expect("index sets fit")
    }

    pub fn unit(r: usize, n: usize) -> Self {
        Self::schubert(r, n, Partition::empty()).expect("empty partition fits")
    }

    /// The partition of the point class, the full rectangle.
    pub fn point_partition(r: usize, n: usize) -> Partition {
        Partition::rectangle(r, n - r)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, lambda: &Partition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, coeff: u64) {
        if coeff != 0 {
            *self.terms.entry(lambda).or_insert(0) += coeff;
        }
    }
}

/// Schubert calculus on top of a memoized LR engine.
///
/// Owns its memo tables; create one per thread.
#[derive(Debug, Default)]
pub struct SchubertCalculus {
    lr: LrCalculator,
    nonvanishing: BTreeMap<(usize, usize, usize, usize), Vec<Vec<IndexSet>>>,
}

impl SchubertCalculus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lr(&mut self) -> &mut LrCalculator {
        &mut self.lr
    }

    pub fn lr_coefficient(&mut self, mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
        self.lr.coefficient(mu, nu, lambda)
    }

    /// `x · y`, truncated to the rectangle.
    pub fn class_product(
        &mut self,
        x: &CohomologyClass,
        y: &CohomologyClass,
    ) -> Result<CohomologyClass> {
        if (x.r, x.n) != (y.r, y.n) {
            return Err(Error::GrassmannianMismatch);
        }
        let (r, cols) = (x.r, x.n - x.r);
        let mut out = CohomologyClass::zero(x.r, x.n);
        for (mu, a) in x.terms() {
            for (nu, b) in y.terms() {
                for lambda in partitions_in_box(mu.size() + nu.size(), r, cols) {
                    if !lambda.contains(mu) || !lambda.contains(nu) {
                        continue;
                    }
                    let c = self.lr.coefficient(mu, nu, &lambda);
                    out.add_term(lambda, a * b * c);
                }
            }
        }
        Ok(out)
    }

    /// `∏_j ω_{I^j}` with no dimension condition.
    pub fn product_class(&mut self, problem: &SchubertProblem) -> CohomologyClass {
        let mut acc = CohomologyClass::unit(problem.r(), problem.n());
        for set in problem.sets() {
            acc = self
                .class_product(&acc, &CohomologyClass::of_index_set(set))
                .expect("same Grassmannian");
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Coefficient of the point class in `∏_j ω_{I^j}`. Requires
    /// `Σ_j codim(I^j) = r(n - r)`.
    pub fn intersection_number(&mut self, problem: &SchubertProblem) -> Result<u64> {
        let (dimension, codimension) = (problem.grassmannian_dim(), problem.total_codim());
        if dimension != codimension {
            return Err(Error::DimensionCondition {
                dimension,
                codimension,
            });
        }
        let (r, n) = (problem.r(), problem.n());
        let (last, rest) = problem.sets().split_last().expect("problems are nonempty");
        // the point coefficient of x · σ_λ is the coefficient of σ_{λ^∨} in x
        let dual = last.to_partition().complement(r, n - r)?;
        let mut acc = CohomologyClass::unit(r, n);
        for set in rest {
            acc = self.class_product(&acc, &CohomologyClass::of_index_set(set))?;
            if acc.is_zero() {
                return Ok(0);
            }
        }
        Ok(acc.coefficient(&dual))
    }

    /// `dim [V_{λ_1} ⊗ ⋯ ⊗ V_{λ_s}]^{SL(r)}`.
    ///
    /// Embeds the weights in `Gr(r, n)` with `n - r = Σ_j |λ_j| / r`. A weight
    /// wider than that rectangle, or longer than `r`, gives zero (rectangle
    /// criterion), as does a total size not divisible by `r`.
    pub fn invariant_dim(&mut self, weights: &[Partition], r: usize) -> u64 {
        if weights.iter().any(|w| w.len() > r) {
            return 0;
        }
        let total: usize = weights.iter().map(Partition::size).sum();
        if r == 0 {
            return u64::from(total == 0);
        }
        if !total.is_multiple_of(r) {
            return 0;
        }
        let cols = total / r;
        if weights.iter().any(|w| w.part(0) > cols) {
            return 0;
        }
        if weights.is_empty() {
            return 1;
        }
        let n = r + cols;
        let sets = weights
            .iter()
            .map(|w| IndexSet::from_partition(w, n, r).expect("checked against the rectangle"))
            .collect();
        let problem = SchubertProblem::new(n, r, sets).expect("shared ambient");
        self.intersection_number(&problem)
            .expect("dimension condition holds by construction")
    }

    /// All `s`-tuples `(K^1, …, K^s)` of `d`-subsets of `[r]` with total
    /// codimension at most `max_codim` and `∏_j σ_{K^j} ≠ 0` in
    /// `H*(Gr(d, r))`, in lexicographic order.
    pub fn nonvanishing_positions(
        &mut self,
        d: usize,
        r: usize,
        s: usize,
        max_codim: usize,
    ) -> Vec<Vec<IndexSet>> {
        let key = (d, r, s, max_codim);
        if let Some(hit) = self.nonvanishing.get(&key) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if d <= r {
            let sets = IndexSet::all(r, d);
            let mut chosen = Vec::with_capacity(s);
            let unit = CohomologyClass::unit(d, r);
            self.extend_positions(&sets, s, max_codim, &unit, &mut chosen, &mut out);
        }
        self.nonvanishing.insert(key, out.clone());
        out
    }

    fn extend_positions(
        &mut self,
        sets: &[IndexSet],
        s: usize,
        budget: usize,
        acc: &CohomologyClass,
        chosen: &mut Vec<IndexSet>,
        out: &mut Vec<Vec<IndexSet>>,
    ) {
        if chosen.len() == s {
            out.push(chosen.clone());
            return;
        }
        for set in sets {
            let codim = set.codim();
            if codim > budget {
                continue;
            }
            let next = self
                .class_product(acc, &CohomologyClass::of_index_set(set))
                .expect("same Grassmannian");
            if next.is_zero() {
                continue;
            }
            chosen.push(set.clone());
            self.extend_positions(sets, s, budget - codim, &next, chosen, out);
            chosen.pop();
        }
    }
}

/// [`SchubertCalculus::class_product`] with a throwaway memo.
pub fn class_product(x: &CohomologyClass, y: &CohomologyClass) -> Result<CohomologyClass> {
    SchubertCalculus::new().class_product(x, y)
}

pub fn intersection_number(problem: &SchubertProblem) -> Result<u64> {
    SchubertCalculus::new().intersection_number(problem)
}

pub fn invariant_dim(weights: &[Partition], r: usize) -> u64 {
    SchubertCalculus::new().invariant_dim(weights, r)
}

pub fn nonvanishing_positions(
    d: usize,
    r: usize,
    s: usize,
    max_codim: usize,
) -> Vec<Vec<IndexSet>> {
    SchubertCalculus::new().nonvanishing_positions(d, r, s, max_codim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.to_vec()).unwrap()
    }

    fn sigma(r: usize, n: usize, v: &[usize]) -> CohomologyClass {
        CohomologyClass::schubert(r, n, p(v)).unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let x = sigma(2, 5, &[2, 1]);
        assert_eq!(class_product(&CohomologyClass::unit(2, 5), &x).unwrap(), x);
    }

    #[test]
    fn pieri_in_gr24() {
        let prod = class_product(&sigma(2, 4, &[1]), &sigma(2, 4, &[1])).unwrap();
        let terms: Vec<_> = prod.terms().map(|(l, c)| (l.clone(), c)).collect();
        assert_eq!(terms, vec![(p(&[1, 1]), 1), (p(&[2]), 1)]);
    }

    #[test]
    fn rectangle_truncation() {
        assert!(class_product(&sigma(2, 4, &[2]), &sigma(2, 4, &[1, 1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn mismatched_grassmannians() {
        assert_eq!(
            class_product(&sigma(2, 4, &[1]), &sigma(2, 5, &[1])),
            Err(Error::GrassmannianMismatch)
        );
    }

    #[test]
    fn intersection_number_examples() {
        let four = SchubertProblem::new(4, 2, vec![set(4, &[2, 4]); 4]).unwrap();
        assert_eq!(intersection_number(&four).unwrap(), 2);
        let mixed = SchubertProblem::new(4, 2, vec![set(4, &[1, 4]), set(4, &[2, 3])]).unwrap();
        assert_eq!(intersection_number(&mixed).unwrap(), 0);
        let same = SchubertProblem::new(4, 2, vec![set(4, &[1, 4]); 2]).unwrap();
        assert_eq!(intersection_number(&same).unwrap(), 1);
        let short = SchubertProblem::new(4, 2, vec![set(4, &[2, 4])]).unwrap();
        assert!(matches!(
            intersection_number(&short),
            Err(Error::DimensionCondition { .. })
        ));
    }

    #[test]
    fn invariant_dim_examples() {
        assert_eq!(invariant_dim(&[p(&[1]), p(&[1]), p(&[1, 1])], 2), 1);
        assert_eq!(
            invariant_dim(&[Partition::empty(), Partition::empty()], 3),
            1
        );
        // c^{321}_{21,21} = 2; the dual of (3,2,1) is (2,1) in the 3x3 box
        // and (3,2,1) again in the 3x4 box
        assert_eq!(invariant_dim(&[p(&[2, 1]), p(&[2, 1]), p(&[2, 1])], 3), 2);
        assert_eq!(
            invariant_dim(&[p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1])], 3),
            2
        );
        // the determinant in V ⊗ V for SL(2)
        assert_eq!(invariant_dim(&[p(&[1]), p(&[1])], 2), 1);
        assert_eq!(invariant_dim(&[p(&[2]), p(&[1])], 2), 0);
        // total divisible but one weight too wide
        assert_eq!(invariant_dim(&[p(&[4]), p(&[1, 1])], 2), 0);
    }

    #[test]
    fn nonvanishing_examples() {
        let single = nonvanishing_positions(1, 2, 1, 1);
        assert_eq!(single, vec![vec![set(2, &[1])], vec![set(2, &[2])]]);
        let pairs = nonvanishing_positions(1, 2, 2, 1);
        assert_eq!(pairs.len(), 3);
        assert!(!pairs.contains(&vec![set(2, &[1]), set(2, &[1])]));
        let gr13 = nonvanishing_positions(1, 3, 2, 2);
        assert!(!gr13.contains(&vec![set(3, &[1]), set(3, &[1])]));
        assert!(gr13.contains(&vec![set(3, &[1]), set(3, &[3])]));
    }
}
