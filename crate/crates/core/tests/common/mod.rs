#![allow(dead_code)]

use std::collections::BTreeMap;

use fulton_core::field::Fp31;
use fulton_core::partition::partitions_in_box;
use fulton_core::pieri::lr_coefficient_pieri;
use fulton_core::{Field, Flag, IndexSet, Matrix, Partition, SchubertProblem, Subspace};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type M = Matrix<Fp31>;

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn set(n: usize, e: &[usize]) -> IndexSet {
    IndexSet::new(n, e.to_vec()).unwrap()
}

pub fn problem(n: usize, sets: &[&[usize]]) -> SchubertProblem {
    SchubertProblem::from_sets(sets.iter().map(|e| set(n, e)).collect()).unwrap()
}

/// Entries in {-1, 0, 1}, so coincidences with flag steps are common.
pub fn small_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> M {
    M::from_fn(rows, cols, |_, _| Fp31::from_i64(rng.gen_range(-1..=1)))
}

pub fn small_flag(n: usize, rng: &mut ChaCha8Rng) -> Flag<Fp31> {
    loop {
        if let Ok(flag) = Flag::new(small_matrix(n, n, rng)) {
            return flag;
        }
    }
}

/// A subspace of dimension exactly `d` with small entries.
pub fn small_subspace(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Subspace<Fp31> {
    loop {
        if let Ok(s) = Subspace::from_basis(small_matrix(n, d, rng)) {
            return s;
        }
    }
}

/// `dim(V ∩ E_u)` for `u = 0..=n`, straight from intersections.
pub fn meet_dims(v: &Subspace<Fp31>, e: &Flag<Fp31>) -> Vec<usize> {
    (0..=e.dim())
        .map(|u| fulton_core::intersect_dim(v, &e.step(u)).unwrap())
        .collect()
}

/// Whether `V` satisfies the cell conditions `dim(V ∩ E_u) = a` for
/// `i_a ≤ u < i_{a+1}`.
pub fn in_cell(dims: &[usize], i: &IndexSet) -> bool {
    let n = dims.len() - 1;
    (0..=n).all(|u| dims[u] == i.elements().iter().filter(|&&x| x <= u).count())
}

/// Products of Schubert classes folded through the Jacobi-Trudi oracle.
pub fn oracle_product(classes: &[Partition], rows: usize, cols: usize) -> BTreeMap<Partition, i64> {
    let mut acc = BTreeMap::from([(Partition::empty(), 1i64)]);
    for nu in classes {
        let mut next = BTreeMap::new();
        for (mu, c) in &acc {
            for lambda in partitions_in_box(mu.size() + nu.size(), rows, cols) {
                let k = lr_coefficient_pieri(mu, nu, &lambda);
                if k != 0 {
                    *next.entry(lambda).or_insert(0) += c * k;
                }
            }
        }
        next.retain(|_, v| *v != 0);
        acc = next;
    }
    acc
}
