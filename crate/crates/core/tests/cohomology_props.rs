//! Ring axioms of the Schubert product and the point-class bridges.

mod common;

use common::{oracle_product, p, set};
use fulton_core::cohomology::{class_product, CohomologyClass, SchubertCalculus};
use fulton_core::partition::partitions_in_box;
use fulton_core::{IndexSet, Partition, SchubertProblem};
use proptest::prelude::*;

fn box_partitions(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|k| partitions_in_box(k, rows, cols))
        .collect()
}

fn class(r: usize, n: usize, lambda: &Partition) -> CohomologyClass {
    CohomologyClass::schubert(r, n, lambda.clone()).unwrap()
}

fn ring_axioms(r: usize, n: usize, a: usize, b: usize, c: usize) {
    let all = box_partitions(r, n - r);
    let (x, y, z) = (
        class(r, n, &all[a % all.len()]),
        class(r, n, &all[b % all.len()]),
        class(r, n, &all[c % all.len()]),
    );
    assert_eq!(
        class_product(&x, &y).unwrap(),
        class_product(&y, &x).unwrap()
    );
    let left = class_product(&class_product(&x, &y).unwrap(), &z).unwrap();
    let right = class_product(&x, &class_product(&y, &z).unwrap()).unwrap();
    assert_eq!(left, right);
}

proptest! {
    #[test]
    fn ring_axioms_gr25(a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        ring_axioms(2, 5, a, b, c);
    }

    #[test]
    fn ring_axioms_gr36(a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        ring_axioms(3, 6, a, b, c);
    }
}

#[test]
fn products_match_oracle_fold() {
    let mut calc = SchubertCalculus::new();
    for (r, n) in [(2, 5), (3, 6)] {
        let all = box_partitions(r, n - r);
        for x in &all {
            for y in &all {
                let prod = calc
                    .class_product(&class(r, n, x), &class(r, n, y))
                    .unwrap();
                let oracle = oracle_product(&[x.clone(), y.clone()], r, n - r);
                let got: Vec<(Partition, i64)> =
                    prod.terms().map(|(l, c)| (l.clone(), c as i64)).collect();
                let want: Vec<(Partition, i64)> = oracle.into_iter().collect();
                assert_eq!(got, want, "{x} * {y} in Gr({r},{n})");
            }
        }
    }
}

#[test]
fn intersection_numbers_are_lr_coefficients() {
    // ∫ σ_μ σ_ν σ_{λ^∨} = c^λ_{μν} inside the box
    let mut calc = SchubertCalculus::new();
    let (r, n) = (3, 7);
    let all = box_partitions(r, n - r);
    for mu in &all {
        for nu in &all {
            for lambda in partitions_in_box(mu.size() + nu.size(), r, n - r) {
                let dual = lambda.complement(r, n - r).unwrap();
                let sets = [mu, nu, &dual]
                    .iter()
                    .map(|w| IndexSet::from_partition(w, n, r).unwrap())
                    .collect();
                let problem = SchubertProblem::new(n, r, sets).unwrap();
                assert_eq!(
                    calc.intersection_number(&problem).unwrap(),
                    calc.lr_coefficient(mu, nu, &lambda)
                );
            }
        }
    }
}

#[test]
fn invariant_dims_on_known_weights() {
    let mut calc = SchubertCalculus::new();
    assert_eq!(calc.invariant_dim(&vec![p(&[1]); 4], 2), 2);
    assert_eq!(calc.invariant_dim(&[p(&[2]), p(&[1, 1])], 2), 0);
    assert_eq!(calc.invariant_dim(&[p(&[2]), p(&[2])], 2), 1);
    let four = SchubertProblem::new(4, 2, vec![set(4, &[2, 4]); 4]).unwrap();
    assert_eq!(calc.intersection_number(&four).unwrap(), 2);
}

#[test]
fn nonvanishing_positions_match_oracle() {
    let mut calc = SchubertCalculus::new();
    for (d, r, s) in [(1, 3, 3), (2, 4, 3), (1, 4, 2), (2, 3, 3)] {
        let found = calc.nonvanishing_positions(d, r, s, d * (r - d));
        let sets = IndexSet::all(r, d);
        let mut want = Vec::new();
        let mut idx = vec![0usize; s];
        loop {
            let tuple: Vec<IndexSet> = idx.iter().map(|&k| sets[k].clone()).collect();
            let classes: Vec<Partition> = tuple.iter().map(IndexSet::to_partition).collect();
            if !oracle_product(&classes, d, r - d).is_empty() {
                want.push(tuple);
            }
            let Some(pos) = (0..s).rev().find(|&k| idx[k] + 1 < sets.len()) else {
                break;
            };
            idx[pos] += 1;
            idx[pos + 1..].fill(0);
        }
        assert_eq!(found, want, "Gr({d},{r}), s = {s}");
    }
}
