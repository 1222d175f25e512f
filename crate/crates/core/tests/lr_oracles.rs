//! The tableau engine against the Jacobi-Trudi/Pieri oracle.

mod common;

use common::p;
use fulton_core::lr::LrCalculator;
use fulton_core::partition::partitions_in_box;
use fulton_core::pieri::lr_coefficient_pieri;
use fulton_core::Partition;

fn partitions_up_to(size: usize, max_len: usize) -> Vec<Partition> {
    (0..=size)
        .flat_map(|k| partitions_in_box(k, max_len, k.max(1)))
        .collect()
}

#[test]
fn tableaux_match_pieri_oracle() {
    let mut calc = LrCalculator::new();
    let small = partitions_up_to(8, 4);
    let mut checked = 0;
    for mu in &small {
        for nu in &small {
            let total = mu.size() + nu.size();
            if total > 8 {
                continue;
            }
            for lambda in partitions_in_box(total, 4, total.max(1)) {
                let fast = calc.coefficient(mu, nu, &lambda) as i64;
                let oracle = lr_coefficient_pieri(mu, nu, &lambda);
                assert_eq!(fast, oracle, "c^{lambda}_{{{mu}; {nu}}}");
                checked += 1;
            }
        }
    }
    assert!(checked > 4_000);
}

#[test]
fn coefficients_are_symmetric() {
    let mut calc = LrCalculator::new();
    for size in 0..=10 {
        for lambda in partitions_in_box(size, size, size) {
            for k in 0..=size {
                for mu in partitions_in_box(k, lambda.len(), lambda.part(0)) {
                    if !lambda.contains(&mu) {
                        continue;
                    }
                    for nu in partitions_in_box(size - k, lambda.len(), lambda.part(0)) {
                        assert_eq!(
                            calc.coefficient(&mu, &nu, &lambda),
                            calc.coefficient(&nu, &mu, &lambda),
                            "c^{lambda}_{{{mu}; {nu}}}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn scaled_staircase_multiplicities() {
    let mut calc = LrCalculator::new();
    for n in 1..=4usize {
        let (mu, lambda) = (p(&[2, 1]).scale(n), p(&[3, 2, 1]).scale(n));
        let expected = n as u64 + 1;
        assert_eq!(calc.coefficient(&mu, &mu, &lambda), expected);
        assert_eq!(lr_coefficient_pieri(&mu, &mu, &lambda), expected as i64);
    }
}
