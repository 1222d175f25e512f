//! Independent LR oracle: Jacobi-Trudi expansion plus iterated Pieri.
//!
//! `s_ν = det(h_{ν_i - i + j})`, so `s_μ s_ν` is a signed sum over
//! permutations of `s_μ h_{a_1} ⋯ h_{a_ℓ}`, and each `h_a` factor adds a
//! horizontal strip. Only shapes inside `λ` can reach `λ`, so the expansion
//! is pruned to them. Shares no code with the tableau enumeration.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::partition::Partition;

/// `c^λ_{μν}` via Jacobi-Trudi and horizontal strips.
pub fn lr_coefficient_pieri(mu: &Partition, nu: &Partition, lambda: &Partition) -> i64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let len = nu.len();
    let mut total = 0i64;
    for (perm, sign) in permutations(len) {
        let mut strips = Vec::with_capacity(len);
        let mut valid = true;
        for (i, &w) in perm.iter().enumerate() {
            let a = nu.part(i) as i64 - i as i64 + w as i64;
            if a < 0 {
                valid = false;
                break;
            }
            strips.push(a as usize);
        }
        if valid {
            total += sign * pieri_chain(mu, &strips, lambda);
        }
    }
    total
}

/// Coefficient of `s_λ` in `s_μ h_{a_1} ⋯ h_{a_k}`.
pub fn pieri_chain(mu: &Partition, strips: &[usize], lambda: &Partition) -> i64 {
    let mut layer: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    layer.insert(mu.padded(lambda.len()), 1);
    let bound = lambda.padded(lambda.len());
    for &a in strips {
        let mut next = BTreeMap::new();
        for (shape, coeff) in &layer {
            let mut grown = shape.clone();
            add_strip(shape, &bound, 0, a, &mut grown, &mut |s| {
                *next.entry(s.to_vec()).or_insert(0) += coeff;
            });
        }
        layer = next;
    }
    layer.get(&bound).copied().unwrap_or(0)
}

/// Every way to add a horizontal strip of `left` boxes to `shape` from row
/// `row` on, staying inside `bound`.
fn add_strip(
    shape: &[usize],
    bound: &[usize],
    row: usize,
    left: usize,
    grown: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if left == 0 {
        emit(grown);
        return;
    }
    if row == shape.len() {
        return;
    }
    // a horizontal strip never reaches past the old part of the row above
    let ceiling = if row == 0 {
        bound[0]
    } else {
        bound[row].min(shape[row - 1])
    };
    let room = ceiling.saturating_sub(shape[row]);
    for add in 0..=room.min(left) {
        grown[row] = shape[row] + add;
        add_strip(shape, bound, row + 1, left - add, grown, emit);
    }
    grown[row] = shape[row];
}

/// Permutations of `0..n` with their signs, in lexicographic order.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push((perm.clone(), sign(&perm)));
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

fn sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_rule_itself() {
        // s_1 h_1 = s_2 + s_11
        assert_eq!(pieri_chain(&p(&[1]), &[1], &p(&[2])), 1);
        assert_eq!(pieri_chain(&p(&[1]), &[1], &p(&[1, 1])), 1);
        // h_1^3 contains s_21 twice
        assert_eq!(pieri_chain(&Partition::empty(), &[1, 1, 1], &p(&[2, 1])), 2);
    }

    #[test]
    fn oracle_known_values() {
        assert_eq!(
            lr_coefficient_pieri(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])),
            2
        );
        assert_eq!(
            lr_coefficient_pieri(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])),
            1
        );
        assert_eq!(lr_coefficient_pieri(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient_pieri(&p(&[2]), &p(&[1, 1]), &p(&[2, 2])), 0);
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(permutations(0), alloc::vec![(Vec::new(), 1)]);
    }
}
