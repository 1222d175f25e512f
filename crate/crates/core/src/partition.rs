use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … > 0`, stored without trailing zeros so equal
/// partitions compare equal regardless of padding.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease and drops trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(alloc::format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Whether `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplies every part by `factor`.
    pub fn scale(&self, factor: usize) -> Self {
        if factor == 0 {
            return Self::empty();
        }
        Partition(self.0.iter().map(|p| p * factor).collect())
    }

    /// `(cols - λ_rows, …, cols - λ_1)`, the complement inside the rectangle.
    pub fn complement(&self, rows: usize, cols: usize) -> Result<Self> {
        if !self.fits(rows, cols) {
            return Err(Error::OutsideRectangle { rows, cols });
        }
        Partition::new((0..rows).rev().map(|i| cols - self.part(i)).collect())
    }

    /// Parts padded with zeros to length `len` (which must be ≥ `self.len()`).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }
}

impl fmt::Display for Partition {
    /// `3,2,1`; the empty partition prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Partitions of `size` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order (`(size)` first).
pub fn partitions_in_box(size: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(size, max_len, max_part, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    slots: usize,
    cap: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 || cap == 0 || remaining > slots * cap {
        return;
    }
    for p in (1..=cap.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, slots - 1, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[0]), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn scaling() {
        assert_eq!(p(&[2, 1]).scale(1), p(&[2, 1]));
        assert_eq!(p(&[2, 1]).scale(3), p(&[6, 3]));
        assert_eq!(Partition::empty().scale(5), Partition::empty());
    }

    #[test]
    fn complement_in_rectangle() {
        assert_eq!(p(&[2, 1]).complement(2, 2).unwrap(), p(&[1]));
        assert_eq!(p(&[3, 2, 1]).complement(3, 3).unwrap(), p(&[2, 1]));
        assert!(p(&[3]).complement(2, 2).is_err());
    }

    #[test]
    fn box_enumeration_counts() {
        // p(4) = 5, partitions of 4 into at most 2 parts: 4, 31, 22.
        assert_eq!(partitions_in_box(4, 4, 4).len(), 5);
        assert_eq!(
            partitions_in_box(4, 2, 4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
        assert_eq!(partitions_in_box(0, 0, 0), vec![Partition::empty()]);
        // Gaussian binomial [4 choose 2] has coefficients 1,1,2,1,1.
        let counts: Vec<usize> = (0..=4).map(|k| partitions_in_box(k, 2, 2).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 1, 1]);
    }
}
