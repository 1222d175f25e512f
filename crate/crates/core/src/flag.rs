use serde::Serialize;

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Attempts made by [`random_flag`] before giving up.
pub const RANDOM_FLAG_ATTEMPTS: usize = 100;

/// A complete flag `E_1 ⊂ … ⊂ E_n` on `F^n`, encoded by an ordered basis:
/// `E_i` is the span of the first `i` columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag<F: Field> {
    basis: Matrix<F>,
    #[serde(skip)]
    inverse: Matrix<F>,
}

impl<F: Field> Flag<F> {
    pub fn new(basis: Matrix<F>) -> Result<Self> {
        if basis.rows() != basis.cols() {
            return Err(Error::DimensionMismatch {
                context: "flag basis",
                expected: basis.rows(),
                found: basis.cols(),
            });
        }
        let inverse = basis.inverse().ok_or(Error::DependentColumns)?;
        Ok(Flag { basis, inverse })
    }

    /// The flag of coordinate subspaces `span(e_1, …, e_i)`.
    pub fn standard(n: usize) -> Self {
        Flag {
            basis: Matrix::identity(n),
            inverse: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ordered_basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Coordinates with respect to the ordered basis.
    pub fn inverse(&self) -> &Matrix<F> {
        &self.inverse
    }

    /// `E_i`, for `0 <= i <= n`.
    pub fn step(&self, i: usize) -> Subspace<F> {
        Subspace::from_basis(self.basis.column_range(0..i)).expect("flag basis is invertible")
    }
}

/// A flag with uniformly sampled ordered basis, resampled until invertible.
pub fn random_flag<F: Field, R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Result<Flag<F>> {
    for _ in 0..RANDOM_FLAG_ATTEMPTS {
        if let Ok(flag) = Flag::new(Matrix::random(n, n, rng)) {
            return Ok(flag);
        }
    }
    Err(Error::SamplingFailed {
        attempts: RANDOM_FLAG_ATTEMPTS,
    })
}
