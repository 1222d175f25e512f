use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A linear subspace of `F^n`, stored as a basis with independent columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Wraps a basis, rejecting dependent columns.
    pub fn from_basis(basis: Matrix<F>) -> Result<Self> {
        if basis.rank() != basis.cols() {
            return Err(Error::DependentColumns);
        }
        Ok(Subspace {
            ambient: basis.rows(),
            basis,
        })
    }

    /// The span of the columns of `spanning`, keeping the first maximal
    /// independent subset of them as the basis.
    pub fn span(spanning: &Matrix<F>) -> Self {
        let pivots = spanning.echelon().pivots;
        Subspace {
            ambient: spanning.rows(),
            basis: spanning.select_columns(&pivots),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    /// Whether every column of `vectors` lies in the subspace.
    pub fn contains_vectors(&self, vectors: &Matrix<F>) -> bool {
        assert_eq!(vectors.rows(), self.ambient, "ambient mismatch");
        self.basis.hstack(vectors).rank() == self.dim()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.contains_vectors(&other.basis)
    }

    /// Coordinates of `vectors` in this basis, if they lie in the subspace.
    pub fn coordinates(&self, vectors: &Matrix<F>) -> Option<Matrix<F>> {
        self.basis.solve(vectors)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        check_ambient(self, other)?;
        let stacked = self.basis.hstack(&other.basis);
        let kernel = stacked.kernel_basis();
        // A x = -B y on the kernel, so A x spans the intersection.
        let top = kernel.row_range(0..self.dim());
        Ok(Subspace::span(&self.basis.mul(&top)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_ambient(self, other)?;
        Ok(Subspace::span(&self.basis.hstack(&other.basis)))
    }

    /// Image under a linear map whose columns are indexed by this ambient space.
    pub fn image(&self, map: &Matrix<F>) -> Self {
        Subspace::span(&map.mul(&self.basis))
    }
}

fn check_ambient<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            context: "subspace ambient",
            expected: a.ambient,
            found: b.ambient,
        });
    }
    Ok(())
}

/// `dim(A ∩ B) = dim A + dim B - rank [A | B]`.
pub fn intersect_dim<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<usize> {
    check_ambient(a, b)?;
    Ok(a.dim() + b.dim() - a.basis.hstack(&b.basis).rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp31;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<Fp31>;

    fn e(n: usize, i: usize) -> Subspace<Fp31> {
        Subspace::from_basis(M::from_fn(n, 1, |r, _| Fp31::from_i64((r == i) as i64))).unwrap()
    }

    #[test]
    fn intersect_dim_examples() {
        assert_eq!(intersect_dim(&e(2, 0), &e(2, 0)).unwrap(), 1);
        assert_eq!(intersect_dim(&e(2, 0), &e(2, 1)).unwrap(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = Subspace::from_basis(M::random(4, 2, &mut rng)).unwrap();
        let b = Subspace::from_basis(M::random(4, 2, &mut rng)).unwrap();
        assert_eq!(intersect_dim(&a, &b).unwrap(), 0);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert!(matches!(
            intersect_dim(&e(2, 0), &e(3, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dependent_basis_rejected() {
        assert_eq!(
            Subspace::from_basis(M::from_i64_rows(&[&[1, 2], &[2, 4]])),
            Err(Error::DependentColumns)
        );
    }

    #[test]
    fn intersection_matches_dimension_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let shared = M::random(6, 2, &mut rng);
            let a = Subspace::span(&shared.hstack(&M::random(6, 2, &mut rng)));
            let b = Subspace::span(&shared.hstack(&M::random(6, 1, &mut rng)));
            let meet = a.intersection(&b).unwrap();
            assert_eq!(meet.dim(), intersect_dim(&a, &b).unwrap());
            assert!(a.contains(&meet) && b.contains(&meet));
            assert_eq!(
                intersect_dim(&a, &b).unwrap(),
                intersect_dim(&b, &a).unwrap()
            );
            assert!(intersect_dim(&a, &b).unwrap() <= a.dim().min(b.dim()));
        }
    }
}
