//! Schubert positions, induced flags, and the index arithmetic relating a
//! chain `S ⊆ V ⊆ W` to its positions.

use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::flag::Flag;
use crate::matrix::Matrix;
use crate::schubert::{IndexSet, SchubertProblem};
use crate::subspace::Subspace;

/// The Schubert position of `V` against `E`, with a basis of `V` adapted to
/// it: column `a` (1-based) lies in `E_{i_a} ∩ V`.
#[derive(Clone, Debug)]
pub struct AdaptedBasis<F: Field> {
    pub position: IndexSet,
    /// Ambient coordinates, `n x dim V`.
    pub basis: Matrix<F>,
}

/// Position and adapted basis by column reduction in the flag's coordinates.
///
/// Rows are scanned from `n` down to `1`; the first unassigned column with a
/// nonzero entry in row `u` becomes the vector with top index `u`, and row
/// `u` is cleared from the remaining unassigned columns. Each assigned column
/// then vanishes below its pivot, so `dim(V ∩ E_u)` counts pivots `≤ u`.
pub fn adapted_basis<F: Field>(v: &Subspace<F>, e: &Flag<F>) -> Result<AdaptedBasis<F>> {
    let n = e.dim();
    if v.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            context: "subspace against flag",
            expected: n,
            found: v.ambient_dim(),
        });
    }
    let r = v.dim();
    let mut coords = e.inverse().mul(v.basis());
    let mut pivot_of: Vec<Option<usize>> = alloc::vec![None; r];
    for row in (0..n).rev() {
        let Some(p) = (0..r).find(|&c| pivot_of[c].is_none() && !coords.get(row, c).is_zero())
        else {
            continue;
        };
        pivot_of[p] = Some(row);
        let inv = coords.get(row, p).inv().expect("pivot is nonzero");
        for (c, assigned) in pivot_of.iter().enumerate() {
            if assigned.is_some() || coords.get(row, c).is_zero() {
                continue;
            }
            let factor = coords.get(row, c).mul(&inv);
            for i in 0..n {
                let val = coords.get(i, c).sub(&factor.mul(coords.get(i, p)));
                coords.set(i, c, val);
            }
        }
    }
    let mut order: Vec<(usize, usize)> = pivot_of
        .iter()
        .enumerate()
        .map(|(c, row)| (row.expect("independent columns all get a pivot"), c))
        .collect();
    order.sort_unstable();
    let position = IndexSet::new(n, order.iter().map(|&(row, _)| row + 1).collect())?;
    let cols: Vec<usize> = order.iter().map(|&(_, c)| c).collect();
    let basis = e.ordered_basis().mul(&coords.select_columns(&cols));
    Ok(AdaptedBasis { position, basis })
}

/// `I = {u : dim(V ∩ E_u) > dim(V ∩ E_{u-1})}`.
pub fn schubert_position<F: Field>(v: &Subspace<F>, e: &Flag<F>) -> Result<IndexSet> {
    Ok(adapted_basis(v, e)?.position)
}

/// The flag `E_{i_a} ∩ V` on `V`, written in the coordinates of `v.basis()`.
pub fn induced_flag_sub<F: Field>(e: &Flag<F>, v: &Subspace<F>) -> Result<Flag<F>> {
    let adapted = adapted_basis(v, e)?;
    let coords = v
        .coordinates(&adapted.basis)
        .ok_or(Error::NotContained("adapted basis in V"))?;
    Flag::new(coords)
}

/// A subspace together with a fixed realization of `W / V`.
///
/// The complement is the first maximal set of standard basis vectors
/// independent of `V` (column reduction of `[basis(V) | I]`), and the
/// projection is read off the inverse of `[basis(V) | complement]`. Every
/// quotient flag built from one `Quotient` uses the same coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct Quotient<F: Field> {
    sub: Subspace<F>,
    /// `n x (n - r)`.
    complement: Matrix<F>,
    /// `(n - r) x n`; kills `V` and is the identity on the complement.
    projector: Matrix<F>,
}

impl<F: Field> Quotient<F> {
    pub fn new(v: &Subspace<F>) -> Self {
        let n = v.ambient_dim();
        let r = v.dim();
        let stacked = v.basis().hstack(&Matrix::identity(n));
        let pivots = stacked.echelon().pivots;
        let extra: Vec<usize> = pivots.iter().copied().filter(|&c| c >= r).collect();
        let complement = stacked.select_columns(&extra);
        let full = v.basis().hstack(&complement);
        let inverse = full.inverse().expect("basis plus complement spans");
        Quotient {
            sub: v.clone(),
            complement,
            projector: inverse.row_range(r..n),
        }
    }

    pub fn sub(&self) -> &Subspace<F> {
        &self.sub
    }

    pub fn dim(&self) -> usize {
        self.complement.cols()
    }

    pub fn complement(&self) -> &Matrix<F> {
        &self.complement
    }

    pub fn projector(&self) -> &Matrix<F> {
        &self.projector
    }

    /// `p(x)` for each column `x`.
    pub fn project(&self, vectors: &Matrix<F>) -> Matrix<F> {
        self.projector.mul(vectors)
    }

    /// The complement representative of each quotient vector.
    pub fn lift(&self, vectors: &Matrix<F>) -> Matrix<F> {
        self.complement.mul(vectors)
    }

    /// The flag `p(E_{α(b)})` on `W / V`, `α` enumerating `[n] \ I`.
    pub fn induced_flag(&self, e: &Flag<F>) -> Result<Flag<F>> {
        let position = schubert_position(&self.sub, e)?;
        let alpha: Vec<usize> = position.complement().iter().map(|&u| u - 1).collect();
        Flag::new(self.project(&e.ordered_basis().select_columns(&alpha)))
    }
}

/// [`Quotient::induced_flag`] with a quotient built for this call only.
pub fn induced_flag_quot<F: Field>(e: &Flag<F>, v: &Subspace<F>) -> Result<Flag<F>> {
    Quotient::new(v).induced_flag(e)
}

/// `L = {i_a : a ∈ K}`.
pub fn falcon_compose(i: &IndexSet, k: &IndexSet) -> Result<IndexSet> {
    if k.n() != i.r() {
        return Err(Error::DimensionMismatch {
            context: "inner position ambient",
            expected: i.r(),
            found: k.n(),
        });
    }
    IndexSet::new(i.n(), k.elements().iter().map(|&a| i.at(a)).collect())
}

/// `dim(V, W, E) = r(n - r) - Σ_j codim(I^j)` for the positions of `V`.
pub fn dim_triple(positions: &SchubertProblem) -> i64 {
    positions.expected_dim()
}

/// [`dim_triple`] from a bare tuple of positions of one subspace; an empty
/// tuple gives `r(n - r)`.
pub fn dim_triple_of(n: usize, r: usize, positions: &[IndexSet]) -> Result<i64> {
    if let Some(bad) = positions.iter().find(|p| p.n() != n || p.r() != r) {
        return Err(Error::InvalidProblem(alloc::format!(
            "{bad} is not a position in Gr({r},{n})"
        )));
    }
    let codim: usize = positions.iter().map(IndexSet::codim).sum();
    Ok((r * (n - r)) as i64 - codim as i64)
}

/// `Σ_j Σ_{a ∈ K^j} (n - r + a - i^j_a) - d(n - r)`, which equals
/// `dim(S, V, E(V)) - dim(S, W, E)`.
pub fn rappel_delta(outer: &[IndexSet], inner: &[IndexSet]) -> Result<i64> {
    if outer.len() != inner.len() {
        return Err(Error::DimensionMismatch {
            context: "number of position pairs",
            expected: outer.len(),
            found: inner.len(),
        });
    }
    let Some(first) = outer.first() else {
        return Ok(0);
    };
    let (n, r) = (first.n(), first.r());
    let d = inner[0].r();
    let mut total = 0i64;
    for (i, k) in outer.iter().zip(inner) {
        if i.n() != n || i.r() != r || k.n() != r || k.r() != d {
            return Err(Error::InvalidProblem(alloc::format!(
                "positions {i} and {k} have inconsistent sizes"
            )));
        }
        for &a in k.elements() {
            total += (n - r + a - i.at(a)) as i64;
        }
    }
    Ok(total - (d * (n - r)) as i64)
}

/// A subspace with its positions against an `s`-tuple of flags.
#[derive(Clone, Debug, Serialize)]
pub struct PositionedSubspace<F: Field> {
    pub subspace: Subspace<F>,
    pub positions: Vec<IndexSet>,
}

impl<F: Field> PositionedSubspace<F> {
    pub fn new(subspace: Subspace<F>, flags: &[Flag<F>]) -> Result<Self> {
        let positions = flags
            .iter()
            .map(|e| schubert_position(&subspace, e))
            .collect::<Result<_>>()?;
        Ok(PositionedSubspace {
            subspace,
            positions,
        })
    }

    pub fn dim_triple(&self) -> Result<i64> {
        dim_triple_of(
            self.subspace.ambient_dim(),
            self.subspace.dim(),
            &self.positions,
        )
    }
}
