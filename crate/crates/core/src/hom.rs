//! The linear system `Hom_I(V, Q, F, G) = {φ : φ(F^j_a) ⊆ G^j_{i^j_a - a}}`.
//!
//! `V = F^r` and `Q = F^{n-r}` are coordinate spaces; a map `φ` is an
//! `(n - r) x r` matrix and its unknowns are ordered column-major, so entry
//! `(p, q)` is unknown `q (n - r) + p`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_core::RngCore;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::flag::{random_flag, Flag};
use crate::matrix::Matrix;
use crate::schubert::SchubertProblem;
use crate::subspace::{intersect_dim, Subspace};

/// Default number of independent flag tuples per genericity estimate.
pub const DEFAULT_TRIALS: usize = 3;

/// Batches of trials tried before disagreement becomes an error.
pub const MAX_BATCHES: usize = 10;

/// The solved system for one problem and one pair of flag tuples.
#[derive(Clone, Debug, Serialize)]
pub struct HomSystem<F: Field> {
    problem: SchubertProblem,
    f: Vec<Flag<F>>,
    g: Vec<Flag<F>>,
    constraints: Matrix<F>,
    kernel: Matrix<F>,
}

/// Builds and solves the system.
///
/// In the dual coordinates of `G^j`, `φ(f) ∈ G^j_t` says the last `n - r - t`
/// coordinates of `G^{-1} φ f` vanish. Since `t_a = i_a - a` is weakly
/// increasing in `a`, only the newest basis vector `f_a` of `F^j_a` needs the
/// condition for `t_a`; the earlier ones carry stronger conditions already.
pub fn build_system<F: Field>(
    problem: &SchubertProblem,
    f: &[Flag<F>],
    g: &[Flag<F>],
) -> Result<HomSystem<F>> {
    let (r, m, s) = (problem.r(), problem.n() - problem.r(), problem.s());
    for (flags, dim, context) in [(f, r, "flags on V"), (g, m, "flags on Q")] {
        if flags.len() != s {
            return Err(Error::DimensionMismatch {
                context,
                expected: s,
                found: flags.len(),
            });
        }
        if let Some(bad) = flags.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                context,
                expected: dim,
                found: bad.dim(),
            });
        }
    }
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (j, set) in problem.sets().iter().enumerate() {
        let ginv = g[j].inverse();
        let basis = f[j].ordered_basis();
        for a in 1..=r {
            let t = set.at(a) - a;
            if t >= m {
                continue;
            }
            let fa = basis.column(a - 1);
            for k in t..m {
                let mut row = alloc::vec![F::zero(); r * m];
                for (q, fq) in fa.iter().enumerate() {
                    if fq.is_zero() {
                        continue;
                    }
                    for p in 0..m {
                        row[q * m + p] = ginv.get(k, p).mul(fq);
                    }
                }
                rows.push(row);
            }
        }
    }
    let mut constraints = Matrix::zeros(rows.len(), r * m);
    for (i, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            constraints.set(i, c, v);
        }
    }
    let kernel = constraints.kernel_basis();
    Ok(HomSystem {
        problem: problem.clone(),
        f: f.to_vec(),
        g: g.to_vec(),
        constraints,
        kernel,
    })
}

impl<F: Field> HomSystem<F> {
    pub fn problem(&self) -> &SchubertProblem {
        &self.problem
    }

    pub fn f(&self) -> &[Flag<F>] {
        &self.f
    }

    pub fn g(&self) -> &[Flag<F>] {
        &self.g
    }

    pub fn constraint_matrix(&self) -> &Matrix<F> {
        &self.constraints
    }

    /// Kernel basis, one column per solution, in unknown order.
    pub fn kernel(&self) -> &Matrix<F> {
        &self.kernel
    }

    /// `dim Hom = r(n - r) - rank`.
    pub fn dim(&self) -> usize {
        self.kernel.cols()
    }

    fn q_dim(&self) -> usize {
        self.problem.n() - self.problem.r()
    }

    /// Solution column `k` as an `(n - r) x r` map.
    pub fn solution(&self, k: usize) -> Matrix<F> {
        reshape(&self.kernel.column(k), self.q_dim(), self.problem.r())
    }

    /// Checks `φ(F^j_a) ⊆ G^j_{i^j_a - a}` for every `j, a` by subspace
    /// intersection, independently of the constraint rows.
    pub fn audit(&self, phi: &Matrix<F>) -> Result<bool> {
        audit_map(&self.problem, &self.f, &self.g, phi)
    }
}

/// Unknown vector to map, column-major.
pub fn reshape<F: Field>(x: &[F], rows: usize, cols: usize) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |p, q| x[q * rows + p].clone())
}

/// Whether `φ(F^j_a) ⊆ G^j_{i^j_a - a}` for all `j, a`.
pub fn audit_map<F: Field>(
    problem: &SchubertProblem,
    f: &[Flag<F>],
    g: &[Flag<F>],
    phi: &Matrix<F>,
) -> Result<bool> {
    let (r, m) = (problem.r(), problem.n() - problem.r());
    if (phi.rows(), phi.cols()) != (m, r) {
        return Err(Error::DimensionMismatch {
            context: "map shape",
            expected: m * r,
            found: phi.rows() * phi.cols(),
        });
    }
    for (j, set) in problem.sets().iter().enumerate() {
        for a in 1..=r {
            let t = set.at(a) - a;
            if t >= m {
                continue;
            }
            let image = f[j].step(a).image(phi);
            if intersect_dim(&image, &g[j].step(t))? != image.dim() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Flag tuples on `V` and on `Q`.
pub type FlagTuples<F> = (Vec<Flag<F>>, Vec<Flag<F>>);

/// Random flag tuples on `V` and `Q`.
pub fn random_flags<F: Field, R: RngCore + ?Sized>(
    problem: &SchubertProblem,
    rng: &mut R,
) -> Result<FlagTuples<F>> {
    let (r, m) = (problem.r(), problem.n() - problem.r());
    let f = (0..problem.s())
        .map(|_| random_flag(r, rng))
        .collect::<Result<_>>()?;
    let g = (0..problem.s())
        .map(|_| random_flag(m, rng))
        .collect::<Result<_>>()?;
    Ok((f, g))
}

/// Result of a genericity estimate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomEstimate {
    /// Minimum over the accepted batch.
    pub dim: usize,
    /// Per-trial dimensions of the accepted batch.
    pub observed: Vec<usize>,
    /// Batches drawn, including the accepted one.
    pub batches: usize,
}

/// Runs batches of `trials` samples until all samples of a batch agree.
///
/// After [`MAX_BATCHES`] disagreeing batches this is an error naming
/// `context`.
pub fn agreeing_trials<T, R: RngCore + ?Sized>(
    trials: usize,
    rng: &mut R,
    context: impl Fn() -> String,
    mut sample: impl FnMut(&mut R) -> Result<(usize, T)>,
) -> Result<(usize, T, Vec<usize>, usize)> {
    let trials = trials.max(1);
    let mut last = Vec::new();
    for batch in 1..=MAX_BATCHES {
        let mut observed = Vec::with_capacity(trials);
        let mut first = None;
        for _ in 0..trials {
            let (value, payload) = sample(rng)?;
            observed.push(value);
            if first.is_none() {
                first = Some(payload);
            }
        }
        if observed.iter().all(|&v| v == observed[0]) {
            return Ok((
                observed[0],
                first.expect("at least one trial"),
                observed,
                batch,
            ));
        }
        last = observed;
    }
    Err(Error::TrialInstability {
        context: context(),
        observed: last,
    })
}

/// Generic `dim Hom` estimated over random flag tuples.
pub fn generic_hom_dim<F: Field, R: RngCore + ?Sized>(
    problem: &SchubertProblem,
    trials: usize,
    rng: &mut R,
) -> Result<HomEstimate> {
    let (dim, (), observed, batches) = agreeing_trials(
        trials,
        rng,
        || format!("generic Hom dimension of {problem}"),
        |rng| {
            let (f, g) = random_flags::<F, R>(problem, rng)?;
            Ok((build_system(problem, &f, &g)?.dim(), ()))
        },
    )?;
    Ok(HomEstimate {
        dim,
        observed,
        batches,
    })
}

/// A random combination of the kernel basis, as an `(n - r) x r` map.
pub fn sample_generic<F: Field, R: RngCore + ?Sized>(
    system: &HomSystem<F>,
    rng: &mut R,
) -> Result<Matrix<F>> {
    if system.dim() == 0 {
        return Err(Error::ZeroHom);
    }
    let coeffs = Matrix::random(system.dim(), 1, rng);
    let x = system.kernel.mul(&coeffs).column(0);
    Ok(reshape(&x, system.q_dim(), system.problem.r()))
}

/// Whether `map(source) ⊆ target`.
pub fn maps_into<F: Field>(
    map: &Matrix<F>,
    source: &Subspace<F>,
    target: &Subspace<F>,
) -> Result<bool> {
    let image = source.image(map);
    Ok(intersect_dim(&image, target)? == image.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp31;
    use crate::schubert::IndexSet;
    use alloc::vec;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.to_vec()).unwrap()
    }

    fn problem(n: usize, sets: &[&[usize]]) -> SchubertProblem {
        SchubertProblem::from_sets(sets.iter().map(|e| set(n, e)).collect()).unwrap()
    }

    #[test]
    fn open_cells_have_no_conditions() {
        let p = problem(5, &[&[4, 5], &[4, 5]]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (f, g) = random_flags::<Fp31, _>(&p, &mut rng).unwrap();
        let h = build_system(&p, &f, &g).unwrap();
        assert_eq!(h.constraint_matrix().rows(), 0);
        assert_eq!(h.dim(), 6);
    }

    #[test]
    fn generic_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let four = problem(4, &[&[2usize, 4][..]; 4]);
        assert_eq!(
            generic_hom_dim::<Fp31, _>(&four, 3, &mut rng).unwrap().dim,
            0
        );
        let mixed = problem(4, &[&[1, 4], &[2, 3]]);
        let est = generic_hom_dim::<Fp31, _>(&mixed, 3, &mut rng).unwrap();
        assert_eq!(est.dim, 1);
        assert_eq!(est.observed, vec![1, 1, 1]);
        let open = problem(5, &[&[3, 4, 5]]);
        assert_eq!(
            generic_hom_dim::<Fp31, _>(&open, 3, &mut rng).unwrap().dim,
            6
        );
    }

    #[test]
    fn row_count_is_total_codimension() {
        let p = problem(6, &[&[1, 3, 6], &[2, 4, 5], &[1, 5, 6]]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (f, g) = random_flags::<Fp31, _>(&p, &mut rng).unwrap();
        let h = build_system(&p, &f, &g).unwrap();
        assert_eq!(h.constraint_matrix().rows(), p.total_codim());
    }

    #[test]
    fn samples_pass_the_audit() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mixed = problem(4, &[&[1, 4], &[2, 3]]);
        let (f, g) = random_flags::<Fp31, _>(&mixed, &mut rng).unwrap();
        let h = build_system(&mixed, &f, &g).unwrap();
        let phi = sample_generic(&h, &mut rng).unwrap();
        assert!(h.audit(&phi).unwrap());
        // rank one, killing F^1_1
        assert_eq!(phi.rank(), 1);
        assert!(phi.mul(&f[0].ordered_basis().column_range(0..1)).is_zero());
        for k in 0..h.dim() {
            assert!(h.audit(&h.solution(k)).unwrap());
        }
        // a map outside the system fails
        let random = Matrix::random(2, 2, &mut rng);
        assert!(!h.audit(&random).unwrap());
    }

    #[test]
    fn zero_hom_cannot_be_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let four = problem(4, &[&[2usize, 4][..]; 4]);
        let (f, g) = random_flags::<Fp31, _>(&four, &mut rng).unwrap();
        let h = build_system(&four, &f, &g).unwrap();
        assert_eq!(sample_generic(&h, &mut rng), Err(Error::ZeroHom));
    }

    #[test]
    fn shape_errors() {
        let p = problem(4, &[&[2usize, 4][..]; 2]);
        let f = vec![Flag::<Fp31>::standard(2); 2];
        let g = vec![Flag::<Fp31>::standard(3); 2];
        assert!(build_system(&p, &f, &g).is_err());
        assert!(build_system(&p, &f[..1], &f).is_err());
    }

    #[test]
    fn disagreement_is_an_error() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut flip = 0;
        let out = agreeing_trials(
            2,
            &mut rng,
            || "toggle".into(),
            |_| {
                flip += 1;
                Ok((flip % 2, ()))
            },
        );
        assert!(matches!(out, Err(Error::TrialInstability { .. })));
    }
}
