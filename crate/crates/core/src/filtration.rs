//! The tangent space method and the audit of its rank formula.
//!
//! Everything is written in coordinates of `V = F^r`. Starting from a
//! generic `φ ∈ Hom_I(V, Q, F, G)`, `S^(1) = ker φ`; at level `ℓ` the
//! subspace `S^(ℓ)` sits inside `S^(ℓ-1)` at positions `L(ℓ)` against the
//! induced flags, and the tangent space to that relative Schubert
//! intersection is the Hom system of the relative problem with the induced
//! sub and quotient flags. A zero tangent space stops the recursion;
//! otherwise a generic tangent vector `ψ^(ℓ)` gives `S^(ℓ+1) = ker ψ^(ℓ)`.
//!
//! The chain ends at a terminal subspace:
//! - `Hom = 0`: nothing is sampled and the terminal subspace is `V` itself;
//! - `φ` or some `ψ^(ℓ)` injective: the terminal subspace is `0`;
//! - a zero tangent space at level `h`: the terminal subspace is `S^(h)`.
//!
//! `η_0 = φ` and `η_u = η_{u-1} ∘ lift ∘ ψ^(u)`, one per graded step of the
//! chain, each stored as a matrix on `S^(u)` coordinates.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::flag::Flag;
use crate::geometry::{
    dim_triple_of, falcon_compose, induced_flag_sub, rappel_delta, schubert_position, Quotient,
};
use crate::hom::{agreeing_trials, build_system, generic_hom_dim, random_flags, sample_generic};
use crate::matrix::Matrix;
use crate::schubert::{IndexSet, SchubertProblem};
use crate::subspace::{intersect_dim, Subspace};

/// How the recursion stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Termination {
    /// `Hom_I = 0`; the chain is `V` alone.
    ZeroHom,
    /// The map sampled at `level` (0 for `φ`) was injective.
    Injective { level: usize },
    /// The relative tangent space at `S^(level)` is zero.
    Rigid { level: usize },
}

/// One level `u ≥ 1` of the recursion.
#[derive(Clone, Debug, Serialize)]
pub struct Level<F: Field> {
    pub u: usize,
    pub dim: usize,
    /// `S^(u)` in coordinates of `V`, `r x d_u`.
    pub basis: Matrix<F>,
    /// `F^j(u) ⊆ [r]`.
    pub positions: Vec<IndexSet>,
    /// `{i^j_a : a ∈ F^j(u)} ⊆ [n]`.
    pub ambient_positions: Vec<IndexSet>,
    /// `L^j(u) ⊆ [d_{u-1}]`.
    pub relative_positions: Vec<IndexSet>,
    pub tangent_dim: usize,
    /// `ψ^(u): S^(u) → S^(u-1)/S^(u)`, absent when the tangent space is zero.
    pub psi: Option<Matrix<F>>,
    /// Complement of `S^(u)` in `S^(u-1)` coordinates, lifting the quotient.
    pub complement: Option<Matrix<F>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationTrace<F: Field> {
    pub problem: SchubertProblem,
    pub field: FieldKind,
    pub seed: Option<u64>,
    pub f: Vec<Flag<F>>,
    pub g: Vec<Flag<F>>,
    pub hom_dim: usize,
    pub expected_dim: i64,
    pub phi: Option<Matrix<F>>,
    pub levels: Vec<Level<F>>,
    /// Number of nonzero kernel levels.
    pub h: usize,
    pub termination: Termination,
    /// Terminal subspace in coordinates of `V`.
    pub terminal: Matrix<F>,
    pub terminal_positions: Vec<IndexSet>,
    /// `η_0, …`, one per step of `V ⊋ S^(1) ⊋ … ⊋ terminal`.
    pub etas: Vec<Matrix<F>>,
    /// `Σ_j Σ_{a ∈ F^j(terminal)} (n - r + a - i^j_a) - d (n - r)`.
    pub correction: i64,
}

impl<F: Field> FiltrationTrace<F> {
    pub fn terminal_dim(&self) -> usize {
        self.terminal.cols()
    }

    /// Bases of `V = S^(0) ⊋ S^(1) ⊋ … ⊋ terminal`.
    pub fn chain(&self) -> Vec<Matrix<F>> {
        let r = self.problem.r();
        let mut chain = alloc::vec![Matrix::identity(r)];
        chain.extend(self.levels.iter().map(|l| l.basis.clone()));
        if matches!(self.termination, Termination::Injective { .. }) {
            chain.push(Matrix::zeros(r, 0));
        }
        chain
    }
}

/// Runs the recursion at explicit flags. `trials` governs agreement of the
/// kernel dimension of each sampled map.
pub fn run_filtration<F: Field, R: RngCore + ?Sized>(
    problem: &SchubertProblem,
    f: &[Flag<F>],
    g: &[Flag<F>],
    trials: usize,
    rng: &mut R,
) -> Result<FiltrationTrace<F>> {
    let r = problem.r();
    let hom = build_system(problem, f, g)?;
    let mut trace = FiltrationTrace {
        problem: problem.clone(),
        field: F::kind(),
        seed: None,
        f: f.to_vec(),
        g: g.to_vec(),
        hom_dim: hom.dim(),
        expected_dim: problem.expected_dim(),
        phi: None,
        levels: Vec::new(),
        h: 0,
        termination: Termination::ZeroHom,
        terminal: Matrix::identity(r),
        terminal_positions: alloc::vec![IndexSet::full(r); problem.s()],
        etas: Vec::new(),
        correction: 0,
    };
    if hom.dim() == 0 {
        trace.correction = rappel_delta(problem.sets(), &trace.terminal_positions)?;
        return Ok(trace);
    }

    let (_, phi, _, _) = agreeing_trials(
        trials,
        rng,
        || format!("kernel of a generic map for {problem}"),
        |rng| {
            let phi = sample_generic(&hom, rng)?;
            Ok((phi.kernel_basis().cols(), phi))
        },
    )?;
    let mut child = phi.kernel_basis();
    trace.etas.push(phi.clone());
    trace.phi = Some(phi);
    let mut parent = Subspace::whole(r);
    let mut parent_flags: Vec<Flag<F>> = f.to_vec();
    let mut prev_positions: Vec<IndexSet> = alloc::vec![IndexSet::full(r); problem.s()];

    let termination = loop {
        let u = trace.levels.len() + 1;
        if child.cols() == 0 {
            break Termination::Injective { level: u - 1 };
        }
        if u > r {
            return Err(Error::FiltrationTooDeep { cap: r });
        }
        // child basis in the coordinates of the parent basis
        let x = parent
            .coordinates(&child)
            .ok_or(Error::NotContained("S^(u) in S^(u-1)"))?;
        let x_space = Subspace::from_basis(x.clone())?;
        let basis = parent.basis().mul(&x);
        let s_u = Subspace::from_basis(basis.clone())?;

        let relative_positions = parent_flags
            .iter()
            .map(|e| schubert_position(&x_space, e))
            .collect::<Result<Vec<_>>>()?;
        let positions = f
            .iter()
            .map(|e| schubert_position(&s_u, e))
            .collect::<Result<Vec<_>>>()?;
        let ambient_positions = problem
            .sets()
            .iter()
            .zip(&positions)
            .map(|(i, k)| falcon_compose(i, k))
            .collect::<Result<Vec<_>>>()?;

        let quotient = Quotient::new(&x_space);
        let sub_flags = parent_flags
            .iter()
            .map(|e| induced_flag_sub(e, &x_space))
            .collect::<Result<Vec<_>>>()?;
        let quot_flags = parent_flags
            .iter()
            .map(|e| quotient.induced_flag(e))
            .collect::<Result<Vec<_>>>()?;
        let relative = SchubertProblem::new(parent.dim(), x.cols(), relative_positions.clone())?;
        let tangent = build_system(&relative, &sub_flags, &quot_flags)?;

        let mut level = Level {
            u,
            dim: x.cols(),
            basis: basis.clone(),
            positions: positions.clone(),
            ambient_positions,
            relative_positions,
            tangent_dim: tangent.dim(),
            psi: None,
            complement: None,
        };
        prev_positions = positions;

        if tangent.dim() == 0 {
            trace.levels.push(level);
            break Termination::Rigid { level: u };
        }
        let (_, psi, _, _) = agreeing_trials(
            trials,
            rng,
            || format!("kernel of a tangent vector at level {u} for {problem}"),
            |rng| {
                let psi = sample_generic(&tangent, rng)?;
                Ok((psi.kernel_basis().cols(), psi))
            },
        )?;
        let kernel = psi.kernel_basis();
        if kernel.cols() == x.cols() {
            return Err(Error::NonStrictDescent { level: u });
        }
        let eta_prev = trace.etas.last().expect("η_0 is set");
        trace
            .etas
            .push(eta_prev.mul(quotient.complement()).mul(&psi));
        level.complement = Some(quotient.complement().clone());
        level.psi = Some(psi);
        trace.levels.push(level);

        parent_flags = f
            .iter()
            .map(|e| induced_flag_sub(e, &s_u))
            .collect::<Result<Vec<_>>>()?;
        parent = s_u;
        child = parent.basis().mul(&kernel);
    };

    trace.h = trace.levels.len();
    trace.termination = termination;
    match termination {
        Termination::Injective { .. } => {
            trace.terminal = Matrix::zeros(r, 0);
            trace.terminal_positions = alloc::vec![IndexSet::new(r, Vec::new())?; problem.s()];
        }
        Termination::Rigid { .. } => {
            trace.terminal = trace
                .levels
                .last()
                .expect("rigid level recorded")
                .basis
                .clone();
            trace.terminal_positions = prev_positions;
        }
        Termination::ZeroHom => unreachable!("handled before sampling"),
    }
    trace.correction = rappel_delta(problem.sets(), &trace.terminal_positions)?;
    Ok(trace)
}

/// Samples random flags from `seed` and runs the recursion with the same
/// generator.
pub fn run_filtration_seeded<F: Field>(
    problem: &SchubertProblem,
    seed: u64,
    trials: usize,
) -> Result<FiltrationTrace<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (f, g) = random_flags::<F, _>(problem, &mut rng)?;
    let mut trace = run_filtration(problem, &f, &g, trials, &mut rng)?;
    trace.seed = Some(seed);
    Ok(trace)
}

/// One named check of an audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceAudit {
    pub checks: Vec<CheckVerdict>,
    pub notes: Vec<String>,
}

impl TraceAudit {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckVerdict> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(CheckVerdict {
            name,
            passed,
            detail,
        });
    }
}

pub const CHECK_HOM_DIM: &str = "hom_dim";
pub const CHECK_DESCENT: &str = "strict_descent";
pub const CHECK_POSITIONS: &str = "positions";
pub const CHECK_COMPOSITION: &str = "position_composition";
pub const CHECK_STOP: &str = "stopping_rule";
pub const CHECK_TERMINAL_RIGID: &str = "terminal_dimension";
pub const CHECK_CONTAINMENTS: &str = "eta_containments";
pub const CHECK_RANK_FORMULA: &str = "rank_formula";
pub const CHECK_TANGENT_BOUND: &str = "tangent_bound";
pub const CHECK_FILTRATION_INEQUALITY: &str = "filtration_inequality";

/// Re-derives every claim of a trace from its flags and subspaces.
///
/// Positions, dimensions and the correction term are recomputed rather than
/// read back, so a corrupted trace fails here.
pub fn verify_trace<F: Field>(trace: &FiltrationTrace<F>) -> Result<TraceAudit> {
    let problem = &trace.problem;
    let (n, r, m) = (problem.n(), problem.r(), problem.n() - problem.r());
    let mut audit = TraceAudit {
        checks: Vec::new(),
        notes: Vec::new(),
    };

    let hom = build_system(problem, &trace.f, &trace.g)?;
    audit.push(
        CHECK_HOM_DIM,
        hom.dim() == trace.hom_dim,
        format!(
            "recomputed {} against recorded {}",
            hom.dim(),
            trace.hom_dim
        ),
    );

    let chain = trace.chain();
    let dims: Vec<usize> = chain.iter().map(Matrix::cols).collect();
    let nested = chain
        .windows(2)
        .all(|w| Subspace::span(&w[0]).contains_vectors(&w[1]) && w[1].rank() == w[1].cols());
    let descending = dims.windows(2).all(|w| w[0] > w[1]);
    audit.push(
        CHECK_DESCENT,
        nested && descending && trace.h <= r,
        format!("dimensions {dims:?}"),
    );

    // positions recomputed directly against F and compared with the record
    let positions_of = |basis: &Matrix<F>| -> Result<Vec<IndexSet>> {
        let space = Subspace::from_basis(basis.clone())?;
        trace
            .f
            .iter()
            .map(|e| schubert_position(&space, e))
            .collect()
    };
    let mut positions_ok = true;
    let mut composition_ok = true;
    let mut prev = alloc::vec![IndexSet::full(r); problem.s()];
    for (u, level) in trace.levels.iter().enumerate() {
        let direct = positions_of(&level.basis)?;
        positions_ok &= direct == level.positions;
        let parent = Subspace::from_basis(chain[u].clone())?;
        let coords = parent
            .coordinates(&level.basis)
            .ok_or(Error::NotContained("S^(u) in S^(u-1)"))?;
        let coords = Subspace::from_basis(coords)?;
        for (j, e) in trace.f.iter().enumerate() {
            let induced = induced_flag_sub(e, &parent)?;
            let relative = schubert_position(&coords, &induced)?;
            positions_ok &= relative == level.relative_positions[j];
            composition_ok &= falcon_compose(&prev[j], &relative)? == direct[j];
            positions_ok &=
                falcon_compose(&problem.sets()[j], &direct[j])? == level.ambient_positions[j];
        }
        prev = direct;
    }
    let terminal_positions = positions_of(&trace.terminal)?;
    positions_ok &= terminal_positions == trace.terminal_positions;
    audit.push(
        CHECK_POSITIONS,
        positions_ok,
        format!("{} levels", trace.levels.len()),
    );
    audit.push(
        CHECK_COMPOSITION,
        composition_ok,
        String::from("F(u) = {k_b : b in L(u)} along the chain"),
    );

    let stop_ok = match trace.termination {
        Termination::ZeroHom => trace.hom_dim == 0 && trace.levels.is_empty(),
        Termination::Injective { level } => {
            level == trace.levels.len()
                && trace
                    .levels
                    .iter()
                    .all(|l| l.tangent_dim > 0 && l.psi.is_some())
        }
        Termination::Rigid { level } => {
            level == trace.levels.len()
                && trace
                    .levels
                    .last()
                    .is_some_and(|l| l.tangent_dim == 0 && l.psi.is_none())
                && trace.levels[..level - 1].iter().all(|l| l.tangent_dim > 0)
        }
    };
    audit.push(CHECK_STOP, stop_ok, format!("{:?}", trace.termination));
    if matches!(trace.termination, Termination::Rigid { .. }) {
        audit.notes.push(String::from(
            "stopping rule tested as a zero tangent space; reducedness of the relative intersection is not examined",
        ));
    }

    // terminal subspace is rigid
    let d_t = trace.terminal_dim();
    let terminal_dim_triple = dim_triple_of(r, d_t, &terminal_positions)?;
    audit.push(
        CHECK_TERMINAL_RIGID,
        terminal_dim_triple == 0,
        format!("dim(S^(h), V, F) = {terminal_dim_triple}"),
    );

    // each eta respects the flags and kills the next level
    let mut containments_ok = trace.etas.len() + 1 == chain.len();
    let mut detail = format!("{} maps", trace.etas.len());
    for (u, eta) in trace.etas.iter().enumerate() {
        if !containments_ok {
            break;
        }
        let s_u = Subspace::from_basis(chain[u].clone())?;
        let next_coords = s_u
            .coordinates(&chain[u + 1])
            .ok_or(Error::NotContained("S^(u+1) in S^(u)"))?;
        let rank_ok = eta.rank() == dims[u] - dims[u + 1] && eta.mul(&next_coords).is_zero();
        if !rank_ok {
            containments_ok = false;
            detail = format!("η_{u} is not injective on S^({u})/S^({})", u + 1);
            break;
        }
        for (j, set) in problem.sets().iter().enumerate() {
            for a in 1..=r {
                let t = set.at(a) - a;
                if t >= m {
                    continue;
                }
                let meet = s_u.intersection(&trace.f[j].step(a))?;
                let coords = s_u
                    .coordinates(meet.basis())
                    .ok_or(Error::NotContained("intersection in S^(u)"))?;
                let image = Subspace::span(&eta.mul(&coords));
                if intersect_dim(&image, &trace.g[j].step(t))? != image.dim() {
                    containments_ok = false;
                    detail = format!("η_{u}(S^({u}) ∩ F^{}_{a}) escapes G^{}_{t}", j + 1, j + 1);
                }
            }
        }
    }
    audit.push(CHECK_CONTAINMENTS, containments_ok, detail);

    // rank formula, with the correction recomputed from the direct positions
    let mut correction = -((d_t * m) as i64);
    for (set, k) in problem.sets().iter().zip(&terminal_positions) {
        for &a in k.elements() {
            correction += (n - r + a - set.at(a)) as i64;
        }
    }
    let formula = problem.expected_dim() + correction;
    audit.push(
        CHECK_RANK_FORMULA,
        hom.dim() as i64 == formula && correction == trace.correction,
        format!(
            "{} = {} + {}",
            hom.dim(),
            problem.expected_dim(),
            correction
        ),
    );

    // the level-one inequalities, vacuous without a first kernel level
    if let Some(first) = trace.levels.first() {
        let s = Subspace::from_basis(first.basis.clone())?;
        let d1 = s.dim();
        let s_in_v = dim_triple_of(r, d1, &first.positions)?;
        let coords = s
            .coordinates(&trace.terminal)
            .ok_or(Error::NotContained("terminal subspace in S^(1)"))?;
        let coords = Subspace::from_basis(coords)?;
        let inside_s = trace
            .f
            .iter()
            .map(|e| schubert_position(&coords, &induced_flag_sub(e, &s)?))
            .collect::<Result<Vec<_>>>()?;
        let t_in_s = dim_triple_of(d1, d_t, &inside_s)?;
        let bound = s_in_v + t_in_s - terminal_dim_triple;
        let tangent = first.tangent_dim as i64;
        audit.push(
            CHECK_TANGENT_BOUND,
            tangent <= bound,
            format!("{tangent} <= {s_in_v} + {t_in_s} - {terminal_dim_triple}"),
        );
        if tangent != bound {
            audit.notes.push(format!(
                "level-one tangent bound is strict: {tangent} < {bound}"
            ));
        }
        let lhs = s_in_v + rappel_delta(problem.sets(), &first.positions)?;
        let rhs = terminal_dim_triple - t_in_s + correction;
        audit.push(
            CHECK_FILTRATION_INEQUALITY,
            lhs <= rhs,
            format!("{lhs} <= {rhs}"),
        );
        audit.notes.push(String::from(
            "filtration inequality evaluated with d = d_1, the dimension of S^(1)",
        ));
    }
    Ok(audit)
}

/// The two questions about a Schubert problem at generic flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenericAnswer {
    pub generically_nonempty: bool,
    pub generic_intersection_dim: usize,
    pub expected_dim: i64,
}

/// Nonempty at generic flags iff generic `dim Hom` equals the expected
/// dimension; the generic `dim Hom` is reported either way.
pub fn answer_q1_q2<F: Field, R: RngCore + ?Sized>(
    problem: &SchubertProblem,
    trials: usize,
    rng: &mut R,
) -> Result<GenericAnswer> {
    let estimate = generic_hom_dim::<F, R>(problem, trials, rng)?;
    Ok(GenericAnswer {
        generically_nonempty: estimate.dim as i64 == problem.expected_dim(),
        generic_intersection_dim: estimate.dim,
        expected_dim: problem.expected_dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp31;
    use alloc::vec;

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.to_vec()).unwrap()
    }

    fn problem(n: usize, sets: &[&[usize]]) -> SchubertProblem {
        SchubertProblem::from_sets(sets.iter().map(|e| set(n, e)).collect()).unwrap()
    }

    #[test]
    fn worked_instance() {
        let p = problem(4, &[&[1, 4], &[2, 3]]);
        let trace = run_filtration_seeded::<Fp31>(&p, 11, 3).unwrap();
        assert_eq!(trace.hom_dim, 1);
        assert_eq!(trace.h, 1);
        assert_eq!(trace.termination, Termination::Rigid { level: 1 });
        let level = &trace.levels[0];
        assert_eq!(level.dim, 1);
        assert_eq!(level.positions, vec![set(2, &[1]), set(2, &[2])]);
        assert_eq!(level.ambient_positions, vec![set(4, &[1]), set(4, &[3])]);
        assert_eq!(level.tangent_dim, 0);
        // S^(1) = F^1_1
        let s = Subspace::from_basis(level.basis.clone()).unwrap();
        assert!(trace.f[0].step(1).contains(&s));
        assert_eq!(trace.correction, 1);
        let audit = verify_trace(&trace).unwrap();
        assert!(audit.passed(), "{audit:?}");
        assert_eq!(audit.check(CHECK_RANK_FORMULA).unwrap().detail, "1 = 0 + 1");
    }

    #[test]
    fn open_cell_ends_injective() {
        let p = problem(4, &[&[3, 4]]);
        let trace = run_filtration_seeded::<Fp31>(&p, 1, 3).unwrap();
        assert_eq!(trace.termination, Termination::Injective { level: 0 });
        assert_eq!(trace.h, 0);
        assert_eq!(trace.correction, 0);
        assert!(verify_trace(&trace).unwrap().passed());
    }

    #[test]
    fn corank_one_open_cell_runs_a_level() {
        // φ: F^2 → F^1 has a line kernel; the line is free in V, so ψ is injective
        let p = problem(3, &[&[2, 3]]);
        let trace = run_filtration_seeded::<Fp31>(&p, 2, 3).unwrap();
        assert_eq!(trace.termination, Termination::Injective { level: 1 });
        assert_eq!(trace.h, 1);
        assert_eq!(trace.etas.len(), 2);
        assert!(verify_trace(&trace).unwrap().passed());
    }

    #[test]
    fn transverse_problem_has_zero_hom() {
        let p = problem(4, &[&[2usize, 4][..]; 4]);
        let trace = run_filtration_seeded::<Fp31>(&p, 5, 3).unwrap();
        assert_eq!(trace.termination, Termination::ZeroHom);
        assert_eq!(trace.correction, 0);
        let audit = verify_trace(&trace).unwrap();
        assert!(audit.passed());
        assert_eq!(audit.check(CHECK_RANK_FORMULA).unwrap().detail, "0 = 0 + 0");
    }

    #[test]
    fn negative_expected_dimension_balances() {
        let p = problem(4, &[&[1usize, 4][..]; 3]);
        let trace = run_filtration_seeded::<Fp31>(&p, 8, 3).unwrap();
        assert_eq!(p.expected_dim(), -2);
        assert_eq!(trace.hom_dim, 0);
        assert_eq!(trace.correction, 2);
        assert!(verify_trace(&trace).unwrap().passed());
    }

    #[test]
    fn corrupted_trace_fails() {
        let p = problem(4, &[&[1, 4], &[2, 3]]);
        let mut trace = run_filtration_seeded::<Fp31>(&p, 11, 3).unwrap();
        trace.levels[0].positions[1] = set(2, &[1]);
        let audit = verify_trace(&trace).unwrap();
        assert!(!audit.check(CHECK_POSITIONS).unwrap().passed);
        let mut trace = run_filtration_seeded::<Fp31>(&p, 11, 3).unwrap();
        trace.hom_dim = 2;
        assert!(!verify_trace(&trace).unwrap().passed());
    }

    #[test]
    fn generic_answers() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let four = problem(4, &[&[2usize, 4][..]; 4]);
        let a = answer_q1_q2::<Fp31, _>(&four, 3, &mut rng).unwrap();
        assert!(a.generically_nonempty);
        assert_eq!(a.generic_intersection_dim, 0);
        let mixed = problem(4, &[&[1, 4], &[2, 3]]);
        let a = answer_q1_q2::<Fp31, _>(&mixed, 3, &mut rng).unwrap();
        assert!(!a.generically_nonempty);
        assert_eq!(a.generic_intersection_dim, 1);
        let open = problem(5, &[&[3, 4, 5]]);
        let a = answer_q1_q2::<Fp31, _>(&open, 3, &mut rng).unwrap();
        assert!(a.generically_nonempty);
        assert_eq!(a.generic_intersection_dim, 6);
    }
}
