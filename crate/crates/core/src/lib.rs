//! Exact Schubert calculus and the linear algebra of Schubert intersections.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs and, where randomness is involved, of an explicit
//! seed; IO, reports and the command-line driver live in the companion
//! `fulton` crate.
//!
//! Layers, bottom up:
//! - [`field`], [`matrix`], [`subspace`], [`flag`]: exact linear algebra over
//!   `F_p` or `Q`.
//! - [`partition`], [`schubert`], [`lr`], [`pieri`], [`cohomology`]: the
//!   partition/index-set dictionary and Littlewood-Richardson arithmetic.
//! - [`geometry`]: Schubert positions and induced flags.
//! - [`hom`]: the linear systems `Hom_I(V, Q, F, G)`.
//! - [`filtration`]: the tangent space method and its audit.
//! - [`parabolic`]: parabolic slopes and semistability.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cohomology;
pub mod error;
pub mod field;
pub mod filtration;
pub mod flag;
pub mod geometry;
pub mod hom;
pub mod lr;
pub mod matrix;
pub mod parabolic;
pub mod partition;
pub mod pieri;
pub mod schubert;
pub mod subspace;

pub use cohomology::{CohomologyClass, SchubertCalculus};
pub use error::{Error, Result};
pub use field::{Field, FieldKind, Fp, Fp31, Rational};
pub use flag::{random_flag, Flag};
pub use matrix::Matrix;
pub use partition::Partition;
pub use schubert::{IndexSet, SchubertProblem};
pub use subspace::{intersect_dim, Subspace};
