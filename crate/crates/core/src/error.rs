use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must live in the same space do not.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// A matrix meant to be a basis has dependent columns.
    DependentColumns,
    /// No invertible flag was drawn within the attempt cap.
    SamplingFailed {
        attempts: usize,
    },
    InvalidPartition(String),
    InvalidIndexSet(String),
    InvalidProblem(String),
    InvalidWeights(String),
    /// A partition does not fit in the `rows x cols` rectangle.
    OutsideRectangle {
        rows: usize,
        cols: usize,
    },
    /// Cohomology classes on different Grassmannians were combined.
    GrassmannianMismatch,
    /// Total codimension differs from the Grassmannian dimension.
    DimensionCondition {
        dimension: usize,
        codimension: usize,
    },
    /// A subspace is not contained where it has to be.
    NotContained(&'static str),
    /// A sample was requested from the zero space.
    ZeroHom,
    /// An operation needs a nonzero subspace.
    ZeroSubspace,
    /// Independent genericity trials disagreed after every retry.
    TrialInstability {
        context: String,
        observed: Vec<usize>,
    },
    /// The kernel of a tangent element was the whole level.
    NonStrictDescent {
        level: usize,
    },
    /// The filtration exceeded its length cap.
    FiltrationTooDeep {
        cap: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(f, "{context}: expected dimension {expected}, found {found}"),
            Error::DependentColumns => f.write_str("basis columns are linearly dependent"),
            Error::SamplingFailed { attempts } => {
                write!(f, "no invertible flag after {attempts} attempts")
            }
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::InvalidIndexSet(msg) => write!(f, "invalid index set: {msg}"),
            Error::InvalidProblem(msg) => write!(f, "invalid Schubert problem: {msg}"),
            Error::InvalidWeights(msg) => write!(f, "invalid parabolic weights: {msg}"),
            Error::OutsideRectangle { rows, cols } => {
                write!(f, "partition does not fit the {rows}x{cols} rectangle")
            }
            Error::GrassmannianMismatch => f.write_str("classes live on different Grassmannians"),
            Error::DimensionCondition {
                dimension,
                codimension,
            } => write!(
                f,
                "total codimension {codimension} differs from the Grassmannian dimension {dimension}"
            ),
            Error::NotContained(what) => write!(f, "subspace not contained: {what}"),
            Error::ZeroHom => f.write_str("the Hom space is zero"),
            Error::ZeroSubspace => f.write_str("operation needs a nonzero subspace"),
            Error::TrialInstability { context, observed } => {
                write!(f, "genericity trials disagree for {context}: observed {observed:?}")
            }
            Error::NonStrictDescent { level } => {
                write!(f, "tangent element at level {level} vanishes on the whole level")
            }
            Error::FiltrationTooDeep { cap } => write!(f, "filtration longer than the cap {cap}"),
        }
    }
}

#[cfg(feature = "std")]
extern crate std;

#[cfg(feature = "std")]
impl std::error::Error for Error {}
