//! Generalized Kneser graphs `K(n,k,t)`, Johnson graphs `J(n,k)` and their
//! complements, together with the machinery needed to compute and certify
//! their treewidth at desk scale:
//!
//! - canonical k-subset handling in colexicographic order, shadows and the
//!   family restriction operators ([`subsets`]),
//! - explicit graph construction with subset-labelled vertices ([`graphs`]),
//! - tree decompositions, a validator for the two defining conditions, and
//!   constructive width certificates ([`td`]),
//! - an exact treewidth solver over vertex subsets plus cheap lower/upper
//!   bounds ([`exact`]),
//! - balanced `p`-separators with exact rational comparisons ([`separators`]),
//! - the closed-form treewidth formulas, their applicability thresholds, and
//!   the supporting counting inequalities in exact big-integer arithmetic
//!   ([`theorems`]),
//! - PACE-style `.gr`/`.td` file emit/parse ([`pace`]) and the verification
//!   report harness ([`verify`]).
//!
//! Vertex ids are 0-based everywhere in the API; all text surfaces (PACE
//! files, violation reports, CLI output) are 1-based.

pub mod bits;
pub mod exact;
pub mod graphs;
pub mod pace;
pub mod separators;
pub mod subsets;
pub mod td;
pub mod theorems;
pub mod verify;

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on the inputs does not hold.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A configured size/time cap would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// A `.gr`/`.td` file does not follow the expected format.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
