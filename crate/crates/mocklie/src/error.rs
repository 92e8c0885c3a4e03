//! Crate-wide error type.
//!
//! Structural problems (shapes, arities, singular matrices) and failed
//! admissibility preconditions are errors; failed *checks* are not — they
//! come back as reports with witnesses.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular matrix: rank {rank} < {dim}")]
    Singular { rank: usize, dim: usize },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("structure constants do not define a mock-Lie algebra (commutative: {commutative}, jacobi: {jacobi})")]
    NotMockLie { commutative: bool, jacobi: bool },

    #[error("product is not anti-associative; first failing basis triple ({0}, {1}, {2})", .triple[0], .triple[1], .triple[2])]
    NotAntiAssociative { triple: [usize; 3] },

    #[error("structure constants do not define a mock-pre-Lie algebra; first failing basis triple ({0}, {1}, {2})", .triple[0], .triple[1], .triple[2])]
    NotPreLie { triple: [usize; 3] },

    #[error("matrices do not define a representation; first failing basis pair ({0}, {1})", .pair[0], .pair[1])]
    NotRepresentation { pair: [usize; 2] },

    #[error("map is not an O-operator; first failing module basis pair ({0}, {1})", .pair[0], .pair[1])]
    NotOOperator { pair: [usize; 2] },

    #[error("bilinear form is not admissible (symmetric: {symmetric}, invariant: {invariant}, nondegenerate: {nondegenerate})")]
    FormNotAdmissible {
        symmetric: bool,
        invariant: bool,
        nondegenerate: bool,
    },

    #[error("bilinear form is not symplectic (skew: {skew}, nondegenerate: {nondegenerate}, cyclic: {cyclic})")]
    NotSymplectic {
        skew: bool,
        nondegenerate: bool,
        cyclic: bool,
    },

    #[error("data is not a matched pair of mock-Lie algebras")]
    NotMatchedPair,

    #[error("cobracket is not a mock-Lie bialgebra (symmetric: {symmetric}, dual_jacobi: {dual_jacobi}, compatible: {compatible})")]
    NotBialgebra {
        symmetric: bool,
        dual_jacobi: bool,
        compatible: bool,
    },

    #[error("tensor is not skew-symmetric")]
    NotSkew,

    #[error("objects belong to different algebras")]
    AlgebraMismatch,

    #[error("parse error: {0}")]
    Parse(String),
}
