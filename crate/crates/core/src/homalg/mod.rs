//! Exact linear and homological algebra over a [`Scalar`](crate::Scalar) field.

mod complex;
mod echelon;
mod hom;
mod matrix;
mod projector;

pub use complex::{
    cycles_and_boundaries, quotient_complex, restrict_complex, restrict_map, ChainComplex, GradedDims, Quotient, QuotientPresentation,
    QuotientSpace, Supercomplex,
};
pub use echelon::{dense_rank, image, image_basis, kernel, kernel_basis, rank, Echelon, Subspace, DENSE_THRESHOLD};
pub use hom::{
    conj_op, hom_chain_complex, hom_supercomplex, hom_supercomplex_of_chains, left_mul_op, right_mul_op, HomChainComplex, HomLayout,
    RawHom, DEFAULT_HOM_BUDGET,
};
pub use matrix::{axpy, collect_sparse, dense_to_sparse, scale_vec, sparse_to_dense, Matrix, SparseVec};
pub use projector::{average_projector, invariant_subspace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomalgError {
    #[error("homalg: shape mismatch: {0}")]
    Shape(String),
    #[error("homalg: not a complex: {0}")]
    NotAComplex(String),
    #[error("homalg: relations in degree {0} are not preserved by the boundary")]
    UnstableRelations(i64),
    #[error("homalg: map does not preserve the given subspaces")]
    NotInvariant,
    #[error("homalg: action is not multiplicative at ({0}, {1})")]
    NotARepresentation(usize, usize),
    #[error("homalg: dimension {needed} exceeds budget {budget}")]
    Budget { needed: usize, budget: usize },
}
