//! Exact computation of equivariant homology theories for finite group
//! actions on finite simplicial complexes.

pub mod bredon;
pub mod corpus;
pub mod cosheaf;
pub mod cyclic;
pub mod delocalized;
pub mod fingroup;
pub mod gcomplex;
pub mod homalg;
pub mod scalar;

use thiserror::Error;

pub use scalar::Scalar;

/// Exact rationals, the default scalar field.
pub type Q = num_rational::BigRational;
pub type QMatrix = homalg::Matrix<Q>;
pub type F64Matrix = homalg::Matrix<f64>;

/// Any error raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] fingroup::GroupError),
    #[error(transparent)]
    Complex(#[from] gcomplex::GComplexError),
    #[error(transparent)]
    Homalg(#[from] homalg::HomalgError),
    #[error(transparent)]
    Bredon(#[from] bredon::BredonError),
    #[error(transparent)]
    Cosheaf(#[from] cosheaf::CosheafError),
    #[error(transparent)]
    Deloc(#[from] delocalized::DelocError),
    #[error(transparent)]
    Cyclic(#[from] cyclic::CyclicError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input violates a precondition.
    Input,
    /// A dimension budget was exceeded.
    Budget,
    /// An identity that must hold did not; this is a bug.
    Verification,
}

fn homalg_kind(e: &homalg::HomalgError) -> ErrorKind {
    match e {
        homalg::HomalgError::Budget { .. } => ErrorKind::Budget,
        _ => ErrorKind::Verification,
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use bredon::BredonError as B;
        use cosheaf::CosheafError as C;
        use cyclic::CyclicError as Y;
        use delocalized::DelocError as D;
        match self {
            Error::Group(_) | Error::Complex(_) => ErrorKind::Input,
            Error::Homalg(e) => homalg_kind(e),
            Error::Bredon(e) | Error::Cosheaf(C::Bredon(e)) => match e {
                B::Group(_) | B::Complex(_) => ErrorKind::Input,
                B::Homalg(h) => homalg_kind(h),
                B::InvalidMorphism(_) => ErrorKind::Verification,
            },
            Error::Cosheaf(e) => match e {
                C::Complex(_) => ErrorKind::Input,
                C::Homalg(h) => homalg_kind(h),
                _ => ErrorKind::Verification,
            },
            Error::Deloc(e) => match e {
                D::GroupMismatch | D::DegreeMismatch(..) | D::NotSubcomplex(_) | D::Complex(_) => ErrorKind::Input,
                D::Homalg(h) => homalg_kind(h),
                _ => ErrorKind::Verification,
            },
            Error::Cyclic(e) => match e {
                Y::Budget { .. } => ErrorKind::Budget,
                Y::Homalg(h) => homalg_kind(h),
                Y::Verification(_) => ErrorKind::Verification,
                _ => ErrorKind::Input,
            },
        }
    }
}
