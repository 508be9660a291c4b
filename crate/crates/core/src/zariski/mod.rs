//! Zariski topologies of finite powers `K^n`, computed from the clone of
//! term functions, together with finite-space analysis and nowhere-density
//! certificates over the exact integer models.

mod cantor;
mod certificate;
mod clone;
mod linear;
mod pointset;
mod space;

use thiserror::Error;

use crate::algebras::{AlgebraError, EvalError};
use crate::terms::TermError;

pub use cantor::{boolean_power, verify_cantor_example, CantorReport, CylinderCheck, CANTOR_LIMIT};
pub use certificate::{
    nowhere_dense_certificate, verify_certificate, Certificate, CertificateCheck, CertificateOutcome, CertificateSearch,
    FiniteValued, SearchBudget, SearchStats,
};
pub use clone::{term_clone, TermClone, TermFunction};
pub use linear::{affine_closure_in_window, vanishing_affine_terms, AffineClosure};
pub use pointset::PointSet;
pub use space::{
    analyze, closed_base, ind_dimension, zariski_closure, AnalysisReport, BaseMaterialization,
    FiniteSpace, Pseudocharacter, SubsetReport,
};

/// Largest number of points of `K^n` handled by the finite machinery.
pub const MAX_POINTS: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZariskiError {
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("space has {0} points, more than the supported {MAX_POINTS}")]
    TooLarge(u128),
    #[error("term has degree {degree}, above m = {m}")]
    DegreeTooHigh { degree: usize, m: usize },
    #[error("point {0:?} lies in neither A nor any root set")]
    CoverViolation(Vec<Vec<i64>>),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Number of points of `K^n`, checked against [`MAX_POINTS`].
pub(crate) fn point_count(size: usize, n: u32) -> Result<usize, ZariskiError> {
    let total = (size as u128).checked_pow(n).unwrap_or(u128::MAX);
    if total > MAX_POINTS as u128 {
        return Err(ZariskiError::TooLarge(total));
    }
    Ok(total as usize)
}

/// Coordinates of point `index` of `K^n`, `x1` most significant.
pub fn point_coords(size: usize, n: u32, index: usize) -> Vec<u32> {
    let mut out = vec![0; n as usize];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = (rest % size) as u32;
        rest /= size;
    }
    out
}
