//! Finite-sums combinatorics: FS and FP sets, witness searches for the
//! partition theorems of Schur, Folkman, Hilbert and their product forms,
//! exact Schur numbers, and an exhaustive checker for the Key Lemma.

mod coloring;
mod keylemma;
mod schur;
mod search;
mod sets;

use thiserror::Error;

use crate::algebras::{AlgebraError, EvalError};
use crate::terms::TermError;

pub use coloring::{Coloring, Domain};
pub use keylemma::{
    campaign_groups, key_lemma_campaign, verify_key_lemma, CampaignReport, KeyLemmaMode, KeyLemmaReport, EXHAUSTIVE_LIMIT,
};
pub use schur::{schur_number, SchurNumber};
pub use search::{
    folkman_search, hilbert_cube_search, product_fs_search, schur_search, simultaneous_fs_fp_search,
    FolkmanWitness, HilbertWitness, ProductWitness, SchurWitness, SimultaneousWitness,
};
pub use sets::{fp_set, fs_set, FreeMonoid, Magma, NaturalsMul};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyError {
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("result too large: {0}")]
    TooLarge(String),
    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),
    #[error("Key Lemma counterexample at {tuple:?}: F vanishes on the finite sums but F(0) = {value}")]
    Counterexample { tuple: Vec<Vec<u32>>, value: u32 },
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
