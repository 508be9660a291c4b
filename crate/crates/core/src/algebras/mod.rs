//! Concrete polyrings: finite table instances, exact integer models over
//! `Z^d`, and finite groupoids.

mod enumerate;
mod finite;
mod groupoid;
mod symbolic;

use thiserror::Error;

use crate::terms::{Constant, Term};

pub use enumerate::{enumerate_distributive_ops, is_multi_additive, EnumMode, EnumeratedOps};
pub use finite::{
    direct_product, groupoid_ring, AxiomFailure, AxiomReport, CompiledTerm, FinitePolyring,
    InstanceFile, OpTable, OpTableFile,
};
pub use groupoid::{FiniteGroupoid, GroupoidFile};
pub use symbolic::{int_to_json, json_to_int, SymbolicFile, SymbolicOp, SymbolicOpKind, SymbolicPolyring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("carrier of size {size} exceeds the limit {limit}")]
    SizeOverflow { size: u128, limit: u128 },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(u32, u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unresolved constant `{0}`")]
    UnresolvedConstant(String),
    #[error("point has dimension {got} but the term uses x{needed}")]
    Dimension { needed: u32, got: usize },
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
    #[error("operation `{op}` takes {expected} argument(s), got {got}")]
    Arity {
        op: String,
        expected: usize,
        got: usize,
    },
}

/// An abelian group with extra multi-additive operations, as an evaluator.
pub trait Algebra {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn apply(&self, op: &str, args: &[Self::Elem]) -> Result<Self::Elem, EvalError>;
    fn constant(&self, c: &Constant) -> Result<Self::Elem, EvalError>;
}

/// Recursive evaluation of `term` at `point` (`x_i` is `point[i - 1]`).
pub fn evaluate<A: Algebra>(alg: &A, term: &Term, point: &[A::Elem]) -> Result<A::Elem, EvalError> {
    match term {
        Term::Var(i) => point
            .get((*i as usize).wrapping_sub(1))
            .cloned()
            .ok_or(EvalError::Dimension {
                needed: *i,
                got: point.len(),
            }),
        Term::Const(c) => alg.constant(c),
        Term::Zero => Ok(alg.zero()),
        Term::Sum(a, b) => Ok(alg.add(&evaluate(alg, a, point)?, &evaluate(alg, b, point)?)),
        Term::Neg(a) => Ok(alg.neg(&evaluate(alg, a, point)?)),
        Term::App(op, args) => {
            let vals = args
                .iter()
                .map(|t| evaluate(alg, t, point))
                .collect::<Result<Vec<_>, _>>()?;
            alg.apply(op, &vals)
        }
    }
}
