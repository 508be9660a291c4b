//! Computational toolkit for polyrings: term normalization and degree
//! calculus, finite and exact-integer polyring instances, Zariski spaces of
//! finite instances, finite-sums Ramsey searches and finite semigroup
//! structure.

pub mod algebras;
pub mod ramsey;
pub mod semigroups;
pub mod terms;
pub mod zariski;
