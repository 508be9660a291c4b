//! Finite semigroups: idempotents, minimal left ideals, the smallest ideal,
//! and solution counts of `a·x = b`.

mod corpus;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebras::{AlgebraError, FiniteGroupoid};

pub use corpus::{associative_tables, named_families, Corpus};

/// The idempotent among the powers `x, x², x³, ..`.
pub fn idempotent_power(g: &FiniteGroupoid, x: u32) -> Result<u32, AlgebraError> {
    g.require_associative()?;
    if x as usize >= g.size() {
        return Err(AlgebraError::Invalid(format!("{x} outside the carrier")));
    }
    let mut p = x;
    // x^k is idempotent for some k <= |S|
    for _ in 0..g.size() {
        if g.mul(p, p) == p {
            return Ok(p);
        }
        p = g.mul(p, x);
    }
    unreachable!("a finite semigroup has an idempotent power of every element")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentReport {
    pub idempotents: Vec<u32>,
    pub is_associative: bool,
    pub warning: Option<String>,
}

pub fn find_idempotents(g: &FiniteGroupoid) -> IdempotentReport {
    let idempotents: Vec<u32> = (0..g.size() as u32).filter(|&e| g.mul(e, e) == e).collect();
    let is_associative = g.is_associative();
    let warning = idempotents
        .is_empty()
        .then(|| "no idempotent: the operation cannot be associative".to_string());
    IdempotentReport {
        idempotents,
        is_associative,
        warning,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CancellativityReport {
    /// largest `|{x : a·x = b}|` over all `a`, `b`
    pub max_solutions: usize,
    pub argmax: (u32, u32),
    /// every `a·x = b` has at most one solution
    pub left_cancellative: bool,
    /// finitely many solutions, automatic on a finite carrier
    pub weakly_left_cancellative: bool,
}

pub fn weak_left_cancellativity(g: &FiniteGroupoid) -> CancellativityReport {
    let n = g.size();
    let mut best = (0, (0, 0));
    for a in 0..n as u32 {
        let mut counts = vec![0usize; n];
        for x in 0..n as u32 {
            counts[g.mul(a, x) as usize] += 1;
        }
        for (b, &c) in counts.iter().enumerate() {
            if c > best.0 {
                best = (c, (a, b as u32));
            }
        }
    }
    CancellativityReport {
        max_solutions: best.0,
        argmax: best.1,
        left_cancellative: best.0 <= 1,
        weakly_left_cancellative: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupReport {
    pub size: usize,
    pub idempotents: Vec<u32>,
    pub is_associative: bool,
    pub minimal_left_ideals: Vec<Vec<u32>>,
    pub smallest_ideal: Vec<u32>,
    pub max_left_solutions: usize,
    pub left_cancellative: bool,
}

/// `S·x ∪ {x}`.
fn principal_left_ideal(g: &FiniteGroupoid, x: u32) -> BTreeSet<u32> {
    let mut out: BTreeSet<u32> = (0..g.size() as u32).map(|s| g.mul(s, x)).collect();
    out.insert(x);
    out
}

/// `S¹ x S¹`.
fn principal_ideal(g: &FiniteGroupoid, x: u32) -> BTreeSet<u32> {
    let left = principal_left_ideal(g, x);
    let mut out = left.clone();
    for &l in &left {
        for t in 0..g.size() as u32 {
            out.insert(g.mul(l, t));
        }
    }
    out
}

/// Minimal left ideals (the minimal principal ones) and the smallest
/// two-sided ideal, their union.
pub fn ideal_structure(g: &FiniteGroupoid) -> Result<SemigroupReport, AlgebraError> {
    g.require_associative()?;
    let n = g.size() as u32;
    let principal: BTreeSet<BTreeSet<u32>> = (0..n).map(|x| principal_left_ideal(g, x)).collect();
    let minimal: Vec<Vec<u32>> = principal
        .iter()
        .filter(|l| !principal.iter().any(|m| m != *l && m.is_subset(l)))
        .map(|l| l.iter().copied().collect())
        .collect();
    let smallest: BTreeSet<u32> = minimal.iter().flatten().copied().collect();
    let cancel = weak_left_cancellativity(g);
    Ok(SemigroupReport {
        size: g.size(),
        idempotents: find_idempotents(g).idempotents,
        is_associative: true,
        minimal_left_ideals: minimal,
        smallest_ideal: smallest.into_iter().collect(),
        max_left_solutions: cancel.max_solutions,
        left_cancellative: cancel.left_cancellative,
    })
}

/// Intersection of all principal two-sided ideals, computed without
/// reference to left ideals.
pub fn smallest_ideal_by_intersection(g: &FiniteGroupoid) -> Vec<u32> {
    (0..g.size() as u32)
        .map(|x| principal_ideal(g, x))
        .reduce(|a, b| a.intersection(&b).copied().collect())
        .unwrap_or_default()
        .into_iter()
        .collect()
}
