use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::{PointSet, ZariskiError};
use crate::algebras::{direct_product, FinitePolyring};
use crate::terms::Term;

/// Largest `m` accepted by [`verify_cantor_example`].
pub const CANTOR_LIMIT: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylinderCheck {
    pub coordinate: u32,
    pub value: u8,
    pub term: String,
    pub algebraic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CantorReport {
    pub m: u32,
    pub carrier: usize,
    /// `S(ax + a) = K \ S(ax)` for every `a`
    pub complement_identity_all: bool,
    /// the `a` for which it fails
    pub complement_failures: Vec<u32>,
    /// it holds for every `a` with a single nonzero coordinate
    pub complement_for_unit_vectors: bool,
    /// `S(ax)` and `S(ax + a)` are disjoint for every `a != 0`
    pub disjoint_for_nonzero: bool,
    pub cylinders: Vec<CylinderCheck>,
    pub cylinders_algebraic: bool,
    /// distinct root sets of one-variable term functions `ax + b`
    pub root_sets: usize,
    pub singletons_algebraic: bool,
    /// number of algebraic subsets of `K`, known once every singleton is one
    #[serde(serialize_with = "decimal")]
    pub algebraic_sets: Option<BigUint>,
}

fn decimal<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// The ring `F_2^m` as the product of `m` copies of `Z_2`; bit `i` of an
/// element is its `i`-th coordinate.
pub fn boolean_power(m: u32) -> Result<FinitePolyring, ZariskiError> {
    if m == 0 || m > CANTOR_LIMIT {
        return Err(ZariskiError::Invalid(format!("m must lie in 1..={CANTOR_LIMIT}")));
    }
    let f2 = FinitePolyring::cyclic_ring(2);
    Ok(direct_product(&vec![f2; m as usize])?)
}

fn root_set(r: &FinitePolyring, term: &Term) -> Result<PointSet, ZariskiError> {
    let code = r.compile(term)?;
    let mut stack = Vec::new();
    Ok(PointSet::from_indices(
        r.size(),
        (0..r.size() as u32).filter(|&x| code.eval(r, &[x], &mut stack) == 0).map(|x| x as usize),
    ))
}

fn ax(a: u32) -> Term {
    Term::app("m", vec![Term::elem(a), Term::var(1)])
}

/// Checks the complement identity and the algebraicity of the subbasic
/// cylinders in `F_2^m`, and counts root sets and algebraic sets.
pub fn verify_cantor_example(m: u32) -> Result<CantorReport, ZariskiError> {
    let r = boolean_power(m)?;
    let size = r.size();

    let mut complement_failures = Vec::new();
    let mut disjoint_for_nonzero = true;
    for a in 0..size as u32 {
        let s = root_set(&r, &ax(a))?;
        let t = root_set(&r, &Term::sum(ax(a), Term::elem(a)))?;
        if t != s.complement() {
            complement_failures.push(a);
        }
        if a != 0 && !s.is_disjoint(&t) {
            disjoint_for_nonzero = false;
        }
    }

    let mut cylinders = Vec::new();
    for i in 0..m {
        let e = 1u32 << i;
        for value in [0u8, 1] {
            let term = if value == 0 {
                ax(e)
            } else {
                Term::sum(ax(e), Term::elem(e))
            };
            let want = PointSet::from_indices(size, (0..size).filter(|b| (b >> i & 1) as u8 == value));
            cylinders.push(CylinderCheck {
                coordinate: i,
                value,
                term: term.to_string(),
                algebraic: root_set(&r, &term)? == want,
            });
        }
    }

    // Every one-variable term function is x -> ax + b since x*x = x, and its
    // root set is the preimage of b (= -b) under x -> ax.
    let mul = &r.op("m").expect("product ring has m").table;
    let mut seen: HashSet<PointSet> = HashSet::new();
    for a in 0..size {
        let mut fibres = vec![PointSet::empty(size); size];
        for x in 0..size {
            fibres[mul[a * size + x] as usize].insert(x);
        }
        seen.extend(fibres);
    }
    let singletons_algebraic = (0..size).all(|x| seen.contains(&PointSet::singleton(size, x)));
    let algebraic_sets = singletons_algebraic.then(|| BigUint::from(1u8) << size);

    Ok(CantorReport {
        m,
        carrier: size,
        complement_identity_all: complement_failures.is_empty(),
        complement_for_unit_vectors: complement_failures.iter().all(|a| a.count_ones() != 1),
        complement_failures,
        disjoint_for_nonzero,
        cylinders_algebraic: cylinders.iter().all(|c| c.algebraic),
        cylinders,
        root_sets: seen.len(),
        singletons_algebraic,
        algebraic_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zariski::{closed_base, term_clone};

    #[test]
    fn small_cases() {
        let r1 = verify_cantor_example(1).unwrap();
        assert!(r1.cylinders_algebraic && r1.complement_for_unit_vectors);
        // for a = 0 both root sets are all of K
        assert_eq!(r1.complement_failures, vec![0]);
        assert_eq!(r1.algebraic_sets, Some(BigUint::from(4u8)));
        let r3 = verify_cantor_example(3).unwrap();
        assert!(r3.complement_for_unit_vectors && r3.disjoint_for_nonzero);
        // with two or more ones in a, S(ax) and S(ax + a) no longer cover K
        let expect: Vec<u32> = (0..8).filter(|a: &u32| a.count_ones() != 1).collect();
        assert_eq!(r3.complement_failures, expect);
        assert_eq!(r3.cylinders.len(), 6);
        assert_eq!(r3.root_sets, 28);
        assert!(verify_cantor_example(0).is_err());
        assert!(verify_cantor_example(CANTOR_LIMIT + 1).is_err());
    }

    #[test]
    fn root_set_count_matches_full_clone() {
        for m in 1..=3 {
            let r = boolean_power(m).unwrap();
            let c = term_clone(&r, 1, 100_000).unwrap();
            assert!(c.complete);
            assert_eq!(c.len(), 1 << (2 * m));
            let space = closed_base(&c, None);
            let report = verify_cantor_example(m).unwrap();
            assert_eq!(space.subbase().len(), report.root_sets);
            assert_eq!(report.root_sets, 3usize.pow(m) + 1);
            let base = space.materialize(1 << 20);
            // the even-weight points need one subcube each
            assert_eq!(base.saturated_at, Some(1 << (m - 1)));
            assert_eq!(BigUint::from(base.sets.len()), report.algebraic_sets.unwrap());
        }
    }
}
