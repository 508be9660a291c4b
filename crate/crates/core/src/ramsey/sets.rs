use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::RamseyError;
use crate::algebras::FiniteGroupoid;

const MAX_SET: usize = 1 << 24;

/// All sums over non-empty sets of indices. Sums above `bound` are dropped.
pub fn fs_set(seq: &[u64], bound: Option<u128>) -> Result<BTreeSet<u128>, RamseyError> {
    if seq.is_empty() {
        return Err(RamseyError::Invalid("sequence must be non-empty".into()));
    }
    let mut out: BTreeSet<u128> = BTreeSet::new();
    for &x in seq {
        let x = x as u128;
        let shifted: Vec<u128> = out.iter().map(|s| s + x).collect();
        out.insert(x);
        out.extend(shifted);
        if let Some(b) = bound {
            out.retain(|&s| s <= b);
        }
        if out.len() > MAX_SET {
            return Err(RamseyError::TooLarge(format!("more than {MAX_SET} finite sums")));
        }
    }
    Ok(out)
}

/// A set with a binary operation, used for finite products.
pub trait Magma {
    type Elem: Clone + Ord;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// `(N, ·)` with exact integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalsMul;

impl Magma for NaturalsMul {
    type Elem = BigUint;
    fn op(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
}

/// Words under concatenation.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeMonoid;

impl Magma for FreeMonoid {
    type Elem = String;
    fn op(&self, a: &String, b: &String) -> String {
        format!("{a}{b}")
    }
}

impl Magma for FiniteGroupoid {
    type Elem = u32;
    fn op(&self, a: &u32, b: &u32) -> u32 {
        self.mul(*a, *b)
    }
}

/// All products `x_{i_0} x_{i_1} .. x_{i_k}` with `i_0 < i_1 < .. < i_k`,
/// bracketed to the left.
pub fn fp_set<M: Magma>(magma: &M, seq: &[M::Elem]) -> Result<BTreeSet<M::Elem>, RamseyError> {
    if seq.is_empty() {
        return Err(RamseyError::Invalid("sequence must be non-empty".into()));
    }
    let mut out: BTreeSet<M::Elem> = BTreeSet::new();
    for x in seq {
        let extended: Vec<M::Elem> = out.iter().map(|p| magma.op(p, x)).collect();
        out.insert(x.clone());
        out.extend(extended);
        if out.len() > MAX_SET {
            return Err(RamseyError::TooLarge(format!("more than {MAX_SET} finite products")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[u128]) -> BTreeSet<u128> {
        v.iter().copied().collect()
    }

    #[test]
    fn finite_sums() {
        assert_eq!(fs_set(&[1, 3, 5], None).unwrap(), set(&[1, 3, 4, 5, 6, 8, 9]));
        assert_eq!(fs_set(&[7], None).unwrap(), set(&[7]));
        assert_eq!(fs_set(&[1, 2, 4, 8], None).unwrap(), (1..=15).collect());
        assert_eq!(fs_set(&[1, 3, 5], Some(5)).unwrap(), set(&[1, 3, 4, 5]));
        assert!(fs_set(&[], None).is_err());
        let big = fs_set(&[u64::MAX, u64::MAX - 1], None).unwrap();
        assert!(big.contains(&(2 * u64::MAX as u128 - 1)));
    }

    #[test]
    fn finite_products() {
        let n: Vec<BigUint> = [2u32, 3].iter().map(|&x| x.into()).collect();
        let got: Vec<BigUint> = fp_set(&NaturalsMul, &n).unwrap().into_iter().collect();
        assert_eq!(got, [2u32, 3, 6].iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>());

        let words = fp_set(&FreeMonoid, &["a".to_string(), "b".to_string()]).unwrap();
        assert_eq!(words.into_iter().collect::<Vec<_>>(), vec!["a", "ab", "b"]);

        let z7 = FiniteGroupoid::cyclic_mul(7);
        assert_eq!(fp_set(&z7, &[2, 2, 2]).unwrap().into_iter().collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn order_matters_only_without_commutativity() {
        let w = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let fwd = fp_set(&FreeMonoid, &w(&["a", "b", "c"])).unwrap();
        let rev = fp_set(&FreeMonoid, &w(&["c", "b", "a"])).unwrap();
        assert_ne!(fwd, rev);
        let z = FiniteGroupoid::cyclic_mul(9);
        assert_eq!(fp_set(&z, &[2, 4, 5]).unwrap(), fp_set(&z, &[5, 4, 2]).unwrap());
    }

    proptest! {
        #[test]
        fn distinct_powers_of_two(exps in proptest::collection::btree_set(0u32..40, 1..12)) {
            let seq: Vec<u64> = exps.iter().map(|&e| 1u64 << e).collect();
            prop_assert_eq!(fs_set(&seq, None).unwrap().len(), (1usize << seq.len()) - 1);
        }

        #[test]
        fn sums_match_subset_enumeration(seq in proptest::collection::vec(1u64..50, 1..8)) {
            let mut want = BTreeSet::new();
            for mask in 1u32..(1 << seq.len()) {
                want.insert(seq.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x as u128).sum());
            }
            prop_assert_eq!(fs_set(&seq, None).unwrap(), want);
        }

        #[test]
        fn reversal_in_left_zero_semigroup(seq in proptest::collection::vec(0u32..4, 1..6)) {
            // a*b = a: the product is the first factor, so FP is the set of
            // elements and reversing changes nothing
            let g = FiniteGroupoid::left_zero(4);
            let mut rev = seq.clone();
            rev.reverse();
            prop_assert_eq!(fp_set(&g, &seq).unwrap(), fp_set(&g, &rev).unwrap());
        }
    }
}
