use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// A set `0..size` with an arbitrary binary operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupoidFile", into = "GroupoidFile")]
pub struct FiniteGroupoid {
    size: usize,
    mul: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupoidFile {
    pub size: usize,
    pub mul: Vec<u32>,
}

impl TryFrom<GroupoidFile> for FiniteGroupoid {
    type Error = AlgebraError;

    fn try_from(f: GroupoidFile) -> Result<Self, AlgebraError> {
        FiniteGroupoid::from_table(f.size, f.mul)
    }
}

impl From<FiniteGroupoid> for GroupoidFile {
    fn from(g: FiniteGroupoid) -> Self {
        GroupoidFile {
            size: g.size,
            mul: g.mul,
        }
    }
}

impl FiniteGroupoid {
    pub fn from_table(size: usize, mul: Vec<u32>) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Shape("carrier must be non-empty".into()));
        }
        if mul.len() != size * size {
            return Err(AlgebraError::Shape(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                size * size
            )));
        }
        if mul.iter().any(|&v| v as usize >= size) {
            return Err(AlgebraError::Shape("table entry outside the carrier".into()));
        }
        Ok(FiniteGroupoid { size, mul })
    }

    fn build(size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mul = (0..size * size).map(|i| f(i / size, i % size) as u32).collect();
        FiniteGroupoid { size, mul }
    }

    /// `(Z_m, ·)`.
    pub fn cyclic_mul(m: usize) -> Self {
        FiniteGroupoid::build(m, |a, b| a * b % m)
    }

    /// `(Z_m, +)`.
    pub fn cyclic_add(m: usize) -> Self {
        FiniteGroupoid::build(m, |a, b| (a + b) % m)
    }

    /// `a·b = a`.
    pub fn left_zero(n: usize) -> Self {
        FiniteGroupoid::build(n, |a, _| a)
    }

    /// `a·b = b`.
    pub fn right_zero(n: usize) -> Self {
        FiniteGroupoid::build(n, |_, b| b)
    }

    /// `a·b = 0`.
    pub fn null(n: usize) -> Self {
        FiniteGroupoid::build(n, |_, _| 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.size + b as usize]
    }

    /// First triple violating associativity, if any.
    pub fn associativity_witness(&self) -> Option<(u32, u32, u32)> {
        let n = self.size as u32;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn require_associative(&self) -> Result<(), AlgebraError> {
        match self.associativity_witness() {
            Some((a, b, c)) => Err(AlgebraError::NotAssociative(a, b, c)),
            None => Ok(()),
        }
    }

    /// The same operation with elements relabelled by `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[u32]) -> FiniteGroupoid {
        let mut mul = vec![0; self.mul.len()];
        for a in 0..self.size {
            for b in 0..self.size {
                let v = self.mul[a * self.size + b];
                mul[perm[a] as usize * self.size + perm[b] as usize] = perm[v as usize];
            }
        }
        FiniteGroupoid {
            size: self.size,
            mul,
        }
    }
}
