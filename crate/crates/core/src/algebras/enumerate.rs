//! Enumeration of all coordinatewise-additive maps `K^n -> K` of a finite
//! abelian group, i.e. the operations of its most expanded polyring up to a
//! given arity.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::finite::pow_checked;
use super::{AlgebraError, FinitePolyring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumMode {
    /// Cyclic groups: `k·x_1·…·x_n` through a generator. Other groups:
    /// extension from values on a generating set, each candidate checked.
    Structural,
    /// Every table in `K^(K^n)`, filtered by additivity.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumeratedOps {
    pub arity: usize,
    /// Tables in lexicographic order.
    pub tables: Vec<Vec<u32>>,
    /// False when the candidate cap stopped the enumeration early.
    pub complete: bool,
    pub candidates_examined: u64,
}

/// Enumerates the `arity`-ary coordinatewise-additive maps on the additive
/// group of `group` (its extra operations are ignored). At most `cap`
/// candidates are examined; the result is flagged incomplete otherwise.
pub fn enumerate_distributive_ops(
    group: &FinitePolyring,
    arity: usize,
    cap: u64,
    mode: EnumMode,
) -> Result<EnumeratedOps, AlgebraError> {
    if arity == 0 {
        return Err(AlgebraError::Invalid("arity must be at least 1".into()));
    }
    let cells = pow_checked(group.size(), arity)
        .filter(|&c| c <= 1 << 24)
        .ok_or(AlgebraError::SizeOverflow {
            size: u128::MAX,
            limit: 1 << 24,
        })?;
    let mut out = match mode {
        EnumMode::BruteForce => brute_force(group, arity, cells, cap),
        EnumMode::Structural => match cyclic_generator(group) {
            Some(g) => cyclic(group, arity, cells, g),
            None => from_generators(group, arity, cells, cap),
        },
    };
    out.tables.sort();
    Ok(out)
}

/// True when `table` is additive in every coordinate.
pub fn is_multi_additive(group: &FinitePolyring, arity: usize, table: &[u32]) -> bool {
    let m = group.size();
    let cells = table.len();
    // stride of coordinate k in the row-major index
    let strides: Vec<usize> = (0..arity).map(|k| pow_checked(m, arity - 1 - k).unwrap()).collect();
    for &stride in &strides {
        for base in 0..cells {
            if (base / stride) % m != 0 {
                continue;
            }
            for y in 0..m {
                let fy = table[base + y * stride];
                for y2 in 0..m {
                    let s = group.plus(y as u32, y2 as u32) as usize;
                    if table[base + s * stride] != group.plus(fy, table[base + y2 * stride]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn brute_force(group: &FinitePolyring, arity: usize, cells: usize, cap: u64) -> EnumeratedOps {
    let m = group.size() as u64;
    let total = (0..cells).try_fold(1u64, |acc, _| acc.checked_mul(m));
    let (limit, complete) = match total {
        Some(t) if t <= cap => (t, true),
        _ => (cap, false),
    };
    let tables: Vec<Vec<u32>> = (0..limit)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut table = vec![0u32; cells];
            for cell in table.iter_mut().rev() {
                *cell = (idx % m) as u32;
                idx /= m;
            }
            is_multi_additive(group, arity, &table).then_some(table)
        })
        .collect();
    EnumeratedOps {
        arity,
        tables,
        complete,
        candidates_examined: limit,
    }
}

fn cyclic_generator(group: &FinitePolyring) -> Option<u32> {
    (0..group.size() as u32).find(|&g| group.order(g) == group.size())
}

fn cyclic(group: &FinitePolyring, arity: usize, cells: usize, g: u32) -> EnumeratedOps {
    let m = group.size();
    // log[a] = k with a = k·g
    let mut log = vec![0usize; m];
    let mut x = 0u32;
    for k in 0..m {
        log[x as usize] = k;
        x = group.plus(x, g);
    }
    let tables = (0..m as u64)
        .map(|k| {
            (0..cells)
                .map(|mut idx| {
                    let mut prod = k as usize % m;
                    for _ in 0..arity {
                        prod = prod * log[idx % m] % m;
                        idx /= m;
                    }
                    group.times(prod as u64, g)
                })
                .collect()
        })
        .collect();
    EnumeratedOps {
        arity,
        tables,
        complete: true,
        candidates_examined: m as u64,
    }
}

/// Greedy generating set: repeatedly add an element of maximal order
/// outside the current subgroup. Returns the generators and, for every
/// element `a != 0`, a pair `(parent, generator index)` with
/// `a = parent + gens[index]`, listed in breadth-first order from 0.
fn spanning_tree(group: &FinitePolyring) -> (Vec<u32>, Vec<(u32, u32, usize)>) {
    let m = group.size();
    let mut gens = Vec::new();
    let mut inside = vec![false; m];
    inside[0] = true;
    loop {
        let pick = (0..m as u32)
            .filter(|&a| !inside[a as usize])
            .max_by_key(|&a| (group.order(a), std::cmp::Reverse(a)));
        let Some(g) = pick else { break };
        gens.push(g);
        // subgroup closure under the generators so far
        let mut frontier: Vec<u32> = (0..m as u32).filter(|&a| inside[a as usize]).collect();
        while let Some(a) = frontier.pop() {
            for &h in &gens {
                let b = group.plus(a, h);
                if !inside[b as usize] {
                    inside[b as usize] = true;
                    frontier.push(b);
                }
            }
        }
    }
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut order = Vec::new();
    let mut queue = std::collections::VecDeque::from([0u32]);
    while let Some(a) = queue.pop_front() {
        for (j, &h) in gens.iter().enumerate() {
            let b = group.plus(a, h);
            if !seen[b as usize] {
                seen[b as usize] = true;
                order.push((b, a, j));
                queue.push_back(b);
            }
        }
    }
    (gens, order)
}

fn from_generators(group: &FinitePolyring, arity: usize, cells: usize, cap: u64) -> EnumeratedOps {
    let m = group.size();
    let (gens, tree) = spanning_tree(group);
    let r = gens.len();
    let slots = pow_checked(r, arity).expect("small");
    // admissible values of f(g_{j_1}, .., g_{j_n}): killed by every order
    let choices: Vec<Vec<u32>> = (0..slots)
        .map(|mut s| {
            let mut orders = Vec::with_capacity(arity);
            for _ in 0..arity {
                orders.push(group.order(gens[s % r]) as u64);
                s /= r;
            }
            (0..m as u32)
                .filter(|&v| orders.iter().all(|&o| group.times(o, v) == 0))
                .collect()
        })
        .collect();
    let total = choices
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64));
    let (limit, complete) = match total {
        Some(t) if t <= cap => (t, true),
        _ => (cap, false),
    };
    let tables: Vec<Vec<u32>> = (0..limit)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut seed = vec![0u32; slots];
            for (s, c) in seed.iter_mut().zip(&choices) {
                *s = c[(idx % c.len() as u64) as usize];
                idx /= c.len() as u64;
            }
            let table = extend(group, arity, &gens, &tree, &seed, cells);
            is_multi_additive(group, arity, &table).then_some(table)
        })
        .collect();
    EnumeratedOps {
        arity,
        tables,
        complete,
        candidates_examined: limit,
    }
}

/// Extends values on generator tuples to all of `K^n` one coordinate at a
/// time, using `f(.., a, ..) = f(.., parent, ..) + f(.., g_j, ..)`.
fn extend(
    group: &FinitePolyring,
    arity: usize,
    gens: &[u32],
    tree: &[(u32, u32, usize)],
    seed: &[u32],
    cells: usize,
) -> Vec<u32> {
    let m = group.size();
    let r = gens.len();
    // dims[k] = m for extended coordinates, r for generator-indexed ones;
    // seed is indexed with the first coordinate least significant.
    let mut dims = vec![r; arity];
    let mut cur: Vec<u32> = seed.to_vec();
    for k in 0..arity {
        let mut new_dims = dims.clone();
        new_dims[k] = m;
        let new_len: usize = new_dims.iter().product();
        let mut next = vec![0u32; new_len];
        let stride_old: usize = dims[..k].iter().product();
        let stride_new: usize = new_dims[..k].iter().product();
        let outer: usize = dims[k + 1..].iter().product();
        for hi in 0..outer {
            for lo in 0..stride_old {
                let old_at = |j: usize| cur[lo + stride_old * (j + r * hi)];
                let at = |a: usize| lo + stride_new * (a + m * hi);
                next[at(0)] = 0;
                for &(a, parent, j) in tree {
                    let v = group.plus(next[at(parent as usize)], old_at(j));
                    next[at(a as usize)] = v;
                }
            }
        }
        cur = next;
        dims = new_dims;
    }
    // convert from first-coordinate-least-significant to row-major
    let pows: Vec<usize> = (0..arity).map(|k| pow_checked(m, k).unwrap()).collect();
    (0..cells)
        .map(|idx| {
            let lsb: usize = (0..arity)
                .map(|k| (idx / pows[arity - 1 - k]) % m * pows[k])
                .sum();
            cur[lsb]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::direct_product;

    #[test]
    fn z2_unary_two_maps() {
        let z2 = FinitePolyring::cyclic_group(2);
        for mode in [EnumMode::Structural, EnumMode::BruteForce] {
            let e = enumerate_distributive_ops(&z2, 1, 1 << 20, mode).unwrap();
            assert!(e.complete);
            assert_eq!(e.tables, vec![vec![0, 0], vec![0, 1]]);
        }
    }

    #[test]
    fn z3_binary_three_maps() {
        let z3 = FinitePolyring::cyclic_group(3);
        let s = enumerate_distributive_ops(&z3, 2, 1 << 20, EnumMode::Structural).unwrap();
        let b = enumerate_distributive_ops(&z3, 2, 1 << 20, EnumMode::BruteForce).unwrap();
        assert_eq!(b.candidates_examined, 19683);
        assert_eq!(s.tables.len(), 3);
        assert_eq!(s.tables, b.tables);
        for (k, t) in [0u32, 1, 2].iter().zip(&s.tables) {
            for x in 0..3u32 {
                for y in 0..3u32 {
                    assert_eq!(t[(x * 3 + y) as usize], k * x * y % 3);
                }
            }
        }
    }

    #[test]
    fn klein_group_unary_sixteen_maps() {
        let z2 = FinitePolyring::cyclic_group(2);
        let v4 = direct_product(&[z2.clone(), z2]).unwrap();
        let s = enumerate_distributive_ops(&v4, 1, 1 << 20, EnumMode::Structural).unwrap();
        let b = enumerate_distributive_ops(&v4, 1, 1 << 20, EnumMode::BruteForce).unwrap();
        assert_eq!(b.tables.len(), 16);
        assert_eq!(s.tables, b.tables);
    }

    #[test]
    fn klein_group_binary_matches_brute_force() {
        let z2 = FinitePolyring::cyclic_group(2);
        let v4 = direct_product(&[z2.clone(), z2]).unwrap();
        let s = enumerate_distributive_ops(&v4, 2, 1 << 20, EnumMode::Structural).unwrap();
        // 2^(2·2·2) bilinear maps F_2^2 x F_2^2 -> F_2^2
        assert_eq!(s.tables.len(), 256);
        for t in &s.tables {
            assert!(is_multi_additive(&v4, 2, t));
        }
    }

    #[test]
    fn z2_times_z4_unary_matches_brute_force() {
        let g = direct_product(&[FinitePolyring::cyclic_group(2), FinitePolyring::cyclic_group(4)]).unwrap();
        let s = enumerate_distributive_ops(&g, 1, 1 << 30, EnumMode::Structural).unwrap();
        let b = enumerate_distributive_ops(&g, 1, 1 << 30, EnumMode::BruteForce).unwrap();
        assert_eq!(s.tables, b.tables);
        // |End(Z_2 x Z_4)| = 2·2·2·4 = 32
        assert_eq!(s.tables.len(), 32);
    }

    #[test]
    fn cap_flags_partial_result() {
        let z3 = FinitePolyring::cyclic_group(3);
        let b = enumerate_distributive_ops(&z3, 2, 100, EnumMode::BruteForce).unwrap();
        assert!(!b.complete);
        assert_eq!(b.candidates_examined, 100);
        assert!(enumerate_distributive_ops(&z3, 0, 100, EnumMode::BruteForce).is_err());
    }
}
