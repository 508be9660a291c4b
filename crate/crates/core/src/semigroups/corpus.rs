use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebras::FiniteGroupoid;

const UNSET: u32 = u32::MAX;

/// Cells fixed before the search splits into parallel subtrees.
const SPLIT_CELLS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corpus {
    pub order: usize,
    /// every associative table on `0..order`, lexicographically
    pub tables: Vec<FiniteGroupoid>,
    /// one representative per isomorphism class, the least relabelling
    pub classes: Vec<FiniteGroupoid>,
}

/// Associativity on the defined part of a partial table.
fn consistent(n: usize, t: &[u32]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let l = t[xy as usize * n + z];
                let r = t[x * n + yz as usize];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn fill(n: usize, t: &mut Vec<u32>, cell: usize, stop: usize, out: &mut Vec<Vec<u32>>) {
    if cell == stop {
        out.push(t.clone());
        return;
    }
    for v in 0..n as u32 {
        t[cell] = v;
        if consistent(n, t) {
            fill(n, t, cell + 1, stop, out);
        }
    }
    t[cell] = UNSET;
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut p: Vec<u32> = (0..n as u32).collect();
    fn heap(k: usize, p: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// All associative operations on `0..order` by backtracking over the table
/// cells, with their isomorphism classes.
pub fn associative_tables(order: usize) -> Corpus {
    assert!((1..=5).contains(&order), "order must lie in 1..=5");
    let cells = order * order;
    let split = SPLIT_CELLS.min(cells);
    let mut prefixes = Vec::new();
    fill(order, &mut vec![UNSET; cells], 0, split, &mut prefixes);
    let raw: Vec<Vec<u32>> = prefixes
        .into_par_iter()
        .flat_map_iter(|mut p| {
            let mut out = Vec::new();
            fill(order, &mut p, split, cells, &mut out);
            out
        })
        .collect();
    let perms = permutations(order);
    let tables: Vec<FiniteGroupoid> = raw
        .into_iter()
        .map(|t| FiniteGroupoid::from_table(order, t).expect("well-shaped"))
        .collect();
    let classes: BTreeSet<Vec<u32>> = tables
        .par_iter()
        .map(|g| perms.iter().map(|p| g.relabel(p).table().to_vec()).min().expect("non-empty"))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Corpus {
        order,
        tables,
        classes: classes
            .into_iter()
            .map(|t| FiniteGroupoid::from_table(order, t).expect("well-shaped"))
            .collect(),
    }
}

/// Named semigroups of order `1..=max_order`: `(Z_m, ·)`, `(Z_m, +)`,
/// left-zero, right-zero and null semigroups.
pub fn named_families(max_order: usize) -> Vec<(String, FiniteGroupoid)> {
    let mut out = Vec::new();
    for m in 1..=max_order {
        out.push((format!("z{m}-mul"), FiniteGroupoid::cyclic_mul(m)));
        out.push((format!("z{m}-add"), FiniteGroupoid::cyclic_add(m)));
        out.push((format!("left-zero-{m}"), FiniteGroupoid::left_zero(m)));
        out.push((format!("right-zero-{m}"), FiniteGroupoid::right_zero(m)));
        out.push((format!("null-{m}"), FiniteGroupoid::null(m)));
    }
    out
}
