use rayon::prelude::*;
use serde::Serialize;

use super::search::Budget;
use super::{Coloring, RamseyError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurNumber {
    pub r: u32,
    pub n: u64,
    pub certificate: Coloring,
    pub nodes: u64,
}

/// Depth at which the search tree is split into parallel subtrees.
const SPLIT_DEPTH: usize = 8;

/// Colors 1..=len of `colors` are fixed; can `len + 1` take color `c`?
#[inline]
fn admissible(colors: &[u32], c: u32) -> bool {
    let k = colors.len() + 1;
    // x + (k - x) = k with x <= k - x
    (1..=k / 2).all(|x| colors[x - 1] != c || colors[k - x - 1] != c)
}

/// Colors a new element may take: a fresh color only if it is the next
/// unused one, which removes the symmetry between colors.
fn choices(colors: &[u32], r: u32) -> impl Iterator<Item = u32> + '_ {
    let fresh = colors.iter().max().map_or(0, |&m| m + 1).min(r - 1);
    (0..=fresh).filter(move |&c| admissible(colors, c))
}

/// Longest sum-free extension of `prefix`, first found in lexicographic order.
fn deepest(prefix: &mut Vec<u32>, r: u32, budget: &Budget) -> Result<Vec<u32>, RamseyError> {
    budget.tick()?;
    let mut best = prefix.clone();
    let options: Vec<u32> = choices(prefix, r).collect();
    for c in options {
        prefix.push(c);
        let found = deepest(prefix, r, budget)?;
        prefix.pop();
        if found.len() > best.len() {
            best = found;
        }
    }
    Ok(best)
}

/// All admissible colorings of `1..=depth`, in lexicographic order, together
/// with the dead ends shorter than `depth`.
fn prefixes(r: u32, depth: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<u32>, r: u32, depth: usize, out: &mut Vec<Vec<u32>>) {
        if cur.len() == depth {
            out.push(cur.clone());
            return;
        }
        let options: Vec<u32> = choices(cur, r).collect();
        if options.is_empty() {
            out.push(cur.clone());
        }
        for c in options {
            cur.push(c);
            go(cur, r, depth, out);
            cur.pop();
        }
    }
    go(&mut Vec::new(), r, depth, &mut out);
    out
}

/// The largest `N` such that `1..=N` has an `r`-coloring without a
/// monochromatic `x + y = z` (`x = y` allowed), with such a coloring.
pub fn schur_number(r: u32, max_nodes: Option<u64>) -> Result<SchurNumber, RamseyError> {
    if r == 0 {
        return Err(RamseyError::Invalid("need at least one color".into()));
    }
    let budget = Budget::new(max_nodes);
    let best = prefixes(r, SPLIT_DEPTH)
        .into_par_iter()
        .map(|mut p| deepest(&mut p, r, &budget))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        // the first maximum in prefix order
        .reduce(|a, b| if b.len() > a.len() { b } else { a })
        .unwrap_or_default();
    let n = best.len() as u64;
    Ok(SchurNumber {
        r,
        n,
        certificate: Coloring::new(super::Domain::Interval { n }, r, best)?,
        nodes: budget.used(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramsey::schur_search;

    fn has_triple(colors: &[u32]) -> bool {
        let n = colors.len();
        (1..=n).any(|x| (x..=n - x).any(|y| colors[x - 1] == colors[y - 1] && colors[x - 1] == colors[x + y - 1]))
    }

    /// Tries every `r`-coloring of `1..=n`.
    fn some_coloring_works(n: usize, r: u32) -> bool {
        let total = (r as u64).pow(n as u32);
        (0..total).any(|mut code| {
            let colors: Vec<u32> = (0..n)
                .map(|_| {
                    let c = (code % r as u64) as u32;
                    code /= r as u64;
                    c
                })
                .collect();
            !has_triple(&colors)
        })
    }

    /// Plain backtracking over all colors, no symmetry breaking.
    fn extends_to(n: usize, r: u32, cur: &mut Vec<u32>) -> bool {
        if cur.len() == n {
            return true;
        }
        for c in 0..r {
            cur.push(c);
            if !has_triple(cur) && extends_to(n, r, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }

    #[test]
    fn small_values() {
        let s1 = schur_number(1, None).unwrap();
        assert_eq!(s1.n, 1);
        let s2 = schur_number(2, None).unwrap();
        assert_eq!(s2.n, 4);
        assert_eq!(s2.certificate.parts(), vec![vec![1, 4], vec![2, 3]]);
        for r in 1..=2 {
            let s = schur_number(r, None).unwrap();
            assert!(some_coloring_works(s.n as usize, r));
            assert!(!some_coloring_works(s.n as usize + 1, r));
            assert_eq!(schur_search(&s.certificate, true).unwrap(), None);
        }
        assert!(schur_number(0, None).is_err());
    }

    #[test]
    fn three_colors() {
        let s3 = schur_number(3, None).unwrap();
        assert_eq!(s3.n, 13);
        assert_eq!(schur_search(&s3.certificate, true).unwrap(), None);
        assert!(!extends_to(14, 3, &mut Vec::new()));
        assert!(extends_to(13, 3, &mut Vec::new()));
    }

    #[test]
    fn deterministic_and_budgeted() {
        let a = schur_number(3, None).unwrap();
        let b = schur_number(3, None).unwrap();
        assert_eq!(a.certificate, b.certificate);
        assert_eq!(schur_number(3, Some(10)), Err(RamseyError::Budget(10)));
    }
}
