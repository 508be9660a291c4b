use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{fp_set, fs_set, Coloring, Domain, NaturalsMul, RamseyError};

/// Shared node counter for a parallel search.
pub(crate) struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub(crate) fn new(limit: Option<u64>) -> Self {
        Budget {
            limit: limit.unwrap_or(u64::MAX),
            used: AtomicU64::new(0),
        }
    }

    #[inline]
    pub(crate) fn tick(&self) -> Result<(), RamseyError> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(RamseyError::Budget(self.limit));
        }
        Ok(())
    }

    pub(crate) fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurWitness {
    pub x: u64,
    pub y: u64,
    pub color: u32,
}

impl SchurWitness {
    pub fn verify(&self, c: &Coloring, allow_equal: bool) -> bool {
        (self.x < self.y || allow_equal && self.x == self.y)
            && [self.x, self.y, self.x + self.y].iter().all(|&v| c.color(v) == Some(self.color))
    }
}

/// First `(x, y)` in lexicographic order with `x <= y` (or `x < y`) and
/// `x`, `y`, `x + y` of one color.
pub fn schur_search(c: &Coloring, allow_equal: bool) -> Result<Option<SchurWitness>, RamseyError> {
    let n = c.interval_len()?;
    for x in 1..=n / 2 {
        let start = if allow_equal { x } else { x + 1 };
        for y in start..=n - x {
            let col = c.color(x);
            if col == c.color(y) && col == c.color(x + y) {
                return Ok(Some(SchurWitness {
                    x,
                    y,
                    color: col.expect("in range"),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FolkmanWitness {
    pub sequence: Vec<u64>,
    pub color: u32,
    pub fs: Vec<u128>,
}

impl FolkmanWitness {
    pub fn verify(&self, c: &Coloring, distinct: bool) -> bool {
        let ordered = self
            .sequence
            .windows(2)
            .all(|w| if distinct { w[0] < w[1] } else { w[0] <= w[1] });
        let Ok(fs) = fs_set(&self.sequence, None) else {
            return false;
        };
        ordered
            && fs.iter().copied().collect::<Vec<_>>() == self.fs
            && fs.iter().all(|&s| u64::try_from(s).ok().and_then(|s| c.color(s)) == Some(self.color))
    }
}

/// Depth-first search for an increasing sequence of `len` elements of
/// `1..=n` whose finite sums all have one color accepted by `allowed`.
/// The color is fixed by the first element; the first sequence in
/// lexicographic order is returned.
fn monochromatic_fs(
    c: &Coloring,
    len: usize,
    distinct: bool,
    allowed: &(dyn Fn(u32) -> bool + Sync),
    budget: &Budget,
) -> Result<Option<Vec<u64>>, RamseyError> {
    let n = c.interval_len()?;
    if len == 0 {
        return Err(RamseyError::Invalid("sequence length must be positive".into()));
    }

    fn extend(
        c: &Coloring,
        n: u64,
        len: usize,
        distinct: bool,
        color: u32,
        seq: &mut Vec<u64>,
        sums: &mut Vec<u64>,
        budget: &Budget,
    ) -> Result<bool, RamseyError> {
        if seq.len() == len {
            return Ok(true);
        }
        budget.tick()?;
        let last = *seq.last().expect("seeded");
        let lo = if distinct { last + 1 } else { last };
        let total: u64 = seq.iter().sum();
        let remaining = (len - seq.len()) as u64;
        for x in lo..=n {
            // every later element is at least x
            if total + remaining * x > n {
                break;
            }
            let mut added = vec![x];
            added.extend(sums.iter().map(|s| s + x));
            if added.iter().any(|&s| c.color(s) != Some(color)) {
                continue;
            }
            let before = sums.len();
            sums.extend(added);
            seq.push(x);
            if extend(c, n, len, distinct, color, seq, sums, budget)? {
                return Ok(true);
            }
            seq.pop();
            sums.truncate(before);
        }
        Ok(false)
    }

    (1..=n)
        .into_par_iter()
        .map(|x1| -> Result<Option<Vec<u64>>, RamseyError> {
            let color = c.color(x1).expect("in range");
            if !allowed(color) || len as u64 * x1 > n {
                return Ok(None);
            }
            let mut seq = vec![x1];
            let mut sums = vec![x1];
            Ok(extend(c, n, len, distinct, color, &mut seq, &mut sums, budget)?.then_some(seq))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

/// First increasing `n`-tuple (strictly increasing when `distinct`) whose
/// finite sums lie in one part.
pub fn folkman_search(
    c: &Coloring,
    n: usize,
    distinct: bool,
    max_nodes: Option<u64>,
) -> Result<Option<FolkmanWitness>, RamseyError> {
    let budget = Budget::new(max_nodes);
    Ok(monochromatic_fs(c, n, distinct, &|_| true, &budget)?.map(|sequence| {
        let fs: Vec<u128> = fs_set(&sequence, None).expect("non-empty").into_iter().collect();
        FolkmanWitness {
            color: c.color(sequence[0]).expect("in range"),
            sequence,
            fs,
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertWitness {
    pub sequence: Vec<u64>,
    pub translates: Vec<u64>,
    pub color: u32,
}

impl HilbertWitness {
    pub fn verify(&self, c: &Coloring) -> bool {
        let Ok(fs) = fs_set(&self.sequence, None) else {
            return false;
        };
        let distinct = self.translates.windows(2).all(|w| w[0] < w[1]) && self.sequence.windows(2).all(|w| w[0] < w[1]);
        distinct
            && self.translates.iter().all(|&b| {
                fs.iter()
                    .all(|&s| u64::try_from(s + b as u128).ok().and_then(|v| c.color(v)) == Some(self.color))
            })
    }
}

/// First strictly increasing `n`-tuple `x` for which some part contains
/// `b + FS(x)` for `b_count` distinct translates `b` in `0..=N`. Among the
/// parts, the lexicographically least list of translates is reported.
pub fn hilbert_cube_search(
    c: &Coloring,
    n: usize,
    b_count: usize,
    max_nodes: Option<u64>,
) -> Result<Option<HilbertWitness>, RamseyError> {
    let big_n = c.interval_len()?;
    if n == 0 || b_count == 0 {
        return Err(RamseyError::Invalid("n and b_count must be positive".into()));
    }
    let budget = Budget::new(max_nodes);

    let translates = |fs: &[u64]| -> Option<(Vec<u64>, u32)> {
        let top = *fs.last().expect("non-empty");
        let mut best: Option<(Vec<u64>, u32)> = None;
        for color in 0..c.count() {
            let bs: Vec<u64> = (0..=big_n - top)
                .filter(|&b| fs.iter().all(|&s| c.color(s + b) == Some(color)))
                .take(b_count)
                .collect();
            if bs.len() == b_count && best.as_ref().is_none_or(|(cur, _)| bs < *cur) {
                best = Some((bs, color));
            }
        }
        best
    };

    fn walk(
        big_n: u64,
        n: usize,
        seq: &mut Vec<u64>,
        budget: &Budget,
        found: &dyn Fn(&[u64]) -> Option<(Vec<u64>, u32)>,
    ) -> Result<Option<HilbertWitness>, RamseyError> {
        budget.tick()?;
        let total: u64 = seq.iter().sum();
        if seq.len() == n {
            let fs: Vec<u64> = fs_set(seq, None)?.into_iter().map(|s| s as u64).collect();
            return Ok(found(&fs).map(|(translates, color)| HilbertWitness {
                sequence: seq.clone(),
                translates,
                color,
            }));
        }
        let lo = seq.last().map_or(1, |&l| l + 1);
        let remaining = (n - seq.len()) as u64;
        for x in lo..=big_n {
            if total + remaining * x > big_n {
                break;
            }
            seq.push(x);
            if let Some(w) = walk(big_n, n, seq, budget, found)? {
                return Ok(Some(w));
            }
            seq.pop();
        }
        Ok(None)
    }

    (1..=big_n)
        .into_par_iter()
        .map(|x1| {
            if n as u64 * x1 > big_n {
                return Ok(None);
            }
            walk(big_n, n, &mut vec![x1], &budget, &translates)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimultaneousWitness {
    pub sums: Vec<u64>,
    pub products: Vec<u64>,
    pub color: u32,
}

impl SimultaneousWitness {
    pub fn verify(&self, c: &Coloring) -> bool {
        let increasing = |v: &[u64]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&self.sums) || !increasing(&self.products) {
            return false;
        }
        let Ok(fs) = fs_set(&self.sums, None) else {
            return false;
        };
        let ys: Vec<BigUint> = self.products.iter().map(|&y| y.into()).collect();
        let Ok(fp) = fp_set(&NaturalsMul, &ys) else {
            return false;
        };
        fs.iter()
            .all(|&s| u64::try_from(s).ok().and_then(|v| c.color(v)) == Some(self.color))
            && fp
                .iter()
                .all(|p| u64::try_from(p).ok().and_then(|v| c.color(v)) == Some(self.color))
    }
}

/// First strictly increasing `y` of length `len` whose finite products all
/// have color `color` and stay within `1..=n`.
fn monochromatic_fp(c: &Coloring, len: usize, color: u32, budget: &Budget) -> Result<Option<Vec<u64>>, RamseyError> {
    let n = c.interval_len()?;

    fn extend(
        c: &Coloring,
        n: u64,
        len: usize,
        color: u32,
        seq: &mut Vec<u64>,
        prods: &mut Vec<u64>,
        budget: &Budget,
    ) -> Result<bool, RamseyError> {
        if seq.len() == len {
            return Ok(true);
        }
        budget.tick()?;
        let lo = seq.last().map_or(1, |&l| l + 1);
        for y in lo..=n {
            let mut added = vec![y];
            let mut overflow = false;
            for &p in prods.iter() {
                match p.checked_mul(y) {
                    Some(v) if v <= n => added.push(v),
                    _ => {
                        overflow = true;
                        break;
                    }
                }
            }
            if overflow {
                // products only grow with y
                if prods.iter().any(|&p| p >= 1) && !prods.is_empty() {
                    break;
                }
                continue;
            }
            if added.iter().any(|&v| c.color(v) != Some(color)) {
                continue;
            }
            let before = prods.len();
            prods.extend(added);
            seq.push(y);
            if extend(c, n, len, color, seq, prods, budget)? {
                return Ok(true);
            }
            seq.pop();
            prods.truncate(before);
        }
        Ok(false)
    }

    let mut seq = Vec::new();
    let mut prods = Vec::new();
    Ok(extend(c, n, len, color, &mut seq, &mut prods, budget)?.then_some(seq))
}

/// Strictly increasing `x` and `y` of length `len` with `FS(x) ∪ FP(y)` in
/// one part; `x` is lexicographically least, then `y`.
pub fn simultaneous_fs_fp_search(
    c: &Coloring,
    len: usize,
    max_nodes: Option<u64>,
) -> Result<Option<SimultaneousWitness>, RamseyError> {
    if len == 0 {
        return Err(RamseyError::Invalid("sequence length must be positive".into()));
    }
    let budget = Budget::new(max_nodes);
    let products: Vec<Option<Vec<u64>>> = (0..c.count())
        .into_par_iter()
        .map(|color| monochromatic_fp(c, len, color, &budget))
        .collect::<Result<_, _>>()?;
    let allowed = |color: u32| products[color as usize].is_some();
    Ok(monochromatic_fs(c, len, true, &allowed, &budget)?.map(|sums| {
        let color = c.color(sums[0]).expect("in range");
        SimultaneousWitness {
            products: products[color as usize].clone().expect("allowed color"),
            sums,
            color,
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    /// one strictly increasing sequence per axis
    pub axes: Vec<Vec<u64>>,
    pub color: u32,
    pub grid_points: usize,
}

impl ProductWitness {
    pub fn verify(&self, c: &Coloring) -> bool {
        let Domain::Grid { dims } = c.domain() else {
            return false;
        };
        if self.axes.len() != dims.len() || self.axes.iter().any(|a| a.is_empty() || a.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        let Ok(sets) = self
            .axes
            .iter()
            .map(|a| fs_set(a, None).map(|s| s.into_iter().map(|v| v as u64).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>, _>>()
        else {
            return false;
        };
        let grid = cartesian(&sets);
        grid.len() == self.grid_points && grid.iter().all(|p| c.grid_color(p) == Some(self.color))
    }
}

fn cartesian(sets: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for s in sets {
        out = out
            .into_iter()
            .flat_map(|p| {
                s.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Strictly increasing sequences of length `len` in `1..=bound` with total
/// at most `bound`, in lexicographic order, with their finite sums.
fn axis_candidates(len: usize, bound: u64) -> Vec<(Vec<u64>, Vec<u64>)> {
    fn go(len: usize, bound: u64, seq: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if seq.len() == len {
            out.push(seq.clone());
            return;
        }
        let total: u64 = seq.iter().sum();
        let lo = seq.last().map_or(1, |&l| l + 1);
        let remaining = (len - seq.len()) as u64;
        for x in lo..=bound {
            if total + remaining * x > bound {
                break;
            }
            seq.push(x);
            go(len, bound, seq, out);
            seq.pop();
        }
    }
    let mut seqs = Vec::new();
    go(len, bound, &mut Vec::new(), &mut seqs);
    seqs.into_iter()
        .map(|s| {
            let fs = fs_set(&s, None).expect("non-empty").into_iter().map(|v| v as u64).collect();
            (s, fs)
        })
        .collect()
}

/// On a grid coloring of `prod_i 1..=N_i`, finds strictly increasing
/// sequences, of length `m` on every axis but the last and `len` on the last,
/// whose product of finite-sum sets lies in one part. Sequences are ordered
/// lexicographically, first axis most significant.
pub fn product_fs_search(
    c: &Coloring,
    m: usize,
    len: usize,
    max_nodes: Option<u64>,
) -> Result<Option<ProductWitness>, RamseyError> {
    let Domain::Grid { dims } = c.domain() else {
        return Err(RamseyError::Invalid("a grid coloring is required".into()));
    };
    if dims.is_empty() {
        return Err(RamseyError::Invalid("grid needs at least one axis".into()));
    }
    if m == 0 || len == 0 {
        return Err(RamseyError::Invalid("sequence lengths must be positive".into()));
    }
    let budget = Budget::new(max_nodes);
    let last = dims.len() - 1;
    let candidates: Vec<Vec<(Vec<u64>, Vec<u64>)>> = dims
        .iter()
        .enumerate()
        .map(|(i, &d)| axis_candidates(if i == last { len } else { m }, d))
        .collect();

    fn walk(
        c: &Coloring,
        candidates: &[Vec<(Vec<u64>, Vec<u64>)>],
        chosen: &mut Vec<usize>,
        budget: &Budget,
    ) -> Result<Option<ProductWitness>, RamseyError> {
        budget.tick()?;
        let axis = chosen.len();
        if axis == candidates.len() {
            let sets: Vec<Vec<u64>> = chosen.iter().enumerate().map(|(i, &k)| candidates[i][k].1.clone()).collect();
            let grid = cartesian(&sets);
            let color = c.grid_color(&grid[0]).expect("inside grid");
            if grid.iter().all(|p| c.grid_color(p) == Some(color)) {
                return Ok(Some(ProductWitness {
                    axes: chosen.iter().enumerate().map(|(i, &k)| candidates[i][k].0.clone()).collect(),
                    color,
                    grid_points: grid.len(),
                }));
            }
            return Ok(None);
        }
        for k in 0..candidates[axis].len() {
            chosen.push(k);
            if let Some(w) = walk(c, candidates, chosen, budget)? {
                return Ok(Some(w));
            }
            chosen.pop();
        }
        Ok(None)
    }

    (0..candidates[0].len())
        .into_par_iter()
        .map(|k| walk(c, &candidates, &mut vec![k], &budget))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

#[cfg(test)]
fn all_distinct(v: &[u64]) -> bool {
    v.iter().collect::<std::collections::BTreeSet<_>>().len() == v.len()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn two_parts() -> Coloring {
        Coloring::from_parts(5, &[vec![1, 4], vec![2, 3, 5]]).unwrap()
    }

    #[test]
    fn schur_examples() {
        let w = schur_search(&two_parts(), true).unwrap().unwrap();
        assert_eq!((w.x, w.y, w.color), (2, 3, 1));
        assert!(w.verify(&two_parts(), true));
        let four = Coloring::from_parts(4, &[vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(schur_search(&four, true).unwrap(), None);
        let w = schur_search(&Coloring::single(2), true).unwrap().unwrap();
        assert_eq!((w.x, w.y), (1, 1));
        assert_eq!(schur_search(&Coloring::single(2), false).unwrap(), None);
        assert_eq!(schur_search(&Coloring::single(0), true).unwrap(), None);
    }

    /// All pairs, no early exit.
    fn schur_oracle(c: &Coloring, allow_equal: bool) -> Option<(u64, u64)> {
        let n = c.interval_len().unwrap();
        let mut hits = Vec::new();
        for x in 1..=n {
            for y in 1..=n {
                if (x < y || allow_equal && x == y) && x + y <= n {
                    let col = c.color(x);
                    if col == c.color(y) && col == c.color(x + y) {
                        hits.push((x, y));
                    }
                }
            }
        }
        hits.into_iter().min()
    }

    #[test]
    fn schur_matches_oracle_on_random_colorings() {
        for seed in 0..200 {
            let c = Coloring::random(12, 3, seed).unwrap();
            for eq in [true, false] {
                let got = schur_search(&c, eq).unwrap().map(|w| (w.x, w.y));
                assert_eq!(got, schur_oracle(&c, eq), "seed {seed}");
            }
        }
    }

    #[test]
    fn folkman_examples() {
        let w = folkman_search(&Coloring::single(7), 3, true, None).unwrap().unwrap();
        assert_eq!(w.sequence, vec![1, 2, 3]);
        assert!(w.verify(&Coloring::single(7), true));
        // powers of two also work when the window is exactly 2^n - 1
        let fs = fs_set(&[1, 2, 4], None).unwrap();
        assert!(fs.iter().all(|&s| s <= 7));

        let w = folkman_search(&two_parts(), 2, true, None).unwrap().unwrap();
        assert_eq!(w.sequence, vec![2, 3]);

        let parity = Coloring::parity(10);
        assert_eq!(folkman_search(&parity, 3, true, None).unwrap(), None);
        let w = folkman_search(&parity, 3, false, None).unwrap().unwrap();
        assert_eq!(w.sequence, vec![2, 2, 2]);
        assert!(w.verify(&parity, false));
        assert!(!w.verify(&parity, true));
        assert!(folkman_search(&parity, 0, true, None).is_err());
    }

    /// Every strictly increasing triple in 1..=n, with its sums.
    fn folkman_oracle(c: &Coloring, n: u64) -> Option<Vec<u64>> {
        for a in 1..=n {
            for b in a + 1..=n {
                for d in b + 1..=n {
                    let fs = fs_set(&[a, b, d], None).unwrap();
                    let cols: BTreeSet<Option<u32>> =
                        fs.iter().map(|&s| u64::try_from(s).ok().and_then(|s| c.color(s))).collect();
                    if cols.len() == 1 && !cols.contains(&None) {
                        return Some(vec![a, b, d]);
                    }
                }
            }
        }
        None
    }

    #[test]
    fn folkman_matches_oracle() {
        for seed in 0..60 {
            let c = Coloring::random(24, 2, seed).unwrap();
            let got = folkman_search(&c, 3, true, None).unwrap().map(|w| w.sequence);
            assert_eq!(got, folkman_oracle(&c, 24), "seed {seed}");
        }
    }

    #[test]
    fn hilbert_examples() {
        let w = hilbert_cube_search(&Coloring::single(10), 2, 3, None).unwrap().unwrap();
        assert_eq!(w.sequence, vec![1, 2]);
        assert_eq!(w.translates, vec![0, 1, 2]);
        assert!(w.verify(&Coloring::single(10)));
        assert_eq!(hilbert_cube_search(&Coloring::single(0), 1, 1, None).unwrap(), None);

        // n = 1, two translates: b1 + x and b2 + x share a color
        for seed in 0..40 {
            let c = Coloring::random(9, 3, seed).unwrap();
            let got = hilbert_cube_search(&c, 1, 2, None).unwrap();
            let mut want = None;
            'x: for x in 1..=9u64 {
                let mut best: Option<(Vec<u64>, u32)> = None;
                for b1 in 0..=9 - x {
                    for b2 in b1 + 1..=9 - x {
                        if c.color(b1 + x) == c.color(b2 + x) {
                            let cand = (vec![b1, b2], c.color(b1 + x).unwrap());
                            if best.as_ref().is_none_or(|b| cand.0 < b.0) {
                                best = Some(cand);
                            }
                        }
                    }
                }
                if let Some((bs, color)) = best {
                    want = Some(HilbertWitness {
                        sequence: vec![x],
                        translates: bs,
                        color,
                    });
                    break 'x;
                }
            }
            assert_eq!(got, want, "seed {seed}");
            if let Some(w) = got {
                assert!(w.verify(&c));
            }
        }
    }

    #[test]
    fn simultaneous_examples() {
        let w = simultaneous_fs_fp_search(&Coloring::single(10), 3, None).unwrap().unwrap();
        assert_eq!(w.sums, vec![1, 2, 3]);
        assert_eq!(w.products, vec![1, 2, 3]);
        let parity = Coloring::parity(30);
        let w = simultaneous_fs_fp_search(&parity, 2, None).unwrap().unwrap();
        assert_eq!((w.sums.clone(), w.products.clone(), w.color), (vec![2, 4], vec![2, 4], 1));
        assert!(w.verify(&parity));
        let isolating = Coloring::interval_from_fn(8, 5, |x| if x % 2 == 0 { (x / 2) as u32 } else { 0 }).unwrap();
        assert_eq!(simultaneous_fs_fp_search(&isolating, 2, None).unwrap(), None);
    }

    #[test]
    fn product_examples() {
        let single = Coloring::grid_from_fn(&[6, 6], 1, |_| 0).unwrap();
        let w = product_fs_search(&single, 2, 2, None).unwrap().unwrap();
        assert_eq!(w.axes, vec![vec![1, 2], vec![1, 2]]);
        assert_eq!(w.grid_points, 9);
        assert!(w.verify(&single));

        let parity = Coloring::grid_from_fn(&[6, 6], 2, |p| ((p[0] + p[1]) % 2) as u32).unwrap();
        let w = product_fs_search(&parity, 1, 1, None).unwrap().unwrap();
        assert_eq!(w.axes, vec![vec![1], vec![1]]);
        let manual = ProductWitness {
            axes: vec![vec![2], vec![2]],
            color: 0,
            grid_points: 1,
        };
        assert!(manual.verify(&parity));

        // with two summands per axis, x and x + y differ in parity on one axis
        // unless y is even; then all sums on that axis share x's parity
        let w = product_fs_search(&parity, 2, 2, None).unwrap().unwrap();
        assert!(w.verify(&parity));
        assert!(w.axes.iter().all(|a| all_distinct(a) && a[1] % 2 == 0));
        assert!(product_fs_search(&Coloring::single(4), 1, 1, None).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let c = Coloring::parity(40);
        assert_eq!(folkman_search(&c, 4, true, Some(3)), Err(RamseyError::Budget(3)));
    }
}
