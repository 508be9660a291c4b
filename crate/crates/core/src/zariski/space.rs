use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use super::{point_coords, PointSet, TermClone, ZariskiError};

/// A topology on `0..points` generated by a family of closed sets.
///
/// For a Zariski space the family is the set of distinct root sets of the
/// term functions, and `coords` records the carrier size and `n` so points
/// can be decoded.
#[derive(Debug, Clone)]
pub struct FiniteSpace {
    points: usize,
    coords: Option<(usize, u32)>,
    subbase: Vec<PointSet>,
    union_arity: Option<usize>,
    lower_approx: bool,
    /// `cl{y}` for every point `y`
    point_closures: Vec<PointSet>,
}

impl FiniteSpace {
    /// The topology whose closed sets are generated by `sets`.
    pub fn from_closed_sets(points: usize, sets: Vec<PointSet>) -> Result<Self, ZariskiError> {
        if sets.iter().any(|s| s.universe() != points) {
            return Err(ZariskiError::Invalid("closed set over a different point count".into()));
        }
        let mut seen = HashSet::new();
        let subbase = sets.into_iter().filter(|s| seen.insert(s.clone())).collect();
        Ok(FiniteSpace::build(points, None, subbase, None, false))
    }

    /// The topology generated by the open sets `sets`.
    pub fn from_open_sets(points: usize, sets: Vec<PointSet>) -> Result<Self, ZariskiError> {
        FiniteSpace::from_closed_sets(points, sets.iter().map(PointSet::complement).collect())
    }

    fn build(
        points: usize,
        coords: Option<(usize, u32)>,
        subbase: Vec<PointSet>,
        union_arity: Option<usize>,
        lower_approx: bool,
    ) -> Self {
        let mut point_closures = vec![PointSet::full(points); points];
        for r in &subbase {
            for y in r.iter() {
                point_closures[y].intersect_with(r);
            }
        }
        FiniteSpace {
            points,
            coords,
            subbase,
            union_arity,
            lower_approx,
            point_closures,
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// The generating closed sets, without duplicates.
    pub fn subbase(&self) -> &[PointSet] {
        &self.subbase
    }

    pub fn union_arity(&self) -> Option<usize> {
        self.union_arity
    }

    /// True when built from a capped clone, so the real topology may be finer.
    pub fn is_lower_approximation(&self) -> bool {
        self.lower_approx
    }

    /// Coordinates of a point of `K^n`, when the space came from a clone.
    pub fn coords(&self, i: usize) -> Option<Vec<u32>> {
        self.coords.map(|(size, n)| point_coords(size, n, i))
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.points)
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.points)
    }

    /// `cl{y}`, the intersection of the generating sets containing `y`.
    pub fn point_closure(&self, y: usize) -> &PointSet {
        &self.point_closures[y]
    }

    /// The smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        PointSet::from_indices(self.points, (0..self.points).filter(|&y| self.point_closures[y].contains(x)))
    }

    /// Closure in the generated topology.
    pub fn closure(&self, s: &PointSet) -> PointSet {
        let mut out = self.empty_set();
        for y in s.iter() {
            out.union_with(&self.point_closures[y]);
        }
        out
    }

    pub fn interior(&self, s: &PointSet) -> PointSet {
        self.closure(&s.complement()).complement()
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        &self.closure(s) == s
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        &self.interior(s) == s
    }

    /// Unions of at most `union_arity` generating sets, built level by level
    /// until nothing new appears, the arity bound is reached, or more than
    /// `limit` sets are known.
    pub fn materialize(&self, limit: usize) -> BaseMaterialization {
        let arity = self.union_arity.unwrap_or(usize::MAX);
        let mut all: Vec<PointSet> = Vec::new();
        let mut seen: HashSet<PointSet> = HashSet::new();
        for r in &self.subbase {
            if seen.insert(r.clone()) {
                all.push(r.clone());
            }
        }
        let mut frontier = all.clone();
        let mut level = 1;
        let mut saturated_at = if all.is_empty() { Some(0) } else { None };
        let mut complete = all.len() <= limit;
        while complete && saturated_at.is_none() && level < arity {
            let mut next = Vec::new();
            'grow: for a in &frontier {
                for r in &self.subbase {
                    let u = a.union(r);
                    if seen.insert(u.clone()) {
                        next.push(u.clone());
                        all.push(u);
                        if all.len() > limit {
                            complete = false;
                            break 'grow;
                        }
                    }
                }
            }
            if next.is_empty() {
                saturated_at = Some(level);
            }
            frontier = next;
            level += 1;
        }
        all.truncate(limit);
        BaseMaterialization {
            sets: all,
            complete,
            saturated_at,
        }
    }
}

/// The closed base as an explicit family.
#[derive(Debug, Clone, Serialize)]
pub struct BaseMaterialization {
    pub sets: Vec<PointSet>,
    /// `false` when the set limit was hit
    pub complete: bool,
    /// least union arity already giving every set, if reached
    pub saturated_at: Option<usize>,
}

/// The Zariski space of `K^n` generated by the root sets of `clone`.
///
/// `union_arity` bounds the number of root sets per basic closed set; `None`
/// allows any finite union.
pub fn closed_base(clone: &TermClone, union_arity: Option<usize>) -> FiniteSpace {
    let points = clone.functions.first().map_or_else(
        || (clone.carrier as u128).pow(clone.n) as usize,
        |f| f.table.len(),
    );
    let mut seen = HashSet::new();
    let subbase = clone
        .functions
        .iter()
        .map(|f| f.root_set())
        .filter(|r| seen.insert(r.clone()))
        .collect();
    FiniteSpace::build(points, Some((clone.carrier, clone.n)), subbase, union_arity, !clone.complete)
}

/// Intersection of all basic closed sets containing `s`.
///
/// With unbounded union arity this is the topological closure. With a bound
/// `k`, a point `p` stays out exactly when `s` is covered by at most `k`
/// generating sets that all avoid `p`.
pub fn zariski_closure(s: &PointSet, space: &FiniteSpace) -> PointSet {
    match space.union_arity {
        Some(k) if k < space.subbase.len() => {
            let mut out = space.empty_set();
            for p in 0..space.points {
                if s.contains(p) {
                    out.insert(p);
                    continue;
                }
                let avoiding: Vec<&PointSet> = space.subbase.iter().filter(|r| !r.contains(p)).collect();
                if !covers(s, &avoiding, k) {
                    out.insert(p);
                }
            }
            out
        }
        _ => space.closure(s),
    }
}

/// Whether at most `k` of `sets` cover `target`.
fn covers(target: &PointSet, sets: &[&PointSet], k: usize) -> bool {
    fn go(rest: &PointSet, sets: &[&PointSet], k: usize) -> bool {
        let Some(first) = rest.iter().next() else {
            return true;
        };
        if k == 0 {
            return false;
        }
        sets.iter()
            .filter(|r| r.contains(first))
            .any(|r| go(&rest.difference(r), sets, k - 1))
    }
    go(target, sets, k)
}

/// Least number of open sets with intersection `{x}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pseudocharacter {
    Finite(u64),
    /// no family of open sets intersects to the singleton
    Undefined,
}

impl fmt::Display for Pseudocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pseudocharacter::Finite(k) => write!(f, "{k}"),
            Pseudocharacter::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Pseudocharacter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Pseudocharacter::Finite(k) => s.serialize_u64(*k),
            Pseudocharacter::Undefined => s.serialize_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetReport {
    pub subset: PointSet,
    pub closure: PointSet,
    pub interior: PointSet,
    pub closed: bool,
    pub open: bool,
    /// the closure has empty interior
    pub nowhere_dense: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub points: usize,
    pub generating_sets: usize,
    pub lower_approximation: bool,
    pub isolated: Vec<usize>,
    pub discrete: bool,
    pub components: Vec<Vec<usize>>,
    pub pseudocharacter: Vec<Pseudocharacter>,
    pub space_pseudocharacter: Pseudocharacter,
    pub ind: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<SubsetReport>,
}

pub fn analyze(space: &FiniteSpace, subset: Option<&PointSet>) -> Result<AnalysisReport, ZariskiError> {
    if let Some(s) = subset {
        if s.universe() != space.points {
            return Err(ZariskiError::Invalid("subset over a different point count".into()));
        }
    }
    let n = space.points;
    let opens: Vec<PointSet> = (0..n).map(|x| space.minimal_open(x)).collect();
    let isolated: Vec<usize> = (0..n).filter(|&x| opens[x].len() == 1).collect();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for (x, u) in opens.iter().enumerate() {
        for y in u.iter() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }

    // In a finite space the intersection of all open sets around x is the
    // minimal one, so a single open set suffices exactly when it is {x}.
    let pseudocharacter: Vec<Pseudocharacter> = opens
        .iter()
        .map(|u| {
            if u.len() == 1 {
                Pseudocharacter::Finite(1)
            } else {
                Pseudocharacter::Undefined
            }
        })
        .collect();
    let space_pseudocharacter = pseudocharacter
        .iter()
        .copied()
        .max()
        .unwrap_or(Pseudocharacter::Finite(0));

    let subset = subset.map(|s| {
        let closure = space.closure(s);
        let interior = space.interior(s);
        SubsetReport {
            subset: s.clone(),
            closed: &closure == s,
            open: &interior == s,
            nowhere_dense: space.interior(&closure).is_empty(),
            closure,
            interior,
        }
    });

    Ok(AnalysisReport {
        points: n,
        generating_sets: space.subbase.len(),
        lower_approximation: space.lower_approx,
        discrete: isolated.len() == n,
        isolated,
        components: groups.into_values().collect(),
        pseudocharacter,
        space_pseudocharacter,
        ind: ind_dimension(space),
        subset,
    })
}

/// Small inductive dimension of the whole space.
pub fn ind_dimension(space: &FiniteSpace) -> i64 {
    let mut memo = HashMap::new();
    ind_of(space, &space.full_set(), &mut memo)
}

/// Every base of a finite space contains the minimal open sets, so the
/// recursion only needs to look at `U_x ∩ Y` for each point `x` of `Y`.
fn ind_of(space: &FiniteSpace, y: &PointSet, memo: &mut HashMap<PointSet, i64>) -> i64 {
    if y.is_empty() {
        return -1;
    }
    if let Some(&v) = memo.get(y) {
        return v;
    }
    let mut best = 0;
    for x in y.iter() {
        let u = space.minimal_open(x).intersection(y);
        let boundary = space.closure(&u).intersection(y).difference(&u);
        best = best.max(1 + ind_of(space, &boundary, memo));
    }
    memo.insert(y.clone(), best);
    best
}
