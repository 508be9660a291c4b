use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ZariskiError;
use crate::algebras::{evaluate, SymbolicPolyring};
use crate::terms::{degree, parse_term, var_range, Term};

/// A subset of `K^(n+1)` whose sections along the last coordinate are finite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FiniteValued {
    Empty,
    /// points whose last coordinate equals `term` at the first `n`
    Graph { term: String },
    /// finitely many points, each a list of `n + 1` elements of `K`
    Explicit { points: Vec<Vec<Vec<i64>>> },
    Union { parts: Vec<FiniteValued> },
}

enum Resolved {
    Graph(Term),
    Explicit(Vec<Vec<Vec<BigInt>>>),
    Union(Vec<Resolved>),
}

impl FiniteValued {
    fn resolve(&self, instance: &SymbolicPolyring, n: u32) -> Result<Resolved, ZariskiError> {
        Ok(match self {
            FiniteValued::Empty => Resolved::Union(Vec::new()),
            FiniteValued::Graph { term } => Resolved::Graph(parse_term(term, &instance.signature(), n)?),
            FiniteValued::Explicit { points } => {
                let d = instance.dimension();
                let mut out = Vec::new();
                for p in points {
                    if p.len() != n as usize + 1 || p.iter().any(|e| e.len() != d) {
                        return Err(ZariskiError::Invalid("explicit point of the wrong shape".into()));
                    }
                    out.push(p.iter().map(|e| instance.element(e)).collect());
                }
                Resolved::Explicit(out)
            }
            FiniteValued::Union { parts } => {
                Resolved::Union(parts.iter().map(|p| p.resolve(instance, n)).collect::<Result<_, _>>()?)
            }
        })
    }
}

impl Resolved {
    fn contains(&self, instance: &SymbolicPolyring, point: &[Vec<BigInt>]) -> Result<bool, ZariskiError> {
        Ok(match self {
            Resolved::Graph(t) => {
                let (last, rest) = point.split_last().expect("non-empty point");
                &evaluate(instance, t, rest)? == last
            }
            Resolved::Explicit(points) => points.iter().any(|p| p == point),
            Resolved::Union(parts) => {
                for p in parts {
                    if p.contains(instance, point)? {
                        return Ok(true);
                    }
                }
                false
            }
        })
    }
}

/// Limits for [`nowhere_dense_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// systematic sweep draws element coordinates from `1..=window`
    pub window: i64,
    /// cap on candidates in the systematic sweep
    pub max_nodes: u64,
    /// number of random candidates tried afterwards
    pub random_trials: u64,
    /// random element coordinates lie in `-random_range..=random_range`
    pub random_range: i64,
    pub seed: u64,
    #[serde(skip)]
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            window: 6,
            max_nodes: 100_000,
            random_trials: 10_000,
            random_range: 50,
            seed: 0,
            time_limit: None,
        }
    }
}

/// A re-checkable witness that some `F` vanishes on a product of finite-sum
/// sets avoiding `A`, together with the value of `F` at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub instance: SymbolicPolyring,
    pub n: u32,
    pub terms: Vec<String>,
    pub a: FiniteValued,
    pub m: usize,
    /// `n + 1` sequences of `m + 1` distinct elements each
    pub sequences: Vec<Vec<Vec<i64>>>,
    pub term_index: usize,
    pub grid_points: usize,
    pub zero_in_root_set: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub systematic: u64,
    pub random: u64,
    /// candidates rejected because the grid met `A`
    pub blocked_by_a: u64,
    /// candidates whose grid was covered but by no single root set
    pub split: u64,
    pub timed_out: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CertificateOutcome {
    Found {
        certificate: Box<Certificate>,
        stats: SearchStats,
    },
    NotFound {
        stats: SearchStats,
        /// every examined grid met `A`
        cover_too_tight: bool,
    },
}

/// Inputs of a search, resolved once.
pub struct CertificateSearch<'a> {
    instance: &'a SymbolicPolyring,
    n: u32,
    terms: Vec<Term>,
    a: Resolved,
    m: usize,
}

enum Verdict {
    BlockedByA,
    Split,
    Inside(usize),
}

impl<'a> CertificateSearch<'a> {
    pub fn new(
        instance: &'a SymbolicPolyring,
        n: u32,
        terms: &[String],
        a: &FiniteValued,
        m: usize,
    ) -> Result<Self, ZariskiError> {
        if terms.is_empty() {
            return Err(ZariskiError::Invalid("at least one term is needed".into()));
        }
        let sig = instance.signature();
        let parsed = terms
            .iter()
            .map(|t| parse_term(t, &sig, n + 1))
            .collect::<Result<Vec<_>, _>>()?;
        let vars = var_range(n + 1);
        let max_degree = parsed.iter().map(|t| degree(t, &vars).value).max().unwrap_or(0);
        if max_degree > m {
            return Err(ZariskiError::DegreeTooHigh { degree: max_degree, m });
        }
        Ok(CertificateSearch {
            instance,
            n,
            terms: parsed,
            a: a.resolve(instance, n)?,
            m,
        })
    }

    fn grid(&self, sequences: &[Vec<Vec<i64>>]) -> Vec<Vec<Vec<BigInt>>> {
        let axes: Vec<Vec<Vec<BigInt>>> = sequences
            .iter()
            .map(|seq| finite_sums(&seq.iter().map(|e| self.instance.element(e)).collect::<Vec<_>>()))
            .collect();
        let mut points: Vec<Vec<Vec<BigInt>>> = vec![Vec::new()];
        for axis in &axes {
            points = points
                .into_iter()
                .flat_map(|p| {
                    axis.iter().map(move |v| {
                        let mut q = p.clone();
                        q.push(v.clone());
                        q
                    })
                })
                .collect();
        }
        points
    }

    fn judge(&self, sequences: &[Vec<Vec<i64>>]) -> Result<Verdict, ZariskiError> {
        let grid = self.grid(sequences);
        for p in &grid {
            if self.a.contains(self.instance, p)? {
                return Ok(Verdict::BlockedByA);
            }
        }
        let mut alive: Vec<bool> = vec![true; self.terms.len()];
        for p in &grid {
            let mut any = false;
            for (i, t) in self.terms.iter().enumerate() {
                let zero = evaluate(self.instance, t, p)?.iter().all(Zero::is_zero);
                any |= zero;
                alive[i] &= zero;
            }
            if !any {
                let shown = p
                    .iter()
                    .map(|e| e.iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect())
                    .collect();
                return Err(ZariskiError::CoverViolation(shown));
            }
        }
        Ok(match alive.iter().position(|&b| b) {
            Some(i) => Verdict::Inside(i),
            None => Verdict::Split,
        })
    }

    fn certificate(&self, terms: &[String], a: &FiniteValued, sequences: Vec<Vec<Vec<i64>>>, idx: usize) -> Result<Certificate, ZariskiError> {
        let origin = vec![self.instance.element(&vec![0; self.instance.dimension()]); self.n as usize + 1];
        let zero_in_root_set = evaluate(self.instance, &self.terms[idx], &origin)?.iter().all(Zero::is_zero);
        Ok(Certificate {
            instance: self.instance.clone(),
            n: self.n,
            terms: terms.to_vec(),
            a: a.clone(),
            m: self.m,
            grid_points: self.grid(&sequences).len(),
            sequences,
            term_index: idx,
            zero_in_root_set,
        })
    }
}

/// All sums over non-empty index sets, without repetition.
fn finite_sums(seq: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out = BTreeSet::new();
    for mask in 1u64..(1 << seq.len()) {
        let mut acc = vec![BigInt::zero(); seq[0].len()];
        for (i, e) in seq.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (a, x) in acc.iter_mut().zip(e) {
                    *a += x;
                }
            }
        }
        out.insert(acc);
    }
    out.into_iter().collect()
}

const CHUNK: usize = 256;

/// Looks for sequences `(a_{i,k})_{k<=m}` of distinct elements, one per
/// coordinate of `K^(n+1)`, whose product of finite-sum sets avoids `A` and
/// lies inside the root set of a single term. Candidates come from a
/// lexicographic sweep over a small window, then from seeded random draws.
///
/// A grid point outside `A` and outside every root set means the sets do not
/// cover the space, which is reported as an error.
pub fn nowhere_dense_certificate(
    instance: &SymbolicPolyring,
    n: u32,
    terms: &[String],
    a: &FiniteValued,
    m: usize,
    budget: &SearchBudget,
) -> Result<CertificateOutcome, ZariskiError> {
    if m >= 16 {
        return Err(ZariskiError::Invalid("m must be below 16".into()));
    }
    if budget.window < 1 || budget.random_range < 1 {
        return Err(ZariskiError::Invalid("window and random range must be positive".into()));
    }
    let search = CertificateSearch::new(instance, n, terms, a, m)?;
    let d = instance.dimension();
    let coords = n as usize + 1;
    let start = Instant::now();
    let mut stats = SearchStats::default();

    let pool = element_pool(budget.window, d);
    let mut combos: Vec<Vec<usize>> = vec![(0..=m).collect(); coords];
    let mut exhausted = pool.len() < m + 1;
    let out_of_time = |stats: &mut SearchStats| {
        let over = budget.time_limit.is_some_and(|t| start.elapsed() > t);
        stats.timed_out |= over;
        over
    };

    let finish = |stats: &mut SearchStats, batch: Vec<Vec<Vec<Vec<i64>>>>, random: bool| -> Result<Option<CertificateOutcome>, ZariskiError> {
        let verdicts: Vec<Result<Verdict, ZariskiError>> = batch.par_iter().map(|c| search.judge(c)).collect();
        for (cand, v) in batch.into_iter().zip(verdicts) {
            if random {
                stats.random += 1;
            } else {
                stats.systematic += 1;
            }
            match v? {
                Verdict::BlockedByA => stats.blocked_by_a += 1,
                Verdict::Split => stats.split += 1,
                Verdict::Inside(i) => {
                    let certificate = search.certificate(terms, a, cand, i)?;
                    return Ok(Some(CertificateOutcome::Found {
                        certificate: Box::new(certificate),
                        stats: stats.clone(),
                    }));
                }
            }
        }
        Ok(None)
    };

    while !exhausted && stats.systematic < budget.max_nodes && !out_of_time(&mut stats) {
        let room = (budget.max_nodes - stats.systematic).min(CHUNK as u64) as usize;
        let mut batch = Vec::with_capacity(room);
        while batch.len() < room && !exhausted {
            batch.push(combos.iter().map(|c| c.iter().map(|&i| pool[i].clone()).collect()).collect());
            exhausted = !next_candidate(&mut combos, pool.len());
        }
        if let Some(found) = finish(&mut stats, batch, false)? {
            return Ok(found);
        }
    }

    let range = (2 * budget.random_range + 1) as usize;
    let mut trial = 0u64;
    while trial < budget.random_trials && !out_of_time(&mut stats) {
        let count = (budget.random_trials - trial).min(CHUNK as u64);
        let batch: Vec<Vec<Vec<Vec<i64>>>> = (trial..trial + count)
            .into_par_iter()
            .map(|t| random_candidate(budget.seed, t, coords, m + 1, d, range, budget.random_range))
            .collect();
        trial += count;
        if let Some(found) = finish(&mut stats, batch, true)? {
            return Ok(found);
        }
    }

    let examined = stats.systematic + stats.random;
    Ok(CertificateOutcome::NotFound {
        cover_too_tight: examined > 0 && stats.blocked_by_a == examined,
        stats,
    })
}

/// Vectors in `{1..=window}^d`, in lexicographic order.
fn element_pool(window: i64, d: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=window).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Advances the tuple of increasing index sequences, last coordinate fastest.
fn next_candidate(combos: &mut [Vec<usize>], pool: usize) -> bool {
    for c in combos.iter_mut().rev() {
        if next_combination(c, pool) {
            return true;
        }
        for (i, v) in c.iter_mut().enumerate() {
            *v = i;
        }
    }
    false
}

fn next_combination(c: &mut [usize], pool: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < pool - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn random_candidate(seed: u64, trial: u64, coords: usize, len: usize, d: usize, range: usize, r: i64) -> Vec<Vec<Vec<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let total = range.pow(d as u32);
    (0..coords)
        .map(|_| {
            let mut picks = sample(&mut rng, total, len).into_vec();
            picks.sort_unstable();
            picks
                .into_iter()
                .map(|mut code| {
                    let mut e = vec![0i64; d];
                    for slot in e.iter_mut().rev() {
                        *slot = (code % range) as i64 - r;
                        code /= range;
                    }
                    e
                })
                .collect()
        })
        .collect()
}

/// Outcome of re-checking a certificate from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub shapes_ok: bool,
    pub distinct: bool,
    pub degree_ok: bool,
    pub avoids_a: bool,
    pub inside_root_set: bool,
    pub zero_in_root_set: bool,
    pub valid: bool,
}

/// Recomputes the grid of `cert` and every claim made about it.
pub fn verify_certificate(cert: &Certificate) -> Result<CertificateCheck, ZariskiError> {
    let d = cert.instance.dimension();
    let shapes_ok = cert.sequences.len() == cert.n as usize + 1
        && cert.term_index < cert.terms.len()
        && cert
            .sequences
            .iter()
            .all(|s| s.len() == cert.m + 1 && s.iter().all(|e| e.len() == d));
    if !shapes_ok {
        return Ok(CertificateCheck {
            shapes_ok,
            distinct: false,
            degree_ok: false,
            avoids_a: false,
            inside_root_set: false,
            zero_in_root_set: false,
            valid: false,
        });
    }
    let distinct = cert
        .sequences
        .iter()
        .all(|s| s.iter().collect::<BTreeSet<_>>().len() == s.len());
    let (search, degree_ok) = match CertificateSearch::new(&cert.instance, cert.n, &cert.terms, &cert.a, cert.m) {
        Ok(s) => (s, true),
        Err(ZariskiError::DegreeTooHigh { .. }) => {
            let big = usize::MAX / 2;
            (CertificateSearch::new(&cert.instance, cert.n, &cert.terms, &cert.a, big)?, false)
        }
        Err(e) => return Err(e),
    };
    let grid = search.grid(&cert.sequences);
    let mut avoids_a = true;
    let mut inside_root_set = true;
    let f = &search.terms[cert.term_index];
    for p in &grid {
        avoids_a &= !search.a.contains(&cert.instance, p)?;
        inside_root_set &= evaluate(&cert.instance, f, p)?.iter().all(Zero::is_zero);
    }
    let origin = vec![cert.instance.element(&vec![0; d]); cert.n as usize + 1];
    let zero_in_root_set = evaluate(&cert.instance, f, &origin)?.iter().all(Zero::is_zero);
    Ok(CertificateCheck {
        shapes_ok,
        distinct,
        degree_ok,
        avoids_a,
        inside_root_set,
        zero_in_root_set,
        valid: distinct
            && degree_ok
            && avoids_a
            && inside_root_set
            && zero_in_root_set
            && zero_in_root_set == cert.zero_in_root_set
            && grid.len() == cert.grid_points,
    })
}
