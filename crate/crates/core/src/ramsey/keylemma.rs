use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::RamseyError;
use crate::algebras::{direct_product, enumerate_distributive_ops, CompiledTerm, EnumMode, FinitePolyring};
use crate::terms::{degree, var_range, Term};

/// Largest number of tuples examined in exhaustive mode.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 26;

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KeyLemmaMode {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyLemmaReport {
    pub term: String,
    pub n_vars: u32,
    pub degree: usize,
    /// number of vectors in each tuple, `degree + 1`
    pub tuple_length: usize,
    pub examined: u64,
    /// tuples on whose finite sums the term does not vanish
    pub vacuous: u64,
    /// tuples where it vanishes on the finite sums and at zero
    pub confirming: u64,
}

enum Outcome {
    Vacuous,
    Confirming,
    Counterexample(u32),
}

struct Checker<'a> {
    r: &'a FinitePolyring,
    code: CompiledTerm,
    n: usize,
    len: usize,
}

impl Checker<'_> {
    /// `tuple` holds `len` vectors of `n` coordinates, flattened.
    fn check(&self, tuple: &[u32]) -> Outcome {
        let mut stack = Vec::new();
        let mut sum = vec![0u32; self.n];
        for mask in 1u64..(1 << self.len) {
            sum.iter_mut().for_each(|s| *s = 0);
            for i in 0..self.len {
                if mask >> i & 1 == 1 {
                    for (s, &a) in sum.iter_mut().zip(&tuple[i * self.n..(i + 1) * self.n]) {
                        *s = self.r.plus(*s, a);
                    }
                }
            }
            if self.code.eval(self.r, &sum, &mut stack) != 0 {
                return Outcome::Vacuous;
            }
        }
        match self.code.eval(self.r, &vec![0; self.n], &mut stack) {
            0 => Outcome::Confirming,
            v => Outcome::Counterexample(v),
        }
    }

    fn unflatten(&self, tuple: &[u32]) -> Vec<Vec<u32>> {
        tuple.chunks(self.n.max(1)).map(|c| c.to_vec()).collect::<Vec<_>>()
    }
}

/// Checks the Key Lemma for `term` on `instance`: whenever the term vanishes
/// on all finite sums of `d + 1` vectors of `K^n`, where `d` is its degree,
/// it vanishes at zero. Stops at the first counterexample.
pub fn verify_key_lemma(
    instance: &FinitePolyring,
    term: &Term,
    n_vars: u32,
    mode: KeyLemmaMode,
) -> Result<KeyLemmaReport, RamseyError> {
    if n_vars == 0 || term.max_var() > n_vars {
        return Err(RamseyError::Invalid(format!(
            "term uses x{} but n_vars is {n_vars}",
            term.max_var()
        )));
    }
    let d = degree(term, &var_range(n_vars)).value;
    let n = n_vars as usize;
    let len = d + 1;
    if len > 20 {
        return Err(RamseyError::TooLarge(format!("degree {d}")));
    }
    let checker = Checker {
        r: instance,
        code: instance.compile(term)?,
        n,
        len,
    };
    let size = instance.size() as u64;
    let width = (n * len) as u32;

    let (total, pick): (u64, Box<dyn Fn(u64) -> Vec<u32> + Sync>) = match mode {
        KeyLemmaMode::Exhaustive => {
            let total = size
                .checked_pow(width)
                .filter(|&t| t <= EXHAUSTIVE_LIMIT)
                .ok_or_else(|| RamseyError::TooLarge(format!("{size}^{width} tuples")))?;
            (
                total,
                Box::new(move |mut idx| {
                    let mut t = vec![0u32; width as usize];
                    for slot in t.iter_mut().rev() {
                        *slot = (idx % size) as u32;
                        idx /= size;
                    }
                    t
                }),
            )
        }
        KeyLemmaMode::Random { trials, seed } => (
            trials,
            Box::new(move |trial| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(trial);
                (0..width).map(|_| rng.gen_range(0..size) as u32).collect()
            }),
        ),
    };

    let chunks: Vec<(u64, u64)> = (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect();
    let counts = chunks
        .into_par_iter()
        .map(|(lo, hi)| {
            let (mut vacuous, mut confirming) = (0u64, 0u64);
            for idx in lo..hi {
                let t = pick(idx);
                match checker.check(&t) {
                    Outcome::Vacuous => vacuous += 1,
                    Outcome::Confirming => confirming += 1,
                    Outcome::Counterexample(value) => {
                        return Err(RamseyError::Counterexample {
                            tuple: checker.unflatten(&t),
                            value,
                        })
                    }
                }
            }
            Ok((vacuous, confirming))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (vacuous, confirming) = counts.iter().fold((0, 0), |(v, c), &(a, b)| (v + a, c + b));
    Ok(KeyLemmaReport {
        term: term.to_string(),
        n_vars,
        degree: d,
        tuple_length: len,
        examined: total,
        vacuous,
        confirming,
    })
}

/// Additive groups used by [`key_lemma_campaign`]: cyclic groups of order
/// up to 12 and the non-cyclic products of order at most 12.
pub fn campaign_groups() -> Vec<FinitePolyring> {
    let mut out: Vec<FinitePolyring> = (1..=12).map(FinitePolyring::cyclic_group).collect();
    for dims in [&[2, 2][..], &[2, 4], &[2, 2, 2], &[3, 3], &[2, 6]] {
        let parts: Vec<FinitePolyring> = dims.iter().map(|&m| FinitePolyring::cyclic_group(m)).collect();
        out.push(direct_product(&parts).expect("small product"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub trials: u64,
    pub instances: usize,
    pub max_degree: usize,
    pub vacuous: u64,
    pub confirming: u64,
    /// trials per term degree
    pub by_degree: Vec<u64>,
}

/// A random term over `ops` in `x_1..x_n` with constants, sums and
/// negations, of depth at most `depth`.
fn random_term(rng: &mut ChaCha8Rng, r: &FinitePolyring, ops: &[(String, usize)], n: u32, depth: u32) -> Term {
    let leaf = |rng: &mut ChaCha8Rng| match rng.gen_range(0..4) {
        0 => Term::elem(rng.gen_range(0..r.size() as u32)),
        _ => Term::var(rng.gen_range(1..=n)),
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..6) {
        0 => leaf(rng),
        1 | 2 => Term::sum(random_term(rng, r, ops, n, depth - 1), random_term(rng, r, ops, n, depth - 1)),
        3 => Term::neg(random_term(rng, r, ops, n, depth - 1)),
        _ => {
            let (name, arity) = ops.choose(rng).expect("non-empty");
            Term::app(name, (0..*arity).map(|_| random_term(rng, r, ops, n, depth - 1)).collect())
        }
    }
}

/// Random Key Lemma trials: each trial draws an instance (a group from
/// [`campaign_groups`] with one unary and one binary multi-additive
/// operation drawn from the full enumeration), a term of degree at most
/// `max_degree` in one or two variables, and one tuple.
pub fn key_lemma_campaign(trials: u64, seed: u64, max_degree: usize) -> Result<CampaignReport, RamseyError> {
    let groups = campaign_groups();
    let tables: Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)> = groups
        .par_iter()
        .map(|g| {
            let unary = enumerate_distributive_ops(g, 1, 1 << 20, EnumMode::Structural)?;
            let binary = enumerate_distributive_ops(g, 2, 1 << 20, EnumMode::Structural)?;
            Ok((unary.tables, binary.tables))
        })
        .collect::<Result<_, crate::algebras::AlgebraError>>()?;
    let ops = vec![("f".to_string(), 1), ("m".to_string(), 2)];

    let results = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<(usize, bool), RamseyError> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let gi = rng.gen_range(0..groups.len());
            let (unary, binary) = &tables[gi];
            let r = groups[gi]
                .clone()
                .with_op("f", 1, unary.choose(&mut rng).expect("zero map").clone())?
                .with_op("m", 2, binary.choose(&mut rng).expect("zero map").clone())?;
            let n = rng.gen_range(1..=2u32);
            let term = loop {
                let t = random_term(&mut rng, &r, &ops, n, 4);
                if degree(&t, &var_range(n)).value <= max_degree {
                    break t;
                }
            };
            let report = verify_key_lemma(
                &r,
                &term,
                n,
                KeyLemmaMode::Random {
                    trials: 1,
                    seed: rng.gen(),
                },
            )?;
            Ok((report.degree, report.confirming == 1))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut by_degree = vec![0u64; max_degree + 1];
    let mut confirming = 0;
    for &(d, c) in &results {
        by_degree[d] += 1;
        confirming += c as u64;
    }
    Ok(CampaignReport {
        trials,
        instances: groups.len(),
        max_degree,
        vacuous: trials - confirming,
        confirming,
        by_degree,
    })
}
