//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p polyring-lab --test acceptance`. The process
//! fails when a criterion disagrees with its recorded expectation; a
//! criterion that is known to be unattainable is printed as FAIL together
//! with the checked analysis of why.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use polyring_core::algebras::{enumerate_distributive_ops, evaluate, EnumMode, FinitePolyring};
use polyring_core::ramsey::{
    campaign_groups, fs_set, key_lemma_campaign, schur_number, verify_key_lemma, KeyLemmaMode,
};
use polyring_core::semigroups::{associative_tables, find_idempotents, idempotent_power};
use polyring_core::terms::{degree, normalize, shift_decompose, sum_decompose, var_range, Term};
use polyring_core::zariski::{
    affine_closure_in_window, analyze, closed_base, term_clone, vanishing_affine_terms, verify_cantor_example,
    Pseudocharacter,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_polyring-lab");

const FS_135: [u64; 7] = [1, 3, 4, 5, 6, 8, 9];
const SCHUR: [(u32, u64); 3] = [(1, 1), (2, 4), (3, 13)];
const SCHUR_R2_LIMIT: Duration = Duration::from_secs(1);
const SCHUR_R3_LIMIT: Duration = Duration::from_secs(60);
const CAMPAIGN_TRIALS: u64 = 10_000;
const CAMPAIGN_MAX_DEGREE: usize = 3;
const CAMPAIGN_SEED: u64 = 20_240_601;
const MAX_COUNTEREXAMPLES: u64 = 0;
const KEY_LEMMA_LIMIT: Duration = Duration::from_secs(300);
const DECOMPOSITION_LIMIT: Duration = Duration::from_secs(120);
const CANTOR_M: std::ops::RangeInclusive<u32> = 1..=8;
const CANTOR_LIMIT: Duration = Duration::from_secs(30);
const CLONE_CAP: usize = 4096;
const IDEMPOTENT_SAMPLES: usize = 1_000;
const CORPUS_ORDERS: std::ops::RangeInclusive<usize> = 1..=4;
const THREAD_COUNTS: [&str; 2] = ["1", "8"];

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

fn cli(args: &[&str], threads: &str) -> (i32, Vec<u8>) {
    let out = Command::new(BIN)
        .args(args)
        .env("POLYRING_LAB_THREADS", threads)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn cli_json(args: &[&str]) -> Value {
    let (code, out) = cli(args, "1");
    assert!(code == 0 || code == 1, "{args:?} exited with {code}");
    serde_json::from_slice(&out).expect("json report")
}

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Every point of `K^n`, x1 most significant.
fn points(size: usize, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..size as u32).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

/// All terms of depth at most `depth` over `leaves` with a unary `f`, a
/// binary `m`, sums and negation.
fn terms_up_to(leaves: &[Term], depth: usize) -> Vec<Term> {
    let mut all = leaves.to_vec();
    for _ in 0..depth {
        let prev = all.clone();
        let mut next = leaves.to_vec();
        for a in &prev {
            next.push(Term::app("f", vec![a.clone()]));
            next.push(Term::neg(a.clone()));
            for b in &prev {
                next.push(Term::app("m", vec![a.clone(), b.clone()]));
                next.push(Term::sum(a.clone(), b.clone()));
            }
        }
        all = next;
    }
    all
}

fn random_term(rng: &mut ChaCha8Rng, leaves: &[Term], depth: usize) -> Term {
    if depth == 0 || rng.gen_range(0..5) == 0 {
        return leaves.choose(rng).expect("leaves").clone();
    }
    match rng.gen_range(0..4) {
        0 => Term::app("f", vec![random_term(rng, leaves, depth - 1)]),
        1 => Term::neg(random_term(rng, leaves, depth - 1)),
        2 => Term::sum(random_term(rng, leaves, depth - 1), random_term(rng, leaves, depth - 1)),
        _ => Term::app(
            "m",
            vec![random_term(rng, leaves, depth - 1), random_term(rng, leaves, depth - 1)],
        ),
    }
}

/// Groups from the campaign family up to `max_size`, each expanded with
/// pairs of a unary `f` and a binary `m` from the full enumeration of
/// multi-additive maps. At most 16 evenly spaced pairs per group.
fn instances(max_size: usize) -> Vec<FinitePolyring> {
    let mut out = Vec::new();
    for g in campaign_groups().into_iter().filter(|g| g.size() <= max_size) {
        let unary = enumerate_distributive_ops(&g, 1, 1 << 20, EnumMode::Structural).unwrap().tables;
        let binary = enumerate_distributive_ops(&g, 2, 1 << 20, EnumMode::Structural).unwrap().tables;
        let count = unary.len().max(binary.len()).min(16);
        for i in 0..count {
            let u = &unary[i * unary.len() / count];
            let b = &binary[i * binary.len() / count];
            out.push(g.clone().with_op("f", 1, u.clone()).unwrap().with_op("m", 2, b.clone()).unwrap());
        }
    }
    out
}

fn leaves(r: &FinitePolyring, n: u32) -> Vec<Term> {
    let mut l: Vec<Term> = (1..=n).map(Term::var).collect();
    l.push(Term::elem(1 % r.size() as u32));
    l
}

/// Terms checked for an instance: every term of depth at most 2 in n
/// variables plus seeded random terms of depth 3.
fn term_family(r: &FinitePolyring, n: u32, seed: u64) -> Vec<Term> {
    let leaves = leaves(r, n);
    let mut family = terms_up_to(&leaves, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    family.extend((0..200).map(|_| random_term(&mut rng, &leaves, 3)));
    family
}

fn eval(r: &FinitePolyring, t: &Term, p: &[u32]) -> u32 {
    evaluate(r, t, p).expect("closed term over the instance")
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let v = cli_json(&["ramsey", "fs", "1,3,5"]);
    let elapsed = start.elapsed();
    let got: Vec<u64> = v["fs"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    let lib: Vec<u128> = fs_set(&[1, 3, 5], None).unwrap().into_iter().collect();
    let want: Vec<u128> = FS_135.iter().map(|&x| x as u128).collect();
    Verdict::new(
        got == FS_135 && lib == want,
        format!("FS(1,3,5) = {got:?}; CLI round trip {elapsed:?}"),
    )
}

/// No monochromatic `x + y = z` with `x <= y`, colors of `1..=n`.
fn schur_free(colors: &[u32]) -> bool {
    let n = colors.len();
    (1..=n).all(|x| (x..=n - x).all(|y| !(colors[x - 1] == colors[y - 1] && colors[y - 1] == colors[x + y - 1])))
}

/// Largest n such that some r-coloring of 1..=n is sum-free, by trying
/// every coloring.
fn schur_by_enumeration(r: u32) -> u64 {
    let mut n = 0u64;
    loop {
        let len = n as usize + 1;
        let total = (r as u64).pow(len as u32);
        let any = (0..total).any(|code| {
            let colors: Vec<u32> = (0..len).map(|i| (code / (r as u64).pow(i as u32) % r as u64) as u32).collect();
            schur_free(&colors)
        });
        if !any {
            return n;
        }
        n += 1;
    }
}

/// Plain backtracking without symmetry breaking: can 1..=n be r-colored?
fn extends(colors: &mut Vec<u32>, n: usize, r: u32) -> bool {
    if colors.len() == n {
        return true;
    }
    let k = colors.len() + 1;
    for c in 0..r {
        if (1..=k / 2).all(|x| !(colors[x - 1] == c && colors[k - x - 1] == c)) {
            colors.push(c);
            if extends(colors, n, r) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

fn criterion_2() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for (r, want) in SCHUR {
        let start = Instant::now();
        let s = schur_number(r, None).unwrap();
        let elapsed = start.elapsed();
        let cert_ok = s.certificate.colors().len() as u64 == s.n && schur_free(s.certificate.colors());
        let oracle = match r {
            1 | 2 => schur_by_enumeration(r),
            _ => {
                let n = want as usize;
                let below = extends(&mut Vec::new(), n, r);
                let above = extends(&mut Vec::new(), n + 1, r);
                if below && !above {
                    want
                } else {
                    0
                }
            }
        };
        let limit = if r == 3 { SCHUR_R3_LIMIT } else { SCHUR_R2_LIMIT };
        let ok = s.n == want && oracle == want && cert_ok && elapsed < limit;
        pass &= ok;
        notes.push(format!("S({r})={} oracle {oracle} in {elapsed:?}", s.n));
    }
    Verdict::new(pass, notes.join("; "))
}

/// Exhaustive Key Lemma check: every instance of carrier at most 4, every
/// term of depth at most 2 in one or two variables whose degree is at most
/// 2 (deduplicated by normal form), every tuple.
fn key_lemma_exhaustive() -> (u64, u64, usize, Vec<String>) {
    let results: Vec<(u64, u64, usize, Vec<String>)> = instances(4)
        .par_iter()
        .map(|r| {
            let mut tuples = 0;
            let mut confirming = 0;
            let mut checked = 0;
            let mut errors = Vec::new();
            for n in 1..=2u32 {
                let mut seen = BTreeSet::new();
                for t in terms_up_to(&leaves(r, n), 2) {
                    if degree(&t, &var_range(n)).value > 2 || !seen.insert(normalize(&t).to_string()) {
                        continue;
                    }
                    checked += 1;
                    match verify_key_lemma(r, &t, n, KeyLemmaMode::Exhaustive) {
                        Ok(rep) => {
                            tuples += rep.examined;
                            confirming += rep.confirming;
                        }
                        Err(e) => errors.push(format!("{t}: {e}")),
                    }
                }
            }
            (tuples, confirming, checked, errors)
        })
        .collect();
    results.into_iter().fold((0, 0, 0, Vec::new()), |mut a, b| {
        a.3.extend(b.3);
        (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3)
    })
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let campaign = key_lemma_campaign(CAMPAIGN_TRIALS, CAMPAIGN_SEED, CAMPAIGN_MAX_DEGREE);
    let (tuples, confirming, terms, errors) = key_lemma_exhaustive();
    let elapsed = start.elapsed();
    match campaign {
        Ok(_) if !errors.is_empty() => Verdict::new(false, format!("exhaustive check: {}", errors[0])),
        Ok(c) => {
            let counterexamples = c.trials - c.vacuous - c.confirming;
            Verdict::new(
                c.trials >= CAMPAIGN_TRIALS && counterexamples <= MAX_COUNTEREXAMPLES && elapsed < KEY_LEMMA_LIMIT,
                format!(
                    "{} random trials over {} groups, degrees {:?}, {} confirming, 0 counterexamples; exhaustive: \
                     {terms} terms, {tuples} tuples, {confirming} confirming, 0 counterexamples; {elapsed:?}",
                    c.trials, c.instances, c.by_degree, c.confirming
                ),
            )
        }
        Err(e) => Verdict::new(false, format!("campaign failed: {e}")),
    }
}

/// Decomposition identities, checked pointwise on the whole of `K^n` and
/// `K^2n`. Returns (terms, failures).
fn decompositions(r: &FinitePolyring, n: u32, seed: u64) -> (usize, Vec<String>) {
    let xs = var_range(n);
    let pts = points(r.size(), n as usize);
    let mut failures = Vec::new();
    let mut count = 0;
    for f in term_family(r, n, seed) {
        let d = degree(&f, &xs).value;
        if d == 0 {
            continue;
        }
        count += 1;
        let g = sum_decompose(&f, n).unwrap();
        if g.degree(&xs).value >= d {
            failures.push(format!("deg_x G >= deg F for {f}"));
        }
        let code = |t: &Term| r.compile(t).expect("closed term over the instance");
        let mut stack = Vec::new();
        let fc = code(&f);
        let gc = code(&g.to_term());
        let fv: Vec<u32> = pts.iter().map(|p| fc.eval(r, p, &mut stack)).collect();
        for (i, x) in pts.iter().enumerate() {
            for (j, y) in pts.iter().enumerate() {
                let xy: Vec<u32> = x.iter().zip(y).map(|(&a, &b)| r.plus(a, b)).collect();
                let joined: Vec<u32> = x.iter().chain(y).copied().collect();
                let rhs = r.plus(r.plus(fv[i], fv[j]), gc.eval(r, &joined, &mut stack));
                if fc.eval(r, &xy, &mut stack) != rhs {
                    failures.push(format!("sum identity for {f} at {x:?}, {y:?}"));
                }
            }
        }
        for a in &pts {
            let h = shift_decompose(&f, n, r, a).unwrap();
            if h.degree(&xs).value >= d {
                failures.push(format!("deg H >= deg F for {f} at {a:?}"));
            }
            let hc = code(&h.to_term());
            for (i, x) in pts.iter().enumerate() {
                let xa: Vec<u32> = x.iter().zip(a).map(|(&p, &q)| r.plus(p, q)).collect();
                if fc.eval(r, &xa, &mut stack) != r.plus(fv[i], hc.eval(r, x, &mut stack)) {
                    failures.push(format!("shift identity for {f} at {a:?}, {x:?}"));
                }
            }
        }
    }
    (count, failures)
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let family = instances(6);
    let results: Vec<(usize, Vec<String>)> = family
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, r)| (1..=2u32).map(move |n| decompositions(r, n, i as u64 * 2 + n as u64)))
        .collect();
    let elapsed = start.elapsed();
    let terms: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<&String> = results.iter().flat_map(|r| &r.1).collect();
    Verdict::new(
        failures.is_empty() && elapsed < DECOMPOSITION_LIMIT,
        match failures.first() {
            None => format!("{} instances, {terms} terms of positive degree, n <= 2, {elapsed:?}", family.len()),
            Some(f) => format!("{} failures, first: {f}", failures.len()),
        },
    )
}

fn criterion_5() -> Verdict {
    let family = instances(6);
    let results: Vec<(usize, Vec<String>)> = family
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, r)| {
            (1..=2u32).map(move |n| {
                let pts = points(r.size(), n as usize);
                let mut bad = Vec::new();
                let terms = term_family(r, n, i as u64 * 2 + n as u64);
                for t in &terms {
                    let p = normalize(t).to_term();
                    if let Some(x) = pts.iter().find(|x| eval(r, t, x) != eval(r, &p, x)) {
                        bad.push(format!("{t} at {x:?}"));
                    }
                }
                (terms.len(), bad)
            })
        })
        .collect();
    let terms: usize = results.iter().map(|r| r.0).sum();
    let failures: Vec<&String> = results.iter().flat_map(|r| &r.1).collect();
    Verdict::new(
        failures.is_empty(),
        match failures.first() {
            None => format!("{} instances, {terms} terms agree with their normal forms everywhere", family.len()),
            Some(f) => format!("{} failures, first: {f}", failures.len()),
        },
    )
}

/// The complement identity is claimed for every `a`. It holds exactly for
/// the `a` with a single nonzero coordinate: for `a = 0` both root sets are
/// everything, and for two or more nonzero coordinates both miss the
/// points that agree with neither pattern. The verdict stays red; what is
/// checked is that the failures are precisely the predicted ones.
fn criterion_6() -> (Verdict, bool) {
    let start = Instant::now();
    let mut analysis_holds = true;
    let mut failures = 0usize;
    let mut total = 0usize;
    for m in CANTOR_M {
        let rep = verify_cantor_example(m).unwrap();
        let predicted: Vec<u32> = (0..1u32 << m).filter(|a| a.count_ones() != 1).collect();
        analysis_holds &= rep.complement_failures == predicted
            && rep.complement_for_unit_vectors
            && rep.disjoint_for_nonzero
            && rep.cylinders_algebraic
            && rep.cylinders.len() == 2 * m as usize;
        failures += rep.complement_failures.len();
        total += 1 << m;
    }
    let elapsed = start.elapsed();
    analysis_holds &= elapsed < CANTOR_LIMIT;
    (
        Verdict::new(
            false,
            format!(
                "identity fails for {failures} of {total} values of a over m = 1..8, exactly those with popcount != 1 \
                 (a = 0 gives S = K twice); all 2m cylinders are algebraic; unattainable as stated; {elapsed:?}"
            ),
        ),
        analysis_holds,
    )
}

fn criterion_7() -> Verdict {
    let mut family: Vec<(String, FinitePolyring, u32)> = Vec::new();
    for m in 1..=6 {
        for n in 1..=2 {
            family.push((format!("Z{m} group"), FinitePolyring::cyclic_group(m), n));
            family.push((format!("Z{m} ring"), FinitePolyring::cyclic_ring(m), n));
        }
    }
    for m in 2..=3 {
        family.push((format!("F2^{m}"), polyring_core::zariski::boolean_power(m).unwrap(), 1));
    }
    for (i, r) in instances(8).into_iter().enumerate().step_by(5) {
        family.push((format!("expanded #{i}"), r, 1));
    }
    // A capped clone gives a coarser topology, so a discrete result from it
    // is discrete for the full clone as well.
    let results: Vec<(bool, Option<String>)> = family
        .par_iter()
        .map(|(name, r, n)| {
            let clone = term_clone(r, *n, CLONE_CAP).unwrap();
            let rep = analyze(&closed_base(&clone, None), None).unwrap();
            let ok = rep.discrete
                && rep.ind == 0
                && rep.space_pseudocharacter == Pseudocharacter::Finite(1)
                && rep.pseudocharacter.iter().all(|p| *p == Pseudocharacter::Finite(1));
            (clone.complete, (!ok).then(|| format!("{name}, n = {n}")))
        })
        .collect();
    let complete = results.iter().filter(|r| r.0).count();
    let bad: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    Verdict::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "{} finite spaces all discrete, ind 0, pseudocharacter 1 ({complete} from complete clones, \
                 the rest from clones capped at {CLONE_CAP} functions)",
                family.len()
            )
        } else {
            format!("not discrete: {}", bad.join(", "))
        },
    )
}

fn criterion_8() -> Verdict {
    let parabola: Vec<Vec<i64>> = (0..3).map(|a| vec![a, a * a]).collect();
    let basis = vanishing_affine_terms(&parabola).unwrap();
    let window: Vec<Vec<i64>> = (-3..=3).flat_map(|x| (-3..=9).map(move |y| vec![x, y])).collect();
    let closure = affine_closure_in_window(&parabola, &window).unwrap();
    let rows: Vec<[i64; 3]> = parabola.iter().map(|p| [p[0], p[1], 1]).collect();
    let det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    let cli = cli_json(&["zariski", "affine-closure", "--points", "0,0;1,1;2,4", "--window", "-3..3"]);
    Verdict::new(
        basis.is_empty() && det != 0 && closure.full_window && cli["full_window"] == Value::Bool(true),
        format!(
            "vanishing group terms: {}; determinant of the 3x3 system {det}; closure covers {}/{} window points",
            basis.len(),
            closure.closure.len(),
            closure.window_size
        ),
    )
}

fn criterion_9() -> Verdict {
    let mut corpus = Vec::new();
    let mut failures = Vec::new();
    for order in CORPUS_ORDERS {
        let c = associative_tables(order);
        for g in &c.tables {
            let brute = (0..order as u32).any(|e| g.mul(e, e) == e);
            if !brute || find_idempotents(g).idempotents.is_empty() {
                failures.push(format!("{:?} has no idempotent", g.table()));
            }
        }
        corpus.extend(c.tables);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CAMPAIGN_SEED);
    for _ in 0..IDEMPOTENT_SAMPLES {
        let g = corpus.choose(&mut rng).unwrap();
        let x = rng.gen_range(0..g.size() as u32);
        let e = idempotent_power(g, x).unwrap();
        let mut powers = vec![x];
        while powers.len() <= g.size() {
            powers.push(g.mul(*powers.last().unwrap(), x));
        }
        if g.mul(e, e) != e || !powers.contains(&e) {
            failures.push(format!("{:?}: idempotent_power({x}) = {e}", g.table()));
        }
    }
    Verdict::new(
        failures.is_empty(),
        match failures.first() {
            None => format!(
                "{} associative tables of order <= 4 all have idempotents; {IDEMPOTENT_SAMPLES} samples fixed",
                corpus.len()
            ),
            Some(f) => format!("{} failures, first: {f}", failures.len()),
        },
    )
}

fn criterion_10() -> Verdict {
    let z4 = data("z4-double.json");
    let commands: Vec<Vec<&str>> = vec![
        vec!["ramsey", "fs", "1,3,5"],
        vec!["ramsey", "schur-number", "1"],
        vec!["ramsey", "schur-number", "2"],
        vec!["ramsey", "schur-number", "3"],
        vec!["ramsey", "schur-number", "3", "--format", "csv"],
        vec!["ramsey", "keylemma", "--campaign", "10000", "--max-degree", "3", "--seed", "11"],
        vec!["ramsey", "keylemma", "--alg", &z4, "--term", "d(x1)"],
        vec!["ramsey", "keylemma", "--alg", &z4, "--term", "d(x1)", "--trials", "500", "--seed", "3"],
        vec!["ramsey", "schur", "--coloring", "random:3:40", "--seed", "5"],
        vec!["ramsey", "folkman", "--coloring", "random:2:60", "--n", "3", "--seed", "5"],
        vec!["zariski", "cantor", "--m", "8"],
        vec!["zariski", "analyze", "--alg", "z2-ring", "--n", "2"],
        vec!["zariski", "analyze", "--alg", "z5-ring", "--n", "1"],
        vec!["zariski", "affine-closure", "--points", "0,0;1,1;2,4", "--window", "-3..3"],
        vec!["sgrp", "corpus", "--order", "4"],
        vec!["sgrp", "ideals", "--groupoid", "z6-mul", "--format", "text"],
    ];
    let mut differing = Vec::new();
    for args in &commands {
        let runs: Vec<(i32, Vec<u8>)> = THREAD_COUNTS.iter().map(|t| cli(args, t)).collect();
        if runs.windows(2).any(|w| w[0] != w[1]) || runs[0].1.is_empty() {
            differing.push(args.join(" "));
        }
    }
    Verdict::new(
        differing.is_empty(),
        if differing.is_empty() {
            format!("{} commands byte-identical with 1 and 8 threads", commands.len())
        } else {
            format!("differs: {}", differing.join(" | "))
        },
    )
}

fn report(id: u32, name: &str, v: &Verdict) {
    println!("[{}] {id:>2} {name}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
}

fn main() {
    let mut unexpected = 0;
    let plain: [(u32, &str, fn() -> Verdict); 5] = [
        (1, "FS enumeration", criterion_1),
        (2, "Schur numbers", criterion_2),
        (3, "Key Lemma suite", criterion_3),
        (4, "decomposition identities", criterion_4),
        (5, "normalization soundness", criterion_5),
    ];
    let rest: [(u32, &str, fn() -> Verdict); 4] = [
        (7, "finite discreteness", criterion_7),
        (8, "parabola density surrogate", criterion_8),
        (9, "semigroup corpus", criterion_9),
        (10, "determinism", criterion_10),
    ];
    for (id, name, run) in plain {
        let v = run();
        report(id, name, &v);
        unexpected += !v.pass as usize;
    }
    let (cantor, analysis_holds) = criterion_6();
    report(6, "Cantor example", &cantor);
    if !analysis_holds {
        println!("       the recorded analysis of criterion 6 no longer matches the computation");
        unexpected += 1;
    }
    for (id, name, run) in rest {
        let v = run();
        report(id, name, &v);
        unexpected += !v.pass as usize;
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria disagree with their recorded expectation");
        std::process::exit(1);
    }
}
