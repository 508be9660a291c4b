use std::collections::BTreeSet;
use std::time::Duration;

use clap::Subcommand;
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use polyring_core::algebras::{
    direct_product, enumerate_distributive_ops, groupoid_ring, EnumMode, FiniteGroupoid, InstanceFile,
};
use polyring_core::ramsey::{
    folkman_search, fp_set, fs_set, hilbert_cube_search, key_lemma_campaign, product_fs_search, schur_number,
    schur_search, simultaneous_fs_fp_search, verify_key_lemma, Coloring, FreeMonoid, KeyLemmaMode, NaturalsMul,
};
use polyring_core::semigroups::{
    associative_tables, find_idempotents, idempotent_power, ideal_structure, weak_left_cancellativity,
};
use polyring_core::terms::{degree, normalize, parse_term, shift_decompose, sum_decompose, var_range, Signature, Term};
use polyring_core::zariski::{
    affine_closure_in_window, analyze, closed_base, nowhere_dense_certificate, term_clone, verify_cantor_example,
    verify_certificate, Certificate, CertificateOutcome, FiniteValued, PointSet, SearchBudget,
};

use crate::output::Table;
use crate::{inputs, CliError, Global, Outcome};

fn to_value<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Internal(e.to_string()))
}

/// Parse bound for variables when `--n` is not given.
const MAX_VARS: u32 = 64;

#[derive(Debug, Subcommand)]
pub enum TermCmd {
    /// Expand into a signed sum of monomials
    Normalize(TermArgs),
    /// Degree of the normal form in the given variables
    Degree {
        #[command(flatten)]
        t: TermArgs,
        /// comma-separated variable indices; all variables by default
        #[arg(long)]
        vars: Option<String>,
    },
    /// G with F(x + y) = F(x) + F(y) + G(x, y)
    DecomposeSum(TermArgs),
    /// H with F(x + a) = F(x) + H(x) over an instance
    DecomposeShift {
        #[command(flatten)]
        t: TermArgs,
        /// comma-separated carrier elements
        #[arg(long)]
        point: String,
    },
}

#[derive(Debug, clap::Args)]
pub struct TermArgs {
    pub term: String,
    /// operation symbols as `name:arity,..`
    #[arg(long, default_value = "m:2")]
    pub ops: String,
    /// take the signature from this instance instead
    #[arg(long)]
    pub alg: Option<String>,
    /// number of variables
    #[arg(long)]
    pub n: Option<u32>,
}

fn signature(ops: &str) -> Result<Signature, CliError> {
    let pairs = ops
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let (name, arity) = s
                .split_once(':')
                .ok_or_else(|| CliError::Invalid(format!("expected `name:arity`, got `{s}`")))?;
            let arity: usize = arity
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("bad arity in `{s}`")))?;
            Ok((name.trim().to_string(), arity))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Signature::new(pairs)?)
}

fn parse_args(t: &TermArgs) -> Result<(Term, u32), CliError> {
    let sig = match &t.alg {
        Some(a) => inputs::finite_instance(a)?.signature(),
        None => signature(&t.ops)?,
    };
    let term = parse_term(&t.term, &sig, t.n.unwrap_or(MAX_VARS))?;
    let n = t.n.unwrap_or_else(|| term.max_var().max(1));
    Ok((term, n))
}

fn term_cmd(cmd: &TermCmd) -> Result<Outcome, CliError> {
    match cmd {
        TermCmd::Normalize(t) => {
            let (term, n) = parse_args(t)?;
            let p = normalize(&term);
            Ok(Outcome::found(json!({
                "term": term.to_string(),
                "normal_form": p.to_string(),
                "monomials": p.len(),
                "degree": degree(&term, &var_range(n)).value,
            })))
        }
        TermCmd::Degree { t, vars } => {
            let (term, n) = parse_args(t)?;
            let vars: BTreeSet<u32> = match vars {
                Some(v) => inputs::int_list(v)?.into_iter().map(|i| i as u32).collect(),
                None => var_range(n),
            };
            let d = degree(&term, &vars);
            Ok(Outcome::found(json!({
                "term": term.to_string(),
                "vars": d.vars,
                "degree": d.value,
            })))
        }
        TermCmd::DecomposeSum(t) => {
            let (term, n) = parse_args(t)?;
            let g = sum_decompose(&term, n)?;
            Ok(Outcome::found(json!({
                "term": term.to_string(),
                "n": n,
                "g": g.to_string(),
                "degree_f": degree(&term, &var_range(n)).value,
                "degree_g_in_x": g.degree(&var_range(n)).value,
            })))
        }
        TermCmd::DecomposeShift { t, point } => {
            let alg = t
                .alg
                .as_deref()
                .ok_or_else(|| CliError::Invalid("decompose-shift needs --alg".into()))?;
            let r = inputs::finite_instance(alg)?;
            let (term, n) = parse_args(t)?;
            let point: Vec<u32> = inputs::int_list(point)?.into_iter().map(|v| v as u32).collect();
            let h = shift_decompose(&term, n, &r, &point)?;
            Ok(Outcome::found(json!({
                "term": term.to_string(),
                "point": point,
                "h": h.to_string(),
                "degree_f": degree(&term, &var_range(n)).value,
                "degree_h": h.degree(&var_range(n)).value,
            })))
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum AlgCmd {
    /// Check that every operation is additive in each coordinate
    Check {
        #[arg(long)]
        alg: String,
    },
    /// All coordinatewise-additive operations of the additive group
    EnumOps {
        #[arg(long)]
        alg: String,
        #[arg(long, default_value_t = 1)]
        arity: usize,
        #[arg(long, default_value_t = 1 << 24)]
        cap: u64,
        /// check every table instead of using the group structure
        #[arg(long)]
        brute_force: bool,
    },
    /// Groupoid ring with coefficients modulo `modulus`
    GroupoidRing {
        #[arg(long)]
        groupoid: String,
        #[arg(long, default_value_t = 2)]
        modulus: usize,
        #[arg(long, default_value_t = 1 << 12)]
        max_carrier: usize,
    },
    /// Direct product of instances with a shared signature
    Product {
        #[arg(required = true)]
        algs: Vec<String>,
    },
}

fn alg_cmd(cmd: &AlgCmd, g: &Global) -> Result<Outcome, CliError> {
    match cmd {
        AlgCmd::Check { alg } => {
            let r = inputs::finite_instance(alg)?;
            let rep = r.check_axioms();
            Ok(Outcome::with(to_value(&rep)?, rep.holds))
        }
        AlgCmd::EnumOps {
            alg,
            arity,
            cap,
            brute_force,
        } => {
            let r = inputs::finite_instance(alg)?;
            let mode = if *brute_force {
                EnumMode::BruteForce
            } else {
                EnumMode::Structural
            };
            let cap = g.budget_nodes.map_or(*cap, |b| b.min(*cap));
            let ops = enumerate_distributive_ops(&r, *arity, cap, mode)?;
            let rows = ops
                .tables
                .iter()
                .enumerate()
                .map(|(i, t)| vec![i.to_string(), format!("{t:?}")])
                .collect();
            Ok(Outcome::with(
                json!({
                    "arity": ops.arity,
                    "count": ops.tables.len(),
                    "complete": ops.complete,
                    "candidates_examined": ops.candidates_examined,
                    "tables": ops.tables,
                }),
                ops.complete,
            )
            .table(Table::new(&["index", "table"], rows)))
        }
        AlgCmd::GroupoidRing {
            groupoid,
            modulus,
            max_carrier,
        } => {
            let gr = inputs::groupoid(groupoid)?;
            let r = groupoid_ring(&gr, *modulus, *max_carrier)?;
            Ok(Outcome::found(to_value(&InstanceFile::from(r))?))
        }
        AlgCmd::Product { algs } => {
            let parts = algs.iter().map(|a| inputs::finite_instance(a)).collect::<Result<Vec<_>, _>>()?;
            let r = direct_product(&parts)?;
            Ok(Outcome::found(to_value(&InstanceFile::from(r))?))
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum ZariskiCmd {
    /// Term functions K^n -> K of an instance
    Clone {
        #[arg(long)]
        alg: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// include every function table
        #[arg(long)]
        tables: bool,
    },
    /// Closure, interior, isolated points, pseudocharacter and ind of K^n
    Analyze {
        #[arg(long)]
        alg: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// closed sets are unions of at most this many root sets
        #[arg(long)]
        union_arity: Option<usize>,
        /// comma-separated point indices (row-major, x1 most significant)
        #[arg(long)]
        subset: Option<String>,
    },
    /// Root sets of ax and ax + a in F_2^m
    Cantor {
        #[arg(long)]
        m: u32,
    },
    /// Search for a nowhere-density certificate over a symbolic instance
    Certificate {
        /// `integers`, `integer-ring` or a symbolic instance file
        #[arg(long, default_value = "integer-ring")]
        instance: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// terms F_0, .., F_j in x1..x(n+1), separated by `;`
        #[arg(long)]
        terms: String,
        /// JSON description of A, inline or as a file
        #[arg(long, default_value = r#"{"kind":"empty"}"#)]
        a: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 6)]
        window: i64,
        #[arg(long, default_value_t = 10_000)]
        random_trials: u64,
        #[arg(long, default_value_t = 50)]
        random_range: i64,
    },
    /// Recheck a certificate file
    Verify { path: String },
    /// Closure of a point set of Z^n under vanishing affine terms, in a window
    AffineClosure {
        /// points as `a,b;c,d;..`
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        /// window as `lo..hi` in every coordinate
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        window: String,
    },
}

fn points_arg(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.split(',')
                .map(|v| v.trim().parse().map_err(|_| CliError::Invalid(format!("bad coordinate `{v}`"))))
                .collect()
        })
        .collect()
}

fn zariski_cmd(cmd: &ZariskiCmd, g: &Global) -> Result<Outcome, CliError> {
    match cmd {
        ZariskiCmd::Clone { alg, n, cap, tables } => {
            let r = inputs::finite_instance(alg)?;
            let c = term_clone(&r, *n, *cap)?;
            let roots: BTreeSet<PointSet> = c.functions.iter().map(|f| f.root_set()).collect();
            let mut v = json!({
                "carrier": c.carrier,
                "n": c.n,
                "functions": c.len(),
                "complete": c.complete,
                "distinct_root_sets": roots.len(),
            });
            if *tables {
                v["tables"] = c.functions.iter().map(|f| json!(f.table)).collect();
            }
            Ok(Outcome::with(v, c.complete))
        }
        ZariskiCmd::Analyze {
            alg,
            n,
            cap,
            union_arity,
            subset,
        } => {
            let r = inputs::finite_instance(alg)?;
            let c = term_clone(&r, *n, *cap)?;
            let space = closed_base(&c, *union_arity);
            let subset = match subset {
                Some(s) => {
                    let idx = inputs::int_list(s)?;
                    if let Some(&bad) = idx.iter().find(|&&i| i as usize >= space.points()) {
                        return Err(CliError::Invalid(format!("point {bad} outside 0..{}", space.points())));
                    }
                    Some(PointSet::from_indices(space.points(), idx.into_iter().map(|i| i as usize)))
                }
                None => None,
            };
            let rep = analyze(&space, subset.as_ref())?;
            Ok(Outcome::found(to_value(&rep)?))
        }
        ZariskiCmd::Cantor { m } => {
            let rep = verify_cantor_example(*m)?;
            Ok(Outcome::found(to_value(&rep)?))
        }
        ZariskiCmd::Certificate {
            instance,
            n,
            terms,
            a,
            m,
            window,
            random_trials,
            random_range,
        } => {
            let inst = inputs::symbolic_instance(instance)?;
            let terms: Vec<String> = terms.split(';').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect();
            let a_text = if std::path::Path::new(a).exists() {
                std::fs::read_to_string(a).map_err(|e| CliError::Invalid(format!("{a}: {e}")))?
            } else {
                a.clone()
            };
            let a: FiniteValued =
                serde_json::from_str(&a_text).map_err(|e| CliError::Invalid(format!("description of A: {e}")))?;
            let budget = SearchBudget {
                window: *window,
                max_nodes: g.budget_nodes.unwrap_or(SearchBudget::default().max_nodes),
                random_trials: *random_trials,
                random_range: *random_range,
                seed: g.seed,
                time_limit: g.budget_seconds.map(|s| Duration::from_secs_f64(s * 0.9)),
            };
            let out = nowhere_dense_certificate(&inst, *n, &terms, &a, *m, &budget)?;
            let found = matches!(out, CertificateOutcome::Found { .. });
            if let CertificateOutcome::Found { certificate, .. } = &out {
                if !verify_certificate(certificate)?.valid {
                    return Err(CliError::Internal("emitted certificate failed its own recheck".into()));
                }
            }
            Ok(Outcome::with(to_value(&out)?, found))
        }
        ZariskiCmd::Verify { path } => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
            let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
            // accept a bare certificate or a search report containing one
            let cert_value = value.get("certificate").cloned().unwrap_or(value);
            let cert: Certificate =
                serde_json::from_value(cert_value).map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
            let check = verify_certificate(&cert)?;
            Ok(Outcome::with(to_value(&check)?, check.valid))
        }
        ZariskiCmd::AffineClosure { points, window } => {
            let pts = points_arg(points)?;
            let dim = pts.first().map_or(0, |p| p.len());
            if dim == 0 || pts.iter().any(|p| p.len() != dim) {
                return Err(CliError::Invalid("points must share a positive dimension".into()));
            }
            let (lo, hi) = window
                .split_once("..")
                .and_then(|(l, h)| Some((l.trim().parse::<i64>().ok()?, h.trim().parse::<i64>().ok()?)))
                .filter(|(l, h)| l <= h && h - l <= 64)
                .ok_or_else(|| CliError::Invalid(format!("bad window `{window}`")))?;
            let mut grid: Vec<Vec<i64>> = vec![Vec::new()];
            for _ in 0..dim {
                grid = grid
                    .into_iter()
                    .flat_map(|p| {
                        (lo..=hi).map(move |v| {
                            let mut q = p.clone();
                            q.push(v);
                            q
                        })
                    })
                    .collect();
            }
            if grid.len() > 1 << 20 {
                return Err(CliError::Invalid("window too large".into()));
            }
            let rep = affine_closure_in_window(&pts, &grid)?;
            Ok(Outcome::found(to_value(&rep)?))
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum RamseyCmd {
    /// Finite sums of a sequence
    Fs {
        /// comma-separated positive integers
        seq: String,
        #[arg(long)]
        bound: Option<u128>,
    },
    /// Finite products, left-associated over increasing indices
    Fp {
        /// comma-separated elements (words for `free`)
        seq: String,
        /// `naturals`, `free`, or a groupoid name or file
        #[arg(long = "in", default_value = "naturals")]
        structure: String,
    },
    /// x, y, x + y of one color
    Schur {
        /// `single:N`, `parity:N`, `mod:K:N`, `random:K:N` or an `element,color` CSV
        #[arg(long)]
        coloring: String,
        /// require x < y
        #[arg(long)]
        distinct: bool,
    },
    /// Largest N with a sum-free r-coloring of 1..N
    SchurNumber { r: u32 },
    /// n elements with monochromatic finite sums
    Folkman {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        n: usize,
        /// allow repeated elements
        #[arg(long)]
        allow_repeats: bool,
    },
    /// Translates b + FS(x) inside one color
    Hilbert {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        b_count: usize,
    },
    /// FS(x) together with FP(y) inside one color
    Simultaneous {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        len: usize,
    },
    /// Monochromatic product of finite-sum sets in a grid
    ProductFs {
        /// `single:AxB`, `parity:AxB`, `mod:K:AxB`, `random:K:AxB` or a CSV
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        len: usize,
    },
    /// Check the Key Lemma for one term, or run a random campaign
    Keylemma {
        #[arg(long)]
        alg: Option<String>,
        #[arg(long)]
        term: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// random tuples instead of all of them
        #[arg(long)]
        trials: Option<u64>,
        /// random instances and terms, this many trials
        #[arg(long)]
        campaign: Option<u64>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

fn coloring_table(c: &Coloring) -> Table {
    let rows = c
        .colors()
        .iter()
        .enumerate()
        .map(|(i, col)| vec![(i + 1).to_string(), col.to_string()])
        .collect();
    Table::new(&["element", "color"], rows)
}

fn witness<T: Serialize>(w: &Option<T>, extra: Value) -> Result<Outcome, CliError> {
    let mut v = extra;
    v["found"] = json!(w.is_some());
    v["witness"] = to_value(w)?;
    Ok(Outcome::with(v, w.is_some()))
}

fn ramsey_cmd(cmd: &RamseyCmd, g: &Global) -> Result<Outcome, CliError> {
    match cmd {
        RamseyCmd::Fs { seq, bound } => {
            let seq = inputs::int_list(seq)?;
            if seq.contains(&0) {
                return Err(CliError::Invalid("elements must be positive".into()));
            }
            let fs = fs_set(&seq, *bound)?;
            let rows = fs.iter().map(|s| vec![s.to_string()]).collect();
            let values: Vec<Value> = fs
                .iter()
                .map(|&s| u64::try_from(s).map_or_else(|_| Value::String(s.to_string()), Value::from))
                .collect();
            Ok(Outcome::found(json!({
                "sequence": seq,
                "count": values.len(),
                "fs": values,
            }))
            .table(Table::new(&["sum"], rows)))
        }
        RamseyCmd::Fp { seq, structure } => {
            let items: Vec<&str> = seq.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let products: Vec<String> = match structure.as_str() {
                "naturals" => {
                    let xs = items
                        .iter()
                        .map(|s| s.parse::<BigUint>().map_err(|_| CliError::Invalid(format!("bad natural `{s}`"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    fp_set(&NaturalsMul, &xs)?.iter().map(|p| p.to_string()).collect()
                }
                "free" => {
                    let xs: Vec<String> = items.iter().map(|s| s.to_string()).collect();
                    fp_set(&FreeMonoid, &xs)?.into_iter().collect()
                }
                name => {
                    let gr = inputs::groupoid(name)?;
                    let xs = items
                        .iter()
                        .map(|s| {
                            s.parse::<u32>()
                                .ok()
                                .filter(|&v| (v as usize) < gr.size())
                                .ok_or_else(|| CliError::Invalid(format!("`{s}` is not an element")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    fp_set(&gr, &xs)?.iter().map(|p| p.to_string()).collect()
                }
            };
            let rows = products.iter().map(|p| vec![p.clone()]).collect();
            Ok(Outcome::found(json!({
                "structure": structure,
                "sequence": items,
                "count": products.len(),
                "fp": products,
            }))
            .table(Table::new(&["product"], rows)))
        }
        RamseyCmd::Schur { coloring, distinct } => {
            let c = inputs::coloring(coloring, g.seed)?;
            let w = schur_search(&c, !distinct)?;
            witness(&w, json!({ "n": c.interval_len()?, "colors": c.count() }))
        }
        RamseyCmd::SchurNumber { r } => {
            let s = schur_number(*r, g.budget_nodes)?;
            let table = coloring_table(&s.certificate);
            Ok(Outcome::found(json!({
                "r": s.r,
                "schur_number": s.n,
                "certificate": s.certificate.parts(),
                "certificate_colors": s.certificate.colors(),
                "nodes": s.nodes,
            }))
            .table(table))
        }
        RamseyCmd::Folkman {
            coloring,
            n,
            allow_repeats,
        } => {
            let c = inputs::coloring(coloring, g.seed)?;
            let w = folkman_search(&c, *n, !allow_repeats, g.budget_nodes)?;
            witness(&w, json!({ "n": n, "distinct": !allow_repeats }))
        }
        RamseyCmd::Hilbert { coloring, n, b_count } => {
            let c = inputs::coloring(coloring, g.seed)?;
            let w = hilbert_cube_search(&c, *n, *b_count, g.budget_nodes)?;
            witness(&w, json!({ "n": n, "b_count": b_count }))
        }
        RamseyCmd::Simultaneous { coloring, len } => {
            let c = inputs::coloring(coloring, g.seed)?;
            let w = simultaneous_fs_fp_search(&c, *len, g.budget_nodes)?;
            witness(&w, json!({ "len": len }))
        }
        RamseyCmd::ProductFs { coloring, m, len } => {
            let c = inputs::grid_coloring(coloring, g.seed)?;
            let w = product_fs_search(&c, *m, *len, g.budget_nodes)?;
            witness(&w, json!({ "m": m, "len": len, "domain": to_value(c.domain())? }))
        }
        RamseyCmd::Keylemma {
            alg,
            term,
            n,
            trials,
            campaign,
            max_degree,
        } => {
            if let Some(t) = campaign {
                let rep = key_lemma_campaign(*t, g.seed, *max_degree)?;
                return Ok(Outcome::found(to_value(&rep)?));
            }
            let (Some(alg), Some(term)) = (alg, term) else {
                return Err(CliError::Invalid("keylemma needs --alg and --term, or --campaign".into()));
            };
            let r = inputs::finite_instance(alg)?;
            let t = parse_term(term, &r.signature(), *n)?;
            let mode = match trials {
                Some(trials) => KeyLemmaMode::Random {
                    trials: *trials,
                    seed: g.seed,
                },
                None => KeyLemmaMode::Exhaustive,
            };
            let rep = verify_key_lemma(&r, &t, *n, mode)?;
            Ok(Outcome::found(to_value(&rep)?))
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum SgrpCmd {
    /// Idempotents, and the idempotent power of an element
    Idempotents {
        /// groupoid name (`z6-mul`, `left-zero-2`, ..) or file
        #[arg(long)]
        groupoid: String,
        #[arg(long)]
        power_of: Option<u32>,
    },
    /// Minimal left ideals and the smallest ideal
    Ideals {
        #[arg(long)]
        groupoid: String,
    },
    /// Solution counts of a·x = b
    Cancel {
        #[arg(long)]
        groupoid: String,
    },
    /// All associative tables of a given order
    Corpus {
        #[arg(long)]
        order: usize,
    },
}

fn sgrp_cmd(cmd: &SgrpCmd) -> Result<Outcome, CliError> {
    match cmd {
        SgrpCmd::Idempotents { groupoid, power_of } => {
            let gr = inputs::groupoid(groupoid)?;
            let rep = find_idempotents(&gr);
            let mut v = to_value(&rep)?;
            if let Some(x) = power_of {
                v["idempotent_power"] = json!({ "x": x, "e": idempotent_power(&gr, *x)? });
            }
            Ok(Outcome::found(v))
        }
        SgrpCmd::Ideals { groupoid } => Ok(Outcome::found(to_value(&ideal_structure(&inputs::groupoid(groupoid)?)?)?)),
        SgrpCmd::Cancel { groupoid } => {
            Ok(Outcome::found(to_value(&weak_left_cancellativity(&inputs::groupoid(groupoid)?))?))
        }
        SgrpCmd::Corpus { order } => {
            if !(1..=4).contains(order) {
                return Err(CliError::Invalid("order must lie in 1..=4".into()));
            }
            let c = associative_tables(*order);
            let without_idempotent = c
                .tables
                .iter()
                .filter(|t| find_idempotents(t).idempotents.is_empty())
                .count();
            let classes: Vec<&[u32]> = c.classes.iter().map(FiniteGroupoid::table).collect();
            Ok(Outcome::found(json!({
                "order": c.order,
                "labeled": c.tables.len(),
                "isomorphism_classes": c.classes.len(),
                "without_idempotent": without_idempotent,
                "classes": classes,
            })))
        }
    }
}

pub fn dispatch(cmd: &crate::Command, g: &Global) -> Result<Outcome, CliError> {
    use crate::Command;
    match cmd {
        Command::Term(c) => term_cmd(c),
        Command::Alg(c) => alg_cmd(c, g),
        Command::Zariski(c) => zariski_cmd(c, g),
        Command::Ramsey(c) => ramsey_cmd(c, g),
        Command::Sgrp(c) => sgrp_cmd(c),
    }
}
