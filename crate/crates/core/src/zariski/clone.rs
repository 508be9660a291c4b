use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{point_count, PointSet, ZariskiError};
use crate::algebras::FinitePolyring;
use crate::terms::Term;

/// A map `K^n -> K` as a dense row-major table, with the term it came from
/// when known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermFunction {
    pub table: Vec<u32>,
    #[serde(serialize_with = "display_opt")]
    pub provenance: Option<Term>,
}

fn display_opt<S: Serializer>(t: &Option<Term>, s: S) -> Result<S::Ok, S::Error> {
    match t {
        Some(t) => s.serialize_some(&t.to_string()),
        None => s.serialize_none(),
    }
}

impl TermFunction {
    pub fn new(table: Vec<u32>) -> Self {
        TermFunction {
            table,
            provenance: None,
        }
    }

    /// The root set `{p : f(p) = 0}`.
    pub fn root_set(&self) -> PointSet {
        PointSet::from_indices(
            self.table.len(),
            self.table.iter().enumerate().filter(|(_, &v)| v == 0).map(|(i, _)| i),
        )
    }
}

/// The term functions of `K^n`, in discovery order.
#[derive(Debug, Clone, Serialize)]
pub struct TermClone {
    pub carrier: usize,
    pub n: u32,
    pub functions: Vec<TermFunction>,
    /// `false` when generation stopped at the cap.
    pub complete: bool,
}

impl TermClone {
    /// A hand-picked family of functions; `complete` is left to the caller.
    pub fn from_functions(carrier: usize, n: u32, tables: Vec<Vec<u32>>, complete: bool) -> Result<Self, ZariskiError> {
        let points = point_count(carrier, n)?;
        if tables.iter().any(|t| t.len() != points || t.iter().any(|&v| v as usize >= carrier)) {
            return Err(ZariskiError::Invalid("function table has the wrong shape".into()));
        }
        Ok(TermClone {
            carrier,
            n,
            functions: tables.into_iter().map(TermFunction::new).collect(),
            complete,
        })
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn contains(&self, table: &[u32]) -> bool {
        self.functions.iter().any(|f| f.table == table)
    }
}

enum Recipe {
    Neg(usize),
    Add(usize, usize),
    App(usize, Vec<usize>),
}

enum Job {
    Neg(usize),
    Add(usize),
    /// operation, position holding the new function, new function
    App(usize, usize, usize),
}

const CHUNK: usize = 64;

/// Least family of functions `K^n -> K` containing the projections, every
/// constant and zero, closed under pointwise `+`, `-` and every operation.
///
/// Generation is semi-naive: each round only forms combinations involving a
/// function found in the previous round. Candidates are computed in parallel
/// and merged in a fixed order, so the result does not depend on the thread
/// count. Stops with `complete = false` once `cap` functions are known.
pub fn term_clone(instance: &FinitePolyring, n: u32, cap: usize) -> Result<TermClone, ZariskiError> {
    if n == 0 {
        return Err(ZariskiError::Invalid("n must be at least 1".into()));
    }
    if cap == 0 {
        return Err(ZariskiError::Invalid("cap must be positive".into()));
    }
    let size = instance.size();
    let points = point_count(size, n)?;
    let ops: Vec<(String, usize, Vec<u32>)> = instance
        .op_names()
        .map(|name| {
            let op = instance.op(name).expect("listed op");
            (name.to_string(), op.arity, op.table.clone())
        })
        .collect();

    let mut functions: Vec<TermFunction> = Vec::new();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let push = |functions: &mut Vec<TermFunction>, index: &mut HashMap<Vec<u32>, usize>, table: Vec<u32>, term: Term| {
        if index.contains_key(&table) {
            return true;
        }
        if functions.len() == cap {
            return false;
        }
        index.insert(table.clone(), functions.len());
        functions.push(TermFunction {
            table,
            provenance: Some(term),
        });
        true
    };

    let mut generators = vec![(vec![0u32; points], Term::Zero)];
    for i in 1..=n {
        let table = (0..points)
            .map(|p| super::point_coords(size, n, p)[i as usize - 1])
            .collect();
        generators.push((table, Term::var(i)));
    }
    for k in 1..size as u32 {
        generators.push((vec![k; points], Term::elem(k)));
    }
    for (table, term) in generators {
        if !push(&mut functions, &mut index, table, term) {
            return Ok(TermClone {
                carrier: size,
                n,
                functions,
                complete: false,
            });
        }
    }

    let mut start = 0;
    while start < functions.len() {
        let end = functions.len();
        let mut jobs = Vec::new();
        for j in start..end {
            jobs.push(Job::Neg(j));
            jobs.push(Job::Add(j));
            for (o, (_, arity, _)) in ops.iter().enumerate() {
                for pos in 0..*arity {
                    jobs.push(Job::App(o, pos, j));
                }
            }
        }
        for chunk in jobs.chunks(CHUNK) {
            let known = &functions;
            let index_ref = &index;
            let batches: Vec<Vec<(Vec<u32>, Recipe)>> = chunk
                .par_iter()
                .map(|job| {
                    let mut seen = HashSet::new();
                    let mut out = Vec::new();
                    let mut emit = |table: Vec<u32>, recipe: Recipe| {
                        if !index_ref.contains_key(&table) && seen.insert(table.clone()) {
                            out.push((table, recipe));
                        }
                    };
                    match *job {
                        Job::Neg(j) => {
                            let t = known[j].table.iter().map(|&v| instance.minus(v)).collect();
                            emit(t, Recipe::Neg(j));
                        }
                        Job::Add(j) => {
                            for i in 0..=j {
                                let t = known[i]
                                    .table
                                    .iter()
                                    .zip(&known[j].table)
                                    .map(|(&a, &b)| instance.plus(a, b))
                                    .collect();
                                emit(t, Recipe::Add(i, j));
                            }
                        }
                        Job::App(o, pos, j) => {
                            let (_, arity, table) = &ops[o];
                            let ranges: Vec<usize> = (0..*arity)
                                .map(|q| if q < pos { start } else { end })
                                .collect();
                            let blocked = ranges.iter().enumerate().any(|(q, &r)| q != pos && r == 0);
                            let mut tuple = vec![0usize; *arity];
                            tuple[pos] = j;
                            'outer: while !blocked {
                                let t = (0..points)
                                    .map(|p| {
                                        let idx = tuple
                                            .iter()
                                            .fold(0usize, |acc, &f| acc * size + known[f].table[p] as usize);
                                        table[idx]
                                    })
                                    .collect();
                                emit(t, Recipe::App(o, tuple.clone()));
                                let mut q = *arity;
                                loop {
                                    if q == 0 {
                                        break 'outer;
                                    }
                                    q -= 1;
                                    if q == pos {
                                        continue;
                                    }
                                    tuple[q] += 1;
                                    if tuple[q] < ranges[q] {
                                        break;
                                    }
                                    tuple[q] = 0;
                                }
                            }
                        }
                    }
                    out
                })
                .collect();
            for (table, recipe) in batches.into_iter().flatten() {
                let term = match recipe {
                    Recipe::Neg(j) => Term::neg(prov(&functions, j)),
                    Recipe::Add(i, j) => Term::sum(prov(&functions, i), prov(&functions, j)),
                    Recipe::App(o, args) => {
                        Term::app(&ops[o].0, args.iter().map(|&a| prov(&functions, a)).collect())
                    }
                };
                if !push(&mut functions, &mut index, table, term) {
                    return Ok(TermClone {
                        carrier: size,
                        n,
                        functions,
                        complete: false,
                    });
                }
            }
        }
        start = end;
    }
    Ok(TermClone {
        carrier: size,
        n,
        functions,
        complete: true,
    })
}

fn prov(functions: &[TermFunction], i: usize) -> Term {
    functions[i].provenance.clone().unwrap_or(Term::Zero)
}
