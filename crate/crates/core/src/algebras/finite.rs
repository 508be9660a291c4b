use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError, EvalError, FiniteGroupoid};
use crate::terms::{Constant, Signature, Term};

/// Table of an `arity`-ary operation, row-major (first argument most
/// significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    pub arity: usize,
    pub table: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct NamedOp {
    name: String,
    op: OpTable,
}

/// A polyring on the carrier `0..size` given by tables; `0` is the zero.
///
/// Construction only validates shapes. Whether the tables actually form a
/// polyring is reported by [`FinitePolyring::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InstanceFile", into = "InstanceFile")]
pub struct FinitePolyring {
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    /// sorted by name
    ops: Vec<NamedOp>,
    constants: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OpTableFile {
    pub arity: usize,
    pub table: Vec<u32>,
}

/// On-disk form of a [`FinitePolyring`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub size: usize,
    pub add: Vec<u32>,
    pub neg: Vec<u32>,
    #[serde(default)]
    pub ops: BTreeMap<String, OpTableFile>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, u32>,
}

impl TryFrom<InstanceFile> for FinitePolyring {
    type Error = AlgebraError;

    fn try_from(f: InstanceFile) -> Result<Self, AlgebraError> {
        let mut r = FinitePolyring::new(f.size, f.add, f.neg)?;
        for (name, op) in f.ops {
            r = r.with_op(&name, op.arity, op.table)?;
        }
        for (name, v) in f.constants {
            r = r.with_constant(&name, v)?;
        }
        Ok(r)
    }
}

impl From<FinitePolyring> for InstanceFile {
    fn from(r: FinitePolyring) -> Self {
        InstanceFile {
            size: r.size,
            add: r.add,
            neg: r.neg,
            ops: r
                .ops
                .into_iter()
                .map(|n| {
                    (
                        n.name,
                        OpTableFile {
                            arity: n.op.arity,
                            table: n.op.table,
                        },
                    )
                })
                .collect(),
            constants: r.constants,
        }
    }
}

pub(crate) fn pow_checked(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

impl FinitePolyring {
    pub fn new(size: usize, add: Vec<u32>, neg: Vec<u32>) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Shape("carrier must be non-empty".into()));
        }
        if add.len() != size * size {
            return Err(AlgebraError::Shape(format!(
                "addition table has {} entries, expected {}",
                add.len(),
                size * size
            )));
        }
        if neg.len() != size {
            return Err(AlgebraError::Shape(format!(
                "negation table has {} entries, expected {size}",
                neg.len()
            )));
        }
        if add.iter().chain(&neg).any(|&v| v as usize >= size) {
            return Err(AlgebraError::Shape("table entry outside the carrier".into()));
        }
        Ok(FinitePolyring {
            size,
            add,
            neg,
            ops: Vec::new(),
            constants: BTreeMap::new(),
        })
    }

    /// `(Z_m, +)` with no extra operations.
    pub fn cyclic_group(m: usize) -> Self {
        assert!(m >= 1);
        let add = (0..m * m).map(|i| ((i / m + i % m) % m) as u32).collect();
        let neg = (0..m).map(|a| ((m - a) % m) as u32).collect();
        FinitePolyring::new(m, add, neg).expect("well-shaped")
    }

    /// `Z_m` with its ring multiplication as the binary operation `m`.
    pub fn cyclic_ring(m: usize) -> Self {
        let mul = (0..m * m).map(|i| ((i / m) * (i % m) % m) as u32).collect();
        FinitePolyring::cyclic_group(m)
            .with_op("m", 2, mul)
            .expect("well-shaped")
    }

    /// The bare additive group of this instance.
    pub fn group(&self) -> FinitePolyring {
        FinitePolyring {
            size: self.size,
            add: self.add.clone(),
            neg: self.neg.clone(),
            ops: Vec::new(),
            constants: BTreeMap::new(),
        }
    }

    pub fn with_op(mut self, name: &str, arity: usize, table: Vec<u32>) -> Result<Self, AlgebraError> {
        Signature::new([(name, arity)]).map_err(|e| AlgebraError::Shape(e.to_string()))?;
        let expected = pow_checked(self.size, arity)
            .ok_or_else(|| AlgebraError::Shape(format!("table of `{name}` is too large")))?;
        if table.len() != expected {
            return Err(AlgebraError::Shape(format!(
                "table of `{name}` has {} entries, expected {expected}",
                table.len()
            )));
        }
        if table.iter().any(|&v| v as usize >= self.size) {
            return Err(AlgebraError::Shape(format!("table of `{name}` leaves the carrier")));
        }
        if self.ops.iter().any(|o| o.name == name) {
            return Err(AlgebraError::Shape(format!("duplicate operation `{name}`")));
        }
        self.ops.push(NamedOp {
            name: name.to_string(),
            op: OpTable { arity, table },
        });
        self.ops.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(self)
    }

    pub fn with_constant(mut self, name: &str, value: u32) -> Result<Self, AlgebraError> {
        if value as usize >= self.size {
            return Err(AlgebraError::Shape(format!("constant `{name}` outside the carrier")));
        }
        self.constants.insert(name.to_string(), value);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn neg_table(&self) -> &[u32] {
        &self.neg
    }

    #[inline]
    pub fn plus(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn minus(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    /// `k·a` for a non-negative integer `k`.
    pub fn times(&self, k: u64, a: u32) -> u32 {
        let mut acc = 0;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.plus(acc, base);
            }
            base = self.plus(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of `a`.
    pub fn order(&self, a: u32) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.plus(x, a);
            n += 1;
        }
        n
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.ops.iter().map(|o| (o.name.clone(), o.op.arity))).expect("validated names")
    }

    pub fn op_names(&self) -> impl Iterator<Item = &str> {
        self.ops.iter().map(|o| o.name.as_str())
    }

    pub fn op(&self, name: &str) -> Option<&OpTable> {
        self.ops
            .binary_search_by(|o| o.name.as_str().cmp(name))
            .ok()
            .map(|i| &self.ops[i].op)
    }

    fn op_index(&self, name: &str) -> Option<usize> {
        self.ops.binary_search_by(|o| o.name.as_str().cmp(name)).ok()
    }

    #[inline]
    pub fn table_index(&self, args: &[u32]) -> usize {
        args.iter().fold(0usize, |acc, &a| acc * self.size + a as usize)
    }

    /// Checks group axioms and per-coordinate additivity of every operation.
    /// One entry per failing (axiom, operation, coordinate), with the number
    /// of violating instances and the first one found.
    pub fn check_axioms(&self) -> AxiomReport {
        let m = self.size as u32;
        let mut failures = Vec::new();
        let mut record = |axiom: &str, op: Option<&str>, coordinate: Option<usize>, count: u64, witness: Option<Vec<u32>>| {
            if let Some(witness) = witness {
                failures.push(AxiomFailure {
                    axiom: axiom.to_string(),
                    op: op.map(str::to_string),
                    coordinate,
                    count,
                    witness,
                });
            }
        };

        let (mut n, mut w) = (0, None);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if self.plus(self.plus(a, b), c) != self.plus(a, self.plus(b, c)) {
                        n += 1;
                        w.get_or_insert(vec![a, b, c]);
                    }
                }
            }
        }
        record("associativity", None, None, n, w);

        let (mut n, mut w) = (0, None);
        for a in 0..m {
            for b in (a + 1)..m {
                if self.plus(a, b) != self.plus(b, a) {
                    n += 1;
                    w.get_or_insert(vec![a, b]);
                }
            }
        }
        record("commutativity", None, None, n, w);

        let (mut n, mut w) = (0, None);
        for a in 0..m {
            if self.plus(0, a) != a || self.plus(a, 0) != a {
                n += 1;
                w.get_or_insert(vec![a]);
            }
        }
        record("identity", None, None, n, w);

        let (mut n, mut w) = (0, None);
        for a in 0..m {
            if self.plus(a, self.minus(a)) != 0 {
                n += 1;
                w.get_or_insert(vec![a]);
            }
        }
        record("inverse", None, None, n, w);

        for named in &self.ops {
            for coord in 0..named.op.arity {
                let (n, w) = additivity_failures(self, &named.op, coord);
                record("additivity", Some(&named.name), Some(coord), n, w);
            }
        }
        AxiomReport {
            holds: failures.is_empty(),
            failures,
        }
    }

    /// Compiles a term for repeated evaluation.
    pub fn compile(&self, term: &Term) -> Result<CompiledTerm, EvalError> {
        let mut code = Vec::new();
        let mut max_var = 0;
        self.emit(term, &mut code, &mut max_var)?;
        Ok(CompiledTerm { code, max_var })
    }

    fn emit(&self, term: &Term, code: &mut Vec<Instr>, max_var: &mut u32) -> Result<(), EvalError> {
        match term {
            Term::Var(i) => {
                if *i == 0 {
                    return Err(EvalError::Dimension { needed: 0, got: 0 });
                }
                *max_var = (*max_var).max(*i);
                code.push(Instr::Var(*i as usize - 1));
            }
            Term::Const(c) => code.push(Instr::Const(self.constant(c)?)),
            Term::Zero => code.push(Instr::Const(0)),
            Term::Sum(a, b) => {
                self.emit(a, code, max_var)?;
                self.emit(b, code, max_var)?;
                code.push(Instr::Add);
            }
            Term::Neg(a) => {
                self.emit(a, code, max_var)?;
                code.push(Instr::Neg);
            }
            Term::App(op, args) => {
                let idx = self.op_index(op).ok_or_else(|| EvalError::UnknownOp(op.clone()))?;
                let arity = self.ops[idx].op.arity;
                if arity != args.len() {
                    return Err(EvalError::Arity {
                        op: op.clone(),
                        expected: arity,
                        got: args.len(),
                    });
                }
                for a in args {
                    self.emit(a, code, max_var)?;
                }
                code.push(Instr::App(idx, arity));
            }
        }
        Ok(())
    }
}

fn additivity_failures(r: &FinitePolyring, op: &OpTable, coord: usize) -> (u64, Option<Vec<u32>>) {
    let m = r.size as u32;
    let others = op.arity - 1;
    let total = pow_checked(r.size, others).expect("table exists");
    let mut count = 0;
    let mut witness = None;
    let mut args = vec![0u32; op.arity];
    for idx in 0..total {
        let mut rest = idx;
        for k in (0..op.arity).rev() {
            if k == coord {
                continue;
            }
            args[k] = (rest % r.size) as u32;
            rest /= r.size;
        }
        for y in 0..m {
            args[coord] = y;
            let fy = op.table[r.table_index(&args)];
            for y2 in 0..m {
                args[coord] = y2;
                let fy2 = op.table[r.table_index(&args)];
                args[coord] = r.plus(y, y2);
                let fsum = op.table[r.table_index(&args)];
                if fsum != r.plus(fy, fy2) {
                    count += 1;
                    if witness.is_none() {
                        let mut w = args.clone();
                        w[coord] = y;
                        w.push(y2);
                        witness = Some(w);
                    }
                }
            }
        }
    }
    (count, witness)
}

/// Result of [`FinitePolyring::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub holds: bool,
    pub failures: Vec<AxiomFailure>,
}

/// For additivity the witness is the argument tuple with `y` in the failing
/// coordinate, followed by `y'`: `op(.., y + y', ..) != op(.., y, ..) + op(.., y', ..)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub op: Option<String>,
    pub coordinate: Option<usize>,
    pub count: u64,
    pub witness: Vec<u32>,
}

impl Algebra for FinitePolyring {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.plus(*a, *b)
    }

    fn neg(&self, a: &u32) -> u32 {
        self.minus(*a)
    }

    fn apply(&self, op: &str, args: &[u32]) -> Result<u32, EvalError> {
        let t = self.op(op).ok_or_else(|| EvalError::UnknownOp(op.to_string()))?;
        if t.arity != args.len() {
            return Err(EvalError::Arity {
                op: op.to_string(),
                expected: t.arity,
                got: args.len(),
            });
        }
        Ok(t.table[self.table_index(args)])
    }

    fn constant(&self, c: &Constant) -> Result<u32, EvalError> {
        match c {
            Constant::Element(k) if (*k as usize) < self.size => Ok(*k),
            Constant::Element(k) => Err(EvalError::UnresolvedConstant(format!("#{k}"))),
            Constant::Named(n) => self
                .constants
                .get(n)
                .copied()
                .ok_or_else(|| EvalError::UnresolvedConstant(n.clone())),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Instr {
    Var(usize),
    Const(u32),
    Add,
    Neg,
    App(usize, usize),
}

/// A term compiled to stack code against one [`FinitePolyring`].
#[derive(Debug, Clone)]
pub struct CompiledTerm {
    code: Vec<Instr>,
    max_var: u32,
}

impl CompiledTerm {
    pub fn max_var(&self) -> u32 {
        self.max_var
    }

    /// Evaluates at `point`; `point.len()` must be at least `max_var()`.
    pub fn eval(&self, r: &FinitePolyring, point: &[u32], stack: &mut Vec<u32>) -> u32 {
        stack.clear();
        for ins in &self.code {
            match *ins {
                Instr::Var(i) => stack.push(point[i]),
                Instr::Const(c) => stack.push(c),
                Instr::Add => {
                    let b = stack.pop().expect("stack");
                    let a = stack.pop().expect("stack");
                    stack.push(r.plus(a, b));
                }
                Instr::Neg => {
                    let a = stack.pop().expect("stack");
                    stack.push(r.minus(a));
                }
                Instr::App(op, arity) => {
                    let base = stack.len() - arity;
                    let idx = r.table_index(&stack[base..]);
                    let v = r.ops[op].op.table[idx];
                    stack.truncate(base);
                    stack.push(v);
                }
            }
        }
        stack.pop().expect("non-empty program")
    }
}

/// Componentwise product. Element `(e_0, .., e_{k-1})` is encoded in mixed
/// radix with the first factor least significant.
pub fn direct_product(instances: &[FinitePolyring]) -> Result<FinitePolyring, AlgebraError> {
    let first = instances
        .first()
        .ok_or_else(|| AlgebraError::Invalid("empty product".into()))?;
    let sig = first.signature();
    for other in &instances[1..] {
        if other.signature() != sig {
            return Err(AlgebraError::SignatureMismatch(format!(
                "{:?} vs {:?}",
                sig.ops(),
                other.signature().ops()
            )));
        }
    }
    let size = instances
        .iter()
        .try_fold(1usize, |acc, r| acc.checked_mul(r.size))
        .filter(|&s| s <= u32::MAX as usize)
        .ok_or(AlgebraError::SizeOverflow {
            size: u128::MAX,
            limit: u32::MAX as u128,
        })?;
    let split = |mut e: usize| -> Vec<u32> {
        instances
            .iter()
            .map(|r| {
                let c = e % r.size;
                e /= r.size;
                c as u32
            })
            .collect()
    };
    let join = |cs: &[u32]| -> u32 {
        let mut acc = 0usize;
        for (r, &c) in instances.iter().zip(cs).rev() {
            acc = acc * r.size + c as usize;
        }
        acc as u32
    };
    let comps: Vec<Vec<u32>> = (0..size).map(split).collect();
    let mut add = Vec::with_capacity(size * size);
    for a in &comps {
        for b in &comps {
            let c: Vec<u32> = instances
                .iter()
                .enumerate()
                .map(|(i, r)| r.plus(a[i], b[i]))
                .collect();
            add.push(join(&c));
        }
    }
    let neg = comps
        .iter()
        .map(|a| {
            let c: Vec<u32> = instances.iter().enumerate().map(|(i, r)| r.minus(a[i])).collect();
            join(&c)
        })
        .collect();
    let mut out = FinitePolyring::new(size, add, neg)?;
    for sym in sig.ops() {
        let cells = pow_checked(size, sym.arity)
            .filter(|&c| c <= 1 << 26)
            .ok_or(AlgebraError::SizeOverflow {
                size: size as u128,
                limit: 1 << 26,
            })?;
        let mut table = Vec::with_capacity(cells);
        let mut args = vec![0usize; sym.arity];
        for idx in 0..cells {
            let mut rest = idx;
            for k in (0..sym.arity).rev() {
                args[k] = rest % size;
                rest /= size;
            }
            let c: Vec<u32> = instances
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let comp_args: Vec<u32> = args.iter().map(|&a| comps[a][i]).collect();
                    r.op(&sym.name).expect("same signature").table[r.table_index(&comp_args)]
                })
                .collect();
            table.push(join(&c));
        }
        out = out.with_op(&sym.name, sym.arity, table)?;
    }
    Ok(out)
}

/// The groupoid ring of `g` with coefficients in `Z_modulus`.
///
/// Elements are the functions `g -> Z_modulus`, encoded as base-`modulus`
/// numbers with the coefficient of groupoid element `a` at digit `a`. The
/// binary operation `m` is convolution:
/// `(f * h)(c) = sum over a·b = c of f(a)·h(b)`. The indicator of `a` is
/// `modulus^a`, and indicators multiply like the groupoid.
pub fn groupoid_ring(
    g: &FiniteGroupoid,
    modulus: usize,
    max_carrier: usize,
) -> Result<FinitePolyring, AlgebraError> {
    if modulus < 2 {
        return Err(AlgebraError::Invalid("modulus must be at least 2".into()));
    }
    let n = g.size();
    let size = pow_checked(modulus, n).filter(|&s| s <= max_carrier).ok_or(
        AlgebraError::SizeOverflow {
            size: (modulus as u128).checked_pow(n as u32).unwrap_or(u128::MAX),
            limit: max_carrier as u128,
        },
    )?;
    let digits = |mut e: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = e % modulus;
                e /= modulus;
                d
            })
            .collect()
    };
    let undigits = |ds: &[usize]| -> u32 {
        ds.iter().rev().fold(0usize, |acc, &d| acc * modulus + d) as u32
    };
    let coeffs: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for f in &coeffs {
        for h in &coeffs {
            let s: Vec<usize> = f.iter().zip(h).map(|(a, b)| (a + b) % modulus).collect();
            add.push(undigits(&s));
            let mut c = vec![0usize; n];
            for a in 0..n {
                if f[a] == 0 {
                    continue;
                }
                for b in 0..n {
                    let ab = g.mul(a as u32, b as u32) as usize;
                    c[ab] = (c[ab] + f[a] * h[b]) % modulus;
                }
            }
            mul.push(undigits(&c));
        }
    }
    let neg = coeffs
        .iter()
        .map(|f| {
            let s: Vec<usize> = f.iter().map(|a| (modulus - a) % modulus).collect();
            undigits(&s)
        })
        .collect();
    FinitePolyring::new(size, add, neg)?.with_op("m", 2, mul)
}

impl FinitePolyring {
    /// Indicator function of groupoid element `a` in a ring built by
    /// [`groupoid_ring`] with the given modulus.
    pub fn indicator(modulus: usize, a: u32) -> u32 {
        pow_checked(modulus, a as usize).expect("small") as u32
    }
}
