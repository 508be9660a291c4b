//! Terms over polyring signatures.
//!
//! A term is built from variables, constants, `0`, binary `+`, unary `-`
//! and applications of signature operations. Every operation of a polyring
//! is additive in each coordinate, so any term can be expanded into a signed
//! sum of `+`-free monomials ([`normalize`]). Degrees are counted on that
//! canceled normal form, and the decompositions [`sum_decompose`] and
//! [`shift_decompose`] split a term into an additive part plus a remainder of
//! strictly smaller degree.

mod parse;
mod poly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebras::{Algebra, FinitePolyring};

pub use parse::parse_term;
pub use poly::{Polynomial, Sign, SignedMonomial};

/// Symbols that can never be used as operation names.
pub const RESERVED: [&str; 3] = ["0", "+", "-"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
    #[error("operation `{op}` expects {expected} argument(s), got {got}")]
    Arity {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("variable x{index} outside of x1..x{count}")]
    VarOutOfRange { index: u32, count: u32 },
    #[error("invalid signature: {0}")]
    Signature(String),
    #[error("term has degree zero in its variables")]
    ZeroDegree,
    #[error("point has dimension {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("evaluation failed: {0}")]
    Eval(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpSymbol {
    pub name: String,
    pub arity: usize,
}

/// The extra operations of a polyring. `0`, `+` and `-` are implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    ops: Vec<OpSymbol>,
}

impl Signature {
    pub fn new<S: Into<String>>(ops: impl IntoIterator<Item = (S, usize)>) -> Result<Self, TermError> {
        let mut out: Vec<OpSymbol> = Vec::new();
        for (name, arity) in ops {
            let name = name.into();
            if RESERVED.contains(&name.as_str()) || !is_identifier(&name) {
                return Err(TermError::Signature(format!("`{name}` is not a valid operation name")));
            }
            if is_var_name(&name) {
                return Err(TermError::Signature(format!("`{name}` collides with variable syntax")));
            }
            if arity == 0 {
                return Err(TermError::Signature(format!("`{name}` has arity 0")));
            }
            if out.iter().any(|o| o.name == name) {
                return Err(TermError::Signature(format!("duplicate operation `{name}`")));
            }
            out.push(OpSymbol { name, arity });
        }
        Ok(Signature { ops: out })
    }

    pub fn empty() -> Self {
        Signature::default()
    }

    pub fn ops(&self) -> &[OpSymbol] {
        &self.ops
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.ops.iter().find(|o| o.name == name).map(|o| o.arity)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_var_name(s: &str) -> bool {
    s.len() > 1 && s.starts_with('x') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Constant {
    /// A carrier element, written `#k`.
    Element(u32),
    /// A symbolic constant resolved by the instance.
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    /// Variable `x_i`, 1-based.
    Var(u32),
    Const(Constant),
    Zero,
    Sum(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(i: u32) -> Term {
        Term::Var(i)
    }

    pub fn elem(k: u32) -> Term {
        Term::Const(Constant::Element(k))
    }

    pub fn named(name: &str) -> Term {
        Term::Const(Constant::Named(name.to_string()))
    }

    pub fn sum(a: Term, b: Term) -> Term {
        Term::Sum(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn app(op: &str, args: Vec<Term>) -> Term {
        Term::App(op.to_string(), args)
    }

    /// Left-nested sum of `terms`; `0` when empty.
    pub fn sum_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms
            .into_iter()
            .reduce(Term::sum)
            .unwrap_or(Term::Zero)
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) | Term::Zero => 0,
            Term::Sum(a, b) => 1 + a.depth().max(b.depth()),
            Term::Neg(a) => 1 + a.depth(),
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    /// Largest variable index occurring in the term, 0 if none.
    pub fn max_var(&self) -> u32 {
        match self {
            Term::Var(i) => *i,
            Term::Const(_) | Term::Zero => 0,
            Term::Sum(a, b) => a.max_var().max(b.max_var()),
            Term::Neg(a) => a.max_var(),
            Term::App(_, args) => args.iter().map(Term::max_var).max().unwrap_or(0),
        }
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::Const(_) | Term::Zero => {}
            Term::Sum(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Neg(a) => a.collect_vars(out),
            Term::App(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    /// Number of occurrences of the given variables.
    pub fn occurrences(&self, vars: &BTreeSet<u32>) -> usize {
        match self {
            Term::Var(i) => usize::from(vars.contains(i)),
            Term::Const(_) | Term::Zero => 0,
            Term::Sum(a, b) => a.occurrences(vars) + b.occurrences(vars),
            Term::Neg(a) => a.occurrences(vars),
            Term::App(_, args) => args.iter().map(|t| t.occurrences(vars)).sum(),
        }
    }

    /// True when the term contains no `+`, `-` or `0` node.
    pub fn is_monomial_body(&self) -> bool {
        match self {
            Term::Var(_) | Term::Const(_) => true,
            Term::Zero | Term::Sum(..) | Term::Neg(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_monomial_body),
        }
    }

    /// Checks arities against `sig` and variable indices against `var_count`.
    pub fn check(&self, sig: &Signature, var_count: u32) -> Result<(), TermError> {
        match self {
            Term::Var(i) => {
                if *i == 0 || *i > var_count {
                    return Err(TermError::VarOutOfRange {
                        index: *i,
                        count: var_count,
                    });
                }
                Ok(())
            }
            Term::Const(_) | Term::Zero => Ok(()),
            Term::Sum(a, b) => {
                a.check(sig, var_count)?;
                b.check(sig, var_count)
            }
            Term::Neg(a) => a.check(sig, var_count),
            Term::App(op, args) => {
                let expected = sig.arity(op).ok_or_else(|| TermError::UnknownOp(op.clone()))?;
                if expected != args.len() {
                    return Err(TermError::Arity {
                        op: op.clone(),
                        expected,
                        got: args.len(),
                    });
                }
                args.iter().try_for_each(|t| t.check(sig, var_count))
            }
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant::Element(k) => write!(f, "#{k}"),
            Constant::Named(n) => f.write_str(n),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Const(c) => write!(f, "{c}"),
            Term::Zero => f.write_str("0"),
            Term::Sum(a, b) => write!(f, "({a} + {b})"),
            Term::Neg(a) => write!(f, "-{a}"),
            Term::App(op, args) => {
                write!(f, "{op}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Degree of a term or polynomial with respect to a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Degree {
    pub value: usize,
    pub vars: BTreeSet<u32>,
}

/// Variables `x_1..x_n` as a set.
pub fn var_range(n: u32) -> BTreeSet<u32> {
    (1..=n).collect()
}

/// Expands `term` by distributivity into its canceled polynomial.
///
/// Negation is pulled out of every operation coordinate as a sign, and a
/// coordinate holding `0` (or the zero element `#0`) kills the whole
/// application.
pub fn normalize(term: &Term) -> Polynomial {
    Polynomial::from_signed(expand(term))
}

fn expand(term: &Term) -> Vec<(Sign, Term)> {
    match term {
        Term::Var(_) | Term::Const(Constant::Named(_)) => vec![(Sign::Plus, term.clone())],
        Term::Const(Constant::Element(0)) | Term::Zero => Vec::new(),
        Term::Const(Constant::Element(_)) => vec![(Sign::Plus, term.clone())],
        Term::Sum(a, b) => {
            let mut out = expand(a);
            out.extend(expand(b));
            out
        }
        Term::Neg(a) => expand(a)
            .into_iter()
            .map(|(s, t)| (s.flip(), t))
            .collect(),
        Term::App(op, args) => {
            let parts: Vec<Vec<(Sign, Term)>> = args.iter().map(expand).collect();
            if parts.iter().any(Vec::is_empty) {
                return Vec::new();
            }
            let mut out = Vec::new();
            let mut idx = vec![0usize; parts.len()];
            loop {
                let mut sign = Sign::Plus;
                let mut bodies = Vec::with_capacity(parts.len());
                for (p, &i) in parts.iter().zip(&idx) {
                    sign = sign * p[i].0;
                    bodies.push(p[i].1.clone());
                }
                out.push((sign, Term::App(op.clone(), bodies)));
                // odometer, last coordinate fastest
                let mut k = parts.len();
                loop {
                    if k == 0 {
                        return out;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < parts[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
    }
}

/// Degree of a raw term: the degree of its canceled normal form.
///
/// This is the syntactic degree; a different polynomial representing the
/// same function might have smaller degree, so the value is an upper bound
/// on the semantic one.
pub fn degree(term: &Term, vars: &BTreeSet<u32>) -> Degree {
    normalize(term).degree(vars)
}

/// Simultaneous substitution of variables. Unbound variables are kept.
pub fn substitute(term: &Term, bindings: &BTreeMap<u32, Term>) -> Term {
    match term {
        Term::Var(i) => bindings.get(i).cloned().unwrap_or(Term::Var(*i)),
        Term::Const(_) | Term::Zero => term.clone(),
        Term::Sum(a, b) => Term::sum(substitute(a, bindings), substitute(b, bindings)),
        Term::Neg(a) => Term::neg(substitute(a, bindings)),
        Term::App(op, args) => Term::App(
            op.clone(),
            args.iter().map(|t| substitute(t, bindings)).collect(),
        ),
    }
}

/// Returns `G` in variables `x_1..x_{2n}` with
/// `F(x + y) = F(x) + F(y) + G(x, y)`, where `y_i` is written `x_{n+i}`.
///
/// `G` collects the mixed monomials of `F(x + y)` together with the
/// correction for variable-free monomials of `F`, so its degree in
/// `x_1..x_n` is strictly below the degree of `F`.
pub fn sum_decompose(f: &Term, var_count: u32) -> Result<Polynomial, TermError> {
    let xs = var_range(var_count);
    let nf = normalize(f);
    if nf.degree(&xs).value == 0 {
        return Err(TermError::ZeroDegree);
    }
    let shifted: BTreeMap<u32, Term> = (1..=var_count)
        .map(|i| (i, Term::sum(Term::Var(i), Term::Var(var_count + i))))
        .collect();
    let to_y: BTreeMap<u32, Term> = (1..=var_count)
        .map(|i| (i, Term::Var(var_count + i)))
        .collect();
    let f_xy = normalize(&substitute(f, &shifted));
    let f_y = normalize(&substitute(f, &to_y));
    Ok(f_xy.sub(&nf).sub(&f_y))
}

/// Returns `H` with `F(x + a) = F(x) + H(x)` over `instance`.
///
/// `H` is `G(x, a)` from [`sum_decompose`] plus `F(a)`; all variable-free
/// monomials are evaluated and folded into a single carrier constant.
pub fn shift_decompose(
    f: &Term,
    var_count: u32,
    instance: &FinitePolyring,
    point: &[u32],
) -> Result<Polynomial, TermError> {
    if point.len() != var_count as usize {
        return Err(TermError::Dimension {
            expected: var_count as usize,
            got: point.len(),
        });
    }
    if let Some(&bad) = point.iter().find(|&&a| a as usize >= instance.size()) {
        return Err(TermError::Eval(format!("#{bad} is not a carrier element")));
    }
    let g = sum_decompose(f, var_count)?;
    let at_a: BTreeMap<u32, Term> = (1..=var_count)
        .map(|i| (var_count + i, Term::elem(point[i as usize - 1])))
        .collect();
    let mut signed: Vec<(Sign, Term)> = g
        .monomials()
        .iter()
        .map(|m| (m.sign, substitute(&m.body, &at_a)))
        .collect();
    let to_a: BTreeMap<u32, Term> = (1..=var_count)
        .map(|i| (i, Term::elem(point[i as usize - 1])))
        .collect();
    signed.push((Sign::Plus, substitute(f, &to_a)));
    fold_constants(&Polynomial::from_signed(expand_all(signed)), instance)
}

fn expand_all(signed: Vec<(Sign, Term)>) -> Vec<(Sign, Term)> {
    signed
        .into_iter()
        .flat_map(|(s, t)| expand(&t).into_iter().map(move |(s2, b)| (s * s2, b)))
        .collect()
}

/// Evaluates all variable-free monomials of `p` in `instance` and replaces
/// them by one constant monomial (none if they sum to zero).
pub fn fold_constants(p: &Polynomial, instance: &FinitePolyring) -> Result<Polynomial, TermError> {
    let mut acc = instance.zero();
    let mut rest = Vec::new();
    for m in p.monomials() {
        if m.body.max_var() == 0 {
            let v = crate::algebras::evaluate(instance, &m.body, &[])
                .map_err(|e| TermError::Eval(e.to_string()))?;
            let v = match m.sign {
                Sign::Plus => v,
                Sign::Minus => instance.neg(&v),
            };
            acc = instance.add(&acc, &v);
        } else {
            rest.push((m.sign, m.body.clone()));
        }
    }
    if acc != 0 {
        rest.push((Sign::Plus, Term::elem(acc)));
    }
    Ok(Polynomial::from_signed(rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig_m() -> Signature {
        Signature::new([("m", 2), ("f", 1)]).unwrap()
    }

    fn p(s: &str, n: u32) -> Term {
        parse_term(s, &sig_m(), n).unwrap()
    }

    #[test]
    fn signature_rejects_reserved_and_duplicates() {
        assert!(Signature::new([("+", 2)]).is_err());
        assert!(Signature::new([("m", 2), ("m", 1)]).is_err());
        assert!(Signature::new([("m", 0)]).is_err());
        assert!(Signature::new([("x3", 1)]).is_err());
    }

    #[test]
    fn distributivity_one_step() {
        let n = normalize(&p("m(x1, x2 + x3)", 3));
        assert_eq!(n, normalize(&p("m(x1,x2) + m(x1,x3)", 3)));
        assert_eq!(n.to_string(), "m(x1, x2) + m(x1, x3)");
    }

    #[test]
    fn zero_is_group_identity() {
        let n = normalize(&p("x1 + 0", 1));
        assert_eq!(n.len(), 1);
        assert_eq!(n.to_string(), "x1");
    }

    #[test]
    fn cancellation_inside_op() {
        assert!(normalize(&p("f(x1 + -x1)", 1)).is_zero());
        assert!(normalize(&p("m(#0, x1)", 1)).is_zero());
    }

    #[test]
    fn negation_through_coordinates() {
        // m(-a, -b) = m(a, b)
        assert_eq!(normalize(&p("m(-x1, -x2)", 2)), normalize(&p("m(x1, x2)", 2)));
        assert_eq!(normalize(&p("-m(-x1, x2)", 2)), normalize(&p("m(x1, x2)", 2)));
        let q = normalize(&p("m(x1, -x2) + m(x1, x2)", 2));
        assert!(q.is_zero());
    }

    #[test]
    fn multiplicity_is_kept() {
        let q = normalize(&p("x1 + x1 + -x1 + x1", 1));
        assert_eq!(q.len(), 2);
        assert_eq!(q.to_string(), "x1 + x1");
    }

    #[test]
    fn degree_examples() {
        let vars12: BTreeSet<u32> = [1, 2].into();
        assert_eq!(degree(&p("m(x1,x2) + x1", 2), &vars12).value, 2);
        assert_eq!(degree(&Term::named("c"), &vars12).value, 0);
        assert_eq!(degree(&Term::Zero, &vars12).value, 0);
        let vars1: BTreeSet<u32> = [1].into();
        assert_eq!(degree(&p("m(m(x1,x2),x1) + x2", 2), &vars1).value, 2);
    }

    #[test]
    fn substitution_examples() {
        let b: BTreeMap<u32, Term> = [(1, p("x2 + x3", 3))].into();
        assert_eq!(substitute(&Term::Var(1), &b), p("x2 + x3", 3));
        let c: BTreeMap<u32, Term> = [(1, Term::named("c"))].into();
        assert_eq!(
            substitute(&p("m(x1,x1)", 1), &c).to_string(),
            "m(c, c)"
        );
        assert_eq!(substitute(&Term::Zero, &b), Term::Zero);
    }

    #[test]
    fn sum_decompose_square() {
        let g = sum_decompose(&p("m(x1,x1)", 1), 1).unwrap();
        assert_eq!(g, normalize(&p("m(x1,x2) + m(x2,x1)", 2)));
    }

    #[test]
    fn sum_decompose_linear_is_empty() {
        assert!(sum_decompose(&Term::Var(1), 1).unwrap().is_zero());
    }

    #[test]
    fn sum_decompose_cube() {
        let f = p("m(x1,m(x1,x1))", 1);
        let g = sum_decompose(&f, 1).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.degree(&[1].into()).value, 2);
    }

    #[test]
    fn sum_decompose_rejects_constants() {
        assert_eq!(sum_decompose(&Term::named("c"), 1), Err(TermError::ZeroDegree));
        assert_eq!(sum_decompose(&Term::elem(3), 1), Err(TermError::ZeroDegree));
    }

    #[test]
    fn sum_decompose_constant_monomial_correction() {
        // F = x1 + #1: F(x+y) - F(x) - F(y) = -#1
        let g = sum_decompose(&p("x1 + #1", 1), 1).unwrap();
        assert_eq!(g.to_string(), "- #1");
    }

    #[test]
    fn shift_decompose_square_over_z6() {
        let z6 = FinitePolyring::cyclic_ring(6);
        let h = shift_decompose(&p("m(x1,x1)", 1), 1, &z6, &[2]).unwrap();
        let expected = Polynomial::from_signed(vec![
            (Sign::Plus, p("m(x1,#2)", 1)),
            (Sign::Plus, p("m(#2,x1)", 1)),
            (Sign::Plus, Term::elem(4)),
        ]);
        assert_eq!(h, expected);
    }

    #[test]
    fn shift_decompose_linear_and_errors() {
        let z5 = FinitePolyring::cyclic_group(5);
        let h = shift_decompose(&Term::Var(1), 1, &z5, &[3]).unwrap();
        assert_eq!(h.to_string(), "#3");
        assert_eq!(
            shift_decompose(&Term::named("c"), 1, &z5, &[3]),
            Err(TermError::ZeroDegree)
        );
        assert!(matches!(
            shift_decompose(&Term::Var(1), 1, &z5, &[3, 1]),
            Err(TermError::Dimension { .. })
        ));
    }
}
