use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError, EvalError};
use crate::terms::{Constant, Signature};

/// Exact polyring on `Z^d`.
///
/// `#k` denotes the diagonal tuple `(k, .., k)`; named constants are given
/// explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymbolicFile", into = "SymbolicFile")]
pub struct SymbolicPolyring {
    dimension: usize,
    ops: Vec<SymbolicOp>,
    constants: BTreeMap<String, Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicOp {
    pub name: String,
    pub kind: SymbolicOpKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicOpKind {
    /// Componentwise product of `arity` arguments.
    Product { arity: usize },
    /// Unary integer linear map, `rows` is `d x d`.
    Matrix { rows: Vec<Vec<BigInt>> },
    /// Constant zero map of the given arity.
    Zero { arity: usize },
}

impl SymbolicOpKind {
    pub fn arity(&self) -> usize {
        match self {
            SymbolicOpKind::Product { arity } | SymbolicOpKind::Zero { arity } => *arity,
            SymbolicOpKind::Matrix { .. } => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolicFile {
    pub dimension: usize,
    #[serde(default)]
    pub ops: Vec<SymbolicOpFile>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", with = "int_map")]
    pub constants: BTreeMap<String, Vec<BigInt>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolicOpFile {
    pub name: String,
    pub kind: String,
    #[serde(default)]
    pub params: serde_json::Value,
}

impl TryFrom<SymbolicFile> for SymbolicPolyring {
    type Error = AlgebraError;

    fn try_from(f: SymbolicFile) -> Result<Self, AlgebraError> {
        let mut r = SymbolicPolyring::new(f.dimension)?;
        for op in f.ops {
            let arity_param = |default: usize| -> Result<usize, AlgebraError> {
                match op.params.get("arity") {
                    None => Ok(default),
                    Some(v) => v
                        .as_u64()
                        .map(|a| a as usize)
                        .ok_or_else(|| AlgebraError::Shape(format!("bad arity for `{}`", op.name))),
                }
            };
            let kind = match op.kind.as_str() {
                "product" => SymbolicOpKind::Product {
                    arity: arity_param(2)?,
                },
                "zero" => SymbolicOpKind::Zero {
                    arity: arity_param(1)?,
                },
                "matrix" => {
                    let rows = op
                        .params
                        .get("rows")
                        .cloned()
                        .ok_or_else(|| AlgebraError::Shape(format!("matrix `{}` needs rows", op.name)))?;
                    let rows = rows
                        .as_array()
                        .ok_or_else(|| AlgebraError::Shape("rows must be an array".into()))?
                        .iter()
                        .map(|row| {
                            row.as_array()
                                .ok_or_else(|| AlgebraError::Shape("row must be an array".into()))?
                                .iter()
                                .map(|v| json_to_int(v).map_err(AlgebraError::Shape))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    SymbolicOpKind::Matrix { rows }
                }
                other => return Err(AlgebraError::Shape(format!("unknown op kind `{other}`"))),
            };
            r = r.with_op(&op.name, kind)?;
        }
        for (name, v) in f.constants {
            r = r.with_constant(&name, v)?;
        }
        Ok(r)
    }
}

impl From<SymbolicPolyring> for SymbolicFile {
    fn from(r: SymbolicPolyring) -> Self {
        SymbolicFile {
            dimension: r.dimension,
            ops: r
                .ops
                .into_iter()
                .map(|op| {
                    let (kind, params) = match op.kind {
                        SymbolicOpKind::Product { arity } => ("product", serde_json::json!({ "arity": arity })),
                        SymbolicOpKind::Zero { arity } => ("zero", serde_json::json!({ "arity": arity })),
                        SymbolicOpKind::Matrix { rows } => {
                            let rows: Vec<Vec<serde_json::Value>> =
                                rows.iter().map(|r| r.iter().map(int_to_json).collect()).collect();
                            ("matrix", serde_json::json!({ "rows": rows }))
                        }
                    };
                    SymbolicOpFile {
                        name: op.name,
                        kind: kind.into(),
                        params,
                    }
                })
                .collect(),
            constants: r.constants,
        }
    }
}

impl SymbolicPolyring {
    pub fn new(dimension: usize) -> Result<Self, AlgebraError> {
        if dimension == 0 {
            return Err(AlgebraError::Shape("dimension must be at least 1".into()));
        }
        Ok(SymbolicPolyring {
            dimension,
            ops: Vec::new(),
            constants: BTreeMap::new(),
        })
    }

    /// `(Z, +)`.
    pub fn integers() -> Self {
        SymbolicPolyring::new(1).expect("d = 1")
    }

    /// The ring `Z` with multiplication `m`.
    pub fn integer_ring() -> Self {
        SymbolicPolyring::integers()
            .with_op("m", SymbolicOpKind::Product { arity: 2 })
            .expect("valid")
    }

    pub fn with_op(mut self, name: &str, kind: SymbolicOpKind) -> Result<Self, AlgebraError> {
        Signature::new([(name, kind.arity())]).map_err(|e| AlgebraError::Shape(e.to_string()))?;
        if let SymbolicOpKind::Matrix { rows } = &kind {
            if rows.len() != self.dimension || rows.iter().any(|r| r.len() != self.dimension) {
                return Err(AlgebraError::Shape(format!("matrix `{name}` must be {0}x{0}", self.dimension)));
            }
        }
        if self.ops.iter().any(|o| o.name == name) {
            return Err(AlgebraError::Shape(format!("duplicate operation `{name}`")));
        }
        self.ops.push(SymbolicOp {
            name: name.to_string(),
            kind,
        });
        Ok(self)
    }

    pub fn with_constant(mut self, name: &str, value: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if value.len() != self.dimension {
            return Err(AlgebraError::Shape(format!("constant `{name}` has wrong dimension")));
        }
        self.constants.insert(name.to_string(), value);
        Ok(self)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.ops.iter().map(|o| (o.name.clone(), o.kind.arity()))).expect("validated")
    }

    pub fn ops(&self) -> &[SymbolicOp] {
        &self.ops
    }

    pub fn element(&self, v: &[i64]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dimension);
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.dimension)
            .map(|i| {
                (0..self.dimension)
                    .map(|j| BigInt::from(i64::from(i == j)))
                    .collect()
            })
            .collect()
    }

    /// Checks additivity of every operation in every coordinate on basis
    /// vectors and their pairwise sums and differences.
    pub fn check_additivity_on_basis(&self) -> bool {
        let basis = self.basis();
        let mut probes = basis.clone();
        for a in &basis {
            for b in &basis {
                probes.push(self.add(a, &self.neg(b)));
            }
        }
        for op in &self.ops {
            let arity = op.kind.arity();
            let mut idx = vec![0usize; arity];
            loop {
                let args: Vec<Vec<BigInt>> = idx.iter().map(|&i| basis[i].clone()).collect();
                for k in 0..arity {
                    for y in &probes {
                        for y2 in &probes {
                            let mut a = args.clone();
                            a[k] = self.add(y, y2);
                            let lhs = self.apply(&op.name, &a).expect("own op");
                            a[k] = y.clone();
                            let p = self.apply(&op.name, &a).expect("own op");
                            a[k] = y2.clone();
                            let q = self.apply(&op.name, &a).expect("own op");
                            if lhs != self.add(&p, &q) {
                                return false;
                            }
                        }
                    }
                }
                let mut k = arity;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < basis.len() {
                        break;
                    }
                    idx[k] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        true
    }

    /// Reduces every coordinate into `0..m`.
    pub fn reduce_mod(v: &[BigInt], m: u64) -> Vec<u64> {
        let m = BigInt::from(m);
        v.iter()
            .map(|x| {
                let r = ((x % &m) + &m) % &m;
                u64::try_from(r).expect("reduced")
            })
            .collect()
    }
}

impl Algebra for SymbolicPolyring {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.dimension]
    }

    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }

    fn apply(&self, op: &str, args: &[Vec<BigInt>]) -> Result<Vec<BigInt>, EvalError> {
        let o = self
            .ops
            .iter()
            .find(|o| o.name == op)
            .ok_or_else(|| EvalError::UnknownOp(op.to_string()))?;
        if o.kind.arity() != args.len() {
            return Err(EvalError::Arity {
                op: op.to_string(),
                expected: o.kind.arity(),
                got: args.len(),
            });
        }
        Ok(match &o.kind {
            SymbolicOpKind::Product { .. } => (0..self.dimension)
                .map(|i| args.iter().map(|a| &a[i]).product())
                .collect(),
            SymbolicOpKind::Zero { .. } => self.zero(),
            SymbolicOpKind::Matrix { rows } => rows
                .iter()
                .map(|row| row.iter().zip(&args[0]).map(|(r, x)| r * x).sum())
                .collect(),
        })
    }

    fn constant(&self, c: &Constant) -> Result<Vec<BigInt>, EvalError> {
        match c {
            Constant::Element(k) => Ok(vec![BigInt::from(*k); self.dimension]),
            Constant::Named(n) => self
                .constants
                .get(n)
                .cloned()
                .ok_or_else(|| EvalError::UnresolvedConstant(n.clone())),
        }
    }
}

/// Integers are written as JSON numbers when they fit in `i64`, otherwise
/// as decimal strings; both forms are accepted on input.
pub fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(x.to_string()),
    }
}

pub fn json_to_int(v: &serde_json::Value) -> Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| format!("not an integer: {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s}")),
        other => Err(format!("not an integer: {other}")),
    }
}

mod int_map {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        let vals: BTreeMap<&String, Vec<serde_json::Value>> = m
            .iter()
            .map(|(k, v)| (k, v.iter().map(super::int_to_json).collect()))
            .collect();
        vals.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, Vec<BigInt>>, D::Error> {
        let vals = BTreeMap::<String, Vec<serde_json::Value>>::deserialize(d)?;
        vals.into_iter()
            .map(|(k, v)| {
                let v = v
                    .iter()
                    .map(|x| super::json_to_int(x).map_err(serde::de::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((k, v))
            })
            .collect()
    }
}
