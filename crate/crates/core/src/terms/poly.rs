use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::{Degree, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedMonomial {
    pub sign: Sign,
    /// `+`-free body: only variables, constants and operation applications.
    pub body: Term,
}

/// A canceled signed sum of monomials.
///
/// Monomials are kept sorted by their printed body, then sign. Identical
/// bodies with the same sign are kept with multiplicity; opposite signs
/// never coexist.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Polynomial {
    monomials: Vec<SignedMonomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// Builds a canceled polynomial from signed monomial bodies.
    ///
    /// # Panics
    /// If a body contains `+`, `-` or `0`.
    pub fn from_signed(items: impl IntoIterator<Item = (Sign, Term)>) -> Self {
        let mut net: BTreeMap<String, (Term, i64)> = BTreeMap::new();
        for (sign, body) in items {
            assert!(body.is_monomial_body(), "not a monomial: {body}");
            let e = net.entry(body.to_string()).or_insert((body, 0));
            e.1 += match sign {
                Sign::Plus => 1,
                Sign::Minus => -1,
            };
        }
        let mut monomials = Vec::new();
        for (_, (body, n)) in net {
            let sign = if n > 0 { Sign::Plus } else { Sign::Minus };
            for _ in 0..n.unsigned_abs() {
                monomials.push(SignedMonomial {
                    sign,
                    body: body.clone(),
                });
            }
        }
        Polynomial { monomials }
    }

    pub fn monomials(&self) -> &[SignedMonomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn negate(&self) -> Polynomial {
        Polynomial::from_signed(self.signed().map(|(s, t)| (s.flip(), t)))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_signed(self.signed().chain(other.signed()))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_signed(
            self.signed()
                .chain(other.signed().map(|(s, t)| (s.flip(), t))),
        )
    }

    fn signed(&self) -> impl Iterator<Item = (Sign, Term)> + '_ {
        self.monomials.iter().map(|m| (m.sign, m.body.clone()))
    }

    /// Drops the monomial at `index`, keeping canonical order.
    pub fn without(&self, index: usize) -> Polynomial {
        let mut monomials = self.monomials.clone();
        monomials.remove(index);
        Polynomial { monomials }
    }

    /// Maximum number of occurrences of `vars` over the monomials.
    pub fn degree(&self, vars: &BTreeSet<u32>) -> Degree {
        Degree {
            value: self
                .monomials
                .iter()
                .map(|m| m.body.occurrences(vars))
                .max()
                .unwrap_or(0),
            vars: vars.clone(),
        }
    }

    /// The polynomial as a term, monomials summed left to right.
    pub fn to_term(&self) -> Term {
        Term::sum_all(self.monomials.iter().map(|m| match m.sign {
            Sign::Plus => m.body.clone(),
            Sign::Minus => Term::neg(m.body.clone()),
        }))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.sign == Sign::Minus {
                f.write_str("- ")?;
            }
            write!(f, "{}", m.body)?;
        }
        Ok(())
    }
}
