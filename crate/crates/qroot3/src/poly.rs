//! Sparse multivariate polynomials over the cyclotomic scalar field, used
//! to certify identities in formal parameters (gauge-field coefficients)
//! rather than at sampled points.
//!
//! Variables are indexed by `usize` and are *real* symbols: the distinguished
//! conjugation fixes every variable and conjugates the scalar coefficients.
//! A complex formal parameter is modelled as `r + w·s` with two real symbols
//! r, s and the purely imaginary constant w = q − q².

use crate::scalar::{Ring, Scalar};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Exponent vector, sparsely keyed by variable index.
pub type Monomial = BTreeMap<usize, u32>;

/// A polynomial Σ c_m · m with cyclotomic coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct PolyScalar {
    /// Monomial → nonzero coefficient.
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl PolyScalar {
    pub fn zero() -> Self {
        PolyScalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_scalar(c: &Scalar) -> Self {
        let mut p = PolyScalar::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::new(), c.clone());
        }
        p
    }

    pub fn one() -> Self {
        PolyScalar::from_scalar(&Scalar::one())
    }

    /// The variable with the given index.
    pub fn var(k: usize) -> Self {
        let mut m = Monomial::new();
        m.insert(k, 1);
        let mut p = PolyScalar::zero();
        p.terms.insert(m, Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial::new())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Some(c) if the polynomial is the constant c.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::new()) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        PolyScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Ring::neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return PolyScalar::zero();
        }
        PolyScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, w)| (m.clone(), w * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PolyScalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (k, e) in m2 {
                    *m.entry(*k).or_insert(0) += e;
                }
                out.insert_term(m, c1 * c2);
            }
        }
        out
    }

    /// The distinguished conjugation: variables are real, coefficients
    /// conjugate.
    pub fn conj(&self) -> Self {
        PolyScalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    /// Replace each variable for which `subst` yields a polynomial;
    /// variables mapped to None stay formal.
    pub fn substitute(&self, subst: &dyn Fn(usize) -> Option<PolyScalar>) -> Self {
        let mut out = PolyScalar::zero();
        for (m, c) in &self.terms {
            let mut term = PolyScalar::from_scalar(c);
            for (k, e) in m {
                let factor = match subst(*k) {
                    Some(p) => p,
                    None => PolyScalar::var(*k),
                };
                for _ in 0..*e {
                    term = term.mul(&factor);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Full evaluation at a point.
    pub fn eval(&self, assign: &dyn Fn(usize) -> Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, e) in m {
                let v = assign(*k);
                for _ in 0..*e {
                    t = &t * &v;
                }
            }
            out += &t;
        }
        out
    }

    /// All variable indices occurring in the polynomial.
    pub fn vars_used(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            s.extend(m.keys().copied());
        }
        s
    }

    /// Total degree (None for the zero polynomial).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.values().sum::<u32>())
            .max()
    }

    /// Render with caller-supplied variable names.
    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mono = m
                .iter()
                .map(|(k, e)| {
                    if *e == 1 {
                        name(*k)
                    } else {
                        format!("{}^{}", name(*k), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("·");
            let cs = format!("{c}");
            let part = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if cs.contains(['+', '-'].as_ref()) && !cs.starts_with('-') {
                format!("({cs})·{mono}")
            } else {
                format!("{cs}·{mono}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for PolyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&|k| format!("t{k}")))
    }
}

impl Ring for PolyScalar {
    fn zero() -> Self {
        PolyScalar::zero()
    }
    fn one() -> Self {
        PolyScalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        PolyScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        PolyScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PolyScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        PolyScalar::neg(self)
    }
    fn is_zero(&self) -> bool {
        PolyScalar::is_zero(self)
    }
    fn conj(&self) -> Self {
        PolyScalar::conj(self)
    }
    fn from_int(n: i64) -> Self {
        PolyScalar::from_scalar(&Scalar::from_int(n))
    }
}
