use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Signed;

use crate::numeric::Real;

use super::gamma::ZetaVector;
use super::multi::Coeff;

/// A polynomial with rational coefficients in the symbols `zeta(2), zeta(3), ...`.
///
/// Monomials are stored as exponent vectors where entry `i` is the power of
/// `zeta(i + 2)`. Evaluating only at the end lets cancellations happen
/// exactly, which keeps certified radii small.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ZetaPoly {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl ZetaPoly {
    /// The symbol `zeta(n)`, `n >= 2`.
    pub fn zeta(n: usize) -> ZetaPoly {
        assert!(n >= 2, "zeta({n}) is not a symbol");
        let mut e = vec![0; n - 1];
        e[n - 2] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, <BigRational as num_traits::One>::one());
        ZetaPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let e = trim(e);
        let slot = self.terms.entry(e.clone()).or_insert_with(<BigRational as num_traits::Zero>::zero);
        *slot += c;
        if num_traits::Zero::is_zero(slot) {
            self.terms.remove(&e);
        }
    }

    /// Evaluates at the given zeta values.
    pub fn eval(&self, zeta: &ZetaVector) -> Real {
        let mut total = Real::ZERO;
        for (e, c) in &self.terms {
            let mut term = Real::from_rational(c);
            for (i, &p) in e.iter().enumerate() {
                term = term * zeta.get(i + 2).powi(p);
            }
            total += term;
        }
        total
    }
}

impl Coeff for ZetaPoly {
    fn zero() -> Self {
        ZetaPoly::default()
    }
    fn one() -> Self {
        ZetaPoly::from_rational(&<BigRational as num_traits::One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = ZetaPoly::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let len = a.len().max(b.len());
                let e = (0..len)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        ZetaPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    fn from_rational(q: &BigRational) -> Self {
        let mut out = ZetaPoly::default();
        if !num_traits::Zero::is_zero(q) {
            out.terms.insert(Vec::new(), q.clone());
        }
        out
    }
}

impl std::fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            let sep = if k > 0 { " " } else { "" };
            write!(f, "{sep}{sign}{sep}{}", c.abs())?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*z{}", i + 2)?,
                    _ => write!(f, "*z{}^{p}", i + 2)?,
                }
            }
        }
        Ok(())
    }
}
