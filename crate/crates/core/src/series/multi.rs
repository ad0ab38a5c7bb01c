use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Real;

/// Coefficient ring of a [`TruncatedMultiSeries`].
pub trait Coeff: Clone + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Coeff for Real {
    fn zero() -> Self {
        Real::ZERO
    }
    fn one() -> Self {
        Real::ONE
    }
    fn is_zero(&self) -> bool {
        self.is_exact_zero()
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn from_rational(q: &BigRational) -> Self {
        Real::from_rational(q)
    }
}

/// Exponent triple `(e1, e2, e3)` of `lambda1^e1 lambda2^e2 lambda3^e3`.
pub type Exponent = [u32; 3];

pub fn total_degree(e: &Exponent) -> u32 {
    e[0] + e[1] + e[2]
}

/// All exponent triples of total degree `<= cap`, in lexicographic order.
pub fn exponents_up_to(cap: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for a in 0..=cap {
        for b in 0..=cap - a {
            for c in 0..=cap - a - b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// A polynomial in `lambda1, lambda2, lambda3` truncated at total degree `cap`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMultiSeries<C> {
    cap: u32,
    coeffs: BTreeMap<Exponent, C>,
}

impl<C: Coeff> TruncatedMultiSeries<C> {
    pub fn zero(cap: u32) -> Self {
        TruncatedMultiSeries { cap, coeffs: BTreeMap::new() }
    }

    pub fn one(cap: u32) -> Self {
        Self::constant(C::one(), cap)
    }

    pub fn constant(c: C, cap: u32) -> Self {
        Self::monomial([0, 0, 0], c, cap)
    }

    pub fn monomial(e: Exponent, c: C, cap: u32) -> Self {
        let mut s = Self::zero(cap);
        s.add_term(e, c);
        s
    }

    /// `lambda_{i+1}` for `i` in `0..3`.
    pub fn variable(i: usize, cap: u32) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(e, C::one(), cap)
    }

    /// `sum_i form[i] * lambda_{i+1}`.
    pub fn linear(form: [i64; 3], cap: u32) -> Self {
        let mut s = Self::zero(cap);
        for (i, &c) in form.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            s.add_term(e, C::from_int(c));
        }
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Adds `c * lambda^e`, dropping terms above the cap.
    pub fn add_term(&mut self, e: Exponent, c: C) {
        if total_degree(&e) > self.cap || c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.coeffs.remove(&e);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, e: &Exponent) -> C {
        self.coeffs.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.coeffs.iter()
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&[0, 0, 0])
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.cap);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.coeffs {
            out.add_term(*e, v.mul(c));
        }
        out
    }

    pub fn ts_add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.cap.min(other.cap));
        for (e, v) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(*e, v.clone());
        }
        out
    }

    pub fn ts_mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = Self::zero(cap);
        for (a, u) in &self.coeffs {
            for (b, v) in &other.coeffs {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                if total_degree(&e) <= cap {
                    out.add_term(e, u.mul(v));
                }
            }
        }
        out
    }

    /// Multiplies by the monomial `lambda^e` (a coefficient shift).
    pub fn shift(&self, e: Exponent) -> Self {
        let mut out = Self::zero(self.cap);
        for (a, v) in &self.coeffs {
            out.add_term([a[0] + e[0], a[1] + e[1], a[2] + e[2]], v.clone());
        }
        out
    }

    /// `sum_k s^k / k!`; requires a zero constant term.
    pub fn ts_exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
            power = power.ts_mul(self).scale(&C::from_rational(&inv_k));
            out = out.ts_add(&power);
        }
        Ok(out)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedMultiSeries<D> {
        let mut out = TruncatedMultiSeries::zero(self.cap);
        for (e, v) in &self.coeffs {
            out.add_term(*e, f(v));
        }
        out
    }

    /// Restriction to `lambda2 = 0`.
    pub fn at_lambda2_zero(&self) -> Self {
        let mut out = Self::zero(self.cap);
        for (e, v) in &self.coeffs {
            if e[1] == 0 {
                out.add_term(*e, v.clone());
            }
        }
        out
    }

    /// Dense `(exponent, coefficient)` list over every triple up to the cap.
    pub fn dense(&self) -> Vec<(Exponent, C)> {
        exponents_up_to(self.cap)
            .into_iter()
            .map(|e| (e, self.coeff(&e)))
            .collect()
    }
}

impl<C: Coeff> Add for &TruncatedMultiSeries<C> {
    type Output = TruncatedMultiSeries<C>;
    fn add(self, rhs: Self) -> TruncatedMultiSeries<C> {
        self.ts_add(rhs)
    }
}

impl<C: Coeff> Neg for &TruncatedMultiSeries<C> {
    type Output = TruncatedMultiSeries<C>;
    fn neg(self) -> TruncatedMultiSeries<C> {
        self.map(|c| c.neg())
    }
}

impl<C: Coeff> Sub for &TruncatedMultiSeries<C> {
    type Output = TruncatedMultiSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedMultiSeries<C> {
        self.ts_add(&-rhs)
    }
}

impl<C: Coeff> Mul for &TruncatedMultiSeries<C> {
    type Output = TruncatedMultiSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedMultiSeries<C> {
        self.ts_mul(rhs)
    }
}

impl TruncatedMultiSeries<Real> {
    /// Largest coefficientwise midpoint distance, with the exponent attaining it.
    pub fn max_deviation(&self, other: &Self) -> (f64, Exponent) {
        let cap = self.cap.min(other.cap);
        exponents_up_to(cap)
            .into_iter()
            .map(|e| (self.coeff(&e).distance(&other.coeff(&e)), e))
            .fold((0.0, [0, 0, 0]), |acc, x| if x.0 > acc.0 { x } else { acc })
    }

    /// Largest coefficient radius.
    pub fn max_radius(&self) -> f64 {
        self.coeffs.values().map(|c| c.rad).fold(0.0, f64::max)
    }
}

pub fn monomial_name(e: &Exponent) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("l{}", i + 1)),
            _ => parts.push(format!("l{}^{}", i + 1, k)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for TruncatedMultiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(deg {})", self.cap + 1);
        }
        for (e, c) in &self.coeffs {
            writeln!(f, "{}: {}", monomial_name(e), c)?;
        }
        Ok(())
    }
}

/// A univariate power series `sum_k c_k t^k`, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct UniSeries<C> {
    pub coeffs: Vec<C>,
}

impl<C: Coeff> UniSeries<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        UniSeries { coeffs }
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }
}

/// Expands `sum_k c_k (form . lambda)^k` up to total degree `cap`.
pub fn substitute_linear<C: Coeff>(s: &UniSeries<C>, form: [i64; 3], cap: u32) -> TruncatedMultiSeries<C> {
    let base = TruncatedMultiSeries::<C>::linear(form, cap);
    let mut power = TruncatedMultiSeries::one(cap);
    let mut out = TruncatedMultiSeries::zero(cap);
    for k in 0..=cap as usize {
        out = out.ts_add(&power.scale(&s.coeff(k)));
        power = power.ts_mul(&base);
    }
    out
}
