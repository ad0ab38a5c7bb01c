use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::word::{Letter, Word};
use crate::error::Error;

/// An element of `Q<x,y>`: a finite map from words to nonzero rationals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<Word, BigRational>,
}

impl FormalSum {
    pub fn zero() -> FormalSum {
        FormalSum::default()
    }

    pub fn one() -> FormalSum {
        FormalSum::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> FormalSum {
        FormalSum::term(w, BigRational::one())
    }

    pub fn letter(l: Letter) -> FormalSum {
        FormalSum::from_word(Word::letter(l))
    }

    pub fn term(w: Word, c: BigRational) -> FormalSum {
        let mut s = FormalSum::zero();
        s.add_term(w, c);
        s
    }

    /// Parses a whitespace separated list of words, e.g. `"xy yx"` -> `xy + yx`.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<FormalSum, Error> {
        let mut s = FormalSum::zero();
        for w in words {
            s.add_term(w.parse()?, BigRational::one());
        }
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, BigRational> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> FormalSum {
        if c.is_zero() {
            return FormalSum::zero();
        }
        FormalSum {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> FormalSum {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Applies a linear map defined on monomials.
    pub fn map_linear(&self, mut f: impl FnMut(&Word) -> FormalSum) -> FormalSum {
        let mut out = FormalSum::zero();
        for (w, c) in &self.terms {
            for (v, d) in f(w).terms {
                out.add_term(v, d * c);
            }
        }
        out
    }

    /// Linear extension of a word-to-word map.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> FormalSum {
        let mut out = FormalSum::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Concatenation product in `Q<x,y>`.
    pub fn concat(&self, other: &FormalSum) -> FormalSum {
        let mut out = FormalSum::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn concat_word(&self, w: &Word) -> FormalSum {
        self.map_words(|u| u.concat(w))
    }

    pub fn prepend_word(&self, w: &Word) -> FormalSum {
        self.map_words(|u| w.concat(u))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn all_in_h1(&self) -> bool {
        self.terms.keys().all(Word::in_h1)
    }

    pub fn all_in_h0(&self) -> bool {
        self.terms.keys().all(Word::in_h0)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Canonical `(word, numerator, denominator)` records in word order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(w, c)| TermRecord {
                word: w.clone(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<FormalSum, Error> {
        let mut s = FormalSum::zero();
        for r in records {
            let n: BigInt = r
                .numerator
                .parse()
                .map_err(|e| Error::Parse(format!("numerator {:?}: {e}", r.numerator)))?;
            let d: BigInt = r
                .denominator
                .parse()
                .map_err(|e| Error::Parse(format!("denominator {:?}: {e}", r.denominator)))?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            s.add_term(r.word.clone(), BigRational::new(n, d));
        }
        Ok(s)
    }
}

/// Serialized form of one term of a [`FormalSum`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: Word,
    pub numerator: String,
    pub denominator: String,
}

impl Serialize for FormalSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<FormalSum, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        FormalSum::from_records(&records).map_err(serde::de::Error::custom)
    }
}

impl From<Word> for FormalSum {
    fn from(w: Word) -> FormalSum {
        FormalSum::from_word(w)
    }
}

impl FromIterator<(Word, BigRational)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (Word, BigRational)>>(iter: I) -> FormalSum {
        let mut s = FormalSum::zero();
        for (w, c) in iter {
            s.add_term(w, c);
        }
        s
    }
}

impl AddAssign<&FormalSum> for FormalSum {
    fn add_assign(&mut self, rhs: &FormalSum) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for FormalSum {
    type Output = FormalSum;
    fn add(mut self, rhs: FormalSum) -> FormalSum {
        self += &rhs;
        self
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        FormalSum {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        -&self
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &FormalSum) -> FormalSum {
        self + &(-rhs)
    }
}

impl Sub for FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: FormalSum) -> FormalSum {
        &self - &rhs
    }
}

/// Concatenation.
impl Mul for &FormalSum {
    type Output = FormalSum;
    fn mul(self, rhs: &FormalSum) -> FormalSum {
        self.concat(rhs)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(words: &str) -> FormalSum {
        FormalSum::from_words(words.split_whitespace()).unwrap()
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let a = s("xy yx");
        let b = &a - &s("yx");
        assert_eq!(b, s("xy"));
        assert_eq!(b.len(), 1);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let v = &s("yx xyy xyy") - &s("xy");
        assert_eq!(v.to_string(), "-xy + 2*xyy + yx");
        assert_eq!(FormalSum::zero().to_string(), "0");
        assert_eq!(FormalSum::one().to_string(), "1");
    }

    #[test]
    fn records_round_trip_through_json() {
        let v = (&s("yx xyy xyy") - &s("xy")).scale(&BigRational::new(3.into(), 7.into()));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"[{"word":"xy","numerator":"-3","denominator":"7"},{"word":"xyy","numerator":"6","denominator":"7"},{"word":"yx","numerator":"3","denominator":"7"}]"#
        );
        let back: FormalSum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn concatenation_is_bilinear() {
        let a = s("x y");
        let b = s("xy");
        assert_eq!(&a * &b, s("xxy yxy"));
        assert_eq!(&FormalSum::one() * &b, b);
    }
}
