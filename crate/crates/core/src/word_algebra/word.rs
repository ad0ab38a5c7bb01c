use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A letter of the two-letter alphabet. `X` sorts before `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A monomial of the free algebra on `x`, `y`. The empty word is the unit `1`.
///
/// Ordering is lexicographic with `x < y` (a proper prefix sorts first), which
/// is the order used for every deterministic enumeration in the crate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// `x^n`
    pub fn x_pow(n: usize) -> Word {
        Word(vec![Letter::X; n])
    }

    /// `y^n`
    pub fn y_pow(n: usize) -> Word {
        Word(vec![Letter::Y; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Number of letters.
    pub fn weight(&self) -> usize {
        self.0.len()
    }

    /// Number of `y` letters.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Y).count()
    }

    /// Number of adjacent pairs `yx`.
    pub fn yx_count(&self) -> usize {
        self.0
            .windows(2)
            .filter(|w| w[0] == Letter::Y && w[1] == Letter::X)
            .count()
    }

    /// `yx_count + 1`; the unit has height 1.
    pub fn height(&self) -> usize {
        self.yx_count() + 1
    }

    /// Member of `H^1 = Q + H y`.
    pub fn in_h1(&self) -> bool {
        self.0.last().is_none_or(|&l| l == Letter::Y)
    }

    /// Member of `H^0 = Q + x H y` (admissible).
    pub fn in_h0(&self) -> bool {
        matches!((self.0.first(), self.0.last()), (None, None) | (Some(Letter::X), Some(Letter::Y)))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The duality anti-automorphism: reverse and exchange `x <-> y`.
    pub fn tau(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    /// Splits `w = w0 x^n` with `w0` empty or ending in `y`.
    pub fn split_trailing_x(&self) -> (Word, usize) {
        let n = self.0.iter().rev().take_while(|&&l| l == Letter::X).count();
        (Word(self.0[..self.0.len() - n].to_vec()), n)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// All words of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u64..(1u64 << len)).map(move |bits| {
            Word(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 1 {
                            Letter::Y
                        } else {
                            Letter::X
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::unit());
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(Error::Parse(format!("invalid letter {other:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A multi-index `(k_1, ..., k_n)` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexVector(Vec<u32>);

impl IndexVector {
    pub fn new(k: Vec<u32>) -> Result<IndexVector, Error> {
        if k.is_empty() || k.contains(&0) {
            return Err(Error::InvalidIndex(format!("{k:?}")));
        }
        Ok(IndexVector(k))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// `#{i : k_i >= 2}`
    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&k| k >= 2).count()
    }

    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    /// `(k_1, ..., k_n) -> x^{k_1-1} y ... x^{k_n-1} y`
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.weight() as usize);
        for &k in &self.0 {
            letters.extend(std::iter::repeat_n(Letter::X, k as usize - 1));
            letters.push(Letter::Y);
        }
        Word(letters)
    }

    /// Inverse of [`IndexVector::to_word`]; the word must be a non-unit element of `H^1`.
    pub fn from_word(w: &Word) -> Result<IndexVector, Error> {
        if w.is_unit() || !w.in_h1() {
            return Err(Error::NotInH1(w.to_string()));
        }
        let mut k = Vec::new();
        let mut run = 1;
        for &l in w.letters() {
            match l {
                Letter::X => run += 1,
                Letter::Y => {
                    k.push(run);
                    run = 1;
                }
            }
        }
        Ok(IndexVector(k))
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for IndexVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexVector, Error> {
        let k = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad index entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        IndexVector::new(k)
    }
}
