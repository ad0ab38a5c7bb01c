//! The profile sums `G0(k,n,s;z)` and `G(k,n,s;z)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{ComplexValue, PolylogEvaluator, Real};
use crate::word_algebra::{enumerate_profile, Letter, Word};

/// Which of the two profile sums a [`GSum`] denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GKind {
    /// Admissible words `x w y`; finite at `z = 1`.
    G0,
    /// Words `w y` with any first letter.
    G,
}

/// A profile sum `G0(k,n,s;z)` or `G(k,n,s;z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GSum {
    pub k: usize,
    pub n: usize,
    pub s: usize,
    pub kind: GKind,
}

impl GSum {
    pub fn g0(k: usize, n: usize, s: usize) -> GSum {
        GSum { k, n, s, kind: GKind::G0 }
    }

    pub fn g(k: usize, n: usize, s: usize) -> GSum {
        GSum { k, n, s, kind: GKind::G }
    }

    /// The words summed, in lexicographic order.
    pub fn words(&self) -> Vec<Word> {
        match self.kind {
            GKind::G0 => enumerate_profile(self.k, self.n, self.s),
            GKind::G => g_words(self.k, self.n, self.s),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words().is_empty()
    }

    pub fn eval(&self, ev: &PolylogEvaluator, z: f64) -> Result<Real> {
        match self.kind {
            GKind::G0 => g0_value(ev, self.k, self.n, self.s, z),
            GKind::G => g_value(ev, self.k, self.n, self.s, z),
        }
    }
}

/// Words `u` ending in `y` with `|u| = k`, depth `n` and `s - 1` factors `yx`.
pub fn g_words(k: usize, n: usize, s: usize) -> Vec<Word> {
    if k == 0 || n == 0 || s == 0 {
        return Vec::new();
    }
    Word::all_of_length(k)
        .filter(|w| w.last() == Some(Letter::Y) && w.depth() == n && w.yx_count() == s - 1)
        .collect()
}

/// `G0(k,n,s;z)` for `0 < z <= 1`; zero for an empty profile.
pub fn g0_value(ev: &PolylogEvaluator, k: usize, n: usize, s: usize, z: f64) -> Result<Real> {
    let mut total = Real::ZERO;
    for w in enumerate_profile(k, n, s) {
        total += if z == 1.0 { ev.zeta_word(&w)? } else { ev.li_h1_word(&w, z)? };
    }
    Ok(total)
}

/// `G(k,n,s;z)` for `0 < z < 1`.
pub fn g_value(ev: &PolylogEvaluator, k: usize, n: usize, s: usize, z: f64) -> Result<Real> {
    if z >= 1.0 {
        return Err(Error::Domain(z));
    }
    let mut total = Real::ZERO;
    for w in g_words(k, n, s) {
        total += ev.li_h1_word(&w, z)?;
    }
    Ok(total)
}

/// `G0(k,n,s;z)` as a certified value.
pub fn g0_eval(k: usize, n: usize, s: usize, z: f64, ev: &PolylogEvaluator) -> Result<ComplexValue> {
    let v = g0_value(ev, k, n, s, z)?;
    ev.context().certify(|| format!("G0({k},{n},{s};{z})"), v).map(ComplexValue::from_real)
}

/// `G(k,n,s;z)` as a certified value.
pub fn g_eval(k: usize, n: usize, s: usize, z: f64, ev: &PolylogEvaluator) -> Result<ComplexValue> {
    let v = g_value(ev, k, n, s, z)?;
    ev.context().certify(|| format!("G({k},{n},{s};{z})"), v).map(ComplexValue::from_real)
}
