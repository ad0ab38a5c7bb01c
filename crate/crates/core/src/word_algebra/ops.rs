//! Shuffle product, the regularization `reg^1` onto `H^1`, and duality.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sum::FormalSum;
use super::word::{Letter, Word};

/// Shuffle product of two words.
///
/// Uses the recursion `a u ш b v = a (u ш b v) + b (a u ш v)` tabulated over
/// suffix pairs, so each intermediate shuffle is computed once.
pub fn shuffle(u: &Word, v: &Word) -> FormalSum {
    let (a, b) = (u.letters(), v.letters());
    let (m, n) = (a.len(), b.len());
    // table[i][j] = a[i..] ш b[j..]
    let mut table: Vec<Vec<BTreeMap<Vec<Letter>, BigRational>>> =
        vec![vec![BTreeMap::new(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            let mut cell = BTreeMap::new();
            if i == m {
                cell.insert(b[j..].to_vec(), BigRational::one());
            } else if j == n {
                cell.insert(a[i..].to_vec(), BigRational::one());
            } else {
                for (src, lead) in [(&table[i + 1][j], a[i]), (&table[i][j + 1], b[j])] {
                    for (w, c) in src {
                        let mut word = Vec::with_capacity(w.len() + 1);
                        word.push(lead);
                        word.extend_from_slice(w);
                        *cell.entry(word).or_insert_with(BigRational::zero) += c;
                    }
                }
            }
            table[i][j] = cell;
        }
    }
    table[0][0]
        .iter()
        .map(|(w, c)| (Word::new(w.clone()), c.clone()))
        .collect()
}

/// Bilinear extension of [`shuffle`].
pub fn shuffle_sum(p: &FormalSum, q: &FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            let c = a * b;
            for (w, d) in shuffle(u, v).iter() {
                out.add_term(w.clone(), d * &c);
            }
        }
    }
    out
}

/// `w ш w ш ... ш w` (`n` factors); `w^{ш0} = 1`.
pub fn shuffle_power(w: &FormalSum, n: usize) -> FormalSum {
    (0..n).fold(FormalSum::one(), |acc, _| shuffle_sum(&acc, w))
}

/// `reg^1` of a single word.
///
/// Writes `w = w' y x^n` and returns `(-1)^n (w' ш x^n) y`; words without a
/// `y` map to `0` (or to `1` for the unit).
pub fn reg1_word(w: &Word) -> FormalSum {
    let (head, n) = w.split_trailing_x();
    if n == 0 {
        return FormalSum::from_word(w.clone());
    }
    if head.is_unit() {
        return FormalSum::zero();
    }
    let prefix = head.slice(0, head.len() - 1);
    let body = shuffle(&prefix, &Word::x_pow(n)).concat_word(&Word::letter(Letter::Y));
    if n % 2 == 1 {
        -body
    } else {
        body
    }
}

/// The projection `H -> H^1` given by the constant term of `H = H^1[x]`.
pub fn reg1(p: &FormalSum) -> FormalSum {
    p.map_linear(reg1_word)
}

/// Linear extension of [`Word::tau`].
pub fn tau(p: &FormalSum) -> FormalSum {
    p.map_words(Word::tau)
}

/// Admissible words `x w y` of weight `k`, depth `n` and height `s`, in
/// lexicographic order. Empty when no word has that profile.
pub fn enumerate_profile(k: usize, n: usize, s: usize) -> Vec<Word> {
    if k < 2 || n == 0 || n >= k || s == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    // x ... y: choose the depth-1 remaining y's among the k-2 inner slots
    for inner in Word::all_of_length(k - 2) {
        if inner.depth() != n - 1 {
            continue;
        }
        let w = Word::letter(Letter::X)
            .concat(&inner)
            .concat(&Word::letter(Letter::Y));
        if w.height() == s {
            out.push(w);
        }
    }
    out
}

/// Sum of all words (any first/last letter) of the given weight, depth and
/// `yx`-count.
pub fn word_class_sum(weight: usize, depth: usize, yx: usize) -> FormalSum {
    Word::all_of_length(weight)
        .filter(|w| w.depth() == depth && w.yx_count() == yx)
        .map(|w| (w, BigRational::one()))
        .collect()
}
