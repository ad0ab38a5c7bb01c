//! Transforms from `{1,2,3}`-sequences to words, the index sets `J` / `J'`,
//! and the integer coefficients `a_{p,q}^{(l,m,n)}`.
//!
//! A sequence `mu` records which parameter `lambda_{mu_i}` each step of the
//! successive approximation multiplies by. The transforms turn such a
//! sequence into an element of `Q<x,y>` by a left-to-right rewrite in which a
//! two-symbol pair is matched greedily before the single-symbol rules.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::comb::binomial;
use crate::error::Error;
use crate::word_algebra::{word_class_sum, FormalSum, Letter, Word};

/// A finite (possibly empty) sequence over `{1, 2, 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MuSequence(Vec<u8>);

impl MuSequence {
    pub fn new(entries: Vec<u8>) -> Result<MuSequence, Error> {
        if let Some(&bad) = entries.iter().find(|&&e| !(1..=3).contains(&e)) {
            return Err(Error::InvalidMu(bad));
        }
        Ok(MuSequence(entries))
    }

    pub fn empty() -> MuSequence {
        MuSequence(Vec::new())
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(#1, #2, #3)`
    pub fn counts(&self) -> (usize, usize, usize) {
        let c = |v| self.0.iter().filter(|&&e| e == v).count();
        (c(1), c(2), c(3))
    }

    /// True when `(1, 3)` occurs as adjacent entries.
    pub fn has_adjacent_13(&self) -> bool {
        self.0.windows(2).any(|w| w == [1, 3])
    }

    /// Exchanges the symbols `1` and `3`.
    pub fn swap_13(&self) -> MuSequence {
        MuSequence(
            self.0
                .iter()
                .map(|&e| match e {
                    1 => 3,
                    3 => 1,
                    other => other,
                })
                .collect(),
        )
    }
}

impl fmt::Display for MuSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MuSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<MuSequence, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(MuSequence::empty());
        }
        let entries = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .map_err(|e| Error::Parse(format!("bad mu entry {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MuSequence::new(entries)
    }
}

/// The four sequence-to-word transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// Solution regular at `0`: pair `(3,1) -> xy - yx`, `1 -> y`, `2 -> x+y`, `3 -> x`.
    T0,
    /// Letterwise `1 -> y`, `2 -> x+y`, `3 -> x`.
    T0Prime,
    /// Solution regular at `1`: pair `(1,3) -> xy - yx`, `1 -> x`, `2 -> x+y`, `3 -> y`.
    T1,
    /// Solution at infinity: pair `(1,3) -> xy - yx`, `1 -> -(x+y)`, `2 -> -y`, `3 -> x`.
    TInfinity,
}

fn letters(terms: &[(i64, &str)]) -> FormalSum {
    let mut s = FormalSum::zero();
    for &(c, w) in terms {
        s.add_term(w.parse().expect("static word"), BigRational::from_integer(c.into()));
    }
    s
}

impl Transform {
    fn pair(self) -> Option<(u8, u8)> {
        match self {
            Transform::T0 => Some((3, 1)),
            Transform::T1 | Transform::TInfinity => Some((1, 3)),
            Transform::T0Prime => None,
        }
    }

    fn single(self, e: u8) -> FormalSum {
        match (self, e) {
            (Transform::T0 | Transform::T0Prime, 1) => letters(&[(1, "y")]),
            (Transform::T0 | Transform::T0Prime, 3) => letters(&[(1, "x")]),
            (Transform::T1, 1) => letters(&[(1, "x")]),
            (Transform::T1, 3) => letters(&[(1, "y")]),
            (Transform::TInfinity, 1) => letters(&[(-1, "x"), (-1, "y")]),
            (Transform::TInfinity, 2) => letters(&[(-1, "y")]),
            (Transform::TInfinity, 3) => letters(&[(1, "x")]),
            (_, 2) => letters(&[(1, "x"), (1, "y")]),
            _ => unreachable!("validated mu entry"),
        }
    }

    pub fn apply(self, mu: &MuSequence) -> FormalSum {
        let commutator = letters(&[(1, "xy"), (-1, "yx")]);
        let e = mu.entries();
        let mut acc = FormalSum::one();
        let mut i = 0;
        while i < e.len() {
            let factor = match self.pair() {
                Some((a, b)) if e[i] == a && e.get(i + 1) == Some(&b) => {
                    i += 2;
                    commutator.clone()
                }
                _ => {
                    i += 1;
                    self.single(e[i - 1])
                }
            };
            acc = acc.concat(&factor);
        }
        acc
    }

    pub fn name(self) -> &'static str {
        match self {
            Transform::T0 => "t0",
            Transform::T0Prime => "t0prime",
            Transform::T1 => "t1",
            Transform::TInfinity => "tinf",
        }
    }
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Transform, Error> {
        match s {
            "t0" => Ok(Transform::T0),
            "t0prime" | "t0'" => Ok(Transform::T0Prime),
            "t1" => Ok(Transform::T1),
            "tinf" | "tinfty" => Ok(Transform::TInfinity),
            other => Err(Error::Parse(format!("unknown transform {other:?}"))),
        }
    }
}

pub fn t0(mu: &MuSequence) -> FormalSum {
    Transform::T0.apply(mu)
}

pub fn t0_prime(mu: &MuSequence) -> FormalSum {
    Transform::T0Prime.apply(mu)
}

pub fn t1(mu: &MuSequence) -> FormalSum {
    Transform::T1.apply(mu)
}

pub fn t_infinity(mu: &MuSequence) -> FormalSum {
    Transform::TInfinity.apply(mu)
}

/// `J(l,m,n)`: sequences with exactly `l` ones, `m` twos and `n` threes, in
/// lexicographic order. Negative counts give the empty set.
pub fn index_set_j(l: i64, m: i64, n: i64) -> Vec<MuSequence> {
    if l < 0 || m < 0 || n < 0 {
        return Vec::new();
    }
    fn rec(rem: [usize; 3], prefix: &mut Vec<u8>, out: &mut Vec<MuSequence>) {
        if rem == [0, 0, 0] {
            out.push(MuSequence(prefix.clone()));
            return;
        }
        for sym in 0..3 {
            if rem[sym] > 0 {
                let mut next = rem;
                next[sym] -= 1;
                prefix.push(sym as u8 + 1);
                rec(next, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec([l as usize, m as usize, n as usize], &mut Vec::new(), &mut out);
    out
}

/// `J'(l,m,n)`: the members of `J(l,m,n)` with no adjacent `(1,3)`.
pub fn index_set_j_prime(l: i64, m: i64, n: i64) -> Vec<MuSequence> {
    index_set_j(l, m, n)
        .into_iter()
        .filter(|mu| !mu.has_adjacent_13())
        .collect()
}

/// Sums a transform over a set of sequences (in parallel).
pub fn sum_transform(t: Transform, set: &[MuSequence]) -> FormalSum {
    set.par_iter()
        .map(|mu| t.apply(mu))
        .reduce(FormalSum::zero, |a, b| a + b)
}

/// `sum_{mu in J(l,m,n)} T0(mu)` by direct enumeration.
pub fn sum_t0_over_j(l: i64, m: i64, n: i64) -> FormalSum {
    sum_transform(Transform::T0, &index_set_j(l, m, n))
}

/// Closed form of `sum_{J(l,m,n)} T0`:
/// `sum_{p,q<=m} sum_{k<=l} C(q,k) C(l+p-q,l-k) C(m+n-p-k,n) W(l+m+n, l+p, q)`
/// where `W(k,d,q)` is the sum of all words of weight `k`, depth `d` and
/// `q` juxtapositions `yx`.
pub fn sum_t0_closed_form(l: i64, m: i64, n: i64) -> FormalSum {
    let mut out = FormalSum::zero();
    if l < 0 || m < 0 || n < 0 {
        return out;
    }
    for p in 0..=m {
        for q in 0..=m {
            let c: BigInt = (0..=l)
                .map(|k| binomial(q, k) * binomial(l + p - q, l - k) * binomial(m + n - p - k, n))
                .sum();
            if c.is_zero() {
                continue;
            }
            let class = word_class_sum((l + m + n) as usize, (l + p) as usize, q as usize);
            out += &class.scale(&BigRational::from_integer(c));
        }
    }
    out
}

/// `a_{p,q}^{(l,m,n)} = sum_{k=0}^{l-1} C(q,k) C(l+p-q-1, l-k-1) C(m+n-p-k-1, n-1)`.
pub fn a_coeff(l: i64, m: i64, n: i64, p: i64, q: i64) -> BigInt {
    (0..l)
        .map(|k| {
            binomial(q, k) * binomial(l + p - q - 1, l - k - 1) * binomial(m + n - p - k - 1, n - 1)
        })
        .sum()
}

/// Sum of all words `x^n y^l`.
pub fn x_pow_y_pow(n: usize, l: usize) -> FormalSum {
    FormalSum::from_word(Word::x_pow(n).concat(&Word::y_pow(l)))
}

/// Wraps a sum as `x * p * y`.
pub fn wrap_xy(p: &FormalSum) -> FormalSum {
    p.map_words(|w| {
        Word::letter(Letter::X)
            .concat(w)
            .concat(&Word::letter(Letter::Y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::tau;

    fn mu(s: &str) -> MuSequence {
        s.parse().unwrap()
    }

    fn s(words: &str) -> FormalSum {
        FormalSum::from_words(words.split_whitespace()).unwrap()
    }

    /// The recursive rule systems written out literally.
    fn t0_rules(e: &[u8]) -> FormalSum {
        let prepend = |head: &str, tail: FormalSum| s(head).concat(&tail);
        match e {
            [] => FormalSum::one(),
            [3, 1, rest @ ..] => &prepend("xy", t0_rules(rest)) - &prepend("yx", t0_rules(rest)),
            [1, rest @ ..] => prepend("y", t0_rules(rest)),
            [2, rest @ ..] => prepend("x y", t0_rules(rest)),
            [3, rest @ ..] => {
                assert!(rest.first() != Some(&1));
                prepend("x", t0_rules(rest))
            }
            _ => unreachable!(),
        }
    }

    fn t1_rules(e: &[u8]) -> FormalSum {
        let prepend = |head: &str, tail: FormalSum| s(head).concat(&tail);
        match e {
            [] => FormalSum::one(),
            [1, 3, rest @ ..] => &prepend("xy", t1_rules(rest)) - &prepend("yx", t1_rules(rest)),
            [1, rest @ ..] => prepend("x", t1_rules(rest)),
            [2, rest @ ..] => prepend("x y", t1_rules(rest)),
            [3, rest @ ..] => prepend("y", t1_rules(rest)),
            _ => unreachable!(),
        }
    }

    fn tinf_rules(e: &[u8]) -> FormalSum {
        let prepend = |head: &str, tail: FormalSum| s(head).concat(&tail);
        match e {
            [] => FormalSum::one(),
            [1, 3, rest @ ..] => &prepend("xy", tinf_rules(rest)) - &prepend("yx", tinf_rules(rest)),
            [1, rest @ ..] => -prepend("x y", tinf_rules(rest)),
            [2, rest @ ..] => -prepend("y", tinf_rules(rest)),
            [3, rest @ ..] => prepend("x", tinf_rules(rest)),
            _ => unreachable!(),
        }
    }

    fn all_sequences(max_len: usize) -> Vec<MuSequence> {
        let mut out = vec![MuSequence::empty()];
        let mut layer = vec![Vec::<u8>::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for e in 1..=3 {
                    let mut q = p.clone();
                    q.push(e);
                    out.push(MuSequence::new(q.clone()).unwrap());
                    next.push(q);
                }
            }
            layer = next;
        }
        out
    }

    #[test]
    fn t0_examples() {
        assert_eq!(t0(&MuSequence::empty()), FormalSum::one());
        assert_eq!(t0(&mu("3,1")), &s("xy") - &s("yx"));
        assert_eq!(t0(&mu("1,3")), s("yx"));
    }

    #[test]
    fn t0_prime_examples() {
        assert_eq!(t0_prime(&mu("2")), s("x y"));
        assert_eq!(t0_prime(&mu("3,1")), s("xy"));
    }

    #[test]
    fn t1_and_tinf_examples() {
        assert_eq!(t1(&mu("1,3")), &s("xy") - &s("yx"));
        assert_eq!(t1(&mu("3")), s("y"));
        assert_eq!(t_infinity(&mu("2")), -s("y"));
        assert_eq!(t_infinity(&mu("1,3")), &s("xy") - &s("yx"));
        assert_eq!(t_infinity(&mu("1")), -s("x y"));
    }

    #[test]
    fn greedy_engine_matches_literal_rules() {
        for m in all_sequences(6) {
            assert_eq!(t0(&m), t0_rules(m.entries()), "T0 {m}");
            assert_eq!(t1(&m), t1_rules(m.entries()), "T1 {m}");
            assert_eq!(t_infinity(&m), tinf_rules(m.entries()), "Tinf {m}");
        }
    }

    #[test]
    fn t1_is_t0_of_the_13_swap() {
        for m in all_sequences(6) {
            assert_eq!(t1(&m), t0(&m.swap_13()), "{m}");
        }
        // per sequence, tau(T0) and T1 differ
        assert_ne!(t1(&mu("1,3")), tau(&t0(&mu("1,3"))));
    }

    #[test]
    fn t1_sum_is_dual_of_t0_sum() {
        for total in 0..=6i64 {
            for l in 0..=total {
                for m in 0..=total - l {
                    let n = total - l - m;
                    let set = index_set_j(l, m, n);
                    assert_eq!(
                        sum_transform(Transform::T1, &set),
                        tau(&sum_transform(Transform::T0, &set)),
                        "J({l},{m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn j_enumeration() {
        assert_eq!(index_set_j(1, 1, 1).len(), 6);
        assert_eq!(index_set_j(2, 0, 1).len(), 3);
        assert!(index_set_j(-1, 0, 0).is_empty());
        assert_eq!(index_set_j(0, 0, 0), vec![MuSequence::empty()]);
        let j = index_set_j(1, 0, 1);
        assert_eq!(j, vec![mu("1,3"), mu("3,1")]);
        assert_eq!(index_set_j_prime(1, 0, 1), vec![mu("3,1")]);
    }

    #[test]
    fn lemma_part_one() {
        assert_eq!(sum_t0_over_j(0, 0, 3), s("xxx"));
        for l in 0..=4 {
            for n in 0..=4 {
                assert_eq!(sum_t0_over_j(l, 0, n), x_pow_y_pow(n as usize, l as usize));
                assert_eq!(
                    sum_transform(Transform::T0Prime, &index_set_j_prime(l, 0, n)),
                    x_pow_y_pow(n as usize, l as usize)
                );
            }
        }
    }

    #[test]
    fn sum_over_111_by_hand() {
        let by_hand = index_set_j(1, 1, 1)
            .iter()
            .fold(FormalSum::zero(), |acc, m| acc + t0_rules(m.entries()));
        assert_eq!(sum_t0_over_j(1, 1, 1), by_hand);
        assert_eq!(sum_t0_closed_form(1, 1, 1), by_hand);
    }

    #[test]
    fn closed_form_and_t0_prime_sum_agree_up_to_total_six() {
        for total in 0..=6i64 {
            for l in 0..=total {
                for m in 0..=total - l {
                    let n = total - l - m;
                    let direct = sum_t0_over_j(l, m, n);
                    assert_eq!(direct, sum_t0_closed_form(l, m, n), "({l},{m},{n})");
                    assert_eq!(
                        direct,
                        sum_transform(Transform::T0Prime, &index_set_j_prime(l, m, n)),
                        "J' ({l},{m},{n})"
                    );
                }
            }
        }
    }

    #[test]
    fn t0_prime_monomials_have_multiplicity_one() {
        for total in 0..=6i64 {
            for l in 0..=total {
                for m in 0..=total - l {
                    for mu in index_set_j_prime(l, m, total - l - m) {
                        let img = t0_prime(&mu);
                        assert!(img.iter().all(|(_, c)| *c == BigRational::from_integer(1.into())));
                    }
                }
            }
        }
    }

    #[test]
    fn a_coeff_examples() {
        assert_eq!(a_coeff(1, 0, 1, 0, 0), BigInt::from(1));
        // q = 1 needs height 2, hence depth l >= 2
        assert_eq!(a_coeff(1, 1, 3, 0, 1), BigInt::zero());
        for l in 2..=5i64 {
            for n in 1..=5i64 {
                assert_eq!(a_coeff(l, 1, n, 0, 0), BigInt::from(n));
                assert_eq!(a_coeff(l, 1, n, 0, 1), BigInt::from(1));
                assert_eq!(a_coeff(l, 1, n, 1, 0), BigInt::from(l));
                assert_eq!(a_coeff(l, 1, n, 1, 1), BigInt::from(1));
            }
        }
    }

    #[test]
    fn a_coeff_m2_example_row() {
        // coefficients of lambda1^l lambda2^2 lambda3^n; l >= 3 so that every
        // profile in the row is nonempty
        for l in 3..=5i64 {
            for n in 1..=4i64 {
                let expect = [
                    ((0, 0), n * (n + 1) / 2),
                    ((0, 1), n),
                    ((0, 2), 1),
                    ((1, 0), l * n),
                    ((1, 1), l + n - 1),
                    ((1, 2), 2),
                    ((2, 0), l * (l + 1) / 2),
                    ((2, 1), l),
                    ((2, 2), 1),
                ];
                for ((p, q), v) in expect {
                    assert_eq!(a_coeff(l, 2, n, p, q), BigInt::from(v), "l={l} n={n} p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn a_coeff_is_bounded() {
        for l in 1..=6i64 {
            for m in 0..=6i64 {
                for n in 1..=6i64 {
                    let bound = BigInt::from(1) << (l + m + n) as usize;
                    for p in 0..=m {
                        for q in 0..=m {
                            let a = a_coeff(l, m, n, p, q);
                            assert!(a >= BigInt::zero() && a < bound);
                        }
                    }
                }
            }
        }
    }
}
