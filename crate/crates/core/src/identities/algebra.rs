//! Exact checks of the word algebra and the sequence transforms, and the
//! analytic sanity checks of the evaluator.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::comb::binomial;
use crate::error::Result;
use crate::numeric::{zeta_direct, PolylogEvaluator, Real};
use crate::seq_transform::{index_set_j, index_set_j_prime, sum_t0_closed_form, sum_t0_over_j, sum_transform, x_pow_y_pow, Transform};
use crate::word_algebra::{reg1, shuffle, shuffle_sum, tau, FormalSum, IndexVector, Letter, Word};

use super::report::IdentityReport;

/// Tally of exact sub-checks; a report with `deviation` = number of failures
/// and a zero budget.
struct Tally {
    identity: &'static str,
    checked: usize,
    failures: Vec<String>,
    start: std::time::Instant,
}

impl Tally {
    fn new(identity: &'static str) -> Tally {
        Tally { identity, checked: 0, failures: Vec::new(), start: std::time::Instant::now() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> IdentityReport {
        let failed = self.failures.len();
        IdentityReport {
            identity: self.identity.to_string(),
            params: Default::default(),
            deviation: failed as f64,
            budget: 0.0,
            pass: failed == 0,
            wall_ms: self.start.elapsed().as_millis() as u64,
            at: self.failures.first().cloned().unwrap_or_default(),
            lhs: 0.0,
            rhs: 0.0,
            note: None,
        }
        .param("checked", self.checked)
    }
}

fn words_up_to(max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(Word::all_of_length)
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::new((0..len).map(|_| if rng.random_bool(0.5) { Letter::X } else { Letter::Y }).collect())
}

fn random_sum(rng: &mut ChaCha8Rng, max_len: usize) -> FormalSum {
    let mut p = FormalSum::zero();
    for _ in 0..rng.random_range(1..=3) {
        let c = BigRational::new(BigInt::from(rng.random_range(-5..=5)), BigInt::from(rng.random_range(1..=4)));
        p.add_term(random_word(rng, max_len), c);
    }
    p
}

/// Shuffle laws and the anti-automorphism `tau`:
/// exhaustively for `|u| + |v| <= exhaustive` (commutativity, coefficient sum
/// `C(|u|+|v|, |u|)`, weight grading, `tau(u sh v) = tau u sh tau v`,
/// `tau(uv) = tau(v) tau(u)`, `tau tau = id`) and associativity on triples of
/// total weight `<= exhaustive`; then `samples` seeded random sums up to
/// weight `max_weight`.
pub fn shuffle_laws_check(exhaustive: usize, max_weight: usize, samples: usize, seed: u64) -> IdentityReport {
    let mut t = Tally::new("shuffle-laws");
    let words: Vec<Word> = words_up_to(exhaustive).collect();
    for u in &words {
        t.check(u.tau().tau() == *u, || format!("tau tau {u}"));
        for v in &words {
            if u.len() + v.len() > exhaustive {
                continue;
            }
            let uv = shuffle(u, v);
            t.check(uv == shuffle(v, u), || format!("{u} sh {v} commutes"));
            let expect = BigRational::from_integer(binomial((u.len() + v.len()) as i64, u.len() as i64));
            t.check(uv.coefficient_sum() == expect, || format!("{u} sh {v} coefficient sum"));
            t.check(uv.words().all(|w| w.len() == u.len() + v.len()), || format!("{u} sh {v} weight"));
            let tu = FormalSum::from_word(u.clone());
            let tv = FormalSum::from_word(v.clone());
            t.check(tau(&uv) == shuffle(&u.tau(), &v.tau()), || format!("tau({u} sh {v})"));
            t.check(tau(&(&tu * &tv)) == &tau(&tv) * &tau(&tu), || format!("tau({u}{v})"));
        }
    }
    for u in &words {
        for v in &words {
            for w in &words {
                if u.len() + v.len() + w.len() > exhaustive {
                    continue;
                }
                let wsum = FormalSum::from_word(w.clone());
                let usum = FormalSum::from_word(u.clone());
                t.check(
                    shuffle_sum(&shuffle(u, v), &wsum) == shuffle_sum(&usum, &shuffle(v, w)),
                    || format!("({u} sh {v}) sh {w}"),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let third = max_weight / 3;
    for _ in 0..samples {
        let (p, q, r) = (random_sum(&mut rng, third), random_sum(&mut rng, third), random_sum(&mut rng, third));
        let pq = shuffle_sum(&p, &q);
        t.check(pq == shuffle_sum(&q, &p), || format!("random commutativity {p} / {q}"));
        t.check(
            shuffle_sum(&pq, &r) == shuffle_sum(&p, &shuffle_sum(&q, &r)),
            || format!("random associativity {p} / {q} / {r}"),
        );
        t.check(tau(&pq) == shuffle_sum(&tau(&p), &tau(&q)), || format!("random tau {p} / {q}"));
    }
    t.finish().param("max_weight", max_weight).param("seed", seed)
}

/// Laws of the regularization `reg1`:
/// `w x^n = sum_j reg1(w x^{n-j}) sh x^j` for `w` in `H^1`;
/// `reg1(w y x^n) = (-1)^n (w sh x^n) y`; `reg1` fixes `H^1` and is idempotent.
pub fn reg1_laws_check(max_word: usize, max_n: usize) -> IdentityReport {
    let mut t = Tally::new("reg1-laws");
    for w in words_up_to(max_word) {
        let wf = FormalSum::from_word(w.clone());
        let r = reg1(&wf);
        t.check(r.all_in_h1(), || format!("reg1({w}) in H^1"));
        t.check(reg1(&r) == r, || format!("reg1 reg1 {w}"));
        if w.in_h1() {
            t.check(r == wf, || format!("reg1 fixes {w}"));
            for n in 0..=max_n {
                let lhs = FormalSum::from_word(w.concat(&Word::x_pow(n)));
                let mut rhs = FormalSum::zero();
                for j in 0..=n {
                    let head = reg1(&FormalSum::from_word(w.concat(&Word::x_pow(n - j))));
                    rhs += &shuffle_sum(&head, &FormalSum::from_word(Word::x_pow(j)));
                }
                t.check(lhs == rhs, || format!("expansion of {w} x^{n}"));
            }
        }
        for n in 0..=max_n {
            let word = w.concat(&Word::letter(Letter::Y)).concat(&Word::x_pow(n));
            let mut expect = shuffle(&w, &Word::x_pow(n)).concat_word(&Word::letter(Letter::Y));
            if n % 2 == 1 {
                expect = -expect;
            }
            t.check(reg1(&FormalSum::from_word(word.clone())) == expect, || format!("reg1({word})"));
        }
    }
    t.finish().param("max_word", max_word).param("max_n", max_n)
}

/// The transform lemmas for `l + m + n <= max_total`:
/// `sum_{J(l,0,n)} T0 = x^n y^l = sum_{J'(l,0,n)} T0'`,
/// `sum_{J(l,m,n)} T0` equals its closed form and `sum_{J'(l,m,n)} T0'`,
/// and `sum_{J} T1 = tau(sum_J T0)`.
pub fn t0_lemma_check(max_total: usize) -> IdentityReport {
    let mut t = Tally::new("t0-lemma");
    for total in 0..=max_total as i64 {
        for l in 0..=total {
            for m in 0..=total - l {
                let n = total - l - m;
                let s0 = sum_t0_over_j(l, m, n);
                if m == 0 {
                    let expect = x_pow_y_pow(n as usize, l as usize);
                    t.check(s0 == expect, || format!("J({l},0,{n})"));
                }
                t.check(s0 == sum_t0_closed_form(l, m, n), || format!("closed form ({l},{m},{n})"));
                let sp = sum_transform(Transform::T0Prime, &index_set_j_prime(l, m, n));
                t.check(s0 == sp, || format!("J' form ({l},{m},{n})"));
                let s1 = sum_transform(Transform::T1, &index_set_j(l, m, n));
                t.check(s1 == tau(&s0), || format!("T1 sum ({l},{m},{n})"));
            }
        }
    }
    t.finish().param("max_total", max_total)
}

/// `|Li(w; z)| < 1` for every `w` in `H^1` of weight `1..=max_weight`, using
/// the upper end of each certified ball.
pub fn bound_half_check(max_weight: usize, zs: &[f64], ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let start = std::time::Instant::now();
    let mut worst = (0.0f64, String::new());
    let mut count = 0;
    for len in 1..=max_weight {
        for w in Word::all_of_length(len).filter(Word::in_h1) {
            for &z in zs {
                let v = ev.li_h1_word(&w, z)?;
                count += 1;
                if v.abs_upper() > worst.0 {
                    worst = (v.abs_upper(), format!("Li({w};{z})"));
                }
            }
        }
    }
    let zlist = zs.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(",");
    Ok(IdentityReport {
        identity: "bound-half".to_string(),
        params: Default::default(),
        deviation: worst.0,
        budget: 1.0,
        pass: worst.0 < 1.0,
        wall_ms: start.elapsed().as_millis() as u64,
        at: worst.1,
        lhs: worst.0,
        rhs: 1.0,
        note: None,
    }
    .param("max_weight", max_weight)
    .param("z", zlist)
    .param("checked", count))
}

/// `d/dz Li(x w) = Li(w)/z` and `d/dz Li(y w) = Li(w)/(1-z)` by central
/// differences; returns the largest relative error.
pub fn differential_relations(max_weight: usize, zs: &[f64], h: f64, ev: &PolylogEvaluator) -> Result<(f64, String)> {
    let mut worst = (0.0f64, String::new());
    for len in 0..max_weight {
        for w in Word::all_of_length(len).filter(Word::in_h1) {
            for first in [Letter::X, Letter::Y] {
                let lw = Word::letter(first).concat(&w);
                if !lw.in_h1() {
                    continue;
                }
                for &z in zs {
                    let fd = (ev.li_h1_word(&lw, z + h)?.mid - ev.li_h1_word(&lw, z - h)?.mid) / (2.0 * h);
                    let base = ev.li_h1_word(&w, z)?.mid;
                    let exact = match first {
                        Letter::X => base / z,
                        Letter::Y => base / (1.0 - z),
                    };
                    let rel = ((fd - exact) / exact).abs();
                    if rel > worst.0 {
                        worst = (rel, format!("d/dz Li({lw};{z})"));
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Split-at-the-midpoint zeta values against direct truncated sums with an
/// integral tail bound, for all admissible indices of weight `2..=max_weight`.
/// Returns the worst ratio `distance / (rad_split + rad_direct)`; at most 1
/// means every pair of balls overlaps.
pub fn split_vs_direct(max_weight: usize, terms: usize, ev: &PolylogEvaluator) -> Result<(f64, String)> {
    let mut worst = (0.0f64, String::new());
    for len in 2..=max_weight {
        for inner in Word::all_of_length(len - 2) {
            let w = Word::letter(Letter::X).concat(&inner).concat(&Word::letter(Letter::Y));
            let split = ev.zeta_word(&w)?;
            let direct: Real = zeta_direct(&IndexVector::from_word(&w)?, terms)?;
            let ratio = split.distance(&direct) / (split.rad + direct.rad);
            if ratio > worst.0 || worst.1.is_empty() {
                worst = (ratio, format!("zeta({w})"));
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::EvalContext;

    #[test]
    fn exact_suites_pass_at_small_sizes() {
        let r = shuffle_laws_check(4, 6, 20, 7);
        assert!(r.pass, "{r:?}");
        let r = reg1_laws_check(4, 3);
        assert!(r.pass, "{r:?}");
        let r = t0_lemma_check(5);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn analytic_sanity() {
        let ev = PolylogEvaluator::new(EvalContext::new(1e-12).unwrap());
        let r = bound_half_check(5, &[0.1, 0.49], &ev).unwrap();
        assert!(r.pass, "{r:?}");
        let (rel, at) = differential_relations(4, &[0.2, 0.4], 1e-5, &ev).unwrap();
        assert!(rel < 1e-6, "{rel} at {at}");
        let (ratio, at) = split_vs_direct(4, 20_000, &ev).unwrap();
        assert!(ratio <= 1.0, "{ratio} at {at}");
    }
}
