//! Multiple polylogarithms on `(0, 1)` and multiple zeta values.
//!
//! Direct nested sums are used only for `z <= 1/2`, where they converge at
//! least like `2^{-m}`. Larger arguments are reached through the path
//! `0 -> 1/2 -> z`: the piece from `1/2` to `z` is mapped by `t -> 1 - t`
//! onto a path between `1 - z` and `1/2`, both inside the fast region.

use std::collections::HashMap;

use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::word_algebra::{reg1, FormalSum, IndexVector, Letter, Word};

use super::context::{ComplexValue, EvalContext};
use super::real::Real;

/// Arguments at or below this point are summed directly.
const DIRECT_LIMIT: f64 = 0.5;

fn rounding_ulps(depth: usize, terms: usize, weight: u32) -> f64 {
    // recursive summation of positive terms: relative error <= (count) eps per level
    1.01 * f64::EPSILON * ((depth + 1) * (terms + 1) + weight as usize + 4) as f64
}

/// Unit roundoff.
const U: f64 = f64::EPSILON / 2.0;

/// Error-free transformation: `a + b = s + e` exactly.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `Li_k(z)` by the nested sum `sum_{m1 > ... > mn > 0} z^{m1} / prod m_i^{k_i}`.
///
/// Terms are added until the remaining tail is certified below `tail_target`;
/// the tail bound uses `S(m) <= (1 + ln m)^{n-1}` for the inner sums. Rounding
/// is charged by a running error bound carried alongside every partial sum.
pub fn li_direct(k: &[u32], z: f64, tail_target: f64, max_terms: usize) -> Result<Real> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(z));
    }
    let n = k.len();
    // partial sums as unevaluated pairs hi + lo (compensated summation)
    let mut inner = vec![0.0f64; n + 1];
    let mut inner_lo = vec![0.0f64; n + 1];
    let mut inner_err = vec![0.0f64; n + 1];
    inner[n] = 1.0;
    let mut sum = 0.0;
    let mut sum_lo = 0.0;
    let mut sum_err = 0.0;
    let mut zpow = 1.0;
    let mut m = 1usize;
    loop {
        zpow *= z;
        let mf = m as f64;
        // zpow carries relative error <= m u; powi(k) at most k u; one product, one quotient
        let denom = mf.powi(k[0] as i32);
        let i1 = 1.min(n);
        let term = zpow * (inner[i1] + inner_lo[i1]) / denom;
        let term_err = (inner_err[i1] + U * inner[i1].abs()) * zpow / denom
            + term.abs() * U * (m as f64 + k[0] as f64 + 3.0);
        let (hi, e) = two_sum(sum, term);
        sum = hi;
        sum_lo += e;
        sum_err += term_err + U * sum_lo.abs();
        for j in 1..n {
            let d = mf.powi(k[j] as i32);
            let t = (inner[j + 1] + inner_lo[j + 1]) / d;
            let t_err = (inner_err[j + 1] + U * inner[j + 1].abs()) / d + t.abs() * U * (k[j] as f64 + 2.0);
            let (hi, e) = two_sum(inner[j], t);
            inner[j] = hi;
            inner_lo[j] += e;
            inner_err[j] += t_err + U * inner_lo[j].abs();
        }
        // remaining terms have index >= big_m
        let big_m = (m + 1) as f64;
        let log_factor = (1.0 + big_m.ln()).powi(n as i32 - 1);
        let r = z * ((n as f64 - 1.0) / (big_m * (1.0 + big_m.ln()))).exp();
        if r < 1.0 {
            let tail = zpow * z * log_factor / big_m.powi(k[0] as i32) / (1.0 - r);
            if tail <= tail_target || tail == 0.0 {
                let total = sum + sum_lo;
                let rad = tail * (1.0 + 1e-10) + (sum_err + U * total.abs()) * 1.01;
                return Ok(Real::with_rad(total, rad));
            }
        }
        if m >= max_terms {
            return Err(Error::PrecisionUnreachable(format!(
                "Li{k:?}({z}) needs more than {max_terms} terms"
            )));
        }
        m += 1;
    }
}

/// `zeta(k)` by direct summation of `terms - 1` terms plus an integral tail bound.
///
/// Slow (algebraic convergence); kept as an independent oracle.
pub fn zeta_direct(k: &IndexVector, terms: usize) -> Result<Real> {
    if !k.is_admissible() {
        return Err(Error::NotAdmissible(k.to_string()));
    }
    let k = k.entries();
    let n = k.len();
    let mut inner = vec![0.0f64; n + 1];
    inner[n] = 1.0;
    let mut sum = 0.0;
    for m in 1..terms {
        let mf = m as f64;
        sum += inner[1.min(n)] / mf.powi(k[0] as i32);
        for j in 1..n {
            inner[j] += inner[j + 1] / mf.powi(k[j] as i32);
        }
    }
    // S(m) <= C (1 + ln m)^a with a = #{i >= 2 : k_i = 1}
    let a = k[1..].iter().filter(|&&ki| ki == 1).count() as i32;
    let c: f64 = k[1..]
        .iter()
        .filter(|&&ki| ki >= 2)
        .map(|&ki| 1.0 + 1.0 / (ki as f64 - 1.0))
        .product();
    let b = k[0] as f64 - 1.0;
    let big_m = terms as f64;
    let l = big_m.ln();
    if 1.0 + l <= a as f64 / (b + 1.0) {
        return Err(Error::PrecisionUnreachable(format!(
            "direct zeta{k:?} needs more than {terms} terms before its tail is monotone"
        )));
    }
    let first = (1.0 + l).powi(a) / big_m.powf(b + 1.0);
    let mut integral = 0.0;
    let mut falling = 1.0;
    for j in 0..=a {
        integral += falling * (1.0 + l).powi(a - j) / b.powi(j + 1);
        falling *= (a - j) as f64;
    }
    integral *= (-b * l).exp();
    let tail = c * (first + integral) * (1.0 + 1e-10);
    let weight: u32 = k.iter().sum();
    // every omitted term is positive, so the value lies in [sum, sum + tail]
    Ok(Real::with_rad(sum + tail / 2.0, tail / 2.0 + sum * rounding_ulps(n, terms, weight)))
}

/// Evaluator for word-indexed polylogarithms with a shared memo table.
///
/// All public evaluations are pure functions of `(word, z)` and the context;
/// the memo only avoids recomputation and is safe to share between threads.
pub struct PolylogEvaluator {
    ctx: EvalContext,
    memo: Mutex<HashMap<(Word, u64), Real>>,
}

impl PolylogEvaluator {
    pub fn new(ctx: EvalContext) -> PolylogEvaluator {
        PolylogEvaluator { ctx, memo: Mutex::new(HashMap::new()) }
    }

    pub fn context(&self) -> &EvalContext {
        &self.ctx
    }

    fn tail_target(&self) -> f64 {
        (self.ctx.target_abs_error * 1e-6).min(1e-17)
    }

    fn memoized(&self, w: &Word, z: f64, f: impl FnOnce() -> Result<Real>) -> Result<Real> {
        let key = (w.clone(), z.to_bits());
        if let Some(v) = self.memo.lock().get(&key) {
            return Ok(*v);
        }
        let v = f()?;
        self.memo.lock().insert(key, v);
        Ok(v)
    }

    /// `Li(w; z)` for a monomial `w` in `H^1` and `0 < z < 1`.
    pub fn li_h1_word(&self, w: &Word, z: f64) -> Result<Real> {
        if !w.in_h1() {
            return Err(Error::NotInH1(w.to_string()));
        }
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::Domain(z));
        }
        if w.is_unit() {
            return Ok(Real::ONE);
        }
        self.memoized(w, z, || {
            if z <= DIRECT_LIMIT {
                let k = IndexVector::from_word(w)?;
                li_direct(k.entries(), z, self.tail_target(), self.ctx.max_terms)
            } else {
                self.li_reflected(w, z)
            }
        })
    }

    /// `Li(w; z)` for `z > 1/2` through `0 -> 1/2 -> z`.
    ///
    /// `Li(w;z) = sum_{w=uv} I(1/2 -> z; u) Li(v; 1/2)` and
    /// `I(1/2 -> z; u) = sum_{tau(u) = v1 v2} Li(v1; 1/2) (-1)^{|v2|} Li(rev v2; 1-z)`,
    /// both factors regularized at the tangential base point `0`.
    fn li_reflected(&self, w: &Word, z: f64) -> Result<Real> {
        let half = 0.5;
        let zc = 1.0 - z;
        let mut total = Real::ZERO;
        for cut in 0..=w.len() {
            let u = w.slice(0, cut);
            let v = w.slice(cut, w.len());
            let right = self.li_h1_word(&v, half)?;
            let tu = u.tau();
            let mut upper = Real::ZERO;
            for c2 in 0..=tu.len() {
                let v1 = tu.slice(0, c2);
                let v2 = tu.slice(c2, tu.len());
                let mut term = self.li_ext_word(&v1, half)? * self.li_ext_word(&v2.reversed(), zc)?;
                if v2.len() % 2 == 1 {
                    term = -term;
                }
                upper += term;
            }
            total += upper * right;
        }
        Ok(total)
    }

    /// Regularized `Li(w; z)` for any word and `0 < z <= 1`.
    ///
    /// With `w = w0 x^n`, `w0` in `H^1`:
    /// `Li(w; z) = sum_j Li(reg1(w0 x^{n-j}); z) log^j z / j!`.
    /// At `z = 1` only `j = 0` survives and `reg1(w)` must be admissible.
    pub fn li_ext_word(&self, w: &Word, z: f64) -> Result<Real> {
        if z == 1.0 {
            return self.li_ext_at_one(w);
        }
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::Domain(z));
        }
        let (_, n) = w.split_trailing_x();
        if n == 0 {
            return self.li_h1_word(w, z);
        }
        self.memoized(w, z, || {
            let log_z = Real::exact(z).ln();
            let mut total = Real::ZERO;
            let mut log_pow = Real::ONE;
            for j in 0..=n {
                let head = w.slice(0, w.len() - j);
                let part = self.li_h1_sum(&reg1(&FormalSum::from_word(head)), z)?;
                total += part * log_pow;
                log_pow = log_pow * log_z / (j + 1) as f64;
            }
            Ok(total)
        })
    }

    fn li_ext_at_one(&self, w: &Word) -> Result<Real> {
        if w.in_h0() {
            return self.zeta_word(w);
        }
        let r = reg1(&FormalSum::from_word(w.clone()));
        if !r.all_in_h0() {
            return Err(Error::DivergentAtOne(w.to_string()));
        }
        self.zeta_sum(&r)
    }

    /// `zeta(w) = sum_{w=uv} Li(tau(u); 1-q) Li(v; q)` for admissible `w`.
    pub fn zeta_word(&self, w: &Word) -> Result<Real> {
        if !w.in_h0() {
            return Err(Error::NotAdmissible(w.to_string()));
        }
        if w.is_unit() {
            return Ok(Real::ONE);
        }
        self.memoized(w, 1.0, || {
            let q = self.ctx.split_point;
            let mut total = Real::ZERO;
            for cut in 0..=w.len() {
                let u = w.slice(0, cut);
                let v = w.slice(cut, w.len());
                total += self.li_h1_word(&u.tau(), 1.0 - q)? * self.li_h1_word(&v, q)?;
            }
            Ok(total)
        })
    }

    pub fn li_h1_sum(&self, p: &FormalSum, z: f64) -> Result<Real> {
        let mut total = Real::ZERO;
        for (w, c) in p.iter() {
            total += Real::from_rational(c) * self.li_h1_word(w, z)?;
        }
        Ok(total)
    }

    pub fn li_ext_sum(&self, p: &FormalSum, z: f64) -> Result<Real> {
        let mut total = Real::ZERO;
        for (w, c) in p.iter() {
            total += Real::from_rational(c) * self.li_ext_word(w, z)?;
        }
        Ok(total)
    }

    pub fn zeta_sum(&self, p: &FormalSum) -> Result<Real> {
        let mut total = Real::ZERO;
        for (w, c) in p.iter() {
            total += Real::from_rational(c) * self.zeta_word(w)?;
        }
        Ok(total)
    }

    pub fn zeta_index(&self, k: &IndexVector) -> Result<Real> {
        if !k.is_admissible() {
            return Err(Error::NotAdmissible(k.to_string()));
        }
        self.zeta_word(&k.to_word())
    }

    pub fn li_index(&self, k: &IndexVector, z: f64) -> Result<Real> {
        self.li_h1_word(&k.to_word(), z)
    }

    /// `zeta(2), ..., zeta(max_n)`.
    pub fn zeta_values(&self, max_n: usize) -> Result<Vec<Real>> {
        (2..=max_n)
            .map(|n| self.zeta_word(&Word::x_pow(n - 1).concat(&Word::letter(Letter::Y))))
            .collect()
    }
}

/// `Li_k(z)` with a certified error bound.
pub fn li_index(k: &IndexVector, z: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    let v = PolylogEvaluator::new(*ctx).li_index(k, z)?;
    ctx.certify(|| format!("Li{k}({z})"), v).map(ComplexValue::from_real)
}

/// `zeta(k)` for admissible `k`.
pub fn zeta_index(k: &IndexVector, ctx: &EvalContext) -> Result<ComplexValue> {
    let v = PolylogEvaluator::new(*ctx).zeta_index(k)?;
    ctx.certify(|| format!("zeta{k}"), v).map(ComplexValue::from_real)
}

/// `Li(p; z)` for `p` in `H^1`.
pub fn li_word(p: &FormalSum, z: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    let v = PolylogEvaluator::new(*ctx).li_h1_sum(p, z)?;
    ctx.certify(|| format!("Li({p}; {z})"), v).map(ComplexValue::from_real)
}

/// Regularized `Li(p; z)` for any `p` in `H`; `z = 1` is allowed when the
/// regularized words are admissible.
pub fn li_word_ext(p: &FormalSum, z: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    let v = PolylogEvaluator::new(*ctx).li_ext_sum(p, z)?;
    ctx.certify(|| format!("Li({p}; {z})"), v).map(ComplexValue::from_real)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_algebra::{shuffle, shuffle_sum, tau};
    use std::f64::consts::{LN_2, PI};

    fn iv(s: &str) -> IndexVector {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ev() -> PolylogEvaluator {
        PolylogEvaluator::new(EvalContext::new(1e-13).unwrap())
    }

    fn contains(v: Real, x: f64, slack: f64) -> bool {
        (v.mid - x).abs() <= v.rad + slack
    }

    /// Plain double loop over `m1 > m2`, no tail handling.
    fn brute_li21(z: f64, terms: usize) -> f64 {
        let mut s = 0.0;
        for m1 in 2..terms {
            let inner: f64 = (1..m1).map(|m2| 1.0 / m2 as f64).sum();
            s += z.powi(m1 as i32) / (m1 as f64).powi(2) * inner;
        }
        s
    }

    #[test]
    fn li1_is_minus_log() {
        let ctx = EvalContext::default();
        let v = li_index(&iv("1"), 0.5, &ctx).unwrap();
        assert!((v.re - LN_2).abs() < 1e-14);
        let e = ev();
        for z in [0.1, 0.3, 0.7, 0.9, 0.999] {
            let v = e.li_h1_word(&w("y"), z).unwrap();
            assert!(contains(v, -(1.0f64 - z).ln(), 1e-15), "z = {z}: {v}");
        }
    }

    #[test]
    fn li21_matches_double_loop() {
        let v = ev().li_index(&iv("2,1"), 0.3).unwrap();
        assert!((v.mid - brute_li21(0.3, 3000)).abs() < 1e-12);
    }

    #[test]
    fn dilogarithm_known_values() {
        let e = ev();
        // Li2(1/2) = pi^2/12 - ln^2 2 / 2
        let half = e.li_index(&iv("2"), 0.5).unwrap();
        assert!(contains(half, PI * PI / 12.0 - LN_2 * LN_2 / 2.0, 1e-15));
        let z2 = e.zeta_index(&iv("2")).unwrap();
        assert!(contains(z2, PI * PI / 6.0, 1e-15));
        assert!(z2.rad < 1e-12);
    }

    #[test]
    fn reflection_agrees_with_direct_sums() {
        let e = ev();
        for word in ["y", "xy", "yy", "xyy", "yxy", "xxyy", "xyxy", "yyxy", "xxyxy"] {
            let k = IndexVector::from_word(&w(word)).unwrap();
            for z in [0.6, 0.7, 0.8] {
                let refl = e.li_h1_word(&w(word), z).unwrap();
                let direct = li_direct(k.entries(), z, 1e-16, 10_000).unwrap();
                assert!(refl.overlaps(&direct), "{word} at {z}: {refl} vs {direct}");
                assert!(refl.distance(&direct) < 1e-12);
            }
        }
    }

    #[test]
    fn zeta_duality_smallest_case() {
        let e = ev();
        let a = e.zeta_index(&iv("2,1")).unwrap();
        let b = e.zeta_index(&iv("3")).unwrap();
        assert!(a.distance(&b) < 1e-13);
        assert!(contains(b, 1.2020569031595942, 1e-15));
    }

    #[test]
    fn zeta4_against_direct_sum() {
        let split = ev().zeta_index(&iv("4")).unwrap();
        let direct = zeta_direct(&iv("4"), 5_000).unwrap();
        assert!(split.overlaps(&direct));
        assert!(direct.rad < 1e-11);
        assert!(contains(split, PI.powi(4) / 90.0, 1e-15));
    }

    #[test]
    fn other_split_points_agree() {
        let ctx = EvalContext::new(1e-13).unwrap().with_split_point(0.3).unwrap();
        let a = PolylogEvaluator::new(ctx).zeta_index(&iv("3,1,2")).unwrap();
        let b = ev().zeta_index(&iv("3,1,2")).unwrap();
        assert!(a.overlaps(&b) && a.distance(&b) < 1e-13);
    }

    #[test]
    fn extended_words() {
        let e = ev();
        for z in [0.3f64, 0.5, 0.8] {
            let lz = z.ln();
            assert!(contains(e.li_ext_word(&w("x"), z).unwrap(), lz, 1e-15));
            // reg1(yx) = -xy, reg1(y) = y
            let yx = e.li_ext_word(&w("yx"), z).unwrap();
            let li2 = e.li_index(&iv("2"), z).unwrap();
            let li1 = e.li_index(&iv("1"), z).unwrap();
            assert!(yx.overlaps(&(-li2 + li1 * Real::exact(z).ln())));
            let h1 = e.li_ext_word(&w("xyy"), z).unwrap();
            assert_eq!(h1, e.li_h1_word(&w("xyy"), z).unwrap());
        }
        // at 1: Li(xyx; 1) = zeta(reg1(xyx)) = -2 zeta(3)
        let v = e.li_ext_word(&w("xyx"), 1.0).unwrap();
        assert!(contains(v, -2.0 * 1.2020569031595942, 1e-14));
        assert!(matches!(e.li_ext_word(&w("yxy"), 1.0), Err(Error::DivergentAtOne(_))));
    }

    #[test]
    fn shuffle_homomorphism_examples() {
        let e = ev();
        for z in [0.25, 0.6] {
            let lhs = e.li_h1_sum(&shuffle(&w("xy"), &w("y")), z).unwrap();
            let rhs = e.li_h1_word(&w("xy"), z).unwrap() * e.li_h1_word(&w("y"), z).unwrap();
            assert!(lhs.overlaps(&rhs));
        }
        let p = FormalSum::from_words(["xy", "yy"]).unwrap();
        let lin = e.li_h1_sum(&p, 0.5).unwrap();
        let sep = e.li_index(&iv("2"), 0.5).unwrap() + e.li_index(&iv("1,1"), 0.5).unwrap();
        assert!(lin.overlaps(&sep));
        // ext words obey the shuffle law too
        let lhs = e.li_ext_sum(&shuffle_sum(&FormalSum::from_words(["yx"]).unwrap(), &FormalSum::from_words(["x"]).unwrap()), 0.4).unwrap();
        let rhs = e.li_ext_word(&w("yx"), 0.4).unwrap() * e.li_ext_word(&w("x"), 0.4).unwrap();
        assert!(lhs.overlaps(&rhs));
    }

    #[test]
    fn duality_at_one_weight_five() {
        let e = ev();
        for word in Word::all_of_length(5).filter(|w| w.in_h0()) {
            let a = e.zeta_word(&word).unwrap();
            let b = e.zeta_sum(&tau(&FormalSum::from_word(word.clone()))).unwrap();
            assert!(a.overlaps(&b), "{word}");
        }
    }

    #[test]
    fn errors() {
        let e = ev();
        assert!(matches!(e.li_h1_word(&w("yx"), 0.5), Err(Error::NotInH1(_))));
        assert!(matches!(e.li_h1_word(&w("y"), 1.5), Err(Error::Domain(_))));
        assert!(matches!(e.zeta_index(&iv("1,2")), Err(Error::NotAdmissible(_))));
        assert!(matches!(
            li_direct(&[1], 0.999999, 1e-15, 1000),
            Err(Error::PrecisionUnreachable(_))
        ));
    }
}
