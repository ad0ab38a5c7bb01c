//! The `z -> 1` limit of the expansion, duality, the sum formula and the
//! gamma/Schur form of the limit.

use std::collections::BTreeSet;

use crate::comb::multinomial;
use crate::error::Result;
use crate::numeric::{PolylogEvaluator, Real};
use num_rational::BigRational;

use crate::series::{exponents_up_to, monomial_name, schur_s, Coeff, ZetaPoly, ZetaVector};
use crate::word_algebra::{Letter, Word};

use super::gsum::{g0_value, GSum};
use super::mainthm::{assemble, mainthm1_series, mainthm1_symbols, mainthm2_rhs, zeta_vector, RSeries};
use super::report::{Comparison, IdentityReport};

/// `F(1) - 1 = -sum a G0(l+m+n, l+p, q+1; 1) lambda^(l,m,n)`, i.e. the
/// expansion with every profile sum replaced by its zeta value.
pub fn oz_limit_series(cap: u32, ev: &PolylogEvaluator) -> Result<RSeries> {
    assemble(&mainthm1_symbols(cap), 1, 1.0, ev, cap)
}

/// `1 - F(1)` against `1 - Gamma ratio`, coefficientwise.
pub fn oz_limit_check(cap: u32, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let one = RSeries::one(cap);
    let lhs = &one - &oz_limit_series(cap, ev)?;
    let rhs = &one - &mainthm2_rhs(cap, &zeta_vector(ev, cap as usize)?)?;
    let mut c = Comparison::new();
    c.push_series(&lhs, &rhs);
    Ok(c.finish("oz-limit", ev.context())?.param("degree", cap))
}

/// Coefficients of `F(z)` approach those of `F(1)` as `z = 1 - 10^-k`,
/// `k = k_min..=k_max`, with nonincreasing distance, while every
/// `G0(k,n,s; 10^-k)` shrinks towards zero. The report's deviation is the
/// final distance and its budget the distance at the first point.
pub fn z_to_one_trend(cap: u32, k_min: i32, k_max: i32, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let start = std::time::Instant::now();
    let limit = oz_limit_series(cap, ev)?;
    let mut first = Vec::new();
    let mut prev: Option<Vec<f64>> = None;
    let mut monotone = true;
    let mut last = Vec::new();
    let mut shrinking = true;
    let mut prev_g0: Option<Vec<f64>> = None;
    let profiles: Vec<GSum> = mainthm1_symbols(cap).keys().copied().filter(|s| !s.is_empty()).collect();
    for k in k_min..=k_max {
        let z = 1.0 - 10f64.powi(-k);
        let s = mainthm1_series(z, cap, ev)?;
        let dist: Vec<f64> = exponents_up_to(cap)
            .iter()
            .map(|e| s.coeff(e).distance(&limit.coeff(e)))
            .collect();
        if let Some(p) = &prev {
            monotone &= dist.iter().zip(p).all(|(d, p)| *d <= *p);
        }
        let g0: Vec<f64> = profiles
            .iter()
            .map(|sym| sym.eval(ev, 10f64.powi(-k)).map(|v| v.mid.abs()))
            .collect::<Result<_>>()?;
        if let Some(p) = &prev_g0 {
            shrinking &= g0.iter().zip(p).all(|(g, p)| *g < *p);
        }
        prev_g0 = Some(g0);
        if first.is_empty() {
            first = dist.clone();
        }
        last = dist.clone();
        prev = Some(dist);
    }
    let deviation = last.iter().copied().fold(0.0, f64::max);
    let first = first.iter().copied().fold(0.0, f64::max);
    let report = IdentityReport {
        identity: "oz-limit".to_string(),
        params: Default::default(),
        deviation,
        budget: first,
        pass: deviation <= first,
        wall_ms: start.elapsed().as_millis() as u64,
        at: format!("z=1-1e-{k_max}"),
        lhs: deviation,
        rhs: first,
        note: None,
    };
    Ok(report
        .param("trend", format!("1-1e-{k_min}..1-1e-{k_max}"))
        .param("degree", cap)
        .require(monotone, "coefficients approach F(1) monotonically")
        .require(shrinking, "G0 at 1-z decreases to 0"))
}

/// `G0(k,n,s;1) = G0(k,k-n,s;1)`, numerically and as the word-level fact
/// that the second profile is the image of the first under `tau`.
pub fn duality_check(k: usize, n: usize, s: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let a: BTreeSet<Word> = GSum::g0(k, n, s).words().into_iter().collect();
    let b: BTreeSet<Word> = GSum::g0(k, k - n, s).words().into_iter().collect();
    let image: BTreeSet<Word> = a.iter().map(Word::tau).collect();
    let mut c = Comparison::new();
    c.push(|| format!("G0({k},{n},{s})"), g0_value(ev, k, n, s, 1.0)?, g0_value(ev, k, k - n, s, 1.0)?);
    Ok(c.finish("duality", ev.context())?
        .param("k", k)
        .param("n", n)
        .param("s", s)
        .require(image == b, "tau maps the profile onto its dual"))
}

/// Every nonempty profile of weight `2..=max_weight`.
pub fn duality_all(max_weight: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let mut parts = Vec::new();
    for k in 2..=max_weight {
        for n in 1..k {
            for s in 1..=n.min(k - n) {
                parts.push(duality_check(k, n, s, ev)?);
            }
        }
    }
    Ok(IdentityReport::merge("duality", parts).param("max_weight", max_weight))
}

fn zeta_single(ev: &PolylogEvaluator, w: usize) -> Result<Real> {
    ev.zeta_word(&Word::x_pow(w - 1).concat(&Word::letter(Letter::Y)))
}

/// `sum_s G0(w,d,s;1) = zeta(w)`.
pub fn sum_formula_check(w: usize, d: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let mut lhs = Real::ZERO;
    for s in 1..=d.min(w - d) {
        lhs += g0_value(ev, w, d, s, 1.0)?;
    }
    let mut c = Comparison::new();
    c.push(|| format!("w={w},d={d}"), lhs, zeta_single(ev, w)?);
    Ok(c.finish("sum-formula", ev.context())?.param("w", w).param("d", d))
}

pub fn sum_formula_all(max_weight: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let mut parts = Vec::new();
    for w in 2..=max_weight {
        for d in 1..w {
            parts.push(sum_formula_check(w, d, ev)?);
        }
    }
    Ok(IdentityReport::merge("sum-formula", parts).param("max_weight", max_weight))
}

/// The Schur side of the limit formula, as printed:
/// `sum (m1+n1)!/(m1! n1!) (l2+m2)!/(l2! m2!) (l4+m4+n4)!/(l4! m4! n4!)
///  S_{m1+n1}(z) S_{l2+m2}(z) S_{m3}(-z) S_{l4+m4+n4}(-z)`
/// over `l2+l4 = l`, `n1+n4 = n`, `m1+m2+m3+m4 = m`, with
/// `z = (0, zeta(2)/2, zeta(3)/3, ...)`, as an exact polynomial in the zeta values.
pub fn mainthm3_schur_polynomial(l: usize, m: usize, n: usize) -> ZetaPoly {
    let weight = (l + m + n).max(2);
    let mut x = vec![ZetaPoly::zero()];
    for i in 2..=weight {
        x.push(ZetaPoly::zeta(i).mul(&ZetaPoly::from_rational(&BigRational::new(1.into(), (i as i64).into()))));
    }
    let neg: Vec<ZetaPoly> = x.iter().map(Coeff::neg).collect();
    let mut total = ZetaPoly::zero();
    for l2 in 0..=l {
        let l4 = l - l2;
        for n1 in 0..=n {
            let n4 = n - n1;
            for ms in crate::comb::weak_compositions(m, 4) {
                let (m1, m2, m3, m4) = (ms[0], ms[1], ms[2], ms[3]);
                let coef = multinomial(&[m1 as u64, n1 as u64])
                    * multinomial(&[l2 as u64, m2 as u64])
                    * multinomial(&[l4 as u64, m4 as u64, n4 as u64]);
                let term = schur_s(m1 + n1, &x)
                    .mul(&schur_s(l2 + m2, &x))
                    .mul(&schur_s(m3, &neg))
                    .mul(&schur_s(l4 + m4 + n4, &neg));
                total = total.add(&term.mul(&ZetaPoly::from_rational(&BigRational::from_integer(coef))));
            }
        }
    }
    total
}

/// [`mainthm3_schur_polynomial`] evaluated at the given zeta values.
pub fn mainthm3_schur_side(l: usize, m: usize, n: usize, zeta: &ZetaVector) -> Real {
    mainthm3_schur_polynomial(l, m, n).eval(zeta)
}

/// `sum_{p,q} a G0(l+m+n, l+p, q+1; 1)` against the Schur side.
///
/// The two agree up to an overall sign: the Schur expression as printed
/// equals `F(1) - 1` at `lambda^(l,m,n)`, which is minus the zeta sum. The
/// check compares against the sign-corrected side and records the distance
/// to the printed one.
pub fn mainthm3_check(l: usize, m: usize, n: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let cap = (l + m + n) as u32;
    let table = mainthm1_symbols(cap);
    let e = [l as u32, m as u32, n as u32];
    let mut lhs = Real::ZERO;
    for (sym, poly) in &table {
        if sym.k != l + m + n {
            continue;
        }
        let c = poly.coeff(&e);
        if !num_traits::Zero::is_zero(&c) {
            // the table stores -a
            lhs = lhs - Real::from_rational(&c) * g0_value(ev, sym.k, sym.n, sym.s, 1.0)?;
        }
    }
    let zeta = zeta_vector(ev, (l + m + n).max(2))?;
    let printed = mainthm3_schur_side(l, m, n, &zeta);
    let mut c = Comparison::new();
    c.push(|| monomial_name(&e), lhs, -printed);
    let as_printed = lhs.distance(&printed);
    let mut r = c.finish("main-thm3", ev.context())?.param("l", l).param("m", m).param("n", n);
    if as_printed > r.budget {
        r = r.with_note(format!("printed sign differs by {as_printed:.3e}"));
    }
    Ok(r)
}

/// All `l, n >= 1` with `l + m + n <= max_total`.
pub fn mainthm3_all(max_total: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let mut parts = Vec::new();
    for l in 1..max_total {
        for m in 0..=max_total - l - 1 {
            for n in 1..=max_total - l - m {
                let mut r = mainthm3_check(l, m, n, ev)?;
                r.note = None;
                parts.push(r);
            }
        }
    }
    Ok(IdentityReport::merge("main-thm3", parts)
        .param("max_total", max_total)
        .with_note("compared with the overall sign of the printed Schur side reversed"))
}
