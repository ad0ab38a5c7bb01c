//! Expansion of `F(-lambda3, lambda1; 1 - lambda2 - lambda3; z)` in profile
//! sums, its regrouped form, the dual solutions around `z = 1` and the
//! connection identity between them.
//!
//! Every series is written as `sum_sym P_sym(lambda) * value(sym)` where the
//! `P_sym` are exact rational polynomials attached to one profile sum. The
//! regrouped form can then be compared with the original exactly, and the
//! numeric series are assembled from the same table.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::numeric::{f_lambda_expansion, PolylogEvaluator, Real};
use crate::series::{
    total_degree, Coeff, GammaFactor, GammaSide, TruncatedMultiSeries, ZetaVector, gamma_ratio,
};
use crate::seq_transform::a_coeff;
use crate::word_algebra::IndexVector;

use super::gsum::GSum;
use super::report::{Comparison, IdentityReport};

type QSeries = TruncatedMultiSeries<BigRational>;
pub type RSeries = TruncatedMultiSeries<Real>;

/// Exact polynomial attached to each profile sum.
pub type SymbolTable = BTreeMap<GSum, QSeries>;

fn add_to(table: &mut SymbolTable, sym: GSum, e: [u32; 3], c: BigRational, cap: u32) {
    if Zero::is_zero(&c) || total_degree(&e) > cap {
        return;
    }
    let entry = table.entry(sym).or_insert_with(|| QSeries::zero(cap));
    entry.add_term(e, c);
    if entry.iter().next().is_none() {
        table.remove(&sym);
    }
}

/// `(l, m, n)` with `l, n >= 1` and `l + m + n <= max_total`.
fn lmn_range(max_total: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=max_total).flat_map(move |l| {
        (0..=max_total - l).flat_map(move |m| (1..=max_total - l - m).map(move |n| (l, m, n)))
    })
}

/// Calls `f(l, m, n, p, q, a)` for every nonzero `a_{p,q}^{(l,m,n)}`.
fn for_each_a(max_total: usize, mut f: impl FnMut(usize, usize, usize, usize, usize, BigRational)) {
    for (l, m, n) in lmn_range(max_total) {
        for p in 0..=m {
            for q in 0..=m {
                let a = a_coeff(l as i64, m as i64, n as i64, p as i64, q as i64);
                if !a.is_zero() {
                    f(l, m, n, p, q, BigRational::from_integer(a));
                }
            }
        }
    }
}

fn exp(l: usize, m: usize, n: usize) -> [u32; 3] {
    [l as u32, m as u32, n as u32]
}

/// `F - 1 = -sum a G0(l+m+n, l+p, q+1; z) lambda1^l lambda2^m lambda3^n`.
pub fn mainthm1_symbols(cap: u32) -> SymbolTable {
    let mut t = SymbolTable::new();
    for_each_a(cap as usize, |l, m, n, p, q, a| {
        add_to(&mut t, GSum::g0(l + m + n, l + p, q + 1), exp(l, m, n), -a, cap);
    });
    t
}

/// `(1/beta) z F' = -sum a G(l+m+n-1, l+p, q+1; z) lambda1^{l-1} lambda2^m lambda3^n`.
pub fn mainthm1_derivative_symbols(cap: u32) -> SymbolTable {
    let mut t = SymbolTable::new();
    for_each_a(cap as usize + 1, |l, m, n, p, q, a| {
        add_to(&mut t, GSum::g(l + m + n - 1, l + p, q + 1), exp(l - 1, m, n), -a, cap);
    });
    t
}

/// `(lambda2+lambda3)^{k-n-s} (lambda1+lambda2)^{n-s} lambda2^{s-1} (lambda1+lambda2+lambda3)^{s-1}`.
fn regrouped_factor(k: usize, n: usize, s: usize, cap: u32) -> QSeries {
    let pow = |form: [i64; 3], e: usize| {
        let base = QSeries::linear(form, cap);
        (0..e).fold(QSeries::one(cap), |acc, _| acc.ts_mul(&base))
    };
    pow([0, 1, 1], k - n - s)
        .ts_mul(&pow([1, 1, 0], n - s))
        .ts_mul(&pow([0, 1, 0], s - 1))
        .ts_mul(&pow([1, 1, 1], s - 1))
}

/// Nonempty admissible profiles `(k, n, s)`: `k >= n + s`, `n >= s >= 1`.
fn regrouped_profiles(max_k: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (2..=max_k).flat_map(|k| {
        (1..k).flat_map(move |n| (1..=n.min(k - n)).map(move |s| (k, n, s)))
    })
}

/// `F - 1 = -lambda1 lambda3 sum G0(k,n,s;z) * regrouped factor`.
pub fn cor_symbols(cap: u32) -> SymbolTable {
    let mut t = SymbolTable::new();
    let lead = QSeries::monomial([1, 0, 1], -BigRational::from_int(1), cap);
    for (k, n, s) in regrouped_profiles(cap as usize) {
        let poly = lead.ts_mul(&regrouped_factor(k, n, s, cap));
        for (e, c) in poly.iter() {
            add_to(&mut t, GSum::g0(k, n, s), *e, c.clone(), cap);
        }
    }
    t
}

/// `(1/beta) z F' = -lambda3 sum G(k-1,n,s;z) * regrouped factor`, over the
/// same `(k, n, s)` as [`cor_symbols`].
pub fn cor_derivative_symbols(cap: u32) -> SymbolTable {
    let mut t = SymbolTable::new();
    let lead = QSeries::monomial([0, 0, 1], -BigRational::from_int(1), cap);
    for (k, n, s) in regrouped_profiles(cap as usize + 1) {
        let poly = lead.ts_mul(&regrouped_factor(k, n, s, cap));
        for (e, c) in poly.iter() {
            add_to(&mut t, GSum::g(k - 1, n, s), *e, c.clone(), cap);
        }
    }
    t
}

/// `psi11(1-z) - 1 = -sum a G0(l+m+n, m+n-p, q+1; 1-z) lambda1^l lambda2^m lambda3^n`.
pub fn psi11_symbols(cap: u32) -> SymbolTable {
    let mut t = SymbolTable::new();
    for_each_a(cap as usize, |l, m, n, p, q, a| {
        add_to(&mut t, GSum::g0(l + m + n, m + n - p, q + 1), exp(l, m, n), -a, cap);
    });
    t
}

/// `psi12(1-z) = sum a G(l+m+n-1, m+n-p, q+1; 1-z) lambda1^l lambda2^m lambda3^{n-1}`.
pub fn psi12_symbols(cap: u32) -> SymbolTable {
    let mut t = SymbolTable::new();
    for_each_a(cap as usize + 1, |l, m, n, p, q, a| {
        add_to(&mut t, GSum::g(l + m + n - 1, m + n - p, q + 1), exp(l, m, n - 1), a, cap);
    });
    t
}

/// Drops symbols whose profile is empty (their value is identically zero).
pub fn nonempty(table: &SymbolTable) -> SymbolTable {
    table.iter().filter(|(s, _)| !s.is_empty()).map(|(s, p)| (*s, p.clone())).collect()
}

/// `constant + sum_sym P_sym * value(sym)` with every profile sum at `z`.
pub fn assemble(table: &SymbolTable, constant: i64, z: f64, ev: &PolylogEvaluator, cap: u32) -> Result<RSeries> {
    let mut out = RSeries::constant(Real::from_int(constant), cap);
    for (sym, poly) in table {
        let v = sym.eval(ev, z)?;
        if v.is_exact_zero() {
            continue;
        }
        for (e, c) in poly.iter() {
            let mut term = RSeries::zero(cap);
            term.add_term(*e, Real::from_rational(c) * v);
            out = out.ts_add(&term);
        }
    }
    Ok(out)
}

pub fn mainthm1_series(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<RSeries> {
    assemble(&mainthm1_symbols(cap), 1, z, ev, cap)
}

pub fn mainthm1_derivative_series(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<RSeries> {
    assemble(&mainthm1_derivative_symbols(cap), 0, z, ev, cap)
}

pub fn mainthm1_cor_series(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<RSeries> {
    assemble(&cor_symbols(cap), 1, z, ev, cap)
}

pub fn mainthm1_cor_derivative_series(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<RSeries> {
    assemble(&cor_derivative_symbols(cap), 0, z, ev, cap)
}

/// `(psi11(1-z), psi12(1-z))` as series; `z` is the point of the original solution.
pub fn psi_dual_series(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<(RSeries, RSeries)> {
    let w = 1.0 - z;
    Ok((assemble(&psi11_symbols(cap), 1, w, ev, cap)?, assemble(&psi12_symbols(cap), 0, w, ev, cap)?))
}

/// True when both tables give the same polynomial for every nonempty profile.
pub fn tables_agree(a: &SymbolTable, b: &SymbolTable) -> bool {
    nonempty(a) == nonempty(b)
}

/// `zeta(2), ..., zeta(max_n)` as a [`ZetaVector`].
pub fn zeta_vector(ev: &PolylogEvaluator, max_n: usize) -> Result<ZetaVector> {
    Ok(ZetaVector::new(ev.zeta_values(max_n.max(2))?))
}

/// `Gamma(1-(l2+l3)) Gamma(1-(l1+l2)) / (Gamma(1-l2) Gamma(1-(l1+l2+l3)))`.
pub fn mainthm2_rhs(cap: u32, zeta: &ZetaVector) -> Result<RSeries> {
    let f = |form, power| GammaFactor::new(form, GammaSide::OneMinus, power);
    gamma_ratio(&[f([0, 1, 1], 1), f([1, 1, 0], 1), f([0, 1, 0], -1), f([1, 1, 1], -1)], zeta, cap)
}

/// `psi11(1-z) F(z) + psi12(1-z) (1/beta) z F'(z)`.
pub fn mainthm2_lhs(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<RSeries> {
    let f = mainthm1_series(z, cap, ev)?;
    let df = mainthm1_derivative_series(z, cap, ev)?;
    let (p11, p12) = psi_dual_series(z, cap, ev)?;
    Ok(p11.ts_mul(&f).ts_add(&p12.ts_mul(&df)))
}

/// Expansion against the independent hypergeometric oracle.
pub fn mainthm1_check(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let lhs = mainthm1_series(z, cap, ev)?;
    let rhs = f_lambda_expansion(z, cap, ev.context())?;
    let mut c = Comparison::new();
    c.push_series(&lhs, &rhs);
    Ok(c.finish("main-thm1", ev.context())?.param("z", z).param("degree", cap))
}

fn index(k: &[u32]) -> IndexVector {
    IndexVector::new(k.to_vec()).expect("valid index")
}

/// The low-degree coefficients against direct polylogarithms:
/// `lambda1^l lambda3^n -> -Li_{n+1,1^{l-1}}`, `lambda1 lambda2 lambda3 -> -(Li3 + Li21)`,
/// `lambda1 lambda2^2 lambda3 -> -(Li4 + Li31 + Li22 + Li211)`.
pub fn mainthm1_low_degree_check(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let s = mainthm1_series(z, cap, ev)?;
    let mut c = Comparison::new();
    for l in 1..cap as usize {
        for n in 1..=cap as usize - l {
            let mut k = vec![n as u32 + 1];
            k.extend(std::iter::repeat_n(1, l - 1));
            let expect = -ev.li_index(&index(&k), z)?;
            c.push(|| format!("l1^{l}*l3^{n}"), s.coeff(&exp(l, 0, n)), expect);
        }
    }
    let table: [(&[&[u32]], [u32; 3]); 2] =
        [(&[&[3], &[2, 1]], [1, 1, 1]), (&[&[4], &[3, 1], &[2, 2], &[2, 1, 1]], [1, 2, 1])];
    for (ks, e) in table {
        if total_degree(&e) > cap {
            continue;
        }
        let mut expect = Real::ZERO;
        for k in ks {
            expect = expect - ev.li_index(&index(k), z)?;
        }
        c.push(|| crate::series::monomial_name(&e), s.coeff(&e), expect);
    }
    Ok(c.finish("main-thm1", ev.context())?.param("z", z).param("degree", cap).param("table", "low-degree"))
}

/// The regrouped form: exact equality of the attached polynomials for both
/// displays, plus the numeric comparison of the assembled series.
pub fn mainthm1_cor_check(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let exact = tables_agree(&mainthm1_symbols(cap), &cor_symbols(cap));
    let exact_d = tables_agree(&mainthm1_derivative_symbols(cap), &cor_derivative_symbols(cap));
    let mut c = Comparison::new();
    c.push_series(&mainthm1_series(z, cap, ev)?, &mainthm1_cor_series(z, cap, ev)?);
    c.push_series(&mainthm1_derivative_series(z, cap, ev)?, &mainthm1_cor_derivative_series(z, cap, ev)?);
    Ok(c.finish("main-thm1-cor", ev.context())?
        .param("z", z)
        .param("degree", cap)
        .require(exact, "regrouped polynomials of F")
        .require(exact_d, "regrouped polynomials of zF'/beta"))
}

/// Connection between the solutions at `0` and `1`, coefficientwise to `cap`.
pub fn mainthm2_check(z: f64, cap: u32, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let lhs = mainthm2_lhs(z, cap, ev)?;
    let rhs = mainthm2_rhs(cap, &zeta_vector(ev, cap as usize)?)?;
    let mut c = Comparison::new();
    c.push_series(&lhs, &rhs);
    Ok(c.finish("main-thm2", ev.context())?.param("z", z).param("degree", cap))
}

/// `Li_{n+1}(z) + Li_{2,1^{n-1}}(1-z) + sum_{j=1}^n Li_{n-j+1}(z) Li_{1^j}(1-z)`.
pub fn euler_inversion_sum(z: f64, n: usize, ev: &PolylogEvaluator) -> Result<Real> {
    let ones = |j: usize| vec![1u32; j];
    let mut k2 = vec![2u32];
    k2.extend(ones(n - 1));
    let mut total = ev.li_index(&index(&[n as u32 + 1]), z)? + ev.li_index(&index(&k2), 1.0 - z)?;
    for j in 1..=n {
        total += ev.li_index(&index(&[(n - j + 1) as u32]), z)? * ev.li_index(&index(&ones(j)), 1.0 - z)?;
    }
    Ok(total)
}

/// Euler's inversion formula `euler_inversion_sum = zeta(n+1)` for `n <= n_max`,
/// and the `lambda1 lambda3^n` coefficient of the connection series at
/// `lambda2 = 0`, which must equal `-zeta(n+1)` on both sides.
pub fn euler_inversion_check(z: f64, n_max: usize, ev: &PolylogEvaluator) -> Result<IdentityReport> {
    let cap = n_max as u32 + 1;
    let zeta = zeta_vector(ev, cap as usize)?;
    let lhs = mainthm2_lhs(z, cap, ev)?.at_lambda2_zero();
    let rhs = mainthm2_rhs(cap, &zeta)?.at_lambda2_zero();
    let mut c = Comparison::new();
    for n in 1..=n_max {
        c.push(|| format!("inversion n={n}"), euler_inversion_sum(z, n, ev)?, zeta.get(n + 1));
        let e = [1, 0, n as u32];
        c.push(|| format!("l1*l3^{n} lhs"), lhs.coeff(&e), -zeta.get(n + 1));
        c.push(|| format!("l1*l3^{n} rhs"), rhs.coeff(&e), -zeta.get(n + 1));
    }
    Ok(c.finish("euler-inversion", ev.context())?.param("z", z).param("n_max", n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::EvalContext;

    fn ev() -> PolylogEvaluator {
        PolylogEvaluator::new(EvalContext::new(1e-12).unwrap())
    }

    #[test]
    fn leading_symbols() {
        let t = mainthm1_symbols(3);
        let p = &t[&GSum::g0(2, 1, 1)];
        assert_eq!(p.coeff(&[1, 0, 1]), BigRational::from_int(-1));
        let d = mainthm1_derivative_symbols(2);
        // G(1,1,1) = -log(1-z) enters zF'/beta at lambda3 with coefficient -1
        assert_eq!(d[&GSum::g(1, 1, 1)].coeff(&[0, 0, 1]), BigRational::from_int(-1));
    }

    #[test]
    fn regrouped_form_is_exact_to_degree_six() {
        for cap in 2..=6 {
            assert!(tables_agree(&mainthm1_symbols(cap), &cor_symbols(cap)), "F at cap {cap}");
            assert!(
                tables_agree(&mainthm1_derivative_symbols(cap), &cor_derivative_symbols(cap)),
                "zF' at cap {cap}"
            );
        }
    }

    #[test]
    fn lambda2_zero_slice_of_regrouped_form_has_only_height_one() {
        for (sym, poly) in cor_symbols(5) {
            let has_slice = poly.iter().any(|(e, _)| e[1] == 0);
            assert_eq!(has_slice, sym.s == 1, "{sym:?}");
        }
    }

    #[test]
    fn expansion_matches_oracle() {
        let ev = ev();
        let r = mainthm1_check(0.3, 4, &ev).unwrap();
        assert!(r.pass && r.deviation < 1e-10, "{r:?}");
        let r = mainthm1_low_degree_check(0.3, 4, &ev).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn derivative_series_matches_finite_difference() {
        let ev = ev();
        let (z, h) = (0.3, 1e-5);
        let d = mainthm1_derivative_series(z, 3, &ev).unwrap();
        let up = mainthm1_series(z + h, 4, &ev).unwrap();
        let dn = mainthm1_series(z - h, 4, &ev).unwrap();
        // (1/lambda1) z d/dz of the lambda1^{l} coefficient
        for (e, c) in d.iter() {
            let e1 = [e[0] + 1, e[1], e[2]];
            let fd = z * (up.coeff(&e1).mid - dn.coeff(&e1).mid) / (2.0 * h);
            assert!((fd - c.mid).abs() < 1e-6 * c.mid.abs().max(1.0), "{e:?}");
        }
    }

    #[test]
    fn connection_between_zero_and_one() {
        let ev = ev();
        for z in [0.3, 0.5, 0.7] {
            let r = mainthm2_check(z, 3, &ev).unwrap();
            assert!(r.pass && r.deviation < 1e-9, "{r:?}");
        }
    }

    #[test]
    fn dilogarithm_inversion_at_one_half() {
        let ev = ev();
        let v = euler_inversion_sum(0.5, 1, &ev).unwrap();
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((v.mid - z2).abs() < 1e-11);
        let r = euler_inversion_check(0.4, 3, &ev).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn psi11_coefficient() {
        let ev = ev();
        let (p11, _) = psi_dual_series(0.5, 2, &ev).unwrap();
        let li2_half = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
        assert!((p11.coeff(&[1, 0, 1]).mid + li2_half).abs() < 1e-13);
    }
}
