//! The Gauss hypergeometric series and its Taylor expansion in the
//! parameters `lambda1 = beta`, `lambda2 = alpha + 1 - gamma`, `lambda3 = -alpha`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::series::{total_degree, TruncatedMultiSeries};

use super::context::{ComplexValue, EvalContext};
use super::real::Real;

/// `F(alpha, beta; gamma; z) = sum_n (alpha)_n (beta)_n / ((gamma)_n n!) z^n`.
///
/// Once the term ratio is bounded by some `rho < 1` for every later index,
/// the tail after term `t_n` is at most `|t_n| rho / (1 - rho)`.
pub fn gauss_f(alpha: f64, beta: f64, gamma: f64, z: f64, ctx: &EvalContext) -> Result<ComplexValue> {
    if gamma <= 0.0 && gamma.fract() == 0.0 {
        return Err(Error::Pole(gamma));
    }
    if z.is_nan() || z.abs() >= 1.0 {
        return Err(Error::Domain(z));
    }
    let tail_target = ctx.target_abs_error * 1e-3;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for n in 0..ctx.max_terms {
        let nf = n as f64;
        term *= (alpha + nf) * (beta + nf) / ((gamma + nf) * (nf + 1.0)) * z;
        sum += term;
        abs_sum += term.abs();
        // bound for every ratio with index m >= n + 1
        let m = nf + 1.0;
        if m + gamma.min(0.0) > 0.0 {
            let rho = z.abs() * (1.0 + alpha.abs() / m) * (1.0 + beta.abs() / m)
                / (1.0 - (-gamma).max(0.0) / m);
            if rho < 1.0 {
                let tail = term.abs() * rho / (1.0 - rho);
                if tail <= tail_target {
                    let rounding = 4.0 * f64::EPSILON * (n as f64 + 4.0) * abs_sum;
                    let v = Real::with_rad(sum, tail + rounding);
                    return ctx.certify(|| format!("F({alpha},{beta};{gamma};{z})"), v).map(ComplexValue::from_real);
                }
            }
        }
    }
    Err(Error::PrecisionUnreachable(format!(
        "F({alpha},{beta};{gamma};{z}) needs more than {} terms",
        ctx.max_terms
    )))
}

type QSeries = TruncatedMultiSeries<BigRational>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `1 / (j - u)` with `u = lambda2 + lambda3`, as `(1/j) sum_k (u/j)^k`.
fn inverse_shifted(j: i64, cap: u32) -> QSeries {
    let u = QSeries::linear([0, 1, 1], cap);
    let ratio = u.scale(&BigRational::new(BigInt::one(), BigInt::from(j)));
    let mut out = QSeries::zero(cap);
    let mut power = QSeries::one(cap);
    for _ in 0..=cap {
        out = out.ts_add(&power);
        power = power.ts_mul(&ratio);
    }
    out.scale(&BigRational::new(BigInt::one(), BigInt::from(j)))
}

/// Exact coefficient polynomial `c_n(lambda)` of `z^n` in `F`, for `n >= 1`:
/// `c_n = -lambda1 lambda3 / n! prod_{j<n} (j - lambda3)(j + lambda1) prod_{j<=n} 1/(j - u)`.
pub struct TermPolynomials {
    cap: u32,
    n: i64,
    // c_n without the leading -lambda1 lambda3
    core: QSeries,
}

impl TermPolynomials {
    pub fn new(cap: u32) -> TermPolynomials {
        // core_1 = 1 / (1 - u)
        TermPolynomials { cap, n: 1, core: inverse_shifted(1, cap) }
    }

    pub fn current(&self) -> (i64, QSeries) {
        let c = self.core.shift([1, 0, 1]).scale(&q(-1));
        (self.n, c)
    }

    pub fn advance(&mut self) {
        let n = self.n;
        let a = QSeries::linear([0, 0, -1], self.cap).ts_add(&QSeries::constant(q(n), self.cap));
        let b = QSeries::linear([1, 0, 0], self.cap).ts_add(&QSeries::constant(q(n), self.cap));
        self.core = self
            .core
            .ts_mul(&a)
            .ts_mul(&b)
            .ts_mul(&inverse_shifted(n + 1, self.cap))
            .scale(&BigRational::new(BigInt::one(), BigInt::from(n + 1)));
        self.n += 1;
    }
}

/// Certified bound on `|[lambda^e] t_n|` summed over `n > n_max`, by Cauchy's
/// estimate on the polydisc `|lambda_i| <= 1/4`:
/// `|t_n| <= (1/4)_n^2 / ((1/2)_n n!) z^n`, whose term ratio is at most `z`.
fn coefficient_tail(n_max: i64, z: f64, degree: u32) -> f64 {
    let r = 0.25;
    let mut t = 1.0;
    for j in 0..=n_max {
        let jf = j as f64;
        t *= (r + jf) * (r + jf) / ((1.0 - 2.0 * r + jf) * (jf + 1.0)) * z;
    }
    t / (1.0 - z) * 4f64.powi(degree as i32) * (1.0 + 1e-10)
}

/// Taylor coefficients of `F(-lambda3, lambda1; 1 - lambda2 - lambda3; z)` in
/// the lambdas up to total degree `cap`.
///
/// Each `z^n` coefficient is an exact rational polynomial; the sum over `n` is
/// carried out exactly in the binary rational equal to `z`, and the omitted
/// tail is bounded by [`coefficient_tail`]. Independent of any polylogarithm
/// code.
pub fn f_lambda_expansion(z: f64, cap: u32, ctx: &EvalContext) -> Result<TruncatedMultiSeries<Real>> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(z));
    }
    let zq = BigRational::from_f64(z).ok_or(Error::Domain(z))?;
    let tail_target = ctx.target_abs_error * 1e-2;
    let mut terms = TermPolynomials::new(cap);
    let mut acc = QSeries::one(cap);
    let mut zpow = zq.clone();
    loop {
        let (n, c) = terms.current();
        acc = acc.ts_add(&c.scale(&zpow));
        if coefficient_tail(n, z, cap) <= tail_target {
            let mut out = TruncatedMultiSeries::<Real>::zero(cap);
            for (e, v) in acc.iter() {
                let tail = coefficient_tail(n, z, total_degree(e));
                let mid = v.to_f64().unwrap_or(f64::NAN);
                out.add_term(*e, Real::with_rad(mid, tail + 2.0 * f64::EPSILON * mid.abs()));
            }
            // the tail bound applies to vanishing coefficients as well
            for e in crate::series::exponents_up_to(cap) {
                if out.coeff(&e).is_exact_zero() && total_degree(&e) > 0 {
                    out.add_term(e, Real::with_rad(0.0, coefficient_tail(n, z, total_degree(&e))));
                }
            }
            return Ok(out);
        }
        if n as usize >= ctx.max_terms {
            return Err(Error::PrecisionUnreachable(format!(
                "F expansion at z = {z} needs more than {} terms",
                ctx.max_terms
            )));
        }
        terms.advance();
        zpow = &zpow * &zq;
        // keep the exact sum from growing without bound in size
        if zpow.denom().bits() > 4096 && zpow.abs() < BigRational::new(1.into(), BigInt::from(1) << 200u32) {
            return Err(Error::PrecisionUnreachable("F expansion did not converge".into()));
        }
    }
}
