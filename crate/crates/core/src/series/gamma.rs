use crate::error::{Error, Result};
use crate::numeric::Real;

use super::multi::{substitute_linear, TruncatedMultiSeries, UniSeries};

/// Riemann zeta values `zeta(2), ..., zeta(N)`, indexed by their argument.
///
/// Slots `0` and `1` hold zero, so `values()[n]` is `zeta(n)` for `n >= 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaVector {
    values: Vec<Real>,
}

impl ZetaVector {
    /// `zetas[i]` is `zeta(i + 2)`.
    pub fn new(zetas: Vec<Real>) -> ZetaVector {
        let mut values = vec![Real::ZERO, Real::ZERO];
        values.extend(zetas);
        ZetaVector { values }
    }

    /// Largest `n` with `zeta(n)` available.
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Real {
        assert!(n >= 2 && n <= self.max_n(), "zeta({n}) not in the vector");
        self.values[n]
    }

    pub fn values(&self) -> &[Real] {
        &self.values
    }

    /// The weighted vector `(0, zeta(2)/2, zeta(3)/3, ...)`; entry `i` is `x_{i+1}`.
    pub fn weighted(&self) -> Vec<Real> {
        (1..=self.max_n())
            .map(|n| if n < 2 { Real::ZERO } else { self.values[n] / n as f64 })
            .collect()
    }
}

/// Which side of `1` a gamma factor is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaSide {
    /// `Gamma(1 - L)`
    OneMinus,
    /// `Gamma(1 + L)`
    OnePlus,
}

/// A factor `Gamma(1 -/+ L)^power` where `L` is an integer form in the lambdas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaFactor {
    pub form: [i64; 3],
    pub side: GammaSide,
    pub power: i32,
}

impl GammaFactor {
    pub fn new(form: [i64; 3], side: GammaSide, power: i32) -> GammaFactor {
        GammaFactor { form, side, power }
    }
}

/// `log Gamma(1 - t)` without its Euler-constant term:
/// `log Gamma(1 - t) = c t + sum_{n>=2} zeta(n) t^n / n`.
///
/// The linear term `c t` is carried symbolically by [`gamma_ratio`].
pub fn gamma_one_minus_log_series(zeta: &ZetaVector, cap: u32) -> UniSeries<Real> {
    let coeffs = (0..=cap as usize).map(|n| if n < 2 { Real::ZERO } else { zeta.get(n) / n as f64 }).collect();
    UniSeries::new(coeffs)
}

/// `log Gamma(1 + t) = -c t + sum_{n>=2} (-1)^n zeta(n) t^n / n`, without `-c t`.
pub fn gamma_one_plus_log_series(zeta: &ZetaVector, cap: u32) -> UniSeries<Real> {
    let mut s = gamma_one_minus_log_series(zeta, cap);
    for (n, c) in s.coeffs.iter_mut().enumerate() {
        if n % 2 == 1 {
            *c = -*c;
        }
    }
    s
}

/// Linear form multiplying the Euler constant in `log` of the product.
pub fn euler_residue(factors: &[GammaFactor]) -> [i64; 3] {
    let mut r = [0i64; 3];
    for f in factors {
        let sign = match f.side {
            GammaSide::OneMinus => 1,
            GammaSide::OnePlus => -1,
        };
        for (ri, fi) in r.iter_mut().zip(f.form) {
            *ri += sign * f.power as i64 * fi;
        }
    }
    r
}

/// Expands `prod Gamma(1 -/+ L_i)^{p_i}` as a series in the lambdas.
///
/// Fails unless the Euler-constant contributions cancel identically.
pub fn gamma_ratio(factors: &[GammaFactor], zeta: &ZetaVector, cap: u32) -> Result<TruncatedMultiSeries<Real>> {
    let residue = euler_residue(factors);
    if residue != [0, 0, 0] {
        return Err(Error::EulerConstantResidue(residue));
    }
    let minus = gamma_one_minus_log_series(zeta, cap);
    let plus = gamma_one_plus_log_series(zeta, cap);
    let mut log = TruncatedMultiSeries::zero(cap);
    for f in factors {
        let uni = match f.side {
            GammaSide::OneMinus => &minus,
            GammaSide::OnePlus => &plus,
        };
        let term = substitute_linear(uni, f.form, cap).scale(&Real::from_int(f.power as i64));
        log = log.ts_add(&term);
    }
    log.ts_exp()
}
