use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::real::Real;

/// Smallest absolute error target the `f64` ball arithmetic can honour.
pub const MIN_TARGET_ERROR: f64 = 1e-14;

/// Precision and truncation policy for numeric evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalContext {
    /// Certified absolute error every successful evaluation must meet.
    pub target_abs_error: f64,
    /// Cap on the number of terms of any single direct nested sum.
    pub max_terms: usize,
    /// Point `q` at which zeta values are split into two convergent pieces.
    pub split_point: f64,
    /// Decimal digits carried by the arithmetic (fixed by `f64`).
    pub working_precision: u32,
}

impl EvalContext {
    pub fn new(target_abs_error: f64) -> Result<EvalContext> {
        EvalContext { target_abs_error, ..EvalContext::default() }.validated()
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> EvalContext {
        self.max_terms = max_terms;
        self
    }

    pub fn with_split_point(mut self, q: f64) -> Result<EvalContext> {
        self.split_point = q;
        self.validated()
    }

    pub fn validated(self) -> Result<EvalContext> {
        if !(self.target_abs_error.is_finite() && self.target_abs_error > 0.0) {
            return Err(Error::InvalidContext(format!(
                "target error must be positive, got {}",
                self.target_abs_error
            )));
        }
        if self.target_abs_error < MIN_TARGET_ERROR {
            return Err(Error::InvalidContext(format!(
                "target error {:e} is below {MIN_TARGET_ERROR:e}, the limit of double precision balls",
                self.target_abs_error
            )));
        }
        if !(self.split_point > 0.0 && self.split_point < 1.0) {
            return Err(Error::InvalidContext(format!(
                "split point must lie in (0,1), got {}",
                self.split_point
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidContext("max_terms must be positive".into()));
        }
        Ok(self)
    }

    /// Fails with [`Error::PrecisionUnreachable`] if the ball is too wide.
    pub fn certify(&self, what: impl FnOnce() -> String, v: Real) -> Result<Real> {
        if v.rad.is_finite() && v.rad <= self.target_abs_error {
            Ok(v)
        } else {
            Err(Error::PrecisionUnreachable(format!(
                "{}: certified error {:e} exceeds target {:e}",
                what(),
                v.rad,
                self.target_abs_error
            )))
        }
    }
}

impl Default for EvalContext {
    fn default() -> EvalContext {
        EvalContext {
            target_abs_error: 1e-12,
            max_terms: 2_000_000,
            split_point: 0.5,
            working_precision: 16,
        }
    }
}

/// A value with a certified absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
    pub error_bound: f64,
}

impl ComplexValue {
    pub fn from_real(r: Real) -> ComplexValue {
        ComplexValue { re: r.mid, im: 0.0, error_bound: r.rad }
    }

    pub fn to_real(self) -> Real {
        Real::with_rad(self.re, self.error_bound)
    }

    pub fn abs_diff(&self, other: &ComplexValue) -> f64 {
        (self.re - other.re).hypot(self.im - other.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unreachable_targets() {
        assert!(EvalContext::new(1e-15).is_err());
        assert!(EvalContext::new(0.0).is_err());
        assert!(EvalContext::new(1e-12).is_ok());
        assert!(EvalContext::default().with_split_point(1.0).is_err());
    }

    #[test]
    fn certify_checks_the_radius() {
        let ctx = EvalContext::new(1e-10).unwrap();
        assert!(ctx.certify(|| "x".into(), Real::with_rad(1.0, 1e-11)).is_ok());
        assert!(matches!(
            ctx.certify(|| "x".into(), Real::with_rad(1.0, 1e-9)),
            Err(Error::PrecisionUnreachable(_))
        ));
    }
}
