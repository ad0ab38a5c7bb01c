use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

/// Relative rounding slack charged per floating point operation.
const ULP: f64 = 2.0 * f64::EPSILON;

/// A real number known to lie in `[mid - rad, mid + rad]`.
///
/// Every operation widens `rad` to cover both the propagated input radii and
/// the rounding error of the `f64` midpoint computation, so the enclosure is
/// certified as long as the underlying libm functions are faithful to a few
/// ulps.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Real {
    pub mid: f64,
    pub rad: f64,
}

fn slack(x: f64) -> f64 {
    ULP * x.abs()
}

impl Real {
    pub const ZERO: Real = Real { mid: 0.0, rad: 0.0 };
    pub const ONE: Real = Real { mid: 1.0, rad: 0.0 };

    /// An exactly representable value.
    pub fn exact(x: f64) -> Real {
        Real { mid: x, rad: 0.0 }
    }

    pub fn with_rad(mid: f64, rad: f64) -> Real {
        Real { mid, rad: rad.abs() }
    }

    pub fn from_int(n: i64) -> Real {
        let mid = n as f64;
        let rad = if mid.abs() < 9.0e15 { 0.0 } else { slack(mid) };
        Real { mid, rad }
    }

    pub fn from_rational(q: &BigRational) -> Real {
        let mid = q.to_f64().unwrap_or(f64::NAN);
        let rad = if q.is_integer() && mid.abs() < 9.0e15 { 0.0 } else { slack(mid) };
        Real { mid, rad }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.mid == 0.0 && self.rad == 0.0
    }

    pub fn abs_upper(&self) -> f64 {
        self.mid.abs() + self.rad
    }

    /// Inflates the radius by an additional (certified) error term.
    pub fn add_error(self, err: f64) -> Real {
        Real { mid: self.mid, rad: self.rad + err.abs() }
    }

    pub fn recip(self) -> Real {
        let lo = self.mid.abs() - self.rad;
        assert!(lo > 0.0, "reciprocal of a ball containing zero");
        let mid = 1.0 / self.mid;
        Real { mid, rad: self.rad / (lo * self.mid.abs()) + slack(mid) }
    }

    pub fn powi(self, n: u32) -> Real {
        (0..n).fold(Real::ONE, |acc, _| acc * self)
    }

    /// Natural logarithm; the ball must lie in `(0, inf)`.
    pub fn ln(self) -> Real {
        let lo = self.mid - self.rad;
        assert!(lo > 0.0, "logarithm of a ball reaching zero");
        let mid = self.mid.ln();
        Real { mid, rad: self.rad / lo + slack(mid) + f64::EPSILON }
    }

    /// `ln(1 + x)` for a ball inside `(-1, inf)`.
    pub fn ln_1p(self) -> Real {
        let lo = self.mid - self.rad;
        assert!(lo > -1.0, "ln_1p of a ball reaching -1");
        let mid = self.mid.ln_1p();
        Real { mid, rad: self.rad / (1.0 + lo) + slack(mid) }
    }

    pub fn exp(self) -> Real {
        let mid = self.mid.exp();
        let hi = (self.mid + self.rad).exp();
        Real { mid, rad: hi * self.rad.exp_m1().abs().max(self.rad) + slack(hi) }
    }

    pub fn pi() -> Real {
        Real { mid: std::f64::consts::PI, rad: slack(std::f64::consts::PI) }
    }

    pub fn ln2() -> Real {
        Real { mid: std::f64::consts::LN_2, rad: slack(std::f64::consts::LN_2) }
    }

    /// Absolute distance between midpoints.
    pub fn distance(&self, other: &Real) -> f64 {
        (self.mid - other.mid).abs()
    }

    /// True when the two enclosures intersect.
    pub fn overlaps(&self, other: &Real) -> bool {
        self.distance(other) <= self.rad + other.rad
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Real {
        Real::exact(x)
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, o: Real) -> Real {
        let mid = self.mid + o.mid;
        Real { mid, rad: self.rad + o.rad + slack(mid) }
    }
}

impl AddAssign for Real {
    fn add_assign(&mut self, o: Real) {
        *self = *self + o;
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, o: Real) -> Real {
        self + (-o)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mid: -self.mid, rad: self.rad }
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, o: Real) -> Real {
        let mid = self.mid * o.mid;
        let rad = self.mid.abs() * o.rad + o.mid.abs() * self.rad + self.rad * o.rad;
        Real { mid, rad: rad + slack(mid) }
    }
}

impl Mul<f64> for Real {
    type Output = Real;
    fn mul(self, o: f64) -> Real {
        self * Real::exact(o)
    }
}

impl Div for Real {
    type Output = Real;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Real) -> Real {
        self * o.recip()
    }
}

impl Div<f64> for Real {
    type Output = Real;
    fn div(self, o: f64) -> Real {
        self / Real::exact(o)
    }
}

impl std::iter::Sum for Real {
    fn sum<I: Iterator<Item = Real>>(iter: I) -> Real {
        iter.fold(Real::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.17e} +/- {:.2e}", self.mid, self.rad)
    }
}
