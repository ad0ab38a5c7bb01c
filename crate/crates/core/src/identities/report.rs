//! Identity reports and coefficientwise comparison.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{EvalContext, Real};
use crate::series::{exponents_up_to, monomial_name, TruncatedMultiSeries};

/// Safety factor applied to the summed certified radii.
pub const BUDGET_FACTOR: f64 = 10.0;

/// Outcome of one identity check.
///
/// `deviation` is the largest midpoint distance between the two sides over
/// everything compared; `budget` is [`BUDGET_FACTOR`] times the largest
/// combined certified radius. `pass` holds exactly when `deviation <= budget`
/// and no exact sub-check failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub deviation: f64,
    pub budget: f64,
    pub pass: bool,
    pub wall_ms: u64,
    /// Where the largest deviation occurred.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub at: String,
    #[serde(default)]
    pub lhs: f64,
    #[serde(default)]
    pub rhs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityReport {
    pub fn param(mut self, key: &str, value: impl ToString) -> IdentityReport {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> IdentityReport {
        self.note = Some(note.into());
        self
    }

    /// Marks an exact sub-check; a failure forces `pass = false`.
    pub fn require(mut self, ok: bool, what: &str) -> IdentityReport {
        if !ok {
            self.pass = false;
            let msg = format!("exact check failed: {what}");
            self.note = Some(match self.note.take() {
                Some(n) => format!("{n}; {msg}"),
                None => msg,
            });
        }
        self
    }

    /// Merges several reports for the same identity into one.
    pub fn merge(identity: &str, parts: Vec<IdentityReport>) -> IdentityReport {
        let mut c = Comparison::new();
        let mut pass = true;
        let mut wall = 0;
        let mut notes = Vec::new();
        let mut worst: Option<&IdentityReport> = None;
        for p in &parts {
            pass &= p.pass;
            wall += p.wall_ms;
            if let Some(n) = &p.note {
                notes.push(n.clone());
            }
            if worst.is_none_or(|w| p.deviation > w.deviation) {
                worst = Some(p);
            }
            c.budget_radius = c.budget_radius.max(p.budget / BUDGET_FACTOR);
        }
        let mut params = BTreeMap::new();
        params.insert("cases".to_string(), parts.len().to_string());
        let (deviation, at, lhs, rhs) = match worst {
            Some(w) => {
                let at = w.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",");
                let at = if w.at.is_empty() { at } else { format!("{at}:{}", w.at) };
                (w.deviation, at, w.lhs, w.rhs)
            }
            None => (0.0, String::new(), 0.0, 0.0),
        };
        IdentityReport {
            identity: identity.to_string(),
            params,
            deviation,
            budget: c.budget_radius * BUDGET_FACTOR,
            pass,
            wall_ms: wall,
            at,
            lhs,
            rhs,
            note: if notes.is_empty() { None } else { Some(notes.join("; ")) },
        }
    }
}

/// Accumulates pairs of certified values that should be equal.
#[derive(Debug, Clone)]
pub struct Comparison {
    deviation: f64,
    budget_radius: f64,
    at: String,
    lhs: f64,
    rhs: f64,
    start: Instant,
}

impl Default for Comparison {
    fn default() -> Self {
        Comparison::new()
    }
}

impl Comparison {
    pub fn new() -> Comparison {
        Comparison { deviation: 0.0, budget_radius: 0.0, at: String::new(), lhs: 0.0, rhs: 0.0, start: Instant::now() }
    }

    pub fn push(&mut self, at: impl FnOnce() -> String, lhs: Real, rhs: Real) {
        let d = lhs.distance(&rhs);
        let d = if d.is_nan() { f64::INFINITY } else { d };
        self.budget_radius = self.budget_radius.max(lhs.rad + rhs.rad);
        if d > self.deviation || self.at.is_empty() {
            self.deviation = d;
            self.at = at();
            self.lhs = lhs.mid;
            self.rhs = rhs.mid;
        }
    }

    /// Compares two series coefficientwise over every exponent up to the smaller cap.
    pub fn push_series(&mut self, lhs: &TruncatedMultiSeries<Real>, rhs: &TruncatedMultiSeries<Real>) {
        for e in exponents_up_to(lhs.cap().min(rhs.cap())) {
            self.push(|| monomial_name(&e), lhs.coeff(&e), rhs.coeff(&e));
        }
    }

    pub fn deviation(&self) -> f64 {
        self.deviation
    }

    /// Produces the report, or [`Error::PrecisionUnreachable`] when the
    /// certified radii exceed the context's target.
    pub fn finish(self, identity: &str, ctx: &EvalContext) -> Result<IdentityReport> {
        if self.budget_radius.is_nan() || self.budget_radius > ctx.target_abs_error {
            return Err(Error::PrecisionUnreachable(format!(
                "{identity}: certified error {:e} at {} exceeds target {:e}",
                self.budget_radius, self.at, ctx.target_abs_error
            )));
        }
        let budget = BUDGET_FACTOR * self.budget_radius;
        Ok(IdentityReport {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            deviation: self.deviation,
            budget,
            pass: self.deviation <= budget,
            wall_ms: self.start.elapsed().as_millis() as u64,
            at: self.at,
            lhs: self.lhs,
            rhs: self.rhs,
            note: None,
        })
    }
}
