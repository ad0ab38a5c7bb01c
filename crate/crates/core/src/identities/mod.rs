//! Numeric and exact verification of the expansion, connection and
//! zeta-value identities.

mod algebra;
mod catalog;
mod connection;
mod gsum;
mod limits;
mod mainthm;
mod report;

pub use algebra::*;
pub use catalog::*;
pub use connection::*;
pub use gsum::{g0_eval, g0_value, g_eval, g_value, g_words, GKind, GSum};
pub use limits::*;
pub use mainthm::*;
pub use report::{Comparison, IdentityReport, BUDGET_FACTOR};
