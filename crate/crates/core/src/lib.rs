//! Shuffle algebra, multiple polylogarithms and multiple zeta values, and the
//! expansion of Gauss hypergeometric solutions in terms of them.
//!
//! The crate is organized bottom-up: [`word_algebra`] holds exact arithmetic
//! on words over `{x, y}`, [`seq_transform`] the transforms from
//! `{1,2,3}`-sequences to words, [`series`] truncated power series in the
//! three parameters, [`numeric`] certified evaluation, and [`identities`] the
//! checks built from all of them.

pub mod comb;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod seq_transform;
pub mod series;
pub mod word_algebra;

pub use error::{Error, Result};
pub use seq_transform::{MuSequence, Transform};
pub use word_algebra::{FormalSum, IndexVector, Letter, Word};
