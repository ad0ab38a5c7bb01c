//! Exact arithmetic in the shuffle algebra `H = Q<x,y>`.
//!
//! Words encode iterated integrals: `x` is `dt/t`, `y` is `dt/(1-t)`, and the
//! monomial `x^{k1-1} y ... x^{kn-1} y` corresponds to the multi-index
//! `(k1, ..., kn)`. `H^1` holds the words ending in `y` (plus `1`), `H^0` the
//! admissible ones starting with `x` and ending in `y`.

mod ops;
mod sum;
mod word;

pub use ops::{enumerate_profile, reg1, reg1_word, shuffle, shuffle_power, shuffle_sum, tau, word_class_sum};
pub use sum::{FormalSum, TermRecord};
pub use word::{IndexVector, Letter, Word};
