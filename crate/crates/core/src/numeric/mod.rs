//! Certified double precision evaluation of multiple polylogarithms, multiple
//! zeta values and the Gauss hypergeometric function on `(0, 1)`.

mod context;
mod hypergeometric;
mod polylog;
mod real;

pub use context::{ComplexValue, EvalContext, MIN_TARGET_ERROR};
pub use hypergeometric::{f_lambda_expansion, gauss_f, TermPolynomials};
pub use polylog::{li_direct, li_index, li_word, li_word_ext, zeta_direct, zeta_index, PolylogEvaluator};
pub use real::Real;
