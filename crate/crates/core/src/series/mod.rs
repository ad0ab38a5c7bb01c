//! Truncated power series in `(lambda1, lambda2, lambda3)`, gamma-function
//! log-series, Schur polynomials and Bernoulli numbers.

mod bernoulli;
mod gamma;
mod multi;
mod schur;
mod zeta_poly;

pub use bernoulli::{bernoulli, bernoulli_numbers};
pub use gamma::{
    euler_residue, gamma_one_minus_log_series, gamma_one_plus_log_series, gamma_ratio, GammaFactor,
    GammaSide, ZetaVector,
};
pub use multi::{
    exponents_up_to, monomial_name, substitute_linear, total_degree, Coeff, Exponent,
    TruncatedMultiSeries, UniSeries,
};
pub use schur::{partitions_by_multiplicity, schur_s};
pub use zeta_poly::ZetaPoly;
