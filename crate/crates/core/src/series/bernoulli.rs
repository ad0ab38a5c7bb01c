use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::binomial;

/// `B_0, ..., B_n` from `sum_{j=0}^{m} C(m+1, j) B_j = 0`, with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let s = (0..m).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::from_integer(binomial(m as i64 + 1, j as i64)) * &b[j]
        });
        b.push(-s / BigRational::from_integer((m as i64 + 1).into()));
    }
    b
}

pub fn bernoulli(n: usize) -> BigRational {
    bernoulli_numbers(n).pop().expect("nonempty")
}
