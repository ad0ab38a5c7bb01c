use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `C(n, k)` with the zero extension: `0` when `n < 0`, `k < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Multinomial `(a_1 + ... + a_r)! / (a_1! ... a_r!)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    let den = parts.iter().fold(BigInt::one(), |acc, &p| acc * factorial(p));
    let (q, r) = factorial(total).div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// All weak compositions of `total` into `parts` nonnegative summands.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_zero_extension() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(2, 3), BigInt::zero());
    }

    #[test]
    fn multinomial_small() {
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(&[2, 0]), BigInt::from(1));
        assert_eq!(weak_compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }
}
