use num_bigint::BigInt;
use num_rational::BigRational;

use crate::comb::factorial;

use super::multi::Coeff;

/// Partitions of `k` written as multiplicities: `m[i]` parts equal to `i + 1`.
pub fn partitions_by_multiplicity(k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, part: usize, mult: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if part == 0 {
            if rest == 0 {
                out.push(mult.clone());
            }
            return;
        }
        for c in 0..=rest / part {
            mult[part - 1] = c;
            rec(rest - c * part, part - 1, mult, out);
        }
        mult[part - 1] = 0;
    }
    let mut out = Vec::new();
    rec(k, k, &mut vec![0; k], &mut out);
    out
}

/// `S_k(x) = sum_{k1 + 2 k2 + ... = k} prod_i x_i^{k_i} / k_i!`, the coefficient
/// of `t^k` in `exp(sum_i x_i t^i)`. `x[i]` holds `x_{i+1}`.
pub fn schur_s<C: Coeff>(k: usize, x: &[C]) -> C {
    if k == 0 {
        return C::one();
    }
    assert!(x.len() >= k, "schur_s({k}) needs {k} entries");
    let mut total = C::zero();
    for mult in partitions_by_multiplicity(k) {
        let mut term = C::one();
        for (i, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let inv = BigRational::new(BigInt::from(1), factorial(m as u64));
            for _ in 0..m {
                term = term.mul(&x[i]);
            }
            term = term.mul(&C::from_rational(&inv));
        }
        total = total.add(&term);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::multi::TruncatedMultiSeries;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|k| partitions_by_multiplicity(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn small_values_with_zero_first_slot() {
        let x = vec![q(0, 1), q(7, 3), q(5, 2), q(1, 9)];
        assert_eq!(schur_s(0, &x), q(1, 1));
        assert_eq!(schur_s(1, &x), q(0, 1));
        assert_eq!(schur_s(2, &x), q(7, 3));
        assert_eq!(schur_s(3, &x), q(5, 2));
        // x4 + x2^2/2
        assert_eq!(schur_s(4, &x), q(1, 9) + q(49, 18));
    }

    #[test]
    fn generating_function_matches_exp() {
        // one-variable series via the lambda1 slot
        let x = vec![q(1, 2), q(-3, 4), q(2, 5), q(1, 7), q(-1, 3), q(3, 11)];
        let cap = x.len() as u32;
        let mut log = TruncatedMultiSeries::<BigRational>::zero(cap);
        for (i, xi) in x.iter().enumerate() {
            log.add_term([i as u32 + 1, 0, 0], xi.clone());
        }
        let e = log.ts_exp().unwrap();
        for k in 0..=cap as usize {
            assert_eq!(e.coeff(&[k as u32, 0, 0]), schur_s(k, &x), "k = {k}");
        }
    }
}
