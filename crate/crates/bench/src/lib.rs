//! Fixtures shared by the benchmarks.

use hyperzeta::numeric::{EvalContext, PolylogEvaluator};
use hyperzeta::{IndexVector, Word};

/// Word of the given weight alternating blocks of `x` and `y`, ending in `y`.
pub fn sample_word(weight: usize) -> Word {
    let s: String = (0..weight).map(|i| if (i / 2) % 2 == 0 { 'x' } else { 'y' }).collect();
    let mut s = s;
    s.pop();
    s.push('y');
    s.parse().expect("letters are x and y")
}

/// Admissible index `(2, 1, ..., 1)` of the given weight.
pub fn sample_index(weight: u32) -> IndexVector {
    let mut k = vec![2];
    k.extend(std::iter::repeat_n(1, weight as usize - 2));
    IndexVector::new(k).expect("first entry is 2")
}

/// Fresh evaluator with an empty memo table.
pub fn evaluator(target: f64) -> PolylogEvaluator {
    PolylogEvaluator::new(EvalContext::new(target).expect("valid target"))
}
