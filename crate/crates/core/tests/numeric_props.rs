use proptest::prelude::*;

use hyperzeta::numeric::{EvalContext, PolylogEvaluator};
use hyperzeta::word_algebra::shuffle;
use hyperzeta::{FormalSum, Letter, Word};

fn h1_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..max_len).prop_map(|bits| {
        let mut w = Word::new(bits.into_iter().map(|b| if b { Letter::X } else { Letter::Y }).collect());
        w.push(Letter::Y);
        w
    })
}

fn evaluator() -> PolylogEvaluator {
    PolylogEvaluator::new(EvalContext::new(1e-12).unwrap())
}

/// `Li_2` by its defining series, independent of the word evaluator.
fn dilog(z: f64) -> f64 {
    (1..2000).map(|n| z.powi(n) / f64::from(n * n)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn li_is_a_shuffle_homomorphism(u in h1_word(3), v in h1_word(3), z in 0.05f64..0.95) {
        let ev = evaluator();
        let lhs = ev.li_h1_word(&u, z).unwrap() * ev.li_h1_word(&v, z).unwrap();
        let rhs = ev.li_ext_sum(&shuffle(&u, &v), z).unwrap();
        prop_assert!(lhs.distance(&rhs) <= 10.0 * (lhs.rad + rhs.rad).max(1e-15), "{} vs {}", lhs.mid, rhs.mid);
    }

    #[test]
    fn depth_one_values(z in 0.05f64..0.6) {
        let ev = evaluator();
        let li1 = ev.li_h1_word(&"y".parse().unwrap(), z).unwrap();
        prop_assert!((li1.mid + (1.0 - z).ln()).abs() < 1e-13);
        let li2 = ev.li_h1_word(&"xy".parse().unwrap(), z).unwrap();
        prop_assert!((li2.mid - dilog(z)).abs() < 1e-12);
    }

    #[test]
    fn extended_word_matches_shuffle_regularization(w in h1_word(3), z in 0.1f64..0.9) {
        // w x = reg1(w x) + w sh x for w in H^1, and Li(x; z) = log z
        let ev = evaluator();
        let wx = FormalSum::from_word(w.concat(&Word::letter(Letter::X)));
        let direct = ev.li_ext_sum(&wx, z).unwrap();
        let split = ev.li_ext_sum(&hyperzeta::word_algebra::reg1(&wx), z).unwrap()
            + ev.li_h1_word(&w, z).unwrap() * hyperzeta::numeric::Real::exact(z.ln());
        prop_assert!(direct.distance(&split) <= 10.0 * (direct.rad + split.rad).max(1e-15));
    }
}
