//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use hyperzeta::identities::*;
use hyperzeta::numeric::{EvalContext, PolylogEvaluator};
use hyperzeta::{IndexVector, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

/// Accumulates reports against one absolute tolerance.
struct Gate {
    tol: f64,
    worst: f64,
    worst_at: String,
    failures: Vec<String>,
}

impl Gate {
    fn new(tol: f64) -> Gate {
        Gate { tol, worst: 0.0, worst_at: String::new(), failures: Vec::new() }
    }

    /// Exact reports (budget 0) only need `pass`; numeric ones also need the
    /// deviation under the criterion's tolerance.
    fn report(&mut self, r: &IdentityReport) {
        if r.budget > 0.0 && r.deviation >= self.worst {
            self.worst = r.deviation;
            self.worst_at = format!("{} {}", r.identity, r.at);
        }
        if !r.pass || (r.budget > 0.0 && r.deviation >= self.tol) {
            self.failures.push(format!("{} {:?} dev={:.2e} budget={:.2e} at {}", r.identity, r.params, r.deviation, r.budget, r.at));
        }
    }

    fn value(&mut self, what: &str, dev: f64) {
        if dev >= self.worst {
            self.worst = dev;
            self.worst_at = what.to_string();
        }
        if dev.is_nan() || dev >= self.tol {
            self.failures.push(format!("{what}: {dev:.2e}"));
        }
    }

    fn fail(&mut self, what: String) {
        self.failures.push(what);
    }

    fn finish(self, elapsed: Duration, limit: Option<Duration>) -> Outcome {
        let mut failures = self.failures;
        if let Some(limit) = limit {
            if elapsed >= limit {
                failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        let mut detail = format!("max |dev| {:.2e} (tol {:.0e}", self.worst, self.tol);
        if !self.worst_at.is_empty() {
            detail.push_str(&format!(", at {}", self.worst_at));
        }
        detail.push_str(&format!(") in {elapsed:.2?}"));
        for f in &failures {
            detail.push_str(&format!("\n    failed: {f}"));
        }
        Outcome { pass: failures.is_empty(), detail }
    }
}

fn evaluator(target: f64) -> PolylogEvaluator {
    PolylogEvaluator::new(EvalContext::new(target).unwrap())
}

fn timed(limit: Option<Duration>, tol: f64, body: impl FnOnce(&mut Gate) -> Result<()>) -> Outcome {
    let start = Instant::now();
    let mut gate = Gate::new(tol);
    if let Err(e) = body(&mut gate) {
        gate.fail(format!("error: {e}"));
    }
    gate.finish(start.elapsed(), limit)
}

fn criterion_1() -> Outcome {
    timed(Some(Duration::from_secs(10)), 0.0, |g| {
        g.report(&shuffle_laws_check(6, 8, 200, 1));
        g.report(&reg1_laws_check(6, 4));
        g.report(&t0_lemma_check(7));
        Ok(())
    })
}

fn criterion_2() -> Outcome {
    timed(Some(Duration::from_secs(60)), 1e-10, |g| {
        let ev = evaluator(1e-12);
        for z in [0.2, 0.3, 0.5] {
            g.report(&mainthm1_check(z, 5, &ev)?);
            g.report(&mainthm1_low_degree_check(z, 5, &ev)?);
        }
        Ok(())
    })
}

fn criterion_3() -> Outcome {
    timed(None, 1e-9, |g| {
        let ev = evaluator(1e-12);
        for z in [0.3, 0.5, 0.7] {
            g.report(&mainthm2_check(z, 4, &ev)?);
            g.report(&euler_inversion_check(z, 4, &ev)?);
        }
        let li2 = ev.li_index(&IndexVector::new(vec![2]).unwrap(), 0.5)?;
        let lhs = 2.0 * li2.mid + std::f64::consts::LN_2.powi(2);
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        let dev = (lhs - zeta2).abs();
        if dev >= 1e-11 {
            g.fail(format!("2 Li2(1/2) + log^2 2 - zeta(2) = {dev:.2e}"));
        }
        g.value("2 Li2(1/2) + log^2 2 = zeta(2)", dev);
        Ok(())
    })
}

fn criterion_4() -> Outcome {
    timed(Some(Duration::from_secs(120)), 1e-9, |g| {
        g.report(&sum_formula_all(8, &evaluator(1e-12))?);
        Ok(())
    })
}

fn criterion_5() -> Outcome {
    timed(None, 1e-9, |g| {
        g.report(&duality_all(8, &evaluator(1e-12))?);
        Ok(())
    })
}

fn criterion_6() -> Outcome {
    timed(None, 1e-8, |g| {
        g.report(&mainthm3_all(6, &evaluator(1e-12))?);
        Ok(())
    })
}

fn criterion_7() -> Outcome {
    timed(None, 1e-9, |g| {
        g.report(&lemma_yxn_check(6, &evaluator(1e-12))?);
        Ok(())
    })
}

fn criterion_8() -> (Outcome, String) {
    let mut m2n1 = String::new();
    let out = timed(None, 1e-8, |g| {
        let ev = evaluator(1e-12);
        g.report(&connection12_check(4, &ev)?);
        g.report(&connection12_m1_check(4, &ev)?);
        for l in 1..=5 {
            g.report(&m2n0_check(l, &ev)?);
        }
        let mut worst = 0.0f64;
        let mut failed = Vec::new();
        for l in 0..=5 {
            let r = m2n1_check(l, &ev)?;
            worst = worst.max(r.deviation);
            if !r.pass {
                failed.push(l);
            }
        }
        m2n1 = if failed.is_empty() {
            format!("m2n1 as stated holds for l = 0..5, max |dev| {worst:.2e}")
        } else {
            format!("m2n1 as stated fails for l in {failed:?}")
        };
        Ok(())
    });
    (out, m2n1)
}

fn criterion_9() -> Outcome {
    timed(None, 1e-10, |g| {
        let ev = evaluator(1e-12);
        for n in (2..=12).step_by(2) {
            g.report(&euler_even_check(n, &ev)?);
        }
        Ok(())
    })
}

fn criterion_10() -> Outcome {
    timed(None, 1e-6, |g| {
        let ev = evaluator(1e-12);
        let r = bound_half_check(8, &[0.1, 0.25, 0.49], &ev)?;
        if !r.pass {
            g.fail(format!("|Li| bound: max {:.4} at {}", r.deviation, r.at));
        }
        let (rel, at) = differential_relations(8, &[0.2, 0.4], 1e-5, &ev)?;
        g.value(&format!("relative error of {at}"), rel);
        let (ratio, at) = split_vs_direct(6, 100_000, &ev)?;
        if ratio > 1.0 {
            g.fail(format!("split and direct balls disjoint for {at}: ratio {ratio:.3}"));
        }
        Ok(())
    })
}

fn main() {
    let start = Instant::now();
    let (c8, m2n1) = criterion_8();
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        c8,
        criterion_9(),
        criterion_10(),
    ];
    let mut failed = 0;
    for (i, o) in outcomes.iter().enumerate() {
        println!("criterion {}: {} {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("note: {m2n1}");
    println!("acceptance: {} of {} criteria passed in {:.2?}", outcomes.len() - failed, outcomes.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
