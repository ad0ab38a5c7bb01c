//! Named identity checks, run profiles and the parallel runner.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{EvalContext, PolylogEvaluator};

use super::algebra::{
    bound_half_check, differential_relations, reg1_laws_check, shuffle_laws_check, split_vs_direct,
    t0_lemma_check,
};
use super::connection::{connection12_check, connection12_m1_check, euler_even_check, lemma_yxn_check, m2n0_check, m2n1_check};
use super::limits::{duality_all, mainthm3_all, oz_limit_check, sum_formula_all, z_to_one_trend};
use super::mainthm::{euler_inversion_check, mainthm1_check, mainthm1_cor_check, mainthm1_low_degree_check, mainthm2_check};
use super::report::IdentityReport;

/// Every identity name, in the order reports are emitted.
pub const IDENTITY_NAMES: [&str; 17] = [
    "bound-half",
    "connection-12",
    "duality",
    "euler-even",
    "euler-inversion",
    "lemma-yxn",
    "m2n0",
    "m2n1",
    "main-thm1",
    "main-thm1-cor",
    "main-thm2",
    "main-thm3",
    "oz-limit",
    "reg1-laws",
    "shuffle-laws",
    "sum-formula",
    "t0-lemma",
];

/// Parameters shared by all checks of one verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Largest weight for the weight-indexed families.
    pub max_weight: usize,
    /// Truncation degree in the lambdas.
    pub degree: u32,
    /// Sample points; `None` uses each identity's default points.
    pub z: Option<Vec<f64>>,
    /// Certified absolute error target of every evaluation.
    pub precision: f64,
    /// Seed for the randomized sweeps.
    pub seed: u64,
}

impl VerifyConfig {
    /// Weight <= 6, degree <= 4, precision 1e-9.
    pub fn quick() -> VerifyConfig {
        VerifyConfig { max_weight: 6, degree: 4, z: None, precision: 1e-9, seed: 0 }
    }

    /// Weight <= 8, degree <= 5, precision 1e-11.
    pub fn full() -> VerifyConfig {
        VerifyConfig { max_weight: 8, degree: 5, z: None, precision: 1e-11, seed: 0 }
    }

    pub fn validated(self) -> Result<VerifyConfig> {
        EvalContext::new(self.precision)?;
        if !(2..=10).contains(&self.max_weight) {
            return Err(Error::Parse(format!("max weight must lie in 2..=10, got {}", self.max_weight)));
        }
        if !(1..=6).contains(&self.degree) {
            return Err(Error::Parse(format!("degree must lie in 1..=6, got {}", self.degree)));
        }
        if let Some(zs) = &self.z {
            if let Some(bad) = zs.iter().find(|z| !(**z > 0.0 && **z < 1.0)) {
                return Err(Error::Domain(*bad));
            }
        }
        Ok(self)
    }

    fn points(&self, default: &[f64]) -> Vec<f64> {
        self.z.clone().unwrap_or_else(|| default.to_vec())
    }
}

pub fn is_identity_name(name: &str) -> bool {
    IDENTITY_NAMES.contains(&name)
}

/// Runs one named identity; most produce several sub-reports.
pub fn run_identity(name: &str, cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    let ctx = EvalContext::new(cfg.precision)?;
    let ev = PolylogEvaluator::new(ctx);
    let w = cfg.max_weight;
    let d = cfg.degree;
    let mut out = Vec::new();
    match name {
        "main-thm1" => {
            for z in cfg.points(&[0.2, 0.3, 0.5]) {
                out.push(mainthm1_check(z, d, &ev)?);
                out.push(mainthm1_low_degree_check(z, d, &ev)?);
            }
        }
        "main-thm1-cor" => {
            for z in cfg.points(&[0.3]) {
                out.push(mainthm1_cor_check(z, d, &ev)?);
            }
        }
        "main-thm2" => {
            for z in cfg.points(&[0.3, 0.5, 0.7]) {
                out.push(mainthm2_check(z, d, &ev)?);
            }
        }
        "euler-inversion" => {
            for z in cfg.points(&[0.3, 0.5, 0.7]) {
                out.push(euler_inversion_check(z, d as usize, &ev)?);
            }
        }
        "oz-limit" => {
            out.push(oz_limit_check(d, &ev)?);
            out.push(z_to_one_trend(d.min(4), 3, 6, &ev)?);
        }
        "duality" => out.push(duality_all(w, &ev)?),
        "main-thm3" => out.push(mainthm3_all(w, &ev)?),
        "sum-formula" => out.push(sum_formula_all(w, &ev)?),
        "connection-12" => {
            out.push(connection12_check(d, &ev)?);
            out.push(connection12_m1_check(d, &ev)?);
        }
        "m2n0" => {
            for l in 1..=w - 2 {
                out.push(m2n0_check(l, &ev)?);
            }
        }
        "m2n1" => {
            for l in 0..=w - 3 {
                out.push(m2n1_check(l, &ev)?);
            }
        }
        "lemma-yxn" => out.push(lemma_yxn_check(w, &ev)?),
        "euler-even" => {
            for n in (2..=12).step_by(2) {
                out.push(euler_even_check(n, &ev)?);
            }
        }
        "t0-lemma" => out.push(t0_lemma_check(w.min(8))),
        "reg1-laws" => out.push(reg1_laws_check(w.min(6), 4)),
        "shuffle-laws" => out.push(shuffle_laws_check(w.min(6), w, 50, cfg.seed)),
        "bound-half" => {
            let zs = cfg.points(&[0.1, 0.25, 0.49]);
            if let Some(bad) = zs.iter().find(|z| **z > 0.5) {
                return Err(Error::Domain(*bad));
            }
            out.push(bound_half_check(w, &zs, &ev)?);
            let (rel, at) = differential_relations(w.min(6), &[0.2, 0.4], 1e-5, &ev)?;
            out.push(threshold_report("bound-half", rel, 1e-6, at).param("relation", "derivative"));
            let (ratio, at) = split_vs_direct(w.min(6), 100_000, &ev)?;
            out.push(threshold_report("bound-half", ratio, 1.0, at).param("relation", "split-vs-direct"));
        }
        other => return Err(Error::Parse(format!("unknown identity {other:?}"))),
    }
    Ok(out)
}

fn threshold_report(identity: &str, value: f64, limit: f64, at: String) -> IdentityReport {
    IdentityReport {
        identity: identity.to_string(),
        params: Default::default(),
        deviation: value,
        budget: limit,
        pass: value <= limit,
        wall_ms: 0,
        at,
        lhs: value,
        rhs: limit,
        note: None,
    }
}

/// Result of one named identity within a run.
#[derive(Debug)]
pub struct Outcome {
    pub name: String,
    pub result: Result<Vec<IdentityReport>>,
}

/// Runs the named identities on a pool of `jobs` workers (0 = one per core)
/// and returns the outcomes sorted by identity name.
pub fn run_many(names: &[&str], cfg: &VerifyConfig, jobs: usize) -> Result<Vec<Outcome>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidContext(e.to_string()))?;
    let mut out: Vec<Outcome> = pool.install(|| {
        names
            .par_iter()
            .map(|name| {
                let start = std::time::Instant::now();
                let result = run_identity(name, cfg).map(|mut reps| {
                    // sub-checks that do not time themselves get the job's wall time
                    let ms = start.elapsed().as_millis() as u64;
                    for r in reps.iter_mut().filter(|r| r.wall_ms == 0) {
                        r.wall_ms = ms;
                    }
                    reps
                });
                Outcome { name: name.to_string(), result }
            })
            .collect()
    });
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
