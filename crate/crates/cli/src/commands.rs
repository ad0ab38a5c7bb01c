use std::io::Write;

use serde::Serialize;

use hyperzeta::identities::{is_identity_name, mainthm1_series, run_many, IdentityReport, VerifyConfig, IDENTITY_NAMES};
use hyperzeta::numeric::{gauss_f, EvalContext, PolylogEvaluator, Real};
use hyperzeta::series::monomial_name;
use hyperzeta::{FormalSum, IndexVector, MuSequence, Transform, Word};

use crate::args::{EvalCommand, ExpandArgs, Format, TransformArgs, VerifyArgs};
use crate::error::CliError;

/// Default error target of `eval` and `expand`.
pub const DEFAULT_PRECISION: f64 = 1e-12;

#[derive(Debug, Serialize)]
struct ValueRecord {
    quantity: String,
    value: String,
    error_bound: String,
    strategy: &'static str,
}

fn emit_value(out: &mut impl Write, format: Format, rec: &ValueRecord) -> std::io::Result<()> {
    match format {
        Format::Table => writeln!(out, "{} = {} +/- {} [{}]", rec.quantity, rec.value, rec.error_bound, rec.strategy),
        Format::JsonLines => writeln!(out, "{}", serde_json::to_string(rec).expect("record serializes")),
    }
}

fn value_record(quantity: String, v: Real, strategy: &'static str) -> ValueRecord {
    ValueRecord { quantity, value: format!("{:.16}", v.mid), error_bound: format!("{:.2e}", v.rad), strategy }
}

fn context(precision: Option<f64>) -> Result<EvalContext, CliError> {
    Ok(EvalContext::new(precision.unwrap_or(DEFAULT_PRECISION))?)
}

fn li_strategy(z: f64, extended: bool) -> &'static str {
    match (extended, z <= 0.5) {
        (true, _) => "regularized word with log-power corrections",
        (false, true) => "direct nested sum",
        (false, false) => "path composition through 1/2",
    }
}

pub fn eval(cmd: &EvalCommand, precision: Option<f64>, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    let ctx = context(precision)?;
    let ev = PolylogEvaluator::new(ctx);
    let rec = match cmd {
        EvalCommand::Li(a) => {
            if let Some(index) = &a.index {
                let k: IndexVector = index.parse()?;
                let v = ctx.certify(|| format!("Li{k}({})", a.z), ev.li_index(&k, a.z)?)?;
                value_record(format!("Li{k}({})", a.z), v, li_strategy(a.z, false))
            } else {
                let w: Word = a.word.as_deref().unwrap_or_default().parse()?;
                let p = FormalSum::from_word(w.clone());
                let v = ctx.certify(|| format!("Li({w}; {})", a.z), ev.li_ext_sum(&p, a.z)?)?;
                let strategy = if w.in_h1() { li_strategy(a.z, false) } else { li_strategy(a.z, true) };
                value_record(format!("Li({w}; {})", a.z), v, strategy)
            }
        }
        EvalCommand::Zeta(a) => {
            let k: IndexVector = a.index.parse()?;
            let v = ctx.certify(|| format!("zeta{k}"), ev.zeta_index(&k)?)?;
            value_record(format!("zeta{k}"), v, "split of the iterated integral at 1/2")
        }
        EvalCommand::F(a) => {
            let v = gauss_f(a.alpha, a.beta, a.gamma, a.z, &ctx)?.to_real();
            value_record(format!("F({}, {}; {}; {})", a.alpha, a.beta, a.gamma, a.z), v, "hypergeometric series with ratio tail bound")
        }
    };
    emit_value(out, format, &rec).map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Debug, Serialize)]
struct CoefficientRecord {
    monomial: String,
    value: String,
    error_bound: String,
}

pub fn expand(a: &ExpandArgs, precision: Option<f64>, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    if !(1..=6).contains(&a.degree) {
        return Err(CliError::Usage(format!("degree must lie in 1..=6, got {}", a.degree)));
    }
    if !(a.z > 0.0 && a.z < 1.0) {
        return Err(hyperzeta::Error::Domain(a.z).into());
    }
    let ev = PolylogEvaluator::new(context(precision)?);
    let s = mainthm1_series(a.z, a.degree, &ev)?;
    for (e, c) in s.iter() {
        let rec = CoefficientRecord { monomial: monomial_name(e), value: format!("{:.16}", c.mid), error_bound: format!("{:.2e}", c.rad) };
        let res = match format {
            Format::Table => writeln!(out, "{:<16} {:>24} +/- {}", rec.monomial, rec.value, rec.error_bound),
            Format::JsonLines => writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes")),
        };
        res.map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct TransformRecord {
    transform: &'static str,
    mu: String,
    terms: Vec<(String, String)>,
}

pub fn transform(a: &TransformArgs, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    let t: Transform = a.which.parse()?;
    let mu: MuSequence = a.mu.parse()?;
    let image = t.apply(&mu);
    let res = match format {
        Format::Table => writeln!(out, "{}{} = {}", t.name(), mu, image),
        Format::JsonLines => {
            let rec = TransformRecord {
                transform: t.name(),
                mu: mu.to_string(),
                terms: image.iter().map(|(w, c)| (w.to_string(), c.to_string())).collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))
        }
    };
    res.map_err(|e| CliError::Usage(e.to_string()))
}

fn print_table(out: &mut impl Write, reports: &[IdentityReport]) -> std::io::Result<()> {
    writeln!(out, "{:<16} {:<5} {:>10} {:>10} {:>8}  params", "identity", "pass", "deviation", "budget", "wall_ms")?;
    for r in reports {
        let params = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
        writeln!(
            out,
            "{:<16} {:<5} {:>10.2e} {:>10.2e} {:>8}  {}{}",
            r.identity,
            if r.pass { "ok" } else { "FAIL" },
            r.deviation,
            r.budget,
            r.wall_ms,
            params,
            if r.pass { String::new() } else { format!(" (worst at {})", r.at) }
        )?;
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    writeln!(out, "{} checks, {} failed", reports.len(), failed)
}

/// Runs the selected identities. Exit status: 0 when everything passes, 3
/// when some check could not reach the requested precision, otherwise 1 if
/// any check failed.
pub fn verify(a: &VerifyArgs, precision: Option<f64>, format: Format, out: &mut impl Write) -> Result<i32, CliError> {
    let base = if a.quick { VerifyConfig::quick() } else { VerifyConfig::full() };
    let cfg = VerifyConfig {
        max_weight: a.max_weight.unwrap_or(base.max_weight),
        degree: a.degree.unwrap_or(base.degree),
        z: a.z.clone(),
        precision: precision.unwrap_or(base.precision),
        seed: a.seed,
    }
    .validated()?;
    let names: Vec<&str> = if a.all { IDENTITY_NAMES.to_vec() } else { a.identity.iter().map(String::as_str).collect() };
    if let Some(bad) = names.iter().find(|n| !is_identity_name(n)) {
        return Err(CliError::Usage(format!("unknown identity {bad:?}; expected one of {}", IDENTITY_NAMES.join(", "))));
    }
    let mut reports = Vec::new();
    let mut precision_failed = false;
    for outcome in run_many(&names, &cfg, a.jobs)? {
        match outcome.result {
            Ok(r) => reports.extend(r),
            Err(e) => {
                eprintln!("{}: {e}", outcome.name);
                let err = CliError::from(e);
                if err.exit_code() == 3 {
                    precision_failed = true;
                } else {
                    return Err(err);
                }
            }
        }
    }
    let io = match format {
        Format::Table => print_table(out, &reports),
        Format::JsonLines => reports
            .iter()
            .try_for_each(|r| writeln!(out, "{}", serde_json::to_string(r).expect("report serializes"))),
    };
    io.map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(if precision_failed {
        3
    } else if reports.iter().any(|r| !r.pass) {
        1
    } else {
        0
    })
}
