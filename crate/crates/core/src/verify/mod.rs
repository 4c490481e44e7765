//! Verification: sampling bindings, checking identities in their modes, and
//! running the whole registry as a deterministic suite.
//!
//! Every check produces a [`VerificationReport`]. Exact and formal checks
//! pass only on exact rational equality; analytic checks pass when the
//! difference of the forms is inside the sum of their tail bounds, and those
//! bounds are at most [`ANALYTIC_BOUND`].

mod check;
mod sample;
mod suite;

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{EvalError, Result};
use crate::eval::{Args, Ctx, Mode, Val, DEFAULT_TOL};
use crate::rational::{abs_upper, frac, inflate, Rational};
use crate::registry::lineage::{Correction, Factor};
use crate::registry::{Identity, VerifyMode};

pub use check::{compare, Comparison, Metric, ANALYTIC_BOUND, SLACKS};
pub use sample::{stream_seed, SampleConfig, Sampler, MAX_REJECTIONS};
pub use suite::{run_identities, run_lineage, run_suite, summarize, Plan, Summary};

/// Slack allowed between a finite identity at large `N` and its limit.
pub const COHERENCE_SLACK: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    /// Identity id, or `FROM->TO` style ids for relations between identities.
    pub id: String,
    pub mode: VerifyMode,
    /// Parameter values, with `q` for point checks; `N` is kept in `n`.
    pub binding: Args,
    pub n: Option<i64>,
    /// Series order for formal checks.
    pub order: Option<i64>,
    pub status: Status,
    pub metric: Metric,
    /// Why a check failed to evaluate or was skipped.
    pub detail: Option<String>,
    pub duration_ms: u64,
    /// True when a tail bound came from the ratio heuristic rather than a
    /// closed-form estimate.
    pub heuristic_tail: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The metric, or the diagnostic when evaluation did not get that far.
    pub fn metric_text(&self) -> String {
        match &self.detail {
            Some(d) => d.clone(),
            None => self.metric.to_string(),
        }
    }
}

fn split_n(binding: &Args) -> (Args, Option<i64>) {
    let n = binding.n("N").ok();
    let rest: BTreeMap<String, Rational> =
        binding.iter().filter(|(k, _)| *k != "N").map(|(k, v)| (k.to_string(), v.clone())).collect();
    (Args::from(rest), n)
}

fn report(
    id: &str,
    mode: VerifyMode,
    binding: &Args,
    order: Option<i64>,
    started: Instant,
    outcome: Result<(Comparison, bool)>,
) -> VerificationReport {
    let (binding, n) = split_n(binding);
    let duration_ms = started.elapsed().as_millis() as u64;
    let base = |status, metric, detail, heuristic_tail| VerificationReport {
        id: id.to_string(),
        mode,
        binding: binding.clone(),
        n,
        order,
        status,
        metric,
        detail,
        duration_ms,
        heuristic_tail,
    };
    match outcome {
        Ok((c, heuristic)) => {
            let status = if c.equal { Status::Pass } else { Status::Fail };
            base(status, c.metric, None, heuristic)
        }
        Err(e) if e.is_pole() => base(Status::Skipped, Metric::Note(String::new()), Some(e.to_string()), false),
        Err(e) => base(Status::Fail, Metric::Note(String::new()), Some(e.to_string()), false),
    }
}

fn q_of(binding: &Args) -> Result<&Rational> {
    binding.r("q")
}

fn setting_for(mode: VerifyMode, order: i64) -> check::Setting {
    match mode {
        VerifyMode::Exact => check::Setting::Exact,
        VerifyMode::Formal => check::Setting::Series { order },
        VerifyMode::Analytic => check::Setting::Analytic,
    }
}

fn is_heuristic(c: &Comparison) -> bool {
    matches!(c.metric, Metric::Bounded { .. })
}

/// Compares all forms of `identity` at `binding` in the identity's own mode.
/// `binding` carries `q` for point modes and `N` for finite identities.
fn evaluate(identity: &Identity, binding: &Args, order: i64) -> Result<(Comparison, bool)> {
    let setting = setting_for(identity.mode, order);
    let q = match identity.mode {
        VerifyMode::Formal => None,
        _ => Some(q_of(binding)?),
    };
    let c = check::compare_forms(&setting, q, |mode| check::all_forms(identity, binding, mode))?;
    let h = is_heuristic(&c);
    Ok((c, h))
}

fn require_mode(identity: &Identity, mode: VerifyMode) -> Result<()> {
    if identity.mode != mode {
        return Err(EvalError::ModeMismatch(format!("{} is a {} identity", identity.id, identity.mode)));
    }
    Ok(())
}

/// Exact check at the binding's `q` with `N = n`.
pub fn verify_exact(identity: &Identity, binding: &Args, n: i64) -> VerificationReport {
    let started = Instant::now();
    let mut b = binding.clone();
    if identity.has_n() {
        b.set("N", Rational::from_integer(n.into()));
    }
    let outcome = require_mode(identity, VerifyMode::Exact).and_then(|_| evaluate(identity, &b, 0));
    report(identity.id, identity.mode, &b, None, started, outcome)
}

/// Coefficient comparison through `q^order`.
pub fn verify_formal(identity: &Identity, binding: &Args, order: i64) -> VerificationReport {
    let started = Instant::now();
    let outcome = require_mode(identity, VerifyMode::Formal).and_then(|_| evaluate(identity, binding, order));
    report(identity.id, identity.mode, binding, Some(order), started, outcome)
}

/// Point comparison with tail bounds at the binding's `q`.
pub fn verify_analytic(identity: &Identity, binding: &Args) -> VerificationReport {
    let started = Instant::now();
    let outcome = require_mode(identity, VerifyMode::Analytic).and_then(|_| evaluate(identity, binding, 0));
    report(identity.id, identity.mode, binding, None, started, outcome)
}

/// Checks an identity in its own mode; `N` and `q` are read from `binding`.
pub fn verify(identity: &Identity, binding: &Args, order: i64) -> VerificationReport {
    let started = Instant::now();
    let order_field = (identity.mode == VerifyMode::Formal).then_some(order);
    report(identity.id, identity.mode, binding, order_field, started, evaluate(identity, binding, order))
}

/// Draws a binding for cell `(index, n)` and verifies it, redrawing while the
/// binding hits a pole or a guard.
pub fn sample_and_verify(identity: &Identity, config: &SampleConfig, index: u64, n: i64, order: i64) -> VerificationReport {
    let started = Instant::now();
    let mut sampler = Sampler::new(identity, config, index, n);
    let point = identity.mode != VerifyMode::Formal;
    let mut last = Args::new();
    for _ in 0..=MAX_REJECTIONS {
        let b = if point { sampler.point_binding(n, &[]) } else { sampler.binding(n, &[]) };
        match evaluate(identity, &b, order) {
            Err(e) if e.is_pole() => last = b,
            outcome => {
                let order_field = (!point).then_some(order);
                return report(identity.id, identity.mode, &b, order_field, started, outcome);
            }
        }
    }
    let err = EvalError::SamplingExhausted { id: identity.id.to_string(), attempts: MAX_REJECTIONS };
    let mut r = report(identity.id, identity.mode, &last, None, started, Err(err));
    r.status = Status::Fail;
    r
}

/// Returns the binding [`sample_and_verify`] would check: the first draw of
/// the cell that clears every guard and pole.
pub fn sample_binding(identity: &Identity, config: &SampleConfig, index: u64, n: i64, order: i64) -> Result<Args> {
    let mut sampler = Sampler::new(identity, config, index, n);
    let point = identity.mode != VerifyMode::Formal;
    for _ in 0..=MAX_REJECTIONS {
        let b = if point { sampler.point_binding(n, &[]) } else { sampler.binding(n, &[]) };
        match evaluate(identity, &b, order) {
            Err(e) if e.is_pole() => {}
            _ => return Ok(b),
        }
    }
    Err(EvalError::SamplingExhausted { id: identity.id.to_string(), attempts: MAX_REJECTIONS })
}

/// The mode a relation between two identities is checked in: as series when
/// both sides are formal, exactly when both are exact, at a point with tail
/// bounds otherwise.
pub fn relation_mode(a: &Identity, b: &Identity) -> VerifyMode {
    match (a.mode, b.mode) {
        (VerifyMode::Formal, VerifyMode::Formal) => VerifyMode::Formal,
        (VerifyMode::Exact, VerifyMode::Exact) => VerifyMode::Exact,
        _ => VerifyMode::Analytic,
    }
}

fn specialization_values(
    general: &Identity,
    special: &Identity,
    bind: &[(&str, Rational)],
    factor: Factor,
    binding: &Args,
    mode: &Mode,
) -> Result<Vec<Val>> {
    let mut composed = binding.clone();
    for (k, v) in bind {
        composed.set(k, v.clone());
    }
    let mut vals = check::all_forms(general, &composed, mode)?;
    let f = factor.eval(&Ctx::new(mode.clone()), binding)?;
    for v in check::all_forms(special, binding, mode)? {
        vals.push(&f * &v);
    }
    Ok(vals)
}

/// Checks that `general` with `bind` substituted equals `factor` times
/// `special`, form by form, at `binding`.
pub fn verify_specialization(
    general: &Identity,
    special: &Identity,
    bind: &[(&str, Rational)],
    factor: Factor,
    binding: &Args,
    order: i64,
) -> VerificationReport {
    let started = Instant::now();
    let mode = relation_mode(general, special);
    let id = format!("{}->{}", general.id, special.id);
    let outcome = (|| {
        let q = if mode == VerifyMode::Formal { None } else { Some(q_of(binding)?) };
        let c = check::compare_forms(&setting_for(mode, order), q, |m| {
            specialization_values(general, special, bind, factor, binding, m)
        })?;
        let h = is_heuristic(&c);
        Ok((c, h))
    })();
    let mut b = binding.clone();
    for (k, v) in bind {
        b.set(k, v.clone());
    }
    report(&id, mode, &b, (mode == VerifyMode::Formal).then_some(order), started, outcome)
}

/// Checks a corrected entry: the registered forms agree while the printed
/// form disagrees at the same binding.
pub fn verify_correction(identity: &Identity, correction: &Correction, binding: &Args, order: i64) -> VerificationReport {
    let started = Instant::now();
    let setting = setting_for(identity.mode, order);
    let q = if identity.mode == VerifyMode::Formal { None } else { binding.get("q") };
    let outcome = (|| {
        let fixed = check::compare_forms(&setting, q, |m| check::all_forms(identity, binding, m))?;
        let literal = check::compare_forms(&setting, q, |m| {
            let mut vals = check::all_forms(identity, binding, m)?;
            vals[correction.form] = (correction.literal)(&Ctx::new(m.clone()), binding)?;
            Ok(vals)
        })?;
        let metric = Metric::Note(format!("corrected={} literal={}", fixed.metric, literal.metric));
        Ok((Comparison { equal: fixed.equal && !literal.equal, metric }, false))
    })();
    report(
        &format!("{}:correction", identity.id),
        identity.mode,
        binding,
        (identity.mode == VerifyMode::Formal).then_some(order),
        started,
        outcome,
    )
}

/// Compares the first form of a finite identity at `N = n`, evaluated
/// exactly, with the first form of its infinite counterpart at the same
/// point. Passes when the gap is within the tail bound plus
/// [`COHERENCE_SLACK`].
pub fn verify_coherence(finite: &Identity, infinite: &Identity, binding: &Args, n: i64) -> VerificationReport {
    let started = Instant::now();
    let mut b = binding.clone();
    b.set("N", Rational::from_integer(n.into()));
    let outcome = (|| {
        let q = q_of(&b)?.clone();
        let fin = finite.evaluate_form(0, &b, Mode::Exact { q: q.clone() })?;
        let inf = infinite.evaluate_form(0, &b, Mode::Analytic { q, tol: DEFAULT_TOL })?;
        let (fb, ib) = (fin.as_ball().cloned(), inf.as_ball().cloned());
        let (fb, ib) = fb.zip(ib).ok_or_else(|| EvalError::InvalidArgument("expected point values".into()))?;
        let d = fb.mid() - ib.mid();
        let delta = if num_traits::Zero::is_zero(&d) { 0.0 } else { abs_upper(&num_traits::Signed::abs(&d)) };
        let tail = inflate(fb.rad() + ib.rad());
        let equal = delta <= tail + COHERENCE_SLACK;
        Ok((Comparison { equal, metric: Metric::Bounded { delta, tail } }, !ib.is_exact()))
    })();
    report(&format!("{}~{}", finite.id, infinite.id), VerifyMode::Analytic, &b, None, started, outcome)
}

/// The fixed point used by coherence checks.
pub fn coherence_q() -> Rational {
    frac(1, 5)
}
