//! Comparing the forms of an identity in one evaluation mode.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{EvalError, Result};
use crate::eval::{Args, Mode, Val, DEFAULT_TOL};
use crate::rational::{abs_upper, inflate, render, Rational};
use crate::registry::Identity;

/// Largest tail bound an analytic comparison accepts.
pub const ANALYTIC_BOUND: f64 = 1e-20;
/// Extra series order tried, in turn, when a window comes out short.
pub const SLACKS: [i64; 5] = [0, 10, 20, 40, 80];
const TOLS: [f64; 3] = [DEFAULT_TOL, 1e-30, 1e-40];

/// Size of the discrepancy between forms.
#[derive(Clone, Debug, PartialEq)]
pub enum Metric {
    /// Largest exact difference, of point values or of coefficients.
    Exact(Rational),
    /// Largest `|difference|` of ball midpoints and the matching sum of radii.
    Bounded { delta: f64, tail: f64 },
    Note(String),
}

impl Metric {
    pub fn is_zero(&self) -> bool {
        matches!(self, Metric::Exact(d) if d.is_zero())
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Exact(d) => f.write_str(&render(d)),
            Metric::Bounded { delta, tail } => write!(f, "|d|={delta:.3e} tail={tail:.3e}"),
            Metric::Note(s) => f.write_str(s),
        }
    }
}

/// Result of comparing a list of values.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub equal: bool,
    pub metric: Metric,
}

/// Compares `vals[0]` with every other value. Series are compared on
/// `[min_exp, order]`, exact points for equality, and inexact points up to
/// the sum of their radii, which must itself be at most [`ANALYTIC_BOUND`].
///
/// Returns `None` when a series window or a radius is too short to decide.
pub fn compare(vals: &[Val], order: Option<i64>) -> Option<Comparison> {
    let (head, rest) = vals.split_first()?;
    match head {
        Val::Series(s0) => {
            let k = order?;
            let mut worst = Rational::zero();
            for v in rest {
                let s = v.as_series()?;
                let d = s0 - s;
                if d.valid_through() < k {
                    return None;
                }
                for (e, c) in d.terms() {
                    if e <= k && c.abs() > worst {
                        worst = c.abs();
                    }
                }
            }
            Some(Comparison { equal: worst.is_zero(), metric: Metric::Exact(worst) })
        }
        Val::Point(b0) => {
            let balls: Vec<_> = rest.iter().map(|v| v.as_ball()).collect::<Option<_>>()?;
            if b0.is_exact() && balls.iter().all(|b| b.is_exact()) {
                let worst = balls.iter().map(|b| (b0.mid() - b.mid()).abs()).max().unwrap_or_default();
                return Some(Comparison { equal: worst.is_zero(), metric: Metric::Exact(worst) });
            }
            let (mut delta, mut tail) = (0.0f64, 0.0f64);
            for b in balls {
                let d = (b0.mid() - b.mid()).abs();
                let d = if d.is_zero() { 0.0 } else { abs_upper(&d) };
                let t = inflate(b0.rad() + b.rad());
                if t > ANALYTIC_BOUND {
                    return None;
                }
                delta = delta.max(d);
                tail = tail.max(t);
                if d > t {
                    return Some(Comparison { equal: false, metric: Metric::Bounded { delta, tail } });
                }
            }
            Some(Comparison { equal: true, metric: Metric::Bounded { delta, tail } })
        }
    }
}

/// Evaluation settings for one comparison attempt.
#[derive(Clone, Debug)]
pub enum Setting {
    Series { order: i64 },
    Exact,
    Analytic,
}

/// Evaluates the forms `(identity, form index, args, factor)` and compares
/// them, widening the series window or tightening the tail tolerance until
/// the comparison is decidable.
pub fn compare_forms<F>(setting: &Setting, q: Option<&Rational>, mut eval: F) -> Result<Comparison>
where
    F: FnMut(&Mode) -> Result<Vec<Val>>,
{
    match setting {
        Setting::Series { order } => {
            for slack in SLACKS {
                let vals = eval(&Mode::Series { order: order + slack })?;
                if let Some(c) = compare(&vals, Some(*order)) {
                    return Ok(c);
                }
            }
            Ok(Comparison { equal: false, metric: Metric::Note(format!("series window short of q^{order}")) })
        }
        Setting::Exact => {
            let q = q.ok_or_else(|| EvalError::UnboundParameter("q".into()))?;
            let vals = eval(&Mode::Exact { q: q.clone() })?;
            compare(&vals, None).ok_or_else(|| EvalError::InvalidArgument("inexact value in exact mode".into()))
        }
        Setting::Analytic => {
            let q = q.ok_or_else(|| EvalError::UnboundParameter("q".into()))?;
            let mut last = None;
            for tol in TOLS {
                let vals = eval(&Mode::Analytic { q: q.clone(), tol })?;
                if let Some(c) = compare(&vals, None) {
                    return Ok(c);
                }
                last = Some(vals);
            }
            let tail = last
                .iter()
                .flatten()
                .filter_map(|v| v.as_ball().map(|b| b.rad()))
                .fold(0.0, f64::max);
            Ok(Comparison { equal: false, metric: Metric::Note(format!("tail bound {tail:.3e} above {ANALYTIC_BOUND:e}")) })
        }
    }
}

/// All forms of `identity` at `args` in `mode`.
pub fn all_forms(identity: &Identity, args: &Args, mode: &Mode) -> Result<Vec<Val>> {
    (0..identity.forms.len()).map(|i| identity.evaluate_form(i, args, mode.clone())).collect()
}
