//! The identity registry.
//!
//! Each [`Identity`] holds two or more forms that must evaluate to the same
//! quantity, the parameters they read, and the mode in which the equality is
//! checked. Forms are plain functions of an evaluation context and a binding,
//! so one form serves series, exact-point and analytic evaluation alike.

mod base_two;
mod blocks;
mod classical;
mod entries;
mod generalized;
pub mod lineage;
mod phi_sums;
mod ramanujan;

use std::fmt;

use crate::error::{EvalError, Result};
use crate::eval::{Args, Ctx, Mode, Val};
use crate::rational::{frac, Rational};

pub use blocks::tri;

/// How an identity is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerifyMode {
    /// Finite sums and products at random rational points, zero tolerance.
    Exact,
    /// Coefficient-wise comparison of `q`-expansions.
    Formal,
    /// Partial sums at a point with tail bounds.
    Analytic,
}

impl VerifyMode {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyMode::Exact => "exact",
            VerifyMode::Formal => "formal",
            VerifyMode::Analytic => "analytic",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "exact" => Some(VerifyMode::Exact),
            "formal" => Some(VerifyMode::Formal),
            "analytic" => Some(VerifyMode::Analytic),
            _ => None,
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a parameter is sampled.
#[derive(Clone, Copy, Debug)]
pub enum ParamKind {
    /// Nonzero rational with `|p| <= bound`.
    Free,
    /// `t * by(binding so far)` with `0 < |t| <= 1/2`; used for hypotheses
    /// such as `|c/(ab)| < 1`. Scaled parameters are drawn after free ones.
    Scaled { by: fn(&Args) -> Rational },
    /// The positive integer `N` of a finite identity.
    N,
    /// An integer in `0..=N`.
    Index,
    /// An integer exponent in `lo..=hi`.
    Exponent { lo: i64, hi: i64 },
}

#[derive(Clone, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    /// Magnitude cap used when sampling free values.
    pub bound: Rational,
}

pub type FormFn = fn(&Ctx, &Args) -> Result<Val>;

#[derive(Clone)]
pub struct Form {
    pub name: &'static str,
    pub eval: FormFn,
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Form").field("name", &self.name).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub id: &'static str,
    /// Short human-readable name.
    pub title: &'static str,
    /// The identity in plain-text notation.
    pub statement: &'static str,
    pub mode: VerifyMode,
    pub params: Vec<ParamSpec>,
    pub forms: Vec<Form>,
    /// Extra admissibility test on a sampled binding.
    pub guard: Option<fn(&Args) -> bool>,
    /// Deviations from the commonly printed statement, with the check that
    /// justifies them.
    pub corrections: Vec<&'static str>,
}

/// Default magnitude cap for free parameters.
pub fn default_bound() -> Rational {
    frac(1, 3)
}

impl Identity {
    pub fn new(id: &'static str, mode: VerifyMode, title: &'static str, statement: &'static str) -> Self {
        Identity {
            id,
            title,
            statement,
            mode,
            params: Vec::new(),
            forms: Vec::new(),
            guard: None,
            corrections: Vec::new(),
        }
    }

    /// Adds free rational parameters with the default bound.
    pub fn free(mut self, names: &[&'static str]) -> Self {
        for name in names {
            self.params.push(ParamSpec { name, kind: ParamKind::Free, bound: default_bound() });
        }
        self
    }

    pub fn param(mut self, name: &'static str, kind: ParamKind) -> Self {
        self.params.push(ParamSpec { name, kind, bound: default_bound() });
        self
    }

    /// Adds the positive integer parameter `N`.
    pub fn finite(self) -> Self {
        self.param("N", ParamKind::N)
    }

    pub fn form(mut self, name: &'static str, eval: FormFn) -> Self {
        self.forms.push(Form { name, eval });
        self
    }

    pub fn guard(mut self, guard: fn(&Args) -> bool) -> Self {
        self.guard = Some(guard);
        self
    }

    pub fn correction(mut self, note: &'static str) -> Self {
        self.corrections.push(note);
        self
    }

    pub fn has_n(&self) -> bool {
        self.params.iter().any(|p| matches!(p.kind, ParamKind::N))
    }

    pub fn param_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.params.iter().map(|p| p.name)
    }

    /// Evaluates one form in the given mode.
    pub fn evaluate_form(&self, form: usize, args: &Args, mode: Mode) -> Result<Val> {
        let f = self
            .forms
            .get(form)
            .ok_or_else(|| EvalError::InvalidArgument(format!("{} has no form {form}", self.id)))?;
        if self.mode == VerifyMode::Exact && matches!(mode, Mode::Series { .. }) {
            return Err(EvalError::ModeMismatch(format!("{} is checked at points, not as a series", self.id)));
        }
        for p in &self.params {
            if args.get(p.name).is_none() {
                return Err(EvalError::UnboundParameter(p.name.to_string()));
            }
        }
        if let Some(guard) = self.guard {
            if !guard(args) {
                return Err(EvalError::PoleGuardViolation(format!("{} rejects this binding", self.id)));
            }
        }
        (f.eval)(&Ctx::new(mode), args)
    }
}

/// Every registered identity, in a stable order.
pub fn registry() -> Vec<Identity> {
    let mut all = Vec::new();
    all.extend(ramanujan::identities());
    all.extend(generalized::identities());
    all.extend(classical::identities());
    all.extend(entries::identities());
    all.extend(base_two::identities());
    all.extend(phi_sums::identities());
    all
}

/// Looks up an identity by id, including the auxiliary special cases used by
/// specialization checks.
pub fn find(id: &str) -> Option<Identity> {
    registry().into_iter().chain(lineage::auxiliary()).find(|i| i.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn inventory_is_complete() {
        let all = registry();
        let ids: HashSet<&str> = all.iter().map(|i| i.id).collect();
        assert_eq!(ids.len(), all.len(), "duplicate ids");
        assert_eq!(all.len(), 57);
        let count = |m| all.iter().filter(|i| i.mode == m).count();
        assert_eq!(count(VerifyMode::Formal), 16);
        assert_eq!(count(VerifyMode::Analytic), 14);
        assert_eq!(count(VerifyMode::Exact), 27);
        for i in &all {
            assert!(i.forms.len() >= 2, "{} has fewer than two forms", i.id);
        }
    }

    #[test]
    fn corrected_entries_carry_notes() {
        for id in ["DEMS-COR", "FIN-E4", "DP-PHI21", "PHI32-III12"] {
            let i = find(id).unwrap();
            assert!(!i.corrections.is_empty(), "{id} lacks a correction note");
        }
        assert!(find("FIN-E4").unwrap().corrections[0].contains("(aq)^n read as (zq)^n"));
    }
}
