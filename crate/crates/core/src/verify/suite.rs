//! Running many checks, in parallel, with a deterministic result order.

use std::time::Instant;

use rayon::prelude::*;

use super::*;
use crate::registry::lineage::{coherence_pairs, corrections, specializations, Specialization};
use crate::registry::{find, registry};

/// What a suite run covers.
#[derive(Clone, Debug)]
pub struct Plan {
    pub seed: u64,
    /// Series order for formal checks.
    pub order: i64,
    /// Finite identities run over `N = 1..=n_max`.
    pub n_max: i64,
    /// Bindings per `N` for exact identities.
    pub exact_samples: usize,
    pub formal_samples: usize,
    pub analytic_samples: usize,
    /// Modes to run; empty means all.
    pub modes: Vec<VerifyMode>,
    /// Identity ids to run; empty means all.
    pub ids: Vec<String>,
    /// Worker threads; `None` uses the rayon default.
    pub workers: Option<usize>,
    pub q_denominator_bound: u64,
    pub param_denominator_bound: u64,
}

impl Default for Plan {
    fn default() -> Self {
        Plan {
            seed: 1,
            order: 40,
            n_max: 6,
            exact_samples: 20,
            formal_samples: 10,
            analytic_samples: 10,
            modes: Vec::new(),
            ids: Vec::new(),
            workers: None,
            q_denominator_bound: 12,
            param_denominator_bound: 12,
        }
    }
}

impl Plan {
    fn config(&self) -> SampleConfig {
        SampleConfig {
            seed: self.seed,
            count: self.formal_samples,
            q_denominator_bound: self.q_denominator_bound,
            param_denominator_bound: self.param_denominator_bound,
        }
    }

    fn selects_mode(&self, m: VerifyMode) -> bool {
        self.modes.is_empty() || self.modes.contains(&m)
    }

    fn selects_id(&self, id: &str) -> bool {
        self.ids.is_empty() || self.ids.iter().any(|i| i == id)
    }

    fn samples(&self, m: VerifyMode) -> usize {
        match m {
            VerifyMode::Exact => self.exact_samples,
            VerifyMode::Formal => self.formal_samples,
            VerifyMode::Analytic => self.analytic_samples,
        }
    }

    fn run<T: Sync, F>(&self, items: &[T], f: F) -> Vec<VerificationReport>
    where
        F: Fn(&T) -> VerificationReport + Sync,
    {
        let go = || items.par_iter().map(&f).collect();
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(go),
            None => go(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.fail == 0 && self.skipped == 0
    }
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Skipped => s.skipped += 1,
        }
    }
    s
}

/// Checks every selected registry identity over its sampled bindings.
/// Reports come out sorted by id, then `N`, then sample index.
pub fn run_suite(plan: &Plan) -> Vec<VerificationReport> {
    run_identities(plan, &registry())
}

/// Like [`run_suite`] over an explicit list of identities.
pub fn run_identities(plan: &Plan, identities: &[Identity]) -> Vec<VerificationReport> {
    let mut selected: Vec<&Identity> =
        identities.iter().filter(|i| plan.selects_mode(i.mode) && plan.selects_id(i.id)).collect();
    selected.sort_by_key(|i| i.id);
    let mut items = Vec::new();
    for id in selected {
        let count = plan.samples(id.mode) as u64;
        if id.mode == VerifyMode::Exact && id.has_n() {
            for n in 1..=plan.n_max {
                items.extend((0..count).map(|k| (id, n, k)));
            }
        } else {
            for k in 0..count {
                let n = if id.has_n() { 1 + (k as i64) % plan.n_max.max(1) } else { 0 };
                items.push((id, n, k));
            }
        }
    }
    let config = plan.config();
    plan.run(&items, |(id, n, k)| sample_and_verify(id, &config, *k, *n, plan.order))
}

enum LineageItem {
    Special(Specialization, i64, u64),
    Correct(Correction, u64),
    Coherent(&'static str, &'static str, u64),
}

/// Largest `N` used by specialization checks.
pub const SPECIALIZATION_N_MAX: i64 = 4;
/// `N` used by coherence checks.
pub const COHERENCE_N: i64 = 40;

/// Specialization, correction and coherence checks touching the selected
/// ids. Each kind runs `formal_samples` bindings.
pub fn run_lineage(plan: &Plan) -> Vec<VerificationReport> {
    let count = plan.formal_samples as u64;
    let mut items = Vec::new();
    for s in specializations() {
        if !(plan.selects_id(s.from) || plan.selects_id(s.to)) {
            continue;
        }
        let (g, t) = (find(s.from).expect("registered"), find(s.to).expect("registered"));
        let finite = g.has_n() && relation_mode(&g, &t) == VerifyMode::Exact;
        for n in if finite { 1..=SPECIALIZATION_N_MAX.min(plan.n_max.max(1)) } else { 0..=0 } {
            items.extend((0..count).map(|k| LineageItem::Special(s.clone(), n, k)));
        }
    }
    for c in corrections() {
        if plan.selects_id(c.id) {
            items.extend((0..count).map(|k| LineageItem::Correct(c.clone(), k)));
        }
    }
    for (f, i) in coherence_pairs() {
        if plan.selects_id(f) || plan.selects_id(i) {
            items.extend((0..count.min(3)).map(|k| LineageItem::Coherent(f, i, k)));
        }
    }
    let config = plan.config();
    plan.run(&items, |item| match item {
        LineageItem::Special(s, n, k) => specialization_cell(s, &config, *n, *k, plan.order),
        LineageItem::Correct(c, k) => correction_cell(c, &config, *k, plan.order),
        LineageItem::Coherent(f, i, k) => coherence_cell(f, i, &config, *k),
    })
}

fn exhausted(id: &str, mode: VerifyMode) -> VerificationReport {
    let err = EvalError::SamplingExhausted { id: id.to_string(), attempts: MAX_REJECTIONS };
    let mut r = report(id, mode, &Args::new(), None, Instant::now(), Err(err));
    r.status = Status::Fail;
    r
}

/// Runs `check` on successive draws until one clears every pole.
fn resample<F, C>(id: &str, mode: VerifyMode, mut draw: F, mut check: C) -> VerificationReport
where
    F: FnMut() -> Args,
    C: FnMut(&Args) -> VerificationReport,
{
    for _ in 0..=MAX_REJECTIONS {
        let r = check(&draw());
        if r.status != Status::Skipped {
            return r;
        }
    }
    exhausted(id, mode)
}

fn specialization_cell(s: &Specialization, config: &SampleConfig, n: i64, k: u64, order: i64) -> VerificationReport {
    let (g, t) = (find(s.from).expect("registered"), find(s.to).expect("registered"));
    let mode = relation_mode(&g, &t);
    let bind: Vec<(&str, Rational)> = s.bind.iter().map(|(a, b)| (*a, b.clone())).collect();
    let mut sampler = Sampler::new(&g, config, k, n);
    let id = format!("{}->{}", s.from, s.to);
    resample(
        &id,
        mode,
        || {
            let b = if mode == VerifyMode::Formal { sampler.binding(n, &bind) } else { sampler.point_binding(n, &bind) };
            b
        },
        |b| verify_specialization(&g, &t, &bind, s.factor, b, order),
    )
}

fn correction_cell(c: &Correction, config: &SampleConfig, k: u64, order: i64) -> VerificationReport {
    let id = find(c.id).expect("registered");
    let mut sampler = Sampler::new(&id, config, k, 1);
    let third = frac(1, 3);
    resample(
        c.id,
        id.mode,
        || loop {
            let mut b = if id.mode == VerifyMode::Formal { sampler.binding(1, &[]) } else { sampler.point_binding(1, &[]) };
            for name in c.extra {
                let v = sampler.bounded(&third);
                b.set(name, v);
            }
            if generic(&b) {
                return b;
            }
        },
        |b| verify_correction(&id, c, b, order),
    )
}

/// Printed and corrected forms agree on special loci such as `b = e`, so
/// correction checks use bindings whose parameters are pairwise distinct.
fn generic(b: &Args) -> bool {
    let vals: Vec<&Rational> = b.iter().filter(|(k, _)| *k != "N" && *k != "q").map(|(_, v)| v).collect();
    vals.iter().enumerate().all(|(i, x)| vals[i + 1..].iter().all(|y| x != y))
}

fn coherence_cell(finite: &str, infinite: &str, config: &SampleConfig, k: u64) -> VerificationReport {
    let (f, i) = (find(finite).expect("registered"), find(infinite).expect("registered"));
    let q = coherence_q();
    let mut inf_sampler = Sampler::new(&i, config, k, 0);
    let mut fin_sampler = Sampler::new(&f, config, k, COHERENCE_N);
    resample(
        &format!("{finite}~{infinite}"),
        VerifyMode::Analytic,
        || {
            let base = inf_sampler.point_binding(0, &[("q", q.clone())]);
            let fixed: Vec<(&str, Rational)> = base.iter().map(|(a, b)| (a, b.clone())).collect();
            let merged = fin_sampler.point_binding(COHERENCE_N, &fixed);
            merged
        },
        |b| verify_coherence(&f, &i, b, COHERENCE_N),
    )
}
