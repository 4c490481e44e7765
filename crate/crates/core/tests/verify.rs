use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use qsv_core::eval::Mode;
use qsv_core::kernel::{poch_series, PochLength};
use qsv_core::rational::{abs_upper, frac, int, pow};
use qsv_core::registry::lineage::{specializations, Factor};
use qsv_core::registry::{find, registry, VerifyMode};
use qsv_core::verify::*;
use qsv_core::{Args, EvalError, LaurentSeries, Monomial, Rational, Val};

fn identity(id: &str) -> qsv_core::registry::Identity {
    find(id).unwrap_or_else(|| panic!("{id} is registered"))
}

fn series(id: &str, form: usize, args: &Args, order: i64) -> LaurentSeries {
    let v = identity(id).evaluate_form(form, args, Mode::Series { order }).unwrap();
    v.as_series().unwrap().clone()
}

fn exact(id: &str, form: usize, args: &Args, q: &Rational) -> Rational {
    let v = identity(id).evaluate_form(form, args, Mode::Exact { q: q.clone() }).unwrap();
    let b = v.as_ball().unwrap();
    assert!(b.is_exact());
    b.mid().clone()
}

fn pass(r: &VerificationReport) {
    assert!(r.passed(), "{} {:?}: {}", r.id, r.status, r.metric_text());
}

#[test]
fn registry_shape() {
    let all = registry();
    assert_eq!(all.len(), 57);
    let ids: BTreeSet<_> = all.iter().map(|i| i.id).collect();
    assert_eq!(ids.len(), all.len());
    assert!(all.iter().all(|i| i.forms.len() >= 2));
    let count = |m| all.iter().filter(|i| i.mode == m).count();
    assert_eq!((count(VerifyMode::Formal), count(VerifyMode::Analytic), count(VerifyMode::Exact)), (16, 14, 27));
    assert!(identity("FIN-E4").corrections.iter().any(|c| c.contains("(aq)^n read as (zq)^n")));
    assert!(identity("DEMS-COR").corrections.iter().any(|c| c.contains("(zq)_{n-1} read as (zq)_n")));
}

#[test]
fn kluyver_left_side_counts_divisors() {
    let lhs = series("KLUYVER", 0, &Args::new(), 40);
    for m in 1..=40i64 {
        assert_eq!(lhs.coeff(m), int((1..=m).filter(|d| m % d == 0).count() as i64), "q^{m}");
    }
    assert_eq!(series("KLUYVER", 1, &Args::new(), 6).to_string(), "q + 2*q^2 + 2*q^3 + 3*q^4 + 2*q^5 + 4*q^6 + O(q^7)");
    pass(&verify_formal(&identity("KLUYVER"), &Args::new(), 40));
}

#[test]
fn entry_one_at_a_one_b_zero_counts_distinct_parts() {
    let k = 20;
    let b = Args::new().with("a", int(1)).with("b", int(0));
    let lhs = series("E1", 0, &b, k);
    let mut distinct = vec![0i64; k as usize + 1];
    distinct[0] = 1;
    for part in 1..=k as usize {
        for total in (part..=k as usize).rev() {
            distinct[total] += distinct[total - part];
        }
    }
    let expected: Vec<Rational> = distinct.iter().map(|c| int(*c)).collect();
    assert_eq!(lhs.window(0, k), expected);
    assert_eq!(series("E1", 0, &b, 5).to_string(), "1 + q + q^2 + 2*q^3 + 2*q^4 + 3*q^5 + O(q^6)");
    pass(&verify_formal(&identity("E1"), &b, k));
}

#[test]
fn andrews_identity_matches_direct_sums() {
    let (z, c, k) = (frac(1, 2), frac(1, 3), 30);
    let b = Args::new().with("z", z.clone()).with("c", c.clone());
    let poch = |x: &Rational, n: u32| poch_series(&Monomial::new(x.clone(), 1), PochLength::Finite(n), k).unwrap();
    let mut lhs = LaurentSeries::zero(k);
    let mut rhs = LaurentSeries::zero(k);
    for n in 1..=k as u32 {
        let n64 = n as i64;
        let num = LaurentSeries::monomial(pow(&(&z * &c), n64), n64 * n64, k);
        lhs = lhs.add(&num.div(&poch(&z, n).mul(&poch(&c, n))).unwrap());
        let term = LaurentSeries::monomial(&z * pow(&c, n64), n64, k);
        rhs = rhs.add(&term.div(&poch(&z, n)).unwrap());
    }
    assert_eq!(series("ANDREWS-QS", 0, &b, k).window(0, k), lhs.window(0, k));
    assert_eq!(series("ANDREWS-QS", 1, &b, k).window(0, k), rhs.window(0, k));
    pass(&verify_formal(&identity("ANDREWS-QS"), &b, k));
}

#[test]
fn garvan_generalization_at_d_one() {
    let g = identity("GARVAN-GEN");
    let bind = [("d", int(1))];
    let r = verify_specialization(&g, &identity("GARVAN"), &bind, Factor::One, &Args::new().with("z", frac(2, 7)), 30);
    pass(&r);
    assert_eq!(r.id, "GARVAN-GEN->GARVAN");
}

#[test]
fn entry_three_at_a_point() {
    let (a, b, q) = (frac(1, 3), frac(1, 4), frac(1, 5));
    let binding = Args::new().with("a", a.clone()).with("b", b.clone()).with("q", q.clone());
    let r = verify_analytic(&identity("E3"), &binding);
    pass(&r);
    let Metric::Bounded { delta, tail } = r.metric else { panic!("{:?}", r.metric) };
    assert!(delta <= 1e-20 && tail <= 1e-20, "{delta} {tail}");

    // Exact partial sums of both sides through 120 terms; the omitted tails
    // are below 4^-120.
    let (mut lhs, mut rhs) = (Rational::zero(), Rational::zero());
    let (mut ratio, mut qn) = (Rational::one(), Rational::one());
    for _ in 1..=120 {
        let bq = &b * &qn;
        ratio *= (Rational::one() - &bq / &a) * &a / (Rational::one() - &bq);
        qn *= &q;
        lhs += &ratio / (Rational::one() - &qn);
    }
    let mut qn = Rational::one();
    for n in 1..=120 {
        qn *= &q;
        rhs += (pow(&a, n) - pow(&b, n)) / (Rational::one() - &qn);
    }
    let point = |form| {
        let v = identity("E3").evaluate_form(form, &binding, Mode::Analytic { q: q.clone(), tol: 1e-30 }).unwrap();
        v.as_ball().unwrap().mid().clone()
    };
    assert!(abs_upper(&(point(0) - lhs)) < 1e-20);
    assert!(abs_upper(&(point(1) - rhs)) < 1e-20);
}

#[test]
fn entry_three_collapses_when_a_equals_b() {
    let binding = Args::new().with("a", frac(1, 3)).with("b", frac(1, 3)).with("q", frac(1, 5));
    let r = verify_analytic(&identity("E3"), &binding);
    pass(&r);
    assert!(matches!(r.metric, Metric::Bounded { delta, .. } if delta == 0.0), "{:?}", r.metric);
}

#[test]
fn q_gauss_at_a_point() {
    let b = Args::new().with("a", frac(1, 2)).with("b", frac(1, 3)).with("c", frac(1, 7)).with("q", frac(1, 5));
    pass(&verify_analytic(&identity("QGAUSS"), &b));
}

#[test]
fn corrected_entries_at_n_one() {
    let (z, c, e, q) = (frac(2, 7), frac(-1, 5), frac(3, 11), frac(1, 4));
    let one = Rational::one();
    let dems = Args::new().with("z", z.clone()).with("c", c.clone()).with("N", int(1));
    let expected = &z * &q * (&one - &q) / ((&one - &c * &q) * (&one - &z * &q));
    assert_eq!(exact("DEMS-COR", 0, &dems, &q), expected);
    assert_eq!(exact("DEMS-COR", 1, &dems, &q), expected);

    let fin = Args::new().with("z", z.clone()).with("e", e.clone()).with("N", int(1));
    let expected = &z * &q * &q / ((&one - &z * &q) * (&e - &q));
    assert_eq!(exact("FIN-E4", 0, &fin, &q), expected);
    assert_eq!(exact("FIN-E4", 1, &fin, &q), expected);
}

#[test]
fn finite_entry_one_at_e_zero() {
    let b = Args::new().with("a", frac(1, 3)).with("b", frac(-1, 4)).with("q", frac(2, 9)).with("N", int(2));
    let r = verify_specialization(&identity("FIN-E1"), &identity("DP-FIN-E1"), &[("e", int(0))], Factor::One, &b, 0);
    pass(&r);
}

#[test]
fn listed_specializations_hold_at_fixed_points() {
    let config = SampleConfig { seed: 7, count: 4, q_denominator_bound: 12, param_denominator_bound: 12 };
    for s in specializations().iter().filter(|s| ["THM-2-5", "GEN-E4"].contains(&s.from)) {
        let (g, t) = (identity(s.from), identity(s.to));
        let finite = g.has_n();
        for n in if finite { 1..=4 } else { 0..=0 } {
            for k in 0..4 {
                let mut sampler = Sampler::new(&g, &config, k, n);
                let fixed: Vec<(&str, Rational)> = s.bind.iter().map(|(a, b)| (*a, b.clone())).collect();
                let binding = if finite { sampler.point_binding(n, &fixed) } else { sampler.binding(n, &fixed) };
                let r = verify_specialization(&g, &t, &fixed, s.factor, &binding, 30);
                if r.status != Status::Skipped {
                    pass(&r);
                }
            }
        }
    }
}

#[test]
fn guard_violation_is_skipped() {
    let b = Args::new().with("z", frac(1, 4)).with("d", frac(1, 4));
    let r = verify_formal(&identity("GARVAN-GEN"), &b, 20);
    assert_eq!(r.status, Status::Skipped);
    assert!(r.detail.is_some());
}

#[test]
fn identity_against_itself_passes() {
    let g = identity("GARVAN");
    pass(&verify_specialization(&g, &g, &[], Factor::One, &Args::new().with("z", frac(1, 3)), 25));
}

#[test]
fn exact_identities_reject_series_mode() {
    let b = Args::new().with("z", frac(1, 3)).with("c", frac(1, 5)).with("N", int(2));
    let err = identity("DEMS-COR").evaluate_form(0, &b, Mode::Series { order: 10 }).unwrap_err();
    assert!(matches!(err, EvalError::ModeMismatch(_)));
    let unbound = identity("DEMS-COR").evaluate_form(0, &Args::new(), Mode::Exact { q: frac(1, 3) }).unwrap_err();
    assert!(matches!(unbound, EvalError::UnboundParameter(_)));
}

#[test]
fn sampling_is_deterministic_and_admissible() {
    let config = SampleConfig { seed: 11, count: 20, q_denominator_bound: 12, param_denominator_bound: 12 };
    let g = identity("GEN-E1");
    for k in 0..20 {
        let a = sample_binding(&g, &config, k, 0, 20).unwrap();
        assert_eq!(a, sample_binding(&g, &config, k, 0, 20).unwrap());
        let ae = a.r("a").unwrap() * a.r("e").unwrap();
        assert!(abs_upper(&ae) < 1.0);
    }
    let e1 = identity("E1");
    for k in 0..20 {
        let b = sample_binding(&e1, &config, k, 0, 20).unwrap();
        let (bv, q) = (b.r("b").unwrap().clone(), frac(1, 3));
        assert!(bv.abs() <= frac(1, 3));
        for n in 1..=10 {
            assert_ne!(bv, Rational::one() / pow(&q, n));
        }
    }
}

#[test]
fn multi_form_chains_agree_pairwise() {
    let config = SampleConfig { seed: 3, count: 20, q_denominator_bound: 12, param_denominator_bound: 12 };
    for id in ["COR-6-3", "COR-6-5"] {
        let g = identity(id);
        for k in 0..20 {
            let n = 1 + (k as i64) % 6;
            let b = sample_binding(&g, &config, k, n, 0).unwrap();
            let q = b.r("q").unwrap().clone();
            let vals: Vec<Rational> = (0..g.forms.len())
                .map(|f| match g.evaluate_form(f, &b, Mode::Exact { q: q.clone() }).unwrap() {
                    Val::Point(p) => p.mid().clone(),
                    Val::Series(_) => unreachable!(),
                })
                .collect();
            for i in 0..vals.len() {
                for j in i + 1..vals.len() {
                    assert_eq!(vals[i], vals[j], "{id} forms {i} and {j}");
                }
            }
        }
    }
}

#[test]
fn pass_never_flips_across_seeds_and_orders() {
    let ids = ["KLUYVER", "GARVAN", "E4", "ANDREWS-QS", "THM-2-5", "FIN-E2", "LEM-6-1", "E3", "QGAUSS"];
    for seed in [1, 2, 3] {
        for order in [20, 40] {
            let plan = Plan {
                seed,
                order,
                n_max: 3,
                exact_samples: 2,
                formal_samples: 2,
                analytic_samples: 2,
                ids: ids.iter().map(|s| s.to_string()).collect(),
                ..Plan::default()
            };
            let reports = run_suite(&plan);
            assert!(!reports.is_empty());
            for r in &reports {
                pass(r);
            }
        }
    }
}

#[test]
fn report_invariants() {
    let plan = Plan { n_max: 2, exact_samples: 2, formal_samples: 2, analytic_samples: 2, order: 20, ..Plan::default() };
    for r in run_suite(&plan) {
        pass(&r);
        match (r.mode, &r.metric) {
            (VerifyMode::Exact | VerifyMode::Formal, m) => assert!(m.is_zero(), "{} {m}", r.id),
            (VerifyMode::Analytic, Metric::Bounded { delta, tail }) => assert!(delta <= tail && *tail <= 1e-20),
            (VerifyMode::Analytic, m) => assert!(m.is_zero(), "{} {m}", r.id),
        }
    }
}

#[test]
fn suite_filtered_to_exact_at_n_one() {
    let plan = Plan { n_max: 1, exact_samples: 1, modes: vec![VerifyMode::Exact], ..Plan::default() };
    let reports = run_suite(&plan);
    let finite = registry().iter().filter(|i| i.mode == VerifyMode::Exact && i.has_n()).count();
    assert_eq!(reports.iter().filter(|r| r.n == Some(1)).count(), finite);
    assert!(reports.iter().all(|r| r.mode == VerifyMode::Exact && r.passed()));
}
