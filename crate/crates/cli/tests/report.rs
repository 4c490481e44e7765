use qsv::report::{Report, RunInfo};
use qsv_core::verify::{run_suite, Plan};

fn run_info() -> RunInfo {
    RunInfo { seed: 1, order: 40, n_max: 6, timestamp: "2026-01-01T00:00:00Z".into(), version: "0.1.0".into() }
}

#[test]
fn empty_report_has_the_schema_shape() {
    let r = Report::new(run_info(), &[]);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["results"], serde_json::json!([]));
    for key in ["seed", "order", "n_max", "timestamp", "version"] {
        assert!(v["run"].get(key).is_some(), "missing run.{key}");
    }
}

#[test]
fn pass_records_have_zero_metric_and_round_trip() {
    let plan = Plan { ids: vec!["KLUYVER".into(), "FIN-E1".into(), "E3".into()], exact_samples: 1, formal_samples: 1, analytic_samples: 1, n_max: 1, order: 20, ..Plan::default() };
    let reports = run_suite(&plan);
    let r = Report::new(run_info(), &reports);
    let text = r.to_json();
    let back = Report::from_json(&text).unwrap();
    assert_eq!(back, r);

    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    for rec in results {
        assert_eq!(rec["status"], "pass");
        let keys: Vec<&str> = rec.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for key in ["id", "mode", "binding", "status", "metric", "duration_ms", "heuristic_tail"] {
            assert!(keys.contains(&key), "missing {key}");
        }
    }
    let fin = results.iter().find(|r| r["id"] == "FIN-E1").unwrap();
    assert_eq!(fin["metric"], "0");
    assert_eq!(fin["n"], 1);
    assert!(fin["binding"]["q"].as_str().unwrap().contains('/'));
    let kl = results.iter().find(|r| r["id"] == "KLUYVER").unwrap();
    assert_eq!(kl["metric"], "0");
    assert!(kl.get("n").is_none());
    let e3 = results.iter().find(|r| r["id"] == "E3").unwrap();
    assert_eq!(e3["heuristic_tail"], true);
}

#[test]
fn text_format_has_one_line_per_result() {
    let plan = Plan { ids: vec!["FIN-E2".into()], exact_samples: 2, n_max: 2, ..Plan::default() };
    let r = Report::new(run_info(), &run_suite(&plan));
    let text = r.to_text();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().take(4).all(|l| l.starts_with("PASS")));
    assert_eq!(text.lines().last().unwrap(), "4 passed, 0 failed, 0 skipped");
}
