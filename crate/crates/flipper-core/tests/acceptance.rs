//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Seeds and tolerances are
//! pinned here.

use flipper_core::verify::{predict_scaling, run_suite, SuiteReport};

const SEED: u64 = 7;

fn gate(criterion: usize, what: &str, report: &SuiteReport) {
    let ok = report.passed();
    println!("criterion {criterion} ({what}): {}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        for c in report.checks.iter().filter(|c| !c.pass) {
            eprintln!("  failed: {} — {}", c.label, c.details);
        }
    }
    assert!(ok, "criterion {criterion} ({what}) failed");
}

fn check_instances(report: &SuiteReport, label_part: &str, at_least: usize) {
    let c = report
        .checks
        .iter()
        .find(|c| c.label.contains(label_part))
        .unwrap_or_else(|| panic!("no check labelled like {label_part:?}"));
    assert!(
        c.instances >= at_least,
        "{} ran {} instances, expected at least {at_least}",
        c.label,
        c.instances
    );
}

#[test]
fn criterion_01_flip_algebra_laws() {
    let report = run_suite("flips", SEED).unwrap();
    check_instances(&report, "restores the graph", 500);
    assert!(report.millis < 10_000, "flip law suite took {} ms", report.millis);
    gate(1, "flip algebra laws", &report);
}

#[test]
fn criterion_02_class_partition_laws() {
    let report = run_suite("s_classes", SEED).unwrap();
    check_instances(&report, "class count", 200);
    gate(2, "S-class partition laws", &report);
}

#[test]
fn criterion_03_metric_axioms() {
    let report = run_suite("metric", SEED).unwrap();
    check_instances(&report, "brute-force", 1);
    check_instances(&report, "triangle", 1);
    check_instances(&report, "refining", 100);
    assert!(report.millis < 60_000, "metric suite took {} ms", report.millis);
    gate(3, "flip metric axioms", &report);
}

#[test]
fn criterion_04_five_blob_recovery() {
    let report = run_suite("classifier", SEED).unwrap();
    check_instances(&report, "finds a small classifier", 30);
    gate(4, "five-blob recovery of classifiers", &report);
}

#[test]
fn criterion_05_separating_flips() {
    let report = run_suite("predict", SEED).unwrap();
    check_instances(&report, "exactly-spaced", 20);
    let spaced = &report.checks[0];
    println!(
        "criterion 5 (separating exactly-spaced centers): {}",
        if spaced.pass { "PASS" } else { "FAIL" }
    );
    assert!(spaced.pass, "{} — {}", spaced.label, spaced.details);
}

#[test]
fn criterion_06_prediction_agreement() {
    let report = run_suite("predict", SEED).unwrap();
    check_instances(&report, "oracle keeps every planted center", 25);
    let ok = report.checks[1..].iter().all(|c| c.pass);
    println!("criterion 6 (prediction agrees with the oracle): {}", if ok { "PASS" } else { "FAIL" });
    for c in report.checks[1..].iter().filter(|c| !c.pass) {
        eprintln!("  failed: {} — {}", c.label, c.details);
    }
    assert!(ok, "criterion 6 failed");
}

#[test]
fn criterion_07_flip_star_wins() {
    let report = run_suite("strategy", SEED).unwrap();
    check_instances(&report, "wins every game", 160);
    gate(7, "flip★ wins against every connector", &report);
}

#[test]
fn criterion_08_single_flip_wrapper() {
    let report = run_suite("wrapper", SEED).unwrap();
    check_instances(&report, "still wins", 10);
    gate(8, "single-flip wrapper containment", &report);
}

#[test]
fn criterion_09_strategy_translations() {
    let report = run_suite("translations", SEED).unwrap();
    check_instances(&report, "S-classes", 20);
    check_instances(&report, "simulated pseudo arena", 1);
    gate(9, "strategy translations", &report);
}

#[test]
fn criterion_10_prediction_scaling() {
    let report = predict_scaling(&[100, 200, 400, 800, 1600], 2, 5, SEED).unwrap();
    let ok = report.slope <= 2.3 && report.millis < 300_000;
    println!(
        "criterion 10 (prediction scaling, slope {:.2} in {} ms): {}",
        report.slope,
        report.millis,
        if ok { "PASS" } else { "FAIL" }
    );
    for row in &report.rows {
        eprintln!("  n={:5} median {} ns", row.n, row.median_ns);
    }
    assert!(report.slope <= 2.3, "log-log slope {:.3} above 2.3", report.slope);
    assert!(report.millis < 300_000, "scaling run took {} ms", report.millis);
}
