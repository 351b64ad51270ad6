//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and asserting its time budget. Run with
//! `cargo test -p baseloci-cli --test acceptance -- --nocapture` to see the
//! lines.

use std::time::{Duration, Instant};

use baseloci_cli::certificate::VerificationCertificate;
use baseloci_cli::suites;

const SEED: u64 = suites::DEFAULT_SEED;

fn report(number: u32, description: &str, cert: &VerificationCertificate) {
    let passed = cert.passed();
    println!(
        "criterion {number} ({description}): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    if !passed {
        for check in cert.checks.iter().filter(|c| !c.pass) {
            println!(
                "    failed: {} expected {} [{}], computed {}",
                check.description, check.expected, check.provenance, check.computed
            );
        }
    }
    assert!(passed, "criterion {number} failed");
}

fn timed<T>(budget: Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let value = f();
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "exceeded the {budget:?} budget: took {elapsed:?}"
    );
    value
}

#[test]
fn criterion_1_diminished_locus_example() {
    let cert = timed(Duration::from_secs(1), || {
        suites::b_minus_example().expect("suite runs")
    });
    report(1, "diminished-locus extension example", &cert);
    // spot-check the headline values
    let by_description = |needle: &str| {
        cert.checks
            .iter()
            .find(|c| c.description.contains(needle))
            .unwrap_or_else(|| panic!("missing check {needle}"))
    };
    assert_eq!(by_description("B-(L+F̄)").computed, "{F̄}");
    assert_eq!(by_description("B-(L+F̄+F′)").computed, "{F̄, F′}");
    assert!(by_description("pathology").pass);
}

#[test]
fn criterion_2_augmented_locus_example() {
    let cert = timed(Duration::from_secs(1), || {
        suites::b_plus_example().expect("suite runs")
    });
    report(2, "augmented-locus extension example", &cert);
    let by_description = |needle: &str| {
        cert.checks
            .iter()
            .find(|c| c.description.contains(needle))
            .unwrap_or_else(|| panic!("missing check {needle}"))
    };
    assert_eq!(by_description("(C·C)").computed, "3");
    assert_eq!(by_description("(C·F′)").computed, "0");
    assert_eq!(by_description("(C·F̄)").computed, "1");
    assert_eq!(by_description("((C+F̄+2F′)·F̄)").computed, "1");
    assert_eq!(by_description("(A·F̄)").computed, "1");
    assert!(by_description("A = 6L-2F̄-3F′ is ample").pass);
    assert!(by_description("F̄ within B+(C+F̄+2F′)").pass);
    assert!(by_description("F̄ not within B+(C+2F′)").pass);
}

#[test]
fn criterion_3_vanishing_sweep() {
    let cert = timed(Duration::from_secs(1), || {
        suites::l_counter(6, 6).expect("suite runs")
    });
    report(3, "symmetric-power vanishing sweep", &cert);
    let det = cert
        .checks
        .iter()
        .find(|c| c.description.contains("determinant"))
        .unwrap();
    assert_eq!(det.computed, "1");
    let c2 = cert
        .checks
        .iter()
        .find(|c| c.description.starts_with("c2"))
        .unwrap();
    assert_eq!(c2.computed, "7");
}

#[test]
fn criterion_4_schur_suite() {
    let cert = timed(Duration::from_secs(30), || {
        suites::schur_suite().expect("suite runs")
    });
    report(4, "Schur combinatorics sweeps", &cert);
}

#[test]
fn criterion_5_zariski_properties() {
    let cert = timed(Duration::from_secs(10), || {
        suites::zariski_properties(SEED, 200).expect("suite runs")
    });
    report(5, "Zariski property suite, 200 classes", &cert);
}

#[test]
fn criterion_6_base_locus_laws() {
    let cert = timed(Duration::from_secs(30), || {
        suites::base_loci_laws(SEED, 100).expect("suite runs")
    });
    report(6, "base-locus law suite, 100 bundles", &cert);
}

#[test]
fn criterion_7_pullback_laws() {
    let cert = timed(Duration::from_secs(1), || {
        suites::pullback_suite().expect("suite runs")
    });
    report(7, "pullback laws along the blow-down", &cert);
    // every degree from -2 to 5 is covered, both laws
    for d in -2i64..=5 {
        assert!(cert
            .checks
            .iter()
            .any(|c| c.description.contains(&format!("B+(f*({d}L))"))));
        assert!(cert
            .checks
            .iter()
            .any(|c| c.description.contains(&format!("B-(f*({d}L))"))));
    }
}

#[test]
fn criterion_8_chern_suite() {
    let cert = timed(Duration::from_secs(10), || {
        suites::chern_laws(SEED, 100).expect("suite runs")
    });
    report(8, "Chern character law suite, 100 pairs", &cert);
}
