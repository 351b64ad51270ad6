//! End-to-end checks of the command-line surface: exit codes, output
//! determinism, round-tripping of printed classes, and the bundled surface
//! files.

use baseloci_cli::run;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["baseloci".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_exits_zero_on_pass() {
    let (code, out, _) = exec(&["verify", "b-minus-example"]);
    assert_eq!(code, 0);
    assert!(out.contains("overall: pass"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = exec(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());

    let (code, _, err) = exec(&["zariski", "p2-double-blowup", "L + nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error"));

    let (code, _, _) = exec(&["baselocus", "p2"]);
    assert_eq!(code, 2);

    let (code, _, err) = exec(&["verify", "no-such-target"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown verification target"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = exec(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("zariski"));
}

#[test]
fn structured_output_is_deterministic() {
    let args = [
        "--format",
        "structured",
        "verify",
        "zariski-properties",
        "--seed",
        "7",
        "--count",
        "25",
    ];
    let (code_a, out_a, _) = exec(&args);
    let (code_b, out_b, _) = exec(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_a, code_b);
    assert_eq!(out_a, out_b, "same arguments and seed must be byte-identical");
    assert!(out_a.contains("seed: 7"));
}

#[test]
fn structured_certificates_carry_provenance() {
    let (code, out, _) = exec(&["--format", "structured", "verify", "b-plus-example"]);
    assert_eq!(code, 0);
    assert!(out.contains("example_id: b-plus-example"));
    assert!(out.contains("provenance: stated"));
    assert!(out.contains("provenance: derived"));
    assert!(out.contains("pass: true"));
    assert!(out.contains("overall: pass"));
}

#[test]
fn printed_classes_reparse_through_the_cli() {
    // take the positive part printed by `zariski` and feed it back in
    let (code, out, _) = exec(&["zariski", "p2-double-blowup", "2L - 1F̄ - 3/2F′"]);
    assert_eq!(code, 0, "{out}");
    let positive = out
        .lines()
        .find_map(|l| l.strip_prefix("positive: "))
        .expect("positive part printed");
    let (code, out2, _) = exec(&["zariski", "p2-double-blowup", positive]);
    assert_eq!(code, 0, "{out2}");
    assert!(out2.contains(&format!("positive: {positive}")));
}

#[test]
fn ascii_aliases_match_unicode_labels() {
    let (_, unicode, _) = exec(&["baselocus", "p2-double-blowup", "--divisor", "L+F̄+F′"]);
    let (_, ascii, _) = exec(&["baselocus", "p2-double-blowup", "--divisor", "L+Fb+Fp"]);
    // identical computation modulo the echoed expression in the title
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("==") && !l.starts_with("class:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&unicode), strip(&ascii));
}

#[test]
fn bundled_surface_files_work_like_presets() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../surfaces");
    let path = format!("{root}/p2-double-blowup.surface");
    let (code, from_file, _) = exec(&["zariski", &path, "L+Fb"]);
    assert_eq!(code, 0);
    let (_, from_preset, _) = exec(&["zariski", "p2-double-blowup", "L+Fb"]);
    assert_eq!(from_file, from_preset);
}

#[test]
fn seed_is_printed_by_default() {
    let (_, out, _) = exec(&["verify", "base-loci-laws", "--count", "5"]);
    assert!(out.contains(&format!("seed {}", baseloci_cli::suites::DEFAULT_SEED)));
}

#[test]
fn lattice_command_reports_cone_tests() {
    let (code, out, _) = exec(&["lattice", "p2-double-blowup", "--class", "6L-2Fb-3Fp"]);
    assert_eq!(code, 0);
    assert!(out.contains("ample: true"));
    assert!(out.contains("self_intersection: 31"));
}
