use std::process::Command;
use xpoly::{Family, FamilySpec};
use xpoly_cli::{classified_hybrid, ZerosDocument, CSV_HEADER};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_xpoly"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("spawn");
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn exit_code(args: &[&str]) -> i32 {
    bin().args(args).output().expect("spawn").status.code().expect("code")
}

#[test]
fn undeformed_member_lists_classical_ordinary_zeros() {
    let text = run_ok(&[
        "zeros", "--family", "L1", "--ell", "0", "--g", "2", "--n", "3", "--format", "json",
    ]);
    let doc: ZerosDocument = serde_json::from_str(&text).expect("parse");
    assert_eq!(doc.ordinary.len(), 3);
    assert!(doc.ordinary.iter().all(|&x| x > 0.0));
    assert!(doc.extra.is_empty());
    assert_eq!(doc.residuals.len(), 3);
}

#[test]
fn zeros_json_round_trips_the_classification_exactly() {
    let text = run_ok(&[
        "zeros", "--family", "L2", "--g", "3", "--ell", "4", "--n", "8", "--format", "json",
    ]);
    let doc: ZerosDocument = serde_json::from_str(&text).expect("parse");
    let parsed = doc.to_classified();
    let spec = FamilySpec::laguerre(Family::L2, 3.0, 4, 8).unwrap();
    let (direct, _) = classified_hybrid(&spec, 1e-8).unwrap();
    assert_eq!(parsed.ordinary, direct.ordinary, "ordinary drifted in JSON");
    assert_eq!(parsed.extra, direct.extra, "extra drifted in JSON");
    assert_eq!(parsed.extra_real, direct.extra_real);
    assert_eq!(parsed.domain, direct.domain);
}

#[test]
fn published_row_is_reproduced_by_the_zeros_command() {
    let text = run_ok(&[
        "zeros", "--family", "J2", "--g", "8", "--h", "9", "--ell", "3", "--n", "0", "--format",
        "json",
    ]);
    let doc: ZerosDocument = serde_json::from_str(&text).expect("parse");
    let want = [(3.90615, 4.35051), (3.90615, -4.35051), (6.58770, 0.0)];
    assert_eq!(doc.extra.len(), 3);
    for (re, im) in want {
        let d = doc
            .extra
            .iter()
            .map(|z| ((z.re - re).powi(2) + (z.im - im).powi(2)).sqrt())
            .fold(f64::INFINITY, f64::min);
        assert!(d < 1e-4, "missed {re} {im}: nearest {d:.2e}");
    }
}

#[test]
fn csv_output_carries_the_fixed_header_and_echoed_defaults() {
    let text = run_ok(&[
        "zeros", "--family", "L1", "--g", "2", "--ell", "5", "--n", "0", "--format", "csv",
    ]);
    let mut lines = text.lines();
    let comments: Vec<&str> = text.lines().take_while(|l| l.starts_with('#')).collect();
    assert!(comments.iter().any(|l| l.contains("precision=standard")));
    assert!(comments.iter().any(|l| l.contains("tol=")));
    let header = lines.find(|l| !l.starts_with('#')).expect("header");
    assert_eq!(header, CSV_HEADER);
    assert_eq!(text.lines().count(), comments.len() + 1 + 5);
}

#[test]
fn table_text_matches_published_formatting() {
    let t1 = run_ok(&["table", "1"]);
    assert!(t1.contains("-21.5951"), "missing table-1 value:\n{t1}");
    assert!(t1.contains("-21.0456"), "missing limit row value:\n{t1}");
    let t3 = run_ok(&["table", "3"]);
    assert!(
        t3.contains("-4.28361 \u{b1} 1.47684 i"),
        "pair formatting off:\n{t3}"
    );
    assert_eq!(run_ok(&["table", "1"]), t1, "table output not idempotent");
}

#[test]
fn sweep_is_sorted_deterministic_and_all_or_nothing() {
    let args = [
        "sweep", "--family", "L2", "--g", "2", "--ell", "1:4:1", "--n", "2", "--format", "csv",
    ];
    let a = run_ok(&args);
    let b = run_ok(&args);
    assert_eq!(a, b, "sweep output changed between runs");
    let ells: Vec<usize> = a
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("family"))
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert!(ells.windows(2).all(|w| w[0] <= w[1]), "records unsorted");

    // a failing sweep must not leave a file behind
    let out = std::env::temp_dir().join("xpoly_sweep_reject.csv");
    let _ = std::fs::remove_file(&out);
    let code = exit_code(&[
        "sweep", "--family", "L2", "--g", "2", "--ell", "5:4:1", "--n", "2", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(!out.exists(), "rejected sweep wrote a file");
}

#[test]
fn verify_exit_codes_follow_the_contract() {
    assert_eq!(
        exit_code(&[
            "verify", "--suite", "counts", "--family", "L1", "--g", "2", "--ell", "5", "--n", "60",
        ]),
        0
    );
    assert_eq!(exit_code(&["verify", "--suite", "nonsense"]), 2);
}

#[test]
fn environment_variable_overrides_default_precision() {
    let out = bin()
        .args(["zeros", "--family", "L1", "--g", "2", "--ell", "1", "--n", "1", "--format", "json"])
        .env("XPOLY_PRECISION", "extended")
        .output()
        .expect("spawn");
    assert!(out.status.success());
    let doc: ZerosDocument = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.config.precision, "extended");
}

#[test]
fn usage_mistakes_exit_with_code_two() {
    assert_eq!(exit_code(&["zeros", "--g", "2", "--ell", "1", "--n", "1"]), 2);
    assert_eq!(
        exit_code(&["zeros", "--family", "L1", "--g", "2", "--ell", "1", "--n", "1:5:1"]),
        2
    );
    assert_eq!(
        exit_code(&["zeros", "--family", "L1", "--g", "2", "--h", "3", "--ell", "1", "--n", "1"]),
        2
    );
    assert_eq!(exit_code(&["table", "9"]), 2);
}
