//! Exit codes of the `kappa` binary: 0 success, 1 verification failure,
//! 2 invalid input.

use std::process::Command;

use kappa_iso::cli::VerifyOutcome;
use kappa_iso::hopf::CoproductDefect;
use kappa_iso::render::OutputFormat;
use kappa_iso::tensor::TensorKey;
use kappa_iso::{DeformationContext, Generator, HSeries, Metric};

fn kappa(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kappa")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn successful_commands_exit_zero() {
    let (code, out, _) = kappa(&["examples"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    let (code, out, _) = kappa(&["classify", "--example", "tachyonic"]);
    assert_eq!(code, 0);
    assert!(out.contains("SO(2,1)") && out.contains("MYBE"), "{out}");
    let (code, out, _) = kappa(&["emit", "coproduct", "--example", "time-like", "--generator", "P 1"]);
    assert_eq!((code, out.trim()), (0, "P_1⊗Π_τ + 1⊗P_1"));
    let (code, out, _) = kappa(&["emit", "schouten", "--example", "light-like"]);
    assert_eq!((code, out.trim()), (0, "0"));
    let (code, out, _) = kappa(&["classify", "--example", "light-like", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["yb_type"], "CYBE");
}

#[test]
fn passing_suites_exit_zero() {
    let (code, out, _) = kappa(&["verify", "--example", "light-like", "--suite", "all", "--order", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("skipped: mr"), "{out}");
    let (code, out, _) = kappa(&["verify", "--example", "kleinian", "--suite", "hopf", "--order", "3"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn config_files_are_read() {
    let dir = std::env::temp_dir().join(format!("kappa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d3.json");
    std::fs::write(
        &path,
        r#"{"dimension": 3, "metric": [["-1","1/2","0"],["1/2","1","0"],["0","0","2"]], "tau": ["1","0","-1/3"], "truncation_order": 2}"#,
    )
    .unwrap();
    let (code, out, err) = kappa(&["verify", "--config", path.to_str().unwrap(), "--suite", "hopf"]);
    assert_eq!(code, 0, "{out}{err}");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"metric": [["1","1"],["1","1"]], "tau": ["1","0"]}"#).unwrap();
    let (code, _, err) = kappa(&["classify", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn invalid_input_exits_two() {
    let cases: [&[&str]; 8] = [
        &["emit", "twist", "--example", "time-like"],
        &["classify", "--example", "no-such-example"],
        &["classify"],
        &["classify", "--config", "/nonexistent/config.json"],
        &["verify", "--example", "time-like", "--suite", "everything"],
        &["emit", "coproduct", "--example", "time-like", "--generator", "M 1 0"],
        &["emit", "coproduct", "--example", "time-like", "--generator", "P 9"],
        &["verify", "--example", "time-like", "--order", "0"],
    ];
    for args in cases {
        let (code, _, err) = kappa(args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
    let (_, _, err) = kappa(&["emit", "twist", "--example", "time-like"]);
    assert!(err.contains("modified Yang-Baxter"), "{err}");
}

/// A corrupted coproduct cannot be requested from the command line, so the
/// failure path is driven through the same outcome type the binary uses.
#[test]
fn failed_verification_exits_one() {
    let ctx = DeformationContext::from_ints(Metric::minkowski(3), &[1, 0, 0], 2).unwrap();
    let p1 = ctx.algebra().basis().momentum(1);
    let key: TensorKey = [[p1].into_iter().collect(), Default::default()].into_iter().collect();
    let defect = CoproductDefect { generator: Generator::Momentum(1), key, delta: HSeries::one(2) };
    let bad = ctx.with_coproduct_defect(&defect).unwrap();
    let outcome = VerifyOutcome { reports: vec![bad.verify_hopf()], skipped: Vec::new() };
    assert_eq!(outcome.exit_code(), 1);
    let text = outcome.render(OutputFormat::Text);
    assert!(text.contains("FAIL") && text.contains("residual"), "{text}");
    let good = VerifyOutcome { reports: vec![ctx.verify_hopf()], skipped: Vec::new() };
    assert_eq!(good.exit_code(), 0);
}
