//! Black-box tests of the `cfgen` binary: text goldens, JSON shape, and the
//! exit-code contract (0 = success, 1 = a check or computation failed,
//! 2 = usage error).

use std::path::Path;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cfgen_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cfgen"));
    cmd.args(args);
    for (key, value) in env {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("failed to launch cfgen");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("stdout is not UTF-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is not UTF-8"),
    }
}

fn cfgen(args: &[&str]) -> Run {
    cfgen_env(args, &[])
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_str()
        .expect("fixture path is not UTF-8")
        .to_string()
}

#[test]
fn expand_prints_the_classical_cascade() {
    let run = cfgen(&[
        "expand", "--family", "bernoulli", "--N", "1", "--lambda", "0", "--depth", "4",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run
        .stdout
        .contains("f ~ 1 - x/(2+x - 2x/(3+x - 3x/(4+x - 4x/(5+x))))"));
    assert!(run.stdout.contains("k=1: - x/(2+x)"));
    assert!(run.stdout.contains("k=4: - 4x/(5+x)"));
    assert!(run
        .stdout
        .contains("n=4: P = 120, Q = 120+60x+20x^2+5x^3+x^4"));
}

#[test]
fn expand_handles_even_power_families() {
    let run = cfgen(&["expand", "--family", "euler", "--N", "0", "--depth", "2"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("f ~ 1 - x^2/(2+x^2 - 2x^2/(12+x^2))"));
    assert!(run.stdout.contains("n=2: P = 24, Q = 24+12x^2+x^4"));
}

#[test]
fn eval_prints_exact_value_and_truncated_decimal() {
    let run = cfgen(&[
        "eval", "--family", "zeta", "--s", "7", "--depth", "5", "--x", "1", "--digits", "28",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("exact: 2799360000000/2822716691183"));
    assert!(run
        .stdout
        .contains("decimal (28 digits): 0.9917254568069276497590711416"));
}

#[test]
fn eval_works_at_small_depth() {
    let run = cfgen(&["eval", "--family", "arctan", "--depth", "2", "--x", "1"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("exact: 15/13"));
    assert!(run
        .stdout
        .contains("decimal (28 digits): 1.1538461538461538461538461538"));
}

#[test]
fn eval_reports_poles_as_computation_failures() {
    let run = cfgen(&["eval", "--family", "bernoulli", "--depth", "1", "--x", "-2"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("denominator vanishes"));
}

#[test]
fn transform_applies_a_linear_fractional_map() {
    let run = cfgen(&[
        "transform", "--family", "cauchy", "--N", "1", "--lambda", "0", "--a", "1", "--b",
        "-1", "--c", "1", "--d", "1", "--depth", "4",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("map: v -> (v - 1)/(v + 1)"));
    assert!(run
        .stdout
        .contains("g ~ x/(4-x + 8x/(3-2x + 9x/(4-3x + 16x/(5-4x))))"));
    assert!(run
        .stdout
        .contains("series cross-check: defect order 5 at convergent 4 (required >= 5): pass"));
}

#[test]
fn series2cf_expands_a_file_series() {
    let source = format!("file:{}", fixture("exp.json"));
    let run = cfgen(&["series2cf", "--source", &source, "--depth", "3"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("input order: 10"));
    assert!(run.stdout.contains("k=1: a = 1, b = 1"));
    assert!(run.stdout.contains("k=2: a = -1, b = 2"));
    assert!(run.stdout.contains("k=3: a = 1, b = 3"));
    assert!(run.stdout.contains("roundtrip through x^3: pass"));
}

#[test]
fn series2cf_detects_rational_functions() {
    let source = format!("file:{}", fixture("geom.json"));
    let run = cfgen(&["series2cf", "--source", &source, "--depth", "8"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("k=1: a = 1, b = 1"));
    assert!(run.stdout.contains("k=2: a = -1, b = 1"));
    assert!(run
        .stdout
        .contains("terminates: the input is a rational function"));
    assert!(run.stdout.contains("roundtrip through x^18: pass"));
}

#[test]
fn series2cf_rejects_short_input_series() {
    let source = format!("file:{}", fixture("exp.json"));
    let run = cfgen(&["series2cf", "--source", &source, "--depth", "8"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("insufficient"));
}

#[test]
fn series2cf_rejects_unknown_sources() {
    let run = cfgen(&["series2cf", "--source", "egf-tangent", "--depth", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("unknown source"));
}

#[test]
fn missing_source_file_is_a_usage_error() {
    let run = cfgen(&["series2cf", "--source", "file:/no/such/file.json"]);
    assert_eq!(run.code, 2);
}

#[test]
fn unknown_family_is_a_usage_error() {
    let run = cfgen(&["expand", "--family", "nosuch"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("unknown family"));
    assert!(run.stderr.contains("ogf_cauchy"));
}

#[test]
fn depth_cap_env_var_is_enforced() {
    let run = cfgen_env(
        &["expand", "--family", "bernoulli", "--depth", "9"],
        &[("CFGEN_DEPTH_LIMIT", "5")],
    );
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("depth 9 exceeds the limit 5"));
}

#[test]
fn verify_single_family_reports_every_check() {
    let run = cfgen(&["verify", "--family", "bernoulli", "--depth", "6"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("recurrence-vs-closed-form: pass"));
    assert!(run.stdout.contains("defect-law: pass"));
    assert!(run.stdout.contains("determinant: pass"));
    assert!(run.stdout.contains("oracle-equivalence: pass"));
    assert!(run.stdout.contains("result: PASS"));
}

#[test]
fn verify_whole_grid_at_a_small_depth() {
    let run = cfgen(&["verify", "--all", "--depth", "3"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run
        .stdout
        .contains("verify --all: 80 family instances at depth 3"));
    assert!(run.stdout.contains("bernoulli(N=1, lambda=0): pass"));
    assert!(run.stdout.contains("zeta(s=7): pass"));
    assert!(run.stdout.trim_end().ends_with("result: PASS"));
}

#[test]
fn verify_rejects_family_combined_with_all() {
    let run = cfgen(&["verify", "--family", "bernoulli", "--all"]);
    assert_eq!(run.code, 2);
}

#[test]
fn verify_all_rejects_stray_family_parameters() {
    let run = cfgen(&["verify", "--all", "--s", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("--all does not take --s"));
}

#[test]
fn verify_requires_a_target() {
    let run = cfgen(&["verify"]);
    assert_eq!(run.code, 2);
}

#[test]
fn table_lists_named_numbers() {
    let run = cfgen(&["table", "--family", "ogf_bernoulli", "--depth", "8"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("symbol: B_n"));
    assert!(run.stdout.contains("n=8: -1/30"));
}

#[test]
fn table_rejects_families_without_number_tables() {
    let run = cfgen(&["table", "--family", "arctan"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("no named-number table"));
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "eval", "--family", "zeta", "--s", "7", "--depth", "5", "--format", "json",
    ];
    let first = cfgen(&args);
    let second = cfgen(&args);
    assert_eq!(first.code, 0, "stderr: {}", first.stderr);
    assert_eq!(second.code, 0, "stderr: {}", second.stderr);

    let a: serde_json::Value = serde_json::from_str(&first.stdout).expect("first run is JSON");
    let b: serde_json::Value = serde_json::from_str(&second.stdout).expect("second run is JSON");
    assert!(a.get("timing_ms").is_some());
    // Everything except the timing must be byte-for-byte reproducible.
    assert_eq!(
        serde_json::to_string(&a["report"]).unwrap(),
        serde_json::to_string(&b["report"]).unwrap()
    );
    assert_eq!(a["report"]["exact"], "2799360000000/2822716691183");
    assert_eq!(a["report"]["decimal"], "0.9917254568069276497590711416");
}

#[test]
fn json_output_is_pretty_printed_and_stable() {
    let run = cfgen(&[
        "expand", "--family", "euler", "--N", "0", "--depth", "2", "--format", "json",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let value: serde_json::Value = serde_json::from_str(&run.stdout).expect("output is JSON");
    // Key order survives a parse/serialize roundtrip, so the printed form is
    // exactly the pretty rendering plus a trailing newline.
    let reprinted = format!("{}\n", serde_json::to_string_pretty(&value).unwrap());
    assert_eq!(run.stdout, reprinted);
    assert_eq!(value["report"]["cf"]["terms"][1]["den"][0], "12");
}
