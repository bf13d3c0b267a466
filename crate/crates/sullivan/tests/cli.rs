use std::path::PathBuf;

use sullivan::cli::{run_command, Output, EXIT_CHECK_FAILED, EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    run_command(std::iter::once("sullivan").chain(args.iter().copied()))
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("sullivan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn unitary_co_e_criterion_is_obstructed() {
    let out = run(&["criterion", "--type", "coe", "--a", "1,3,5", "--b", "7,9"]);
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    assert!(out.stdout.contains("9 = 1+3+5"), "{}", out.stdout);
}

#[test]
fn small_symplectic_co_e_criterion_passes() {
    let b: Vec<String> = (19..=55).step_by(4).map(|d: u32| d.to_string()).collect();
    let out = run(&["criterion", "--type", "coe", "--a", "3,7,11,15", "--b", &b.join(",")]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("pass"));
}

#[test]
fn even_degree_is_a_usage_error() {
    assert_eq!(run(&["criterion", "--type", "e", "--a", "2", "--b", "3"]).code, EXIT_USAGE);
}

#[test]
fn catalog_show_prints_model_and_citation() {
    let out = run(&["catalog", "show", "al_rigid"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("# al_rigid\n# rigid model"), "{}", out.stdout);
    assert!(out.stdout.contains("gen z : 119;"));
    assert!(out.stdout.contains("x1^15"));
    assert_eq!(run(&["catalog", "show", "nonexistent"]).code, EXIT_USAGE);
    assert_eq!(run(&["catalog", "show", "cpn", "zero"]).code, EXIT_USAGE);
    let list = run(&["catalog", "list"]);
    assert!(list.stdout.contains("al_nonuniversal"));
}

#[test]
fn check_reports_valid_and_invalid_models() {
    let ok = run(&["check", &corpus("hopf.sl")]);
    assert_eq!(ok.code, EXIT_OK, "{}", ok.stdout);
    assert!(ok.stdout.contains("model total: valid\n"), "{}", ok.stdout);
    assert!(ok.stdout.contains("model base: valid, minimal"));
    let bad = run(&["check", &corpus("invalid.sl")]);
    assert_eq!(bad.code, EXIT_CHECK_FAILED);
    assert!(bad.stdout.contains("invalid"));
    assert_eq!(run(&["check", &corpus("hopf.sl"), "--model", "nope"]).code, EXIT_USAGE);
}

#[test]
fn parse_errors_carry_positions() {
    let path = scratch("syntax.sl", "model M { gen x 2; }\n");
    let out = run(&["check", &path]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains(":1:17:"), "{}", out.stderr);
    assert_eq!(run(&["check", "/nonexistent/file.sl"]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}

#[test]
fn cohomology_of_cp3() {
    let out = run(&["cohomology", &corpus("cp3.sl"), "--model", "CP3", "--degrees", "0..6"]);
    assert_eq!(out.code, EXIT_OK);
    let dims: Vec<&str> = out.stdout.lines().map(|l| l.split_whitespace().nth(2).unwrap()).collect();
    assert_eq!(dims, ["1", "0", "1", "0", "1", "0", "1"]);
    assert_eq!(run(&["cohomology", &corpus("cp3.sl"), "--model", "CP3", "--degrees", "6..0"]).code, EXIT_USAGE);
}

#[test]
fn loop_model_output_reparses() {
    let out = run(&["loop", &corpus("cp3.sl"), "--model", "CP3"]);
    assert_eq!(out.code, EXIT_OK);
    let path = scratch("loop.sl", &out.stdout);
    let check = run(&["check", &path]);
    assert_eq!(check.code, EXIT_OK, "{}", check.stdout);
    assert!(check.stdout.contains("CP3_loop"));
    let degree_one = run(&["loop", &corpus("hopf.sl"), "--model", "total"]);
    assert_eq!(degree_one.code, EXIT_UNSUPPORTED);
}

#[test]
fn solve_square_exit_codes() {
    let hopf = corpus("hopf.sl");
    let post = run(&["solve-square", &hopf, "--bridge", "p", "--auto", "two", "--direction", "e"]);
    assert_eq!(post.code, EXIT_CHECK_FAILED, "{}{}", post.stdout, post.stderr);
    assert!(post.stdout.starts_with("verdict: no_solution"));
    assert!(post.stdout.contains("residual: -v y^2"), "{}", post.stdout);
    let pre = run(&["solve-square", &hopf, "--bridge", "p", "--auto", "scale", "--direction", "coe"]);
    assert_eq!(pre.code, EXIT_OK, "{}{}", pre.stdout, pre.stderr);
    assert!(pre.stdout.contains("v -> 2 v;"), "{}", pre.stdout);
    let su6 = corpus("su6.sl");
    let sign = run(&["solve-square", &su6, "--bridge", "restrict", "--auto", "sign", "--direction", "e"]);
    assert_eq!(sign.code, EXIT_CHECK_FAILED, "{}{}", sign.stdout, sign.stderr);
    let missing = run(&["solve-square", &hopf, "--bridge", "p", "--auto", "nope", "--direction", "e"]);
    assert_eq!(missing.code, EXIT_USAGE);
}

#[test]
fn report_paper_writes_json() {
    let dir = std::env::temp_dir().join(format!("sullivan-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["report-paper", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
}
