use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mockmod4"))
        .args(args)
        .env_remove("MOCKMOD4_DEPTH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeff_psi_4() {
    let o = run(&["coeff", "psi", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn coeff_json_uses_strings() {
    let o = run(&["--json", "coeff", "u", "895"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], "1024812893179301707101383915846");
}

#[test]
fn series_dump_shape() {
    let o = run(&["series", "A", "10"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["precision"], 10);
    assert!(v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c.is_string()));
}

#[test]
fn hurwitz_commands() {
    assert_eq!(stdout(&run(&["hurwitz", "23"])).trim(), "36");
    let o = run(&["hurwitz", "series", "8", "7", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["hurwitz", "1", "2"]).status.code(), Some(2));
}

#[test]
fn pell_prints_both_counts() {
    let o = run(&["--json", "pell", "46"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["bruteforce"], 2);
    assert_eq!(v["formula"], 2);
}

#[test]
fn dsum_emits_series() {
    let o = run(&["dsum", "psihec", "20"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("\"precision\":20"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        run(&["verify", "identity", "H83", "--depth", "300"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["verify", "identity", "no-such"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "congruence", "theA4", "--prime", "7"])
            .status
            .code(),
        Some(2),
        "hypothesis-violating prime is not applicable"
    );
    let o = run(&[
        "verify",
        "congruence",
        "thev4-falsified-original",
        "--prime",
        "17",
        "--k",
        "99",
        "--nmax",
        "400",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(v["first_counterexample"]["n"], 99);
    assert_eq!(
        run(&["verify", "classify", "Npsi-mod4", "--nmax", "300"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn depth_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mockmod4"))
        .args(["verify", "identity", "pentprod"])
        .env("MOCKMOD4_DEPTH", "77")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["range"][1], 77);
}

#[test]
fn reports_are_deterministic() {
    let a = stdout(&run(&["verify", "all"]));
    let b = stdout(&run(&["verify", "all"]));
    assert_eq!(a, b);
    assert!(a.lines().count() > 90);
}

#[test]
fn repro_paper_numbers() {
    let o = run(&["repro", "paper-numbers"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS v(99) = 81474897186"));
    assert!(!text.contains("FAIL"));
}
