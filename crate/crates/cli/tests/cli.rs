use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fanoforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fanoforge"))
        .args(args)
        .env_remove("FANOFORGE_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table2_csv() {
    let o = fanoforge(&["tables", "--which", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[1], "P^3,\"(2,1)\",4,2,2,3,7,yes");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fanoforge(&["tables", "--which", "4"]).status.code(), Some(2));
    assert_eq!(fanoforge(&["nonsense"]).status.code(), Some(2));
    assert_eq!(fanoforge(&["tables", "--which", "1", "--format", "xml"]).status.code(), Some(2));
    let o = fanoforge(&["expand", "x +* y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 4"));
    assert_eq!(fanoforge(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(fanoforge(&["terminal", "1/5(1,2)"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let o = fanoforge(&["verify", "all", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    for name in ["registry", "hilbert-numerator", "terminality", "pfaffian-tom", "pfaffian-jerry", "a3-obstruction", "minor-pullback"] {
        assert!(s.lines().any(|l| l.starts_with(&format!("PASS {name} "))), "{name} missing in\n{s}");
    }
    assert!(s.ends_with("verify all: 12/12 checks pass (seed 7, 20 trials)\n"));
}

#[test]
fn deterministic_and_seeded_by_env() {
    let args = ["verify", "tom", "--trials", "2", "--seed", "5", "--format", "json"];
    let a = fanoforge(&args);
    let b = fanoforge(&args);
    assert_eq!(a.stdout, b.stdout);
    let o = Command::new(env!("CARGO_BIN_EXE_fanoforge"))
        .args(["verify", "jerry", "--trials", "1", "--format", "json"])
        .env("FANOFORGE_SEED", "9")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 9);
    assert_eq!(v["checks"][0]["passed"], true);
}

#[test]
fn classify_two_term_equation() {
    let o = fanoforge(&["classify", "--r", "3", "alpha^8 + beta^4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], serde_json::json!([4, 0]));
    assert_eq!(v["multiplicity"], 4);
}

#[test]
fn terminal_and_invariants() {
    let s = stdout(&fanoforge(&["terminal", "1/7(1,2,6)", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!((v["isolated"].clone(), v["terminal"].clone()), (true.into(), true.into()));
    let s = stdout(&fanoforge(&["invariants", "2", "2", "2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["link"]["label"], "A.4");
    assert_eq!(v["link"]["B3"], "3/5");
    assert_eq!(v["link"]["grdb"], 41200);
    let s = stdout(&fanoforge(&["invariants", "2", "2", "4", "--format", "json"]));
    assert!(s.contains("\"link\": null"));
}

#[test]
fn hilbert_subcommands() {
    let s = stdout(&fanoforge(&["hilbert", "wps", "1", "1", "1", "2", "--terms", "4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["expansion"], serde_json::json!(["1", "3", "7", "13"]));
    let s = stdout(&fanoforge(&["hilbert", "icecream", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["expansion"][1], "3");
    let a = stdout(&fanoforge(&["hilbert", "lemma1", "3", "1", "1", "--terms", "20"]));
    let b = stdout(&fanoforge(&["hilbert", "hypersurface", "3", "1", "1", "1", "2", "1", "--terms", "20"]));
    let exp = |s: &str| s.lines().find(|l| l.starts_with("expansion")).map(str::to_string);
    assert_eq!(exp(&a), exp(&b));
}

#[test]
fn expand_is_canonical() {
    let once = stdout(&fanoforge(&["expand", "(x - y)*(x + y) + 1/2*y^2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&once).unwrap();
    let p = v["poly"].as_str().unwrap().to_string();
    assert_eq!(p, "x^2 - 1/2*y^2");
    let twice = stdout(&fanoforge(&["expand", &p, "--format", "json"]));
    assert_eq!(once, twice);
}

#[test]
fn pfaffian_matrix_round_trip() {
    let a = fanoforge(&["pfaffians", "--family", "tom", "--seed", "3", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let matrix = serde_json::json!({ "entries": v["entries"], "pattern": v["pattern"] });
    let mut child = Command::new(env!("CARGO_BIN_EXE_fanoforge"))
        .args(["pfaffians", "--input", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(matrix.to_string().as_bytes()).unwrap();
    let b = child.wait_with_output().unwrap();
    let w: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(v["pfaffians"], w["pfaffians"]);
}

#[test]
fn moduli_table() {
    let s = stdout(&fanoforge(&["moduli", "--format", "csv"]));
    assert_eq!(s.lines().count(), 4);
    assert!(s.lines().nth(1).unwrap().ends_with(",36,T,37"));
}
