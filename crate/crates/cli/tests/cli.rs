use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const THREE_GENERATORS: &str = "vars: x,y,z; x^2*y, y^2*z, z^2";
const FIVE_BAND: &str = "vars: x,y,z,w,u; x^2*y*z, y^2*z*w, z^2*w*u, w^2*u, u^2";

fn monres(args: &[&str], stdin: &str) -> Output {
    monres_env(args, stdin, &[])
}

fn monres_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monres"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = monres(&all, stdin);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn poincare_prints_formula_and_reduced_series() {
    let o = monres(&["poincare", "--order", "4"], THREE_GENERATORS);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "(1+z)^3 / (1 - 3*z^2 - 2*z^3)\n= (1+z) / (1 - 2*z)\ncoefficients: 1, 3, 6, 12, 24\n"
    );
}

#[test]
fn json_report_shape_and_round_trip() {
    let v = json(&["poincare"], "x^2*y\ny^2*z, z^2  # comment\n");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], serde_json::json!(["--json", "poincare"]));
    let echoed = v["ideal"].as_str().unwrap();
    assert_eq!(echoed, THREE_GENERATORS);
    let again = json(&["parse"], echoed);
    assert_eq!(again["ideal"], echoed);
    assert!(v.get("timing_ms").is_none());
    assert_eq!(
        v["result"]["formula"]["denominator"],
        serde_json::json!([1, 0, -3, -2])
    );
}

#[test]
fn output_is_deterministic() {
    let a = monres(&["--json", "corpus", "--seed", "9", "--count", "12"], "");
    let b = monres(
        &[
            "--json",
            "corpus",
            "--seed",
            "9",
            "--count",
            "12",
            "--sequential",
        ],
        "",
    );
    assert_eq!(a.status.code(), Some(0));
    let (va, vb): (Value, Value) = (
        serde_json::from_slice(&a.stdout).unwrap(),
        serde_json::from_slice(&b.stdout).unwrap(),
    );
    assert_eq!(va["result"], vb["result"]);
    assert_eq!(va["result"]["failed"], 0);
}

#[test]
fn hilbert_warns_about_reference_split() {
    let o = monres(&["hilbert"], FIVE_BAND);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 + 5*X*Y + 7*X*Y^2 + 3*X^2*Y^2 + 8*X*Y^3"));
    assert!(stderr(&o).contains("b3 = 42"));
    let v = json(&["hilbert"], FIVE_BAND);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    assert!(json(&["hilbert"], THREE_GENERATORS)["warnings"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn polarize_emits_slot_map() {
    let v = json(&["polarize"], "vars: x1,x2,x3; x1^3, x2^2*x3, x1*x2*x3");
    assert_eq!(
        v["result"]["target"],
        "vars: y1,y2,y3,y4,y5,y6; y1*y2*y3, y4*y5*y6, y1*y4*y6"
    );
    assert_eq!(v["result"]["N"], 6);
    assert_eq!(
        v["result"]["slots"][1]["targets"],
        serde_json::json!(["y4", "y5"])
    );
}

#[test]
fn verify_exit_codes() {
    let o = monres(&["verify", "--q", "2", "--order", "6"], "x^2, y^2, z^3");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("all routes agree"));
    let o = monres(&["verify"], "x^2, x*y, y^2");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not minimal"));
}

#[test]
fn input_errors_exit_one() {
    let o = monres(&["parse"], "vars: x; x*w");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown variable `w` at line 1, column 12"));
    assert_eq!(monres(&["parse"], "1").status.code(), Some(1));
    assert_eq!(
        monres(&["poincare", "--bogus"], "x^2").status.code(),
        Some(1)
    );
    assert_eq!(monres(&["power"], "x^2").status.code(), Some(1));
}

#[test]
fn lattice_cap_from_environment() {
    let o = monres_env(&["hilbert"], THREE_GENERATORS, &[("MONRES_MAX_T", "2")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("MONRES_MAX_T"));
    let o = monres_env(&["hilbert"], THREE_GENERATORS, &[("MONRES_MAX_T", "lots")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_reports_truncation() {
    let v = json(
        &["oracle", "--hdeg", "4", "--maxdeg", "6"],
        THREE_GENERATORS,
    );
    assert_eq!(v["result"]["totals"], serde_json::json!([1, 3, 6, 12, 24]));
    assert_eq!(
        v["result"]["exact"],
        serde_json::json!([true, true, true, true, false])
    );
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    let v = json(&["oracle", "--hdeg", "4"], THREE_GENERATORS);
    assert_eq!(v["result"]["max_internal"], 7);
    assert!(v["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn classify_reports_decomposition() {
    let v = json(&["classify"], "x1^2, x1*x2, x1*x4, x3^2, x5^2");
    let factors = v["result"]["tensor_factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
    assert_eq!(factors[0]["verdict"], "TriviallyGolod");
    let v = json(&["classify"], FIVE_BAND);
    assert_eq!(v["result"]["d_window"]["d"], 3);
    assert_eq!(v["result"]["d_window"]["window_gcd_d_plus_1"], false);
}

#[test]
fn taylor_and_minimal() {
    let o = monres(&["taylor", "--differential", "3"], THREE_GENERATORS);
    assert_eq!(
        stdout(&o),
        "ranks: 1, 3, 3, 1\nminimal: yes\nd_3: 3 x 1\n  row {2,3} col {1,2,3}: +x^2\n  row {1,3} col {1,2,3}: -y\n  row {1,2} col {1,2,3}: +z\n"
    );
    let v = json(&["minimal"], "x^2, x*y, y^2");
    assert_eq!(
        v["result"]["witness"]["subset"],
        serde_json::json!([1, 2, 3])
    );
    assert_eq!(v["result"]["witness"]["removed"], 2);
    assert_eq!(
        monres(&["taylor", "--differential", "4"], THREE_GENERATORS)
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn partitions_listing() {
    let o = monres(&["partitions", "--t", "3", "--d", "2"], "");
    assert_eq!(stdout(&o), "1 + 3*X*Y + 2*X*Y^2 + X^2*Y^2 + X*Y^3\n");
    let v = json(&["partitions", "--t", "5", "--d", "2", "--weights"], "");
    let row = v["result"]["weights"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["weight"] == serde_json::json!([1, 1]))
        .unwrap()
        .clone();
    assert_eq!(
        (row["count"].clone(), row["closed_form"].clone()),
        (6.into(), 6.into())
    );
}

#[test]
fn reduce_and_power() {
    assert_eq!(
        stdout(&monres(&["reduce"], "vars: a,b,c,d; a, b^2, b*c")),
        "vars: b,c; b^2, b*c\nunused variables dropped: 1\nlinear generators dropped: 1\n"
    );
    assert_eq!(
        stdout(&monres(&["power", "-q", "3"], "x*y, z^2")),
        "vars: x,y,z; x^3*y^3, z^6\n"
    );
}
