use std::process::{Command, Output};

fn hca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hca")).args(args).output().expect("run hca")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_compact_scalars_and_blade_sums() {
    let o = hca(&["eval", "t1*e1 + e1*t1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
    assert_eq!(stdout(&hca(&["eval", "e1^t1 - 0.5*e2"])), "-0.5000 e2 + 1.0000 e1^t1\n");
    assert_eq!(stdout(&hca(&["--dim", "1", "eval", "hodge(sigma)"])), "-1\n");
}

#[test]
fn errors_exit_with_two() {
    let o = hca(&["eval", "e3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert_eq!(hca(&["eval", "e1 +"]).status.code(), Some(2));
    assert_eq!(hca(&["check", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(hca(&["curvature", "--point", "4, 0"]).status.code(), Some(2));
    assert_eq!(hca(&["--dim", "0", "basis"]).status.code(), Some(2));
    assert_eq!(hca(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn failing_suite_exits_with_one() {
    let o = hca(&["check", "--suite", "hyperbolic", "--dim", "2", "--cases", "3", "--tol=-1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_json_schema() {
    let o = hca(&["--json", "eval", "2*t1 + e1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 2);
    let blades = v["blades"].as_array().unwrap();
    assert_eq!(blades.len(), 2);
    assert_eq!(blades[0]["mask"], 1);
    assert_eq!(blades[0]["coeff"], 1.0);
    assert_eq!(blades[1]["mask"], 4);
    assert_eq!(blades[1]["coeff"], 2.0);
}

#[test]
fn check_json_reports_properties() {
    let o = hca(&["--json", "check", "--suite", "duality", "--dim", "2", "--cases", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "duality");
    assert_eq!(v["seed"], 7);
    assert!(v["failures"].as_array().unwrap().is_empty());
    assert!(!v["properties"].as_array().unwrap().is_empty());
}

#[test]
fn curvature_on_the_sphere() {
    let o = hca(&["curvature", "--preset", "sphere", "--point", "pi/2, 0.3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rho(d1,d2,d2) = [1.0000, 0.0000]"));
    let o = hca(&["--json", "curvature", "--point", "pi/2,0.3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["preset"], "sphere");
    let custom = hca(&[
        "curvature",
        "--preset",
        "custom",
        "--coefficients",
        "122 = -sin(x1)*cos(x1); 212 = cos(x1)/sin(x1); 221 = cos(x1)/sin(x1)",
        "--point",
        "pi/2, 0.3",
    ]);
    assert_eq!(custom.status.code(), Some(0), "{}", String::from_utf8_lossy(&custom.stderr));
    let sphere = hca(&["curvature", "--point", "pi/2, 0.3"]);
    let body = |o: &Output| stdout(o).lines().skip(1).map(String::from).collect::<Vec<_>>();
    assert_eq!(body(&custom), body(&sphere));
}

#[test]
fn basis_lists_both_halves() {
    let out = stdout(&hca(&["--dim", "2", "basis"]));
    assert!(out.contains("e1 e2 t1 t2"), "{out}");
    assert!(out.contains("<s3,s3> = -1"), "{out}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["--json", "check", "--suite", "all", "--dim", "2", "--cases", "10", "--seed", "11"];
    let (a, b) = (hca(&args), hca(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(hca(&["eval", "hodge(e1^t2) * sigma"]).stdout, hca(&["eval", "hodge(e1^t2) * sigma"]).stdout);
}
