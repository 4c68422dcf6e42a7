use std::process::{Command, Output};

use serde_json::Value;

fn landen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_landen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = landen(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().expect("exit code"))
}

fn significant_digits(s: &str) -> usize {
    let mantissa = s.split('e').next().unwrap();
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    digits.trim_start_matches('0').len()
}

#[test]
fn quartic_power_nine_closed_form() {
    let (v, code) = json(&[
        "integrate",
        "--num",
        "0,1",
        "--den",
        "1,4,1",
        "--power",
        "9",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["closed_form"], "23698523*pi/(12230590464*sqrt(6))");
    assert_eq!(v["method"], "closed-form");
    let d = v["decimal"].as_str().unwrap();
    assert!(d.starts_with("0.00248512422504878256637"), "{d}");
    assert_eq!(significant_digits(d), 50);
}

#[test]
fn record_has_stable_field_order() {
    let out = landen(&["integrate", "--den", "1,1", "--digits", "12"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let keys = [
        "\"command\"",
        "\"closed_form\"",
        "\"decimal\"",
        "\"digits\"",
        "\"method\"",
        "\"iterations\"",
        "\"L\"",
        "\"status\"",
    ];
    let pos: Vec<usize> = keys
        .iter()
        .map(|k| s.find(k).unwrap_or_else(|| panic!("{k} missing in {s}")))
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
    assert_eq!(
        s,
        String::from_utf8(landen(&["integrate", "--den", "1,1", "--digits", "12"]).stdout).unwrap()
    );
}

#[test]
fn degree_six_trajectory_table() {
    let out = landen(&[
        "landen",
        "--num",
        "1230,25000,45",
        "--den",
        "1,3000,1,1",
        "--format",
        "table",
        "--digits",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = [
        "0 1 3000 45 25000 1230",
        "1 0.415786 14.4465 126.233 63.2884 88.3741",
        "2 2.06562 3.17262 42.2607 156.015 83.6896",
        "3 2.98142 3.00338 75.3541 137.717 65.1111",
        "4 2.99999 3 69.6338 139.925 70.2771",
        "5 3 3 69.9589 139.914 69.9555",
        "6 3 3 69.9572 139.914 69.9572",
        "7 3 3 69.9572 139.914 69.9572",
    ];
    let rows: Vec<String> = text
        .lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect();
    for row in expected {
        assert!(rows.iter().any(|r| r == row), "missing {row:?} in\n{text}");
    }
    assert!(text.contains("109.888506328"), "{text}");
    assert!(text.contains("converged"), "{text}");
}

#[test]
fn degree_six_json_record() {
    let (v, code) = json(&[
        "landen",
        "--num",
        "1230,25000,45",
        "--den",
        "1,3000,1,1",
        "--digits",
        "20",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "converged");
    let l: f64 = v["L"].as_str().unwrap().parse().unwrap();
    assert!((l - 69.9572).abs() < 5e-5);
    let traj = v["trajectory"].as_array().unwrap();
    assert_eq!(traj.len(), v["iterations"].as_u64().unwrap() as usize + 1);
    assert_eq!(traj[0][1], "3000.0000000000000000");
}

#[test]
fn octic_classifies_to_sym8_base() {
    let (v, code) = json(&[
        "classify",
        "--den",
        "1,5,14,5,1",
        "--power",
        "4",
        "--num",
        "1",
        "--digits",
        "20",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "ClosedForm");
    assert_eq!(v["path"], serde_json::json!(["Sym8Base"]));
    assert_eq!(v["decimal"], "0.19874620328126328094");
}

#[test]
fn reduce_round_trips_through_integrate() {
    let den = "1,1,1,115,20,115,1,1,1";
    let (r, code) = json(&["reduce", "--num", "0,0,1", "--den", den, "--power", "2"]);
    assert_eq!(code, 0);
    let join = |k: &str| {
        r[k].as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap())
            .collect::<Vec<_>>()
            .join(",")
    };
    let power = r["power"].to_string();
    let (a, _) = json(&[
        "integrate",
        "--num",
        "0,0,1",
        "--den",
        den,
        "--power",
        "2",
        "--digits",
        "30",
    ]);
    let (b, _) = json(&[
        "integrate",
        "--num",
        &join("numerator"),
        "--den",
        &join("denominator"),
        "--power",
        &power,
        "--digits",
        "30",
    ]);
    assert_eq!(a["decimal"], b["decimal"]);
    assert!(a["decimal"]
        .as_str()
        .unwrap()
        .starts_with("0.002507231847943"));
}

#[test]
fn numeric_only_falls_back() {
    // Non-palindromic, no rational root: nothing closes exactly.
    let (v, code) = json(&[
        "integrate",
        "--num",
        "3,1,1",
        "--den",
        "1,2,5,1",
        "--digits",
        "25",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["method"], "landen");
    assert_eq!(v["closed_form"], Value::Null);
    let (q, _) = json(&[
        "integrate",
        "--num",
        "3,1,1",
        "--den",
        "2,4,10,2",
        "--digits",
        "25",
    ]);
    assert_eq!(q["method"], "quadrature");
    let twice: f64 = q["decimal"].as_str().unwrap().parse().unwrap();
    let once: f64 = v["decimal"].as_str().unwrap().parse().unwrap();
    assert!((2.0 * twice - once).abs() < 1e-14 * once);
}

#[test]
fn family_matrices() {
    let (v, code) = json(&["family", "--p", "4"]);
    assert_eq!(code, 0);
    let f = &v["family"];
    assert_eq!(f["free"], serde_json::json!([3, 4]));
    assert_eq!(f["offset"], serde_json::json!(["15", "112"]));
    assert_eq!(f["matrix"], serde_json::json!([["3", "-8"], ["-4", "7"]]));
    assert_eq!(json(&["family", "--p", "6"]).1, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(
        landen(&["integrate", "--den", "1,zz"]).status.code(),
        Some(1)
    );
    assert_eq!(landen(&["integrate"]).status.code(), Some(1));
    assert_eq!(
        landen(&["integrate", "--den", "1,1", "--digits", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        landen(&["integrate", "--den", "1,-3,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        landen(&["landen", "--den", "1,4,1", "--power", "2"])
            .status
            .code(),
        Some(2)
    );
    let (v, code) = json(&[
        "landen",
        "--num",
        "1230,25000,45",
        "--den",
        "1,3000,1,1",
        "--max-iter",
        "2",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "max-iterations");
    assert_eq!(v["iterations"], 2);
    assert!(v["decimal"].is_string());
    assert_eq!(landen(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_suites_pass() {
    let (v, code) = json(&["verify", "--seed", "7"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["status"], "pass");
    let suites = v["suites"].as_array().unwrap();
    assert!(suites.len() >= 5);
    assert!(suites
        .iter()
        .all(|s| s["failed"] == 0 && s["passed"].as_u64().unwrap() > 0));
}
