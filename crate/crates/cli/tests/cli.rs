use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn satake(args: &[&str], stdin: Option<&str>) -> (Value, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let Output { status, stdout, .. } = child.wait_with_output().unwrap();
    let v = serde_json::from_slice(&stdout).unwrap_or(Value::Null);
    (v, status.code().unwrap())
}

#[test]
fn igusa_of_the_reference_curve() {
    let (v, code) = satake(&["igusa", "--rosenhain", "2,3,5"], None);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["I2"], "550");
    assert_eq!(v["I4"], "8272");
    assert_eq!(v["I6"], "1399200");
    assert_eq!(v["I10"], "2073600");
    assert_eq!(v["siegel"]["chi10"], "-2025/16");
}

#[test]
fn rational_flags_and_negative_values() {
    let (v, code) = satake(&["igusa", "--rosenhain", "-1,2,-2"], None);
    assert_eq!(code, 0, "{v}");
    let (w, _) = satake(&["igusa", "--rosenhain", "1/2,7/3,-4"], None);
    assert_eq!(w["status"], "ok");
}

#[test]
fn alternate_fibration_census() {
    let (v, code) = satake(
        &["fibration", "--model", "alternate", "--rosenhain", "2,3,5"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["euler_sum"], 24);
    let types: Vec<&str> = v["fibers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["type"].as_str().unwrap())
        .collect();
    assert!(types.contains(&"I10*"));
    assert_eq!(types.iter().filter(|t| **t == "I1").count(), 6);
}

#[test]
fn every_model_has_euler_sum_24() {
    for m in [
        "kummer1",
        "kummer23",
        "alternate",
        "alternate-ftheory",
        "standard",
    ] {
        let (v, code) = satake(&["fibration", "--model", m, "--rosenhain", "2,3,5"], None);
        assert_eq!(code, 0, "{m}: {v}");
        assert_eq!(v["euler_sum"], 24, "{m}");
    }
}

#[test]
fn fibration_needs_a_model() {
    let (v, code) = satake(&["fibration", "--rosenhain", "2,3,5"], None);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "schema");
}

#[test]
fn roundtrip_within_tolerance() {
    let (v, code) = satake(
        &["roundtrip", "--rosenhain", "2,3,5", "--tol", "1e-8"],
        None,
    );
    assert_eq!(code, 0);
    assert!(v["max_rel_err"].as_f64().unwrap() < 1e-8);
}

#[test]
fn unreachable_tolerance_is_a_violation() {
    let (v, code) = satake(
        &["roundtrip", "--rosenhain", "2,3,5", "--tol", "1e-30"],
        None,
    );
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "identity_violation");
}

#[test]
fn batch_from_stdin_keeps_order() {
    let input = r#"[{"rosenhain": [2, 3, 5]}, {"rosenhain": ["1/2", "7/3", -4]}, {"igusa": [550, 8272, 1399200, 2073600]}]"#;
    let (v, code) = satake(&["igusa"], Some(input));
    assert_eq!(code, 0);
    let rs = v["results"].as_array().unwrap();
    assert_eq!(rs.len(), 3);
    assert_eq!(rs[0]["I2"], rs[2]["I2"]);
    assert_eq!(rs[0]["I10"], "2073600");
    assert_ne!(rs[1]["I2"], "550");
}

#[test]
fn batch_exit_code_is_the_worst() {
    let input = r#"[{"rosenhain": [2, 3, 5]}, {"igusa": ["1", "2"]}]"#;
    let (v, code) = satake(&["igusa"], Some(input));
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["status"], "ok");
    assert_eq!(v["results"][1]["error"]["pointer"], "/1/igusa");
}

#[test]
fn schema_errors_carry_a_pointer() {
    let (v, code) = satake(&["igusa"], Some(r#"{"rosenhain": [2, 3.5, 5]}"#));
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "schema");
    assert_eq!(v["error"]["pointer"], "/rosenhain/1");

    let (v, code) = satake(&["igusa"], Some(r#"{"rosenhain": [2, 3, 5], "colour": 1}"#));
    assert_eq!(code, 1);
    assert_eq!(v["error"]["pointer"], "/colour");

    let (_, code) = satake(&["igusa"], Some("not json"));
    assert_eq!(code, 1);
}

#[test]
fn bad_arguments_exit_1() {
    let (_, code) = satake(&["bogus"], None);
    assert_eq!(code, 1);
    let (_, code) = satake(&["igusa", "--rosenhain", "2,x,5"], None);
    assert_eq!(code, 1);
    let (_, code) = satake(&["--help"], None);
    assert_eq!(code, 0);
}

#[test]
fn phi_off_its_domain_exits_2() {
    let (v, code) = satake(&["phi", "--sextic", "-36,0,49,0,-14,0,1"], None);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "domain");
    let (v, code) = satake(&["igusa", "--rosenhain", "2,2,5"], None);
    assert_eq!(code, 0);
    assert_eq!(v["degenerate"], true);
    let (_, code) = satake(&["phi", "--rosenhain", "2,2,5"], None);
    assert_eq!(code, 2);
}

#[test]
fn phi_of_the_reference_curve() {
    let (v, code) = satake(&["phi", "--rosenhain", "2,3,5"], None);
    assert_eq!(code, 0);
    assert!(v["N"].is_string() && v["N_squared"].is_string());
}

#[test]
fn corrupted_claim_exits_3() {
    let (ok, code) = satake(&["satake-sextic", "--rosenhain", "2,3,5"], None);
    assert_eq!(code, 0);
    let coeffs: Vec<String> = ok["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    let (v, code) = satake(
        &[
            "satake-sextic",
            "--rosenhain",
            "2,3,5",
            "--claim",
            &coeffs.join(","),
        ],
        None,
    );
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["claim_verified"], true);

    let mut bad = coeffs;
    bad[0] = "1".into();
    let (v, code) = satake(
        &[
            "satake-sextic",
            "--rosenhain",
            "2,3,5",
            "--claim",
            &bad.join(","),
        ],
        None,
    );
    assert_eq!(code, 3, "{v}");
    assert_eq!(v["error"]["kind"], "identity_violation");
}

#[test]
fn corrupted_theta_values_exit_3() {
    let (good, code) = satake(&["theta", "--tau", "0,1.1,0.1,0.2,0.3,1.3"], None);
    assert_eq!(code, 0);
    assert!(good["frobenius"]["max_residual"].as_f64().unwrap() < 1e-10);

    let mut vals: Vec<String> = Vec::new();
    for (i, c) in good["theta"].as_array().unwrap().iter().enumerate() {
        let mut re = c[0].as_f64().unwrap();
        if i == 3 {
            re *= 1.01;
        }
        vals.push(re.to_string());
        vals.push(c[1].as_f64().unwrap().to_string());
    }
    let (v, code) = satake(&["theta", "--theta-values", &vals.join(",")], None);
    assert_eq!(code, 3, "{v}");
}

#[test]
fn output_is_deterministic() {
    let args = ["fibration", "--model", "kummer23", "--rosenhain", "2,3,5"];
    let a = Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .output()
        .unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("satake-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (v, code) = satake(&["predicates", "--rosenhain", "2,3,5", "--out", p], None);
    assert_eq!(code, 0);
    assert_eq!(v, Value::Null);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["command"], "predicates");
    assert_eq!(written["su2_enhancement"], false);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn input_file_matches_flags() {
    let path = std::env::temp_dir().join(format!("satake-in-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"rosenhain": [2, 3, 5]}"#).unwrap();
    let (a, _) = satake(&["igusa", "--input", path.to_str().unwrap()], None);
    let (b, _) = satake(&["igusa", "--rosenhain", "2,3,5"], None);
    assert_eq!(a, b);
    std::fs::remove_file(path).unwrap();
}
