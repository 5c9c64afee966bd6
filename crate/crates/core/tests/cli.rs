use std::process::{Command, Output};

use serde_json::Value;

fn indecomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indecomp"))
        .args(args)
        .env_remove("INDECOMP_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = indecomp(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn keys(v: &Value) -> Vec<&str> {
    v.as_object().unwrap().keys().map(String::as_str).collect()
}

fn code(args: &[&str]) -> Option<i32> {
    indecomp(args).status.code()
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["classify-field", "--p", "3", "--r", "2"]),
        "indecomposable: F_9\n"
    );
    assert_eq!(code(&["classify-field", "--p", "4", "--r", "1"]), Some(1));
    let z33 = json(&["classify-ring", "Z/3 * Z/3"]);
    assert_eq!(z33["units_indecomposable"], false);
    assert_eq!(
        z33["unit_group"]["invariant_factors"],
        serde_json::json!([2, 2])
    );
    assert!(stdout(&["classify-ring", "Z/3 * Z/3"]).contains("units indecomposable: false"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&[]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["scan-fields", "--max", "100", "--bogus"]), Some(1));
    assert_eq!(code(&["classify-ring", "Z/4["]), Some(1));
    assert_eq!(
        code(&["--workers", "0", "scan-fields", "--max", "10"]),
        Some(1)
    );
    assert_eq!(code(&["scan-fields", "--max", "1"]), Some(1));
    assert_eq!(code(&["bang", "--a", "2", "--t", "6"]), Some(1));
    assert_eq!(code(&["scan-fields", "--max", "2000000000000"]), Some(2));
    assert_eq!(
        code(&["--cap", "10", "unit-group", "Z/16", "--bruteforce"]),
        Some(2)
    );
    assert_eq!(
        code(&["--factor-bound", "32", "bang", "--a", "10", "--t", "20"]),
        Some(2)
    );
    let err = indecomp(&["classify-ring", "Z/4["]);
    assert!(err.stdout.is_empty());
    assert!(String::from_utf8(err.stderr).unwrap().starts_with("error"));
}

#[test]
fn underscored_numbers_and_env_workers() {
    assert_eq!(
        stdout(&["scan-fields", "--max", "1_000"]),
        stdout(&["scan-fields", "--max", "1000"])
    );
    let out = Command::new(env!("CARGO_BIN_EXE_indecomp"))
        .args(["--format", "json", "scan-fields", "--max", "100"])
        .env("INDECOMP_WORKERS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["workers"], 3);
}

#[test]
fn scan_schemas() {
    let cases: [(&[&str], &str, &[&str]); 4] = [
        (
            &["scan-fields", "--max", "1000"],
            "indecomposable_fields",
            &[],
        ),
        (
            &["scan-catalan", "--max", "1000"],
            "catalan",
            &["x", "u", "y", "v"],
        ),
        (
            &["scan-prime-power-pairs", "--max", "1000"],
            "consecutive_prime_powers",
            &["a", "b", "a_prime", "a_exponent", "b_prime", "b_exponent"],
        ),
        (
            &["bang-scan", "--a-max", "5", "--t-max", "5"],
            "bang",
            &["a", "t", "witness"],
        ),
    ];
    for (args, kind, item_keys) in cases {
        let v = json(args);
        assert_eq!(
            keys(&v),
            ["kind", "bound", "findings", "elapsed_ms", "workers"]
        );
        assert_eq!(v["kind"], kind);
        assert!(
            v["bound"].is_u64() && v["elapsed_ms"].is_u64() && v["workers"].as_u64() >= Some(1)
        );
        let findings = v["findings"].as_array().unwrap();
        assert!(!findings.is_empty());
        for f in findings {
            if item_keys.is_empty() {
                assert!(f.is_u64());
            } else {
                assert_eq!(keys(f), item_keys);
                assert!(f.as_object().unwrap().values().all(Value::is_u64));
            }
        }
    }
}

#[test]
fn other_schemas() {
    let field = json(&["classify-field", "--p", "2", "--r", "3"]);
    assert_eq!(keys(&field), ["p", "r", "order", "indecomposable", "class"]);
    assert_eq!(field["indecomposable"], true);
    let ring = json(&["classify-ring", "Z/4[x]/(2x,x^2-2)"]);
    assert_eq!(
        keys(&ring),
        [
            "ring",
            "unit_group",
            "unit_order",
            "ring_indecomposable",
            "units_indecomposable",
            "matched_case"
        ]
    );
    assert_eq!(ring["unit_order"], 4);
    assert!(ring["matched_case"].is_string());
    assert!(json(&["classify-ring", "Z/15"])["matched_case"].is_null());
    for method in ["--structural", "--bruteforce"] {
        let g = json(&["unit-group", "GF(4)[x]/(x^2)", method]);
        assert_eq!(
            g["unit_group"]["invariant_factors"],
            serde_json::json!([2, 6])
        );
    }
    let bang = json(&["bang", "--a", "3", "--t", "4"]);
    assert_eq!(keys(&bang), ["a", "t", "witness"]);
    assert_eq!(bang["witness"], 5);
    let big = json(&["bang", "--a", "10", "--t", "37"]);
    assert!(big["witness"].is_u64() || big["witness"].is_string());
    let tower = json(&["tower", "--q", "2", "--p", "3"]);
    assert_eq!(
        keys(&tower),
        ["q", "p", "i", "n_i", "value", "class", "steps"]
    );
    assert_eq!(
        (tower["i"].as_u64(), tower["value"].as_str()),
        (Some(2), Some("63"))
    );
    let ff = json(&["ffactor", "x^3 + x"]);
    assert_eq!(keys(&ff), ["polynomial", "factors"]);
    assert_eq!(ff["factors"][1]["exponent"], 2);
    let norm = json(&["norm", "--field", "GF(3^2)", "--elem", "0,1"]);
    assert_eq!(
        keys(&norm),
        [
            "field",
            "base_order",
            "degree",
            "modulus",
            "element",
            "norm"
        ]
    );
}

#[test]
fn text_and_json_agree() {
    let fields = json(&["scan-fields", "--max", "100000"]);
    let listed: Vec<String> = fields["findings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let text = stdout(&["scan-fields", "--max", "100000"]);
    assert_eq!(text.lines().nth(1).unwrap(), listed.join(", "));

    let pairs = json(&["scan-prime-power-pairs", "--max", "100000"]);
    let text = stdout(&["scan-prime-power-pairs", "--max", "100000"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    let found = pairs["findings"].as_array().unwrap();
    assert_eq!(rows.len(), found.len());
    for (row, f) in rows.iter().zip(found) {
        assert!(
            row.starts_with(&format!("({}, {})", f["a"], f["b"])),
            "{row}"
        );
    }

    let catalan = json(&["scan-catalan", "--max", "1000000"]);
    let c = &catalan["findings"][0];
    let text = stdout(&["scan-catalan", "--max", "1000000"]);
    assert_eq!(
        text.lines().nth(1).unwrap(),
        format!("{}^{} - {}^{} = 1", c["x"], c["u"], c["y"], c["v"])
    );

    let ring = json(&["unit-group", "Z/4 * GF(8)"]);
    let text = stdout(&["unit-group", "Z/4 * GF(8)"]);
    assert_eq!(
        text.trim_end(),
        format!("units of Z/4 * GF(8): C_14 (order {})", ring["unit_order"])
    );

    let bang = json(&["bang-scan", "--a-max", "4", "--t-max", "4"]);
    let text = stdout(&["bang-scan", "--a-max", "4", "--t-max", "4"]);
    for (row, f) in text
        .lines()
        .skip(1)
        .zip(bang["findings"].as_array().unwrap())
    {
        assert_eq!(row, format!("{}^{} - 1: {}", f["a"], f["t"], f["witness"]));
    }
}

fn strip_run_info(mut v: Value) -> Value {
    let obj = v.as_object_mut().unwrap();
    obj.remove("elapsed_ms");
    obj.remove("workers");
    v
}

#[test]
fn output_is_deterministic() {
    let runs: [&[&str]; 5] = [
        &["classify-ring", "Z/8 * GF(9) * Z/4[x]/(2x,x^2-2)"],
        &["tower", "--q", "3", "--p", "2"],
        &["bang-scan", "--a-max", "8", "--t-max", "8"],
        &["ffactor", "x^12 + x^7 + x + 1"],
        &["norm", "--field", "GF(4^3)", "--elem", "1,0,1"],
    ];
    for args in runs {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        assert_eq!(stdout(&full), stdout(&full), "{args:?}");
    }
    for scan in [
        ["scan-fields", "--max", "200000"],
        ["scan-catalan", "--max", "10000000"],
    ] {
        let one = json(&[&["--workers", "1"], &scan[..]].concat());
        let eight = json(&[&["--workers", "8"], &scan[..]].concat());
        assert_eq!(
            strip_run_info(one).to_string(),
            strip_run_info(eight).to_string()
        );
        let text1 = stdout(&[&["--workers", "1"], &scan[..]].concat());
        let text8 = stdout(&[&["--workers", "8"], &scan[..]].concat());
        assert_eq!(text1, text8);
    }
}
