use std::fs;
use std::process::Command;

use serde_json::Value;

fn lipsat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lipsat"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json_of(args: &[&str]) -> (i32, Value, String) {
    let (code, stdout, _) = lipsat(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    (code, v, stdout)
}

#[test]
fn hypersurface_example_json() {
    let (code, v, _) = json_of(&[
        "saturate", "hypersurface", "--alpha", "3", "--beta", "11", "--bigN", "5", "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    let r = &v["result"];
    let gens: Vec<Vec<u64>> = serde_json::from_value(r["min_gens"].clone()).unwrap();
    let mut expected = vec![vec![1, 0], vec![3, 11], vec![3, 12], vec![3, 13], vec![3, 14], vec![0, 5]];
    expected.sort();
    assert_eq!(gens, expected);
    assert_eq!(r["multiplicity"], 5);
    assert_eq!(r["edim"], 6);
    assert_eq!(r["t_saturation"], serde_json::json!([5, 11, 12, 13, 14]));
}

#[test]
fn curve_example_text() {
    let (code, stdout, _) = lipsat(&["saturate", "curve", "--supports", "6;9,11;9,11"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("τ ↦ (τ⁶, τ⁹, τ¹¹, τ¹³, τ¹⁴, τ¹⁶)"), "{stdout}");
    assert!(stdout.contains("characteristic exponents: 6, 9, 11"));
}

#[test]
fn product_example_text() {
    let (code, stdout, _) = lipsat(&["saturate", "product", "--curve", "4;6;7", "--curve", "6;9;11"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("(u,v) ↦ (u⁴, u⁶, u⁷, u⁹, v⁶, v⁹, v¹¹, v¹³, v¹⁴, v¹⁶)"), "{stdout}");
    assert!(stdout.contains("multiplicity 24, embedding dimension 10"));
}

#[test]
fn axis_certificate() {
    let (code, v, _) = json_of(&[
        "certify", "hypersurface", "--alpha", "3", "--beta", "11", "--bigN", "5", "--point", "0,7",
        "--json",
    ]);
    assert_eq!(code, 0);
    let c = &v["result"]["certificate"];
    assert_eq!(c["ord_target"], 7);
    assert_eq!(c["ord_ideal"], 8);
    assert_eq!(c["verdict"], true);
    assert_eq!(v["result"]["family"], "axis");
}

#[test]
fn member_point_is_invalid_input() {
    let (code, v, _) = json_of(&[
        "certify", "hypersurface", "--alpha", "3", "--beta", "11", "--bigN", "5", "--point", "3,11",
        "--json",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "invalid_input");
    assert_eq!(v["error"]["code"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(lipsat(&["saturate", "hypersurface", "--alpha", "3", "--beta", "10", "--bigN", "5"]).0, 1);
    assert_eq!(lipsat(&["saturate", "curve", "--supports", "4;6"]).0, 1);
    assert_eq!(lipsat(&["semigroup", "mult", "--gens", "1,0,0;0,1,1;0,0,1"]).0, 2);
    assert_eq!(lipsat(&["semigroup", "gaps", "--gens", "1,0;0,1"]).0, 2);
    assert_eq!(
        lipsat(&["ideal", "generators", "--gens", "1;2;3;4;5;6;7;8;9;10;11;12", "--degree-bound", "12"]).0,
        2
    );
    assert_eq!(lipsat(&["semigroup", "contains", "--gens", "2;3", "--point", "x"]).0, 1);
    assert_eq!(lipsat(&["bogus"]).0, 1);
    let (code, _, stderr) = lipsat(&["semigroup", "mingens", "--gens", "0,0"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error: invalid_input"), "{stderr}");
}

#[test]
fn semigroup_reports() {
    let (_, stdout, _) = lipsat(&["semigroup", "hull", "--gens", "1,0;1,1;0,2"]);
    assert!(stdout.contains("outside K₊: (0,1)"), "{stdout}");
    let (_, v, _) = json_of(&["semigroup", "contains", "--gens", "1,0;1,1;0,2", "--point", "0,1", "--json"]);
    assert_eq!(v["result"]["contains"], false);
    let (_, v, _) = json_of(&["semigroup", "gaps", "--gens", "3;5", "--json"]);
    assert_eq!(v["result"]["gaps"], serde_json::json!([1, 2, 4, 7]));
    assert_eq!(v["result"]["frobenius"], 7);
    let (_, v, _) = json_of(&["semigroup", "mult", "--gens", "4,0;1,1;0,4", "--json"]);
    assert_eq!(v["result"]["multiplicity"], 8);
    let (_, v, _) = json_of(&["semigroup", "edim", "--gens", "1,0;2,0;0,1", "--json"]);
    assert_eq!(v["result"]["edim"], 2);
}

#[test]
fn ideal_commands() {
    let (_, stdout, _) = lipsat(&["ideal", "kernel", "--gens", "1,0;1,1;0,2"]);
    assert_eq!(stdout, "z1^2*z3 - z2^2\n");
    let (code, v, _) = json_of(&[
        "ideal", "verify", "--gens", "4,0;6,0;7,0;0,6;0,9;0,11",
        "--binomial", "0,2,0,0,0,0:3,0,0,0,0,0",
        "--binomial", "0,0,0,0,0,3:0,0,0,4,1,0",
        "--binomial", "0,0,0,0,2,0:0,0,0,3,0,0",
        "--binomial", "0,0,2,0,0,0:2,1,0,0,0,0",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["vanishing"], true);
    let (code, _, _) = lipsat(&["ideal", "verify", "--gens", "2;3", "--binomial", "1,0:0,1"]);
    assert_eq!(code, 1);
}

/// Emits JSON, re-runs the embedded input, and expects the same bytes.
fn assert_round_trip(args: &[&str]) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--json", "--out", path.to_str().unwrap()]);
    let (code, stdout, _) = lipsat(&full);
    assert!(stdout.is_empty());
    let first = fs::read_to_string(&path).unwrap();
    let (again_code, again, _) = lipsat(&["run", "--job", path.to_str().unwrap()]);
    assert_eq!(again_code, code, "{args:?}");
    assert_eq!(again, first, "{args:?}");

    // the bare input object works as a job file too
    let v: Value = serde_json::from_str(&first).unwrap();
    let job = dir.path().join("job.json");
    fs::write(&job, v["input"].to_string()).unwrap();
    let (_, third, _) = lipsat(&["run", "--job", job.to_str().unwrap()]);
    assert_eq!(third, first, "{args:?}");
}

#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["saturate", "curve", "--supports", "6;9,11;9,11"],
        &["saturate", "curve", "--supports", "4;6;7", "--box", "20"],
        &["saturate", "product", "--curve", "4;6;7", "--curve", "6;9;11"],
        &["saturate", "hypersurface", "--alpha", "3", "--beta", "5", "--bigN", "11"],
        &["saturate", "hypersurface", "--alpha", "2", "--beta", "3", "--bigN", "4", "--box", "10x30"],
        &["semigroup", "contains", "--gens", "1,0;1,1;0,2", "--point", "3,3"],
        &["semigroup", "mingens", "--gens", "4,0;6,0;7,0;8,0"],
        &["semigroup", "hull", "--gens", "4,0;1,1;0,4"],
        &["semigroup", "gaps", "--gens", "6;9;11;13;14;16"],
        &["certify", "hypersurface", "--alpha", "3", "--beta", "11", "--bigN", "5", "--point", "1,3"],
        &["certify", "hypersurface", "--alpha", "3", "--beta", "11", "--bigN", "5", "--point", "4,1"],
        &["certify", "wu", "--r", "7"],
        &["ideal", "kernel", "--gens", "1,0;3,11;0,5"],
        &["ideal", "kernel", "--gens", "18014398509481985;18014398509481987"],
        &["ideal", "generators", "--gens", "4,0;6,0;7,0;0,6;0,9;0,11", "--degree-bound", "4"],
        &["semigroup", "mult", "--gens", "1,0,0;0,1,1;0,0,1"],
    ];
    for args in cases {
        assert_round_trip(args);
    }
}

#[test]
fn big_integers_are_strings() {
    let (_, v, text) = json_of(&["ideal", "kernel", "--gens", "18014398509481985;18014398509481987", "--json"]);
    assert_eq!(v["result"]["relations"][0][0], "18014398509481987");
    assert_eq!(v["result"]["relations"][0][1], "-18014398509481985");
    assert_eq!(v["input"]["payload"]["generators"][0][0], "18014398509481985");
    assert!(!text.contains(": 18014398509481985"));
}

#[test]
fn certificate_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let (_, first, _) = lipsat(&[
        "certify", "hypersurface", "--alpha", "3", "--beta", "5", "--bigN", "11", "--point", "2,7",
        "--json",
    ]);
    fs::write(&path, &first).unwrap();
    let (code, v, _) = json_of(&["certify", "verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["valid"], true);

    // a bare certificate object verifies too
    let doc: Value = serde_json::from_str(&first).unwrap();
    let mut bare = doc["result"]["certificate"].clone();
    fs::write(&path, bare.to_string()).unwrap();
    assert_eq!(lipsat(&["certify", "verify", path.to_str().unwrap()]).0, 0);

    // a wrong recorded order is caught
    let recorded = bare["ord_ideal"].as_u64().unwrap();
    bare["ord_ideal"] = Value::from(recorded + 1);
    fs::write(&path, bare.to_string()).unwrap();
    let (code, v, _) = json_of(&["certify", "verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["valid"], false);
    assert_eq!(v["result"]["recomputed"]["ord_ideal"], recorded);

    // so is an arc edited after the fact
    let mut bent = doc["result"]["certificate"].clone();
    bent["arc"]["coordinates"]["x2"][0]["degree"] = Value::from(2);
    fs::write(&path, bent.to_string()).unwrap();
    let (code, stdout, _) = lipsat(&["certify", "verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("INVALID"), "{stdout}");

    // and a malformed one is rejected before any computation
    bare["arc"]["field_order"] = Value::from(0);
    fs::write(&path, bare.to_string()).unwrap();
    assert_eq!(lipsat(&["certify", "verify", path.to_str().unwrap()]).0, 1);
}

#[test]
fn job_file_schema_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    fs::write(&path, r#"{"kind": "hypersurface", "payload": {"alpha": 3, "beta": 11, "bigN": 5, "gamma": 1}}"#).unwrap();
    let (code, _, stderr) = lipsat(&["run", "--job", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("gamma"), "{stderr}");
    fs::write(&path, r#"{"kind": "hypersurface", "payload": {"alpha": 3, "beta": 11, "bigN": 5}, "output_format": "json"}"#).unwrap();
    let (code, v, _) = json_of(&["run", "--job", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["edim"], 6);
}

#[test]
fn library_entry_point_matches_binary() {
    let args = ["lipsat", "saturate", "curve", "--supports", "6;9,11;9,11", "--json"];
    let lib = lipsat::run(args);
    let (code, stdout, _) = lipsat(&args[1..]);
    assert_eq!(lib.code, code);
    assert_eq!(lib.stdout, stdout);
}
