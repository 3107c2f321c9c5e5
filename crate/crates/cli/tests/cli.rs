use std::io::Write as _;
use std::process::Command;

use serde_json::Value;
use witten_cli::record::ResultRecord;
use witten_cli::run;

fn zeta(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["zeta"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend_from_slice(&["--format", "json"]);
    let (code, out, err) = zeta(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn su2_special_is_exact_zero() {
    let v = json(&["su2", "special", "--m", "2", "--theta", "1.0"]);
    assert_eq!(v["value"], "0");
    assert_eq!(v["error"], "exact");
}

#[test]
fn padic_limit_coefficients() {
    let v = json(&["padic", "limit", "--family", "sl2cong", "--m", "3"]);
    assert_eq!(v["value"]["num"], serde_json::json!([2, 1]));
    assert_eq!(v["value"]["den"], serde_json::json!([-1, 1]));
    assert_eq!(v["value"]["var"], "s");
    for name in ["SL2_CONG", "sl2-cong", "Sl2Cong"] {
        let w = json(&["padic", "limit", "--family", name]);
        assert_eq!(w["value"], v["value"]);
    }
}

#[test]
fn polylog_closed_encoding() {
    let v = json(&["polylog", "closed", "--m", "2"]);
    assert_eq!(v["value"]["num"], serde_json::json!([0, 1, 1]));
    assert_eq!(v["value"]["den"], serde_json::json!([1, -3, 3, -1]));
}

#[test]
fn floating_results_carry_positive_error() {
    let v = json(&["su2", "deriv2", "--theta-pi", "1/2"]);
    let e = v["error"].as_f64().unwrap();
    assert!(e > 0.0);
    let g = 0.915_965_594_177_219_f64;
    assert!((v["value"]["re"].as_f64().unwrap() - 2.0 * g / std::f64::consts::PI).abs() < 1e-9);
}

#[test]
fn json_round_trip_is_byte_identical_for_exact_values() {
    for args in [
        &[
            "padic", "eval", "--family", "su3cong", "--m", "1", "--s", "-1",
        ][..],
        &["padic", "minus1", "--m", "1", "--p", "3"],
        &["su3", "special", "--n", "3"],
        &[
            "finite", "eval", "--table", "Q8", "--s", "1", "--class", "i",
        ],
        &["polylog", "closed", "--m", "5"],
    ] {
        let mut a = args.to_vec();
        a.extend_from_slice(&["--format", "json"]);
        let (code, out, _) = zeta(&a);
        assert_eq!(code, 0);
        let line = out.trim_end();
        let rec = ResultRecord::from_json_str(line).unwrap();
        assert_eq!(rec.to_json_string(), line);
    }
}

fn numbers(text: &str) -> Vec<f64> {
    text.split(|c: char| c.is_whitespace() || c == '=' || c == '[')
        .filter_map(|w| w.trim_end_matches('i').parse::<f64>().ok())
        .collect()
}

#[test]
fn text_and_json_agree_to_printed_precision() {
    for (args, digits) in [
        (&["su2", "eval", "--s", "2.5", "--theta", "0.7"][..], 10),
        (&["polylog", "eval", "--s", "0.5,1", "--theta-pi", "1/3"], 8),
        (&["su3", "series", "--s", "2"], 12),
    ] {
        let p = digits.to_string();
        let mut a = args.to_vec();
        a.extend_from_slice(&["--precision", &p]);
        let (_, text, _) = zeta(&a);
        let mut b = a.clone();
        b.extend_from_slice(&["--format", "json"]);
        let (_, js, _) = zeta(&b);
        let v: Value = serde_json::from_str(&js).unwrap();
        // value part of the text line, before the bracketed error
        let shown = text
            .split(" = ")
            .nth(1)
            .unwrap()
            .split("  [")
            .next()
            .unwrap();
        let printed = numbers(shown);
        let exact = [
            v["value"]["re"].as_f64().unwrap(),
            v["value"]["im"].as_f64().unwrap(),
        ];
        let exact: Vec<f64> = exact
            .iter()
            .copied()
            .filter(|x| *x != 0.0)
            .map(f64::abs)
            .collect();
        assert_eq!(printed.len(), exact.len(), "{text}");
        for (t, j) in printed.iter().map(|x| x.abs()).zip(exact) {
            let ulp = 10f64.powi(j.log10().floor() as i32 - digits + 1);
            assert!((t - j).abs() <= 0.51 * ulp, "{t} vs {j} in {text}");
        }
    }
}

#[test]
fn csv_has_header_and_row() {
    let (code, out, _) = zeta(&["su2", "haar", "--s", "-1", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("query,value_re,value_im,error,ms"));
    let row = lines.next().unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[0], "su2 haar --s -1");
    assert!(
        (fields[1].parse::<f64>().unwrap() - 1.0).abs() < 1e-8,
        "{row}"
    );
    assert_eq!(fields[2], "0");
    assert!(fields[3].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn exit_codes() {
    assert_eq!(
        zeta(&["su2", "eval", "--s", "2", "--theta", "1", "--bogus"]).0,
        2
    );
    assert_eq!(zeta(&["su2", "eval", "--s", "2"]).0, 2);
    assert_eq!(zeta(&["su2", "frobnicate"]).0, 2);
    assert_eq!(zeta(&["su2", "haar", "--s", "2", "--theta", "1"]).0, 2);
    assert_eq!(
        zeta(&[
            "su2",
            "eval",
            "--s",
            "2",
            "--theta",
            "1",
            "--precision",
            "5"
        ])
        .0,
        2
    );
    assert_eq!(
        zeta(&[
            "su2",
            "eval",
            "--s",
            "2",
            "--theta",
            "1",
            "--precision",
            "16"
        ])
        .0,
        2
    );
    assert_eq!(zeta(&["su3", "eval", "--s", "0.5"]).0, 3);
    assert_eq!(zeta(&["su3", "series", "--s", "1"]).0, 3);
    assert_eq!(
        zeta(&["padic", "eval", "--family", "su3cong", "--s", "-1", "--p", "3"]).0,
        3
    );
    assert_eq!(zeta(&["polylog", "eval", "--s", "1", "--theta", "0"]).0, 3);
    let (code, _, err) = zeta(&["su2", "eval", "--s", "2", "--theta", "4"]);
    assert_eq!(code, 3);
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = zeta(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("padic limit"));
}

#[test]
fn negative_and_complex_arguments() {
    let v = json(&["su2", "eval", "--s", "-1", "--theta-pi", "2/3"]);
    assert!((v["value"]["re"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-10);
    let v = json(&["su2", "multi", "--s", "-2", "--theta-pi", "1/2,1/2,1/2"]);
    assert!((v["value"]["re"].as_f64().unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
    let v = json(&["polylog", "eval", "--s", "2,0.5", "--theta", "1"]);
    assert!(v["value"]["im"].as_f64().unwrap() != 0.0);
}

#[test]
fn padic_numeric_and_symbolic_p() {
    let v = json(&[
        "padic", "eval", "--family", "sl2cong", "--m", "1", "--s", "-1", "--p", "5",
    ]);
    assert_eq!(v["value"], "-625/6");
    let v = json(&["padic", "eval", "--family", "sl2zp", "--s", "0"]);
    assert_eq!(v["value"]["num"], serde_json::json!([-4]));
    assert_eq!(v["value"]["den"], serde_json::json!([-1, 1]));
    let v = json(&["padic", "qint", "--n", "5", "--p", "2"]);
    assert_eq!(v["value"], "31");
    let (code, _, _) = zeta(&["padic", "factor", "--family", "sl3cong"]);
    assert_eq!(code, 0);
    assert_eq!(zeta(&["padic", "factor", "--family", "sl2zp"]).0, 3);
}

#[test]
fn precision_from_environment_only_without_flag() {
    let bin = env!("CARGO_BIN_EXE_zeta");
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(bin);
        c.args(["su2", "eval", "--s", "2", "--theta", "1"])
            .args(extra);
        match env {
            Some(v) => c.env("ZETA_PRECISION", v),
            None => c.env_remove("ZETA_PRECISION"),
        };
        let o = c.output().unwrap();
        (
            o.status.code().unwrap(),
            String::from_utf8(o.stdout).unwrap(),
        )
    };
    let (code, six) = run(Some("6"), &[]);
    assert_eq!(code, 0);
    assert!(six.contains("error 1.0e-6"), "{six}");
    let (_, flag) = run(Some("6"), &["--precision", "12"]);
    assert!(flag.contains("error 1.0e-12"), "{flag}");
    let (_, default) = run(None, &[]);
    assert!(default.contains("error 1.0e-10"), "{default}");
    assert_eq!(run(Some("3"), &[]).0, 2);
}

#[test]
fn table_files() {
    let dir = std::env::temp_dir().join(format!("zeta-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("c4.txt");
    let mut f = std::fs::File::create(&good).unwrap();
    writeln!(f, "group C4 4\nclasses 1 1 1 1\nirrep 1 1 1 1 1\nirrep 1 1 i -1 -i\nirrep 1 1 -1 1 -1\nirrep 1 1 -i -1 i").unwrap();
    let g = good.to_str().unwrap();
    let v = json(&["finite", "eval", "--table", g, "--s", "0", "--class", "c2"]);
    assert_eq!(v["value"], "0");
    let v = json(&["finite", "haar", "--table", g, "--s", "3"]);
    assert_eq!(v["value"], "1");
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "group G 2\nclasses 1 1\nirrep 1 1 one\n").unwrap();
    let (code, _, err) = zeta(&[
        "finite",
        "eval",
        "--table",
        bad.to_str().unwrap(),
        "--s",
        "1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    let (code, out, _) = zeta(&["finite", "eval", "--table", "S3", "--s", "-2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suites() {
    let (code, out, _) = zeta(&["verify", "--suite", "core"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
    let (again_code, again, _) = zeta(&["verify", "--suite", "core"]);
    assert_eq!((again_code, again), (code, out));
    // padic carries the failing sub-claims of criteria 11 and 13
    let (code, out, _) = zeta(&["verify", "padic"]);
    assert_eq!(code, 1);
    assert!(out.contains("SU3_CONG zeta(-1) limit"));
    let v: Value = {
        let (_, js, _) = zeta(&["verify", "--suite", "polylog", "--format", "json"]);
        serde_json::from_str(&js).unwrap()
    };
    assert!(v.as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert_eq!(zeta(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(zeta(&["verify", "--m", "1"]).0, 2);
}
