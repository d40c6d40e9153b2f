use std::process::{Command, Output};

use moncurve::curves::{build_table1, SpectralCurve, Table1Params};
use moncurve::PrecisionContext;
use serde_json::Value;

fn moncurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_moncurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

#[test]
fn single_row_matches_oracle_digits() {
    let out = moncurve(&["--json", "reproduce", "table2", "--row", "4,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let row = &report["results"]["(4, -1)"];
    // mpmath, 60 digits: (63 + 171·2^(1/3) - 18·4^(1/3))/250 and
    // (44 + 38·2^(1/3) + 26·4^(1/3))/3.
    let t = row["t"].as_str().unwrap();
    let b = row["b"].as_str().unwrap();
    assert!(
        t.starts_with("9.99493122386382882518649249350701997041864"),
        "{t}"
    );
    assert!(
        b.starts_with("44.383142415726122201566116565884230697282794"),
        "{b}"
    );
    assert_eq!(report["verdicts"]["(4, -1)"], "pass");
    assert_eq!(report["results"].as_object().unwrap().len(), 1);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        &["--json", "reproduce", "table2"][..],
        &["--json", "verify", "charge2-es", "--k", "0.3"][..],
        &[
            "--json",
            "--digits",
            "60",
            "probe",
            "1+sqrt(2)",
            "--dmax",
            "2",
            "--hmax",
            "10",
        ][..],
    ] {
        let a = moncurve(args);
        let b = moncurve(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn reports_echo_precision_and_bounds() {
    let report = json(&moncurve(&[
        "--json", "--digits", "60", "probe", "a4", "--dmax", "2", "--hmax", "100",
    ]));
    assert_eq!(report["digits"], 60);
    assert_eq!(report["inputs"]["dmax"], "2");
    assert_eq!(report["inputs"]["hmax"], "100");
    assert_eq!(report["op"], "probe");
}

#[test]
fn exit_codes() {
    assert_eq!(moncurve(&["verify", "legendre"]).status.code(), Some(0));
    // Precision-budget refusal.
    let refused = moncurve(&["probe", "a4", "--dmax", "4", "--hmax", "10^40"]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("240"));
    // Domain and usage errors.
    assert_eq!(
        moncurve(&["es-solve", "--n", "2", "--m", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        moncurve(&["curve", "build", "--row", "8", "--a", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(moncurve(&["verify", "nonsense"]).status.code(), Some(2));
    // Verification failure: the perturbed normalization has no relation.
    let broken = moncurve(&[
        "--json",
        "verify",
        "charge2-es",
        "--k",
        "sqrt(1/2)",
        "--factor",
        "1 + 1/1000",
    ]);
    assert_eq!(broken.status.code(), Some(1));
    assert_eq!(json(&broken)["verdicts"]["k=sqrt(1/2)"], "fail");
}

#[test]
fn curve_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("moncurve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("row8.json");
    let path_str = path.to_str().unwrap();
    let built = moncurve(&[
        "curve", "build", "--row", "8", "--a", "0.1", "--out", path_str,
    ]);
    assert_eq!(built.status.code(), Some(0));

    let ctx = PrecisionContext::new(50).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let read = SpectralCurve::from_json(&text, &ctx).unwrap();
    let direct = build_table1(
        &Table1Params::Row8 {
            a: ctx.ratio(1, 10),
        },
        &ctx,
    )
    .unwrap();
    assert_eq!(read, direct);
    assert_eq!(read.to_json(&ctx).unwrap(), text);

    let checked = moncurve(&["--json", "verify", "h1", "--file", path_str]);
    assert_eq!(checked.status.code(), Some(0));
    assert_eq!(json(&checked)["verdicts"]["file"], "pass");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn relation_from_values_file() {
    let dir = std::env::temp_dir().join(format!("moncurve-rel-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("values.txt");
    std::fs::write(
        &path,
        "# golden ratio powers\n1\n(1+sqrt(5))/2\n((1+sqrt(5))/2)^2\n",
    )
    .unwrap();
    let out = moncurve(&[
        "--json",
        "relation",
        "--values",
        path.to_str().unwrap(),
        "--max-norm",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json(&out)["results"]["relation"],
        serde_json::json!(["1", "1", "-1"])
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn es_solve_negative_arguments() {
    let out = moncurve(&["--json", "es-solve", "--n", "5", "--m", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    let b = json(&out)["results"]["b"].as_str().unwrap().to_string();
    assert!(b.starts_with("272.39754245208747597474"), "{b}");
}
