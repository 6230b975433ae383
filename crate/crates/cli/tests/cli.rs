use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iso-wirtinger"))
        .args(args)
        .env_remove("ISO_WIRTINGER_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn records(out: &Output) -> Vec<Value> {
    stdout(out).lines().skip(1).map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn batch_of_random_polygons_all_hold() {
    let out = run(&["verify", "--theorem", "discrete-higher", "--k", "8", "--m", "3", "--count", "100", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let recs = records(&out);
    assert_eq!(recs.len(), 100);
    for (i, r) in recs.iter().enumerate() {
        assert_eq!(r["index"], i);
        assert_eq!(r["status"], "holds");
        assert_eq!(r["report"]["theorem_id"], "isoperimetric-higher");
    }
}

#[test]
fn header_line_identifies_the_run() {
    let out = run(&["verify", "--theorem", "wirtinger-m", "--k", "5"]);
    let header: Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(header["tool"], "iso-wirtinger");
    assert_eq!(header["theorem"], "wirtinger-m");
    assert_eq!(header["tolerance"], 1e-9);
}

#[test]
fn output_is_deterministic_and_ordered() {
    let args = ["verify", "--theorem", "stability-s", "--k", "11", "--m", "2", "--count", "40", "--seed", "3"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
}

#[test]
fn circle_support_is_chernoff_equality() {
    let dir = tempfile::tempdir().unwrap();
    let circle = dir.path().join("circle.json");
    let gen = run(&["generate", "support", "--circle", "--r", "2", "--output", circle.to_str().unwrap()]);
    assert!(gen.status.success());
    assert_eq!(std::fs::read_to_string(&circle).unwrap().trim(), r#"{"0":[2.0,0.0]}"#);

    let out = run(&["verify", "--theorem", "chernoff", "--k", "2", "--m", "1", "--input", circle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0]["report"];
    assert_eq!(r["equality"], true);
    let area = 4.0 * std::f64::consts::PI;
    assert!((r["lhs"].as_f64().unwrap() - area).abs() < 1e-10);
    assert!((r["rhs"].as_f64().unwrap() - area).abs() < 1e-10);
}

#[test]
fn square_is_chakerian_equality() {
    let dir = tempfile::tempdir().unwrap();
    let square = write(dir.path(), "square.json", "[[1,0],[0,1],[-1,0],[0,-1]]");
    let out = run(&["verify", "--theorem", "chakerian-v2", "--input", &square]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["report"]["equality"], true);
}

#[test]
fn hypothesis_errors_are_recorded_and_batch_continues() {
    let dir = tempfile::tempdir().unwrap();
    let off = write(dir.path(), "off.json", "[[1,0],[0,1],[-1,0],[0,-2]]");
    let square = write(dir.path(), "square.json", "[[1,0],[0,1],[-1,0],[0,-1]]");
    let out = run(&["verify", "--theorem", "wirtinger-m", "--input", &off, "--input", &square]);
    assert_eq!(out.status.code(), Some(2));
    let recs = records(&out);
    assert_eq!(recs[0]["status"], "hypothesis-error");
    assert_eq!(recs[1]["status"], "holds");

    let out = run(&["verify", "--theorem", "wirtinger-m", "--auto-recenter", "--input", &off]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!records(&out)[0]["report"]["notes"].as_array().unwrap().is_empty());
}

#[test]
fn unequal_sides_fail_the_equilateral_hypothesis() {
    let dir = tempfile::tempdir().unwrap();
    let kite = write(dir.path(), "kite.json", "[[2,0],[0,1],[-1,0],[0,-1]]");
    let out = run(&["verify", "--theorem", "equilateral-bound", "--input", &kite]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(records(&out)[0]["status"], "hypothesis-error");
}

#[test]
fn usage_and_parse_errors_exit_one() {
    assert_eq!(run(&["verify", "--theorem", "nope", "--k", "5"]).status.code(), Some(1));
    assert_eq!(run(&["verify"]).status.code(), Some(1));
    assert_eq!(run(&["tables", "--k", "3", "--m", "2"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--theorem", "wirtinger-m", "--k", "5", "--count", "0"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "[[1,0],[0,1]");
    assert_eq!(run(&["verify", "--theorem", "wirtinger-m", "--input", &bad]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        run(&["verify", "--theorem", "wirtinger-m", "--input", missing.to_str().unwrap()]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["verify", "--theorem", "wirtinger-m", "--k", "6", "--m", "4"]).status.code(), Some(1));
}

#[test]
fn tolerance_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_iso-wirtinger"))
        .args(["verify", "--theorem", "wirtinger-m", "--k", "5"])
        .env("ISO_WIRTINGER_TOLERANCE", "1e-6")
        .output()
        .unwrap();
    assert_eq!(records(&out)[0]["report"]["tolerance"], 1e-6);

    let out = Command::new(env!("CARGO_BIN_EXE_iso-wirtinger"))
        .args(["verify", "--theorem", "wirtinger-m", "--k", "5"])
        .env("ISO_WIRTINGER_TOLERANCE", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_reports() {
    let out = run(&["verify", "--theorem", "wirtinger-s-form", "--k", "7", "--m", "2", "--count", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "index");
    assert_eq!(&headers[8], "deficit");
    let rows: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert_eq!(&row[2], "holds");
        assert!(row[8].parse::<f64>().unwrap() >= 0.0);
    }
}

#[test]
fn discrete_table_csv() {
    let out = run(&["tables", "--k", "4", "--m", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("family,m,k,index,value\n"));
    for row in ["c,2,4,0,8", "c,2,4,1,-6", "c,2,4,2,1"] {
        assert!(text.lines().any(|l| l == row), "missing {row} in\n{text}");
    }
}

#[test]
fn smooth_table_csv() {
    let text = stdout(&run(&["tables", "--smooth", "--m", "3"]));
    assert!(text.lines().any(|l| l == "s,3,,1,-12"));
    assert!(text.lines().any(|l| l == "s,3,,2,1"));
}

#[test]
fn generated_polygon_respects_mode_bound() {
    let out = run(&["generate", "polygon", "--k", "6", "--modes", "2", "--seed", "1"]);
    let p = iso_wirtinger::io::parse_polygon(&stdout(&out)).unwrap();
    assert!(p.has_zero_centroid());
    let active = p.spectrum().active_modes(1e-12);
    assert!(active.iter().all(|&nu| [1, 2, 4, 5].contains(&nu)), "{active:?}");
    assert_eq!(stdout(&out), stdout(&run(&["generate", "polygon", "--k", "6", "--modes", "2", "--seed", "1"])));
}

#[test]
fn generated_equality_fixtures_verify_as_equality() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("band.json");
    run(&["generate", "curve", "--equality", "--m", "3", "--seed", "5", "--output", curve.to_str().unwrap()]);
    let c = iso_wirtinger::io::parse_curve(&std::fs::read_to_string(&curve).unwrap()).unwrap();
    assert!(c.coeffs().keys().all(|n| (1..=3).contains(&n.abs())));
    let out = run(&["verify", "--theorem", "gen-wirtinger", "--m", "3", "--input", curve.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&out)[0]["report"]["equality"], true);

    let poly = dir.path().join("poly.json");
    run(&["generate", "polygon", "--k", "9", "--equality", "--m", "2", "--seed", "5", "--output", poly.to_str().unwrap()]);
    let out = run(&["verify", "--theorem", "wirtinger-m", "--m", "2", "--input", poly.to_str().unwrap()]);
    assert_eq!(records(&out)[0]["report"]["equality"], true);
}

#[test]
fn random_smooth_batches_hold() {
    let out = run(&["verify", "--theorem", "smooth-isoperimetric", "--m", "2", "--count", "4", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["verify", "--theorem", "chernoff-core", "--k", "3", "--m", "4", "--count", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
