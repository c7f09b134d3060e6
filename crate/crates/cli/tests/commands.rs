use std::path::PathBuf;
use std::process::Command;

use capcover_cli::{run, Cli};
use clap::Parser;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("capcover").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err).unwrap();
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("capcover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn tetra() -> PathBuf {
    let s = 1.0 / 3f64.sqrt();
    let rows = [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]];
    temp("tetra.xyz", &rows.iter().map(|r| format!("{} {} {}\n", r[0], r[1], r[2])).collect::<String>())
}

#[test]
fn radius_of_tetrahedron() {
    let p = tetra();
    let (code, out, _) = invoke(&["radius", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "70.5287793655\n");
    let (_, full, _) = invoke(&["radius", p.to_str().unwrap(), "--full"]);
    assert!(full.starts_with("70.5287793655\nradians 1.23095941734077"));
    let h: f64 = full.lines().find(|l| l.starts_with("height ")).unwrap()[7..].parse().unwrap();
    assert!((h - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn approx_nineteen() {
    let (code, out, _) = invoke(&["approx", "--n", "19"]);
    assert_eq!(code, 0);
    let line = out.lines().find(|l| l.starts_with("suggested-height")).unwrap();
    assert!(line.contains("0.864375043069"), "{line}");
    assert!(out.contains("radius-deg "));
    assert!(out.contains("radius-rad "));
}

#[test]
fn catalog_five() {
    let (code, out, _) = invoke(&["catalog", "--n", "5", "--format", "xyz"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(out.lines().next(), Some("0 0 1"));
}

#[test]
fn catalog_files() {
    let dir = temp("unused", "").parent().unwrap().to_path_buf();
    let off = dir.join("12.off");
    let circles = dir.join("12.circles");
    let (code, out, _) = invoke(&["catalog", "--n", "12", "--format", "off", "--out", off.to_str().unwrap(), "--circles", circles.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert!(std::fs::read_to_string(&off).unwrap().starts_with("OFF\n12 20 0\n"));
    assert_eq!(std::fs::read_to_string(&circles).unwrap().matches("# cap").count(), 12);
}

#[test]
fn catalog_listing() {
    let (code, out, _) = invoke(&["catalog"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 23);
}

#[test]
fn verify_single_and_json() {
    let (code, out, _) = invoke(&["verify", "--n", "12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with(" 12 PASS 37.3773681406"));
    let (_, json, _) = invoke(&["verify", "--n", "10", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["n"], 10);
    assert!(v[0]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn verify_reports_failed_checks() {
    let (code, out, _) = invoke(&["verify", "--n", "9"]);
    assert_eq!(code, 1);
    assert!(out.contains("coplanarity"));
}

#[test]
fn check_table_columns() {
    let (_, csv, _) = invoke(&["check-table", "--csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,reference_deg,computed_deg,recorded_deg,deviation_deg,status"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 23);
    assert!(rows[2].starts_with("4,70.528779,70.5287793655,70.5287793655,"));
    assert!(rows[0].starts_with("2,,90.0000000000,"));
    let (_, table, _) = invoke(&["check-table"]);
    assert!(table.contains("30.3749090533⋄"));
    assert!(table.contains("31.0132851551*"));
    assert!(table.contains("41.4271959586†"));
}

#[test]
fn optimize_perturbed_ten() {
    let (_, xyz, _) = invoke(&["catalog", "--n", "10"]);
    let p = temp("ten.xyz", &xyz);
    let out_path = p.with_extension("best");
    let args = ["optimize", p.to_str().unwrap(), "--perturb", "0.01", "--seed", "3", "--out", out_path.to_str().unwrap(), "--verbose"];
    let (code, out, err) = invoke(&args);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    assert!(out.contains("scheme "));
    assert!(out.contains("iteration 1 radius="));
    assert!(out.contains("final 42.3078266301"), "{out}");
    let (_, again, _) = invoke(&args);
    assert_eq!(out, again);
    let (_, r, _) = invoke(&["radius", out_path.to_str().unwrap()]);
    assert_eq!(r, "42.3078266301\n");
}

#[test]
fn optimize_multi_start_and_fallback() {
    let (_, xyz, _) = invoke(&["catalog", "--n", "6"]);
    let p = temp("six.xyz", &xyz);
    let (code, out, _) = invoke(&["optimize", p.to_str().unwrap(), "--perturb", "0.01", "--starts", "3", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("start seed=")).count(), 3);
    assert!(out.contains("final 54.7356103172"), "{out}");

    // Off the catalog scheme: the optimizer says so and goes generic.
    let (_, xyz, _) = invoke(&["catalog", "--n", "9"]);
    let moved: String = xyz
        .lines()
        .enumerate()
        .map(|(i, l)| {
            let v: Vec<f64> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            let (s, c) = (0.05 * (i as f64 + 1.0)).sin_cos();
            format!("{} {} {}\n", c * v[0] - s * v[1], s * v[0] + c * v[1], v[2])
        })
        .collect();
    let p = temp("nine.xyz", &moved);
    let (code, out, err) = invoke(&["optimize", p.to_str().unwrap(), "--iters", "5"]);
    assert_eq!(code, 0);
    assert!(err.starts_with("note:"), "{err}");
    assert!(out.contains("scheme generic"));
}

#[test]
fn export_radius_vs_n() {
    let p = temp("plot.csv", "");
    let (code, _, _) = invoke(&["export", "--plot", "radius-vs-n", "--out", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&p).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n,catalog_deg,approx_deg");
    assert_eq!(rows.len(), 150);
    assert!(rows.iter().any(|r| r.starts_with("12,37.3773681406,")));
    assert!(rows.iter().any(|r| r.starts_with("21,,")));
}

fn binary(args: &[&str]) -> (Option<i32>, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_capcover")).args(args).output().unwrap();
    (o.status.code(), String::from_utf8_lossy(&o.stdout).into(), String::from_utf8_lossy(&o.stderr).into())
}

#[test]
fn exit_codes() {
    assert_eq!(binary(&["frobnicate"]).0, Some(2));
    assert_eq!(binary(&["radius"]).0, Some(2));
    assert_eq!(binary(&["approx", "--n", "19", "--bogus"]).0, Some(2));
    assert_eq!(binary(&["verify"]).0, Some(2));
    assert_eq!(binary(&["--help"]).0, Some(0));
    let (code, out, err) = binary(&["catalog", "--n", "21"]);
    assert_eq!(code, Some(1));
    assert!(out.is_empty());
    assert!(err.contains("21"));
    let (code, _, err) = binary(&["radius", "/nonexistent/code.xyz"]);
    assert_eq!(code, Some(1));
    assert!(err.starts_with("error:"));
    assert_eq!(binary(&["approx", "--n", "1"]).0, Some(1));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [&["check-table"][..], &["catalog", "--n", "19", "--format", "json"], &["approx", "--n", "77"]] {
        assert_eq!(binary(args), binary(args));
    }
}
