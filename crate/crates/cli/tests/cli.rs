use std::fs;
use std::path::Path;
use std::process::Command;

use jrc_cli::{run, RunManifest, SweepKind, CSV_HEADER};

fn manifest(out: &Path, sweep: SweepKind, trials: usize) -> RunManifest {
    RunManifest {
        sweep,
        trials,
        out_dir: out.to_owned(),
        ..RunManifest::default()
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jrc-sim"))
}

#[test]
fn snr_sweep_writes_five_rows_per_point() {
    let dir = tempfile::tempdir().unwrap();
    let m = RunManifest {
        rho: Some(1.0),
        ..manifest(dir.path(), SweepKind::Snr, 20)
    };
    let summary = run(&m).unwrap();
    assert_eq!(summary.rows, 55);
    let csv = fs::read_to_string(dir.path().join("results.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 56);
    assert!(lines[1].starts_with("-10,no_interference,1,"));
    assert!(lines[55].starts_with("10,proposed,1,"));
    assert!(!dir.path().join("plot.gp").exists());

    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(json["seed"], 1);
    assert_eq!(json["trials"], 20);
    assert_eq!(json["config"]["n_tx"], 32);
    assert_eq!(json["grid"].as_array().unwrap().len(), 11);
}

#[test]
fn rf_sweep_covers_every_chain_count() {
    let dir = tempfile::tempdir().unwrap();
    let m = RunManifest {
        emit_plot: true,
        ..manifest(dir.path(), SweepKind::Rf, 10)
    };
    assert_eq!(run(&m).unwrap().rows, 20);
    let csv = fs::read_to_string(dir.path().join("results.csv")).unwrap();
    assert!(csv
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("1,no_interference,0.5,"));
    let plot = fs::read_to_string(dir.path().join("plot.gp")).unwrap();
    assert!(plot.contains("results.csv"));
}

#[test]
fn beampattern_dump_has_one_degree_grid() {
    let dir = tempfile::tempdir().unwrap();
    run(&manifest(dir.path(), SweepKind::Beampattern, 1)).unwrap();
    let csv = fs::read_to_string(dir.path().join("results.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "angle_deg,power");
    assert_eq!(lines.len(), 182);
    assert!(lines[1].starts_with("-90,"));
    assert!(lines[91].starts_with("0,"));
    assert!(lines[181].starts_with("90,"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(json["target_angles_deg"].as_array().unwrap().len(), 3);
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        run(&manifest(d.path(), SweepKind::Snr, 25)).unwrap();
    }
    let read = |d: &tempfile::TempDir| fs::read(d.path().join("results.csv")).unwrap();
    assert_eq!(read(&a), read(&b));
}

#[test]
fn binary_succeeds_with_config_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("desk.toml");
    fs::write(&cfg, "n_tx = 16\nsnr_grid = [0.0, 5.0]\n").unwrap();
    let out = dir.path().join("out");
    let status = bin()
        .args([
            "--config",
            cfg.to_str().unwrap(),
            "--sweep",
            "snr",
            "--rho",
            "0.25",
            "--seed",
            "7",
            "--trials",
            "3",
            "--emit-plot",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = fs::read_to_string(out.join("results.csv")).unwrap();
    assert_eq!(csv.lines().count(), 11);
    assert!(csv
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("0,no_interference,0.25,"));
    assert!(out.join("plot.gp").exists());
}

#[test]
fn invalid_config_fails_without_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "n_rf = 0\n").unwrap();
    let out = dir.path().join("out");
    let res = bin()
        .args(["--config", cfg.to_str().unwrap(), "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(!res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("n_rf"));
    assert!(!out.exists());
}

#[test]
fn unknown_key_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "n_tx = 32\nnum_users = 2\n").unwrap();
    let res = bin()
        .args(["--config", cfg.to_str().unwrap(), "--out"])
        .arg(dir.path().join("o"))
        .output()
        .unwrap();
    assert!(!res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("num_users"));
}

#[test]
fn out_of_range_inputs_fail() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let rho = bin()
        .args(["--rho", "1.5", "--trials", "1", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(!rho.status.success());
    let trials = bin()
        .args(["--trials", "0", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(!trials.status.success());
    let sweep = bin().args(["--sweep", "doppler"]).output().unwrap();
    assert!(!sweep.status.success());
    assert!(!out.exists());
}

#[test]
fn rf_grid_out_of_range_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    fs::write(&cfg, "rf_grid = [1, 9]\n").unwrap();
    let m = RunManifest {
        config_path: Some(cfg),
        ..manifest(&dir.path().join("o"), SweepKind::Rf, 2)
    };
    assert!(run(&m).is_err());
    assert!(!dir.path().join("o").exists());
}
