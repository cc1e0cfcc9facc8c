//! Configuration parsing, sweep dispatch and result files for `jrc-sim`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use jrc_core::sim::{
    beampattern_sweep, default_rf_grid, default_snr_grid, BeampatternSweep, DEFAULT_TRIALS,
};
use jrc_core::{run_rf_sweep, run_snr_sweep, BaselineKind, JrcError, SweepRow64, SystemConfig64};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const CSV_HEADER: &str = "sweep_value,baseline,rho,mean_rate,std_rate,trials,mean_active_rf";
pub const BEAMPATTERN_HEADER: &str = "angle_deg,power";
pub const RESULTS_FILE: &str = "results.csv";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const PLOT_FILE: &str = "plot.gp";
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("bad config: {0}")]
    Parse(String),
    #[error(transparent)]
    Model(#[from] JrcError),
    #[error("cannot encode manifest: {0}")]
    Json(#[from] serde_json::Error),
}

/// On-disk configuration. Every key is optional; omitted keys take the
/// desk-scale defaults (`n_tx = 32`, `n_rx = 4`, `n_rf = 4`,
/// `n_clusters = 6`, `n_targets = 3`, `rho = 0.5`, unit power budgets,
/// `snr_db = 0`, half-wavelength spacing, SNR grid -10..10 step 2, RF grid
/// `1..=n_rf`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub n_tx: usize,
    pub n_rx: usize,
    pub n_rf: usize,
    pub n_clusters: usize,
    pub n_targets: usize,
    pub rho: f64,
    pub p_max_com: f64,
    pub p_max_rad: f64,
    pub snr_db: f64,
    pub spacing_ratio: f64,
    pub snr_grid: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rf_grid: Option<Vec<usize>>,
}

impl Default for ConfigFile {
    fn default() -> Self {
        let c = SystemConfig64::default();
        Self {
            n_tx: c.n_tx,
            n_rx: c.n_rx,
            n_rf: c.n_rf,
            n_clusters: c.n_clusters,
            n_targets: c.n_targets,
            rho: c.rho,
            p_max_com: c.p_max_com,
            p_max_rad: c.p_max_rad,
            snr_db: c.snr_db,
            spacing_ratio: c.spacing_ratio,
            snr_grid: default_snr_grid(),
            rf_grid: None,
        }
    }
}

impl ConfigFile {
    pub fn system(&self) -> SystemConfig64 {
        SystemConfig64 {
            n_tx: self.n_tx,
            n_rx: self.n_rx,
            n_rf: self.n_rf,
            n_clusters: self.n_clusters,
            n_targets: self.n_targets,
            rho: self.rho,
            p_max_com: self.p_max_com,
            p_max_rad: self.p_max_rad,
            snr_db: self.snr_db,
            spacing_ratio: self.spacing_ratio,
        }
    }

    pub fn rf_grid(&self) -> Vec<usize> {
        self.rf_grid
            .clone()
            .unwrap_or_else(|| default_rf_grid(self.n_rf))
    }
}

/// Parses and validates a TOML configuration.
pub fn parse_config_str(text: &str) -> Result<ConfigFile, CliError> {
    let file: ConfigFile =
        toml::from_str(text).map_err(|e| CliError::Parse(e.message().to_string()))?;
    file.system().validate()?;
    Ok(file)
}

pub fn parse_config(path: &Path) -> Result<ConfigFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    parse_config_str(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Snr,
    Rf,
    Beampattern,
}

/// One invocation of the simulator.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    /// `None` runs on defaults.
    pub config_path: Option<PathBuf>,
    pub sweep: SweepKind,
    /// Overrides the configured `rho` when set.
    pub rho: Option<f64>,
    pub seed: u64,
    pub trials: usize,
    pub out_dir: PathBuf,
    pub emit_plot: bool,
}

impl Default for RunManifest {
    fn default() -> Self {
        Self {
            config_path: None,
            sweep: SweepKind::Snr,
            rho: None,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            out_dir: PathBuf::from("out"),
            emit_plot: false,
        }
    }
}

/// Provenance record written next to the results.
#[derive(Debug, Serialize)]
struct ManifestEcho<'a> {
    tool: &'static str,
    version: &'static str,
    config_path: Option<String>,
    sweep: SweepKind,
    rho: f64,
    seed: u64,
    trials: usize,
    grid: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target_angles_deg: Option<Vec<f64>>,
    config: &'a ConfigFile,
}

/// Files written by a successful [`run`].
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub files: Vec<PathBuf>,
    pub rows: usize,
}

/// `printf("%.12g")`-style formatting.
pub fn fmt_g(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    } else {
        strip_zeros(&format!("{:.*}", (DIGITS - 1 - exp) as usize, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn sweep_csv(rows: &[SweepRow64]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_g(r.sweep_value),
            r.baseline.label(),
            fmt_g(r.rho),
            fmt_g(r.mean_rate),
            fmt_g(r.std_rate),
            r.trials,
            fmt_g(r.mean_active_rf)
        );
    }
    out
}

pub fn beampattern_csv(points: &[(f64, f64)]) -> String {
    let mut out = String::from(BEAMPATTERN_HEADER);
    out.push('\n');
    for (angle, power) in points {
        let _ = writeln!(out, "{},{}", fmt_g(*angle), fmt_g(*power));
    }
    out
}

/// Gnuplot script drawing `results.csv` into `results.png`.
pub fn plot_script(sweep: SweepKind, rho: f64) -> String {
    let mut s = String::from("set datafile separator ','\nset terminal pngcairo size 900,600\nset output 'results.png'\nset grid\n");
    match sweep {
        SweepKind::Beampattern => {
            s.push_str("set xlabel 'Angle (deg)'\nset ylabel 'Transmit beampattern'\nset xrange [-90:90]\n");
            s.push_str(&format!(
                "plot '{RESULTS_FILE}' using 1:2 skip 1 with lines notitle\n"
            ));
        }
        SweepKind::Snr | SweepKind::Rf => {
            let xlabel = if sweep == SweepKind::Snr {
                "SNR (dB)"
            } else {
                "Number of RF chains"
            };
            let labels: Vec<&str> = BaselineKind::ALL.iter().map(|k| k.label()).collect();
            s.push_str(&format!(
                "set xlabel '{xlabel}'\nset ylabel 'Joint rate (bits/s/Hz)'\nset title 'rho = {}'\nset key left top\n",
                fmt_g(rho)
            ));
            s.push_str(&format!("schemes = '{}'\n", labels.join(" ")));
            s.push_str(&format!(
                "plot for [b in schemes] '{RESULTS_FILE}' using 1:(strcol(2) eq b ? $4 : NaN) skip 1 with linespoints title b\n"
            ));
        }
    }
    s
}

fn write_file(path: &Path, contents: &str, written: &mut Vec<PathBuf>) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })?;
    written.push(path.to_owned());
    Ok(())
}

/// Runs the sweep and writes its artifacts into `out_dir`. On failure no
/// output file from this run is left behind.
pub fn run(manifest: &RunManifest) -> Result<RunSummary, CliError> {
    let mut file = match &manifest.config_path {
        Some(p) => parse_config(p)?,
        None => ConfigFile::default(),
    };
    let rho = manifest.rho.unwrap_or(file.rho);
    file.rho = rho;
    let cfg = file.system().with_rho(rho);
    cfg.validate()?;

    let mut target_angles_deg = None;
    let (csv, grid, rows) = match manifest.sweep {
        SweepKind::Snr => {
            let rows = run_snr_sweep(&cfg, &file.snr_grid, rho, manifest.trials, manifest.seed)?;
            (sweep_csv(&rows), file.snr_grid.clone(), rows.len())
        }
        SweepKind::Rf => {
            let grid = file.rf_grid();
            let rows = run_rf_sweep(&cfg, &grid, rho, manifest.trials, manifest.seed)?;
            (
                sweep_csv(&rows),
                grid.iter().map(|&l| l as f64).collect(),
                rows.len(),
            )
        }
        SweepKind::Beampattern => {
            let BeampatternSweep { scene, points } = beampattern_sweep(&cfg, manifest.seed)?;
            target_angles_deg = Some(scene.target_angles.iter().map(|a| a.to_degrees()).collect());
            let grid = points.iter().map(|p| p.0).collect();
            (beampattern_csv(&points), grid, points.len())
        }
    };
    let echo = ManifestEcho {
        tool: "jrc-sim",
        version: env!("CARGO_PKG_VERSION"),
        config_path: manifest
            .config_path
            .as_ref()
            .map(|p| p.display().to_string()),
        sweep: manifest.sweep,
        rho,
        seed: manifest.seed,
        trials: manifest.trials,
        grid,
        target_angles_deg,
        config: &file,
    };
    let json = serde_json::to_string_pretty(&echo)? + "\n";

    let dir = &manifest.out_dir;
    let created_dir = !dir.exists();
    fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.clone(),
        source,
    })?;
    let mut written = Vec::new();
    let result = (|| {
        write_file(&dir.join(RESULTS_FILE), &csv, &mut written)?;
        write_file(&dir.join(MANIFEST_FILE), &json, &mut written)?;
        if manifest.emit_plot {
            write_file(
                &dir.join(PLOT_FILE),
                &plot_script(manifest.sweep, rho),
                &mut written,
            )?;
        }
        Ok(())
    })();
    match result {
        Ok(()) => Ok(RunSummary {
            files: written,
            rows,
        }),
        Err(e) => {
            for p in &written {
                let _ = fs::remove_file(p);
            }
            if created_dir {
                let _ = fs::remove_dir(dir);
            }
            Err(e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_formatting() {
        assert_eq!(fmt_g(0.0), "0");
        assert_eq!(fmt_g(-10.0), "-10");
        assert_eq!(fmt_g(4.0), "4");
        assert_eq!(fmt_g(0.5), "0.5");
        assert_eq!(fmt_g(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_g(2.0 / 3.0 * 100.0), "66.6666666667");
        assert_eq!(fmt_g(1.5e-5), "1.5e-05");
        assert_eq!(fmt_g(0.0001), "0.0001");
        assert_eq!(fmt_g(1e12), "1e+12");
        assert_eq!(fmt_g(123456789012.0), "123456789012");
        assert_eq!(fmt_g(9.99999999999951), "10");
        assert_eq!(fmt_g(f64::NAN), "nan");
    }

    #[test]
    fn empty_config_gives_defaults() {
        let f = parse_config_str("").unwrap();
        assert_eq!(f, ConfigFile::default());
        assert_eq!(f.n_tx, 32);
        assert_eq!(f.rf_grid(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn full_scale_setup_parses() {
        let f = parse_config_str("n_tx = 96\nn_rx = 4\nn_clusters = 6\nn_targets = 3\n").unwrap();
        assert_eq!(f.system(), SystemConfig64::full_scale());
    }

    #[test]
    fn zero_rf_chains_names_field() {
        let err = parse_config_str("n_rf = 0").unwrap_err().to_string();
        assert!(err.contains("n_rf"), "{err}");
    }

    #[test]
    fn unknown_key_is_named() {
        let err = parse_config_str("n_tx = 32\nbandwidth = 5")
            .unwrap_err()
            .to_string();
        assert!(err.contains("bandwidth"), "{err}");
    }

    #[test]
    fn csv_rows_use_fixed_schema() {
        let row = SweepRow64 {
            sweep_value: -2.0,
            baseline: BaselineKind::InterferenceCommsOnly,
            rho: 0.5,
            mean_rate: 1.25,
            std_rate: 0.1,
            trials: 3,
            mean_active_rf: 4.0,
        };
        assert_eq!(
            sweep_csv(&[row]),
            format!("{CSV_HEADER}\n-2,interference_comms_only,0.5,1.25,0.1,3,4\n")
        );
    }

    #[test]
    fn plot_script_mentions_every_scheme() {
        let s = plot_script(SweepKind::Snr, 1.0);
        for k in BaselineKind::ALL {
            assert!(s.contains(k.label()));
        }
        assert!(s.contains("strcol(2)"));
        assert!(plot_script(SweepKind::Beampattern, 0.5).contains("using 1:2"));
    }
}
