//! Monte-Carlo driver: realizations, the four interference baselines, the
//! proposed flexible selection, and SNR / RF-count / beampattern sweeps.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{dim_mismatch, JrcError, Result};
use crate::model::{
    beampattern, Combiners, CommChannel, HybridPrecoder, RadarScene, Selection, SystemConfig,
};
use crate::rates::{
    comm_rate, interference_com_to_rad, interference_rad_to_com, joint_rate, linear_coefficients,
    radar_rate, LinearCoefficients, RateReport,
};
use crate::scalar::Real;
use crate::selection::{dinkelbach_select, DinkelbachOptions};

pub const DEFAULT_TRIALS: usize = 500;

/// `-10, -8, ..., 10` dB.
pub fn default_snr_grid<T: Real>() -> Vec<T> {
    (-5..=5).map(|i| T::lit(f64::from(2 * i))).collect()
}

/// `1, 2, ..., n_rf`.
pub fn default_rf_grid(n_rf: usize) -> Vec<usize> {
    (1..=n_rf).collect()
}

/// Evaluated scheme. The derived order is the row order within a sweep point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaselineKind {
    /// (i) both interference terms dropped.
    NoInterference,
    /// (ii) both interference terms kept.
    InterferenceBoth,
    /// (iii) only the communication-to-radar term kept.
    InterferenceRadarOnly,
    /// (iv) only the radar-to-communication term kept.
    InterferenceCommsOnly,
    /// Dinkelbach-selected chains, both interference terms kept.
    ProposedFlexible,
}

impl BaselineKind {
    pub const ALL: [Self; 5] = [
        Self::NoInterference,
        Self::InterferenceBoth,
        Self::InterferenceRadarOnly,
        Self::InterferenceCommsOnly,
        Self::ProposedFlexible,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Self::NoInterference => "no_interference",
            Self::InterferenceBoth => "interference_both",
            Self::InterferenceRadarOnly => "interference_radar_only",
            Self::InterferenceCommsOnly => "interference_comms_only",
            Self::ProposedFlexible => "proposed",
        }
    }

    /// Whether (communication, radar) rates see cross interference.
    fn interference(self) -> (bool, bool) {
        match self {
            Self::NoInterference => (false, false),
            Self::InterferenceRadarOnly => (false, true),
            Self::InterferenceCommsOnly => (true, false),
            Self::InterferenceBoth | Self::ProposedFlexible => (true, true),
        }
    }
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BaselineKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| format!("unknown baseline `{s}`"))
    }
}

/// Aggregated joint rate of one scheme at one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow<T> {
    /// SNR in dB or RF-chain cap.
    pub sweep_value: T,
    pub baseline: BaselineKind,
    pub rho: T,
    pub mean_rate: T,
    /// Sample standard deviation over trials; 0 for a single trial.
    pub std_rate: T,
    pub trials: usize,
    /// Mean over trials of `(|S_com| + |S_rad|) / 2`.
    pub mean_active_rf: T,
}

impl<T: Real> SweepRow<T> {
    /// Standard error of `mean_rate`.
    pub fn std_error(&self) -> T {
        self.std_rate / T::from_count(self.trials).sqrt()
    }
}

/// Everything a single Monte-Carlo trial needs.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization<T> {
    pub comm: CommChannel<T>,
    pub radar: RadarScene<T>,
    pub prec_com: HybridPrecoder<T>,
    pub prec_rad: HybridPrecoder<T>,
    pub combiners: Combiners<T>,
}

impl<T: Real> Realization<T> {
    /// DFT analog precoders, identity baseband and SVD combiners around the
    /// given channels.
    pub fn from_parts(
        cfg: &SystemConfig<T>,
        comm: CommChannel<T>,
        radar: RadarScene<T>,
    ) -> Result<Self> {
        cfg.validate()?;
        let shape = (cfg.n_rx, cfg.n_tx);
        if comm.matrix.shape() != shape {
            return Err(dim_mismatch(
                "communication channel",
                format!("{shape:?}"),
                format!("{:?}", comm.matrix.shape()),
            ));
        }
        if radar.h_rad.shape() != shape {
            return Err(dim_mismatch(
                "radar channel",
                format!("{shape:?}"),
                format!("{:?}", radar.h_rad.shape()),
            ));
        }
        let prec_com = HybridPrecoder::fft(cfg, cfg.p_max_com)?;
        let prec_rad = HybridPrecoder::fft(cfg, cfg.p_max_rad)?;
        let combiners = Combiners::from_channels(&comm.matrix, &radar.h_rad)?;
        Ok(Self {
            comm,
            radar,
            prec_com,
            prec_rad,
            combiners,
        })
    }

    /// Draws the communication channel, then the radar scene.
    pub fn generate<R: Rng + ?Sized>(rng: &mut R, cfg: &SystemConfig<T>) -> Result<Self> {
        let comm = CommChannel::generate(rng, cfg)?;
        let radar = RadarScene::generate(rng, cfg)?;
        Self::from_parts(cfg, comm, radar)
    }

    /// Per-chain coefficients of the power-scaled precoders, no noise offset.
    pub fn coefficients(&self) -> Result<LinearCoefficients<T>> {
        linear_coefficients(
            &self.prec_com.scaled_analog(),
            &self.prec_rad.scaled_analog(),
            &self.comm.matrix,
            &self.radar.h_rad,
            &self.combiners.w_com,
            &self.combiners.w_rad,
        )
    }

    /// Exact rates at the given selections. Interference terms not enabled
    /// are reported as 0.
    pub fn rates(
        &self,
        cfg: &SystemConfig<T>,
        s_com: &Selection,
        s_rad: &Selection,
        interfere_com: bool,
        interfere_rad: bool,
    ) -> Result<RateReport<T>> {
        let f_com = self.prec_com.scaled_analog();
        let f_rad = self.prec_rad.scaled_analog();
        let (h_com, h_rad) = (&self.comm.matrix, &self.radar.h_rad);
        let Combiners { w_com, w_rad } = &self.combiners;
        let noise = cfg.noise_floor();

        let sigma2_rad_com = if interfere_com {
            interference_rad_to_com(s_com, &f_com, h_rad, w_rad)?
        } else {
            T::zero()
        };
        let sigma2_com_rad = if interfere_rad {
            interference_com_to_rad(s_rad, &f_rad, h_com, w_com)?
        } else {
            T::zero()
        };
        let r_com = comm_rate(
            s_com,
            &f_com,
            &self.prec_com.baseband,
            h_com,
            w_com,
            sigma2_rad_com,
            noise,
        )?;
        let r_rad = radar_rate(
            s_rad,
            &f_rad,
            &self.prec_rad.baseband,
            h_rad,
            w_rad,
            sigma2_com_rad,
            noise,
        )?;
        Ok(RateReport {
            r_com,
            r_rad,
            r_joint: joint_rate(cfg.rho, r_com, r_rad)?,
            sigma2_rad_com,
            sigma2_com_rad,
        })
    }
}

/// Rates of one scheme together with the selections it used.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation<T> {
    pub report: RateReport<T>,
    pub s_com: Selection,
    pub s_rad: Selection,
}

impl<T: Real> Evaluation<T> {
    /// `(|S_com| + |S_rad|) / 2`.
    pub fn active_rf(&self) -> T {
        T::from_count(self.s_com.active_count() + self.s_rad.active_count()) / T::lit(2.0)
    }
}

/// The `l` chains with the largest `values`; ties go to the lower index.
pub fn strongest_chains<T: Real>(values: &[T], l: usize) -> Selection {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        values[b]
            .partial_cmp(&values[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    order.truncate(l);
    Selection::from_indices(values.len(), &order)
}

/// Evaluates one scheme on a realization at `cfg.snr_db` and `cfg.rho`.
///
/// Without a cap every baseline runs all chains. With cap `L` the baselines
/// run the `L` chains with the strongest own-signal coefficient per
/// operation, and the proposed scheme selects at most `L` chains.
pub fn evaluate<T: Real>(
    kind: BaselineKind,
    realization: &Realization<T>,
    cfg: &SystemConfig<T>,
    max_active: Option<usize>,
) -> Result<Evaluation<T>> {
    cfg.validate()?;
    let n = realization.prec_com.n_rf();
    if let Some(l) = max_active {
        if l == 0 || l > n {
            return Err(JrcError::RfCountOutOfRange { count: l, n_rf: n });
        }
    }
    let (s_com, s_rad) = match (kind, max_active) {
        (BaselineKind::ProposedFlexible, _) => {
            let noise = cfg.noise_floor();
            let coeffs = realization.coefficients()?.with_noise(noise, noise)?;
            let opts = DinkelbachOptions {
                max_active,
                ..DinkelbachOptions::default()
            };
            let result = dinkelbach_select(&coeffs, cfg.rho, opts)?;
            (result.s_com, result.s_rad)
        }
        (_, Some(l)) if l < n => {
            let coeffs = realization.coefficients()?;
            (
                strongest_chains(&coeffs.c_com, l),
                strongest_chains(&coeffs.c_rad, l),
            )
        }
        _ => (Selection::all(n), Selection::all(n)),
    };
    let (ic, ir) = kind.interference();
    let report = realization.rates(cfg, &s_com, &s_rad, ic, ir)?;
    Ok(Evaluation {
        report,
        s_com,
        s_rad,
    })
}

/// [`evaluate`] without a chain cap, returning only the rates.
pub fn eval_baseline<T: Real>(
    kind: BaselineKind,
    realization: &Realization<T>,
    cfg: &SystemConfig<T>,
) -> Result<RateReport<T>> {
    evaluate(kind, realization, cfg, None).map(|e| e.report)
}

/// Generator for trial `trial` of a sweep seeded with `seed`: the seed picks
/// the key, the trial index picks the stream.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// `(joint rate, active chains)` per point and per [`BaselineKind::ALL`].
type TrialSamples<T> = Vec<[(T, T); 5]>;

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(JrcError::InvalidConfig {
            field: "trials",
            reason: "must be at least 1".into(),
        });
    }
    Ok(())
}

fn run_trials<T, F>(
    cfg: &SystemConfig<T>,
    trials: usize,
    seed: u64,
    per_trial: F,
) -> Result<Vec<TrialSamples<T>>>
where
    T: Real,
    F: Fn(&Realization<T>) -> Result<TrialSamples<T>> + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let realization = Realization::generate(&mut trial_rng(seed, t), cfg)?;
            per_trial(&realization)
        })
        .collect()
}

fn samples_at<T: Real>(
    realization: &Realization<T>,
    cfg: &SystemConfig<T>,
    max_active: Option<usize>,
) -> Result<[(T, T); 5]> {
    let mut out = [(T::zero(), T::zero()); 5];
    for (slot, kind) in out.iter_mut().zip(BaselineKind::ALL) {
        let e = evaluate(kind, realization, cfg, max_active)?;
        *slot = (e.report.r_joint, e.active_rf());
    }
    Ok(out)
}

/// Reduces per-trial samples in trial order.
fn aggregate<T: Real>(points: &[T], rho: T, samples: &[TrialSamples<T>]) -> Vec<SweepRow<T>> {
    let n = samples.len();
    let count = T::from_count(n);
    let mut rows = Vec::with_capacity(points.len() * BaselineKind::ALL.len());
    for (p, &value) in points.iter().enumerate() {
        for (b, kind) in BaselineKind::ALL.into_iter().enumerate() {
            let rates = samples.iter().map(|s| s[p][b].0);
            let mean = rates.clone().fold(T::zero(), |a, x| a + x) / count;
            let std = if n > 1 {
                let ss = rates.fold(T::zero(), |a, x| a + (x - mean) * (x - mean));
                (ss / T::from_count(n - 1)).sqrt()
            } else {
                T::zero()
            };
            let active = samples.iter().fold(T::zero(), |a, s| a + s[p][b].1) / count;
            rows.push(SweepRow {
                sweep_value: value,
                baseline: kind,
                rho,
                mean_rate: mean,
                std_rate: std,
                trials: n,
                mean_active_rf: active,
            });
        }
    }
    rows.sort_by(|a, b| {
        a.sweep_value
            .partial_cmp(&b.sweep_value)
            .unwrap_or(Ordering::Equal)
            .then(a.baseline.cmp(&b.baseline))
    });
    rows
}

/// Mean joint rate of every scheme at each SNR point. Each trial draws one
/// realization and evaluates it at every point.
pub fn run_snr_sweep<T: Real>(
    cfg: &SystemConfig<T>,
    snr_grid: &[T],
    rho: T,
    trials: usize,
    seed: u64,
) -> Result<Vec<SweepRow<T>>> {
    let cfg = cfg.with_rho(rho);
    cfg.validate()?;
    check_trials(trials)?;
    if snr_grid.is_empty() {
        return Err(JrcError::Empty("snr_grid"));
    }
    if let Some(bad) = snr_grid.iter().find(|x| !x.is_finite()) {
        return Err(JrcError::InvalidConfig {
            field: "snr_grid",
            reason: format!("contains non-finite value {bad}"),
        });
    }
    let samples = run_trials(&cfg, trials, seed, |r| {
        snr_grid
            .iter()
            .map(|&snr| samples_at(r, &cfg.with_snr_db(snr), None))
            .collect()
    })?;
    Ok(aggregate(snr_grid, rho, &samples))
}

/// Mean joint rate of every scheme for each RF-chain cap `L`, at
/// `cfg.snr_db`.
pub fn run_rf_sweep<T: Real>(
    cfg: &SystemConfig<T>,
    rf_grid: &[usize],
    rho: T,
    trials: usize,
    seed: u64,
) -> Result<Vec<SweepRow<T>>> {
    let cfg = cfg.with_rho(rho);
    cfg.validate()?;
    check_trials(trials)?;
    if rf_grid.is_empty() {
        return Err(JrcError::Empty("rf_grid"));
    }
    if let Some(&l) = rf_grid.iter().find(|&&l| l == 0 || l > cfg.n_rf) {
        return Err(JrcError::RfCountOutOfRange {
            count: l,
            n_rf: cfg.n_rf,
        });
    }
    let samples = run_trials(&cfg, trials, seed, |r| {
        rf_grid
            .iter()
            .map(|&l| samples_at(r, &cfg, Some(l)))
            .collect()
    })?;
    let points: Vec<T> = rf_grid.iter().map(|&l| T::from_count(l)).collect();
    Ok(aggregate(&points, rho, &samples))
}

/// Whole-degree grid from -90 to 90.
pub fn degree_grid<T: Real>() -> Vec<T> {
    (-90..=90).map(|d| T::lit(f64::from(d))).collect()
}

/// Reference radar beampattern on the whole-degree grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BeampatternSweep<T> {
    pub scene: RadarScene<T>,
    /// `(angle in degrees, power)`.
    pub points: Vec<(T, T)>,
}

/// Beampattern of the reference radar covariance for the scene drawn from
/// `trial_rng(seed, 0)`.
pub fn beampattern_sweep<T: Real>(cfg: &SystemConfig<T>, seed: u64) -> Result<BeampatternSweep<T>> {
    let scene = RadarScene::generate(&mut trial_rng(seed, 0), cfg)?;
    let degrees = degree_grid::<T>();
    let radians: Vec<T> = degrees.iter().map(|d| d.to_radians()).collect();
    let power = beampattern(&scene.r_t_opt, &radians, cfg)?;
    Ok(BeampatternSweep {
        scene,
        points: degrees.into_iter().zip(power).collect(),
    })
}

/// Indices that are at least as large as each neighbour; an endpoint is
/// compared with its single neighbour.
pub fn local_maxima<T: Real>(values: &[T]) -> Vec<usize> {
    (0..values.len())
        .filter(|&i| {
            let left = i == 0 || values[i] >= values[i - 1];
            let right = i + 1 == values.len() || values[i] >= values[i + 1];
            left && right
        })
        .collect()
}
