//! Flexible hybrid beamforming for dual-function joint radar-communication
//! MIMO transmitters.
//!
//! * [`model`]: configuration, array responses, channels, radar scene,
//!   hybrid precoders and SVD combiners.
//! * [`rates`]: interference powers, communication / radar rates and their
//!   per-chain linear decomposition.
//! * [`selection`]: Dinkelbach RF-chain selection and an exhaustive oracle.
//! * [`sim`]: Monte-Carlo sweeps over SNR and RF-chain count.
//!
//! Numeric code is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.

pub mod error;
pub mod linalg;
pub mod model;
pub mod rates;
mod scalar;
pub mod selection;
pub mod sim;

pub use error::{JrcError, Result};
pub use linalg::CMatrix;
pub use model::{
    beampattern, block_slots, fft_analog_precoder, gen_comm_channel, gen_radar_scene,
    steering_vector, svd_combiner, transmit_signal, Combiners, CommChannel, HybridPrecoder,
    RadarScene, Selection, SystemConfig,
};
pub use rates::{
    approx_weighted_objective, comm_rate, interference_com_to_rad, interference_rad_to_com,
    joint_rate, linear_coefficients, radar_rate, LinearCoefficients, RateReport,
};
pub use scalar::Real;
pub use selection::{
    brute_force_select, dinkelbach_select, round_selection, solve_db_subproblem, BruteForceResult,
    DinkelbachOptions, RelaxedSelection, SelectionResult,
};
pub use sim::{
    eval_baseline, evaluate, run_rf_sweep, run_snr_sweep, BaselineKind, Evaluation, Realization,
    SweepRow,
};

pub type CMatrix64 = CMatrix<f64>;
pub type SystemConfig64 = SystemConfig<f64>;
pub type CommChannel64 = CommChannel<f64>;
pub type RadarScene64 = RadarScene<f64>;
pub type HybridPrecoder64 = HybridPrecoder<f64>;
pub type Combiners64 = Combiners<f64>;
pub type RateReport64 = RateReport<f64>;
pub type LinearCoefficients64 = LinearCoefficients<f64>;
pub type SelectionResult64 = SelectionResult<f64>;
pub type Realization64 = Realization<f64>;
pub type SweepRow64 = SweepRow<f64>;

pub type SystemConfig32 = SystemConfig<f32>;
pub type CommChannel32 = CommChannel<f32>;
pub type RadarScene32 = RadarScene<f32>;
pub type LinearCoefficients32 = LinearCoefficients<f32>;
pub type SweepRow32 = SweepRow<f32>;
