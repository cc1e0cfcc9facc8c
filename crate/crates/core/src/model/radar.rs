use std::ops::Range;

use num_complex::Complex;
use rand::Rng;

use super::array::steering_vector;
use super::channel::{clustered_matrix, uniform_angles};
use super::config::SystemConfig;
use crate::error::{dim_mismatch, JrcError, Result};
use crate::linalg::CMatrix;
use crate::scalar::Real;

/// Radar targets, the radar channel they induce, and the reference radar
/// precoder / covariance pointed at them.
#[derive(Debug, Clone, PartialEq)]
pub struct RadarScene<T> {
    pub target_angles: Vec<T>,
    /// `n_rx x n_tx`; one unit-gain path per target with matched departure
    /// and arrival angles.
    pub h_rad: CMatrix<T>,
    /// `n_tx x n_targets`; column `i` carries the entries of `a_T(φ_i)` in
    /// antenna slot `i` and zeros elsewhere.
    pub f_rad_opt: CMatrix<T>,
    /// `f_rad_opt f_rad_opt^H`.
    pub r_t_opt: CMatrix<T>,
}

/// Contiguous antenna slots, one per target. When `n_tx` is not a multiple
/// of `n_targets` the leading slots take one extra antenna each.
pub fn block_slots(n_tx: usize, n_targets: usize) -> Vec<Range<usize>> {
    let base = n_tx / n_targets;
    let extra = n_tx % n_targets;
    let mut start = 0;
    (0..n_targets)
        .map(|i| {
            let len = base + usize::from(i < extra);
            let slot = start..start + len;
            start += len;
            slot
        })
        .collect()
}

impl<T: Real> RadarScene<T> {
    pub fn from_angles(cfg: &SystemConfig<T>, target_angles: Vec<T>) -> Result<Self> {
        cfg.validate()?;
        if cfg.n_targets > cfg.n_tx {
            return Err(JrcError::InvalidConfig {
                field: "n_targets",
                reason: format!("({}) must not exceed n_tx ({})", cfg.n_targets, cfg.n_tx),
            });
        }
        if target_angles.len() != cfg.n_targets {
            return Err(dim_mismatch(
                "RadarScene target angles",
                cfg.n_targets,
                target_angles.len(),
            ));
        }

        let mut f_rad_opt = CMatrix::zeros(cfg.n_tx, cfg.n_targets);
        for (i, (slot, &phi)) in block_slots(cfg.n_tx, cfg.n_targets)
            .into_iter()
            .zip(&target_angles)
            .enumerate()
        {
            let a = steering_vector(phi, cfg.n_tx, cfg.spacing_ratio);
            for m in slot {
                f_rad_opt[(m, i)] = a[m];
            }
        }
        let r_t_opt = &f_rad_opt * &f_rad_opt.adjoint();

        let gains = vec![Complex::new(T::one(), T::zero()); cfg.n_targets];
        let h_rad = clustered_matrix(cfg, &gains, &target_angles, &target_angles);

        Ok(Self {
            target_angles,
            h_rad,
            f_rad_opt,
            r_t_opt,
        })
    }

    /// Draws `n_targets` angles uniform on `[-π/2, π/2]`.
    pub fn generate<R: Rng + ?Sized>(rng: &mut R, cfg: &SystemConfig<T>) -> Result<Self> {
        cfg.validate()?;
        let angles = uniform_angles(rng, cfg.n_targets);
        Self::from_angles(cfg, angles)
    }
}

/// Shorthand for [`RadarScene::generate`].
pub fn gen_radar_scene<T: Real, R: Rng + ?Sized>(
    rng: &mut R,
    cfg: &SystemConfig<T>,
) -> Result<RadarScene<T>> {
    RadarScene::generate(rng, cfg)
}
