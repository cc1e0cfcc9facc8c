use std::f64::consts::FRAC_PI_2;

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use super::array::steering_vector;
use super::config::SystemConfig;
use crate::error::{dim_mismatch, Result};
use crate::linalg::CMatrix;
use crate::scalar::Real;

/// Narrowband clustered communication channel and the path parameters it
/// was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct CommChannel<T> {
    /// `n_rx x n_tx` channel matrix.
    pub matrix: CMatrix<T>,
    pub path_gains: Vec<Complex<T>>,
    /// Departure angles (radians).
    pub aod: Vec<T>,
    /// Arrival angles (radians).
    pub aoa: Vec<T>,
}

impl<T: Real> CommChannel<T> {
    /// Builds `√(N_T N_R / N_c) Σ_l α_l a_R(φ_l^r) a_T^H(φ_l^t)` from explicit
    /// path parameters. The path count is taken from the inputs.
    pub fn from_paths(
        cfg: &SystemConfig<T>,
        path_gains: Vec<Complex<T>>,
        aod: Vec<T>,
        aoa: Vec<T>,
    ) -> Result<Self> {
        cfg.validate()?;
        if aod.len() != path_gains.len() || aoa.len() != path_gains.len() {
            return Err(dim_mismatch(
                "CommChannel path parameters",
                path_gains.len(),
                format!("{} departures, {} arrivals", aod.len(), aoa.len()),
            ));
        }
        let matrix = clustered_matrix(cfg, &path_gains, &aod, &aoa);
        Ok(Self {
            matrix,
            path_gains,
            aod,
            aoa,
        })
    }

    /// Draws `n_clusters` paths with standard complex Gaussian gains and
    /// angles uniform on `[-π/2, π/2]`.
    pub fn generate<R: Rng + ?Sized>(rng: &mut R, cfg: &SystemConfig<T>) -> Result<Self> {
        cfg.validate()?;
        let half = std::f64::consts::FRAC_1_SQRT_2;
        let gains = (0..cfg.n_clusters)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex::new(T::lit(re * half), T::lit(im * half))
            })
            .collect();
        let aod = uniform_angles(rng, cfg.n_clusters);
        let aoa = uniform_angles(rng, cfg.n_clusters);
        Self::from_paths(cfg, gains, aod, aoa)
    }

    pub fn n_paths(&self) -> usize {
        self.path_gains.len()
    }
}

/// Shorthand for [`CommChannel::generate`].
pub fn gen_comm_channel<T: Real, R: Rng + ?Sized>(
    rng: &mut R,
    cfg: &SystemConfig<T>,
) -> Result<CommChannel<T>> {
    CommChannel::generate(rng, cfg)
}

pub(crate) fn uniform_angles<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<T> {
    (0..n)
        .map(|_| T::lit(rng.random_range(-FRAC_PI_2..=FRAC_PI_2)))
        .collect()
}

/// Path sum with the `√(N_T N_R / L)` prefactor, `L` = number of paths.
pub(crate) fn clustered_matrix<T: Real>(
    cfg: &SystemConfig<T>,
    gains: &[Complex<T>],
    aod: &[T],
    aoa: &[T],
) -> CMatrix<T> {
    let mut h = CMatrix::zeros(cfg.n_rx, cfg.n_tx);
    if gains.is_empty() {
        return h;
    }
    let norm = (T::from_count(cfg.n_tx * cfg.n_rx) / T::from_count(gains.len())).sqrt();
    for ((&alpha, &dep), &arr) in gains.iter().zip(aod).zip(aoa) {
        let a_r = steering_vector(arr, cfg.n_rx, cfg.spacing_ratio);
        let a_t = steering_vector(dep, cfg.n_tx, cfg.spacing_ratio);
        let coef = alpha * norm;
        for (r, ar) in a_r.iter().enumerate() {
            for (c, at) in a_t.iter().enumerate() {
                h[(r, c)] = h[(r, c)] + coef * ar * at.conj();
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg(n_tx: usize, n_rx: usize, n_clusters: usize) -> SystemConfig<f64> {
        SystemConfig {
            n_tx,
            n_rx,
            n_rf: n_rx.min(n_tx),
            n_clusters,
            ..SystemConfig::default()
        }
    }

    #[test]
    fn zero_gain_gives_zero_matrix() {
        let c = cfg(8, 2, 1);
        let ch = CommChannel::from_paths(&c, vec![Complex::new(0.0, 0.0)], vec![0.3], vec![-0.7])
            .unwrap();
        assert_eq!(ch.matrix.frobenius_norm_sqr(), 0.0);
    }

    #[test]
    fn single_unit_path_is_scaled_outer_product() {
        let c = cfg(8, 2, 1);
        let (dep, arr) = (0.3, -0.7);
        let ch = CommChannel::from_paths(&c, vec![Complex::new(1.0, 0.0)], vec![dep], vec![arr])
            .unwrap();
        let a_r = steering_vector(arr, 2, 0.5);
        let a_t = steering_vector(dep, 8, 0.5);
        let expected = CMatrix::outer(&a_r, &a_t).scale(16f64.sqrt());
        assert!(ch.matrix.max_abs_diff(&expected) < 1e-14);
        // rank one: the Gram matrix has a single nonzero eigenvalue equal to N_T N_R
        let (vals, _) = (&ch.matrix * &ch.matrix.adjoint())
            .hermitian_eigen()
            .unwrap();
        assert!((vals[0] - 16.0).abs() < 1e-12);
        assert!(vals[1].abs() < 1e-12);
    }

    #[test]
    fn mismatched_path_vectors_rejected() {
        let c = cfg(8, 2, 2);
        let err = CommChannel::from_paths(
            &c,
            vec![Complex::new(1.0, 0.0); 2],
            vec![0.1],
            vec![0.1, 0.2],
        );
        assert!(err.is_err());
    }

    #[test]
    fn same_seed_same_channel() {
        let c = cfg(16, 4, 6);
        let a = CommChannel::generate(&mut ChaCha8Rng::seed_from_u64(9), &c).unwrap();
        let b = CommChannel::generate(&mut ChaCha8Rng::seed_from_u64(9), &c).unwrap();
        let other = CommChannel::generate(&mut ChaCha8Rng::seed_from_u64(10), &c).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, other);
        assert_eq!(a.n_paths(), 6);
        assert!(a.aod.iter().chain(&a.aoa).all(|x| x.abs() <= FRAC_PI_2));
    }

    #[test]
    fn mean_power_matches_normalization() {
        let c = cfg(8, 2, 6);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let draws = 10_000;
        let mean = (0..draws)
            .map(|_| {
                CommChannel::generate(&mut rng, &c)
                    .unwrap()
                    .matrix
                    .frobenius_norm_sqr()
            })
            .sum::<f64>()
            / draws as f64;
        assert!((mean - 16.0).abs() < 0.05 * 16.0, "mean = {mean}");
    }

    #[test]
    fn single_precision_channel_tracks_double() {
        let c64 = cfg(16, 4, 3);
        let c32 = SystemConfig::<f32> {
            n_tx: 16,
            n_rx: 4,
            n_rf: 4,
            n_clusters: 3,
            ..SystemConfig::default()
        };
        let h64 = CommChannel::generate(&mut ChaCha8Rng::seed_from_u64(5), &c64).unwrap();
        let h32 = CommChannel::generate(&mut ChaCha8Rng::seed_from_u64(5), &c32).unwrap();
        for (a, b) in h64.matrix.as_slice().iter().zip(h32.matrix.as_slice()) {
            assert!((a.re - b.re as f64).abs() < 1e-4 && (a.im - b.im as f64).abs() < 1e-4);
        }
    }
}
