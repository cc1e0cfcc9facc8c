//! Uniform linear array responses, the DFT analog codebook and the transmit
//! beampattern.

use num_complex::Complex;

use super::config::SystemConfig;
use crate::error::{dim_mismatch, JrcError, Result};
use crate::linalg::{inner, CMatrix};
use crate::scalar::Real;

/// Unit-norm ULA response toward `angle` (radians from broadside).
///
/// Entry `m` is `exp(j 2π d/λ m sin(angle)) / √n`.
pub fn steering_vector<T: Real>(angle: T, n: usize, spacing_ratio: T) -> Vec<Complex<T>> {
    let amp = T::one() / T::from_count(n).sqrt();
    let step = T::TAU() * spacing_ratio * angle.sin();
    (0..n)
        .map(|m| Complex::from_polar(amp, step * T::from_count(m)))
        .collect()
}

/// First `n_rf` columns of the `n_tx`-point unitary DFT matrix.
pub fn fft_analog_precoder<T: Real>(n_tx: usize, n_rf: usize) -> Result<CMatrix<T>> {
    if n_rf == 0 || n_rf > n_tx {
        return Err(JrcError::RfCountOutOfRange {
            count: n_rf,
            n_rf: n_tx,
        });
    }
    let amp = T::one() / T::from_count(n_tx).sqrt();
    let n = T::from_count(n_tx);
    Ok(CMatrix::from_fn(n_tx, n_rf, |m, k| {
        // reduce the exponent mod n_tx before scaling to keep the phase exact
        let idx = (m * k) % n_tx;
        Complex::from_polar(amp, -T::TAU() * T::from_count(idx) / n)
    }))
}

/// Transmit beampattern `a^H(φ) R a(φ)` over `grid`; negative round-off is
/// clamped to zero.
pub fn beampattern<T: Real>(r: &CMatrix<T>, grid: &[T], cfg: &SystemConfig<T>) -> Result<Vec<T>> {
    if r.shape() != (cfg.n_tx, cfg.n_tx) {
        return Err(dim_mismatch(
            "beampattern covariance",
            format!("{0}x{0}", cfg.n_tx),
            format!("{}x{}", r.rows(), r.cols()),
        ));
    }
    let defect = r.hermitian_defect().unwrap_or_else(T::infinity);
    if defect > T::lit(1e-9) * (T::one() + r.frobenius_norm()) {
        return Err(JrcError::NotHermitian(defect.to_f64().unwrap_or(f64::NAN)));
    }
    grid.iter()
        .map(|&phi| {
            let a = steering_vector(phi, cfg.n_tx, cfg.spacing_ratio);
            let ra = r.mul_vec(&a)?;
            Ok(inner(&a, &ra).re.max(T::zero()))
        })
        .collect()
}
