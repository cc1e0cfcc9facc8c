//! Interference powers, per-operation rates, their per-chain linear
//! decomposition and the weighted joint rate.
//!
//! With an identity-Gram baseband precoder and a 0/1 diagonal selection,
//! every quadratic form in the rate expressions is a sum of per-chain
//! terms `|w^H H f_k|^2`; [`LinearCoefficients`] stores those terms so the
//! selection stage can work on dot products.

use crate::error::{dim_mismatch, JrcError, Result};
use crate::linalg::CMatrix;
use crate::model::Selection;
use crate::scalar::Real;

/// Rates and interference powers for one realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport<T> {
    /// Communication rate, bits/s/Hz.
    pub r_com: T,
    /// Radar rate, bits/s/Hz.
    pub r_rad: T,
    /// `rho r_com + (1 - rho) r_rad`.
    pub r_joint: T,
    /// Radar-to-communication interference used in the communication rate.
    pub sigma2_rad_com: T,
    /// Communication-to-radar interference used in the radar rate.
    pub sigma2_com_rad: T,
}

/// Per-chain coefficients of the signal and interference quadratic forms.
///
/// `noise_com` / `noise_rad` are constant offsets added to the interference
/// sums in the fractional objective; zero gives the pure
/// signal-to-interference ratios.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearCoefficients<T> {
    /// `c_com[k] = Σ_s |w_com,s^H H_com f_k^com|^2`.
    pub c_com: Vec<T>,
    /// `g_com[k] = Σ_s |w_rad,s^H H_rad f_k^com|^2`.
    pub g_com: Vec<T>,
    /// `c_rad[k] = Σ_s |w_rad,s^H H_rad f_k^rad|^2`.
    pub c_rad: Vec<T>,
    /// `g_rad[k] = Σ_s |w_com,s^H H_com f_k^rad|^2`.
    pub g_rad: Vec<T>,
    pub noise_com: T,
    pub noise_rad: T,
}

impl<T: Real> LinearCoefficients<T> {
    /// Coefficients without noise offsets; all four vectors must share a
    /// length and be nonnegative.
    pub fn new(c_com: Vec<T>, g_com: Vec<T>, c_rad: Vec<T>, g_rad: Vec<T>) -> Result<Self> {
        let coeffs = Self {
            c_com,
            g_com,
            c_rad,
            g_rad,
            noise_com: T::zero(),
            noise_rad: T::zero(),
        };
        coeffs.validate()?;
        Ok(coeffs)
    }

    pub fn with_noise(mut self, noise_com: T, noise_rad: T) -> Result<Self> {
        self.noise_com = noise_com;
        self.noise_rad = noise_rad;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.c_com.len();
        for (name, v) in [
            ("g_com", &self.g_com),
            ("c_rad", &self.c_rad),
            ("g_rad", &self.g_rad),
        ] {
            if v.len() != n {
                return Err(dim_mismatch(name, n, v.len()));
            }
        }
        let nonneg = |x: &T| x.is_finite() && *x >= T::zero();
        for (name, v) in [
            ("c_com", &self.c_com),
            ("g_com", &self.g_com),
            ("c_rad", &self.c_rad),
            ("g_rad", &self.g_rad),
        ] {
            if !v.iter().all(nonneg) {
                return Err(JrcError::Negative(name));
            }
        }
        if !nonneg(&self.noise_com) {
            return Err(JrcError::Negative("noise_com"));
        }
        if !nonneg(&self.noise_rad) {
            return Err(JrcError::Negative("noise_rad"));
        }
        Ok(())
    }

    #[inline]
    pub fn n_rf(&self) -> usize {
        self.c_com.len()
    }

    pub fn delta_com(&self, s: &Selection) -> T {
        s.dot(&self.c_com)
    }

    pub fn sigma2_rad_com(&self, s: &Selection) -> T {
        s.dot(&self.g_com)
    }

    pub fn delta_rad(&self, s: &Selection) -> T {
        s.dot(&self.c_rad)
    }

    pub fn sigma2_com_rad(&self, s: &Selection) -> T {
        s.dot(&self.g_rad)
    }

    /// `δ_com / (σ²_rad-com + noise_com)`, denominator floored at 1e-12.
    pub fn fraction_com(&self, s: &Selection) -> T {
        guarded_ratio(self.delta_com(s), self.sigma2_rad_com(s) + self.noise_com)
    }

    /// `δ_rad / (σ²_com-rad + noise_rad)`, denominator floored at 1e-12.
    pub fn fraction_rad(&self, s: &Selection) -> T {
        guarded_ratio(self.delta_rad(s), self.sigma2_com_rad(s) + self.noise_rad)
    }

    /// Multiplies every coefficient and both noise offsets by `k`.
    pub fn scaled(&self, k: T) -> Self {
        let sc = |v: &[T]| v.iter().map(|&x| x * k).collect();
        Self {
            c_com: sc(&self.c_com),
            g_com: sc(&self.g_com),
            c_rad: sc(&self.c_rad),
            g_rad: sc(&self.g_rad),
            noise_com: self.noise_com * k,
            noise_rad: self.noise_rad * k,
        }
    }
}

pub(crate) fn guarded_ratio<T: Real>(num: T, den: T) -> T {
    num / den.max(T::denominator_guard())
}

/// `|(W^H H F)_{s,k}|^2` for every combiner column `s` and chain `k`.
fn projected_power<T: Real>(
    context: &'static str,
    f_rf: &CMatrix<T>,
    h: &CMatrix<T>,
    w: &CMatrix<T>,
) -> Result<CMatrix<T>> {
    if h.cols() != f_rf.rows() {
        return Err(dim_mismatch(
            context,
            format!("{} channel columns", f_rf.rows()),
            h.cols(),
        ));
    }
    if w.rows() != h.rows() {
        return Err(dim_mismatch(
            context,
            format!("{} combiner rows", h.rows()),
            w.rows(),
        ));
    }
    w.adjoint().try_mul(h)?.try_mul(f_rf)
}

fn column_power<T: Real>(a: &CMatrix<T>) -> Vec<T> {
    (0..a.cols())
        .map(|k| (0..a.rows()).map(|s| a[(s, k)].norm_sqr()).sum())
        .collect()
}

fn selected_quadratic<T: Real>(
    context: &'static str,
    s: &Selection,
    f_rf: &CMatrix<T>,
    h: &CMatrix<T>,
    w: &CMatrix<T>,
) -> Result<T> {
    if s.len() != f_rf.cols() {
        return Err(dim_mismatch(context, f_rf.cols(), s.len()));
    }
    let a = projected_power(context, f_rf, h, w)?;
    Ok(s.dot(&column_power(&a)))
}

/// Radar-to-communication interference
/// `Σ_s w_rad,s^H H_rad F_RF^com S^com F_RF^com^H H_rad^H w_rad,s`.
pub fn interference_rad_to_com<T: Real>(
    s_com: &Selection,
    f_rf_com: &CMatrix<T>,
    h_rad: &CMatrix<T>,
    w_rad: &CMatrix<T>,
) -> Result<T> {
    selected_quadratic("interference_rad_to_com", s_com, f_rf_com, h_rad, w_rad)
}

/// Communication-to-radar interference
/// `Σ_s w_com,s^H H_com F_RF^rad S^rad F_RF^rad^H H_com^H w_com,s`.
pub fn interference_com_to_rad<T: Real>(
    s_rad: &Selection,
    f_rf_rad: &CMatrix<T>,
    h_com: &CMatrix<T>,
    w_com: &CMatrix<T>,
) -> Result<T> {
    selected_quadratic("interference_com_to_rad", s_rad, f_rf_rad, h_com, w_com)
}

/// Sum over combiner columns of `log2(1 + signal_s / (interference + noise))`,
/// `signal_s = ||w_s^H H F_RF S F_BB||^2`.
#[allow(clippy::too_many_arguments)]
fn stream_rate_sum<T: Real>(
    context: &'static str,
    s: &Selection,
    f_rf: &CMatrix<T>,
    f_bb: &CMatrix<T>,
    h: &CMatrix<T>,
    w: &CMatrix<T>,
    interference: T,
    noise_floor: T,
) -> Result<T> {
    if interference.is_nan() || interference < T::zero() {
        return Err(JrcError::Negative("interference"));
    }
    if noise_floor.is_nan() || noise_floor < T::zero() {
        return Err(JrcError::Negative("noise floor"));
    }
    let den = interference + noise_floor;
    if den == T::zero() {
        return Err(JrcError::ZeroDenominator);
    }
    if s.len() != f_rf.cols() {
        return Err(dim_mismatch(context, f_rf.cols(), s.len()));
    }
    if f_bb.rows() != f_rf.cols() {
        return Err(dim_mismatch(
            context,
            format!("{} baseband rows", f_rf.cols()),
            f_bb.rows(),
        ));
    }
    let mut a = projected_power(context, f_rf, h, w)?;
    for k in (0..s.len()).filter(|&k| !s.is_active(k)) {
        for r in 0..a.rows() {
            a[(r, k)] = num_complex::Complex::new(T::zero(), T::zero());
        }
    }
    let b = a.try_mul(f_bb)?;
    Ok((0..b.rows())
        .map(|r| {
            let signal: T = b.row(r).iter().map(|z| z.norm_sqr()).sum();
            (T::one() + signal / den).log2()
        })
        .sum())
}

/// Communication rate with radar interference and a thermal noise floor.
#[allow(clippy::too_many_arguments)]
pub fn comm_rate<T: Real>(
    s_com: &Selection,
    f_rf_com: &CMatrix<T>,
    f_bb_com: &CMatrix<T>,
    h_com: &CMatrix<T>,
    w_com: &CMatrix<T>,
    interference: T,
    noise_floor: T,
) -> Result<T> {
    stream_rate_sum(
        "comm_rate",
        s_com,
        f_rf_com,
        f_bb_com,
        h_com,
        w_com,
        interference,
        noise_floor,
    )
}

/// Radar rate with communication interference and a thermal noise floor.
#[allow(clippy::too_many_arguments)]
pub fn radar_rate<T: Real>(
    s_rad: &Selection,
    f_rf_rad: &CMatrix<T>,
    f_bb_rad: &CMatrix<T>,
    h_rad: &CMatrix<T>,
    w_rad: &CMatrix<T>,
    interference: T,
    noise_floor: T,
) -> Result<T> {
    stream_rate_sum(
        "radar_rate",
        s_rad,
        f_rf_rad,
        f_bb_rad,
        h_rad,
        w_rad,
        interference,
        noise_floor,
    )
}

pub fn joint_rate<T: Real>(rho: T, r_com: T, r_rad: T) -> Result<T> {
    if !(rho >= T::zero() && rho <= T::one()) {
        return Err(JrcError::RhoOutOfRange(rho.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(rho * r_com + (T::one() - rho) * r_rad)
}

/// Per-chain coefficients for both operations. Both analog precoders must
/// have the same number of chains.
pub fn linear_coefficients<T: Real>(
    f_rf_com: &CMatrix<T>,
    f_rf_rad: &CMatrix<T>,
    h_com: &CMatrix<T>,
    h_rad: &CMatrix<T>,
    w_com: &CMatrix<T>,
    w_rad: &CMatrix<T>,
) -> Result<LinearCoefficients<T>> {
    if f_rf_com.cols() != f_rf_rad.cols() {
        return Err(dim_mismatch(
            "linear_coefficients chains",
            f_rf_com.cols(),
            f_rf_rad.cols(),
        ));
    }
    let c_com = column_power(&projected_power("c_com", f_rf_com, h_com, w_com)?);
    let g_com = column_power(&projected_power("g_com", f_rf_com, h_rad, w_rad)?);
    let c_rad = column_power(&projected_power("c_rad", f_rf_rad, h_rad, w_rad)?);
    let g_rad = column_power(&projected_power("g_rad", f_rf_rad, h_com, w_com)?);
    LinearCoefficients::new(c_com, g_com, c_rad, g_rad)
}

/// `rho δ_com/σ_rad-com + (1 - rho) δ_rad/σ_com-rad` from coefficient dot
/// products, each denominator including its noise offset and floored at
/// 1e-12.
pub fn approx_weighted_objective<T: Real>(
    coeffs: &LinearCoefficients<T>,
    s_com: &Selection,
    s_rad: &Selection,
    rho: T,
) -> T {
    rho * coeffs.fraction_com(s_com) + (T::one() - rho) * coeffs.fraction_rad(s_rad)
}
