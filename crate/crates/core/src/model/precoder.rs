use num_complex::Complex;
use num_traits::Zero;

use super::array::fft_analog_precoder;
use super::config::SystemConfig;
use crate::error::{dim_mismatch, JrcError, Result};
use crate::linalg::CMatrix;
use crate::scalar::Real;

/// Binary diagonal RF-chain selection matrix, stored as its diagonal.
///
/// Entries are 0/1 by construction, so `S S = S` always holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection(Vec<bool>);

impl Selection {
    pub fn all(n: usize) -> Self {
        Self(vec![true; n])
    }

    pub fn none(n: usize) -> Self {
        Self(vec![false; n])
    }

    pub fn from_bools(active: Vec<bool>) -> Self {
        Self(active)
    }

    /// Selection of size `n` with exactly the given chains active.
    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut active = vec![false; n];
        for &k in indices {
            active[k] = true;
        }
        Self(active)
    }

    /// Bit `k` of `mask` activates chain `k`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self((0..n).map(|k| mask >> k & 1 == 1).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn is_active(&self, k: usize) -> bool {
        self.0[k]
    }

    pub fn active_count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn active_indices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(k, &b)| b.then_some(k))
            .collect()
    }

    pub fn as_bools(&self) -> &[bool] {
        &self.0
    }

    /// Diagonal as 0/1 reals.
    pub fn to_real<T: Real>(&self) -> Vec<T> {
        self.0
            .iter()
            .map(|&b| if b { T::one() } else { T::zero() })
            .collect()
    }

    pub fn to_matrix<T: Real>(&self) -> CMatrix<T> {
        CMatrix::from_real_diagonal(&self.to_real::<T>())
    }

    /// Sum of `weights[k]` over active chains.
    pub fn dot<T: Real>(&self, weights: &[T]) -> T {
        debug_assert_eq!(weights.len(), self.len());
        self.0
            .iter()
            .zip(weights)
            .filter(|(&b, _)| b)
            .fold(T::zero(), |acc, (_, &w)| acc + w)
    }
}

/// Analog precoder, baseband precoder and RF-chain selection for one
/// operation, plus the power budget the composed precoder is held to.
#[derive(Debug, Clone, PartialEq)]
pub struct HybridPrecoder<T> {
    /// `n_tx x n_rf`, constant-modulus entries.
    pub analog: CMatrix<T>,
    /// `n_rf x n_streams`.
    pub baseband: CMatrix<T>,
    pub selection: Selection,
    pub power_budget: T,
}

impl<T: Real> HybridPrecoder<T> {
    pub fn new(
        analog: CMatrix<T>,
        baseband: CMatrix<T>,
        selection: Selection,
        power_budget: T,
    ) -> Result<Self> {
        if baseband.rows() != analog.cols() {
            return Err(dim_mismatch(
                "baseband rows",
                analog.cols(),
                baseband.rows(),
            ));
        }
        if selection.len() != analog.cols() {
            return Err(dim_mismatch(
                "selection size",
                analog.cols(),
                selection.len(),
            ));
        }
        if !(power_budget.is_finite() && power_budget > T::zero()) {
            return Err(JrcError::Negative("power budget"));
        }
        let moduli: Vec<T> = analog.as_slice().iter().map(|z| z.norm()).collect();
        if let Some(&first) = moduli.first() {
            let tol = T::lit(1e-9) * (T::one() + first);
            if moduli.iter().any(|&m| (m - first).abs() > tol) {
                return Err(JrcError::NotConstantModulus);
            }
        }
        Ok(Self {
            analog,
            baseband,
            selection,
            power_budget,
        })
    }

    /// DFT analog precoder, `n_rf x n_rf` identity baseband, every chain
    /// active.
    pub fn fft(cfg: &SystemConfig<T>, power_budget: T) -> Result<Self> {
        cfg.validate()?;
        let analog = fft_analog_precoder(cfg.n_tx, cfg.n_rf)?;
        Self::new(
            analog,
            CMatrix::identity(cfg.n_rf),
            Selection::all(cfg.n_rf),
            power_budget,
        )
    }

    pub fn with_selection(&self, selection: Selection) -> Result<Self> {
        Self::new(
            self.analog.clone(),
            self.baseband.clone(),
            selection,
            self.power_budget,
        )
    }

    #[inline]
    pub fn n_rf(&self) -> usize {
        self.analog.cols()
    }

    /// Amplitude factor applied to the analog stage.
    ///
    /// Chosen so that the all-active precoder `F_RF F_BB` spends exactly the
    /// power budget; a selection only switches chains off, so every
    /// selected precoder stays within budget.
    pub fn power_scale(&self) -> T {
        let full = (&self.analog * &self.baseband).frobenius_norm_sqr();
        if full == T::zero() {
            T::zero()
        } else {
            (self.power_budget / full).sqrt()
        }
    }

    /// Analog precoder with the power scale folded in. Entries keep a common
    /// modulus.
    pub fn scaled_analog(&self) -> CMatrix<T> {
        self.analog.scale(self.power_scale())
    }

    /// `c F_RF S F_BB` with `c` the power scale.
    pub fn effective(&self) -> CMatrix<T> {
        let s = self.selection.to_matrix::<T>();
        &(&self.scaled_analog() * &s) * &self.baseband
    }

    /// `tr(F F^H)` of [`effective`](Self::effective).
    pub fn transmit_power(&self) -> T {
        self.effective().frobenius_norm_sqr()
    }
}

/// Dual-function transmit vector.
///
/// Sums `F_RF^a S^a F_BB^b s_b` over the direct pairs `(com, com)` and
/// `(rad, rad)`, plus the cross pairs `(com, rad)` and `(rad, com)` when
/// `with_interference` is set. Power scaling is not applied.
pub fn transmit_signal<T: Real>(
    prec_com: &HybridPrecoder<T>,
    prec_rad: &HybridPrecoder<T>,
    s_com: &[Complex<T>],
    s_rad: &[Complex<T>],
    with_interference: bool,
) -> Result<Vec<Complex<T>>> {
    if prec_com.analog.shape() != prec_rad.analog.shape() {
        return Err(dim_mismatch(
            "analog precoders",
            format!("{:?}", prec_com.analog.shape()),
            format!("{:?}", prec_rad.analog.shape()),
        ));
    }
    if s_com.len() != prec_com.baseband.cols() {
        return Err(dim_mismatch(
            "s_com length",
            prec_com.baseband.cols(),
            s_com.len(),
        ));
    }
    if s_rad.len() != prec_rad.baseband.cols() {
        return Err(dim_mismatch(
            "s_rad length",
            prec_rad.baseband.cols(),
            s_rad.len(),
        ));
    }

    let bb_com = prec_com.baseband.mul_vec(s_com)?;
    let bb_rad = prec_rad.baseband.mul_vec(s_rad)?;
    let branch = |p: &HybridPrecoder<T>, bb: &[Complex<T>]| -> Result<Vec<Complex<T>>> {
        let gated: Vec<Complex<T>> = bb
            .iter()
            .zip(p.selection.as_bools())
            .map(|(&z, &on)| if on { z } else { Complex::zero() })
            .collect();
        p.analog.mul_vec(&gated)
    };

    let mut terms = vec![branch(prec_com, &bb_com)?, branch(prec_rad, &bb_rad)?];
    if with_interference {
        terms.push(branch(prec_com, &bb_rad)?);
        terms.push(branch(prec_rad, &bb_com)?);
    }
    let mut x: Vec<Complex<T>> = vec![Complex::zero(); prec_com.analog.rows()];
    for t in terms {
        for (acc, v) in x.iter_mut().zip(t) {
            *acc = *acc + v;
        }
    }
    Ok(x)
}
