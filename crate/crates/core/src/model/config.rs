use crate::error::{JrcError, Result};
use crate::scalar::Real;

/// Scenario dimensions and scalars shared by every stage of the simulator.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemConfig<T> {
    /// Transmit antennas.
    pub n_tx: usize,
    /// Receive (UE) antennas; also the number of data streams.
    pub n_rx: usize,
    /// Available RF chains.
    pub n_rf: usize,
    /// Multipath clusters in the communication channel.
    pub n_clusters: usize,
    /// Radar targets.
    pub n_targets: usize,
    /// Weight of the communication rate in the joint rate.
    pub rho: T,
    pub p_max_com: T,
    pub p_max_rad: T,
    pub snr_db: T,
    /// Antenna spacing over wavelength.
    pub spacing_ratio: T,
}

impl<T: Real> Default for SystemConfig<T> {
    /// Desk-scale scenario: 32 transmit antennas, otherwise the
    /// full-scale setup of [`SystemConfig::full_scale`].
    fn default() -> Self {
        Self {
            n_tx: 32,
            n_rx: 4,
            n_rf: 4,
            n_clusters: 6,
            n_targets: 3,
            rho: T::lit(0.5),
            p_max_com: T::one(),
            p_max_rad: T::one(),
            snr_db: T::zero(),
            spacing_ratio: T::lit(0.5),
        }
    }
}

impl<T: Real> SystemConfig<T> {
    /// 96 transmit antennas, 4 UE antennas and RF chains, 6 clusters,
    /// 3 targets.
    pub fn full_scale() -> Self {
        Self {
            n_tx: 96,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let counts = [
            ("n_tx", self.n_tx),
            ("n_rx", self.n_rx),
            ("n_rf", self.n_rf),
            ("n_clusters", self.n_clusters),
            ("n_targets", self.n_targets),
        ];
        for (field, value) in counts {
            if value == 0 {
                return Err(invalid(field, "must be at least 1"));
            }
        }
        if self.n_rf > self.n_tx {
            return Err(invalid(
                "n_rf",
                format!("({}) must not exceed n_tx ({})", self.n_rf, self.n_tx),
            ));
        }
        if !self.n_rx.is_multiple_of(2) {
            return Err(invalid("n_rx", format!("({}) must be even", self.n_rx)));
        }
        if !(self.rho >= T::zero() && self.rho <= T::one()) {
            return Err(invalid("rho", format!("({}) must lie in [0, 1]", self.rho)));
        }
        for (field, value) in [
            ("p_max_com", self.p_max_com),
            ("p_max_rad", self.p_max_rad),
            ("spacing_ratio", self.spacing_ratio),
        ] {
            if !(value.is_finite() && value > T::zero()) {
                return Err(invalid(
                    field,
                    format!("({value}) must be positive and finite"),
                ));
            }
        }
        if !self.snr_db.is_finite() {
            return Err(invalid("snr_db", "must be finite"));
        }
        Ok(())
    }

    /// Thermal noise power `10^(-snr_db/10)` added to every rate denominator.
    pub fn noise_floor(&self) -> T {
        T::lit(10.0).powf(-self.snr_db / T::lit(10.0))
    }

    #[inline]
    pub fn n_streams(&self) -> usize {
        self.n_rx
    }

    pub fn with_snr_db(&self, snr_db: T) -> Self {
        Self {
            snr_db,
            ..self.clone()
        }
    }

    pub fn with_rho(&self, rho: T) -> Self {
        Self {
            rho,
            ..self.clone()
        }
    }
}

fn invalid(field: &'static str, reason: impl Into<String>) -> JrcError {
    JrcError::InvalidConfig {
        field,
        reason: reason.into(),
    }
}
