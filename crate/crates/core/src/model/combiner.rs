use num_complex::Complex;

use crate::error::{JrcError, Result};
use crate::linalg::CMatrix;
use crate::scalar::Real;

/// Receive combiners for both operations; column `k` serves stream `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Combiners<T> {
    pub w_com: CMatrix<T>,
    pub w_rad: CMatrix<T>,
}

impl<T: Real> Combiners<T> {
    pub fn from_channels(h_com: &CMatrix<T>, h_rad: &CMatrix<T>) -> Result<Self> {
        Ok(Self {
            w_com: svd_combiner(h_com)?,
            w_rad: svd_combiner(h_rad)?,
        })
    }
}

/// Left singular vectors of `h`, ordered by descending singular value, as
/// the columns of an `n_rx x n_rx` unitary matrix.
///
/// Computed from the eigenvectors of `h h^H`. Each column is rotated so its
/// largest-magnitude entry is real and positive, which fixes the otherwise
/// arbitrary phase.
pub fn svd_combiner<T: Real>(h: &CMatrix<T>) -> Result<CMatrix<T>> {
    if h.frobenius_norm_sqr() == T::zero() {
        return Err(JrcError::DegenerateChannel);
    }
    let gram = h * &h.adjoint();
    let (_, mut u) = gram.hermitian_eigen()?;
    for c in 0..u.cols() {
        let pivot =
            (0..u.rows())
                .map(|r| u[(r, c)])
                .fold(Complex::new(T::zero(), T::zero()), |best, z| {
                    if z.norm() > best.norm() {
                        z
                    } else {
                        best
                    }
                });
        let rot = pivot.conj() / pivot.norm();
        for r in 0..u.rows() {
            u[(r, c)] = u[(r, c)] * rot;
        }
    }
    Ok(u)
}
