//! Constant R-matrices of GL, multi-parameter GL, GL super, SO, Sp and Osp
//! type, with skew-inverses, quantum-trace matrices and projectors.

mod build;
mod checks;
mod family;

pub use build::{
    dq_weights, gl_rhat, khat_from, osp_rhat, psi_hat_closed_form, rhat, skew_inverse, OspSign,
    RData,
};
pub use checks::{
    alpha, beta, char_product, check_bmw_structure, check_characteristic, check_projectors,
    check_skew, check_traces, check_ybe, run_checks, spectral_projectors, y_n, y_n_expected,
    ybe_residual,
};
pub use family::{Family, Kind};

use crate::tensor::TensorError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RError {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("R-matrix is not skew-invertible")]
    NotSkewInvertible,
    #[error("{0} is not diagonal")]
    NotDiagonal(String),
    #[error("repeated eigenvalues")]
    RepeatedEigenvalue,
    #[error("operation needs a BMW-type family")]
    NotBmw,
    #[error("operation needs a Hecke-type family")]
    NotHecke,
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

impl From<crate::ring::RingError> for RError {
    fn from(e: crate::ring::RingError) -> Self {
        RError::Tensor(TensorError::Ring(e))
    }
}
