//! Analytic-continuation machinery for the spectral torsion pipelines.
//!
//! * `phi`: finite `(1-lambda)^{-a}` expansions and their contour
//!   transform `Phi(s) = sum_a c_a Gamma(s+a)/(Gamma(a) s)`;
//! * `simple_zeta`: value and derivative at `s = 0` of the quadratic
//!   Bessel zeta `z(s, nu, q, l)`;
//! * `sphere_zeta`: the shifted sphere zeta
//!   `zeta(s, Sp+ Delta^0_{S^2}) = sum (2n+1) (n(n+1))^{-s}` by binomial
//!   continuation, with an independent Plana-summation route at `s = 1/2`;
//! * `f_zero`: the boundary series `F(0, nu)` by two independent routes;
//! * `gamma_seq`: closed forms for `log Gamma(-lambda, S_n/u_n^2)`;
//! * `decomposition`: pole bookkeeping of `zeta(s, U)` and the assembly
//!   of `Z(0)`/`Z'(0)` differences for the two cones.

mod decomposition;
mod f_zero;
mod gamma_seq;
mod phi;
mod simple_zeta;
mod sphere_zeta;

pub use decomposition::{circle_z_difference, sphere_z_difference, DecompositionConfig, ZetaPole};
pub use f_zero::{
    f_zero, f_zero_printed_series_nu1, f_zero_series, f_zero_subtraction, FZeroValue,
};
pub use gamma_seq::{log_gamma_sequence, GammaSequenceCase};
pub use phi::{
    circle_phi_pair, phi_transform, sphere_phi2_pair, MeromorphicValue, PLambdaExpansion,
    PhiTransform,
};
pub use simple_zeta::{simple_bessel_zeta, SimpleZetaValues};
pub use sphere_zeta::{zeta_sp_sphere, zeta_sp_sphere_plana_half};

use crate::specfun::SpecfunError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EngineError {
    Specfun(SpecfunError),
    Domain(&'static str),
    Pole(&'static str),
    /// The two independent routes to `F(0, nu)` disagree beyond tolerance.
    FZeroMismatch {
        series: f64,
        oracle: f64,
    },
}

impl From<SpecfunError> for EngineError {
    fn from(e: SpecfunError) -> Self {
        EngineError::Specfun(e)
    }
}

impl core::fmt::Display for EngineError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EngineError::Specfun(e) => write!(f, "{e}"),
            EngineError::Domain(msg) => write!(f, "domain error: {msg}"),
            EngineError::Pole(msg) => write!(f, "pole error: {msg}"),
            EngineError::FZeroMismatch { series, oracle } => write!(
                f,
                "F(0,nu) consistency failure: series route {series} vs subtraction oracle {oracle}"
            ),
        }
    }
}
