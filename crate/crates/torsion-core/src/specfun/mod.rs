//! Self-contained special functions.
//!
//! Gamma family, Riemann/Hurwitz zeta with analytic continuation, Bessel
//! `J`/`I` (with derivatives), the zero families `j_{nu,k}`, `j'_{nu,k}`
//! and the Robin-type combinations `G^pm_nu(z) = pm J_nu(z)/2 + z J'_nu(z)`,
//! and the first uniform large-order expansion coefficients.
//!
//! Everything is binary64 with compensated summation in the series loops;
//! there is no arbitrary-precision fallback.

mod bessel;
mod gamma;
mod uniform;
mod zeros;
mod zeta;

pub use bessel::{
    bessel_i, bessel_i_scaled, bessel_j, bessel_j_pair, bessel_j_prime, ScaledBesselI,
};
pub use gamma::{digamma, gamma_ln};
pub use uniform::{uniform_expansion_coeffs, ExpansionKind};
pub use zeros::{g_function, zero, ZeroSeq};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_with_derivative, riemann_zeta, riemann_zeta_with_derivative,
};

pub use crate::mathx::EULER_GAMMA;

/// One of the four zero families used by the cone spectra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZeroKind {
    /// Positive zeros of `J_nu`.
    JZero,
    /// Positive zeros of `J'_nu`.
    JPrimeZero,
    /// Positive zeros of `G^+_nu(z) = J_nu(z)/2 + z J'_nu(z)`.
    GPlusZero,
    /// Positive zeros of `G^-_nu(z) = -J_nu(z)/2 + z J'_nu(z)`.
    GMinusZero,
}

impl ZeroKind {
    pub fn label(self) -> &'static str {
        match self {
            ZeroKind::JZero => "J",
            ZeroKind::JPrimeZero => "Jp",
            ZeroKind::GPlusZero => "G+",
            ZeroKind::GMinusZero => "G-",
        }
    }
}

/// A zero family together with its (real, non-negative) order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroFamily {
    pub kind: ZeroKind,
    pub order: f64,
}

impl ZeroFamily {
    pub fn new(kind: ZeroKind, order: f64) -> Result<Self, SpecfunError> {
        if !(order >= 0.0) || !order.is_finite() {
            return Err(SpecfunError::Domain(
                "zero family order must be finite and >= 0",
            ));
        }
        if matches!(kind, ZeroKind::GPlusZero | ZeroKind::GMinusZero) && order <= 0.5 {
            // G^-_nu degenerates for nu <= 1/2: z J'/J never crosses +1/2.
            return Err(SpecfunError::Domain("G-family zeros require order > 1/2"));
        }
        Ok(Self { kind, order })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpecfunError {
    /// Argument outside the supported domain.
    Domain(&'static str),
    /// Evaluation at a pole of the function.
    Pole(&'static str),
    /// Unscaled result would exceed the representable range.
    Overflow,
    /// A root search failed; carries the bracket that was being refined.
    NoConvergence {
        what: &'static str,
        lo: f64,
        hi: f64,
    },
}

impl core::fmt::Display for SpecfunError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpecfunError::Domain(m) => write!(f, "domain error: {m}"),
            SpecfunError::Pole(m) => write!(f, "pole error: {m}"),
            SpecfunError::Overflow => write!(f, "overflow: unscaled result not representable"),
            SpecfunError::NoConvergence { what, lo, hi } => {
                write!(f, "no convergence in {what}: bracket [{lo}, {hi}]")
            }
        }
    }
}
