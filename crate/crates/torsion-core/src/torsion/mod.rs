//! Top-level torsion computations: closed-form theorems, the two spectral
//! pipelines, boundary anomalies, and cross-consistency reports.

mod anomaly;
mod closed;
mod consistency;
mod exact;
mod pipeline;

pub use anomaly::{anomaly_bm, anomaly_df, AnomalyComparison};
pub use closed::{
    analytic_torsion_cone_circle, analytic_torsion_cone_sphere, analytic_torsion_disc,
};
pub use consistency::{consistency_report, ConsistencyReport};
pub use exact::{anomaly_normalization_identity, AnomalyNormalizationCheck};
pub use pipeline::{pipeline_circle, pipeline_sphere};

use crate::engine::EngineError;
use crate::geometry::{BoundaryCondition, ConeGeometry};
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Pipeline,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed",
            Method::Pipeline => "pipeline",
        }
    }
}

/// A log-torsion value with its named-term breakdown. The breakdown terms
/// always sum to `log_value`.
#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub log_value: f64,
    pub breakdown: Vec<(&'static str, f64)>,
    pub method: Method,
    pub geometry: ConeGeometry,
    pub bc: BoundaryCondition,
}

impl TorsionReport {
    pub fn breakdown_sum(&self) -> f64 {
        self.breakdown.iter().map(|(_, v)| v).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TorsionError {
    Engine(EngineError),
    Unsupported(&'static str),
}

impl From<EngineError> for TorsionError {
    fn from(e: EngineError) -> Self {
        TorsionError::Engine(e)
    }
}

impl core::fmt::Display for TorsionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TorsionError::Engine(e) => write!(f, "{e}"),
            TorsionError::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

/// Harmonic-type sums used by the disc formulas.
pub(crate) fn harmonic(n: u32) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

pub(crate) fn odd_harmonic(n: u32) -> f64 {
    (1..=n).map(|k| 1.0 / (2.0 * k as f64 - 1.0)).sum()
}
