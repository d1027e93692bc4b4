//! Closed-form analytic torsion of discs and the two cones.

use super::{harmonic, odd_harmonic, Method, TorsionError, TorsionReport};
use crate::engine::f_zero;
use crate::geometry::{volume, BoundaryCondition, ConeGeometry, GeometryError};
use crate::mathx as m;
use alloc::vec;

impl From<GeometryError> for TorsionError {
    fn from(_: GeometryError) -> Self {
        TorsionError::Unsupported("invalid geometry")
    }
}

/// Analytic torsion of `D^m_l` with absolute boundary conditions.
///
/// * odd `m = 2p-1`:  `rk ( log V / 2 + log 2 / 2 + H_{p-1} / 4 )`
/// * even `m = 2p`:   `rk ( log V / 2 + (p/2) sum_{n=1}^p 1/(2n-1) )`
/// * `m = 1` keeps the product-metric value `log l / 2 + log 2 / 2`.
pub fn analytic_torsion_disc(m_dim: u32, l: f64, rank: u32) -> Result<TorsionReport, TorsionError> {
    let geom = ConeGeometry::disc(m_dim, l, rank)?;
    let rk = rank as f64;
    let (volume_term, log2_term, harmonic_term) = if m_dim == 1 {
        (0.5 * rk * m::ln(l), 0.5 * rk * m::ln(2.0), 0.0)
    } else if m_dim % 2 == 1 {
        let p = (m_dim + 1) / 2;
        (
            0.5 * rk * m::ln(volume(&geom)),
            0.5 * rk * m::ln(2.0),
            0.25 * rk * harmonic(p - 1),
        )
    } else {
        let p = m_dim / 2;
        (
            0.5 * rk * m::ln(volume(&geom)),
            0.0,
            0.5 * p as f64 * rk * odd_harmonic(p),
        )
    };
    Ok(TorsionReport {
        log_value: volume_term + log2_term + harmonic_term,
        breakdown: vec![
            ("volume", volume_term),
            ("log2", log2_term),
            ("harmonic_sum", harmonic_term),
        ],
        method: Method::ClosedForm,
        geometry: geom,
        bc: BoundaryCondition::Absolute,
    })
}

/// Analytic torsion of the cone over the circle (rank-1 representation):
/// `log T_abs = log(pi l^2 sin alpha)/2 + sin(alpha)/2`, and
/// `log T_rel = -log T_abs`.
pub fn analytic_torsion_cone_circle(
    alpha: f64,
    l: f64,
    bc: BoundaryCondition,
) -> Result<TorsionReport, TorsionError> {
    let geom = ConeGeometry::new(1, alpha, l, 1)?;
    let sign = match bc {
        BoundaryCondition::Absolute => 1.0,
        BoundaryCondition::Relative => -1.0,
    };
    let volume_term = sign * 0.5 * m::ln(m::PI * l * l * geom.sin_alpha());
    let boundary_term = sign * 0.5 * geom.sin_alpha();
    Ok(TorsionReport {
        log_value: volume_term + boundary_term,
        breakdown: vec![("volume", volume_term), ("boundary", boundary_term)],
        method: Method::ClosedForm,
        geometry: geom,
        bc,
    })
}

/// Analytic torsion of the cone over the two-sphere (rank-1 representation):
/// `log T = log(4 l^3/3)/2 - F(0, csc alpha)/2 + sin^2(alpha)/4`,
/// identical for both boundary conditions.
pub fn analytic_torsion_cone_sphere(
    alpha: f64,
    l: f64,
    bc: BoundaryCondition,
) -> Result<TorsionReport, TorsionError> {
    let geom = ConeGeometry::new(2, alpha, l, 1)?;
    let f = f_zero(geom.nu())?;
    let volume_term = 0.5 * m::ln(4.0 * m::powi(l, 3) / 3.0);
    let f_term = -0.5 * f.value;
    let sa = geom.sin_alpha();
    let boundary_term = 0.25 * sa * sa;
    Ok(TorsionReport {
        log_value: volume_term + f_term + boundary_term,
        breakdown: vec![
            ("volume", volume_term),
            ("f_term", f_term),
            ("boundary", boundary_term),
        ],
        method: Method::ClosedForm,
        geometry: geom,
        bc,
    })
}
