//! Spectral pipelines: assemble `t'(0)` from the simple Bessel zetas and
//! the double-zeta differences, independently of the closed forms.
//!
//! circle: `t(s) = l^{2s} ( z_0(s)/2 - z_1(s)/2 + Z(s) - Z-hat(s) )`
//! sphere: `t(s) = l^{2s} ( -z_{1/2}(s)/2 - z_{3/2}(s)/2 + Z_+(s)/2 - Z_-(s)/2 )`
//!
//! so `log T = t'(0) = log(l^2) t(0)-part + derivative part`.

use super::{Method, TorsionError, TorsionReport};
use crate::engine::{circle_z_difference, f_zero, simple_bessel_zeta, sphere_z_difference};
use crate::geometry::{BoundaryCondition, ConeGeometry};
use crate::mathx as m;
use alloc::vec;

/// Absolute-boundary analytic torsion of the circle cone via the spectral
/// route; must reproduce [`super::analytic_torsion_cone_circle`].
pub fn pipeline_circle(alpha: f64, l: f64) -> Result<TorsionReport, TorsionError> {
    let geom = ConeGeometry::new(1, alpha, l, 1)?;
    let nu = geom.nu();
    let z0 = simple_bessel_zeta(0.0, 0.0, 1.0)?;
    let z1 = simple_bessel_zeta(1.0, 0.0, 1.0)?;
    let (dz0, dzp) = circle_z_difference(nu)?;
    let log_l2 = 2.0 * m::ln(l);
    let scale_term = (0.5 * z0.at0 - 0.5 * z1.at0 + dz0) * log_l2;
    let simple_term = 0.5 * z0.deriv_at0 - 0.5 * z1.deriv_at0;
    Ok(TorsionReport {
        log_value: scale_term + simple_term + dzp,
        breakdown: vec![
            ("log_scale", scale_term),
            ("simple_zeta", simple_term),
            ("double_zeta", dzp),
        ],
        method: Method::Pipeline,
        geometry: geom,
        bc: BoundaryCondition::Absolute,
    })
}

/// Analytic torsion of the sphere cone via the spectral route (both
/// boundary conditions give the same value); must reproduce
/// [`super::analytic_torsion_cone_sphere`].
pub fn pipeline_sphere(alpha: f64, l: f64) -> Result<TorsionReport, TorsionError> {
    let geom = ConeGeometry::new(2, alpha, l, 1)?;
    let nu = geom.nu();
    let zh = simple_bessel_zeta(0.5, 0.0, 1.0)?;
    let z3h = simple_bessel_zeta(1.5, 0.0, 1.0)?;
    let f0 = f_zero(nu)?;
    let (dz0, dzp) = sphere_z_difference(nu, &f0)?;
    let log_l2 = 2.0 * m::ln(l);
    let scale_term = (-0.5 * zh.at0 - 0.5 * z3h.at0 + 0.5 * dz0) * log_l2;
    let simple_term = -0.5 * zh.deriv_at0 - 0.5 * z3h.deriv_at0;
    let double_term = 0.5 * dzp;
    Ok(TorsionReport {
        log_value: scale_term + simple_term + double_term,
        breakdown: vec![
            ("log_scale", scale_term),
            ("simple_zeta", simple_term),
            ("double_zeta", double_term),
        ],
        method: Method::Pipeline,
        geometry: geom,
        bc: BoundaryCondition::Absolute,
    })
}
