//! Boundary-anomaly terms `log T_abs - log tau_RS` by the two published
//! formulas: the Brüning–Ma metric-homotopy route and the Dai–Fang
//! connection-homotopy route. They agree on `D^2` and on `C_alpha S^1`; on
//! odd-dimensional discs the Dai–Fang value misses the harmonic-sum part
//! (the `D^3` residual of 1/4 is checked downstream).

use super::{harmonic, odd_harmonic, TorsionError};
use crate::geometry::sphere_volume;
use crate::mathx as m;

/// Both anomaly values for one geometry.
#[derive(Clone, Copy, Debug)]
pub struct AnomalyComparison {
    pub bm_value: f64,
    pub df_value: f64,
    pub dimension: u32,
}

fn is_right_angle(alpha: f64) -> bool {
    (alpha - m::PI / 2.0).abs() < 1e-14
}

/// Brüning–Ma anomaly for `D^m` (any `m >= 2`, `alpha = pi/2`) and for the
/// `m = 2` cone at arbitrary angle.
///
/// * odd `m = 2p-1`: `rk/4 * chi(S^{2p-2}) * (log 2 + H_{p-1}/2)` with
///   `chi(S^even) = 2`;
/// * even `m = 2p` disc: `(p/2) rk sum_{j=1}^p 1/(2j-1)`;
/// * `m = 2` cone: `rk sin(alpha)/2`.
pub fn anomaly_bm(m_dim: u32, alpha: f64, rank: u32) -> Result<f64, TorsionError> {
    if m_dim < 2 {
        return Err(TorsionError::Unsupported(
            "anomaly defined for dimension >= 2",
        ));
    }
    let rk = rank as f64;
    if m_dim % 2 == 1 {
        if !is_right_angle(alpha) {
            return Err(TorsionError::Unsupported(
                "odd-dimensional anomaly available for the disc only",
            ));
        }
        let p = (m_dim + 1) / 2;
        let chi = 2.0; // chi(S^{2p-2})
        Ok(0.25 * rk * chi * (m::ln(2.0) + 0.5 * harmonic(p - 1)))
    } else if is_right_angle(alpha) {
        let p = m_dim / 2;
        Ok(0.5 * p as f64 * rk * odd_harmonic(p))
    } else if m_dim == 2 {
        Ok(0.5 * rk * m::sin(alpha))
    } else {
        Err(TorsionError::Unsupported(
            "even-dimensional cone anomaly beyond m = 2 is not available",
        ))
    }
}

/// Dai–Fang anomaly.
///
/// * odd `m = 2p-1` disc: `rk/4 * chi(S^{2p-2}) * log 2 = rk log2 / 2`;
/// * even `m = 2p` (cone over `S^{2p-1}`, disc at `alpha = pi/2`):
///   `rk/2 * I(p, alpha)` with the closed-form boundary integral
///   `I = (-1)^{p+1} (2p)! Vol(S^{2p-1}_{l sin a}) / ((4 pi)^p l^{2p-1} p! (sin a)^{2p-2})
///        * sum_{k=0}^{p-1} (-1)^k (sin a)^{2k}/(2k+1) C(p-1, k)`,
///   kept verbatim; at `sin a = 1` it collapses to `(-1)^{p+1}`.
pub fn anomaly_df(m_dim: u32, alpha: f64, rank: u32) -> Result<f64, TorsionError> {
    if m_dim < 2 {
        return Err(TorsionError::Unsupported(
            "anomaly defined for dimension >= 2",
        ));
    }
    let rk = rank as f64;
    if m_dim % 2 == 1 {
        if !is_right_angle(alpha) {
            return Err(TorsionError::Unsupported(
                "odd-dimensional anomaly available for the disc only",
            ));
        }
        return Ok(0.5 * rk * m::ln(2.0));
    }
    let p = m_dim / 2;
    let sa = m::sin(alpha);
    // the boundary radius l sin(alpha) cancels the l^{2p-1} prefactor, so
    // any positive l works here
    let l = 1.0f64;
    let mut series = 0.0;
    let mut binom = 1.0f64; // C(p-1, k)
    for k in 0..p {
        let kf = k as f64;
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        series += sgn * m::powi(sa, 2 * k as i32) / (2.0 * kf + 1.0) * binom;
        binom *= (p as f64 - 1.0 - kf) / (kf + 1.0);
    }
    let mut factorial_ratio = 1.0f64; // (2p)!/p!
    for i in (p + 1)..=(2 * p) {
        factorial_ratio *= i as f64;
    }
    let sign = if p % 2 == 0 { -1.0 } else { 1.0 }; // (-1)^{p+1}
    let integral = sign * factorial_ratio * sphere_volume(2 * p - 1, l * sa)
        / (m::powi(4.0 * m::PI, p as i32)
            * m::powi(l, 2 * p as i32 - 1)
            * m::powi(sa, 2 * p as i32 - 2));
    Ok(0.5 * rk * integral * series)
}
