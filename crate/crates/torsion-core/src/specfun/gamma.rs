//! Log-gamma and digamma on the positive half line.

use super::SpecfunError;
use crate::mathx as m;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// log Gamma(x) for x > 0.
pub fn gamma_ln(x: f64) -> Result<f64, SpecfunError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecfunError::Domain("gamma_ln requires x > 0"));
    }
    Ok(gamma_ln_unchecked(x))
}

pub(crate) fn gamma_ln_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // reflection keeps the Lanczos argument away from 0
        return m::ln(m::PI / m::sin(m::PI * x)) - gamma_ln_unchecked(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * m::ln(2.0 * m::PI) + (z + 0.5) * m::ln(t) - t + m::ln(acc)
}

/// Digamma psi(x) for x > 0: recurrence up to x >= 10, then the
/// asymptotic series with Bernoulli coefficients.
pub fn digamma(x: f64) -> Result<f64, SpecfunError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(SpecfunError::Domain("digamma requires x > 0"));
    }
    let mut result = 0.0;
    let mut z = x;
    while z < 10.0 {
        result -= 1.0 / z;
        z += 1.0;
    }
    // B_{2k}/(2k) for k = 1..7
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let inv2 = 1.0 / (z * z);
    let mut corr = 0.0;
    let mut p = inv2;
    for c in C {
        corr += c * p;
        p *= inv2;
    }
    Ok(result + m::ln(z) - 0.5 / z - corr)
}
