//! First coefficients of the uniform large-order expansions, as polynomials
//! in `p = (1+z^2)^{-1/2}`:
//!
//! * `I_nu(nu z)`  carries `U_1(p)`,
//! * `I'_nu(nu z)` carries `V_1(p)`,
//! * `H^pm_nu(nu z) = pm I_nu/2 + nu z I'_nu` carries `W_{1,pm}, W_{2,pm}`.

use super::SpecfunError;
use crate::mathx as m;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionKind {
    I,
    IPrime,
    HPlus,
    HMinus,
}

/// Coefficient values at `p`; `[U1]`, `[V1]`, or `[W1, W2]`.
pub fn uniform_expansion_coeffs(kind: ExpansionKind, p: f64) -> Result<Vec<f64>, SpecfunError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(SpecfunError::Domain("p must lie in (0, 1]"));
    }
    let p2 = p * p;
    let p3 = p2 * p;
    let u1 = p / 8.0 - 5.0 * p3 / 24.0;
    let v1 = -3.0 * p / 8.0 + 7.0 * p3 / 24.0;
    Ok(match kind {
        ExpansionKind::I => alloc::vec![u1],
        ExpansionKind::IPrime => alloc::vec![v1],
        ExpansionKind::HPlus => {
            let w1 = p / 8.0 + 7.0 * p3 / 24.0;
            let w2 =
                -7.0 * p2 / 128.0 + 79.0 * m::powi(p, 4) / 192.0 - 455.0 * m::powi(p, 6) / 1152.0;
            alloc::vec![w1, w2]
        }
        ExpansionKind::HMinus => {
            let w1 = -7.0 * p / 8.0 + 7.0 * p3 / 24.0;
            let w2 =
                -28.0 * p2 / 128.0 + 119.0 * m::powi(p, 4) / 192.0 - 455.0 * m::powi(p, 6) / 1152.0;
            alloc::vec![w1, w2]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_i_scaled;

    #[test]
    fn values_at_p_one() {
        let u1 = uniform_expansion_coeffs(ExpansionKind::I, 1.0).unwrap()[0];
        assert!((u1 - (1.0 / 8.0 - 5.0 / 24.0)).abs() < 1e-15); // -1/12
        let w1p = uniform_expansion_coeffs(ExpansionKind::HPlus, 1.0).unwrap()[0];
        assert!((w1p - 5.0 / 12.0).abs() < 1e-15);
        let w1m = uniform_expansion_coeffs(ExpansionKind::HMinus, 1.0).unwrap()[0];
        assert!((w1m - (-7.0 / 8.0 + 7.0 / 24.0)).abs() < 1e-15);
    }

    #[test]
    fn no_constant_term() {
        for kind in [
            ExpansionKind::I,
            ExpansionKind::IPrime,
            ExpansionKind::HPlus,
            ExpansionKind::HMinus,
        ] {
            for c in uniform_expansion_coeffs(kind, 1e-8).unwrap() {
                assert!(c.abs() < 1e-7);
            }
        }
        assert!(uniform_expansion_coeffs(ExpansionKind::I, 0.0).is_err());
    }

    #[test]
    fn w1_is_v1_shifted_by_half_p() {
        for &p in &[0.2, 0.5, 0.9, 1.0] {
            let v1 = uniform_expansion_coeffs(ExpansionKind::IPrime, p).unwrap()[0];
            let w1p = uniform_expansion_coeffs(ExpansionKind::HPlus, p).unwrap()[0];
            let w1m = uniform_expansion_coeffs(ExpansionKind::HMinus, p).unwrap()[0];
            assert!((w1p - (v1 + 0.5 * p)).abs() < 1e-15);
            assert!((w1m - (v1 - 0.5 * p)).abs() < 1e-15);
        }
    }

    #[test]
    fn asymptotic_order_of_u1_correction() {
        // nu^2 |log I_nu(nu z) - (nu eta - log(1+z^2)/4 - log(2 pi nu)/2
        //   + log(1 + U_1/nu))| stays bounded as nu doubles.
        let zs: [f64; 6] = [0.2, 0.5, 1.0, 1.7, 2.4, 3.0];
        let nus: [f64; 4] = [10.0, 20.0, 40.0, 80.0];
        let mut prev_max = f64::INFINITY;
        let mut first = true;
        for &nu in &nus {
            let mut worst: f64 = 0.0;
            for &z in &zs {
                let x = nu * z;
                let t = (1.0 + z * z).sqrt();
                let p = 1.0 / t;
                let eta = t + (z / (1.0 + t)).ln();
                let u1 = uniform_expansion_coeffs(ExpansionKind::I, p).unwrap()[0];
                let model = nu * eta
                    - 0.25 * (1.0 + z * z).ln()
                    - 0.5 * (2.0 * core::f64::consts::PI * nu).ln()
                    + (u1 / nu).ln_1p();
                let exact = bessel_i_scaled(nu, x).unwrap().log_value();
                worst = worst.max(nu * nu * (exact - model).abs());
            }
            if !first {
                assert!(
                    worst <= 2.0 * prev_max,
                    "residual not O(nu^-2): {worst} vs {prev_max}"
                );
            }
            first = false;
            prev_max = worst;
        }
    }
}
