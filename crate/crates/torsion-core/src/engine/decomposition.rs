//! Spectral-decomposition bookkeeping and the assembly of the double-zeta
//! differences `Z(0) - Z-hat(0)` and `Z'(0) - Z-hat'(0)` for the two cones.
//!
//! For a double sequence decomposed over a simple sequence `U` with power
//! `kappa`, and `zeta(s, U)` carrying a single simple pole, the difference
//! of two such zetas sharing `U` assembles as
//!
//! `dZ(0)  = -dA01(0) + (1/kappa) Res0(dPhi) Res1(zeta_U)`
//! `dZ'(0) = -dA00(0) - dA01'(0)
//!           + (gamma/kappa) Res0(dPhi) Res1(zeta_U)
//!           + (1/kappa) FP0(dPhi) Res1(zeta_U)
//!           + Res0(dPhi) FP1(zeta_U)`
//!
//! where `Res0/FP0` are the residue/finite part of the transformed expansion
//! difference at `s = 0` and `Res1/FP1` those of `zeta(s, U)` at its pole.
//! Expansion orders sitting away from the pole of `zeta(s, U)` contribute
//! nothing and are never evaluated. When `Res0(dPhi) = 0` the finite part of
//! `zeta(s, U)` at the pole drops out, which is why the sphere assembly can
//! leave it symbolically unknown.

use super::f_zero::FZeroValue;
use super::phi::{circle_phi_pair, phi_transform, sphere_phi2_pair, MeromorphicValue};
use super::EngineError;
use crate::mathx as m;
use crate::mathx::EULER_GAMMA;
use crate::specfun::riemann_zeta_with_derivative;
use alloc::vec::Vec;

/// Pole data of `zeta(s, U)` at its unique pole.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaPole {
    pub location: f64,
    pub residue: f64,
    /// finite part; `None` marks "symbolically unused" (must then be
    /// multiplied by a vanishing residue)
    pub finite_part: Option<f64>,
}

/// Configuration of one spectral decomposition: power, length, the
/// expansion orders `sigma_h`, and the pole of `zeta(s, U)`.
#[derive(Clone, Debug)]
pub struct DecompositionConfig {
    pub kappa: f64,
    pub length: u32,
    pub sigma: Vec<f64>,
    pub pole: ZetaPole,
}

impl DecompositionConfig {
    /// circle cone: `U = {nu n}`, pole of `nu^{-s} zeta(s)` at `s = 1`
    pub fn circle(nu: f64) -> Self {
        DecompositionConfig {
            kappa: 2.0,
            length: 2,
            sigma: alloc::vec![-1.0, 0.0, 1.0],
            pole: ZetaPole {
                location: 1.0,
                residue: 1.0 / nu,
                finite_part: Some((EULER_GAMMA + m::ln(nu)) / nu),
            },
        }
    }

    /// sphere cone: `U = {(2n+1) : mu_n}`, pole at `s = 2` with residue
    /// `2/nu^2`; the finite part multiplies a vanishing residue and stays
    /// symbolic
    pub fn sphere(nu: f64) -> Self {
        DecompositionConfig {
            kappa: 2.0,
            length: 3,
            sigma: alloc::vec![-1.0, 0.0, 1.0, 2.0],
            pole: ZetaPole {
                location: 2.0,
                residue: 2.0 / (nu * nu),
                finite_part: None,
            },
        }
    }

    /// the expansion orders that actually contribute (those at the pole)
    pub fn contributing_sigma(&self) -> impl Iterator<Item = f64> + '_ {
        let loc = self.pole.location;
        self.sigma
            .iter()
            .copied()
            .filter(move |s| (s - loc).abs() < 1e-14)
    }
}

/// Generic difference assembly described in the module docs.
fn assemble_difference(
    config: &DecompositionConfig,
    d_a00: f64,
    d_a01: f64,
    d_a01_prime: f64,
    d_phi: MeromorphicValue,
) -> Result<(f64, f64), EngineError> {
    let kappa = config.kappa;
    let res_u = config.pole.residue;
    let z0 = -d_a01 + d_phi.residue * res_u / kappa;
    let mut zp = -d_a00 - d_a01_prime
        + (EULER_GAMMA / kappa) * d_phi.residue * res_u
        + d_phi.finite_part * res_u / kappa;
    if d_phi.residue != 0.0 {
        let fp = config.pole.finite_part.ok_or(EngineError::Domain(
            "finite part of zeta(s,U) required but unknown",
        ))?;
        zp += d_phi.residue * fp;
    }
    Ok((z0, zp))
}

/// `(Z(0) - Z-hat(0), Z'(0) - Z-hat'(0))` for the circle cone, `nu >= 1`.
///
/// Ingredients: the two transformed expansions, `dA00 = 0`,
/// `dA01(s) = nu^{-2s} zeta(2s) / 2`.
pub fn circle_z_difference(nu: f64) -> Result<(f64, f64), EngineError> {
    if !(nu >= 1.0) {
        return Err(EngineError::Domain("circle_z_difference requires nu >= 1"));
    }
    let config = DecompositionConfig::circle(nu);
    let (phi1, phi1_hat) = circle_phi_pair();
    let t1 = phi_transform(&phi1).at_zero();
    let t2 = phi_transform(&phi1_hat).at_zero();
    let d_phi = MeromorphicValue {
        residue: t1.residue - t2.residue,
        finite_part: t1.finite_part - t2.finite_part,
        location: 0.0,
    };
    let (zeta0, zeta0p) = riemann_zeta_with_derivative(0.0)?;
    let d_a01 = 0.5 * zeta0;
    let d_a01_prime = -m::ln(nu) * zeta0 + zeta0p;
    assemble_difference(&config, 0.0, d_a01, d_a01_prime, d_phi)
}

/// `(Z_+(0) - Z_-(0), Z_+'(0) - Z_-'(0))` for the sphere cone.
///
/// Ingredients: the transformed `H^pm` expansions (whose residue difference
/// vanishes, so the unknown finite part of `zeta(s,U)` never enters),
/// `dA01 = 0` exactly, and `dA00(0) = F(0, nu)`.
pub fn sphere_z_difference(nu: f64, f0: &FZeroValue) -> Result<(f64, f64), EngineError> {
    if !(nu >= 1.0) {
        return Err(EngineError::Domain("sphere_z_difference requires nu >= 1"));
    }
    let config = DecompositionConfig::sphere(nu);
    let (plus, minus) = sphere_phi2_pair();
    let tp = phi_transform(&plus).at_zero();
    let tm = phi_transform(&minus).at_zero();
    let d_phi = MeromorphicValue {
        residue: tp.residue - tm.residue,
        finite_part: tp.finite_part - tm.finite_part,
        location: 0.0,
    };
    assemble_difference(&config, f0.value, 0.0, 0.0, d_phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::f_zero;
    use crate::mathx::LN_2PI;

    #[test]
    fn circle_value_difference_is_quarter() {
        for nu in [1.0, 1.5, 2.0, 4.0] {
            let (z0, _) = circle_z_difference(nu).unwrap();
            assert!((z0 - 0.25).abs() < 1e-13, "nu={nu}");
        }
    }

    #[test]
    fn circle_derivative_difference_closed_form() {
        // -log(nu)/2 + log(2 pi)/2 + 1/(2 nu)
        for nu in [1.0, 2.0, 3.0] {
            let (_, zp) = circle_z_difference(nu).unwrap();
            let expect = -0.5 * nu.ln() + 0.5 * LN_2PI + 0.5 / nu;
            assert!((zp - expect).abs() < 1e-13, "nu={nu}: {zp} vs {expect}");
        }
    }

    #[test]
    fn circle_nu_one_value() {
        let (_, zp) = circle_z_difference(1.0).unwrap();
        assert!((zp - (0.5 * LN_2PI + 0.5)).abs() < 1e-13);
    }

    #[test]
    fn circle_nu_two_value() {
        let (_, zp) = circle_z_difference(2.0).unwrap();
        let expect = -0.5 * 2.0f64.ln() + 0.5 * LN_2PI + 0.25;
        assert!((zp - expect).abs() < 1e-13);
    }

    #[test]
    fn sphere_value_difference_vanishes() {
        let f0 = f_zero(1.5).unwrap();
        let (z0, _) = sphere_z_difference(1.5, &f0).unwrap();
        assert_eq!(z0, 0.0);
    }

    #[test]
    fn sphere_derivative_difference() {
        for nu in [1.0, 2.0] {
            let f0 = f_zero(nu).unwrap();
            let (_, zp) = sphere_z_difference(nu, &f0).unwrap();
            let expect = -f0.value + 0.5 / (nu * nu);
            assert!((zp - expect).abs() < 1e-12, "nu={nu}");
        }
    }

    #[test]
    fn sphere_config_leaves_pole_finite_part_symbolic() {
        let c = DecompositionConfig::sphere(1.0);
        assert_eq!(c.pole.finite_part, None);
        assert_eq!(c.pole.location, 2.0);
        assert_eq!(c.length, 3);
        assert_eq!(c.contributing_sigma().count(), 1);
    }

    #[test]
    fn circle_config_pole_data() {
        let c = DecompositionConfig::circle(2.0);
        assert_eq!(c.pole.location, 1.0);
        assert!((c.pole.residue - 0.5).abs() < 1e-15);
        let fp = c.pole.finite_part.unwrap();
        assert!((fp - (EULER_GAMMA + 2.0f64.ln()) / 2.0).abs() < 1e-15);
        // only sigma = 1 sits at the pole
        let hit: Vec<f64> = c.contributing_sigma().collect();
        assert_eq!(hit, alloc::vec![1.0]);
    }
}
