//! Finite expansions `phi(lambda) = sum_a c_a (1-lambda)^{-a} + c_0` and
//! their term-by-term contour transform
//!
//! `Phi(s) = sum_a c_a Gamma(s+a) / (Gamma(a) s)`.
//!
//! The constant term maps to zero (`1/Gamma(0) = 0`). Near `s = 0` each term
//! contributes `1/s + psi(a) + O(s)`, so the transform has residue
//! `sum_a c_a` and finite part `sum_a c_a psi(a)` at the origin; the contour
//! integral itself is never evaluated numerically.

use super::EngineError;
use crate::mathx as m;
use crate::specfun::{digamma, gamma_ln};
use alloc::vec::Vec;

/// `sum_a c_a (1-lambda)^{-a} + c_0` with distinct positive exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct PLambdaExpansion {
    terms: Vec<(f64, f64)>,
    constant: f64,
}

impl PLambdaExpansion {
    pub fn new(terms: &[(f64, f64)], constant: f64) -> Result<Self, EngineError> {
        for &(_, a) in terms {
            if !(a > 0.0) || !a.is_finite() {
                return Err(EngineError::Domain("expansion exponents must be positive"));
            }
        }
        for (i, &(_, a)) in terms.iter().enumerate() {
            if terms[i + 1..].iter().any(|&(_, b)| b == a) {
                return Err(EngineError::Domain("expansion exponents must be distinct"));
            }
        }
        Ok(Self {
            terms: terms.to_vec(),
            constant,
        })
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    /// evaluate at `lambda < 1` (the engine only uses the negative real axis)
    pub fn eval(&self, lambda: f64) -> f64 {
        let mut acc = self.constant;
        for &(c, a) in &self.terms {
            acc += c * m::powf(1.0 - lambda, -a);
        }
        acc
    }

    /// term-wise difference `self - other`
    pub fn difference(&self, other: &PLambdaExpansion) -> PLambdaExpansion {
        let mut terms = self.terms.clone();
        for &(c, a) in &other.terms {
            if let Some(t) = terms.iter_mut().find(|t| t.1 == a) {
                t.0 -= c;
            } else {
                terms.push((-c, a));
            }
        }
        terms.retain(|&(c, _)| c != 0.0);
        PLambdaExpansion {
            terms,
            constant: self.constant - other.constant,
        }
    }
}

/// Residue and finite part of a meromorphic function at `location`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeromorphicValue {
    pub residue: f64,
    pub finite_part: f64,
    pub location: f64,
}

/// The transformed function; exact in the expansion coefficients.
#[derive(Clone, Debug)]
pub struct PhiTransform {
    terms: Vec<(f64, f64)>,
}

impl PhiTransform {
    /// `Phi(s)` away from the simple pole at `s = 0` (requires `s + a > 0`).
    pub fn eval(&self, s: f64) -> Result<f64, EngineError> {
        if s == 0.0 {
            return Err(EngineError::Pole("Phi has a simple pole at s = 0"));
        }
        let mut acc = 0.0;
        for &(c, a) in &self.terms {
            if s + a <= 0.0 {
                return Err(EngineError::Domain("Phi evaluation requires s + a > 0"));
            }
            acc += c * m::exp(gamma_ln(s + a)? - gamma_ln(a)?) / s;
        }
        Ok(acc)
    }

    /// Laurent data at `s = 0`.
    pub fn at_zero(&self) -> MeromorphicValue {
        let mut residue = 0.0;
        let mut finite = 0.0;
        for &(c, a) in &self.terms {
            residue += c;
            finite += c * digamma(a).expect("positive exponent");
        }
        MeromorphicValue {
            residue,
            finite_part: finite,
            location: 0.0,
        }
    }
}

/// Transform of an expansion; the constant term drops out.
pub fn phi_transform(phi: &PLambdaExpansion) -> PhiTransform {
    PhiTransform {
        terms: phi.terms.clone(),
    }
}

/// The two circle-cone expansions carried by the order-`nu n` bands:
/// scalar (`J`) and derivative (`J'`) sides.
pub fn circle_phi_pair() -> (PLambdaExpansion, PLambdaExpansion) {
    let phi1 = PLambdaExpansion::new(&[(-1.0 / 8.0, 0.5), (5.0 / 24.0, 1.5)], -1.0 / 12.0)
        .expect("static expansion");
    let phi1_hat = PLambdaExpansion::new(&[(3.0 / 8.0, 0.5), (-7.0 / 24.0, 1.5)], -1.0 / 12.0)
        .expect("static expansion");
    (phi1, phi1_hat)
}

/// The two sphere-cone order-`mu_n^{-2}` expansions (`H^+` and `H^-` sides).
pub fn sphere_phi2_pair() -> (PLambdaExpansion, PLambdaExpansion) {
    let plus = PLambdaExpansion::new(
        &[(1.0 / 16.0, 1.0), (-3.0 / 8.0, 2.0), (7.0 / 16.0, 3.0)],
        -1.0 / 8.0,
    )
    .expect("static expansion");
    let minus = PLambdaExpansion::new(
        &[(9.0 / 16.0, 1.0), (-7.0 / 8.0, 2.0), (7.0 / 16.0, 3.0)],
        -1.0 / 8.0,
    )
    .expect("static expansion");
    (plus, minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mathx::EULER_GAMMA;

    const LN2: f64 = core::f64::consts::LN_2;

    #[test]
    fn circle_phi_values_at_zero() {
        let (phi1, phi1_hat) = circle_phi_pair();
        let t1 = phi_transform(&phi1).at_zero();
        assert!((t1.residue - 1.0 / 12.0).abs() < 1e-15);
        let expect_fp = (5.0 - EULER_GAMMA) / 12.0 - LN2 / 6.0;
        assert!(
            (t1.finite_part - expect_fp).abs() < 1e-13,
            "{}",
            t1.finite_part
        );

        let t2 = phi_transform(&phi1_hat).at_zero();
        assert!((t2.residue - 1.0 / 12.0).abs() < 1e-15);
        let expect_fp2 = -(7.0 + EULER_GAMMA) / 12.0 - LN2 / 6.0;
        assert!((t2.finite_part - expect_fp2).abs() < 1e-13);
    }

    #[test]
    fn circle_phi_closed_form() {
        // Phi_1(s) = Gamma(s+1/2)(1+5s)/(12 sqrt(pi) s)
        let (phi1, _) = circle_phi_pair();
        let t = phi_transform(&phi1);
        for &s in &[0.25f64, 0.5, 1.0, 2.0, -0.25] {
            let expect = (gamma_ln(s + 0.5).unwrap().exp()) * (1.0 + 5.0 * s)
                / (12.0 * core::f64::consts::PI.sqrt() * s);
            let got = t.eval(s).unwrap();
            assert!(
                (got - expect).abs() < 1e-13 * expect.abs().max(1.0),
                "s={s}"
            );
        }
    }

    #[test]
    fn sphere_phi_difference() {
        let (plus, minus) = sphere_phi2_pair();
        let d = plus.difference(&minus);
        let mut terms = d.terms().to_vec();
        terms.sort_by(|a, b| a.1.total_cmp(&b.1));
        assert_eq!(terms, alloc::vec![(-0.5, 1.0), (0.5, 2.0)]);
        assert_eq!(d.constant(), 0.0);

        // Phi_{2,+} - Phi_{2,-} = Gamma(s+1)/2
        let t = phi_transform(&d);
        let at0 = t.at_zero();
        assert!(at0.residue.abs() < 1e-15);
        assert!((at0.finite_part - 0.5).abs() < 1e-13);
        for &s in &[0.5f64, 1.0, 3.0] {
            let expect = 0.5 * gamma_ln(s + 1.0).unwrap().exp();
            assert!((t.eval(s).unwrap() - expect).abs() < 1e-12 * expect.max(1.0));
        }
    }

    #[test]
    fn expansions_vanish_at_lambda_zero() {
        let (a, b) = circle_phi_pair();
        let (c, d) = sphere_phi2_pair();
        for phi in [a, b, c, d] {
            assert!(phi.eval(0.0).abs() < 1e-15);
        }
    }

    #[test]
    fn empty_expansion_transforms_to_zero() {
        let phi = PLambdaExpansion::new(&[], -0.7).unwrap();
        let t = phi_transform(&phi);
        assert_eq!(t.eval(1.0).unwrap(), 0.0);
        let z = t.at_zero();
        assert_eq!(z.residue, 0.0);
        assert_eq!(z.finite_part, 0.0);
    }

    #[test]
    fn invalid_exponents_rejected() {
        assert!(PLambdaExpansion::new(&[(1.0, 0.0)], 0.0).is_err());
        assert!(PLambdaExpansion::new(&[(1.0, -0.5)], 0.0).is_err());
        assert!(PLambdaExpansion::new(&[(1.0, 0.5), (2.0, 0.5)], 0.0).is_err());
    }

    #[test]
    fn eval_matches_terms_on_negative_axis() {
        let (phi1, _) = circle_phi_pair();
        let lambda = -3.0;
        let expect = -0.125 / 2.0 + (5.0 / 24.0) / 8.0 - 1.0 / 12.0;
        assert!((phi1.eval(lambda) - expect).abs() < 1e-15);
    }

    #[test]
    fn builtin_coefficient_lists_are_exact() {
        let (phi1, phi1_hat) = circle_phi_pair();
        assert_eq!(phi1.terms(), &[(-1.0 / 8.0, 0.5), (5.0 / 24.0, 1.5)]);
        assert_eq!(phi1.constant(), -1.0 / 12.0);
        assert_eq!(phi1_hat.terms(), &[(3.0 / 8.0, 0.5), (-7.0 / 24.0, 1.5)]);
        let (plus, minus) = sphere_phi2_pair();
        assert_eq!(
            plus.terms(),
            &[(1.0 / 16.0, 1.0), (-3.0 / 8.0, 2.0), (7.0 / 16.0, 3.0)]
        );
        assert_eq!(
            minus.terms(),
            &[(9.0 / 16.0, 1.0), (-7.0 / 8.0, 2.0), (7.0 / 16.0, 3.0)]
        );
        assert_eq!(plus.constant(), -1.0 / 8.0);
        assert_eq!(minus.constant(), -1.0 / 8.0);
    }
}
