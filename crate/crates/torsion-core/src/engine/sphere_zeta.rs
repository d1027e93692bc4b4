//! The shifted sphere zeta
//!
//! `zeta_sp(s) = sum_{n>=1} (2n+1) (n(n+1))^{-s}`
//!
//! continued via the binomial rearrangement
//!
//! `zeta_sp(s) = 2 sum_{j>=0} C(-s, j) (-1/4)^j zeta_H(2s + 2j - 1, 3/2)`.
//!
//! The `j`-th summand meets the Hurwitz pole when `s = 1 - j`; at `s = 0`
//! the `j = 1` term survives as the finite limit
//! `C(-s,1) zeta_H(2s+1, 3/2) -> -1/2 * 1/2`, contributing `+1/4`, so
//! `zeta_sp(0) = 2 zeta_H(-1, 3/2) + 1/4 = -2/3`.
//!
//! At `s = 1/2` an independent Abel–Plana route is provided: applying the
//! summation formula to `f(z) = (2z+3)((z+1)(z+2))^{-1/2}` gives
//!
//! `zeta_sp(1/2) = -(5/4) sqrt(2) + int_0^inf [6 sin(theta/2) - 4 y cos(theta/2)]
//!                 (y^4 + 5y^2 + 4)^{-1/4} / (e^{2 pi y} - 1) dy`
//!
//! with `theta = arg(2 - y^2 + 3iy)` taken continuously in `(0, pi)`.

use super::EngineError;
use crate::mathx as m;
use crate::mathx::KahanSum;
use crate::quad::adaptive_gk;
use crate::specfun::hurwitz_zeta;

/// `zeta(s, Sp+ Delta^0_{S^2})` on its continuation (`s != 1`).
///
/// Negative integer `s` other than 0 would cross further Hurwitz poles and
/// is not supported (never needed by the pipelines).
pub fn zeta_sp_sphere(s: f64) -> Result<f64, EngineError> {
    if !s.is_finite() {
        return Err(EngineError::Domain("zeta_sp_sphere requires finite s"));
    }
    if (s - 1.0).abs() < 1e-12 {
        return Err(EngineError::Pole("zeta(s, Sp+) has its pole at s = 1"));
    }
    if s == 0.0 {
        return Ok(2.0 * hurwitz_zeta(-1.0, 1.5)? + 0.25);
    }
    if s < 0.5 && (s - m::round(s)).abs() < 1e-9 {
        return Err(EngineError::Domain(
            "negative integer s crosses Hurwitz poles",
        ));
    }
    let mut acc = KahanSum::new();
    let mut binom = 1.0f64; // C(-s, j)
    for j in 0..400 {
        let jf = j as f64;
        let term = binom * m::powi(-0.25, j) * hurwitz_zeta(2.0 * s + 2.0 * jf - 1.0, 1.5)?;
        acc.add(term);
        if j > 4 && m::abs(term) < 1e-17 * (1.0 + m::abs(acc.value())) {
            break;
        }
        binom *= (-s - jf) / (jf + 1.0);
    }
    Ok(2.0 * acc.value())
}

/// Independent evaluation of `zeta_sp(1/2)` by Abel–Plana summation.
/// The integrand decays like `e^{-2 pi y}`; the tail beyond `y = 10` is
/// below 1e-27 and dropped.
pub fn zeta_sp_sphere_plana_half() -> f64 {
    let integrand = |y: f64| -> f64 {
        if y <= 0.0 {
            // removable limit: numerator ~ y/2, denominator ~ 2 pi y sqrt(2)
            return 1.0 / (4.0 * m::sqrt(2.0) * m::PI);
        }
        let theta = m::atan2(3.0 * y, 2.0 - y * y);
        let modulus4 = m::powf(y * y * y * y + 5.0 * y * y + 4.0, 0.25);
        let (sh, ch) = m::sin_cos(0.5 * theta);
        (6.0 * sh - 4.0 * y * ch) / (modulus4 * m::exp_m1(2.0 * m::PI * y))
    };
    let integral = adaptive_gk(&mut { integrand }, 0.0, 10.0, 1e-15, 1e-15);
    -1.25 * m::sqrt(2.0) + integral.value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mathx::KahanSum;

    // frozen 40-digit references
    const ZSP_HALF: f64 = -1.754292303485306436258976501728613014126;
    const ZSP_3: f64 = 0.40411380631918857079947632302289998153;

    #[test]
    fn telescoping_value_at_two() {
        // (2n+1)/(n(n+1))^2 = 1/n^2 - 1/(n+1)^2 sums to exactly 1
        let z = zeta_sp_sphere(2.0).unwrap();
        assert!((z - 1.0).abs() < 1e-12);
    }

    #[test]
    fn direct_summation_at_two_and_three() {
        for (s, expect) in [(2.0, 1.0), (3.0, ZSP_3)] {
            let mut acc = KahanSum::new();
            for n in 1..200_000u64 {
                let nf = n as f64;
                acc.add((2.0 * nf + 1.0) * (nf * (nf + 1.0)).powf(-s));
            }
            let z = zeta_sp_sphere(s).unwrap();
            assert!((z - expect).abs() < 1e-12, "s={s}");
            assert!((z - acc.value()).abs() < 1e-9, "s={s} direct");
        }
    }

    #[test]
    fn value_at_zero_via_pole_crossing() {
        let z = zeta_sp_sphere(0.0).unwrap();
        assert!((z + 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn euler_maclaurin_oracle_at_zero() {
        // independent continuation of the raw series: partial sum + continued
        // tail integral + correction terms, for f(x) = (2x+1)(x(x+1))^{-s}
        // evaluated in the limit s -> 0 (f is then linear, so the Bernoulli
        // tail stops at f').
        let n = 7u64;
        let partial: f64 = (1..=n).map(|k| (2 * k + 1) as f64).sum();
        let a = (n + 1) as f64;
        let integral = -a * (a + 1.0); // u0^{1-s}/(s-1) at s = 0
        let half = 0.5 * (2.0 * a + 1.0);
        let bernoulli = -2.0 / 12.0;
        let oracle = partial + integral + half + bernoulli;
        assert!((zeta_sp_sphere(0.0).unwrap() - oracle).abs() < 1e-12);
    }

    #[test]
    fn plana_matches_binomial_at_half() {
        let a = zeta_sp_sphere(0.5).unwrap();
        let b = zeta_sp_sphere_plana_half();
        assert!((a - ZSP_HALF).abs() < 1e-11, "binomial {a}");
        assert!((b - ZSP_HALF).abs() < 1e-9, "plana {b}");
        assert!((a - b).abs() < 1e-6);
    }

    #[test]
    fn pole_and_domain_errors() {
        assert!(matches!(zeta_sp_sphere(1.0), Err(EngineError::Pole(_))));
        assert!(zeta_sp_sphere(-1.0).is_err());
        assert!(zeta_sp_sphere(f64::NAN).is_err());
    }

    #[test]
    fn continuous_through_the_limit_point() {
        // the generic path must approach the s = 0 limit value smoothly
        // even though its j = 1 summand individually blows up
        let at0 = zeta_sp_sphere(0.0).unwrap();
        for s in [1e-6f64, -1e-6, 1e-9] {
            let v = zeta_sp_sphere(s).unwrap();
            assert!((v - at0).abs() < 1e-4, "s={s}: {v} vs {at0}");
        }
    }
}
