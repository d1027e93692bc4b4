//! Closed forms for the logarithm of the canonical-product Gamma function
//! attached to the rescaled zero sequences of the two cones, on the negative
//! real axis `lambda < 0`:
//!
//! circle, order `nu n`, `z = nu n sqrt(-lambda)`:
//! `log Gamma(-lambda, S_n/(nu n)^2)      = -log I_nu(z)  + nu n log sqrt(-lambda)
//!      + nu n log(nu n) - nu n log 2 - log Gamma(nu n + 1)`
//! `log Gamma(-lambda, S-hat_n/(nu n)^2)  = -log I'_nu(z) + (nu n - 1) log sqrt(-lambda)
//!      + nu n log(nu n) - nu n log 2 - log Gamma(nu n + 1)`
//!
//! sphere, order `mu_n`, `z = mu_n sqrt(-lambda)`, `H^pm = pm I/2 + z I'`:
//! `log Gamma(-lambda, S_{pm,n}/mu_n^2) = -log H^pm_mu(z) + mu log sqrt(-lambda)
//!      + mu log mu - mu log 2 - log Gamma(mu) + log(1 pm 1/(2 mu))`
//!
//! Both families are the `kappa = 2` rescalings used by the decomposition,
//! i.e. the canonical products run over `zeros^2 / order^2`.

use super::EngineError;
use crate::mathx as m;
use crate::specfun::{bessel_i_scaled, gamma_ln};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSequenceCase {
    /// circle cone, `J` bands
    CircleS,
    /// circle cone, `J'` bands
    CircleSHat,
    /// sphere cone, `G^+` bands
    SphereSPlus,
    /// sphere cone, `G^-` bands
    SphereSMinus,
}

/// `log Gamma(-lambda, .)` for the band with series index `n >= 1`.
pub fn log_gamma_sequence(
    case: GammaSequenceCase,
    n: u32,
    nu: f64,
    lambda: f64,
) -> Result<f64, EngineError> {
    if n == 0 {
        return Err(EngineError::Domain("band index n must be >= 1"));
    }
    if !(lambda < 0.0) || !lambda.is_finite() {
        return Err(EngineError::Domain(
            "log_gamma_sequence is evaluated on lambda < 0",
        ));
    }
    if !(nu >= 1.0) {
        return Err(EngineError::Domain("log_gamma_sequence requires nu >= 1"));
    }
    let sqrt_ml = m::sqrt(-lambda);
    let nf = n as f64;
    match case {
        GammaSequenceCase::CircleS | GammaSequenceCase::CircleSHat => {
            let order = nu * nf;
            let z = order * sqrt_ml;
            let scaled = bessel_i_scaled(order, z)?;
            let log_bessel = match case {
                GammaSequenceCase::CircleS => scaled.log_value(),
                _ => scaled.log_prime(),
            };
            let power = match case {
                GammaSequenceCase::CircleS => order,
                _ => order - 1.0,
            };
            Ok(-log_bessel + power * m::ln(sqrt_ml) + order * m::ln(order)
                - order * m::ln(2.0)
                - gamma_ln(order + 1.0)?)
        }
        GammaSequenceCase::SphereSPlus | GammaSequenceCase::SphereSMinus => {
            let mu = m::sqrt(nu * nu * nf * (nf + 1.0) + 0.25);
            let z = mu * sqrt_ml;
            let scaled = bessel_i_scaled(mu, z)?;
            let sign = if matches!(case, GammaSequenceCase::SphereSPlus) {
                1.0
            } else {
                -1.0
            };
            // H^pm = (z I' pm I/2), strictly positive since z I'/I > nu > 1/2
            let h_scaled = z * scaled.i_prime + sign * 0.5 * scaled.i;
            let log_h = scaled.log_scale + m::ln(h_scaled);
            Ok(
                -log_h + mu * m::ln(sqrt_ml) + mu * m::ln(mu) - mu * m::ln(2.0) - gamma_ln(mu)?
                    + m::ln_1p(sign * 0.5 / mu),
            )
        }
    }
}
