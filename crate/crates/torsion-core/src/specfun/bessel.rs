//! Bessel J and I for real order `nu >= 0` and `x >= 0`, with derivatives.
//!
//! Evaluation regimes for `J`:
//!
//! * ascending series for `x <= 12`, and on the evanescent side
//!   `x < 0.6627 nu` where the alternating terms decrease and the series is
//!   the only accurate route;
//! * Schläfli integral representation
//!   `J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
//!              - sin(nu pi)/pi int_0^inf e^{-nu t - x sinh t} dt`
//!   in the turning-point and oscillatory regime (exact, quadrature-limited);
//! * Hankel large-argument asymptotics for `x >= max(25, 2 nu^2)`.
//!
//! `I` uses the ascending series (all terms positive) up to `x = 300`, the
//! large-argument expansion for `x > 300` when it converges, and the uniform
//! large-order expansion in the remaining corner.
//!
//! Half-integer orders up to 9/2 take the closed trigonometric forms.

use super::SpecfunError;
use crate::mathx as m;
use crate::mathx::KahanSum;
use crate::quad;

const SERIES_MAX_TERMS: usize = 600;

fn check_domain(nu: f64, x: f64) -> Result<(), SpecfunError> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(SpecfunError::Domain("order must be finite and >= 0"));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(SpecfunError::Domain("argument must be finite and >= 0"));
    }
    Ok(())
}

/// J_nu(x).
pub fn bessel_j(nu: f64, x: f64) -> Result<f64, SpecfunError> {
    Ok(bessel_j_pair(nu, x)?.0)
}

/// d/dx J_nu(x).
pub fn bessel_j_prime(nu: f64, x: f64) -> Result<f64, SpecfunError> {
    Ok(bessel_j_pair(nu, x)?.1)
}

/// `(J_nu(x), J'_nu(x))` in one evaluation.
pub fn bessel_j_pair(nu: f64, x: f64) -> Result<(f64, f64), SpecfunError> {
    check_domain(nu, x)?;
    if x == 0.0 {
        let j = if nu == 0.0 { 1.0 } else { 0.0 };
        let jp = if nu == 0.0 {
            0.0
        } else if nu == 1.0 {
            0.5
        } else if nu < 1.0 {
            return Err(SpecfunError::Domain(
                "J'_nu diverges at x = 0 for 0 < nu < 1",
            ));
        } else {
            0.0
        };
        return Ok((j, jp));
    }
    if is_half_integer(nu) && nu <= 4.5 && x >= nu + 0.5 {
        return Ok(j_pair_half_integer(nu, x));
    }
    if x >= 25.0f64.max(2.0 * nu * nu) {
        return Ok(j_pair_hankel(nu, x));
    }
    if x <= 12.0 || x < 0.6627 * nu {
        return Ok(j_pair_series(nu, x));
    }
    Ok(j_pair_integral(nu, x))
}

fn is_half_integer(nu: f64) -> bool {
    let t = 2.0 * nu;
    t == m::floor(t) && t != 2.0 * m::floor(nu)
}

// --- ascending series ---

fn j_pair_series(nu: f64, x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let mut s = 1.0f64;
    let mut sum = KahanSum::new();
    let mut dsum = KahanSum::new();
    sum.add(1.0);
    dsum.add(nu);
    for k in 0..SERIES_MAX_TERMS {
        let kf = k as f64;
        s *= -q / ((kf + 1.0) * (nu + kf + 1.0));
        sum.add(s);
        dsum.add(s * (2.0 * kf + 2.0 + nu));
        if m::abs(s) < 1e-18 * (1.0 + m::abs(sum.value())) && 2.0 * (kf + 1.0) > x {
            break;
        }
    }
    let scale = m::exp(nu * m::ln(0.5 * x) - super::gamma::gamma_ln_unchecked(nu + 1.0));
    (scale * sum.value(), scale * dsum.value() / x)
}

// --- Hankel large-argument asymptotics ---

fn hankel_single(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = KahanSum::new();
    let mut q = KahanSum::new();
    let mut r = 1.0f64;
    p.add(1.0);
    let mut prev = 1.0f64;
    for k in 1..60 {
        let kf = k as f64;
        r *= (mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (8.0 * kf * x);
        if m::abs(r) > prev {
            break; // semi-convergent: stop at the smallest term
        }
        prev = m::abs(r);
        let signed = if (k / 2) % 2 == 0 { r } else { -r };
        if k % 2 == 0 {
            p.add(signed);
        } else {
            q.add(signed);
        }
        if m::abs(r) < 1e-18 {
            break;
        }
    }
    let omega = x - (0.5 * nu + 0.25) * m::PI;
    let (so, co) = m::sin_cos(omega);
    m::sqrt(2.0 / (m::PI * x)) * (p.value() * co - q.value() * so)
}

fn j_pair_hankel(nu: f64, x: f64) -> (f64, f64) {
    let j = hankel_single(nu, x);
    let jm = hankel_single(nu - 1.0, x); // a_k even in order, valid for nu-1 < 0
    (j, jm - nu / x * j)
}

// --- integral representation ---

fn gauss_legendre_24() -> ([f64; 12], [f64; 12]) {
    // nodes on (0,1] half-interval by Newton on P_24; symmetric pairs
    let n = 24usize;
    let mut xs = [0.0f64; 12];
    let mut ws = [0.0f64; 12];
    for i in 0..12 {
        let mut t = m::cos(m::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        for _ in 0..100 {
            let (pn, dpn) = legendre_pair(n, t);
            let dt = pn / dpn;
            t -= dt;
            if m::abs(dt) < 1e-16 {
                break;
            }
        }
        let (_, dpn) = legendre_pair(n, t);
        xs[i] = t;
        ws[i] = 2.0 / ((1.0 - t * t) * dpn * dpn);
    }
    (xs, ws)
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn j_pair_integral(nu: f64, x: f64) -> (f64, f64) {
    let (xs, ws) = gauss_legendre_24();
    let panels = (((nu + x) * m::PI / 3.0) as usize).max(8) + 1;
    let w = m::PI / panels as f64;
    let mut osc_j = KahanSum::new();
    let mut osc_jp = KahanSum::new();
    for p in 0..panels {
        let c = (p as f64 + 0.5) * w;
        for i in 0..12 {
            for sgn in [-1.0, 1.0] {
                let theta = c + sgn * 0.5 * w * xs[i];
                let phase = nu * theta - x * m::sin(theta);
                let (sp, cp) = m::sin_cos(phase);
                let wt = 0.5 * w * ws[i];
                osc_j.add(wt * cp);
                osc_jp.add(wt * m::sin(theta) * sp);
            }
        }
    }
    let mut j = osc_j.value() / m::PI;
    let mut jp = osc_jp.value() / m::PI;

    // non-integer order: exponential correction term
    let nearest = m::round(nu);
    let frac = nu - nearest;
    if m::abs(frac) > 1e-13 {
        let sin_nupi = if (nearest as i64) % 2 == 0 {
            m::sin(m::PI * frac)
        } else {
            -m::sin(m::PI * frac)
        };
        // upper limit where the integrand has decayed below 1e-20
        let mut t_hi = 1.0f64;
        while nu * t_hi + x * m::sinh(t_hi) < 46.0 && t_hi < 700.0 {
            t_hi *= 2.0;
        }
        let decay = quad::adaptive_gk(
            &mut |t: f64| m::exp(-nu * t - x * m::sinh(t)),
            0.0,
            t_hi,
            1e-16,
            1e-16,
        );
        let decay_d = quad::adaptive_gk(
            &mut |t: f64| m::sinh(t) * m::exp(-nu * t - x * m::sinh(t)),
            0.0,
            t_hi,
            1e-16,
            1e-16,
        );
        j -= sin_nupi / m::PI * decay.value;
        jp += sin_nupi / m::PI * decay_d.value;
    }
    (j, jp)
}

// --- half-integer closed forms ---

fn j_pair_half_integer(nu: f64, x: f64) -> (f64, f64) {
    let amp = m::sqrt(2.0 / (m::PI * x));
    let (s, c) = m::sin_cos(x);
    let mut jm = amp * c; // J_{-1/2}
    let mut j = amp * s; // J_{1/2}
    let mut ord = 0.5f64;
    while ord < nu - 0.25 {
        let jn = 2.0 * ord / x * j - jm;
        jm = j;
        j = jn;
        ord += 1.0;
    }
    (j, jm - nu / x * j)
}

// --- modified Bessel I ---

/// Scaled evaluation: `I_nu(x) = i * exp(log_scale)`, `I'_nu(x) = i_prime * exp(log_scale)`.
#[derive(Clone, Copy, Debug)]
pub struct ScaledBesselI {
    pub log_scale: f64,
    pub i: f64,
    pub i_prime: f64,
}

impl ScaledBesselI {
    /// log I_nu(x); finite whenever x > 0.
    pub fn log_value(&self) -> f64 {
        self.log_scale + m::ln(self.i)
    }
    pub fn log_prime(&self) -> f64 {
        self.log_scale + m::ln(self.i_prime)
    }
}

/// I_nu(x) or I'_nu(x). Errors with `Overflow` when the unscaled value is
/// not representable; use [`bessel_i_scaled`] there.
pub fn bessel_i(nu: f64, x: f64, derivative: bool) -> Result<f64, SpecfunError> {
    let s = bessel_i_scaled(nu, x)?;
    let base = if derivative { s.i_prime } else { s.i };
    if s.log_scale > 700.0 || m::ln(base.max(1e-300)) + s.log_scale > 709.0 {
        return Err(SpecfunError::Overflow);
    }
    Ok(base * m::exp(s.log_scale))
}

pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<ScaledBesselI, SpecfunError> {
    check_domain(nu, x)?;
    if x == 0.0 {
        let i = if nu == 0.0 { 1.0 } else { 0.0 };
        let ip = if nu == 1.0 { 0.5 } else { 0.0 };
        return Ok(ScaledBesselI {
            log_scale: 0.0,
            i,
            i_prime: ip,
        });
    }
    if x <= 300.0 {
        return Ok(i_series(nu, x));
    }
    if x >= 3.0 * nu * nu {
        return Ok(i_asymptotic(nu, x));
    }
    // large order, large argument: uniform expansion (reduced accuracy ~nu^-4)
    Ok(i_uniform(nu, x))
}

fn i_series(nu: f64, x: f64) -> ScaledBesselI {
    let q = 0.25 * x * x;
    let mut s = 1.0f64;
    let mut sum = KahanSum::new();
    let mut dsum = KahanSum::new();
    sum.add(1.0);
    dsum.add(nu);
    for k in 0..SERIES_MAX_TERMS {
        let kf = k as f64;
        s *= q / ((kf + 1.0) * (nu + kf + 1.0));
        sum.add(s);
        dsum.add(s * (2.0 * kf + 2.0 + nu));
        if s < 1e-18 * sum.value() && 2.0 * (kf + 1.0) > x {
            break;
        }
    }
    ScaledBesselI {
        log_scale: nu * m::ln(0.5 * x) - super::gamma::gamma_ln_unchecked(nu + 1.0),
        i: sum.value(),
        i_prime: dsum.value() / x,
    }
}

fn i_asym_factor(nu: f64, x: f64) -> f64 {
    // I_nu(x) ~ e^x/sqrt(2 pi x) * factor
    let mu = 4.0 * nu * nu;
    let mut acc = KahanSum::new();
    acc.add(1.0);
    let mut r = 1.0f64;
    let mut prev = 1.0f64;
    for k in 1..60 {
        let kf = k as f64;
        r *= -(mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (8.0 * kf * x);
        if m::abs(r) > prev {
            break;
        }
        prev = m::abs(r);
        acc.add(r);
        if m::abs(r) < 1e-18 {
            break;
        }
    }
    acc.value()
}

fn i_asymptotic(nu: f64, x: f64) -> ScaledBesselI {
    let amp = 1.0 / m::sqrt(2.0 * m::PI * x);
    let i = amp * i_asym_factor(nu, x);
    let i_up = amp * i_asym_factor(nu + 1.0, x);
    ScaledBesselI {
        log_scale: x,
        i,
        i_prime: i_up + nu / x * i,
    }
}

fn i_uniform(nu: f64, x: f64) -> ScaledBesselI {
    let z = x / nu;
    let t = m::sqrt(1.0 + z * z);
    let p = 1.0 / t;
    let eta = t + m::ln(z / (1.0 + t));
    let u1 = (3.0 * p - 5.0 * p * p * p) / 24.0;
    let u2 = (81.0 * p * p - 462.0 * m::powi(p, 4) + 385.0 * m::powi(p, 6)) / 1152.0;
    let u3 = (30375.0 * m::powi(p, 3) - 369603.0 * m::powi(p, 5) + 765765.0 * m::powi(p, 7)
        - 425425.0 * m::powi(p, 9))
        / 414720.0;
    let v1 = (-9.0 * p + 7.0 * p * p * p) / 24.0;
    let v2 = (-135.0 * p * p + 594.0 * m::powi(p, 4) - 455.0 * m::powi(p, 6)) / 1152.0;
    let v3 = (-42525.0 * m::powi(p, 3) + 451737.0 * m::powi(p, 5) - 883575.0 * m::powi(p, 7)
        + 475475.0 * m::powi(p, 9))
        / 414720.0;
    let su = 1.0 + u1 / nu + u2 / (nu * nu) + u3 / (nu * nu * nu);
    let sv = 1.0 + v1 / nu + v2 / (nu * nu) + v3 / (nu * nu * nu);
    let amp = 1.0 / (m::sqrt(2.0 * m::PI * nu) * m::sqrt(t));
    ScaledBesselI {
        log_scale: nu * eta,
        i: amp * su,
        i_prime: amp * t / z * sv,
    }
}
