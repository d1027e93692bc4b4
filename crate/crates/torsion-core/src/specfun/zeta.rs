//! Riemann and Hurwitz zeta by Euler–Maclaurin continuation.
//!
//! One code path serves value and s-derivative: the summation runs on
//! first-order dual numbers, so d/ds falls out of the same loop that
//! produces the value.

use super::SpecfunError;
use crate::mathx::{Dual, KahanSum};

const CUTOFF_N: usize = 50;
// B_{2k} for k = 1..10
const BERNOULLI_2K: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// (base)^(-s-shift) as a dual in s.
fn pow_neg(base: f64, s: Dual, shift: f64) -> Dual {
    Dual::pow_base(base, -(s + shift))
}

/// Hurwitz zeta and d/ds at real s != 1, a > 0, by Euler–Maclaurin:
///
/// `zeta_H(s,a) = sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s/2
///               + sum_k B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}`
fn hurwitz_dual(s: Dual, a: f64) -> Dual {
    let big = (CUTOFF_N as f64) + a;
    let mut head_v = KahanSum::new();
    let mut head_d = KahanSum::new();
    for n in 0..CUTOFF_N {
        let t = pow_neg(n as f64 + a, s, 0.0);
        head_v.add(t.val);
        head_d.add(t.der);
    }
    let mut total = Dual::new(head_v.value(), head_d.value());

    // tail integral (N+a)^{1-s}/(s-1)
    total = total + Dual::pow_base(big, -(s + (-1.0))) / (s + (-1.0));
    // half-term
    total = total + pow_neg(big, s, 0.0) * 0.5;

    // correction terms with rising factorial (s)(s+1)...(s+2k-2)
    let mut poch = s; // (s)_1
    let mut fact = 1.0; // (2k)!
    for (k, b2k) in BERNOULLI_2K.iter().enumerate() {
        let k = k + 1;
        fact *= (2 * k - 1) as f64 * (2 * k) as f64;
        if k > 1 {
            let kf = k as f64;
            poch = poch * (s + (2.0 * kf - 3.0)) * (s + (2.0 * kf - 2.0));
        }
        let term = poch * pow_neg(big, s, (2 * k - 1) as f64) * (b2k / fact);
        total = total + term;
    }
    total
}

/// Hurwitz zeta `zeta_H(s, a) = sum_{n>=0} (n+a)^{-s}` on its analytic
/// continuation (s != 1).
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64, SpecfunError> {
    Ok(hurwitz_zeta_with_derivative(s, a)?.0)
}

/// Hurwitz zeta together with its s-derivative.
pub fn hurwitz_zeta_with_derivative(s: f64, a: f64) -> Result<(f64, f64), SpecfunError> {
    if !(a > 0.0) {
        return Err(SpecfunError::Domain("hurwitz_zeta requires a > 0"));
    }
    if !s.is_finite() {
        return Err(SpecfunError::Domain("hurwitz_zeta requires finite s"));
    }
    if (s - 1.0).abs() < 1e-12 {
        return Err(SpecfunError::Pole("hurwitz_zeta has a pole at s = 1"));
    }
    let r = hurwitz_dual(Dual::var(s), a);
    Ok((r.val, r.der))
}

/// Riemann zeta on its continuation (s != 1).
pub fn riemann_zeta(s: f64) -> Result<f64, SpecfunError> {
    Ok(riemann_zeta_with_derivative(s)?.0)
}

/// Riemann zeta and derivative: `(zeta(s), zeta'(s))`.
pub fn riemann_zeta_with_derivative(s: f64) -> Result<(f64, f64), SpecfunError> {
    hurwitz_zeta_with_derivative(s, 1.0)
}
