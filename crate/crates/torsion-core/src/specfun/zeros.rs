//! Positive zeros of `J_nu`, `J'_nu`, and `G^pm_nu(z) = pm J_nu(z)/2 + z J'_nu(z)`.
//!
//! Strategy: McMahon asymptotic guesses polished by safeguarded Newton when
//! the index is deep enough for the expansion to be trusted; otherwise
//! index-exact brackets. `J'` and `G^pm` zeros interlace the `J` zeros -
//! exactly one of each lies strictly between consecutive zeros of `J_nu`
//! (and one before the first): which turns the `J` ladder into certified
//! brackets for the other families. A sign change across the returned zero
//! is always verified.

use super::bessel::bessel_j_pair;
use super::{SpecfunError, ZeroFamily, ZeroKind};
use crate::mathx as m;

const SCAN_STEP: f64 = 0.5;
const SCAN_MAX: usize = 400;

/// `G^pm_nu(z)`; `sign > 0` selects `G^+`.
pub fn g_function(sign: i8, nu: f64, z: f64) -> Result<f64, SpecfunError> {
    let (j, jp) = bessel_j_pair(nu, z)?;
    let half = if sign > 0 { 0.5 } else { -0.5 };
    Ok(half * j + z * jp)
}

/// The k-th positive zero (k >= 1) of the family, in increasing order.
/// Absolute accuracy ~1e-12 relative to the zero's magnitude.
pub fn zero(family: ZeroFamily, k: u32) -> Result<f64, SpecfunError> {
    if k == 0 {
        return Err(SpecfunError::Domain("zero index k must be >= 1"));
    }
    ZeroSeq::new(family)?.nth(k)
}

/// Incremental generator of a family's zeros in increasing order.
///
/// Enumeration walks bands zero by zero; this keeps that linear instead of
/// quadratic in the index.
pub struct ZeroSeq {
    family: ZeroFamily,
    produced: u32,
    prev: f64,
    /// ladder of J zeros bracketing the non-J families
    j_prev: f64,
}

impl ZeroSeq {
    pub fn new(family: ZeroFamily) -> Result<Self, SpecfunError> {
        // surface order-domain errors eagerly
        let family = ZeroFamily::new(family.kind, family.order)?;
        Ok(Self {
            family,
            produced: 0,
            prev: 0.0,
            j_prev: 0.0,
        })
    }

    /// Next zero in increasing order.
    pub fn next_zero(&mut self) -> Result<f64, SpecfunError> {
        let k = self.produced + 1;
        let nu = self.family.order;
        let z = match self.family.kind {
            ZeroKind::JZero => self.next_j(nu, k)?,
            ZeroKind::JPrimeZero if nu == 0.0 => self.next_j(1.0, k)?,
            ZeroKind::JPrimeZero => {
                if mcmahon_trustworthy(nu, k, true) {
                    let guess = mcmahon_jprime(nu, k);
                    refine_from_guess(self.family, guess)?
                } else {
                    let hi = self.advance_j_ladder(nu)?;
                    let lo = left_bracket_end(nu, self.j_prev, hi);
                    let z = solve_in_bracket(self.family, lo, hi)?;
                    self.j_prev = hi;
                    z
                }
            }
            ZeroKind::GPlusZero | ZeroKind::GMinusZero => {
                let hi = self.advance_j_ladder(nu)?;
                let lo = left_bracket_end(nu, self.j_prev, hi);
                let z = solve_in_bracket(self.family, lo, hi)?;
                self.j_prev = hi;
                z
            }
        };
        if z <= self.prev {
            return Err(SpecfunError::NoConvergence {
                what: "zero ordering",
                lo: self.prev,
                hi: z,
            });
        }
        self.prev = z;
        self.produced = k;
        Ok(z)
    }

    /// Zero with index `k` counted from 1. Consumes the sequence: the
    /// shortcut paths below do not maintain the ladder state.
    pub fn nth(mut self, k: u32) -> Result<f64, SpecfunError> {
        assert!(k > self.produced, "ZeroSeq::nth must move forward");
        // jump straight to a McMahon-backed index when possible
        let nu = self.family.order;
        match self.family.kind {
            ZeroKind::JZero => {
                if mcmahon_trustworthy(nu, k, false) {
                    return j_zero_direct(nu, k);
                }
            }
            ZeroKind::JPrimeZero => {
                if nu == 0.0 {
                    return j_zero_direct_or_seq(1.0, k);
                }
                if mcmahon_trustworthy(nu, k, true) {
                    let fam = self.family;
                    return refine_from_guess(fam, mcmahon_jprime(nu, k));
                }
            }
            _ => {
                // G families: bracket from the two neighbouring J zeros
                if k > 1 && mcmahon_trustworthy(nu, k - 1, false) {
                    let lo = j_zero_direct(nu, k - 1)?;
                    let hi = j_zero_direct(nu, k)?;
                    return solve_in_bracket(self.family, lo + 1e-9 * (1.0 + lo), hi);
                }
            }
        }
        let mut z = self.prev;
        while self.produced < k {
            z = self.next_zero()?;
        }
        Ok(z)
    }

    fn next_j(&mut self, nu: f64, k: u32) -> Result<f64, SpecfunError> {
        if nu == 0.5 {
            return Ok(k as f64 * m::PI);
        }
        if mcmahon_trustworthy(nu, k, false) {
            return j_zero_direct(nu, k);
        }
        let start = if self.produced == 0 {
            nu.max(0.4)
        } else {
            self.prev + 0.05
        };
        let fam = ZeroFamily {
            kind: ZeroKind::JZero,
            order: nu,
        };
        let (lo, hi) = scan_for_sign_change(fam, start)?;
        solve_in_bracket(fam, lo, hi)
    }

    fn advance_j_ladder(&mut self, nu: f64) -> Result<f64, SpecfunError> {
        // next J zero strictly above self.j_prev
        if nu == 0.5 {
            let k = (self.j_prev / m::PI + 0.5) as u32 + 1;
            return Ok(k as f64 * m::PI);
        }
        let k = self.produced + 1;
        if mcmahon_trustworthy(nu, k, false) {
            return j_zero_direct(nu, k);
        }
        let start = if self.produced == 0 {
            nu.max(0.4)
        } else {
            self.j_prev + 0.05
        };
        let fam = ZeroFamily {
            kind: ZeroKind::JZero,
            order: nu,
        };
        let (lo, hi) = scan_for_sign_change(fam, start)?;
        solve_in_bracket(fam, lo, hi)
    }
}

fn left_bracket_end(nu: f64, j_prev: f64, hi: f64) -> f64 {
    if j_prev > 0.0 {
        j_prev + 1e-9 * (1.0 + j_prev)
    } else {
        // first zero: any point below it where the function is still positive
        (0.8 * nu).max(1e-6).min(0.5 * hi)
    }
}

fn j_zero_direct_or_seq(nu: f64, k: u32) -> Result<f64, SpecfunError> {
    if mcmahon_trustworthy(nu, k, false) {
        j_zero_direct(nu, k)
    } else {
        let seq = ZeroSeq::new(ZeroFamily {
            kind: ZeroKind::JZero,
            order: nu,
        })?;
        seq.nth(k)
    }
}

fn j_zero_direct(nu: f64, k: u32) -> Result<f64, SpecfunError> {
    if nu == 0.5 {
        return Ok(k as f64 * m::PI);
    }
    refine_from_guess(
        ZeroFamily {
            kind: ZeroKind::JZero,
            order: nu,
        },
        mcmahon_j(nu, k),
    )
}

fn mcmahon_trustworthy(nu: f64, k: u32, prime: bool) -> bool {
    let off = if prime { 0.75 } else { 0.25 };
    let beta = (k as f64 + 0.5 * nu - off) * m::PI;
    beta >= 15.0 && beta >= 3.0 * nu * nu
}

fn mcmahon_j(nu: f64, k: u32) -> f64 {
    let mu = 4.0 * nu * nu;
    let b = (k as f64 + 0.5 * nu - 0.25) * m::PI;
    let b8 = 8.0 * b;
    b - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * m::powi(b8, 5))
}

fn mcmahon_jprime(nu: f64, k: u32) -> f64 {
    let mu = 4.0 * nu * nu;
    let b = (k as f64 + 0.5 * nu - 0.75) * m::PI;
    let b8 = 8.0 * b;
    b - (mu + 3.0) / b8
        - 4.0 * (7.0 * mu * mu + 82.0 * mu - 9.0) / (3.0 * b8 * b8 * b8)
        - 32.0 * (83.0 * mu * mu * mu + 2075.0 * mu * mu - 3039.0 * mu + 3537.0)
            / (15.0 * m::powi(b8, 5))
}

/// value and derivative of the family's defining function
fn eval(family: ZeroFamily, x: f64) -> Result<(f64, f64), SpecfunError> {
    let nu = family.order;
    let (j, jp) = bessel_j_pair(nu, x)?;
    Ok(match family.kind {
        ZeroKind::JZero => (j, jp),
        ZeroKind::JPrimeZero => (jp, -jp / x - (1.0 - nu * nu / (x * x)) * j),
        ZeroKind::GPlusZero => (0.5 * j + x * jp, 0.5 * jp - (x - nu * nu / x) * j),
        ZeroKind::GMinusZero => (-0.5 * j + x * jp, -0.5 * jp - (x - nu * nu / x) * j),
    })
}

fn scan_for_sign_change(family: ZeroFamily, start: f64) -> Result<(f64, f64), SpecfunError> {
    let mut x0 = start;
    let (mut f0, _) = eval(family, x0)?;
    if f0 == 0.0 {
        x0 += 1e-9;
        f0 = eval(family, x0)?.0;
    }
    for _ in 0..SCAN_MAX {
        let x1 = x0 + SCAN_STEP;
        let (f1, _) = eval(family, x1)?;
        if f0 * f1 < 0.0 {
            return Ok((x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    Err(SpecfunError::NoConvergence {
        what: "zero bracket scan",
        lo: start,
        hi: x0,
    })
}

fn refine_from_guess(family: ZeroFamily, guess: f64) -> Result<f64, SpecfunError> {
    // establish a sign-change bracket around the asymptotic guess
    let mut delta = 0.25;
    for _ in 0..4 {
        let lo = guess - delta;
        let hi = guess + delta;
        let flo = eval(family, lo)?.0;
        let fhi = eval(family, hi)?.0;
        if flo * fhi < 0.0 {
            return solve_in_bracket(family, lo, hi);
        }
        delta *= 2.0;
    }
    Err(SpecfunError::NoConvergence {
        what: "asymptotic guess bracketing",
        lo: guess - 2.0,
        hi: guess + 2.0,
    })
}

fn solve_in_bracket(family: ZeroFamily, mut lo: f64, mut hi: f64) -> Result<f64, SpecfunError> {
    let (mut flo, _) = eval(family, lo)?;
    let (fhi, _) = eval(family, hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 {
        return Err(SpecfunError::NoConvergence {
            what: "bracket sign change",
            lo,
            hi,
        });
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (f, df) = eval(family, x)?;
        if f == 0.0 {
            break;
        }
        if f * flo > 0.0 {
            lo = x;
            flo = f;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        x = if df != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo <= 4.0 * f64::EPSILON * x {
            break;
        }
    }
    // verified sign change across the result by construction of [lo, hi]
    debug_assert!(flo * eval(family, hi)?.0 <= 0.0);
    Ok(x)
}
