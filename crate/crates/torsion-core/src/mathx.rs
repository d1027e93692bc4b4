//! Float helpers for the `no_std` build: libm-backed elementary functions,
//! compensated summation, and a first-order dual number used to carry
//! d/ds through the zeta continuations.

#![allow(dead_code)]

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;
pub const PI: f64 = core::f64::consts::PI;
pub const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}
#[inline]
pub fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}
#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}
#[inline]
pub fn exp_m1(x: f64) -> f64 {
    libm::expm1(x)
}
#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}
#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}
#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}
#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}
#[inline]
pub fn sin_cos(x: f64) -> (f64, f64) {
    (libm::sin(x), libm::cos(x))
}
#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}
#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}
#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}
#[inline]
pub fn atanh(x: f64) -> f64 {
    libm::atanh(x)
}
#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}
#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}
#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}
#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

/// x^n for small integer n without going through `pow`.
pub fn powi(x: f64, n: i32) -> f64 {
    let mut r = 1.0;
    let mut b = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    r
}

/// Kahan–Neumaier compensated accumulator.
#[derive(Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if abs(self.sum) >= abs(x) {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// First-order dual number `a + b eps`: arithmetic carries one derivative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual {
    pub val: f64,
    pub der: f64,
}

impl Dual {
    pub const fn new(val: f64, der: f64) -> Self {
        Self { val, der }
    }
    pub const fn var(val: f64) -> Self {
        Self { val, der: 1.0 }
    }
    pub const fn con(val: f64) -> Self {
        Self { val, der: 0.0 }
    }
    pub fn recip(self) -> Self {
        Self::new(1.0 / self.val, -self.der / (self.val * self.val))
    }
    /// c^self for a positive constant base.
    pub fn pow_base(base: f64, e: Dual) -> Self {
        let v = powf(base, e.val);
        Self::new(v, v * ln(base) * e.der)
    }
}

impl core::ops::Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.val + o.val, self.der + o.der)
    }
}
impl core::ops::Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.val - o.val, self.der - o.der)
    }
}
impl core::ops::Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.val * o.val, self.val * o.der + self.der * o.val)
    }
}
impl core::ops::Div for Dual {
    type Output = Dual;
    fn div(self, o: Dual) -> Dual {
        self * o.recip()
    }
}
impl core::ops::Mul<f64> for Dual {
    type Output = Dual;
    fn mul(self, c: f64) -> Dual {
        Dual::new(self.val * c, self.der * c)
    }
}
impl core::ops::Add<f64> for Dual {
    type Output = Dual;
    fn add(self, c: f64) -> Dual {
        Dual::new(self.val + c, self.der)
    }
}
impl core::ops::Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.val, -self.der)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_small_terms() {
        let mut s = KahanSum::new();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-17);
        }
        assert!((s.value() - (1.0 + 1e-16)).abs() < 1e-30);
    }

    #[test]
    fn dual_product_rule() {
        let x = Dual::var(3.0);
        let y = (x * x + 2.0) * x; // x^3 + 2x, d/dx = 3x^2 + 2
        assert_eq!(y.val, 33.0);
        assert_eq!(y.der, 29.0);
    }

    #[test]
    fn powi_matches_pow() {
        for n in [-3i32, -1, 0, 1, 2, 7] {
            let a = powi(1.7, n);
            let b = powf(1.7, n as f64);
            assert!((a - b).abs() <= 1e-14 * b.abs());
        }
    }
}
