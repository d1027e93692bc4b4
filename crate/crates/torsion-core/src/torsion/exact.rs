//! Exact-arithmetic verification of the even-dimensional boundary-integral
//! normalisation: the chain
//!
//! `c_B * 2^{p-1}/(sqrt(pi)(2p-1)!!) * (-1)^p p (2p-1)!/(2^{p-1} 2^p l^{2p-1})
//!      * Vol(S^{2p-1}_l)  =  p`
//!
//! with `c_B = (-1)^{p(2p-1)} pi^{-(2p-1)/2}` (the Berezin normalisation of
//! a (2p-1)-dimensional fibre) and `Vol(S^{2p-1}_l) = 2 pi^p l^{2p-1}/(p-1)!`,
//! together with the factorial identity `(2p-1)!/((p-1)!(2p-1)!!) = 2^{p-1}`.
//!
//! Everything is tracked as an exact rational times integer powers of
//! `sqrt(pi)` and `l`; the chain must collapse to the integer `p` with both
//! exponents zero.

use alloc::string::String;

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Rational with explicit `sqrt(pi)` and `l` exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Exact {
    num: u128,
    den: u128,
    /// exponent of pi in half-integer units
    pi_halves: i64,
    l_exp: i64,
    negative: bool,
}

impl Exact {
    fn one() -> Self {
        Exact {
            num: 1,
            den: 1,
            pi_halves: 0,
            l_exp: 0,
            negative: false,
        }
    }

    fn reduce(mut self) -> Self {
        let g = gcd(self.num, self.den);
        if g > 1 {
            self.num /= g;
            self.den /= g;
        }
        self
    }

    fn mul(self, other: Exact) -> Self {
        // cross-reduce before multiplying to keep the integers small
        let g1 = gcd(self.num, other.den).max(1);
        let g2 = gcd(other.num, self.den).max(1);
        Exact {
            num: (self.num / g1) * (other.num / g2),
            den: (self.den / g2) * (other.den / g1),
            pi_halves: self.pi_halves + other.pi_halves,
            l_exp: self.l_exp + other.l_exp,
            negative: self.negative ^ other.negative,
        }
        .reduce()
    }
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn double_factorial_odd(p: u32) -> u128 {
    // (2p-1)!! = 1 * 3 * ... * (2p-1)
    (1..=p as u128).map(|k| 2 * k - 1).product()
}

#[derive(Clone, Debug)]
pub struct AnomalyNormalizationCheck {
    pub p: u32,
    /// the collapsed chain as (num, den, pi-half-exponent, l-exponent)
    pub chain: (u128, u128, i64, i64),
    pub chain_equals_p: bool,
    pub factorial_identity_holds: bool,
    pub detail: String,
}

/// Verify the chain and the factorial identity for `1 <= p <= 10` using
/// exact integer arithmetic only.
pub fn anomaly_normalization_identity(
    p: u32,
) -> Result<AnomalyNormalizationCheck, super::TorsionError> {
    if !(1..=10).contains(&p) {
        return Err(super::TorsionError::Unsupported(
            "anomaly_normalization_identity covers p = 1..10",
        ));
    }
    let two_pm1 = 2 * p - 1;

    // c_B = (-1)^{p(2p-1)} pi^{-(2p-1)/2}; p(2p-1) has the parity of p
    let c_b = Exact {
        num: 1,
        den: 1,
        pi_halves: -(two_pm1 as i64),
        l_exp: 0,
        negative: p % 2 == 1,
    };
    // 2^{p-1} / (sqrt(pi) (2p-1)!!)
    let lead = Exact {
        num: 1u128 << (p - 1),
        den: double_factorial_odd(p),
        pi_halves: -1,
        l_exp: 0,
        negative: false,
    };
    // (-1)^p p (2p-1)! / (2^{p-1} 2^p l^{2p-1})
    let berezin = Exact {
        num: p as u128 * factorial(two_pm1),
        den: (1u128 << (p - 1)) * (1u128 << p),
        pi_halves: 0,
        l_exp: -(two_pm1 as i64),
        negative: p % 2 == 1,
    };
    // Vol(S^{2p-1}_l) = 2 pi^p l^{2p-1} / (p-1)!
    let vol = Exact {
        num: 2,
        den: factorial(p - 1),
        pi_halves: 2 * p as i64,
        l_exp: two_pm1 as i64,
        negative: false,
    };

    let chain = Exact::one().mul(c_b).mul(lead).mul(berezin).mul(vol);
    let chain_equals_p = !chain.negative
        && chain.den == 1
        && chain.num == p as u128
        && chain.pi_halves == 0
        && chain.l_exp == 0;

    let num = factorial(two_pm1);
    let den = factorial(p - 1) * double_factorial_odd(p);
    let factorial_identity_holds = num % den == 0 && num / den == (1u128 << (p - 1));

    use alloc::format;
    Ok(AnomalyNormalizationCheck {
        p,
        chain: (chain.num, chain.den, chain.pi_halves, chain.l_exp),
        chain_equals_p,
        factorial_identity_holds,
        detail: format!(
            "chain = {}{}/{} * pi^({}/2) * l^{}, (2p-1)!/((p-1)!(2p-1)!!) = {}",
            if chain.negative { "-" } else { "" },
            chain.num,
            chain.den,
            chain.pi_halves,
            chain.l_exp,
            num / den
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_collapses_to_p() {
        for p in 1..=10 {
            let c = anomaly_normalization_identity(p).unwrap();
            assert!(c.chain_equals_p, "p={p}: {:?}", c.chain);
            assert!(c.factorial_identity_holds, "p={p}");
        }
    }

    #[test]
    fn factorial_identity_at_five() {
        let num = factorial(9);
        let den = factorial(4) * double_factorial_odd(5);
        assert_eq!(num / den, 16);
        assert_eq!(num % den, 0);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(anomaly_normalization_identity(0).is_err());
        assert!(anomaly_normalization_identity(11).is_err());
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_odd(1), 1);
        assert_eq!(double_factorial_odd(2), 3);
        assert_eq!(double_factorial_odd(3), 15);
        assert_eq!(double_factorial_odd(10), 654_729_075);
    }
}
