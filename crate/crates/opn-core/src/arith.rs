//! Exact integer arithmetic: capped naturals, gcd, deterministic primality,
//! factorization, divisor sums, and prime sieves.

mod factor;
mod modular;
mod natural;
mod primality;
mod sieve;
mod sigma;

pub use factor::Factorization;
pub use modular::{pow_mod, sqrt_mod};
pub use natural::{Natural, Rational, NATURAL_MAX};
pub use primality::{is_prime, is_prime_u64};
pub use sieve::{primes_up_to, SpfTable};
pub use sigma::{
    abundancy, aliquot, deficiency, even_perfect, geometric_sum, sigma, sigma_of_square,
};

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// The true result of `op` on the given operands exceeds `2^127 - 1`.
    #[error("arithmetic overflow: {op} of {a} and {b} exceeds 2^127 - 1")]
    Overflow { op: &'static str, a: u128, b: u128 },

    /// A value outside the supported `[0, 2^127 - 1]` range was supplied.
    #[error("value {0} exceeds the supported maximum 2^127 - 1")]
    OutOfRange(String),

    /// Primality testing is deterministic only for 64-bit inputs.
    #[error("primality testing supports inputs below 2^64; got {0}")]
    PrimalityRange(u128),

    /// Factorization is limited to 64-bit inputs.
    #[error("factorization supports inputs below 2^64; got {0}")]
    FactorRange(u128),

    /// Zero cannot be factored; all factorization inputs must be >= 1.
    #[error("cannot factor zero")]
    FactorZero,

    /// The rho splitter exhausted its retry budget on a composite survivor.
    #[error("failed to split composite {0} within the retry budget")]
    SplitBudgetExhausted(u64),

    /// A list of prime-exponent pairs failed the factorization invariants.
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    /// `2^t - 1` is composite, so `t` does not generate an even perfect number.
    #[error("2^{0} - 1 is composite; {0} is not a Mersenne exponent")]
    NotMersenneExponent(u32),

    /// Sieve limits must lie in `[2, 2^31]`.
    #[error("sieve limit {0} outside the supported range [2, 2^31]")]
    SieveLimit(u64),

    /// The sieve allocation failed; the requested size is reported.
    #[error("sieve for limit {limit} needs {requested} bytes, allocation failed")]
    SieveMemory { limit: u64, requested: u128 },

    /// A denominator of zero was supplied to a rational constructor.
    #[error("rational denominator must be positive")]
    ZeroDenominator,
}

/// Largest value representable by [`Natural`]: `2^127 - 1`.
pub(crate) const CAP: u128 = (1u128 << 127) - 1;

/// Binary (Stein) gcd on `u128`.
pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// `a * b`, failing if the result exceeds `2^127 - 1`.
#[inline]
pub(crate) fn mul_capped(a: u128, b: u128) -> Result<u128, ArithError> {
    match a.checked_mul(b) {
        Some(v) if v <= CAP => Ok(v),
        _ => Err(ArithError::Overflow {
            op: "product",
            a,
            b,
        }),
    }
}

/// `a + b`, failing if the result exceeds `2^127 - 1`.
#[inline]
pub(crate) fn add_capped(a: u128, b: u128) -> Result<u128, ArithError> {
    match a.checked_add(b) {
        Some(v) if v <= CAP => Ok(v),
        _ => Err(ArithError::Overflow { op: "sum", a, b }),
    }
}

/// `base^exp`, failing if the result exceeds `2^127 - 1`.
pub fn pow_capped(base: u128, exp: u32) -> Result<u128, ArithError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = mul_capped(acc, base)?;
    }
    Ok(acc)
}

/// Exact division; `None` when `b` does not divide `a`.
#[inline]
pub(crate) fn div_exact(a: u128, b: u128) -> Option<u128> {
    if b != 0 && a % b == 0 {
        Some(a / b)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(3003, 11011), 1001);
        assert_eq!(gcd(1, u128::MAX), 1);
    }

    #[test]
    fn capped_ops_detect_the_127_bit_boundary() {
        assert_eq!(mul_capped(1 << 63, 1 << 63), Ok(1 << 126));
        // 2^126 * 2 = 2^127 > CAP even though it fits in u128.
        assert!(matches!(
            mul_capped(1 << 126, 2),
            Err(ArithError::Overflow { .. })
        ));
        assert_eq!(add_capped(CAP - 1, 1), Ok(CAP));
        assert!(add_capped(CAP, 1).is_err());
        assert_eq!(pow_capped(3, 0), Ok(1));
        assert_eq!(pow_capped(2, 126), Ok(1 << 126));
        assert!(pow_capped(2, 127).is_err());
    }

    #[test]
    fn div_exact_requires_divisibility() {
        assert_eq!(div_exact(12, 4), Some(3));
        assert_eq!(div_exact(12, 5), None);
        assert_eq!(div_exact(12, 0), None);
        assert_eq!(div_exact(0, 7), Some(0));
    }
}
