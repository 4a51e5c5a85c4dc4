//! Deterministic Miller-Rabin primality for 64-bit inputs.

use super::{modular::pow_mod, ArithError};

/// Witness set that makes Miller-Rabin deterministic for all n < 3.3 * 10^24,
/// in particular for every u64.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    // n - 1 = d * 2^s with d odd.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;

    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for [`crate::Natural`]-range values; inputs of 64 bits or more
/// are rejected so every verdict stays deterministic.
pub fn is_prime(n: u128) -> Result<bool, ArithError> {
    u64::try_from(n)
        .map(is_prime_u64)
        .map_err(|_| ArithError::PrimalityRange(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
    }

    #[test]
    fn mersenne_cases() {
        assert!(is_prime_u64((1 << 31) - 1));
        assert!(!is_prime_u64(2047)); // 23 * 89
        assert!(is_prime_u64((1 << 61) - 1));
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // Strong pseudoprimes to several bases; composite.
        for n in [3215031751u64, 3825123056546413051, 341550071728321] {
            assert!(!is_prime_u64(n), "{n} is composite");
        }
        // Large primes near the u64 boundary.
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(18446744073709551555));
    }

    #[test]
    fn wide_inputs_are_rejected() {
        assert_eq!(is_prime(97), Ok(true));
        assert!(matches!(
            is_prime(1u128 << 64),
            Err(ArithError::PrimalityRange(_))
        ));
    }
}
