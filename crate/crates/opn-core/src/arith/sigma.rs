//! Divisor-sum arithmetic: sigma, deficiency, aliquot sum, abundancy, and
//! the Euclid-Euler constructor for even perfect numbers.

use super::{add_capped, is_prime_u64, mul_capped, ArithError, Factorization, Rational, CAP};

/// `1 + p + p^2 + ... + p^(terms-1)`, exact and capped.
///
/// Accumulated as `s -> s*p + 1` so no division is ever needed.
pub fn geometric_sum(p: u128, terms: u32) -> Result<u128, ArithError> {
    let mut acc: u128 = 0;
    for _ in 0..terms {
        acc = add_capped(mul_capped(acc, p)?, 1)?;
    }
    Ok(acc)
}

/// Sum of divisors from a factorization: `prod (p^(e+1) - 1) / (p - 1)`.
pub fn sigma(f: &Factorization) -> Result<u128, ArithError> {
    let mut acc: u128 = 1;
    for &(p, e) in f.factors() {
        acc = mul_capped(acc, geometric_sum(p as u128, e + 1)?)?;
    }
    Ok(acc)
}

/// `sigma(m^2)` for the `m` described by `f`, via exponent doubling.
///
/// The square itself is never materialized or factored; each prime simply
/// contributes `2e + 1` geometric terms.
pub fn sigma_of_square(f: &Factorization) -> Result<u128, ArithError> {
    let mut acc: u128 = 1;
    for &(p, e) in f.factors() {
        acc = mul_capped(acc, geometric_sum(p as u128, 2 * e + 1)?)?;
    }
    Ok(acc)
}

/// Deficiency `D(x) = 2x - sigma(x)`, signed: abundant inputs are legal and
/// simply come out negative.
pub fn deficiency(f: &Factorization) -> Result<i128, ArithError> {
    let x = f.value()?;
    let twice = mul_capped(x, 2)?;
    let s = sigma(f)?;
    // Both operands are at most 2^127 - 1 so the difference fits i128.
    Ok(twice as i128 - s as i128)
}

/// Aliquot sum `s(x) = sigma(x) - x`.
pub fn aliquot(f: &Factorization) -> Result<u128, ArithError> {
    let x = f.value()?;
    let s = sigma(f)?;
    debug_assert!(s >= x);
    Ok(s - x)
}

/// Abundancy index `sigma(x) / x` in lowest terms.
pub fn abundancy(f: &Factorization) -> Result<Rational, ArithError> {
    Rational::new(sigma(f)?, f.value()?)
}

/// The Euclid-Euler even perfect number `(2^t - 1) * 2^(t-1)`.
///
/// Rejects exponents for which `2^t - 1` is composite.
pub fn even_perfect(t: u32) -> Result<u128, ArithError> {
    if t == 0 || t > 64 {
        return Err(ArithError::NotMersenneExponent(t));
    }
    let mersenne: u128 = (1u128 << t) - 1;
    if mersenne >= 1 << 64 || !is_prime_u64(mersenne as u64) {
        return Err(ArithError::NotMersenneExponent(t));
    }
    let result = mersenne << (t - 1);
    debug_assert!(result <= CAP);
    Ok(result)
}
