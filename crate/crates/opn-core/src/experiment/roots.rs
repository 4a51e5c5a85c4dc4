use super::ExperimentError;
use crate::arith::{is_prime_u64, sqrt_mod};

/// The two roots of `u^2 + u + 1 = 0 (mod p)`, `0 < r < s < p - 1`.
///
/// These are the primitive cube roots of unity mod `p`; they satisfy
/// `r + s = -1` and `r * s = 1 (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicRoots {
    pub p: u64,
    pub r: u64,
    pub s: u64,
}

/// Solves `u^2 + u + 1 = 0 (mod p)` for prime `p`.
///
/// Roots exist exactly when `p = 1 (mod 3)` (equivalently `1 mod 6` for
/// odd primes); they come from the quadratic formula with a modular square
/// root of `-3`. `p = 3` is rejected separately: there the polynomial is
/// `(u - 1)^2` with only the doubled root 1.
pub fn cyclotomic_roots(p: u64) -> Result<CubicRoots, ExperimentError> {
    if !is_prime_u64(p) {
        return Err(ExperimentError::NotPrime(p));
    }
    if p == 3 {
        return Err(ExperimentError::DegenerateModulus);
    }
    if p % 3 != 1 {
        return Err(ExperimentError::NoRoots(p));
    }

    // u = (-1 +- sqrt(-3)) / 2 (mod p); the discriminant is a residue
    // precisely because p = 1 (mod 3).
    let disc = sqrt_mod(p - 3, p).expect("-3 is a quadratic residue when p = 1 (mod 3)");
    let half = p.div_ceil(2); // inverse of 2 mod p
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
    let u1 = mul((p - 1 + disc) % p, half);
    let u2 = mul((2 * p - 1 - disc) % p, half);

    let (r, s) = (u1.min(u2), u1.max(u2));
    let check = |u: u64| (mul(u, u) + u + 1) % p == 0;
    assert!(check(r) && check(s), "quadratic formula produced non-roots");
    assert!(0 < r && r < s && s < p - 1, "root ordering violated");
    Ok(CubicRoots { p, r, s })
}
