//! Modular exponentiation and square roots for 64-bit moduli.

/// `base^exp mod modulus` with u128 intermediates.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut base = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        exp >>= 1;
        base = base * base % m;
    }
    acc as u64
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Tonelli-Shanks square root modulo an odd prime `p`.
///
/// Returns a root `x` with `x^2 = a (mod p)`, or `None` when `a` is a
/// non-residue. The companion root is `p - x`.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    debug_assert!(p >= 3 && p % 2 == 1);
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    // Euler criterion.
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }

    // Write p - 1 = q * 2^s with q odd.
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;

    // Any quadratic non-residue works as the generator.
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }

    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);

    while t != 1 {
        // Least i with t^(2^i) = 1.
        let mut i = 0;
        let mut probe = t;
        while probe != 1 {
            probe = mul_mod(probe, probe, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul_mod(b, b, p);
        }
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}
