//! Exact prime-power factorization of 64-bit inputs.
//!
//! Strategy: trial division by the sieved primes up to 10^6, a deterministic
//! Miller-Rabin check on the survivor, then Brent-cycle rho splitting with a
//! polynomial constant derived from the input value itself, so repeated runs
//! factor identically. A composite that resists every constant in the budget
//! is reported as an explicit failure instead of looping forever.

use std::fmt;
use std::sync::OnceLock;

use super::{gcd, is_prime_u64, primes_up_to, ArithError};

/// Trial division covers every prime up to this bound.
const TRIAL_LIMIT: u64 = 1_000_000;

/// Number of distinct rho constants tried before giving up on a composite.
const RHO_BUDGET: u64 = 64;

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_LIMIT).expect("static limit is in range"))
}

/// An exact prime-power decomposition, strictly increasing by prime.
///
/// The empty list represents 1. Every stored prime has passed the
/// deterministic primality check and the product of `prime^exponent`
/// recomposes the original value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factors `x` exactly. Fails for zero and for inputs of 64 bits or more.
    pub fn of(x: u128) -> Result<Self, ArithError> {
        if x == 0 {
            return Err(ArithError::FactorZero);
        }
        let mut n = u64::try_from(x).map_err(|_| ArithError::FactorRange(x))?;

        let mut factors: Vec<(u64, u32)> = Vec::new();
        for &p in trial_primes() {
            if p * p > n {
                break;
            }
            if n % p == 0 {
                let mut e = 0;
                while n % p == 0 {
                    n /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
        }

        if n > 1 {
            // Survivors have no prime factor below the trial bound, so they
            // are either prime or split into at most three large primes.
            let mut survivors = vec![n];
            let mut extracted: Vec<u64> = Vec::new();
            while let Some(s) = survivors.pop() {
                if is_prime_u64(s) {
                    extracted.push(s);
                } else {
                    let d = split_composite(s)?;
                    survivors.push(d);
                    survivors.push(s / d);
                }
            }
            extracted.sort_unstable();
            for p in extracted {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }

        Ok(Factorization { factors })
    }

    /// Builds a factorization from explicit prime-power pairs, validating
    /// the ordering, exponent positivity, and primality invariants.
    pub fn from_parts(factors: Vec<(u64, u32)>) -> Result<Self, ArithError> {
        for window in factors.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(ArithError::InvalidFactorization(format!(
                    "primes not strictly increasing: {} then {}",
                    window[0].0, window[1].0
                )));
            }
        }
        for &(p, e) in &factors {
            if e == 0 {
                return Err(ArithError::InvalidFactorization(format!(
                    "zero exponent on prime {p}"
                )));
            }
            if !is_prime_u64(p) {
                return Err(ArithError::InvalidFactorization(format!(
                    "{p} is not prime"
                )));
            }
        }
        Ok(Factorization { factors })
    }

    /// The prime-power pairs, strictly increasing by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Recomposes the represented integer.
    pub fn value(&self) -> Result<u128, ArithError> {
        let mut acc: u128 = 1;
        for &(p, e) in &self.factors {
            acc = super::mul_capped(acc, super::pow_capped(p as u128, e)?)?;
        }
        Ok(acc)
    }

    /// True iff every exponent is 1 (vacuously true for 1).
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// True iff 2 does not divide the represented integer.
    pub fn is_odd(&self) -> bool {
        self.factors.first().map_or(true, |&(p, _)| p != 2)
    }

    /// The exponent of `p` in the factorization (0 when `p` is absent).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Number of distinct prime factors.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(p, e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// SplitMix64 step; the fixed derivation behind the rho constants.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Finds a nontrivial divisor of composite `n` via Brent-cycle rho.
fn split_composite(n: u64) -> Result<u64, ArithError> {
    debug_assert!(n > 1 && !is_prime_u64(n));
    if n % 2 == 0 {
        return Ok(2);
    }
    for attempt in 0..RHO_BUDGET {
        let mix = splitmix64(n ^ attempt.wrapping_mul(0xa076_1d64_78bd_642f));
        let c = 1 + mix % (n - 1);
        let x0 = 2 + splitmix64(mix) % (n - 3).max(1);
        if let Some(d) = brent_rho(n, c, x0) {
            return Ok(d);
        }
    }
    Err(ArithError::SplitBudgetExhausted(n))
}

/// One Brent-cycle rho pass with polynomial `x^2 + c` from start `x0`.
fn brent_rho(n: u64, c: u64, x0: u64) -> Option<u64> {
    let n128 = n as u128;
    let step = |x: u64| ((x as u128 * x as u128 + c as u128) % n128) as u64;

    let mut y = x0;
    let mut r: u64 = 1;
    let mut q: u64 = 1;
    let mut g: u64 = 1;
    let mut x = y;
    let mut ys = y;
    const BATCH: u64 = 128;

    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = (q as u128 * x.abs_diff(y) as u128 % n128) as u64;
            }
            g = gcd(q as u128, n128) as u64;
            k += BATCH;
        }
        r <<= 1;
    }
    if g == n {
        // Backtrack one step at a time to recover the divisor.
        loop {
            ys = step(ys);
            g = gcd(x.abs_diff(ys) as u128, n128) as u64;
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}
