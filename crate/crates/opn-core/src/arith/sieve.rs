//! Smallest-prime-factor sieving, the backbone of bulk sigma computation.

use super::ArithError;

/// Precomputed smallest prime factors for every `m` in `[2, limit]`.
///
/// Immutable after construction, so a single table can be shared across
/// worker threads for the duration of a scan. Entry `m` factors in
/// `O(log m)` by repeated division.
pub struct SpfTable {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfTable {
    /// Sieves smallest prime factors up to `limit` (inclusive).
    ///
    /// `limit` must lie in `[2, 2^31]`; an allocation failure is reported
    /// with the requested byte count rather than aborting.
    pub fn build(limit: u64) -> Result<Self, ArithError> {
        if !(2..=1 << 31).contains(&limit) {
            return Err(ArithError::SieveLimit(limit));
        }
        let len = (limit + 1) as usize;
        let requested = (len as u128) * std::mem::size_of::<u32>() as u128;
        let mut spf: Vec<u32> = Vec::new();
        spf.try_reserve_exact(len)
            .map_err(|_| ArithError::SieveMemory { limit, requested })?;
        spf.resize(len, 0);

        for m in 2..=limit as usize {
            if spf[m] == 0 {
                spf[m] = m as u32;
                let mut j = m * m;
                while j <= limit as usize {
                    if spf[j] == 0 {
                        spf[j] = m as u32;
                    }
                    j += m;
                }
            }
        }
        Ok(SpfTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `m`; `m` must lie in `[2, limit]`.
    #[inline]
    pub fn spf(&self, m: u64) -> u32 {
        debug_assert!((2..=self.limit).contains(&m));
        self.spf[m as usize]
    }

    /// Appends the prime-power decomposition of `m` to `out`.
    ///
    /// `m` must lie in `[1, limit]`; `m = 1` contributes nothing. The buffer
    /// is the caller's so hot loops can reuse a single allocation.
    #[inline]
    pub fn factor_into(&self, mut m: u64, out: &mut Vec<(u32, u32)>) {
        debug_assert!((1..=self.limit).contains(&m));
        while m > 1 {
            let p = self.spf[m as usize];
            let mut e = 0;
            while m % p as u64 == 0 {
                m /= p as u64;
                e += 1;
            }
            out.push((p, e));
        }
    }

    /// The prime-power decomposition of `m` as a fresh vector.
    pub fn factor(&self, m: u64) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        self.factor_into(m, &mut out);
        out
    }

    /// True iff `m` is prime, by the fixed-point property of the table.
    #[inline]
    pub fn is_prime(&self, m: u64) -> bool {
        m >= 2 && self.spf[m as usize] as u64 == m
    }
}

/// All primes up to `limit` (inclusive) by a plain Eratosthenes sieve.
pub fn primes_up_to(limit: u64) -> Result<Vec<u64>, ArithError> {
    if limit > 1 << 31 {
        return Err(ArithError::SieveLimit(limit));
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    let len = (limit + 1) as usize;
    let mut composite = vec![false; len];
    let mut primes = Vec::new();
    for n in 2..len {
        if !composite[n] {
            primes.push(n as u64);
            let mut j = n * n;
            while j < len {
                composite[j] = true;
                j += n;
            }
        }
    }
    Ok(primes)
}
