use num_bigint::BigUint;

use super::ExperimentError;
use crate::arith::primes_up_to;

/// A partial product `prod (1 - (p-1)/p^2)` over primes `p = 1 (mod 6)`,
/// held as an exact fraction.
///
/// The terms are `(p^2 - p + 1) / p^2`. The running fraction is kept
/// unreduced — cross-term gcds are possible but harmless, and skipping
/// them keeps construction linear in the number of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProduct {
    pub limit: u64,
    /// Number of primes that contributed a factor.
    pub terms: u64,
    numerator: BigUint,
    denominator: BigUint,
}

impl PartialProduct {
    /// First `digits` decimal digits of the exact value (truncated, so
    /// every printed digit matches the true expansion). The value is
    /// always in `(0, 1)`.
    pub fn decimal(&self, digits: usize) -> String {
        let scale = BigUint::from(10u32).pow(digits as u32);
        let scaled = &self.numerator * scale / &self.denominator;
        let body = scaled.to_string();
        let mut out = String::from("0.");
        for _ in body.len()..digits {
            out.push('0');
        }
        out.push_str(&body);
        out
    }

    /// Strict comparison via cross-multiplication; exact.
    pub fn lt(&self, other: &PartialProduct) -> bool {
        &self.numerator * &other.denominator < &other.numerator * &self.denominator
    }

    pub fn fraction(&self) -> (&BigUint, &BigUint) {
        (&self.numerator, &self.denominator)
    }
}

/// The partial product over primes `p = 1 (mod 6)`, `p <= limit`.
///
/// Strictly decreasing in the limit (every factor is below one) and
/// exact, so any requested digit count is correct.
pub fn meyerowitz_product(limit: u64) -> Result<PartialProduct, ExperimentError> {
    const MINIMUM: u64 = 7;
    if limit < MINIMUM {
        return Err(ExperimentError::LimitTooSmall {
            limit,
            minimum: MINIMUM,
        });
    }
    let mut numerator = BigUint::from(1u32);
    let mut denominator = BigUint::from(1u32);
    let mut terms = 0u64;
    for p in primes_up_to(limit)? {
        if p % 6 != 1 {
            continue;
        }
        numerator *= BigUint::from(p * p - p + 1);
        denominator *= BigUint::from(p * p);
        terms += 1;
    }
    Ok(PartialProduct {
        limit,
        terms,
        numerator,
        denominator,
    })
}
