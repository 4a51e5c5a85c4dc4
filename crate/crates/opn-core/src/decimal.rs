//! Byte-stable decimal rendering of exact fractions.
//!
//! Table and CSV output must not drift between runs or platforms, so the
//! percentage columns are rendered here with a fixed rule: round half to
//! even at the requested number of significant digits, then trim trailing
//! fractional zeros.

/// Renders `num / den` to `sig` significant digits, round-half-even.
///
/// Exact values shorter than `sig` digits come out undecorated
/// (`"100"`, `"97.4"`), which matches how the solution-density table is
/// conventionally printed.
pub fn render_sig(num: u128, den: u128, sig: u32) -> String {
    assert!(den != 0, "denominator must be positive");
    assert!(sig >= 1, "need at least one significant digit");
    if num == 0 {
        return "0".to_string();
    }

    let integer_part = num / den;
    if integer_part > 0 {
        let digits_before_point = integer_part.to_string().len() as u32;
        if digits_before_point >= sig {
            // All significant digits sit left of the point; round the
            // integer itself at the appropriate power of ten.
            let scale = 10u128.pow(digits_before_point - sig);
            let rounded = round_half_even(num, den * scale) * scale;
            return rounded.to_string();
        }
        let frac_digits = sig - digits_before_point;
        let scaled = round_half_even(num * 10u128.pow(frac_digits), den);
        return place_point(scaled, frac_digits);
    }

    // Value below one: find the leading zeros after the point.
    let mut leading = 0u32;
    while num * 10u128.pow(leading + 1) < den {
        leading += 1;
    }
    let scaled = round_half_even(num * 10u128.pow(leading + sig), den);
    let digits = scaled.to_string();
    // Rounding may carry into one extra digit; absorb it into the zeros.
    let leading = leading.saturating_sub(digits.len() as u32 - sig);
    let mut out = String::from("0.");
    for _ in 0..leading {
        out.push('0');
    }
    out.push_str(&digits);
    trim_fraction(out)
}

fn round_half_even(num: u128, den: u128) -> u128 {
    let q = num / den;
    let r = num % den;
    match (2 * r).cmp(&den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q % 2 == 0 {
                q
            } else {
                q + 1
            }
        }
    }
}

fn place_point(scaled: u128, frac_digits: u32) -> String {
    let mut digits = scaled.to_string();
    while (digits.len() as u32) <= frac_digits {
        digits.insert(0, '0');
    }
    let split = digits.len() - frac_digits as usize;
    let out = format!("{}.{}", &digits[..split], &digits[split..]);
    trim_fraction(out)
}

fn trim_fraction(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
