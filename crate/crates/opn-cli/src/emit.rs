//! Byte-stable record rendering.
//!
//! Records are flat and numeric, so the three formats are produced by
//! hand: JSON is one object per line with fixed field order, CSV carries a
//! header row, and the table format mirrors how the published lists are
//! laid out (bare values for m-lists, aligned columns for the density
//! table). Identical inputs produce identical bytes, whatever the thread
//! count that computed them.

use std::io::Write;

use opn_core::decimal::render_sig;
use opn_core::experiment::{CubicRoots, DensityRow, PartialProduct};
use opn_core::identity::{GcdProfile, Verdict};
use opn_core::scan::{PrimePowerQuotient, PrimeValuation, ScanSummary, SolutionClass};

/// A record type that knows its three renderings.
pub trait Record {
    /// CSV header row (no trailing newline).
    fn csv_header() -> &'static str;
    /// One CSV row.
    fn csv_row(&self) -> String;
    /// One JSON object.
    fn json_row(&self) -> String;
    /// Table header, if this record type uses one.
    fn table_header() -> Option<String> {
        None
    }
    /// One table row.
    fn table_row(&self) -> String;
}

impl Record for SolutionClass {
    fn csv_header() -> &'static str {
        "m,g1,g2,is_solution"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.m, self.g1, self.g2, self.is_solution)
    }

    fn json_row(&self) -> String {
        format!(
            "{{\"m\":{},\"g1\":{},\"g2\":{},\"is_solution\":{}}}",
            self.m, self.g1, self.g2, self.is_solution
        )
    }

    fn table_row(&self) -> String {
        // The published lists print bare values.
        self.m.to_string()
    }
}

impl Record for DensityRow {
    fn csv_header() -> &'static str {
        "limit,count,percentage"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{}",
            self.limit,
            self.count,
            self.percentage_decimal()
        )
    }

    fn json_row(&self) -> String {
        format!(
            "{{\"limit\":{},\"count\":{},\"percentage\":{}}}",
            self.limit,
            self.count,
            self.percentage_decimal()
        )
    }

    fn table_header() -> Option<String> {
        Some(format!(
            "{:>12}  {:>12}  {:>12}",
            "Upper limit", "Count", "Percentage"
        ))
    }

    fn table_row(&self) -> String {
        format!(
            "{:>12}  {:>12}  {:>11}%",
            self.limit,
            self.count,
            self.percentage_decimal()
        )
    }
}

impl Record for PrimeValuation {
    fn csv_header() -> &'static str {
        "p,a,b"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{}", self.p, self.a, self.b)
    }

    fn json_row(&self) -> String {
        format!("{{\"p\":{},\"a\":{},\"b\":{}}}", self.p, self.a, self.b)
    }

    fn table_row(&self) -> String {
        format!("{} {} {}", self.p, self.a, self.b)
    }
}

impl Record for PrimePowerQuotient {
    fn csv_header() -> &'static str {
        "w,quotient,is_prime_power"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{}", self.w, self.quotient, self.is_prime_power)
    }

    fn json_row(&self) -> String {
        format!(
            "{{\"w\":{},\"quotient\":{},\"is_prime_power\":{}}}",
            self.w, self.quotient, self.is_prime_power
        )
    }

    fn table_row(&self) -> String {
        self.w.to_string()
    }
}

impl Record for CubicRoots {
    fn csv_header() -> &'static str {
        "p,r,s"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{}", self.p, self.r, self.s)
    }

    fn json_row(&self) -> String {
        format!("{{\"p\":{},\"r\":{},\"s\":{}}}", self.p, self.r, self.s)
    }

    fn table_row(&self) -> String {
        format!("{} {}", self.r, self.s)
    }
}

/// Summary record for `scan`.
pub struct SummaryRecord {
    pub lo: u64,
    pub hi: u64,
    pub solutions: u64,
    pub nonsolutions: u64,
}

impl SummaryRecord {
    pub fn from_summary(s: &ScanSummary) -> Self {
        SummaryRecord {
            lo: s.lo,
            hi: s.hi,
            solutions: s.solution_count,
            nonsolutions: s.nonsolution_count(),
        }
    }

    fn percentage(&self) -> String {
        render_sig(
            100 * self.solutions as u128,
            (self.hi - self.lo + 1) as u128,
            6,
        )
    }
}

impl Record for SummaryRecord {
    fn csv_header() -> &'static str {
        "lo,hi,solutions,nonsolutions,percentage"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.lo,
            self.hi,
            self.solutions,
            self.nonsolutions,
            self.percentage()
        )
    }

    fn json_row(&self) -> String {
        format!(
            "{{\"lo\":{},\"hi\":{},\"solutions\":{},\"nonsolutions\":{},\"percentage\":{}}}",
            self.lo,
            self.hi,
            self.solutions,
            self.nonsolutions,
            self.percentage()
        )
    }

    fn table_row(&self) -> String {
        format!(
            "range [{}, {}]: {} solutions, {} non-solutions ({}%)",
            self.lo,
            self.hi,
            self.solutions,
            self.nonsolutions,
            self.percentage()
        )
    }
}

/// Profile record for `profile`: inputs plus the full GCD tuple.
pub struct ProfileRecord {
    pub n: u128,
    pub i: u128,
    pub q: u128,
    pub k: u32,
    pub profile: GcdProfile,
}

impl Record for ProfileRecord {
    fn csv_header() -> &'static str {
        "n,i,q,k,E,F,K,G,H,I,J"
    }

    fn csv_row(&self) -> String {
        let p = &self.profile;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n, self.i, self.q, self.k, p.e, p.f, p.k, p.g, p.h, p.i_gcd, p.j
        )
    }

    fn json_row(&self) -> String {
        let p = &self.profile;
        format!(
            "{{\"n\":{},\"i\":{},\"q\":{},\"k\":{},\"E\":{},\"F\":{},\"K\":{},\"G\":{},\"H\":{},\"I\":{},\"J\":{}}}",
            self.n, self.i, self.q, self.k, p.e, p.f, p.k, p.g, p.h, p.i_gcd, p.j
        )
    }

    fn table_row(&self) -> String {
        let p = &self.profile;
        format!(
            "(n={}, i={}, q={}, k={})  E={} F={} K={} G={} H={} I={} J={}",
            self.n, self.i, self.q, self.k, p.e, p.f, p.k, p.g, p.h, p.i_gcd, p.j
        )
    }
}

/// One named check with its outcome, used by `spoof-check`.
pub struct CheckRecord<'a>(pub &'a Verdict);

impl Record for CheckRecord<'_> {
    fn csv_header() -> &'static str {
        "check,passed"
    }

    fn csv_row(&self) -> String {
        format!("\"{}\",{}", self.0.name, self.0.passed)
    }

    fn json_row(&self) -> String {
        format!(
            "{{\"check\":\"{}\",\"passed\":{}}}",
            self.0.name, self.0.passed
        )
    }

    fn table_row(&self) -> String {
        let status = if self.0.passed { "pass" } else { "FAIL" };
        if self.0.detail.is_empty() {
            format!("{:4}  {}", status, self.0.name)
        } else {
            format!("{:4}  {} ({})", status, self.0.name, self.0.detail)
        }
    }
}

/// Value record for `meyerowitz`.
pub struct ProductRecord {
    pub limit: u64,
    pub terms: u64,
    pub value: String,
}

impl ProductRecord {
    pub fn new(product: &PartialProduct, digits: usize) -> Self {
        ProductRecord {
            limit: product.limit,
            terms: product.terms,
            value: product.decimal(digits),
        }
    }
}

impl Record for ProductRecord {
    fn csv_header() -> &'static str {
        "limit,terms,value"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{}", self.limit, self.terms, self.value)
    }

    fn json_row(&self) -> String {
        format!(
            "{{\"limit\":{},\"terms\":{},\"value\":{}}}",
            self.limit, self.terms, self.value
        )
    }

    fn table_row(&self) -> String {
        format!(
            "product over {} primes 1 (mod 6) up to {}: {}",
            self.terms, self.limit, self.value
        )
    }
}

/// Writes a record stream in the chosen format.
///
/// JSON emits nothing for an empty stream; CSV always emits its header.
pub fn emit<R: Record>(
    records: &[R],
    format: crate::cli::Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        crate::cli::Format::Json => {
            for r in records {
                writeln!(out, "{}", r.json_row())?;
            }
        }
        crate::cli::Format::Csv => {
            writeln!(out, "{}", R::csv_header())?;
            for r in records {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        crate::cli::Format::Table => {
            if let Some(header) = R::table_header() {
                writeln!(out, "{header}")?;
            }
            for r in records {
                writeln!(out, "{}", r.table_row())?;
            }
        }
    }
    Ok(())
}
