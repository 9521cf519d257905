//! The verification driver: every identity is checked against independent
//! numeric routes.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use super::genfunc::{complex_modulus_sum, genfunc_sum};
use super::levin::accelerate;
use super::quad::quadrature_oracle;
use super::tail::tail_bracket;
use super::terms::partial_sum;
use crate::error::Result;
use crate::exact::{bits_for_digits, format_significant, Decimal, Rational};
use crate::identities::{modulus_sq_rhs, IdentityRecord, SeriesSpec};

/// Accelerated sums must match to `digits - ACCEL_BUFFER` digits.
pub const ACCEL_BUFFER: u32 = 5;
/// Quadrature must match to this many digits, or all requested digits if fewer.
pub const QUAD_DIGITS: u32 = 25;
/// Cut-off for the tail-bracket cross-check.
pub const TAIL_N: u64 = 1000;
/// Entries re-verified at higher precision per run.
pub const SPOT_CHECKS: usize = 3;

/// Outcome of checking one identity. Numbers are decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub family: String,
    pub symbolic: Option<String>,
    pub symbolic_value: Option<String>,
    pub accel_value: Option<String>,
    pub accel_error_estimate: Option<String>,
    pub quad_value: Option<String>,
    pub quad_digits: Option<u32>,
    /// Enclosure of the sum, `partial_sum(N) + tail_bracket(N)`.
    pub tail_bracket: Option<[String; 2]>,
    pub tail_contains: Option<bool>,
    pub digits_requested: u32,
    pub digits_agreed: u32,
    pub elapsed_ms: f64,
    pub error: Option<String>,
    pub passed: bool,
}

/// Number of leading significant digits on which `a` and `reference` agree,
/// capped at `cap`. An exact-zero reference is compared absolutely.
pub fn digits_agreed(a: &Float, reference: &Float, cap: u32) -> u32 {
    let prec = a.prec().max(reference.prec()).max(64);
    let diff = Float::with_val(prec, a - reference).abs();
    if diff.is_zero() {
        return cap;
    }
    let rel = if reference.is_zero() {
        diff
    } else {
        diff / Float::with_val(prec, reference.abs_ref())
    };
    let d = -rel.log10().to_f64();
    if d.is_nan() || d <= 0.0 {
        0
    } else {
        (d.floor() as u32).min(cap)
    }
}

impl VerificationReport {
    fn empty(record: &IdentityRecord, digits: u32) -> Self {
        Self {
            id: record.id(),
            family: record.spec.family().name().to_string(),
            symbolic: record.closed_form.as_ref().map(|c| c.to_string()),
            symbolic_value: None,
            accel_value: None,
            accel_error_estimate: None,
            quad_value: None,
            quad_digits: None,
            tail_bracket: None,
            tail_contains: None,
            digits_requested: digits,
            digits_agreed: 0,
            elapsed_ms: 0.0,
            error: None,
            passed: false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report fields serialize")
    }
}

/// Reference value: the closed form where one exists, else `(π/2y) tanh(πy/2)`
/// for the modulus family, `arcsin(√x)/√x` for `genfunc` at `p = 0`, and the
/// integral representation for the remaining `genfunc` entries.
pub fn reference_value(record: &IdentityRecord, digits: u32) -> Result<Decimal> {
    if let Some(c) = &record.closed_form {
        return c.to_decimal(digits);
    }
    match &record.spec {
        SeriesSpec::ModulusSq { y } => modulus_sq_rhs(y, digits),
        SeriesSpec::Genfunc { x, p: 0 } => Ok(arcsin_ratio(x, digits)),
        spec => quadrature_oracle(spec, digits),
    }
}

/// `arcsin(√x)/√x`, or `arsinh(√-x)/√-x` for negative `x`.
fn arcsin_ratio(x: &Rational, digits: u32) -> Decimal {
    let prec = bits_for_digits(digits) + 32;
    let xf = Float::with_val(prec, x);
    let value = if xf.is_zero() {
        Float::with_val(prec, 1)
    } else if xf > 0 {
        let r = xf.sqrt();
        Float::with_val(prec, r.asin_ref()) / r
    } else {
        let r = (-xf).sqrt();
        Float::with_val(prec, r.asinh_ref()) / r
    };
    Decimal::new(value, digits)
}

/// The numeric value on the acceleration route with its error estimate.
fn accelerated(spec: &SeriesSpec, digits: u32) -> Result<(Decimal, Option<Float>)> {
    match spec {
        SeriesSpec::ModulusSq { y } => Ok((complex_modulus_sum(y, digits)?, None)),
        SeriesSpec::Genfunc { x, p } => Ok((genfunc_sum(x, *p, digits)?, None)),
        _ => {
            let a = accelerate(spec, digits)?;
            Ok((a.value, Some(a.error_estimate)))
        }
    }
}

fn run(record: &IdentityRecord, digits: u32, report: &mut VerificationReport) -> Result<()> {
    let spec = &record.spec;
    let reference = reference_value(record, digits + 5)?;
    let shown = |d: &Decimal| format_significant(d.value(), digits);
    if record.closed_form.is_some() {
        report.symbolic_value = Some(shown(&reference));
    }
    let (accel, err) = accelerated(spec, digits)?;
    report.accel_value = Some(shown(&accel));
    report.accel_error_estimate = err.map(|e| format_significant(&e, 3));
    report.digits_agreed = digits_agreed(accel.value(), reference.value(), digits);
    let mut ok = report.digits_agreed + ACCEL_BUFFER >= digits;

    let quad_applies = match spec {
        SeriesSpec::Base { z } | SeriesSpec::Power { z, .. } => *z > -1,
        _ => false,
    };
    if quad_applies {
        let q = quadrature_oracle(spec, digits)?;
        let agreed = digits_agreed(q.value(), reference.value(), digits);
        report.quad_value = Some(shown(&q));
        report.quad_digits = Some(agreed);
        ok &= agreed >= QUAD_DIGITS.min(digits);
    }

    if let Ok(tail) = tail_bracket(spec, TAIL_N) {
        let head = partial_sum(spec, TAIL_N, 40)?;
        let enclosure = tail.shift(head.value());
        let contains = enclosure.contains(reference.value());
        report.tail_bracket = Some([
            format_significant(&enclosure.lo, 20),
            format_significant(&enclosure.hi, 20),
        ]);
        report.tail_contains = Some(contains);
        ok &= contains;
    }
    report.passed = ok;
    Ok(())
}

/// Checks one identity. Failures are recorded in the report, never raised.
pub fn verify(record: &IdentityRecord, digits: u32) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::empty(record, digits);
    if let Err(e) = run(record, digits, &mut report) {
        report.error = Some(e.to_string());
        report.passed = false;
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Checks every record in parallel; reports come back in input order.
pub fn verify_all(records: &[IdentityRecord], digits: u32) -> Vec<VerificationReport> {
    records.par_iter().map(|r| verify(r, digits)).collect()
}

/// Re-verifies [`SPOT_CHECKS`] records drawn with `seed` at 1.5× the digits,
/// guarding against false convergence of the extrapolation.
pub fn spot_recheck(records: &[IdentityRecord], digits: u32, seed: u64) -> Vec<VerificationReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let picks: Vec<&IdentityRecord> = records.choose_multiple(&mut rng, SPOT_CHECKS).collect();
    let higher = digits + digits.div_ceil(2);
    picks.par_iter().map(|r| verify(r, higher)).collect()
}
