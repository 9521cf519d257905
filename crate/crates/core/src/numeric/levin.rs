//! The Levin u-transform on exact partial sums.
//!
//! For terms `a_n` and partial sums `s_n = Σ_{i≤n} a_i`, order `k` starting
//! at `n₀` is
//!
//! ```text
//! L_k = Σ_j (-1)^j C(k,j) (β+n₀+j)^(k-2) s_{n₀+j}/a_{n₀+j}
//!     / Σ_j (-1)^j C(k,j) (β+n₀+j)^(k-2) / a_{n₀+j},        β = 1.
//! ```
//!
//! The sums are formed exactly, so the large cancellation between binomial
//! weights costs nothing; only the final quotient is rounded.

use rug::{Float, Integer};

use super::terms::{Kernel, TermStream};
use crate::error::{Error, Result};
use crate::exact::{bits_for_digits, Decimal, Rational};
use crate::identities::SeriesSpec;

/// Default largest transform order.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// Order cap for a digit request: about 0.9 digits are gained per order.
pub fn max_order_for(digits: u32) -> usize {
    DEFAULT_MAX_ORDER.max((f64::from(digits) * 1.6).ceil() as usize)
}

/// Result of an accelerated summation.
#[derive(Clone, Debug)]
pub struct Accelerated {
    pub value: Decimal,
    /// Size of the last change between successive orders.
    pub error_estimate: Float,
    pub order: usize,
    pub terms_used: usize,
}

/// Start index: past the sign changes, where the remainder model holds.
fn start_index(kernel: &Kernel) -> usize {
    let stable = kernel.sign_stable_from() as usize;
    match kernel {
        Kernel::Spec(SeriesSpec::Excluded { .. }) => stable,
        _ if stable == 0 => 0,
        _ => 2 * stable,
    }
}

fn levin_order(ratios: &[(Rational, Rational)], n0: usize, k: usize) -> Option<Rational> {
    let mut num = Rational::new();
    let mut den = Rational::new();
    for j in 0..=k {
        let base = (n0 + j + 1) as u32;
        let mut f = Rational::from(Integer::from(Integer::binomial_u(k as u32, j as u32)));
        if k >= 2 {
            f *= Integer::from(Integer::u_pow_u(base, (k - 2) as u32));
        } else {
            f /= base;
        }
        if j % 2 == 1 {
            f = -f;
        }
        let (s_over_a, inv_a) = &ratios[n0 + j];
        num += Rational::from(&f * s_over_a);
        den += f * inv_a;
    }
    if den == 0 {
        None
    } else {
        Some(num / den)
    }
}

fn to_float(q: &Rational, prec: u32) -> Float {
    Float::with_val(prec, q)
}

/// Accelerates the exact term sequence of `kernel`.
pub(crate) fn accelerate_kernel(
    kernel: Kernel,
    digits: u32,
    max_order: usize,
) -> Result<Accelerated> {
    if digits == 0 {
        return Err(Error::Domain("digits must be positive".into()));
    }
    let n0 = start_index(&kernel);
    let n_terms = n0 + max_order + 1;
    let mut stream = TermStream::from_kernel(kernel);
    let terms = stream.take_terms(n_terms)?;
    let mut ratios = Vec::with_capacity(n_terms);
    let mut s = Rational::new();
    let mut scale = Rational::new();
    for a in &terms {
        s += a;
        let abs = Rational::from(s.abs_ref());
        if abs > scale {
            scale = abs;
        }
        if *a == 0 {
            ratios.push((Rational::new(), Rational::new()));
        } else {
            let inv = Rational::from(a.recip_ref());
            ratios.push((Rational::from(&s * &inv), inv));
        }
    }
    if ratios[n0..].iter().any(|(_, inv)| *inv == 0) {
        return Err(Error::Convergence(
            "a term past the start index vanishes".into(),
        ));
    }
    let prec = bits_for_digits(digits) + 32;
    let tol = {
        let mut t = Float::with_val(prec, &scale);
        t /= Float::with_val(prec, Float::u_pow_u(10, digits + 2));
        t
    };
    let mut prev: Option<Rational> = None;
    let mut small_steps = 0;
    let mut last_diff = Float::with_val(prec, f64::INFINITY);
    for k in 1..=max_order {
        let Some(lk) = levin_order(&ratios, n0, k) else {
            continue;
        };
        if let Some(p) = &prev {
            let diff = to_float(&Rational::from(&lk - p), prec).abs();
            small_steps = if diff <= tol { small_steps + 1 } else { 0 };
            last_diff = diff;
            if small_steps >= 2 {
                return Ok(Accelerated {
                    value: Decimal::new(to_float(&lk, prec), digits),
                    error_estimate: last_diff,
                    order: k,
                    terms_used: n0 + k + 1,
                });
            }
        }
        prev = Some(lk);
    }
    Err(Error::Convergence(format!(
        "Levin transform did not settle within order {max_order}: last change {}, tolerance {}",
        last_diff.to_f64(),
        tol.to_f64()
    )))
}

/// Extrapolated value of the series with a heuristic error estimate.
pub fn accelerate(spec: &SeriesSpec, digits: u32) -> Result<Accelerated> {
    spec.validate()?;
    if matches!(spec, SeriesSpec::ModulusSq { .. }) {
        return Err(Error::Capability(format!(
            "{spec} is complex-valued; use complex_modulus_sum"
        )));
    }
    accelerate_kernel(Kernel::Spec(spec.clone()), digits, max_order_for(digits))
}
