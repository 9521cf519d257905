//! Rigorous enclosures of `Σ_{k>N} c_k (2k+c)^(-q)`, `c_k = C(2k,k)/4^k`.
//!
//! The bounds combine the Wallis-type inequalities
//! `1/√(π(k+1/2)) ≤ c_k ≤ 1/√(πk)` with integral comparison for `k^(-s)`.

use rug::float::Round;
use rug::ops::{DivAssignRound, MulAssignRound};
use rug::{Float, Integer};

use super::terms::Kernel;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::identities::SeriesSpec;

const PREC: u32 = 128;

/// A closed interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Float,
    pub hi: Float,
}

impl Interval {
    pub fn contains(&self, x: &Float) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn width(&self) -> Float {
        Float::with_val(PREC, &self.hi - &self.lo)
    }

    /// The interval shifted by `x`, rounded outwards.
    pub fn shift(&self, x: &Float) -> Interval {
        let prec = PREC.max(x.prec());
        let (lo, _) = Float::with_val_round(prec, &self.lo + x, Round::Down);
        let (hi, _) = Float::with_val_round(prec, &self.hi + x, Round::Up);
        Interval { lo, hi }
    }
}

/// Shift `c` and exponent `q` with `term(k) = c_k (2k+c)^(-q)`.
fn shape(spec: &SeriesSpec) -> Result<(Rational, u32)> {
    match spec {
        SeriesSpec::Base { z } => Ok((Rational::from(z + 1u32), 1)),
        SeriesSpec::Power { z, p } => Ok((Rational::from(z + 1u32), p + 1)),
        SeriesSpec::NegEven { m, p } => Ok((Rational::from(1 - 2 * i64::from(*m)), p + 1)),
        SeriesSpec::Excluded { m } => Ok((Rational::from(-2 * i64::from(*m)), 1)),
        _ => Err(Error::Capability(format!(
            "no tail bracket for {spec}; rely on the acceleration error estimate"
        ))),
    }
}

/// `(1 + c/(2K))^(-q)` rounded in direction `round`.
fn shift_factor(c: &Rational, q: u32, big_k: u64, round: Round) -> Float {
    let inner = Rational::from(c / (2 * big_k)) + 1u32;
    let exact = inner.recip();
    let mut r = Rational::from(1);
    for _ in 0..q {
        r *= &exact;
    }
    Float::with_val_round(PREC, &r, round).0
}

/// An enclosure of `Σ_{k>N} term(k)`.
///
/// Requires `N ≥ 1` and every term after `N` positive, so that both bounds
/// are monotone in `k`.
pub fn tail_bracket(spec: &SeriesSpec, n: u64) -> Result<Interval> {
    spec.validate()?;
    let (c, q) = shape(spec)?;
    let stable = Kernel::Spec(spec.clone()).sign_stable_from();
    if n == 0 || n + 1 < stable {
        return Err(Error::Capability(format!(
            "tail bracket needs N ≥ max(1, {}) for {spec}, got N = {n}",
            stable.saturating_sub(1)
        )));
    }
    let n1 = n + 1;
    // factor (1 + c/(2k))^(-q) over k ≥ N+1: decreasing in k when c < 0,
    // increasing when c > 0
    let at_start_lo = shift_factor(&c, q, n1, Round::Down);
    let at_start_hi = shift_factor(&c, q, n1, Round::Up);
    let one = Float::with_val(PREC, 1);
    let (f_lo, f_hi) = if c >= 0 {
        (at_start_lo, one)
    } else {
        (one, at_start_hi)
    };
    // s = q + 1/2, Σ_{k≥N+1} k^(-s) ∈ [(N+1)^(1-s), N^(1-s)] / (s-1)
    let two_s_minus_one = 2 * q - 1;
    let pow_half = |k: u64, round: Round| -> Float {
        // k^(1-s) = (k^(2q-1))^(-1/2)
        let big = Integer::from(Integer::u_pow_u(k as u32, two_s_minus_one));
        let mut f = Float::with_val_round(PREC, &big, round.reverse()).0;
        f.sqrt_round(round.reverse());
        let mut r = Float::with_val(PREC, 1);
        r.div_assign_round(&f, round);
        r
    };
    let wallis = {
        // (1 + 1/(2(N+1)))^(-1/2) rounded down
        let mut v = Float::with_val_round(PREC, &Rational::from((2 * n1 + 1, 2 * n1)), Round::Up).0;
        v.sqrt_round(Round::Up);
        let mut r = Float::with_val(PREC, 1);
        r.div_assign_round(&v, Round::Down);
        r
    };
    let common = |round: Round| -> Float {
        // 2^(-q) / (√π (s-1)) with s - 1 = q - 1/2
        let mut d = Float::with_val_round(PREC, rug::float::Constant::Pi, round.reverse()).0;
        d.sqrt_round(round.reverse());
        d.mul_assign_round(Float::with_val(PREC, two_s_minus_one), round.reverse());
        d >>= 1u32;
        d <<= q;
        let mut r = Float::with_val(PREC, 1);
        r.div_assign_round(&d, round);
        r
    };
    let mut lo = common(Round::Down);
    lo.mul_assign_round(&wallis, Round::Down);
    lo.mul_assign_round(&f_lo, Round::Down);
    lo.mul_assign_round(pow_half(n1, Round::Down), Round::Down);
    let mut hi = common(Round::Up);
    hi.mul_assign_round(&f_hi, Round::Up);
    hi.mul_assign_round(pow_half(n, Round::Up), Round::Up);
    // directed rounding is per operation; a relative 2^-100 widening covers
    // any slack in the rounding directions above
    let widen = Float::with_val(PREC, 1) >> 100u32;
    let lo = Float::with_val(PREC, &lo * (Float::with_val(PREC, 1) - &widen));
    let hi = Float::with_val(PREC, &hi * (Float::with_val(PREC, 1) + &widen));
    Ok(Interval { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::numeric::partial_sum;

    fn check(spec: SeriesSpec, exact: f64, n: u64) {
        let b = tail_bracket(&spec, n).unwrap();
        let tail = exact - partial_sum(&spec, n, 30).unwrap().to_f64();
        assert!(
            b.lo.to_f64() <= tail && tail <= b.hi.to_f64(),
            "{spec} N={n}: {tail} not in [{}, {}]",
            b.lo.to_f64(),
            b.hi.to_f64()
        );
    }

    #[test]
    fn base_zero() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        check(SeriesSpec::base(0), half_pi, 1);
        check(SeriesSpec::base(0), half_pi, 100);
        let b = tail_bracket(&SeriesSpec::base(0), 10_000).unwrap();
        assert!(b.width().to_f64() < 1e-2);
    }

    #[test]
    fn shifted_families() {
        check(SeriesSpec::base(-2), 0.0, 50);
        check(
            SeriesSpec::NegEven { m: 1, p: 1 },
            std::f64::consts::FRAC_PI_2,
            20,
        );
        let l2 = std::f64::consts::LN_2;
        check(
            SeriesSpec::Excluded { m: 2 },
            3.0 * l2 / 8.0 - 7.0 / 32.0,
            10,
        );
    }

    #[test]
    fn unsupported() {
        assert!(matches!(
            tail_bracket(
                &SeriesSpec::Weighted {
                    z: ratio(1, 1),
                    nu: 1
                },
                10
            ),
            Err(Error::Capability(_))
        ));
        assert!(matches!(
            tail_bracket(&SeriesSpec::base(0), 0),
            Err(Error::Capability(_))
        ));
        assert!(matches!(
            tail_bracket(&SeriesSpec::Excluded { m: 5 }, 4),
            Err(Error::Capability(_))
        ));
    }
}
