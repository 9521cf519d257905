use std::collections::BTreeMap;
use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::{ExactConstant, Monomial};
use crate::error::{Error, Result};

/// Largest number of significant digits `to_decimal` will produce.
pub const MAX_DIGITS: u32 = 100_000;

/// Bits needed to carry `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32
}

/// A high-precision number together with the number of significant digits
/// it is meant to be displayed with.
#[derive(Clone, Debug, PartialEq)]
pub struct Decimal {
    value: Float,
    digits: u32,
}

impl Decimal {
    pub fn new(value: Float, digits: u32) -> Self {
        Self {
            value,
            digits: digits.max(1),
        }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn into_value(self) -> Float {
        self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Same value shown with a different number of digits.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::new(self.value.clone(), digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Renders `value` rounded to `digits` significant digits: positional
/// notation for moderate exponents, `d.ddde±n` otherwise.
pub fn format_significant(value: &Float, digits: u32) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let (neg, mantissa, exp) = value.to_sign_string_exp(10, Some(digits as usize));
    let exp = exp.unwrap_or(0);
    let sign = if neg { "-" } else { "" };
    let body = if (-5..=21).contains(&exp) {
        if exp <= 0 {
            format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
        } else if exp as usize >= mantissa.len() {
            format!("{}{}", mantissa, "0".repeat(exp as usize - mantissa.len()))
        } else {
            let (int, frac) = mantissa.split_at(exp as usize);
            format!("{int}.{frac}")
        }
    } else {
        let (lead, rest) = mantissa.split_at(1);
        if rest.is_empty() {
            format!("{lead}e{}", exp - 1)
        } else {
            format!("{lead}.{rest}e{}", exp - 1)
        }
    };
    format!("{sign}{body}")
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_significant(&self.value, self.digits))
    }
}

/// Generator values rounded to nearest at a fixed precision, with the
/// number of rounding units each one carries.
struct Generators {
    prec: u32,
    sqrt_pi: Float,
    sqrt2: Float,
    log2: Float,
    euler: Float,
    gamma_quarter: Float,
    zeta: BTreeMap<u32, Float>,
}

impl Generators {
    fn new(prec: u32) -> Self {
        let pi = Float::with_val(prec, Constant::Pi);
        Self {
            prec,
            sqrt_pi: pi.sqrt(),
            sqrt2: Float::with_val(prec, 2).sqrt(),
            log2: Float::with_val(prec, Constant::Log2),
            euler: Float::with_val(prec, Constant::Euler),
            gamma_quarter: Float::with_val(prec, 0.25).gamma(),
            zeta: BTreeMap::new(),
        }
    }

    fn zeta(&mut self, k: u32) -> &Float {
        let prec = self.prec;
        self.zeta
            .entry(k)
            .or_insert_with(|| Float::with_val(prec, Float::zeta_u(k)))
    }

    /// Value of a monomial and a bound on its relative error in units of
    /// `2^-prec`.
    fn monomial(&mut self, m: &Monomial) -> (Float, u32) {
        let prec = self.prec;
        let mut value = Float::with_val(prec, 1);
        let mut units = 0u32;
        let factor = |value: &mut Float, units: &mut u32, base: &Float, e: i32, base_units: u32| {
            if e == 0 {
                return;
            }
            let p = Float::with_val(prec, base.pow(e));
            *value *= p;
            *units += base_units * e.unsigned_abs() + 2;
        };
        let sqrt_pi = self.sqrt_pi.clone();
        factor(&mut value, &mut units, &sqrt_pi, m.pi_half, 2);
        factor(&mut value, &mut units, &self.sqrt2, i32::from(m.sqrt2), 1);
        factor(&mut value, &mut units, &self.log2, m.log2 as i32, 1);
        factor(&mut value, &mut units, &self.euler, m.euler_gamma as i32, 1);
        factor(
            &mut value,
            &mut units,
            &self.gamma_quarter,
            m.gamma_quarter,
            1,
        );
        let zetas: Vec<(u32, u32)> = m.zeta_odd.iter().map(|(&k, &e)| (k, e)).collect();
        for (k, e) in zetas {
            let z = self.zeta(k).clone();
            factor(&mut value, &mut units, &z, e as i32, 1);
        }
        (value, units)
    }
}

impl ExactConstant {
    /// Value at `prec` bits together with an upper bound on the absolute
    /// error of the returned float.
    pub fn evaluate(&self, prec: u32) -> (Float, Float) {
        let mut gens = Generators::new(prec);
        let n_terms = self.terms.len() as u32;
        let mut sum = Float::with_val(prec, 0);
        let mut weighted = Float::with_val(64, 0);
        for (m, q) in &self.terms {
            let (mv, units) = gens.monomial(m);
            let t = Float::with_val(prec, q) * mv;
            // coefficient rounding, product rounding, and the running sum
            let units = units + 2 + n_terms;
            weighted += Float::with_val(64, t.abs_ref()) * units;
            sum += &t;
        }
        // doubled to absorb second-order terms
        let mut bound = Float::with_val(64, &weighted) << 1u32;
        bound >>= prec;
        bound.next_up();
        (sum, bound)
    }

    /// Decimal value with relative error below `10^(1-digits)`.
    ///
    /// Precision is raised until the a-priori rounding bound certifies the
    /// requested digits.
    pub fn to_decimal(&self, digits: u32) -> Result<Decimal> {
        if digits == 0 {
            return Err(Error::Domain("digits must be positive".into()));
        }
        if digits > MAX_DIGITS {
            return Err(Error::Capability(format!(
                "{digits} digits requested; generator evaluation is limited to {MAX_DIGITS}"
            )));
        }
        if self.is_zero() {
            return Ok(Decimal::new(
                Float::with_val(bits_for_digits(digits) + 16, 0),
                digits,
            ));
        }
        let max_bits = bits_for_digits(MAX_DIGITS) * 4;
        let mut prec = bits_for_digits(digits) + 64;
        loop {
            let (value, bound) = self.evaluate(prec);
            // |err| <= |value| * 10^-digits / 4
            let mut target = Float::with_val(64, value.abs_ref());
            target /= Float::with_val(64, Float::u_pow_u(10, digits));
            target >>= 2u32;
            if !value.is_zero() && bound <= target {
                return Ok(Decimal::new(value, digits));
            }
            if prec >= max_bits {
                return Err(Error::Capability(format!(
                    "could not certify {digits} digits of {self} within {max_bits} bits"
                )));
            }
            prec *= 2;
        }
    }

    /// Convenience: the value as an `f64`.
    pub fn to_f64(&self) -> f64 {
        self.evaluate(128).0.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, zeta_exact, Rational};
    use rug::{Integer, Rational as Q};

    /// π from Machin's formula in exact rationals, truncated with an
    /// alternating-series error below 10^-digits.
    fn machin_pi(digits: u32) -> Q {
        fn arctan_inv(x: u64, digits: u32) -> Q {
            let eps = Q::from((1, Integer::from(10).pow(digits + 5)));
            let mut sum = Q::new();
            let mut k = 0u64;
            loop {
                let denom = Integer::from(2 * k + 1) * Integer::from(x).pow(2 * k as u32 + 1);
                let t = Q::from((1, denom));
                if t < eps {
                    break;
                }
                if k.is_multiple_of(2) {
                    sum += t;
                } else {
                    sum -= t;
                }
                k += 1;
            }
            sum
        }
        (arctan_inv(5, digits) * 16u32) - (arctan_inv(239, digits) * 4u32)
    }

    #[test]
    fn pi_twenty_digits_two_routes() {
        let d = ExactConstant::pi().to_decimal(20).unwrap();
        assert_eq!(d.to_string(), "3.1415926535897932385");
        let machin = Float::with_val(200, &machin_pi(40));
        let diff = Float::with_val(200, d.value() - &machin).abs();
        assert!(diff < 1e-30);
    }

    #[test]
    fn pi_log2_half() {
        let c = ExactConstant::pi() * ExactConstant::log2();
        let c = c.scale(&ratio(1, 2));
        assert_eq!(c.to_decimal(15).unwrap().to_string(), "1.08879304515180");
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(
            ExactConstant::zero().to_decimal(30).unwrap().to_string(),
            "0"
        );
    }

    #[test]
    fn digit_requests_are_validated() {
        assert!(matches!(
            ExactConstant::pi().to_decimal(0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ExactConstant::pi().to_decimal(MAX_DIGITS + 1),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn cancellation_forces_higher_precision() {
        // 355/113 - π ≈ 2.7e-7; the tiny difference must still come out right
        let c = ExactConstant::rational(ratio(355, 113)) - ExactConstant::pi();
        let d = c.to_decimal(30).unwrap();
        let reference =
            Float::with_val(400, Q::from((355, 113))) - Float::with_val(400, Constant::Pi);
        let rel = Float::with_val(400, d.value() - &reference).abs() / reference.abs();
        assert!(rel < 1e-29);
    }

    #[test]
    fn embedded_reference_constants() {
        // 60 digits each, produced independently with mpmath
        let euler = "0.5772156649015328606065120900824024310421593359399235988057672";
        let gq = "3.625609908221908311930685155867672002995167682880065467433378";
        let ln2 = "0.69314718055994530941723212145817656807550013436025525412068";
        for (c, s) in [
            (ExactConstant::euler_gamma(), euler),
            (ExactConstant::gamma_quarter_pow(1), gq),
            (ExactConstant::log2(), ln2),
        ] {
            let v = c.to_decimal(58).unwrap();
            let r = Float::with_val(300, Float::parse(s).unwrap());
            let rel = Float::with_val(300, v.value() - &r).abs() / &r;
            assert!(rel < 1e-57, "{c}");
        }
    }

    #[test]
    fn even_zeta_matches_direct_evaluation() {
        for k in (2..=20).step_by(2) {
            let exact = zeta_exact(k).unwrap().to_decimal(50).unwrap();
            let direct = Float::with_val(300, Float::zeta_u(k));
            let rel = Float::with_val(300, exact.value() - &direct).abs() / &direct;
            assert!(rel < 1e-49, "zeta({k})");
        }
    }

    #[test]
    fn more_digits_refine_fewer() {
        let c = ExactConstant::pi() * ExactConstant::zeta_odd(3).unwrap()
            + ExactConstant::rational(Rational::from((-1, 7)));
        let lo = c.to_decimal(20).unwrap();
        let hi = c.to_decimal(45).unwrap();
        let rel = Float::with_val(200, lo.value() - hi.value()).abs() / hi.value().clone().abs();
        assert!(rel < 1e-19);
    }

    #[test]
    fn formatting() {
        let f = |s: &str, d| format_significant(&Float::with_val(200, Float::parse(s).unwrap()), d);
        assert_eq!(f("1234.5678", 6), "1234.57");
        assert_eq!(f("0.000123456", 3), "0.000123");
        assert_eq!(f("-2.5e-30", 2), "-2.5e-30");
        assert_eq!(f("1e30", 1), "1e30");
        assert_eq!(f("120", 3), "120");
    }
}
