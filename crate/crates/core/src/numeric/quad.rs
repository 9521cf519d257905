//! Double-exponential quadrature of the integral representations
//!
//! ```text
//! Σ c_k a^k / (2k+w)^(p+1) = ((-1)^p/p!) ∫₀¹ x^(w-1) log^p(x) / √(1 - a x²) dx.
//! ```
//!
//! With `x = 1/(1+e^(-2u))` and `u = (π/2) sinh t` both endpoint
//! singularities decay doubly exponentially in `t`. The complement `1-x` and
//! `log x` are formed from `e^(±2u)` directly, so nothing cancels near either
//! endpoint.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::exact::{bits_for_digits, Decimal, Rational};
use crate::identities::SeriesSpec;

const MAX_LEVEL: u32 = 14;

struct Integrand {
    prec: u32,
    w_minus_one: Float,
    p: u32,
    one_minus_a: Float,
    half_pi: Float,
}

impl Integrand {
    /// Integrand times `dx/dt` at node `t`.
    fn eval(&self, t: &Float) -> Float {
        let prec = self.prec;
        let u = Float::with_val(prec, t.sinh_ref()) * &self.half_pi;
        let e_minus = Float::with_val(prec, -Float::with_val(prec, &u * 2u32)).exp();
        let e_plus = Float::with_val(prec, &u * 2u32).exp();
        let x = Float::with_val(prec, Float::with_val(prec, &e_minus + 1u32).recip_ref());
        let one_minus_x = Float::with_val(prec, Float::with_val(prec, &e_plus + 1u32).recip_ref());
        if x.is_zero() || one_minus_x.is_zero() {
            return Float::with_val(prec, 0);
        }
        let log_x = -Float::with_val(prec, e_minus.ln_1p_ref());
        // (1-x)(1+x) + (1-a)x²
        let x_sq = Float::with_val(prec, x.square_ref());
        let radicand = Float::with_val(prec, &one_minus_x * Float::with_val(prec, &x + 1u32))
            + Float::with_val(prec, &self.one_minus_a * &x_sq);
        let mut f = Float::with_val(prec, &self.w_minus_one * &log_x).exp();
        if self.p > 0 {
            f *= Float::with_val(prec, (&log_x).pow(self.p));
        }
        f /= radicand.sqrt();
        // dx/du = 2x(1-x), du/dt = (π/2) cosh t
        let jac = Float::with_val(prec, &x * &one_minus_x)
            * 2u32
            * Float::with_val(prec, t.cosh_ref())
            * &self.half_pi;
        f * jac
    }
}

/// `((-1)^p/p!) ∫₀¹ x^(w-1) log^p(x) / √(1 - a x²) dx` for `w > 0`, `a ≤ 1`.
///
/// The step is halved until two levels agree to `10^-(digits+3)` relative.
pub fn quadrature_integral(w: &Rational, p: u32, a: &Rational, digits: u32) -> Result<Decimal> {
    if *w <= 0 {
        return Err(Error::Domain(format!(
            "the integrand x^(w-1) is not integrable at 0 for w = {w}"
        )));
    }
    if *a > 1 {
        return Err(Error::Domain(format!(
            "a = {a} > 1 puts a branch point inside (0, 1)"
        )));
    }
    if digits == 0 {
        return Err(Error::Domain("digits must be positive".into()));
    }
    let prec = bits_for_digits(digits) + 64;
    let half_pi = Float::with_val(prec, Constant::Pi) / 2u32;
    let f = Integrand {
        prec,
        w_minus_one: Float::with_val(prec, w) - 1u32,
        p,
        one_minus_a: Float::with_val(prec, Rational::from(1 - a.clone())),
        half_pi: half_pi.clone(),
    };
    // the integrand decays like e^(-r|u|) at both ends, r = min(2w, 1) at
    // x → 0 and 1 at x → 1 when a = 1 (faster otherwise)
    let rate = (2.0 * w.to_f64()).min(1.0);
    let target = f64::from(digits + 6) * std::f64::consts::LN_10;
    let mut u_max = target / rate;
    // log^p x ~ (2u)^p and the gamma-like prefactor
    u_max += (f64::from(p) * (2.0 * u_max).ln() + 10.0) / rate;
    let t_max = (2.0 * u_max / std::f64::consts::PI).asinh();

    let one = Float::with_val(prec, 1);
    let tol = Float::with_val(prec, Float::u_pow_u(10, digits + 3)).recip();
    // level 0: h = 1/2
    let h0 = 0.5_f64;
    let mut h = Float::with_val(prec, h0);
    let n0 = (t_max / h0).ceil() as i64;
    let mut sum = f.eval(&Float::with_val(prec, 0));
    for j in 1..=n0 {
        let t = Float::with_val(prec, &h * j);
        sum += f.eval(&t);
        sum += f.eval(&Float::with_val(prec, -&t));
    }
    let mut estimate = Float::with_val(prec, &sum * &h);
    for level in 1..=MAX_LEVEL {
        h >>= 1u32;
        let n = (t_max / (h0 / f64::from(1u32 << level))).ceil() as i64;
        let mut j = 1;
        while j <= n {
            let t = Float::with_val(prec, &h * j);
            sum += f.eval(&t);
            sum += f.eval(&Float::with_val(prec, -&t));
            j += 2;
        }
        let next = Float::with_val(prec, &sum * &h);
        let diff = Float::with_val(prec, &next - &estimate).abs();
        let scale = Float::with_val(prec, next.abs_ref()).max(&one);
        estimate = next;
        if level >= 3 && diff <= Float::with_val(prec, &tol * &scale) {
            let mut c = Rational::from((1, Integer::from(Integer::factorial(p))));
            if p % 2 == 1 {
                c = -c;
            }
            return Ok(Decimal::new(estimate * Float::with_val(prec, &c), digits));
        }
    }
    Err(Error::Convergence(format!(
        "quadrature did not settle within {MAX_LEVEL} halvings"
    )))
}

/// The integral representation of a base, power or genfunc series.
pub fn quadrature_oracle(spec: &SeriesSpec, digits: u32) -> Result<Decimal> {
    spec.validate()?;
    let one = Rational::from(1);
    match spec {
        SeriesSpec::Base { z } => quadrature_integral(&Rational::from(z + 1u32), 0, &one, digits),
        SeriesSpec::Power { z, p } => {
            quadrature_integral(&Rational::from(z + 1u32), *p, &one, digits)
        }
        SeriesSpec::Genfunc { x, p } => quadrature_integral(&one, *p, x, digits),
        _ => Err(Error::Capability(format!(
            "no integral representation for {spec}"
        ))),
    }
}
