//! Oracles shared by the integration tests. None of them call into the
//! exact layer: they use MPFR special functions, direct summation and
//! hand-entered constants only.

#![allow(dead_code)]

use rug::float::Constant;
use rug::{Float, Rational};

pub const PREC: u32 = 400;

pub fn f(x: impl Into<f64>) -> Float {
    Float::with_val(PREC, x.into())
}

pub fn fq(num: i64, den: i64) -> Float {
    Float::with_val(PREC, &Rational::from((num, den)))
}

pub fn pi() -> Float {
    Float::with_val(PREC, Constant::Pi)
}

pub fn log2() -> Float {
    Float::with_val(PREC, Constant::Log2)
}

pub fn digamma(x: &Float) -> Float {
    Float::with_val(PREC, x.digamma_ref())
}

/// `ψ'(x)` as a central difference of MPFR's digamma with step `10^-60`;
/// the truncation error is `O(10^-120)`.
pub fn trigamma(x: &Float) -> Float {
    let h = Float::with_val(PREC, Float::u_pow_u(10, 60)).recip();
    let up = digamma(&Float::with_val(PREC, x + &h));
    let down = digamma(&Float::with_val(PREC, x - &h));
    (up - down) / (h * 2u32)
}

/// Symmetric Laurent probe of the residue of `ψ² - ψ'` at `1-m`:
/// the odd part of `ε (ψ² - ψ')(1-m+ε)`, accurate to `O(ε²)`.
pub fn residue_probe(m: u32) -> Float {
    let eps = Float::with_val(PREC, Float::u_pow_u(10, 20)).recip();
    let centre = f(1.0 - f64::from(m));
    let g = |e: &Float| {
        let x = Float::with_val(PREC, &centre + e);
        let p = digamma(&x);
        (Float::with_val(PREC, p.square_ref()) - trigamma(&x)) * e
    };
    (g(&eps) + g(&Float::with_val(PREC, -&eps))) / 2u32
}

/// `ψ(z)/Γ(z)` near `1-m`, averaged over `±ε`.
pub fn limit_probe(m: u32) -> Float {
    let eps = Float::with_val(PREC, Float::u_pow_u(10, 20)).recip();
    let centre = f(1.0 - f64::from(m));
    let g = |e: &Float| {
        let x = Float::with_val(PREC, &centre + e);
        digamma(&x) / Float::with_val(PREC, x.gamma_ref())
    };
    (g(&eps) + g(&Float::with_val(PREC, -&eps))) / 2u32
}

/// `B_2, B_4, …, B_20` entered by hand.
const BERNOULLI_EVEN: [(i64, i64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

/// `ζ(k, x)` for `k ≥ 2` by summing 400 terms and an Euler-Maclaurin tail.
pub fn hurwitz(k: u32, x: &Float) -> Float {
    const N: u32 = 400;
    let mut sum = f(0);
    for n in 0..N {
        let t = Float::with_val(PREC, x + n);
        sum += Float::with_val(PREC, t.pow_ref_i(k)).recip();
    }
    let a = Float::with_val(PREC, x + N);
    let kf = f(k);
    // ∫_a^∞ t^-k dt + a^-k/2
    sum += Float::with_val(PREC, a.pow_ref_i(k - 1)).recip() / (f(k) - 1u32);
    sum += Float::with_val(PREC, a.pow_ref_i(k)).recip() / 2u32;
    // - Σ B_2j/(2j)! f^(2j-1)(a), f^(r)(t) = (-1)^r k(k+1)…(k+r-1) t^(-k-r)
    let mut rising = kf.clone();
    let mut fact = f(2);
    for (j, (bn, bd)) in BERNOULLI_EVEN.iter().enumerate() {
        let r = 2 * j as u32 + 1;
        if j > 0 {
            rising *= f(k + r - 2) * f(k + r - 1);
            fact *= f(2 * j as u32 + 1) * f(2 * j as u32 + 2);
        }
        let deriv =
            Float::with_val(PREC, rising.clone()) / Float::with_val(PREC, a.pow_ref_i(k + r));
        sum += fq(*bn, *bd) / &fact * deriv;
    }
    sum
}

trait PowI {
    fn pow_ref_i(&self, e: u32) -> Float;
}

impl PowI for Float {
    fn pow_ref_i(&self, e: u32) -> Float {
        let mut r = Float::with_val(PREC, 1);
        for _ in 0..e {
            r *= self;
        }
        r
    }
}

/// Number of agreeing significant digits (absolute when `b` is zero).
pub fn agree(a: &Float, b: &Float) -> f64 {
    let d = Float::with_val(PREC, a - b).abs();
    if d.is_zero() {
        return f64::INFINITY;
    }
    let scale = if b.is_zero() {
        f(1)
    } else {
        Float::with_val(PREC, b.abs_ref())
    };
    -(d / scale).log10().to_f64()
}
