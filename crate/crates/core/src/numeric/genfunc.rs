//! Generating-function sums, the binomial-transform identity, the complex
//! modulus series and a finite-difference check of the beta form.

use rug::{Float, Integer};

use super::levin::{accelerate_kernel, max_order_for};
use super::terms::{CentralRatio, Kernel};
use crate::error::{Error, Result};
use crate::exact::{bits_for_digits, Decimal, Rational};

/// `Σ C(2k,k) x^k / (4^k (2k+1)^(p+1))` for `|x| < 1` by direct summation.
///
/// The ratio of successive terms is at most `|x|`, so the tail after term
/// `t_N` is below `|t_N| |x|/(1-|x|)`; summation stops once that bound drops
/// under `10^-(digits+2)` relative to the running sum.
pub fn genfunc_sum(x: &Rational, p: u32, digits: u32) -> Result<Decimal> {
    let ax = Rational::from(x.abs_ref());
    if ax >= 1 {
        return Err(Error::Domain(format!(
            "genfunc needs |x| < 1, got {x}; use accelerate for x = 1"
        )));
    }
    if digits == 0 {
        return Err(Error::Domain("digits must be positive".into()));
    }
    let prec = bits_for_digits(digits) + 64;
    let xf = Float::with_val(prec, x);
    let geo = Float::with_val(prec, &ax) / Float::with_val(prec, Rational::from(1 - ax.clone()));
    let tol = Float::with_val(prec, Float::u_pow_u(10, digits + 2)).recip();
    let mut c = Float::with_val(prec, 1);
    let mut sum = Float::with_val(prec, 0);
    for k in 0u64.. {
        let mut d = Float::with_val(prec, 1);
        let odd = Float::with_val(prec, 2 * k + 1);
        for _ in 0..=p {
            d *= &odd;
        }
        let t = Float::with_val(prec, &c / &d);
        sum += &t;
        let bound = Float::with_val(prec, t.abs_ref()) * &geo;
        if bound <= Float::with_val(prec, sum.abs_ref()) * &tol {
            break;
        }
        c *= &xf;
        c *= Float::with_val(prec, 2 * k + 1);
        c /= Float::with_val(prec, 2 * k + 2);
    }
    Ok(Decimal::new(sum, digits))
}

/// A bounded sequence `a_k` for the binomial-transform identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// `a_k = (2k+1)^(-p)`
    OddPower { p: u32 },
    /// `a_k = (2k+w)^(-p)`, `w ≥ 1`
    ShiftedPower { w: u32, p: u32 },
    /// `a_k = 1`
    Ones,
}

impl SequenceKind {
    fn term(&self, k: u64) -> Rational {
        let inv_pow = |base: u64, p: u32| {
            Rational::from((1, Integer::from(Integer::u_pow_u(base as u32, p))))
        };
        match self {
            SequenceKind::OddPower { p } => inv_pow(2 * k + 1, *p),
            SequenceKind::ShiftedPower { w, p } => inv_pow(2 * k + u64::from(*w), *p),
            SequenceKind::Ones => Rational::from(1),
        }
    }
}

/// Truncations at `n` of both sides of
///
/// ```text
/// Σ c_n a_n z^n = (z+1)^(-1/2) Σ c_n (z/(z+1))^n Σ_{k≤n} C(n,k) a_k.
/// ```
///
/// Both sums and the binomial transform are exact rationals; only the final
/// factor `(z+1)^(-1/2)` is rounded. The right side converges for
/// `-1/3 < z < 1`, where `2|z/(z+1)| < 1`.
pub fn boyadzhiev_check(
    kind: &SequenceKind,
    z: &Rational,
    n: u64,
    digits: u32,
) -> Result<(Decimal, Decimal)> {
    if *z <= Rational::from((-1, 3)) || *z >= 1 {
        return Err(Error::Domain(format!(
            "z = {z}: the transformed side diverges outside -1/3 < z < 1"
        )));
    }
    if let SequenceKind::ShiftedPower { w: 0, .. } = kind {
        return Err(Error::Domain("the shift w must be at least 1".into()));
    }
    let a: Vec<Rational> = (0..=n).map(|k| kind.term(k)).collect();
    let zt = Rational::from(z / Rational::from(z + 1u32));
    let mut lhs = Rational::new();
    let mut rhs = Rational::new();
    let mut zn = Rational::from(1);
    let mut ztn = Rational::from(1);
    for (i, c) in CentralRatio::new().take(n as usize + 1).enumerate() {
        lhs += Rational::from(&c * &a[i]) * &zn;
        let transform: Rational = (0..=i)
            .map(|k| Rational::from(&a[k] * Integer::from(Integer::binomial_u(i as u32, k as u32))))
            .sum();
        rhs += c * transform * &ztn;
        zn *= z;
        ztn *= &zt;
    }
    let prec = bits_for_digits(digits) + 32;
    let scale = Float::with_val(prec, Rational::from(z + 1u32))
        .sqrt()
        .recip();
    Ok((
        Decimal::new(Float::with_val(prec, &lhs), digits),
        Decimal::new(Float::with_val(prec, &rhs) * scale, digits),
    ))
}

/// `|Σ C(2k,k) / (4^k (2k+1+iy))|²` from the separately accelerated real
/// and imaginary parts.
pub fn complex_modulus_sum(y: &Rational, digits: u32) -> Result<Decimal> {
    if *y == 0 {
        return Err(Error::Domain("y = 0 is excluded; the limit is π²/4".into()));
    }
    // a few extra digits absorb the squaring
    let work = digits + 4;
    let cap = max_order_for(work);
    let re = accelerate_kernel(Kernel::ModulusRe(y.clone()), work, cap)?;
    let im = accelerate_kernel(Kernel::ModulusIm(y.clone()), work, cap)?;
    let prec = bits_for_digits(work) + 32;
    let r = Float::with_val(prec, re.value.value().square_ref());
    let i = Float::with_val(prec, im.value.value().square_ref());
    Ok(Decimal::new(r + i, digits))
}

/// `((-1)^p/p!) dᵖ/dwᵖ [B(1/2, w/2)/2]` at `w = z+1` by central differences.
///
/// The beta function is evaluated to 50 digits; the step `h = 10^-(50/3)`
/// balances truncation `O(h²)` against rounding `O(10^-50/hᵖ)`.
pub fn beta_derivative_fd(z: u32, p: u32) -> Result<Decimal> {
    if !(1..=2).contains(&p) {
        return Err(Error::Capability(format!(
            "finite differences are implemented for p = 1, 2, got {p}"
        )));
    }
    const DIGITS: u32 = 50;
    let prec = bits_for_digits(DIGITS);
    let half_beta = |w: &Float| -> Float {
        let a = Float::with_val(prec, 0.5).gamma();
        let b = Float::with_val(prec, w / 2u32).gamma();
        let c = Float::with_val(prec, Float::with_val(prec, w + 1u32) / 2u32).gamma();
        a * b / c / 2u32
    };
    let h = Float::with_val(prec, Float::u_pow_u(10, DIGITS / 3)).recip();
    let w = Float::with_val(prec, z + 1);
    let plus = half_beta(&Float::with_val(prec, &w + &h));
    let minus = half_beta(&Float::with_val(prec, &w - &h));
    let value = if p == 1 {
        // (-1) · f'
        -(plus - minus) / Float::with_val(prec, &h * 2u32)
    } else {
        // f''/2
        let mid = half_beta(&w);
        (plus + minus - mid * 2u32) / Float::with_val(prec, h.square_ref()) / 2u32
    };
    Ok(Decimal::new(value, DIGITS / 3))
}
