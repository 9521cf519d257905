use rug::float::Constant;
use rug::{Float, Integer};

use crate::bell::bell_value;
use crate::error::{Error, Result};
use crate::exact::{bits_for_digits, Decimal, ExactConstant, Rational, MAX_DIGITS};
use crate::special::{digamma_exact, g_derivative, gamma_exact, harmonic, GridPoint};

pub(crate) fn nonneg_integer(z: &Rational, family: &str) -> Result<u32> {
    if *z.denom() != 1 || *z < 0 {
        return Err(Error::Capability(format!(
            "{family} closed forms are available for integers z ≥ 0, got z = {z}"
        )));
    }
    z.numer()
        .to_u32()
        .ok_or_else(|| Error::Capability(format!("z = {z} is too large")))
}

fn half_grid(z: &Rational) -> Result<Rational> {
    if *Rational::from(z * 2u32).denom() != 1 {
        return Err(Error::Capability(format!(
            "z = {z}: closed forms need z ∈ ℤ/2 (quarter-odd z leads to Γ at eighth points)"
        )));
    }
    Ok(z.clone())
}

fn grid(x: Rational) -> Result<GridPoint> {
    GridPoint::from_rational(&x)
}

fn central_binomial(m: u32) -> Integer {
    Integer::from(Integer::binomial_u(2 * m, m))
}

/// `Σ C(2k,k)/(4^k (2k+1+z)) = (√π/2) Γ((z+1)/2) / Γ((z+2)/2)` for `z ∈ ℤ/2`,
/// not a negative odd integer. Vanishes at `z = -2, -4, …`.
pub fn closed_form_base(z: &Rational) -> Result<ExactConstant> {
    let z = half_grid(z)?;
    let a = grid(Rational::from(&z + 1u32) / 2u32)?;
    let b = grid(Rational::from(&z + 2u32) / 2u32)?;
    if a.is_pole() {
        return Err(Error::Pole(format!(
            "z = {z} is a pole; omit the vanishing term and use the excluded family with m = {}",
            -a.floor()
        )));
    }
    if b.is_pole() {
        return Ok(ExactConstant::zero());
    }
    let ratio = gamma_exact(a)?.checked_div(&gamma_exact(b)?)?;
    Ok((ExactConstant::sqrt_pi() * ratio).scale(&Rational::from((1, 2))))
}

/// `Σ C(2k,k)/(4^k (2k+1+z)^(p+1)) = ((-1)^p/p!) · base(z) · B_p(g'(z), …, g⁽ᵖ⁾(z))`
/// for integers `z ≥ 0`.
pub fn closed_form_power(z: u32, p: u32) -> Result<ExactConstant> {
    let base = closed_form_base(&Rational::from(z))?;
    if p == 0 {
        return Ok(base);
    }
    let gs = (1..=p)
        .map(|k| g_derivative(k, i64::from(z)))
        .collect::<Result<Vec<_>>>()?;
    let mut c = Rational::from((1, Integer::from(Integer::factorial(p))));
    if p % 2 == 1 {
        c = -c;
    }
    Ok((base * bell_value(&gs)).scale(&c))
}

/// `Σ C(2k,k)/(4^k (2k+1-2m)^(p+1))` for `m ≥ 1` and `p ≤ 2`.
pub fn closed_form_neg_even_power(m: u32, p: u32) -> Result<ExactConstant> {
    if m == 0 {
        return Err(Error::Domain("neg_even needs m ≥ 1".into()));
    }
    if p == 0 {
        return Ok(ExactConstant::zero());
    }
    if p > 2 {
        return Err(Error::Capability(format!(
            "no closed form is available for exponent {} at negative even z",
            p + 1
        )));
    }
    // 4^(m-1) π / (m C(2m,m))
    let lead = ExactConstant::pi().scale(&Rational::from((
        Integer::from(1) << (2 * (m - 1)),
        central_binomial(m) * m,
    )));
    if p == 1 {
        return Ok(lead);
    }
    let inner = harmonic(2 * m) - harmonic(m) + Rational::from((1, 2 * m));
    Ok(-(lead * (ExactConstant::rational(inner) - ExactConstant::log2())))
}

/// `Σ_{k≠m} C(2k,k)/(4^k (2k-2m)) = C(2m,m) (log 2 - H_2m + H_m) / 4^m`.
pub fn closed_form_excluded(m: u32) -> ExactConstant {
    let c = Rational::from((central_binomial(m), Integer::from(1) << (2 * m)));
    let inner = ExactConstant::log2() + ExactConstant::rational(harmonic(m) - harmonic(2 * m));
    inner.scale(&c)
}

/// `(-1)^ν 2^ν ν! / (2ν)! · Γ(ν+1/2) Γ(z) / Γ(ν+1/2+z)`, or zero when the
/// last gamma has a pole.
fn weighted_factor(z: &Rational, nu: u32) -> Result<(ExactConstant, GridPoint, GridPoint)> {
    let zp = grid(z.clone())?;
    if zp.is_pole() {
        return Err(Error::Pole(format!(
            "z = {z} makes the term k = {} infinite",
            -zp.floor()
        )));
    }
    let half_nu = GridPoint::halves(2 * i64::from(nu) + 1);
    let shifted = GridPoint::from_quarters(half_nu.four_x() + zp.four_x());
    let mut c = Rational::from((
        Integer::from(Integer::factorial(nu)) << nu,
        Integer::from(Integer::factorial(2 * nu)),
    ));
    if nu % 2 == 1 {
        c = -c;
    }
    if shifted.is_pole() {
        return Ok((ExactConstant::zero(), zp, shifted));
    }
    let value = (gamma_exact(half_nu)? * gamma_exact(zp)?).checked_div(&gamma_exact(shifted)?)?;
    Ok((value.scale(&c), zp, shifted))
}

/// `Σ C(2k,k) / (4^k (k+z) (2k-1)(2k-3)⋯(2k-2ν+1))` for `z` on the quarter grid.
pub fn closed_form_weighted(z: &Rational, nu: u32) -> Result<ExactConstant> {
    Ok(weighted_factor(z, nu)?.0)
}

/// `Σ C(2k,k) / (4^k (k+z)² (2k-1)⋯(2k-2ν+1))`: the weighted factor times
/// `ψ(ν+1/2+z) - ψ(z)`.
pub fn closed_form_weighted_sq(z: &Rational, nu: u32) -> Result<ExactConstant> {
    let (factor, zp, shifted) = weighted_factor(z, nu)?;
    if shifted.is_pole() {
        return Err(Error::Capability(format!(
            "z = {z}, ν = {nu} needs a residue computation that is not implemented"
        )));
    }
    let dpsi = digamma_exact(shifted)? - digamma_exact(zp)?;
    Ok(factor * dpsi)
}

/// `Σ C(2k,k) (2k+1) / (4^k (k+z)²) = Γ(-1/2) Γ(z)/Γ(z-1/2) · (ψ(z-1/2) - ψ(z))`
/// for `z > 1/2` in `ℤ/2`.
pub fn closed_form_odd_weight(z: &Rational) -> Result<ExactConstant> {
    let z = half_grid(z)?;
    if z <= Rational::from((1, 2)) {
        return Err(Error::Domain(format!("odd_weight needs z > 1/2, got {z}")));
    }
    let zp = grid(z.clone())?;
    let zm = zp.shift_quarters(-2);
    let factor =
        (gamma_exact(GridPoint::halves(-1))? * gamma_exact(zp)?).checked_div(&gamma_exact(zm)?)?;
    Ok(factor * (digamma_exact(zm)? - digamma_exact(zp)?))
}

/// `lim_{y→0} (π/2y) tanh(πy/2) = π²/4`.
pub fn modulus_sq_limit() -> ExactConstant {
    ExactConstant::pi().pow(2).scale(&Rational::from((1, 4)))
}

/// `(π/2y) tanh(πy/2)` to `digits` significant digits.
pub fn modulus_sq_rhs(y: &Rational, digits: u32) -> Result<Decimal> {
    if *y == 0 {
        return Err(Error::Domain(
            "y = 0 is excluded; the limit y → 0 is modulus_sq_limit() = π²/4".into(),
        ));
    }
    if digits == 0 || digits > MAX_DIGITS {
        return Err(Error::Domain(format!("digits must be in 1..={MAX_DIGITS}")));
    }
    // every operation below is correctly rounded; a few guard bits absorb
    // the accumulated relative error
    let prec = bits_for_digits(digits) + 32;
    let pi = Float::with_val(prec, Constant::Pi);
    let y = Float::with_val(prec, y);
    let t = Float::with_val(prec, &pi * &y) / 2u32;
    let value = pi / (y * 2u32) * t.tanh();
    Ok(Decimal::new(value, digits))
}
