//! Exact values of `Γ`, `ψ` and the polygamma functions on the quarter grid,
//! harmonic numbers, and the derivatives `g⁽ᵏ⁾` of `log(√π Γ((z+1)/2)/Γ((z+2)/2))`
//! at integer arguments.

use std::fmt;

use rug::Integer;

use crate::error::{Error, Result};
use crate::exact::{zeta_exact, ExactConstant, Rational};

/// A point of the grid `ℤ/4`, stored as `4x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    four_x: i64,
}

impl GridPoint {
    pub const fn from_quarters(four_x: i64) -> Self {
        Self { four_x }
    }

    pub const fn integer(n: i64) -> Self {
        Self { four_x: 4 * n }
    }

    /// The point `twice / 2`.
    pub const fn halves(twice: i64) -> Self {
        Self { four_x: 2 * twice }
    }

    /// Fails unless `4x` is an integer.
    pub fn from_rational(x: &Rational) -> Result<Self> {
        let q = Rational::from(x * 4u32);
        if *q.denom() != 1 {
            return Err(Error::Domain(format!("{x} is not on the quarter grid ℤ/4")));
        }
        q.numer()
            .to_i64()
            .map(Self::from_quarters)
            .ok_or_else(|| Error::Capability(format!("{x} is too large")))
    }

    pub fn four_x(self) -> i64 {
        self.four_x
    }

    pub fn to_rational(self) -> Rational {
        Rational::from((self.four_x, 4))
    }

    pub fn is_integer(self) -> bool {
        self.four_x.rem_euclid(4) == 0
    }

    pub fn is_half_integer(self) -> bool {
        self.four_x.rem_euclid(4) == 2
    }

    pub fn is_quarter(self) -> bool {
        self.four_x % 2 != 0
    }

    /// True at `0, -1, -2, …`.
    pub fn is_pole(self) -> bool {
        self.is_integer() && self.four_x <= 0
    }

    /// `x + q/4`.
    pub fn shift_quarters(self, q: i64) -> Self {
        Self::from_quarters(self.four_x + q)
    }

    /// `floor(x)`.
    pub fn floor(self) -> i64 {
        self.four_x.div_euclid(4)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// `H_n = Σ_{j=1}^n 1/j`, with `H_0 = 0`.
pub fn harmonic(n: u32) -> Rational {
    harmonic_gen(n, 1)
}

/// `H_n^(k) = Σ_{j=1}^n j^-k`, with `H_0^(k) = 0`.
pub fn harmonic_gen(n: u32, k: u32) -> Rational {
    let mut sum = Rational::new();
    for j in 1..=n {
        sum += Rational::from((1, Integer::from(Integer::u_pow_u(j, k))));
    }
    sum
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

fn pole(what: &str, x: GridPoint) -> Error {
    Error::Pole(format!("{what} has a pole at {x}"))
}

fn u32_index(n: i64, x: GridPoint) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Capability(format!("argument {x} is too large")))
}

/// `Γ(x)` for `x` on the quarter grid.
///
/// Quarter points reduce to `Γ(1/4)` or `Γ(3/4) = π√2/Γ(1/4)` by the
/// recurrence `Γ(x+1) = xΓ(x)`.
pub fn gamma_exact(x: GridPoint) -> Result<ExactConstant> {
    if x.is_pole() {
        return Err(pole("Γ", x));
    }
    let n = x.floor();
    if x.is_integer() {
        let n = u32_index(n, x)?;
        return Ok(ExactConstant::from(factorial(n - 1)));
    }
    if x.is_half_integer() {
        let sqrt_pi = ExactConstant::sqrt_pi();
        let q = if n >= 0 {
            // Γ(m+1/2) = (2m)! √π / (4^m m!)
            let m = u32_index(n, x)?;
            Rational::from((factorial(2 * m), factorial(m) << (2 * m)))
        } else {
            // Γ(1/2-m) = (-1)^m m! 4^m √π / (2m)!
            let m = u32_index(-n, x)?;
            let q = Rational::from((factorial(m) << (2 * m), factorial(2 * m)));
            if m % 2 == 1 {
                -q
            } else {
                q
            }
        };
        return Ok(sqrt_pi.scale(&q));
    }
    let base_quarters = x.four_x.rem_euclid(4);
    let base = if base_quarters == 1 {
        ExactConstant::gamma_quarter_pow(1)
    } else {
        ExactConstant::pi() * ExactConstant::sqrt2() * ExactConstant::gamma_quarter_pow(-1)
    };
    let b = Rational::from((base_quarters, 4));
    let mut factor = Rational::from(1);
    if n >= 0 {
        for i in 0..n {
            factor *= Rational::from(&b + i);
        }
    } else {
        for i in 1..=-n {
            factor /= Rational::from(&b - i);
        }
    }
    Ok(base.scale(&factor))
}

/// `ψ(x)` at positive integers and at half-integers of either sign.
pub fn digamma_exact(x: GridPoint) -> Result<ExactConstant> {
    if x.is_pole() {
        return Err(pole("ψ", x));
    }
    if x.is_quarter() {
        return Err(Error::Capability(format!(
            "ψ({x}) is not expressible in the constant field"
        )));
    }
    let gamma = ExactConstant::euler_gamma();
    if x.is_integer() {
        // ψ(m+1) = H_m - γ
        let m = u32_index(x.floor() - 1, x)?;
        return Ok(ExactConstant::rational(harmonic(m)) - gamma);
    }
    // ψ(1/2-m) = ψ(1/2+m)
    let n = x.floor();
    let m = u32_index(if n >= 0 { n } else { -n }, x)?;
    let q = harmonic(2 * m) * 2u32 - harmonic(m);
    Ok(ExactConstant::rational(q) - ExactConstant::log2().scale_int(2) - gamma)
}

/// Hurwitz `ζ(k, x)` for `k ≥ 2` at positive integers and half-integers.
pub fn hurwitz_zeta_exact(k: u32, x: GridPoint) -> Result<ExactConstant> {
    if k < 2 {
        return Err(Error::Domain(format!("ζ({k}, x) diverges")));
    }
    if x.four_x <= 0 || x.is_quarter() {
        return Err(Error::Capability(format!(
            "ζ({k}, {x}) is only supported at positive integers and half-integers"
        )));
    }
    let zeta = zeta_exact(k)?;
    if x.is_integer() {
        // ζ(k, m+1) = ζ(k) - H_m^(k)
        let m = u32_index(x.floor() - 1, x)?;
        return Ok(zeta - ExactConstant::rational(harmonic_gen(m, k)));
    }
    // ζ(k, m+1/2) = (2^k - 1) ζ(k) - 2^k H_2m^(k) + H_m^(k)
    let m = u32_index(x.floor(), x)?;
    let two_k = Integer::from(1) << k;
    let q = harmonic_gen(m, k) - harmonic_gen(2 * m, k) * &two_k;
    Ok(zeta.scale(&Rational::from(two_k - 1u32)) + ExactConstant::rational(q))
}

/// The polygamma value `ψ^(order)(x)` for `order ≥ 1` at positive integers
/// and positive half-integers.
pub fn polygamma_exact(order: u32, x: GridPoint) -> Result<ExactConstant> {
    if order == 0 {
        return digamma_exact(x);
    }
    if x.is_pole() {
        return Err(pole("ψ^(n)", x));
    }
    // ψ^(k-1)(x) = (-1)^k (k-1)! ζ(k, x)
    let k = order + 1;
    let mut c = Rational::from(factorial(order));
    if k % 2 == 1 {
        c = -c;
    }
    Ok(hurwitz_zeta_exact(k, x)?.scale(&c))
}

/// `g⁽ᵏ⁾(z) = 2^-k (ψ^(k-1)((z+1)/2) - ψ^(k-1)((z+2)/2))` at integers `z ≥ 0`,
/// in the harmonic-number form that never introduces `γ`.
pub fn g_derivative(k: u32, z: i64) -> Result<ExactConstant> {
    if k == 0 {
        return Err(Error::Domain("g⁽ᵏ⁾ needs k ≥ 1".into()));
    }
    if z < 0 {
        return Err(if z % 2 != 0 {
            Error::Pole(format!("g⁽ᵏ⁾ has a pole at z = {z}"))
        } else {
            Error::Domain(format!("g⁽ᵏ⁾({z}) involves ψ at a pole"))
        });
    }
    let even = z % 2 == 0;
    let m = u32::try_from(if even { z / 2 } else { (z + 1) / 2 })
        .map_err(|_| Error::Capability(format!("z = {z} is too large")))?;
    let (hm, h2m) = (harmonic(m), harmonic(2 * m));
    if k == 1 {
        let core = ExactConstant::rational(h2m - hm) - ExactConstant::log2();
        return Ok(if even {
            core
        } else {
            -core - ExactConstant::rational(Rational::from((1, 2 * m)))
        });
    }
    let half_k = Rational::from((1, Integer::from(1) << (k - 1)));
    let zeta = zeta_exact(k)?;
    let inner = if even {
        // (1 - 2^(1-k)) ζ(k) + 2^(1-k) H_m^(k) - H_2m^(k)
        let q = Rational::from(&half_k * harmonic_gen(m, k)) - harmonic_gen(2 * m, k);
        zeta.scale(&Rational::from(1 - &half_k)) + ExactConstant::rational(q)
    } else {
        // (2^(1-k) - 1) ζ(k) - 2^(1-k) H_m^(k) + H_2m^(k) + (2m)^-k
        let q = harmonic_gen(2 * m, k) - Rational::from(&half_k * harmonic_gen(m, k))
            + Rational::from((1, Integer::from(Integer::u_pow_u(2 * m, k))));
        zeta.scale(&Rational::from(&half_k - 1u32)) + ExactConstant::rational(q)
    };
    let mut c = Rational::from(factorial(k - 1));
    if k % 2 == 1 {
        c = -c;
    }
    Ok(inner.scale(&c))
}

/// `lim_{z→1-m} ψ(z)/Γ(z) = (-1)^m (m-1)!` for `m ≥ 1`.
pub fn lim_psi_over_gamma(m: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let f = Rational::from(factorial(m - 1));
    Ok(if m % 2 == 1 { -f } else { f })
}

/// Residue of `ψ² - ψ'` at `1-m`, namely `2(γ - H_{m-1})`.
pub fn res_psi_sq_minus_psi_prime(m: u32) -> Result<ExactConstant> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    Ok((ExactConstant::euler_gamma() - ExactConstant::rational(harmonic(m - 1))).scale_int(2))
}
