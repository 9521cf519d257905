//! Exact arithmetic in the constant field spanned by monomials in
//! `√π`, `√2`, `log 2`, Euler's `γ`, the odd zeta values and `Γ(1/4)^±1`,
//! with rational coefficients.
//!
//! A value is an [`ExactConstant`]: a finite map from [`Monomial`] to a
//! nonzero [`Rational`]. Every constructor and operation returns the value
//! in canonical form, so structural equality is value equality under the
//! assumption that the generators are linearly independent over ℚ.

mod bernoulli;
mod decimal;
mod display;
mod serial;

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::{Integer, Rational as BigRational};

use crate::error::{Error, Result};

pub use bernoulli::{bernoulli, zeta_exact};
pub use decimal::{bits_for_digits, format_significant, Decimal, MAX_DIGITS};
pub use serial::{parse_rational, TermRepr};

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` as a canonical rational.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

/// A product of generator powers, without coefficient.
///
/// The field order fixes the canonical ordering of terms in an
/// [`ExactConstant`] and therefore its rendering.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pi_half: i32,
    sqrt2: u8,
    log2: u32,
    euler_gamma: u32,
    zeta_odd: BTreeMap<u32, u32>,
    gamma_quarter: i32,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    /// Validating constructor.
    ///
    /// `zeta_odd` maps odd `k ≥ 3` to the exponent of `ζ(k)`; zero exponents
    /// are dropped.
    pub fn new(
        pi_half: i32,
        sqrt2: u8,
        log2: u32,
        euler_gamma: u32,
        zeta_odd: BTreeMap<u32, u32>,
        gamma_quarter: i32,
    ) -> Result<Self> {
        if sqrt2 > 1 {
            return Err(Error::Domain(format!(
                "sqrt2 exponent must be 0 or 1, got {sqrt2}"
            )));
        }
        let mut zetas = BTreeMap::new();
        for (k, e) in zeta_odd {
            if k < 3 || k % 2 == 0 {
                return Err(Error::Domain(format!(
                    "zeta generator index must be odd and at least 3, got {k}"
                )));
            }
            if e > 0 {
                zetas.insert(k, e);
            }
        }
        Ok(Self {
            pi_half,
            sqrt2,
            log2,
            euler_gamma,
            zeta_odd: zetas,
            gamma_quarter,
        })
    }

    /// Exponent of `π` in units of one half.
    pub fn pi_half_exp(&self) -> i32 {
        self.pi_half
    }

    pub fn sqrt2_exp(&self) -> u8 {
        self.sqrt2
    }

    pub fn log2_exp(&self) -> u32 {
        self.log2
    }

    /// Exponent of Euler's constant.
    pub fn gamma_exp(&self) -> u32 {
        self.euler_gamma
    }

    pub fn zeta_odd_exps(&self) -> &BTreeMap<u32, u32> {
        &self.zeta_odd
    }

    /// Exponent of `Γ(1/4)`.
    pub fn gamma_quarter_exp(&self) -> i32 {
        self.gamma_quarter
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Total exponent of the zeta generators.
    pub fn zeta_degree(&self) -> u32 {
        self.zeta_odd.values().sum()
    }

    /// Product of two monomials, returned with the rational factor produced
    /// by folding `√2·√2 = 2`.
    pub fn mul(&self, other: &Self) -> (Self, u32) {
        let mut zeta_odd = self.zeta_odd.clone();
        for (&k, &e) in &other.zeta_odd {
            *zeta_odd.entry(k).or_insert(0) += e;
        }
        let s = self.sqrt2 + other.sqrt2;
        let m = Self {
            pi_half: self.pi_half + other.pi_half,
            sqrt2: s % 2,
            log2: self.log2 + other.log2,
            euler_gamma: self.euler_gamma + other.euler_gamma,
            zeta_odd,
            gamma_quarter: self.gamma_quarter + other.gamma_quarter,
        };
        (m, if s == 2 { 2 } else { 1 })
    }

    /// Inverse, defined only for monomials built from `√π`, `√2` and `Γ(1/4)`.
    /// The second component is the rational factor from `1/√2 = √2/2`.
    fn inverse(&self) -> Option<(Self, Rational)> {
        if self.log2 > 0 || self.euler_gamma > 0 || !self.zeta_odd.is_empty() {
            return None;
        }
        let factor = if self.sqrt2 == 1 {
            ratio(1, 2)
        } else {
            Rational::from(1)
        };
        Some((
            Self {
                pi_half: -self.pi_half,
                sqrt2: self.sqrt2,
                gamma_quarter: -self.gamma_quarter,
                ..Self::default()
            },
            factor,
        ))
    }
}

/// A finite ℚ-linear combination of [`Monomial`]s in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactConstant {
    terms: BTreeMap<Monomial, Rational>,
}

impl ExactConstant {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(1)
    }

    /// A rational constant.
    pub fn rational<Q: Into<Rational>>(q: Q) -> Self {
        Self::term(q.into(), Monomial::one())
    }

    /// `q · m`, or zero when `q` is zero.
    pub fn term(q: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if q != 0 {
            terms.insert(m, q);
        }
        Self { terms }
    }

    /// Builds a constant from possibly repeated or zero terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (m, q) in iter {
            c.add_term(m, q);
        }
        c
    }

    fn generator(m: Monomial) -> Self {
        Self::term(Rational::from(1), m)
    }

    pub fn pi() -> Self {
        Self::pi_half_pow(2)
    }

    pub fn sqrt_pi() -> Self {
        Self::pi_half_pow(1)
    }

    /// `π^(e/2)`.
    pub fn pi_half_pow(e: i32) -> Self {
        Self::generator(Monomial {
            pi_half: e,
            ..Monomial::default()
        })
    }

    pub fn sqrt2() -> Self {
        Self::generator(Monomial {
            sqrt2: 1,
            ..Monomial::default()
        })
    }

    pub fn log2() -> Self {
        Self::generator(Monomial {
            log2: 1,
            ..Monomial::default()
        })
    }

    /// Euler's constant `γ`.
    pub fn euler_gamma() -> Self {
        Self::generator(Monomial {
            euler_gamma: 1,
            ..Monomial::default()
        })
    }

    /// The generator `ζ(k)` for odd `k ≥ 3`. Even arguments are reduced by
    /// [`zeta_exact`].
    pub fn zeta_odd(k: u32) -> Result<Self> {
        let m = Monomial::new(0, 0, 0, 0, BTreeMap::from([(k, 1)]), 0)?;
        Ok(Self::generator(m))
    }

    /// `Γ(1/4)^e`.
    pub fn gamma_quarter_pow(e: i32) -> Self {
        Self::generator(Monomial {
            gamma_quarter: e,
            ..Monomial::default()
        })
    }

    fn add_term(&mut self, m: Monomial, q: Rational) {
        if q == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value as a rational, when no generator occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::new()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// True iff no monomial carries a positive power of Euler's constant.
    pub fn is_gamma_free(&self) -> bool {
        self.terms.keys().all(|m| m.euler_gamma == 0)
    }

    /// Every coefficient multiplied by `q`.
    pub fn scale(&self, q: &Rational) -> Self {
        if *q == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::from(c * q)))
                .collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from(n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse of a single-term constant whose monomial only
    /// involves `√π`, `√2` and `Γ(1/4)`.
    pub fn try_inverse(&self) -> Result<Self> {
        let not_invertible =
            || Error::Capability(format!("cannot invert {self} within the constant field"));
        if self.terms.len() != 1 {
            return Err(not_invertible());
        }
        let (m, q) = self.terms.iter().next().expect("one term");
        let (inv, factor) = m.inverse().ok_or_else(not_invertible)?;
        Ok(Self::term(factor / q.clone(), inv))
    }

    /// `self / divisor`, with the restrictions of [`Self::try_inverse`].
    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        Ok(self * &divisor.try_inverse()?)
    }

    /// Keeps the terms whose monomial satisfies `pred`.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, pred: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }
}

impl From<i64> for ExactConstant {
    fn from(n: i64) -> Self {
        Self::rational(n)
    }
}

impl From<Rational> for ExactConstant {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<Integer> for ExactConstant {
    fn from(n: Integer) -> Self {
        Self::rational(n)
    }
}

impl AddAssign<&ExactConstant> for ExactConstant {
    fn add_assign(&mut self, rhs: &ExactConstant) {
        for (m, q) in &rhs.terms {
            self.add_term(m.clone(), q.clone());
        }
    }
}

impl SubAssign<&ExactConstant> for ExactConstant {
    fn sub_assign(&mut self, rhs: &ExactConstant) {
        for (m, q) in &rhs.terms {
            self.add_term(m.clone(), Rational::from(-q));
        }
    }
}

impl Add<&ExactConstant> for &ExactConstant {
    type Output = ExactConstant;
    fn add(self, rhs: &ExactConstant) -> ExactConstant {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ExactConstant> for &ExactConstant {
    type Output = ExactConstant;
    fn sub(self, rhs: &ExactConstant) -> ExactConstant {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&ExactConstant> for &ExactConstant {
    type Output = ExactConstant;
    fn mul(self, rhs: &ExactConstant) -> ExactConstant {
        let mut out = ExactConstant::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                let (m, fold) = ma.mul(mb);
                let q = Rational::from(qa * qb) * fold;
                out.add_term(m, q);
            }
        }
        out
    }
}

impl Neg for &ExactConstant {
    type Output = ExactConstant;
    fn neg(self) -> ExactConstant {
        ExactConstant {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), Rational::from(-q)))
                .collect(),
        }
    }
}

impl MulAssign<&ExactConstant> for ExactConstant {
    fn mul_assign(&mut self, rhs: &ExactConstant) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<ExactConstant> for ExactConstant {
            type Output = ExactConstant;
            fn $f(self, rhs: ExactConstant) -> ExactConstant {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&ExactConstant> for ExactConstant {
            type Output = ExactConstant;
            fn $f(self, rhs: &ExactConstant) -> ExactConstant {
                (&self).$f(rhs)
            }
        }
        impl $tr<ExactConstant> for &ExactConstant {
            type Output = ExactConstant;
            fn $f(self, rhs: ExactConstant) -> ExactConstant {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ExactConstant {
    type Output = ExactConstant;
    fn neg(self) -> ExactConstant {
        -&self
    }
}

impl std::iter::Sum for ExactConstant {
    fn sum<I: Iterator<Item = ExactConstant>>(iter: I) -> Self {
        let mut acc = ExactConstant::zero();
        for c in iter {
            acc += &c;
        }
        acc
    }
}
