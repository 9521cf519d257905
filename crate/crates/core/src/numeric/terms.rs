use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::exact::{bits_for_digits, Decimal, Rational};
use crate::identities::SeriesSpec;

/// A real-valued summand `c_k · w_k` with `c_k = C(2k,k)/4^k`.
///
/// The complex family is split into its real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Kernel {
    Spec(SeriesSpec),
    /// `c_k (2k+1) / ((2k+1)² + y²)`
    ModulusRe(Rational),
    /// `-y c_k / ((2k+1)² + y²)`
    ModulusIm(Rational),
}

fn pole(spec: &SeriesSpec, k: u64) -> Error {
    Error::Pole(format!("{spec}: the term k = {k} has a zero denominator"))
}

fn pow_inv(base: Rational, e: u32) -> Rational {
    let mut d = Rational::from(1);
    for _ in 0..e {
        d *= &base;
    }
    d.recip()
}

/// `(2k-1)(2k-3)⋯(2k-2ν+1)`.
fn odd_product(k: u64, nu: u32) -> Integer {
    let mut p = Integer::from(1);
    for j in 1..=i64::from(nu) {
        p *= Integer::from(2 * k as i64 - 2 * j + 1);
    }
    p
}

impl Kernel {
    /// The weight `w_k`, or `None` for an omitted index.
    pub(crate) fn weight(&self, k: u64) -> Result<Option<Rational>> {
        let kq = Rational::from(k);
        let two_k = Rational::from(2 * k);
        let w = match self {
            Kernel::Spec(spec) => {
                let nonzero = |d: Rational| -> Result<Rational> {
                    if d == 0 {
                        Err(pole(spec, k))
                    } else {
                        Ok(d)
                    }
                };
                match spec {
                    SeriesSpec::Base { z } => nonzero(Rational::from(&two_k + 1u32) + z)?.recip(),
                    SeriesSpec::Power { z, p } => {
                        pow_inv(nonzero(Rational::from(&two_k + 1u32) + z)?, p + 1)
                    }
                    SeriesSpec::NegEven { m, p } => {
                        let d = Rational::from(2 * k as i64 + 1 - 2 * i64::from(*m));
                        pow_inv(nonzero(d)?, p + 1)
                    }
                    SeriesSpec::Excluded { m } => {
                        if k == u64::from(*m) {
                            return Ok(None);
                        }
                        Rational::from(2 * k as i64 - 2 * i64::from(*m)).recip()
                    }
                    SeriesSpec::Weighted { z, nu } => {
                        let d = nonzero(kq + z)? * odd_product(k, *nu);
                        d.recip()
                    }
                    SeriesSpec::WeightedSq { z, nu } => {
                        let l = nonzero(kq + z)?;
                        (Rational::from(&l * &l) * odd_product(k, *nu)).recip()
                    }
                    SeriesSpec::OddWeight { z } => {
                        let l = nonzero(kq + z)?;
                        Rational::from(&two_k + 1u32) / Rational::from(&l * &l)
                    }
                    SeriesSpec::Genfunc { x, p } => {
                        let mut xk = Rational::from(1);
                        for _ in 0..k {
                            xk *= x;
                        }
                        xk * pow_inv(Rational::from(&two_k + 1u32), p + 1)
                    }
                    SeriesSpec::ModulusSq { .. } => {
                        return Err(Error::Capability(format!(
                            "{spec} is complex-valued; use complex_modulus_sum"
                        )))
                    }
                }
            }
            Kernel::ModulusRe(y) | Kernel::ModulusIm(y) => {
                let a = Rational::from(&two_k + 1u32);
                let d = Rational::from(&a * &a) + Rational::from(y * y);
                match self {
                    Kernel::ModulusRe(_) => a / d,
                    _ => -Rational::from(y / &d),
                }
            }
        };
        Ok(Some(w))
    }

    /// First index from which every term has one sign.
    pub(crate) fn sign_stable_from(&self) -> u64 {
        let ceil_pos = |r: Rational| -> u64 {
            // least k ≥ 0 with k > r
            if r < 0 {
                0
            } else {
                let (_, fl) = r.fract_floor(Integer::new());
                fl.to_u64().unwrap_or(u64::MAX - 1) + 1
            }
        };
        match self {
            Kernel::Spec(spec) => match spec {
                // 2k+1+z > 0  ⇔  k > -(1+z)/2
                SeriesSpec::Base { z } | SeriesSpec::Power { z, .. } => {
                    ceil_pos(-Rational::from(z + 1u32) / 2u32)
                }
                SeriesSpec::NegEven { m, .. } => u64::from(*m),
                SeriesSpec::Excluded { m } => u64::from(*m) + 1,
                SeriesSpec::Weighted { z, nu } | SeriesSpec::WeightedSq { z, nu } => {
                    ceil_pos(-z.clone()).max(u64::from(*nu))
                }
                SeriesSpec::OddWeight { z } => ceil_pos(-z.clone()),
                _ => 0,
            },
            _ => 0,
        }
    }
}

/// The exact coefficients `C(2k,k)/4^k`, maintained by
/// `c_{k+1} = c_k (2k+1)/(2k+2)`.
#[derive(Clone, Debug)]
pub struct CentralRatio {
    k: u64,
    value: Rational,
}

impl Default for CentralRatio {
    fn default() -> Self {
        Self {
            k: 0,
            value: Rational::from(1),
        }
    }
}

impl CentralRatio {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn index(&self) -> u64 {
        self.k
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn advance(&mut self) {
        self.value *= Rational::from((2 * self.k + 1, 2 * self.k + 2));
        self.k += 1;
    }
}

impl Iterator for CentralRatio {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let v = self.value.clone();
        self.advance();
        Some(v)
    }
}

/// Exact terms of a series, in index order. Omitted indices yield zero.
#[derive(Clone, Debug)]
pub struct TermStream {
    kernel: Kernel,
    ratio: CentralRatio,
}

impl TermStream {
    pub fn new(spec: &SeriesSpec) -> Result<Self> {
        spec.validate()?;
        if matches!(spec, SeriesSpec::ModulusSq { .. }) {
            return Err(Error::Capability(format!(
                "{spec} is complex-valued; use complex_modulus_sum"
            )));
        }
        Ok(Self::from_kernel(Kernel::Spec(spec.clone())))
    }

    pub(crate) fn from_kernel(kernel: Kernel) -> Self {
        Self {
            kernel,
            ratio: CentralRatio::new(),
        }
    }

    /// Index of the next term.
    pub fn index(&self) -> u64 {
        self.ratio.index()
    }

    /// The current `C(2k,k)/4^k`.
    pub fn ratio_state(&self) -> &Rational {
        self.ratio.value()
    }

    pub fn next_term(&mut self) -> Result<Rational> {
        let k = self.ratio.index();
        let w = self.kernel.weight(k)?;
        let t = match w {
            Some(w) => w * self.ratio.value(),
            None => Rational::new(),
        };
        self.ratio.advance();
        Ok(t)
    }

    /// The first `n` terms.
    pub fn take_terms(&mut self, n: usize) -> Result<Vec<Rational>> {
        (0..n).map(|_| self.next_term()).collect()
    }
}

/// The exact `k`-th term, rendered to `digits` significant digits.
pub fn term(spec: &SeriesSpec, k: u64, digits: u32) -> Result<Decimal> {
    Ok(Decimal::new(
        Float::with_val(bits_for_digits(digits) + 8, &term_exact(spec, k)?),
        digits,
    ))
}

/// The exact `k`-th term.
pub fn term_exact(spec: &SeriesSpec, k: u64) -> Result<Rational> {
    spec.validate()?;
    let kernel = Kernel::Spec(spec.clone());
    let w = kernel
        .weight(k)?
        .ok_or_else(|| Error::Pole(format!("{spec}: the term k = {k} is excluded")))?;
    let c = Rational::from((
        Integer::from(Integer::binomial_u(2 * k as u32, k as u32)),
        Integer::from(1) << (2 * k as u32),
    ));
    Ok(w * c)
}

/// `Σ_{k=0}^{N} term(k)`, omitted indices skipped, accumulated in floating
/// point with enough guard bits that the rounding error stays below
/// `10^-digits`.
pub fn partial_sum(spec: &SeriesSpec, n: u64, digits: u32) -> Result<Decimal> {
    spec.validate()?;
    let kernel = match spec {
        SeriesSpec::ModulusSq { .. } => {
            return Err(Error::Capability(format!(
                "{spec} is complex-valued; use complex_modulus_sum"
            )))
        }
        _ => Kernel::Spec(spec.clone()),
    };
    let guard = 2 * (64 - (n + 1).leading_zeros()) + 16;
    let prec = bits_for_digits(digits) + guard;
    let mut c = Float::with_val(prec, 1);
    let mut sum = Float::with_val(prec, 0);
    for k in 0..=n {
        if let Some(w) = kernel.weight(k)? {
            sum += Float::with_val(prec, &w) * &c;
        }
        c *= Float::with_val(prec, 2 * k + 1);
        c /= Float::with_val(prec, 2 * k + 2);
    }
    Ok(Decimal::new(sum, digits))
}
