//! Complete exponential Bell polynomials `B_n(x₁, …, x_n)`, defined by
//! `exp(Σ x_k t^k/k!) = Σ B_n t^n/n!`.

use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::Integer;

use crate::error::{Error, Result};
use crate::exact::{ExactConstant, Rational};

/// Largest degree for which coefficient tables and the partition-sum oracle
/// are built.
pub const MAX_SYMBOLIC_DEGREE: usize = 16;

/// Commutative ring operations needed to evaluate a Bell polynomial.
pub trait BellRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn mul_integer(&self, n: &Integer) -> Self;
}

impl BellRing for ExactConstant {
    fn zero() -> Self {
        ExactConstant::zero()
    }
    fn one() -> Self {
        ExactConstant::one()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_integer(&self, n: &Integer) -> Self {
        self.scale(&Rational::from(n))
    }
}

impl BellRing for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Rational::from(self * other)
    }
    fn mul_integer(&self, n: &Integer) -> Self {
        Rational::from(self * n)
    }
}

/// `B_n(xs)` by the recurrence `B_{n+1} = Σ_i C(n,i) B_{n-i} x_{i+1}`, `B_0 = 1`.
pub fn bell_value<T: BellRing>(xs: &[T]) -> T {
    let mut b: Vec<T> = Vec::with_capacity(xs.len() + 1);
    b.push(T::one());
    for n in 0..xs.len() {
        let mut next = T::zero();
        for i in 0..=n {
            let c = Integer::from(Integer::binomial_u(n as u32, i as u32));
            next.add_assign_ref(&b[n - i].mul_ref(&xs[i]).mul_integer(&c));
        }
        b.push(next);
    }
    b.pop().expect("B_0 is always present")
}

/// `B_n(xs)` as the explicit sum over multi-indices; independent of the
/// recurrence.
pub fn bell_value_oracle<T: BellRing>(xs: &[T]) -> Result<T> {
    let poly = bell_symbolic(xs.len())?;
    Ok(poly.evaluate(xs))
}

/// Multi-index `(j₁, …, j_n)` standing for `x₁^j₁ ⋯ x_n^j_n`.
pub type BellMultiIndex = Vec<u32>;

/// A polynomial in `x₁, …, x_n` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellPolynomial {
    n: usize,
    terms: BTreeMap<BellMultiIndex, Integer>,
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_SYMBOLIC_DEGREE {
        return Err(Error::Capability(format!(
            "Bell polynomial of degree {n} exceeds the bound {MAX_SYMBOLIC_DEGREE}"
        )));
    }
    Ok(())
}

/// All `j` of length `n` with `Σ i·j_i = n`.
fn multi_indices(n: usize) -> Vec<BellMultiIndex> {
    fn go(part: usize, remaining: usize, j: &mut BellMultiIndex, out: &mut Vec<BellMultiIndex>) {
        if part == 0 {
            if remaining == 0 {
                out.push(j.clone());
            }
            return;
        }
        for count in 0..=remaining / part {
            j[part - 1] = count as u32;
            go(part - 1, remaining - count * part, j, out);
        }
        j[part - 1] = 0;
    }
    let mut out = Vec::new();
    go(n, n, &mut vec![0; n], &mut out);
    out
}

/// `n! / (Π j_i! (i!)^j_i)`.
fn multinomial(n: usize, j: &[u32]) -> Integer {
    let mut denom = Integer::from(1);
    for (i, &ji) in j.iter().enumerate() {
        denom *= Integer::from(Integer::factorial(ji));
        denom *= Integer::from(Integer::factorial(i as u32 + 1)).pow(ji);
    }
    Integer::from(Integer::factorial(n as u32)) / denom
}

/// Coefficient table of `B_n`.
pub fn bell_symbolic(n: usize) -> Result<BellPolynomial> {
    check_degree(n)?;
    let terms = multi_indices(n)
        .into_iter()
        .map(|j| {
            let c = multinomial(n, &j);
            (j, c)
        })
        .collect();
    Ok(BellPolynomial { n, terms })
}

impl BellPolynomial {
    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BellMultiIndex, &Integer)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x₁^j₁ ⋯`; missing trailing exponents count as zero.
    pub fn coeff(&self, j: &[u32]) -> Integer {
        let mut key = j.to_vec();
        key.resize(self.n, 0);
        if j.len() > self.n && j[self.n..].iter().any(|&e| e != 0) {
            return Integer::new();
        }
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Integer) -> Self {
        let terms = if *c == 0 {
            BTreeMap::new()
        } else {
            self.terms
                .iter()
                .map(|(j, q)| (j.clone(), Integer::from(q * c)))
                .collect()
        };
        Self { n: self.n, terms }
    }

    /// Formal `∂/∂x₁`, as a polynomial in `x₁, …, x_{n-1}`.
    pub fn derivative_x1(&self) -> Self {
        let n = self.n.saturating_sub(1);
        let mut terms = BTreeMap::new();
        for (j, c) in &self.terms {
            let Some(&j1) = j.first() else { continue };
            if j1 == 0 {
                continue;
            }
            let mut k = j.clone();
            k[0] -= 1;
            debug_assert!(k[n..].iter().all(|&e| e == 0));
            k.truncate(n);
            *terms.entry(k).or_insert_with(Integer::new) += Integer::from(c * j1);
        }
        Self { n, terms }
    }

    /// Value at `xs`, which must have exactly `n` entries.
    pub fn evaluate<T: BellRing>(&self, xs: &[T]) -> T {
        assert_eq!(xs.len(), self.n, "Bell polynomial needs {} values", self.n);
        let mut sum = T::zero();
        for (j, c) in &self.terms {
            let mut t = T::one().mul_integer(c);
            for (x, &e) in xs.iter().zip(j) {
                for _ in 0..e {
                    t = t.mul_ref(x);
                }
            }
            sum.add_assign_ref(&t);
        }
        sum
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

impl fmt::Display for BellPolynomial {
    /// Terms in decreasing order of the `x₁` exponent, as in the usual tables.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (j, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut vars = String::new();
            for (idx, &e) in j.iter().enumerate() {
                match e {
                    0 => {}
                    1 => vars.push_str(&format!("x{}", subscript(idx + 1))),
                    e => vars.push_str(&format!("x{}{}", subscript(idx + 1), superscript(e))),
                }
            }
            if vars.is_empty() || *c != 1 {
                write!(f, "{c}")?;
            }
            f.write_str(&vars)?;
        }
        Ok(())
    }
}
