use rug::Integer;

use super::{ExactConstant, Rational};
use crate::error::{Error, Result};

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
///
/// Computed with the Akiyama–Tanigawa triangle, which yields the `B_1 = +1/2`
/// sequence; the sign of `B_1` is flipped afterwards.
pub fn bernoulli(n: u32) -> Rational {
    let n_us = n as usize;
    let mut row: Vec<Rational> = Vec::with_capacity(n_us + 1);
    for m in 0..=n_us {
        row.push(Rational::from((1, m as u64 + 1)));
        for j in (1..=m).rev() {
            let diff = Rational::from(&row[j - 1] - &row[j]);
            row[j - 1] = diff * j as u64;
        }
    }
    let b = row.swap_remove(0);
    if n == 1 {
        -b
    } else {
        b
    }
}

/// `ζ(k)` as an exact constant: a rational multiple of `π^k` for even `k`
/// (Euler's formula), the generator `ζ(k)` for odd `k`.
pub fn zeta_exact(k: u32) -> Result<ExactConstant> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "zeta({k}) is not a convergent zeta value"
        )));
    }
    if k % 2 == 1 {
        return ExactConstant::zeta_odd(k);
    }
    // ζ(2n) = (-1)^(n+1) B_2n (2π)^2n / (2 (2n)!)
    let n = k / 2;
    let mut q = bernoulli(k) * (Integer::from(1) << (k - 1));
    q /= Integer::from(Integer::factorial(k));
    if n.is_multiple_of(2) {
        q = -q;
    }
    Ok(ExactConstant::pi_half_pow(2 * k as i32).scale(&q))
}
