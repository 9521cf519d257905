use std::fmt;

use super::{ExactConstant, Monomial, Rational};

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if n == 1 {
        return String::new();
    }
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize])
        .collect()
}

fn pi_factor(half: u32) -> String {
    match half {
        1 => "√π".to_string(),
        h if h % 2 == 0 => format!("π{}", superscript(h / 2)),
        h => format!("π^({h}/2)"),
    }
}

/// Generator factors with positive and with negative exponent.
fn factors(m: &Monomial) -> (Vec<String>, Vec<String>) {
    let mut num = Vec::new();
    let mut den = Vec::new();
    match m.pi_half {
        0 => {}
        e if e > 0 => num.push(pi_factor(e as u32)),
        e => den.push(pi_factor(e.unsigned_abs())),
    }
    if m.sqrt2 == 1 {
        num.push("√2".to_string());
    }
    if m.log2 > 0 {
        num.push(format!("log(2){}", superscript(m.log2)));
    }
    if m.euler_gamma > 0 {
        num.push(format!("γ{}", superscript(m.euler_gamma)));
    }
    for (k, e) in &m.zeta_odd {
        num.push(format!("ζ({k}){}", superscript(*e)));
    }
    match m.gamma_quarter {
        0 => {}
        e if e > 0 => num.push(format!("Γ(1/4){}", superscript(e as u32))),
        e => den.push(format!("Γ(1/4){}", superscript(e.unsigned_abs()))),
    }
    (num, den)
}

fn render_term(m: &Monomial, q: &Rational) -> String {
    let (mut num, mut den) = factors(m);
    let (n, d) = (q.numer().clone().abs(), q.denom().clone());
    if n != 1 || num.is_empty() {
        num.insert(0, n.to_string());
    }
    if d != 1 {
        den.insert(0, d.to_string());
    }
    let mut s = num.join("·");
    match den.len() {
        0 => {}
        1 => {
            s.push('/');
            s.push_str(&den[0]);
        }
        _ => {
            s.push_str("/(");
            s.push_str(&den.join("·"));
            s.push(')');
        }
    }
    s
}

impl fmt::Display for ExactConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let neg = *q < 0;
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&render_term(m, q))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::exact::{ratio, ExactConstant};

    #[test]
    fn renders_common_shapes() {
        let half_pi = ExactConstant::pi().scale(&ratio(1, 2));
        assert_eq!(half_pi.to_string(), "π/2");
        let c = ExactConstant::one() - ExactConstant::log2()
            + ExactConstant::log2().pow(2).scale(&ratio(1, 2))
            - ExactConstant::pi().pow(2).scale(&ratio(1, 24));
        assert_eq!(c.to_string(), "1 - log(2) + log(2)²/2 - π²/24");
        let g = ExactConstant::gamma_quarter_pow(2)
            * ExactConstant::sqrt2()
            * ExactConstant::pi_half_pow(-1);
        assert_eq!(g.scale(&ratio(1, 4)).to_string(), "√2·Γ(1/4)²/(4·√π)");
        assert_eq!(
            ExactConstant::pi_half_pow(3).scale_int(-2).to_string(),
            "-2·π^(3/2)"
        );
        assert_eq!(ExactConstant::zero().to_string(), "0");
    }
}
