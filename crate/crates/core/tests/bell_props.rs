use binomsum::bell::{bell_symbolic, bell_value, bell_value_oracle, BellPolynomial};
use binomsum::exact::ratio;
use binomsum::{ExactConstant, Rational};
use proptest::prelude::*;
use rug::Integer;

const TABLE: [&str; 6] = [
    "1",
    "x₁",
    "x₁² + x₂",
    "x₁³ + 3x₁x₂ + x₃",
    "x₁⁴ + 6x₁²x₂ + 4x₁x₃ + 3x₂² + x₄",
    "x₁⁵ + 10x₁³x₂ + 10x₁²x₃ + 15x₁x₂² + 5x₁x₄ + 10x₂x₃ + x₅",
];

#[test]
fn table_reproduced() {
    for (n, row) in TABLE.iter().enumerate() {
        assert_eq!(bell_symbolic(n).unwrap().to_string(), *row, "n = {n}");
    }
}

#[test]
fn derivative_identity_formal() {
    for n in 1..=6 {
        let lhs: BellPolynomial = bell_symbolic(n).unwrap().derivative_x1();
        let rhs = bell_symbolic(n - 1).unwrap().scale(&Integer::from(n));
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

/// Coefficients of `exp(Σ_{j≥1} x_j t^j/j!)` through `t^deg`, from the
/// power series `Σ_m A^m/m!` of the exponential.
fn exp_series(xs: &[Rational], deg: usize) -> Vec<Rational> {
    let mut a = vec![Rational::new(); deg + 1];
    let mut fact = Integer::from(1);
    for j in 1..=deg.min(xs.len()) {
        fact *= j as u32;
        a[j] = Rational::from(&xs[j - 1] / &fact);
    }
    let mut out = vec![Rational::new(); deg + 1];
    out[0] = Rational::from(1);
    let mut power = out.clone();
    let mut m_fact = Integer::from(1);
    for m in 1..=deg {
        let mut next = vec![Rational::new(); deg + 1];
        for (i, p) in power.iter().enumerate() {
            for (j, aj) in a.iter().enumerate().skip(1) {
                if i + j <= deg {
                    next[i + j] += Rational::from(p * aj);
                }
            }
        }
        power = next;
        m_fact *= m as u32;
        for (o, p) in out.iter_mut().zip(&power) {
            *o += Rational::from(p / &m_fact);
        }
    }
    out
}

fn rationals(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-40i64..40, 1i64..12), len)
        .prop_map(|v| v.into_iter().map(|(n, d)| ratio(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn recurrence_matches_partitions(xs in rationals(8)) {
        for n in 0..=8 {
            prop_assert_eq!(bell_value(&xs[..n]), bell_value_oracle(&xs[..n]).unwrap());
        }
    }

    #[test]
    fn generating_function_through_t6(xs in rationals(6)) {
        let coeffs = exp_series(&xs, 6);
        let mut fact = Integer::from(1);
        for n in 0..=6 {
            if n > 0 {
                fact *= n as u32;
            }
            let want = Rational::from(&coeffs[n] * &fact);
            prop_assert_eq!(bell_value(&xs[..n]), want);
        }
    }

    #[test]
    fn symbolic_evaluates_like_recurrence(xs in rationals(8)) {
        for n in 0..=8 {
            prop_assert_eq!(bell_symbolic(n).unwrap().evaluate(&xs[..n]), bell_value(&xs[..n]));
        }
    }
}

#[test]
fn constant_field_arguments() {
    let xs = [
        ExactConstant::log2(),
        ExactConstant::pi(),
        ExactConstant::zeta_odd(3).unwrap(),
    ];
    let l = &xs[0];
    let want = l.pow(3) + (l * &xs[1]).scale_int(3) + xs[2].clone();
    assert_eq!(bell_value(&xs), want);
    assert_eq!(bell_value_oracle(&xs).unwrap(), want);
}
