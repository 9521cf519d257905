mod common;

use binomsum::exact::ratio;
use binomsum::identities::{catalog, closed_form, closed_form_power, IdentityRecord, SeriesSpec};
use binomsum::numeric::{
    accelerate, beta_derivative_fd, boyadzhiev_check, complex_modulus_sum, genfunc_sum,
    partial_sum, quadrature_oracle, tail_bracket, term, verify, CentralRatio, SequenceKind,
};
use common::*;
use rug::{Float, Integer, Rational};

fn symbolic(spec: &SeriesSpec, digits: u32) -> Float {
    let c = closed_form(spec).unwrap().unwrap();
    Float::with_val(PREC, c.to_decimal(digits).unwrap().value())
}

fn central(k: u32) -> Rational {
    Rational::from((
        Integer::from(Integer::binomial_u(2 * k, k)),
        Integer::from(1) << (2 * k),
    ))
}

#[test]
fn term_examples() {
    assert_eq!(
        term(&SeriesSpec::base(0), 1, 10).unwrap().to_string(),
        "0.1666666667"
    );
    assert_eq!(
        term(&SeriesSpec::base(0), 2, 10).unwrap().to_string(),
        "0.07500000000"
    );
    assert!(term(&SeriesSpec::Excluded { m: 1 }, 1, 10).is_err());
}

#[test]
fn central_ratio_matches_binomials() {
    let mut r = CentralRatio::new();
    for k in 0..2000u32 {
        assert_eq!(r.value(), &central(k), "k = {k}");
        r.advance();
    }
}

/// Samples of `1 ≤ k ≤ 10⁶`: every k up to 200, then a geometric grid.
fn samples() -> Vec<u32> {
    let mut ks: Vec<u32> = (1..=200).collect();
    let mut k = 200.0_f64;
    while k < 1e6 {
        k *= 1.37;
        ks.push(k.min(1e6) as u32);
    }
    ks.push(1_000_000);
    ks
}

#[test]
fn termwise_bracket_to_a_million() {
    // (7/8)/√(πk) ≤ 1/√(π(k+1/2)) ≤ c_k ≤ 1/√(πk), compared through c_k² π k
    for k in samples() {
        let c = central(k);
        let c2k = Rational::from(&c * &c) * k;
        let v = Float::with_val(256, &c2k) * Float::with_val(256, rug::float::Constant::Pi);
        assert!(v < 1, "upper bound fails at k = {k}");
        let wallis = Float::with_val(
            256,
            &Rational::from((2 * u64::from(k), 2 * u64::from(k) + 1)),
        );
        assert!(v >= wallis, "Wallis lower bound fails at k = {k}");
        assert!(
            v >= Float::with_val(256, 49) / 64u32,
            "7/8 bound fails at k = {k}"
        );
    }
}

#[test]
fn tail_brackets_contain_the_remainder() {
    let mut checked = 0;
    for rec in catalog() {
        let spec = &rec.spec;
        if tail_bracket(spec, 100).is_err() {
            continue;
        }
        let exact = symbolic(spec, 40);
        for n in [100u64, 1_000, 10_000] {
            let b = tail_bracket(spec, n).unwrap();
            let head = partial_sum(spec, n, 40).unwrap();
            let tail = Float::with_val(PREC, &exact - head.value());
            assert!(
                b.contains(&tail),
                "{spec} N = {n}: {tail} ∉ [{}, {}]",
                b.lo,
                b.hi
            );
            checked += 1;
        }
    }
    assert!(checked >= 3 * 40, "only {checked} pairs checked");
}

#[test]
fn tail_bracket_examples() {
    let spec = SeriesSpec::base(0);
    let b = tail_bracket(&spec, 10_000).unwrap();
    assert!(b.width().to_f64() < 1e-2);
    let spec = SeriesSpec::power(0, 3);
    let b = tail_bracket(&spec, 100).unwrap();
    let tail =
        symbolic(&spec, 40) - Float::with_val(PREC, partial_sum(&spec, 100, 40).unwrap().value());
    assert!(b.contains(&tail));
    let b = tail_bracket(&SeriesSpec::base(0), 1).unwrap();
    let tail = pi() / 2u32 - fq(7, 6);
    assert!(b.contains(&tail));
}

#[test]
fn acceleration_matches_quadrature() {
    for z in 0..=3 {
        for p in 0..=4 {
            let spec = SeriesSpec::power(z, p);
            let a = accelerate(&spec, 40).unwrap();
            let q = quadrature_oracle(&spec, 40).unwrap();
            let d = agree(a.value.value(), &Float::with_val(PREC, q.value()));
            assert!(d >= 30.0, "{spec}: {d} digits");
        }
    }
}

#[test]
fn acceleration_examples() {
    let a = accelerate(&SeriesSpec::base(0), 40).unwrap();
    assert!(agree(a.value.value(), &(pi() / 2u32)) >= 35.0);
    let a = accelerate(&SeriesSpec::Excluded { m: 2 }, 40).unwrap();
    let want = log2() * 3u32 / 8u32 - fq(7, 32);
    assert!(agree(a.value.value(), &want) >= 35.0);
    let a = accelerate(&SeriesSpec::base(-2), 40).unwrap();
    assert!(agree(a.value.value(), &f(0)) >= 35.0);
}

#[test]
fn quadrature_examples() {
    let q = |z: i64, p: u32| {
        Float::with_val(
            PREC,
            quadrature_oracle(&SeriesSpec::power(z, p), 40)
                .unwrap()
                .value(),
        )
    };
    assert!(agree(&q(0, 0), &(pi() / 2u32)) >= 38.0);
    assert!(agree(&q(0, 1), &(pi() * log2() / 2u32)) >= 38.0);
    assert!(agree(&q(1, 0), &f(1)) >= 38.0);
    assert!(quadrature_oracle(&SeriesSpec::base(-1), 20).is_err());
}

#[test]
fn generating_function_is_arcsine() {
    for (n, d) in [(1, 16), (1, 4), (1, 2)] {
        let x = fq(n, d);
        let r = x.clone().sqrt();
        let want = Float::with_val(PREC, r.asin_ref()) / r;
        let got = genfunc_sum(&ratio(n, d), 0, 60).unwrap();
        assert!(agree(got.value(), &want) >= 59.0, "x = {n}/{d}");
    }
    let quarter = genfunc_sum(&ratio(1, 4), 0, 40).unwrap();
    assert!(agree(quarter.value(), &(pi() / 3u32)) >= 39.0);
}

#[test]
fn generating_function_matches_its_integral() {
    let spec = SeriesSpec::Genfunc {
        x: ratio(1, 2),
        p: 1,
    };
    let q = quadrature_oracle(&spec, 40).unwrap();
    let s = genfunc_sum(&ratio(1, 2), 1, 40).unwrap();
    assert!(agree(s.value(), &Float::with_val(PREC, q.value())) >= 38.0);
    assert!(genfunc_sum(&ratio(1, 1), 0, 10).is_err());
}

#[test]
fn binomial_transform_identity() {
    let cases = [
        (SequenceKind::OddPower { p: 1 }, ratio(1, 4)),
        (SequenceKind::Ones, ratio(1, 4)),
        (SequenceKind::ShiftedPower { w: 2, p: 1 }, ratio(1, 8)),
    ];
    for (kind, z) in cases {
        let (l, r) = boyadzhiev_check(&kind, &z, 60, 40).unwrap();
        let d = agree(l.value(), &Float::with_val(PREC, r.value()));
        assert!(d >= 20.0, "{kind:?} z = {z}: {d} digits");
    }
    // a_k ≡ 1 sums the generating function at x = z: (1 - z)^(-1/2)
    let (l, _) = boyadzhiev_check(&SequenceKind::Ones, &ratio(1, 4), 60, 30).unwrap();
    let want = f(3).sqrt().recip() * 2u32;
    assert!(agree(l.value(), &want) >= 30.0);
    assert!(boyadzhiev_check(&SequenceKind::Ones, &ratio(1, 1), 10, 10).is_err());
}

#[test]
fn complex_modulus() {
    for (n, d) in [(1, 4), (1, 1), (2, 1)] {
        let y = fq(n, d);
        let want = pi() / (y.clone() * 2u32) * Float::with_val(PREC, pi() * &y / 2u32).tanh();
        let got = complex_modulus_sum(&ratio(n, d), 30).unwrap();
        assert!(agree(got.value(), &want) >= 20.0, "y = {n}/{d}");
    }
    let near_zero = complex_modulus_sum(&ratio(1, 100), 30).unwrap();
    let limit = pi() * pi() / 4u32;
    assert!(Float::with_val(PREC, near_zero.value() - &limit).abs() < 1e-3);
}

#[test]
fn beta_finite_differences() {
    for p in 1..=2 {
        for z in 0..=1 {
            let fd = beta_derivative_fd(z, p).unwrap();
            let exact = closed_form_power(z, p).unwrap().to_decimal(40).unwrap();
            let d = agree(fd.value(), &Float::with_val(PREC, exact.value()));
            assert!(d >= 10.0, "z = {z}, p = {p}: {d} digits");
        }
    }
}

#[test]
fn verify_examples() {
    let r = verify(&IdentityRecord::new(SeriesSpec::base(0)).unwrap(), 40);
    assert!(r.digits_agreed >= 35);
    let r = verify(&IdentityRecord::new(SeriesSpec::power(1, 4)).unwrap(), 40);
    assert!(r.digits_agreed >= 30);
    let r = verify(
        &IdentityRecord::new(SeriesSpec::ModulusSq { y: ratio(1, 1) }).unwrap(),
        40,
    );
    assert!(r.passed && r.symbolic.is_none());
}
