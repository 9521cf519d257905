mod common;

use binomsum::exact::ratio;
use binomsum::special::{
    digamma_exact, gamma_exact, harmonic, harmonic_gen, hurwitz_zeta_exact, lim_psi_over_gamma,
    polygamma_exact, res_psi_sq_minus_psi_prime, GridPoint,
};
use binomsum::{ExactConstant, Rational};
use common::*;
use proptest::prelude::*;
use rug::{Float, Integer};

fn value(c: &ExactConstant) -> Float {
    Float::with_val(PREC, c.to_decimal(100).unwrap().value())
}

#[test]
fn duplication_at_ten_half_integers() {
    // Γ(z)Γ(z+1/2) = 2^(1-2z) √π Γ(2z)
    for twice in 1..=10i64 {
        let z = GridPoint::halves(twice);
        let lhs = gamma_exact(z).unwrap() * gamma_exact(z.shift_quarters(2)).unwrap();
        let two_z = GridPoint::from_quarters(2 * z.four_x());
        let pow = Rational::from((1, Integer::from(1) << (twice - 1) as u32));
        let rhs = (ExactConstant::sqrt_pi() * gamma_exact(two_z).unwrap()).scale(&pow);
        assert_eq!(lhs, rhs, "z = {z}");
    }
}

#[test]
fn trigamma_values_exact() {
    let pi2 = ExactConstant::pi().pow(2);
    assert_eq!(
        polygamma_exact(1, GridPoint::halves(1)).unwrap(),
        pi2.scale(&ratio(1, 2))
    );
    assert_eq!(
        polygamma_exact(1, GridPoint::integer(1)).unwrap(),
        pi2.scale(&ratio(1, 6))
    );
    assert_eq!(
        polygamma_exact(1, GridPoint::halves(3)).unwrap(),
        pi2.scale(&ratio(1, 2)) - ExactConstant::rational(4)
    );
}

#[test]
fn residue_matches_laurent_probe() {
    for m in 1..=3 {
        let exact = value(&res_psi_sq_minus_psi_prime(m).unwrap());
        let probe = residue_probe(m);
        assert!(agree(&probe, &exact) >= 10.0, "m = {m}: {probe} vs {exact}");
    }
}

#[test]
fn limit_matches_probe() {
    for m in 1..=5 {
        let exact = Float::with_val(PREC, &lim_psi_over_gamma(m).unwrap());
        assert!(agree(&limit_probe(m), &exact) >= 10.0, "m = {m}");
    }
}

#[test]
fn hurwitz_matches_summation() {
    for k in 2..=7 {
        for twice in [1i64, 2, 3, 7, 10] {
            let x = GridPoint::halves(twice);
            let exact = value(&hurwitz_zeta_exact(k, x).unwrap());
            let direct = hurwitz(k, &fq(twice, 2));
            assert!(agree(&direct, &exact) >= 40.0, "ζ({k}, {x})");
        }
    }
}

#[test]
fn gamma_and_digamma_match_mpfr_on_the_grid() {
    for four_x in (-15..=20i64).filter(|q| *q > 0 || q % 4 != 0) {
        let x = GridPoint::from_quarters(four_x);
        let xf = fq(four_x, 4);
        let g = value(&gamma_exact(x).unwrap());
        assert!(
            agree(&g, &Float::with_val(PREC, xf.gamma_ref())) >= 90.0,
            "Γ({x})"
        );
        if !x.is_quarter() {
            let p = value(&digamma_exact(x).unwrap());
            assert!(agree(&p, &digamma(&xf)) >= 90.0, "ψ({x})");
        }
    }
}

#[test]
fn polygamma_matches_hurwitz() {
    // ψ^(n)(x) = (-1)^(n+1) n! ζ(n+1, x)
    for n in 1..=5u32 {
        for twice in [1i64, 2, 5, 8] {
            let x = GridPoint::halves(twice);
            let exact = value(&polygamma_exact(n, x).unwrap());
            let mut want = hurwitz(n + 1, &fq(twice, 2))
                * Float::with_val(PREC, &Integer::from(Integer::factorial(n)));
            if n % 2 == 0 {
                want = -want;
            }
            assert!(agree(&exact, &want) >= 40.0, "ψ^({n})({x})");
        }
    }
}

#[test]
fn trigamma_oracle_sanity() {
    let want = pi() * pi() / 6u32;
    assert!(agree(&trigamma(&f(1)), &want) >= 50.0);
}

proptest! {
    #[test]
    fn gamma_recurrence(four_x in -40i64..40) {
        let x = GridPoint::from_quarters(four_x);
        prop_assume!(!x.is_pole() && !x.shift_quarters(4).is_pole());
        let lhs = gamma_exact(x.shift_quarters(4)).unwrap();
        let rhs = gamma_exact(x).unwrap().scale(&x.to_rational());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn digamma_recurrence(twice in -40i64..40) {
        let x = GridPoint::halves(twice);
        prop_assume!(!x.is_pole());
        let lhs = digamma_exact(x.shift_quarters(4)).unwrap();
        let rhs = digamma_exact(x).unwrap() + ExactConstant::rational(x.to_rational().recip());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn harmonic_step(n in 0u32..200, k in 1u32..6) {
        let step = Rational::from((1, Integer::from(Integer::u_pow_u(n + 1, k))));
        prop_assert_eq!(harmonic_gen(n + 1, k), harmonic_gen(n, k) + step);
        prop_assert_eq!(harmonic_gen(n, 1), harmonic(n));
    }
}
