use super::{IdentityRecord, SeriesSpec};
use crate::exact::Rational;

fn r(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

fn push(out: &mut Vec<IdentityRecord>, spec: SeriesSpec, note: &str) {
    let rec = IdentityRecord::new(spec).expect("catalog entries are in-domain");
    out.push(rec.with_note(note));
}

/// The fixed list of instances that the verification suite checks, in a
/// deterministic order.
pub fn catalog() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    for z in 0..=8 {
        push(&mut out, SeriesSpec::base(z), "");
    }
    for m in 1..=6 {
        push(&mut out, SeriesSpec::base(-2 * m), "vanishes");
    }
    push(&mut out, SeriesSpec::base(r(-1, 2)), "");
    push(&mut out, SeriesSpec::base(r(-3, 2)), "");
    for m in 0..=5 {
        push(&mut out, SeriesSpec::Excluded { m }, "");
    }
    for z in 0..=3 {
        for p in 1..=4 {
            push(&mut out, SeriesSpec::power(z, p), "");
        }
    }
    for m in 1..=3 {
        for p in 1..=2 {
            push(&mut out, SeriesSpec::NegEven { m, p }, "");
        }
    }
    let weighted_note = "normalized with (k+z); the (2k+2z) form is half of this value";
    for (z, nu) in [(r(1, 1), 0), (r(1, 1), 1), (r(1, 1), 2), (r(2, 1), 1)] {
        push(&mut out, SeriesSpec::Weighted { z, nu }, weighted_note);
    }
    for (z, nu) in [(r(1, 2), 0), (r(1, 2), 1), (r(3, 2), 2)] {
        push(&mut out, SeriesSpec::Weighted { z, nu }, weighted_note);
    }
    push(&mut out, SeriesSpec::Weighted { z: r(1, 4), nu: 1 }, "");
    for (z, nu) in [(r(1, 1), 0), (r(1, 1), 1), (r(1, 1), 2), (r(3, 2), 1)] {
        push(&mut out, SeriesSpec::WeightedSq { z, nu }, "");
    }
    let odd_note = "normalized with (k+z)²; the (2k+2z)² form is a quarter of this value";
    for z in [r(1, 1), r(2, 1), r(3, 2)] {
        push(&mut out, SeriesSpec::OddWeight { z }, odd_note);
    }
    for y in [r(1, 4), r(1, 1), r(2, 1)] {
        push(&mut out, SeriesSpec::ModulusSq { y }, "");
    }
    for (x, p) in [(r(1, 16), 0), (r(1, 4), 0), (r(1, 2), 0), (r(1, 2), 1)] {
        push(&mut out, SeriesSpec::Genfunc { x, p }, "");
    }
    out
}

/// The catalog entry with the given id.
pub fn find(id: &str) -> Option<IdentityRecord> {
    catalog().into_iter().find(|rec| rec.id() == id)
}
