//! The series families and their closed forms.
//!
//! Every family is a sum over `k ≥ 0` of `C(2k,k)/4^k` times a rational
//! weight; [`SeriesSpec`] names one concrete instance and [`closed_form`]
//! evaluates it in the constant field.

mod catalog;
mod closed;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactConstant, Rational};

pub use catalog::{catalog, find};
pub use closed::{
    closed_form_base, closed_form_excluded, closed_form_neg_even_power, closed_form_odd_weight,
    closed_form_power, closed_form_weighted, closed_form_weighted_sq, modulus_sq_limit,
    modulus_sq_rhs,
};

/// Family tag of a [`SeriesSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Base,
    Power,
    NegEven,
    Excluded,
    Weighted,
    WeightedSq,
    OddWeight,
    ModulusSq,
    Genfunc,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Base,
        Family::Power,
        Family::NegEven,
        Family::Excluded,
        Family::Weighted,
        Family::WeightedSq,
        Family::OddWeight,
        Family::ModulusSq,
        Family::Genfunc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Base => "base",
            Family::Power => "power",
            Family::NegEven => "neg_even",
            Family::Excluded => "excluded",
            Family::Weighted => "weighted",
            Family::WeightedSq => "weighted_sq",
            Family::OddWeight => "odd_weight",
            Family::ModulusSq => "modulus_sq",
            Family::Genfunc => "genfunc",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parse(format!(
                    "unknown family {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// One concrete series. With `c_k = C(2k,k)/4^k`:
///
/// | family | summand |
/// |---|---|
/// | `Base { z }` | `c_k / (2k+1+z)` |
/// | `Power { z, p }` | `c_k / (2k+1+z)^(p+1)` |
/// | `NegEven { m, p }` | `c_k / (2k+1-2m)^(p+1)` |
/// | `Excluded { m }` | `c_k / (2k-2m)`, the term `k = m` omitted |
/// | `Weighted { z, nu }` | `c_k / ((k+z) (2k-1)(2k-3)⋯(2k-2ν+1))` |
/// | `WeightedSq { z, nu }` | `c_k / ((k+z)² (2k-1)(2k-3)⋯(2k-2ν+1))` |
/// | `OddWeight { z }` | `c_k (2k+1) / (k+z)²` |
/// | `ModulusSq { y }` | `|Σ c_k / (2k+1+iy)|²` |
/// | `Genfunc { x, p }` | `c_k x^k / (2k+1)^(p+1)` |
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesSpec {
    Base { z: Rational },
    Power { z: Rational, p: u32 },
    NegEven { m: u32, p: u32 },
    Excluded { m: u32 },
    Weighted { z: Rational, nu: u32 },
    WeightedSq { z: Rational, nu: u32 },
    OddWeight { z: Rational },
    ModulusSq { y: Rational },
    Genfunc { x: Rational, p: u32 },
}

fn q(r: &Rational) -> String {
    r.to_string()
}

impl SeriesSpec {
    pub fn base(z: impl Into<Rational>) -> Self {
        SeriesSpec::Base { z: z.into() }
    }

    pub fn power(z: impl Into<Rational>, p: u32) -> Self {
        SeriesSpec::Power { z: z.into(), p }
    }

    pub fn family(&self) -> Family {
        match self {
            SeriesSpec::Base { .. } => Family::Base,
            SeriesSpec::Power { .. } => Family::Power,
            SeriesSpec::NegEven { .. } => Family::NegEven,
            SeriesSpec::Excluded { .. } => Family::Excluded,
            SeriesSpec::Weighted { .. } => Family::Weighted,
            SeriesSpec::WeightedSq { .. } => Family::WeightedSq,
            SeriesSpec::OddWeight { .. } => Family::OddWeight,
            SeriesSpec::ModulusSq { .. } => Family::ModulusSq,
            SeriesSpec::Genfunc { .. } => Family::Genfunc,
        }
    }

    /// Parameters as `(name, value)` pairs in canonical order.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match self {
            SeriesSpec::Base { z } => vec![("z", q(z))],
            SeriesSpec::Power { z, p } => vec![("z", q(z)), ("p", p.to_string())],
            SeriesSpec::NegEven { m, p } => vec![("m", m.to_string()), ("p", p.to_string())],
            SeriesSpec::Excluded { m } => vec![("m", m.to_string())],
            SeriesSpec::Weighted { z, nu } | SeriesSpec::WeightedSq { z, nu } => {
                vec![("z", q(z)), ("nu", nu.to_string())]
            }
            SeriesSpec::OddWeight { z } => vec![("z", q(z))],
            SeriesSpec::ModulusSq { y } => vec![("y", q(y))],
            SeriesSpec::Genfunc { x, p } => vec![("x", q(x)), ("p", p.to_string())],
        }
    }

    /// Stable identifier such as `power:z=1,p=4`.
    pub fn id(&self) -> String {
        let params: Vec<String> = self
            .params()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}:{}", self.family(), params.join(","))
    }

    /// Builds a spec from a family and named parameters; missing integer
    /// parameters default to zero.
    pub fn from_params(family: Family, get: impl Fn(&str) -> Option<String>) -> Result<Self> {
        let rat = |name: &str| -> Result<Rational> {
            let s = get(name).ok_or_else(|| Error::Parse(format!("{family} needs --{name}")))?;
            crate::exact::parse_rational(&s)
        };
        let int = |name: &str| -> Result<u32> {
            match get(name) {
                None => Ok(0),
                Some(s) => s.trim().parse().map_err(|_| {
                    Error::Parse(format!(
                        "--{name} must be a non-negative integer, got {s:?}"
                    ))
                }),
            }
        };
        let spec = match family {
            Family::Base => SeriesSpec::Base { z: rat("z")? },
            Family::Power => SeriesSpec::Power {
                z: rat("z")?,
                p: int("p")?,
            },
            Family::NegEven => SeriesSpec::NegEven {
                m: int("m")?,
                p: int("p")?,
            },
            Family::Excluded => SeriesSpec::Excluded { m: int("m")? },
            Family::Weighted => SeriesSpec::Weighted {
                z: rat("z")?,
                nu: int("nu")?,
            },
            Family::WeightedSq => SeriesSpec::WeightedSq {
                z: rat("z")?,
                nu: int("nu")?,
            },
            Family::OddWeight => SeriesSpec::OddWeight { z: rat("z")? },
            Family::ModulusSq => SeriesSpec::ModulusSq { y: rat("y")? },
            Family::Genfunc => SeriesSpec::Genfunc {
                x: rat("x")?,
                p: int("p")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Rejects parameter combinations whose series is undefined.
    pub fn validate(&self) -> Result<()> {
        let non_pos_int = |r: &Rational| *r.denom() == 1 && *r <= 0;
        match self {
            SeriesSpec::Base { z } | SeriesSpec::Power { z, .. } => {
                // 2k+1+z = 0 for some k ≥ 0
                let w = Rational::from(z + 1u32);
                if *w.denom() == 1 && w <= 0 && w.numer().is_even() {
                    return Err(Error::Pole(format!(
                        "z = {z} makes the term k = {} infinite; the series without that term is the excluded family (--family excluded --m {})",
                        Rational::from(-w.clone() / 2u32),
                        Rational::from(-w / 2u32)
                    )));
                }
            }
            SeriesSpec::NegEven { m, .. } if *m == 0 => {
                return Err(Error::Domain("neg_even needs m ≥ 1".into()));
            }
            SeriesSpec::Weighted { z, .. }
            | SeriesSpec::WeightedSq { z, .. }
            | SeriesSpec::OddWeight { z } => {
                if non_pos_int(z) {
                    return Err(Error::Pole(format!(
                        "z = {z} makes the term k = {} infinite",
                        Rational::from(-z)
                    )));
                }
            }
            SeriesSpec::ModulusSq { y } if *y == 0 => {
                return Err(Error::Domain(
                    "y = 0 is excluded; the limit y → 0 is π²/4".into(),
                ));
            }
            SeriesSpec::Genfunc { x, .. } if Rational::from(x.abs_ref()) >= 1 => {
                return Err(Error::Domain(format!(
                    "genfunc needs |x| < 1, got {x}; use the power family at x = 1"
                )));
            }
            _ => {}
        }
        Ok(())
    }

    /// Human-readable form of the series.
    pub fn describe(&self) -> String {
        let c = "C(2k,k)/4^k";
        let lin = |z: &Rational, var: &str| -> String {
            if *z == 0 {
                var.to_string()
            } else if *z > 0 {
                format!("{var}+{z}")
            } else {
                format!("{var}-{}", Rational::from(-z))
            }
        };
        let pw = |e: u32| {
            if e == 1 {
                String::new()
            } else {
                format!("^{e}")
            }
        };
        let odd_prod = |nu: u32| -> String {
            (1..=nu)
                .map(|j| format!("(2k-{})", 2 * j - 1))
                .collect::<Vec<_>>()
                .join("")
        };
        match self {
            SeriesSpec::Base { z } => format!("Σ {c} / ({})", lin(&Rational::from(z + 1u32), "2k")),
            SeriesSpec::Power { z, p } => {
                format!(
                    "Σ {c} / ({}){}",
                    lin(&Rational::from(z + 1u32), "2k"),
                    pw(p + 1)
                )
            }
            SeriesSpec::NegEven { m, p } => {
                format!("Σ {c} / (2k-{}){}", 2 * m - 1, pw(p + 1))
            }
            SeriesSpec::Excluded { m } => {
                if *m == 0 {
                    format!("Σ_{{k≠0}} {c} / (2k)")
                } else {
                    format!("Σ_{{k≠{m}}} {c} / (2k-{})", 2 * m)
                }
            }
            SeriesSpec::Weighted { z, nu } => {
                format!("Σ {c} / (({}){})", lin(z, "k"), odd_prod(*nu))
            }
            SeriesSpec::WeightedSq { z, nu } => {
                format!("Σ {c} / (({})²{})", lin(z, "k"), odd_prod(*nu))
            }
            SeriesSpec::OddWeight { z } => format!("Σ {c} · (2k+1) / ({})²", lin(z, "k")),
            SeriesSpec::ModulusSq { y } => format!("|Σ {c} / (2k+1+{y}i)|²"),
            SeriesSpec::Genfunc { x, p } => format!("Σ {c} · ({x})^k / (2k+1){}", pw(p + 1)),
        }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for SeriesSpec {
    type Err = Error;

    /// Parses the [`SeriesSpec::id`] form.
    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s.split_once(':').ok_or_else(|| {
            Error::Parse(format!("bad series id {s:?}; expected family:key=value,…"))
        })?;
        let family: Family = family.parse()?;
        let mut pairs = Vec::new();
        for kv in rest.split(',').filter(|kv| !kv.trim().is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad parameter {kv:?} in {s:?}")))?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        SeriesSpec::from_params(family, |name| {
            pairs
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| v.clone())
        })
    }
}

/// Closed form of `spec`, or `None` for the families that are only checked
/// numerically (`modulus_sq`, `genfunc`).
pub fn closed_form(spec: &SeriesSpec) -> Result<Option<ExactConstant>> {
    spec.validate()?;
    let value = match spec {
        SeriesSpec::Base { z } => closed_form_base(z)?,
        SeriesSpec::Power { z, p } => {
            if *p == 0 {
                closed_form_base(z)?
            } else {
                let zi = closed::nonneg_integer(z, "power")?;
                closed_form_power(zi, *p)?
            }
        }
        SeriesSpec::NegEven { m, p } => closed_form_neg_even_power(*m, *p)?,
        SeriesSpec::Excluded { m } => closed_form_excluded(*m),
        SeriesSpec::Weighted { z, nu } => closed_form_weighted(z, *nu)?,
        SeriesSpec::WeightedSq { z, nu } => closed_form_weighted_sq(z, *nu)?,
        SeriesSpec::OddWeight { z } => closed_form_odd_weight(z)?,
        SeriesSpec::ModulusSq { .. } | SeriesSpec::Genfunc { .. } => return Ok(None),
    };
    Ok(Some(value))
}

/// A catalog entry.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityRecord {
    pub spec: SeriesSpec,
    pub closed_form: Option<ExactConstant>,
    /// The series written out, e.g. `Σ C(2k,k)/4^k / (2k+1)^4`.
    pub paper_eq: String,
    /// Free-form remark on normalization, empty for most entries.
    pub note: String,
}

impl IdentityRecord {
    pub fn new(spec: SeriesSpec) -> Result<Self> {
        let closed_form = closed_form(&spec)?;
        let paper_eq = spec.describe();
        Ok(Self {
            spec,
            closed_form,
            paper_eq,
            note: String::new(),
        })
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    pub fn id(&self) -> String {
        self.spec.id()
    }

    /// JSON export: `{id, family, params, paper_eq, closed_form, note}`.
    pub fn to_json(&self) -> serde_json::Value {
        let params: serde_json::Map<String, serde_json::Value> = self
            .spec
            .params()
            .into_iter()
            .map(|(k, v)| (k.to_string(), serde_json::Value::String(v)))
            .collect();
        let mut obj = serde_json::json!({
            "id": self.id(),
            "family": self.spec.family().name(),
            "params": params,
            "paper_eq": self.paper_eq,
            "closed_form": self.closed_form,
        });
        if let Some(c) = &self.closed_form {
            obj["closed_form_text"] = serde_json::Value::String(c.to_string());
        }
        if !self.note.is_empty() {
            obj["note"] = serde_json::Value::String(self.note.clone());
        }
        obj
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn ids_round_trip() {
        for rec in catalog() {
            let parsed: SeriesSpec = rec.id().parse().unwrap();
            assert_eq!(parsed, rec.spec);
        }
        assert_eq!(SeriesSpec::power(1, 4).id(), "power:z=1,p=4");
        assert_eq!(
            SeriesSpec::Weighted {
                z: ratio(1, 2),
                nu: 2
            }
            .id(),
            "weighted:z=1/2,nu=2"
        );
    }

    #[test]
    fn negative_odd_base_points_to_excluded_family() {
        let err = closed_form(&SeriesSpec::base(-3)).unwrap_err();
        match err {
            Error::Pole(msg) => assert!(msg.contains("excluded"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn descriptions() {
        assert_eq!(
            SeriesSpec::power(0, 3).describe(),
            "Σ C(2k,k)/4^k / (2k+1)^4"
        );
        assert_eq!(
            SeriesSpec::base(ratio(-3, 2)).describe(),
            "Σ C(2k,k)/4^k / (2k-1/2)"
        );
        assert_eq!(
            SeriesSpec::Excluded { m: 2 }.describe(),
            "Σ_{k≠2} C(2k,k)/4^k / (2k-4)"
        );
        assert_eq!(
            SeriesSpec::WeightedSq {
                z: ratio(1, 1),
                nu: 2
            }
            .describe(),
            "Σ C(2k,k)/4^k / ((k+1)²(2k-1)(2k-3))"
        );
    }

    #[test]
    fn family_parsing() {
        assert_eq!("weighted-sq".parse::<Family>().unwrap(), Family::WeightedSq);
        assert!("nope".parse::<Family>().is_err());
    }
}
