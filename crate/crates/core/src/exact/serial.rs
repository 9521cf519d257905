use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactConstant, Monomial, Rational};
use crate::error::{Error, Result};

/// One term of the JSON form of an [`ExactConstant`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub coeff: String,
    pub pi_half: i32,
    pub sqrt2: u8,
    pub log2: u32,
    pub gamma: u32,
    #[serde(default)]
    pub zeta: BTreeMap<String, u32>,
    pub gamma_quarter: i32,
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

impl TermRepr {
    fn from_term(m: &Monomial, q: &Rational) -> Self {
        Self {
            coeff: format!("{}/{}", q.numer(), q.denom()),
            pi_half: m.pi_half,
            sqrt2: m.sqrt2,
            log2: m.log2,
            gamma: m.euler_gamma,
            zeta: m
                .zeta_odd
                .iter()
                .map(|(k, e)| (k.to_string(), *e))
                .collect(),
            gamma_quarter: m.gamma_quarter,
        }
    }

    fn to_term(&self) -> Result<(Monomial, Rational)> {
        let coeff = parse_rational(&self.coeff)?;
        let mut zeta = BTreeMap::new();
        for (k, e) in &self.zeta {
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad zeta index {k:?}")))?;
            zeta.insert(k, *e);
        }
        let m = Monomial::new(
            self.pi_half,
            self.sqrt2,
            self.log2,
            self.gamma,
            zeta,
            self.gamma_quarter,
        )?;
        Ok((m, coeff))
    }
}

impl ExactConstant {
    pub fn to_repr(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(m, q)| TermRepr::from_term(m, q))
            .collect()
    }

    /// Parses and canonicalizes the JSON term list.
    pub fn from_repr(terms: &[TermRepr]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(TermRepr::to_term)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(parsed))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("term list serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for ExactConstant {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactConstant {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        Self::from_repr(&terms).map_err(serde::de::Error::custom)
    }
}
