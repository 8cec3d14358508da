use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlgebraElement, AlgebraSignature, Mode, Monomial};
use crate::cyclotomic::CyclotomicNumber;

#[derive(Serialize, Deserialize)]
struct Term {
    exp: Vec<u32>,
    coeff: CyclotomicNumber,
}

/// `order` and `zeta_exp` are written only for a non-default `ζ`.
#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    l: usize,
    mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zeta_exp: Option<usize>,
    terms: Vec<Term>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let sig = self.signature();
        let custom = !sig.has_default_zeta();
        ElementJson {
            n: sig.n(),
            l: sig.l(),
            mode: sig.mode(),
            order: custom.then(|| sig.field().order()),
            zeta_exp: custom.then(|| sig.zeta_exponent()),
            terms: self
                .terms()
                .map(|(m, c)| Term {
                    exp: m.exponents().to_vec(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = ElementJson::deserialize(d)?;
        let mut sig = AlgebraSignature::new(raw.n, raw.l, raw.mode).map_err(D::Error::custom)?;
        if let (Some(order), Some(e)) = (raw.order, raw.zeta_exp) {
            sig = sig.with_phase(order, e as i64).map_err(D::Error::custom)?;
        }
        let mut terms = BTreeMap::new();
        for t in raw.terms {
            let single = AlgebraElement::monomial(&sig, t.exp.clone(), t.coeff)
                .map_err(D::Error::custom)?;
            let coeff = single.terms().next().map(|(_, c)| c.clone());
            if let Some(c) = coeff {
                if terms.insert(Monomial::new(t.exp), c).is_some() {
                    return Err(D::Error::custom("duplicate monomial"));
                }
            }
        }
        Ok(AlgebraElement::from_parts(&sig, terms))
    }
}
