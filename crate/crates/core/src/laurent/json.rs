//! `{"terms":[{"coeff":"<decimal>","exps":{"x(0,0,0)":1,...}}]}`
//!
//! Terms are written leading term first; variables inside a term follow the
//! `VarKey` order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Exponents, LaurentPoly, VarKey};

struct ExpsRef<'a>(&'a Exponents);

impl Serialize for ExpsRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (v, e) in self.0.iter() {
            m.serialize_entry(&v.to_string(), &e)?;
        }
        m.end()
    }
}

struct TermRef<'a>(&'a Exponents, &'a BigInt);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.serialize_field("exps", &ExpsRef(self.0))?;
        st.end()
    }
}

struct TermsRef<'a>(&'a LaurentPoly);

impl Serialize for TermsRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (e, c) in self.0.terms().rev() {
            seq.serialize_element(&TermRef(e, c))?;
        }
        seq.end()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LaurentPoly", 1)?;
        st.serialize_field("terms", &TermsRef(self))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawTerm {
    coeff: String,
    exps: RawExps,
}

struct RawExps(Vec<(VarKey, i32)>);

impl<'de> Deserialize<'de> for RawExps {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RawExps;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from variable keys to integer exponents")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawExps, A::Error> {
                let mut out = Vec::new();
                while let Some((k, e)) = map.next_entry::<String, i32>()? {
                    let v: VarKey = k.parse().map_err(de::Error::custom)?;
                    out.push((v, e));
                }
                Ok(RawExps(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Deserialize)]
struct RawPoly {
    terms: Vec<RawTerm>,
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(de::Error::custom)?;
            terms.push((Exponents::from_pairs(t.exps.0), c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl LaurentPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Exponent map keyed by the variable's text form, for reports.
pub fn exponents_to_map(e: &Exponents) -> BTreeMap<String, i32> {
    e.iter().map(|(v, k)| (v.to_string(), k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_shape() {
        let p = &LaurentPoly::var(VarKey::X(0, 0, 0))
            * &LaurentPoly::from_monomial(super::super::Monomial::new(-3, Exponents::power(VarKey::A(0, 0), -1)));
        assert_eq!(
            p.to_json(),
            r#"{"terms":[{"coeff":"-3","exps":{"x(0,0,0)":1,"a(0,0)":-1}}]}"#
        );
        assert_eq!(LaurentPoly::zero().to_json(), r#"{"terms":[]}"#);
    }

    #[test]
    fn parse_merges_like_terms() {
        let p = LaurentPoly::from_json(
            r#"{"terms":[{"coeff":"2","exps":{"t":1}},{"coeff":"-2","exps":{"t":1}},{"coeff":"5","exps":{}}]}"#,
        )
        .unwrap();
        assert_eq!(p, LaurentPoly::constant(5));
        assert!(LaurentPoly::from_json(r#"{"terms":[{"coeff":"x","exps":{}}]}"#).is_err());
        assert!(LaurentPoly::from_json(r#"{"terms":[{"coeff":"1","exps":{"z":1}}]}"#).is_err());
    }
}
