//! JSON documents for complexes.
//!
//! ```json
//! {"generators": [{"name": "a", "grading": 1}, {"name": "b", "grading": "0"}],
//!  "ring": "F2(t)[U]",
//!  "entries": [{"row": 0, "col": 1, "coeff": "U"}],
//!  "variables": ["U_z"]}
//! ```
//!
//! `entries` lists nonzero differential coefficients; column `col` is the
//! source generator. Gradings may be integers or `"p/q"` strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::chain::{ChainComplex, Generator};
use super::module::GradedModule;
use crate::error::{Error, Result};
use crate::rings::rational::serde_q;
use crate::rings::{
    parse_coefficient, Coefficient, F2Poly, LaurentPoly, Poly, RatFunc, RingTag, F2, Q,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    #[serde(with = "serde_q")]
    pub grading: Q,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub row: usize,
    pub col: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub generators: Vec<GeneratorDoc>,
    pub ring: String,
    pub entries: Vec<EntryDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variables: Vec<String>,
}

impl ComplexDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_complex<R: Coefficient>(c: &ChainComplex<R>) -> Self {
        ComplexDoc {
            generators: c
                .generators()
                .iter()
                .map(|g| GeneratorDoc {
                    name: g.name.clone(),
                    grading: g.grading.clone(),
                    alexander: None,
                })
                .collect(),
            ring: R::ring_tag().name().to_string(),
            entries: c
                .differential()
                .nonzero()
                .map(|(row, col, v)| EntryDoc {
                    row,
                    col,
                    coeff: v.to_string(),
                })
                .collect(),
            variables: c.variables().to_vec(),
        }
    }

    pub fn ring_tag(&self) -> Result<RingTag> {
        RingTag::from_name(&self.ring)
            .ok_or_else(|| Error::Unsupported(format!("unknown ring `{}`", self.ring)))
    }

    /// Builds the complex over `R`, which must match the declared ring.
    pub fn build<R: Coefficient>(&self) -> Result<ChainComplex<R>> {
        let tag = self.ring_tag()?;
        if tag != R::ring_tag() {
            return Err(Error::InconsistentInput(format!(
                "document ring {tag} does not match {}",
                R::ring_tag()
            )));
        }
        let generators = self
            .generators
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.grading.clone()))
            .collect();
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let v: R = parse_coefficient(&e.coeff)?;
            if !v.is_zero() {
                entries.push((e.row, e.col, v));
            }
        }
        Ok(ChainComplex::from_entries(generators, entries)?.tagged(self.variables.clone()))
    }

    /// Homology for any Euclidean coefficient ring named in the document.
    pub fn homology(&self) -> Result<GradedModule> {
        match self.ring_tag()? {
            RingTag::Integers => self.build::<BigInt>()?.homology(),
            RingTag::Rationals => self.build::<Q>()?.homology(),
            RingTag::F2 => self.build::<F2>()?.homology(),
            RingTag::F2Poly => self.build::<F2Poly>()?.homology(),
            RingTag::Laurent => self.build::<LaurentPoly>()?.homology(),
            RingTag::RatFunc => self.build::<RatFunc>()?.homology(),
            RingTag::RatFuncU => self.build::<Poly<RatFunc>>()?.homology(),
            other => Err(Error::RingNotEuclidean(other)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::Summand;
    use crate::rings::qi;

    const U_CONE: &str = r#"{
        "generators": [{"name": "a", "grading": 1}, {"name": "b", "grading": "0"}],
        "ring": "F2(t)[U]",
        "entries": [{"row": 0, "col": 1, "coeff": "(t+1)*U"}],
        "variables": ["U_z"]
    }"#;

    #[test]
    fn homology_from_document() {
        let doc = ComplexDoc::from_json(U_CONE).unwrap();
        let h = doc.homology().unwrap();
        assert_eq!(
            h.summands,
            vec![Summand::UTorsion {
                ring: RingTag::RatFuncU,
                exponent: 1,
                rank: 1,
                top: Some(qi(1)),
            }]
        );
    }

    #[test]
    fn round_trip() {
        let doc = ComplexDoc::from_json(U_CONE).unwrap();
        let c = doc.build::<Poly<RatFunc>>().unwrap();
        let again = ComplexDoc::from_complex(&c);
        assert_eq!(again.build::<Poly<RatFunc>>().unwrap(), c);
        let text = again.to_json();
        assert_eq!(ComplexDoc::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn errors_carry_positions() {
        let err = ComplexDoc::from_json("{\n  \"ring\": 3\n}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let doc = ComplexDoc {
            ring: "Lambda".into(),
            ..ComplexDoc::from_json(U_CONE).unwrap()
        };
        assert_eq!(
            doc.homology(),
            Err(Error::RingNotEuclidean(RingTag::Lambda))
        );
    }

    #[test]
    fn invalid_differential_rejected() {
        let text = U_CONE.replace("(t+1)*U", "U^2");
        let doc = ComplexDoc::from_json(&text).unwrap();
        assert!(matches!(doc.homology(), Err(Error::InvalidComplex(_))));
    }
}
