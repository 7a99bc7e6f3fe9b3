use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complexes::json::{ComplexDoc, EntryDoc, GeneratorDoc};
use crate::complexes::{ChainComplex, Generator, GradedModule};
use crate::error::{Error, Result};
use crate::rings::rational::serde_q;
use crate::rings::{qi, RingTag, F2, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotGenerator {
    pub name: String,
    pub alexander: i64,
    #[serde(with = "serde_q")]
    pub maslov: Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub i_drop: u32,
    pub j_drop: u32,
}

/// Model of `CFK∞` over `F2[U, U^-1]` by its `U^0` column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotComplex {
    generators: Vec<KnotGenerator>,
    arrows: Vec<Arrow>,
}

fn parity_sign(m: &Q) -> Option<i64> {
    m.is_integer().then(|| {
        if m.to_integer() % 2 == 0.into() {
            1
        } else {
            -1
        }
    })
}

impl KnotComplex {
    pub fn new(generators: Vec<KnotGenerator>, mut arrows: Vec<Arrow>) -> Result<Self> {
        arrows.sort();
        arrows.dedup();
        let n = generators.len();
        for a in &arrows {
            if a.from >= n || a.to >= n {
                return Err(Error::InvalidComplex(format!("arrow {a:?} out of range")));
            }
            if a.i_drop + a.j_drop == 0 {
                return Err(Error::InvalidComplex(format!(
                    "arrow {a:?} does not drop filtration"
                )));
            }
            let (x, y) = (&generators[a.from], &generators[a.to]);
            if y.alexander != x.alexander - a.j_drop as i64 + a.i_drop as i64 {
                return Err(Error::InvalidComplex(format!(
                    "arrow {} -> {} is inconsistent with Alexander gradings",
                    x.name, y.name
                )));
            }
            if &y.maslov - qi(2 * a.i_drop as i64) != &x.maslov - qi(1) {
                return Err(Error::InvalidComplex(format!(
                    "arrow {} -> {} does not drop the Maslov grading by one",
                    x.name, y.name
                )));
            }
        }
        let c = KnotComplex { generators, arrows };
        c.check_square_zero()?;
        Ok(c)
    }

    fn check_square_zero(&self) -> Result<()> {
        let mut paths: BTreeMap<(usize, usize, u32, u32), usize> = BTreeMap::new();
        for a in &self.arrows {
            for b in self.arrows.iter().filter(|b| b.from == a.to) {
                *paths
                    .entry((a.from, b.to, a.i_drop + b.i_drop, a.j_drop + b.j_drop))
                    .or_insert(0) += 1;
            }
        }
        match paths.iter().find(|(_, c)| *c % 2 == 1) {
            Some(((x, z, _, _), _)) => Err(Error::InvalidComplex(format!(
                "∂² ≠ 0 from {} to {}",
                self.generators[*x].name, self.generators[*z].name
            ))),
            None => Ok(()),
        }
    }

    pub fn generators(&self) -> &[KnotGenerator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Largest Alexander grading carried by a generator.
    pub fn genus(&self) -> i64 {
        self.generators
            .iter()
            .map(|g| g.alexander)
            .max()
            .unwrap_or(0)
    }

    /// Dimensions of the knot Floer homology over `(A, M)`.
    ///
    /// The associated graded differential keeps only arrows with no
    /// filtration drop, and the constructor forbids those, so the table is
    /// the generator count per bigrading.
    pub fn hfk_hat(&self) -> BTreeMap<(i64, Q), usize> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            *out.entry((g.alexander, g.maslov.clone())).or_insert(0) += 1;
        }
        out
    }

    /// `sum (-1)^M t^A` over the generators, as a map from `A` to coefficient.
    pub fn euler_characteristic(&self) -> Result<BTreeMap<i64, i64>> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            let sign = parity_sign(&g.maslov).ok_or_else(|| {
                Error::InvalidComplex(format!("Maslov grading {} is not an integer", g.maslov))
            })?;
            *out.entry(g.alexander).or_insert(0) += sign;
        }
        out.retain(|_, v| *v != 0);
        Ok(out)
    }

    /// Homology of the column `C{i = 0}` with its vertical arrows.
    pub fn vertical_homology(&self) -> Result<GradedModule> {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.maslov.clone()))
            .collect();
        let entries = self
            .arrows
            .iter()
            .filter(|a| a.i_drop == 0)
            .map(|a| (a.to, a.from, F2(true)))
            .collect();
        ChainComplex::from_entries(generators, entries)?.homology()
    }

    /// Export in the complex document schema over `F2[U]`, with the
    /// Alexander grading on each generator. The `j` drop of an arrow is
    /// recovered from the Alexander gradings.
    pub fn to_doc(&self) -> ComplexDoc {
        ComplexDoc {
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorDoc {
                    name: g.name.clone(),
                    grading: g.maslov.clone(),
                    alexander: Some(g.alexander),
                })
                .collect(),
            ring: RingTag::F2Poly.name().to_string(),
            entries: self
                .arrows
                .iter()
                .map(|a| EntryDoc {
                    row: a.to,
                    col: a.from,
                    coeff: match a.i_drop {
                        0 => "1".to_string(),
                        1 => "U".to_string(),
                        k => format!("U^{k}"),
                    },
                })
                .collect(),
            variables: vec!["U".into()],
        }
    }

    /// Inverse of [`KnotComplex::to_doc`].
    pub fn from_doc(doc: &ComplexDoc) -> Result<Self> {
        let generators: Vec<KnotGenerator> = doc
            .generators
            .iter()
            .map(|g| {
                Ok(KnotGenerator {
                    name: g.name.clone(),
                    alexander: g.alexander.ok_or_else(|| {
                        Error::InconsistentInput(format!(
                            "generator {} lacks an Alexander grading",
                            g.name
                        ))
                    })?,
                    maslov: g.grading.clone(),
                })
            })
            .collect::<Result<_>>()?;
        let complex = doc.build::<crate::rings::F2Poly>()?;
        let mut arrows = Vec::new();
        for (to, from, v) in complex.differential().nonzero() {
            if v.weight() != 1 {
                return Err(Error::InvalidComplex(format!(
                    "entry `{v}` is not a power of U"
                )));
            }
            let i_drop = v.degree().unwrap_or(0) as i64;
            let j_drop = generators[from].alexander - generators[to].alexander + i_drop;
            if j_drop < 0 {
                return Err(Error::InvalidComplex(format!(
                    "arrow {} -> {} raises the j filtration",
                    generators[from].name, generators[to].name
                )));
            }
            arrows.push(Arrow {
                from,
                to,
                i_drop: i_drop as u32,
                j_drop: j_drop as u32,
            });
        }
        if arrows
            .iter()
            .any(|a| a.i_drop.is_zero() && a.j_drop.is_zero())
        {
            return Err(Error::InvalidComplex(
                "arrow without filtration drop".into(),
            ));
        }
        KnotComplex::new(generators, arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(name: &str, a: i64, m: i64) -> KnotGenerator {
        KnotGenerator {
            name: name.into(),
            alexander: a,
            maslov: qi(m),
        }
    }

    fn trefoil() -> KnotComplex {
        KnotComplex::new(
            vec![gen("a3", 1, 0), gen("a2", 0, -1), gen("a1", -1, -2)],
            vec![
                Arrow {
                    from: 1,
                    to: 0,
                    i_drop: 1,
                    j_drop: 0,
                },
                Arrow {
                    from: 1,
                    to: 2,
                    i_drop: 0,
                    j_drop: 1,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_invariants() {
        let k = trefoil();
        assert_eq!(
            k.euler_characteristic().unwrap(),
            BTreeMap::from([(-1, 1), (0, -1), (1, 1)])
        );
        let v = k.vertical_homology().unwrap();
        assert_eq!(v.field_rank(RingTag::F2), 1);
        assert_eq!(v.finite_gradings(), vec![Some(qi(0))]);
    }

    #[test]
    fn rejects_bad_arrows() {
        let bad = KnotComplex::new(
            vec![gen("x", 0, 0), gen("y", 0, -2)],
            vec![Arrow {
                from: 0,
                to: 1,
                i_drop: 0,
                j_drop: 1,
            }],
        );
        assert!(matches!(bad, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn document_round_trip() {
        let k = trefoil();
        let doc = k.to_doc();
        assert_eq!(doc.generators[0].alexander, Some(1));
        assert_eq!(KnotComplex::from_doc(&doc).unwrap(), k);
    }
}
