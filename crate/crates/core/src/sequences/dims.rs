use std::collections::BTreeMap;
use std::fmt;

use crate::complexes::{GradedModule, Summand};
use crate::error::{Error, Result};
use crate::rings::{RingTag, Q};

/// Dimension table: grading to (ring, rank) of a free module in that grading.
///
/// `torsion_only` records a caller's declaration that the group lives
/// entirely in the torsion Spin^c structure. Nothing here checks it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDims {
    entries: BTreeMap<Q, (RingTag, usize)>,
    pub torsion_only: bool,
}

impl GradedDims {
    pub fn new() -> Self {
        GradedDims::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (Q, RingTag, usize)>>(it: I) -> Result<Self> {
        let mut d = GradedDims::new();
        for (g, ring, dim) in it {
            d.add(g, ring, dim)?;
        }
        Ok(d)
    }

    /// The same table with `torsion_only` set.
    pub fn assume_torsion_only(mut self) -> Self {
        self.torsion_only = true;
        self
    }

    pub fn add(&mut self, g: Q, ring: RingTag, dim: usize) -> Result<()> {
        if dim == 0 {
            return Ok(());
        }
        match self.entries.get_mut(&g) {
            Some((r, d)) if *r == ring => *d += dim,
            Some((r, _)) => {
                return Err(Error::InconsistentInput(format!(
                    "grading {g} carries both {r} and {ring}"
                )))
            }
            None => {
                self.entries.insert(g, (ring, dim));
            }
        }
        Ok(())
    }

    pub fn get(&self, g: &Q) -> usize {
        self.entries.get(g).map_or(0, |e| e.1)
    }

    pub fn ring_at(&self, g: &Q) -> Option<RingTag> {
        self.entries.get(g).map(|e| e.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Q, RingTag, usize)> {
        self.entries.iter().map(|(g, (r, d))| (g, *r, *d))
    }

    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Q> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> usize {
        self.entries.values().map(|e| e.1).sum()
    }

    /// The single ring carried by every grading, if there is one.
    pub fn ring(&self) -> Option<RingTag> {
        let mut rings = self.entries.values().map(|e| e.0);
        let first = rings.next()?;
        rings.all(|r| r == first).then_some(first)
    }

    pub fn shifted(&self, by: &Q) -> Self {
        GradedDims {
            entries: self.entries.iter().map(|(g, e)| (g + by, *e)).collect(),
            torsion_only: self.torsion_only,
        }
    }

    /// Reads field summands with gradings; anything else is unsupported.
    pub fn from_module(m: &GradedModule) -> Result<Self> {
        let mut d = GradedDims::new();
        for s in &m.summands {
            match s {
                Summand::FreeField {
                    ring,
                    rank,
                    grading: Some(g),
                    over_u: false,
                } => d.add(g.clone(), *ring, *rank)?,
                other => {
                    return Err(Error::Unsupported(format!(
                        "summand {other} is not a graded vector space"
                    )))
                }
            }
        }
        Ok(d)
    }

    pub fn to_module(&self) -> GradedModule {
        GradedModule::new(
            self.entries
                .iter()
                .map(|(g, (r, d))| Summand::free(*r, *d, Some(g.clone())))
                .collect(),
        )
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .rev()
            .map(|(g, (r, d))| format!("{g}: {r}^{d}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{q, qi};

    #[test]
    fn module_round_trip() {
        let d = GradedDims::from_entries([
            (q(-1, 2), RingTag::Laurent, 2),
            (q(-3, 2), RingTag::Laurent, 2),
        ])
        .unwrap();
        assert_eq!(GradedDims::from_module(&d.to_module()).unwrap(), d);
        assert_eq!(d.total(), 4);
        assert_eq!(d.to_string(), "{-1/2: L(t)^2, -3/2: L(t)^2}");
    }

    #[test]
    fn mixed_rings_rejected() {
        let mut d = GradedDims::new();
        d.add(qi(0), RingTag::F2, 1).unwrap();
        assert!(matches!(
            d.add(qi(0), RingTag::Laurent, 1),
            Err(Error::InconsistentInput(_))
        ));
        let tower = GradedModule::new(vec![Summand::Tower { bottom: None }]);
        assert!(matches!(
            GradedDims::from_module(&tower),
            Err(Error::Unsupported(_))
        ));
    }
}
