use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rings::rational::serde_opt_q;
use crate::rings::{qi, RingTag, Q};

/// One indecomposable piece (with multiplicity) of a graded module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Summand {
    /// `ring^rank` in one grading. With `over_u` set this is a free module
    /// over the polynomial ring in `U`, generated in that grading.
    FreeField {
        ring: RingTag,
        rank: usize,
        #[serde(default, with = "serde_opt_q", skip_serializing_if = "Option::is_none")]
        grading: Option<Q>,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        over_u: bool,
    },
    /// `(K[U]/U^exponent)^rank` with generators in grading `top`.
    UTorsion {
        ring: RingTag,
        exponent: u32,
        rank: usize,
        #[serde(default, with = "serde_opt_q", skip_serializing_if = "Option::is_none")]
        top: Option<Q>,
    },
    /// `(R/order)^rank` for rings without a `U` variable.
    Torsion {
        ring: RingTag,
        order: String,
        rank: usize,
        #[serde(default, with = "serde_opt_q", skip_serializing_if = "Option::is_none")]
        grading: Option<Q>,
    },
    /// The `U`-divisible tower, nonzero from `bottom` upward in steps of two.
    Tower {
        #[serde(default, with = "serde_opt_q", skip_serializing_if = "Option::is_none")]
        bottom: Option<Q>,
    },
}

impl Summand {
    pub fn free(ring: RingTag, rank: usize, grading: Option<Q>) -> Self {
        Summand::FreeField {
            ring,
            rank,
            grading,
            over_u: false,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Summand::FreeField { rank, .. }
            | Summand::UTorsion { rank, .. }
            | Summand::Torsion { rank, .. } => *rank,
            Summand::Tower { .. } => 1,
        }
    }

    pub fn grading(&self) -> Option<&Q> {
        match self {
            Summand::FreeField { grading, .. } | Summand::Torsion { grading, .. } => {
                grading.as_ref()
            }
            Summand::UTorsion { top, .. } => top.as_ref(),
            Summand::Tower { bottom } => bottom.as_ref(),
        }
    }

    fn kind_order(&self) -> u8 {
        match self {
            Summand::FreeField { .. } => 0,
            Summand::UTorsion { .. } => 1,
            Summand::Torsion { .. } => 2,
            Summand::Tower { .. } => 3,
        }
    }

    /// Same summand type with multiplicity set to `rank`.
    fn with_rank(&self, r: usize) -> Self {
        let mut s = self.clone();
        match &mut s {
            Summand::FreeField { rank, .. }
            | Summand::UTorsion { rank, .. }
            | Summand::Torsion { rank, .. } => *rank = r,
            Summand::Tower { .. } => {}
        }
        s
    }

    pub fn without_grading(&self) -> Self {
        let mut s = self.clone();
        match &mut s {
            Summand::FreeField { grading, .. } | Summand::Torsion { grading, .. } => {
                *grading = None
            }
            Summand::UTorsion { top, .. } => *top = None,
            Summand::Tower { bottom } => *bottom = None,
        }
        s
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |g: &Option<Q>| g.as_ref().map_or(String::new(), |g| format!(" at {g}"));
        match self {
            Summand::FreeField {
                ring,
                rank,
                grading,
                over_u,
            } => {
                let free = if *over_u { " free" } else { "" };
                write!(f, "{ring}^{rank}{free}{}", at(grading))
            }
            Summand::UTorsion {
                ring,
                exponent,
                rank,
                top,
            } => write!(f, "({ring}/U^{exponent})^{rank}{}", at(top)),
            Summand::Torsion {
                ring,
                order,
                rank,
                grading,
            } => write!(f, "({ring}/({order}))^{rank}{}", at(grading)),
            Summand::Tower { bottom } => match bottom {
                Some(b) => write!(f, "Tower from {b}"),
                None => write!(f, "Tower"),
            },
        }
    }
}

/// Direct sum of summands in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedModule {
    pub summands: Vec<Summand>,
}

impl GradedModule {
    pub fn zero() -> Self {
        GradedModule::default()
    }

    pub fn new(summands: Vec<Summand>) -> Self {
        GradedModule { summands }.canonical()
    }

    /// Merges equal summands and sorts: free, torsion, towers; higher gradings first.
    pub fn canonical(self) -> Self {
        let mut merged: BTreeMap<(u8, Option<Q>, String), (Summand, usize)> = BTreeMap::new();
        let mut towers = Vec::new();
        for s in self.summands {
            if s.rank() == 0 {
                continue;
            }
            if let Summand::Tower { .. } = s {
                towers.push(s);
                continue;
            }
            let neg_grading = s.grading().map(|g| -g.clone());
            let key = (s.kind_order(), neg_grading, s.with_rank(0).to_string());
            merged
                .entry(key)
                .and_modify(|(_, r)| *r += s.rank())
                .or_insert_with(|| (s.clone(), s.rank()));
        }
        let mut summands: Vec<Summand> =
            merged.into_values().map(|(s, r)| s.with_rank(r)).collect();
        towers.sort_by(|a, b| a.grading().cmp(&b.grading()));
        summands.extend(towers);
        GradedModule { summands }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.iter().all(|s| s.rank() == 0)
    }

    /// Total multiplicity of the non-tower summands.
    pub fn finite_rank(&self) -> usize {
        self.summands
            .iter()
            .filter(|s| !matches!(s, Summand::Tower { .. }))
            .map(Summand::rank)
            .sum()
    }

    pub fn tower_count(&self) -> usize {
        self.summands
            .iter()
            .filter(|s| matches!(s, Summand::Tower { .. }))
            .count()
    }

    /// Rank over `ring` of free summands (field-free, not over `U`).
    pub fn field_rank(&self, ring: RingTag) -> usize {
        self.summands
            .iter()
            .map(|s| match s {
                Summand::FreeField {
                    ring: r,
                    rank,
                    over_u: false,
                    ..
                } if *r == ring => *rank,
                _ => 0,
            })
            .sum()
    }

    /// Distinct gradings that carry a summand, ignoring towers.
    pub fn finite_gradings(&self) -> Vec<Option<Q>> {
        let mut gs: Vec<Option<Q>> = self
            .summands
            .iter()
            .filter(|s| !matches!(s, Summand::Tower { .. }))
            .map(|s| s.grading().cloned())
            .collect();
        gs.sort();
        gs.dedup();
        gs
    }

    pub fn without_gradings(&self) -> Self {
        GradedModule::new(self.summands.iter().map(Summand::without_grading).collect())
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Self {
        GradedModule::new(
            self.summands
                .iter()
                .chain(&other.summands)
                .cloned()
                .collect(),
        )
    }

    /// Dimensions over the ground field in gradings `lo..=hi`.
    ///
    /// Free-over-`U` summands and `U`-torsion fill every second grading below
    /// their generator; towers fill every second grading above their bottom.
    /// Summands without a grading are ignored.
    pub fn graded_dimensions(&self, lo: &Q, hi: &Q) -> BTreeMap<Q, usize> {
        let mut out = BTreeMap::new();
        let mut bump = |g: Q, r: usize| {
            if g >= *lo && g <= *hi {
                *out.entry(g).or_insert(0) += r;
            }
        };
        for s in &self.summands {
            match s {
                Summand::FreeField {
                    rank,
                    grading: Some(g),
                    over_u,
                    ..
                } => {
                    if *over_u {
                        let mut x = g.clone();
                        while x >= *lo {
                            bump(x.clone(), *rank);
                            x -= qi(2);
                        }
                    } else {
                        bump(g.clone(), *rank);
                    }
                }
                Summand::UTorsion {
                    exponent,
                    rank,
                    top: Some(g),
                    ..
                } => {
                    for k in 0..*exponent {
                        bump(g - qi(2 * k as i64), *rank);
                    }
                }
                Summand::Torsion {
                    rank,
                    grading: Some(g),
                    ..
                } => bump(g.clone(), *rank),
                Summand::Tower { bottom: Some(b) } => {
                    let mut x = b.clone();
                    while x <= *hi {
                        bump(x.clone(), 1);
                        x += qi(2);
                    }
                }
                _ => {}
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}
