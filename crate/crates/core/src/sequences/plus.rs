use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::dims::GradedDims;
use crate::complexes::{GradedModule, Summand};
use crate::error::{Error, Result};
use crate::rings::rational::serde_q;
use crate::rings::{qi, RingTag, Q};

/// Declared form of `HF∞` in one Spin^c structure: a single bi-infinite
/// `U`-line whose image in the plus flavor starts at `bottom`.
///
/// This is an input, not something computed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityModel {
    #[serde(with = "serde_q")]
    pub bottom: Q,
    /// `t` acts as the identity on the line.
    pub trivial_t_action: bool,
}

fn is_quarter(g: &Q) -> bool {
    (g * qi(4)).is_integer()
}

/// `HF⁺` from `ĤF` and the tower.
///
/// The reduced part is assumed to be killed by `U`. In the sequence
/// `ĤF_k -> HF⁺_k -> HF⁺_{k-2} -> ĤF_{k-1}` this gives
/// `dim ĤF_k = r_k + r_{k-1} + [k = bottom]`, solved from the top down.
/// A tower with trivial `t`-action has rank zero over `L(t)` and drops out of
/// that count. Anything left over or negative is inconsistent input.
pub fn reconstruct_plus(hat: &GradedDims, inf: Option<&InfinityModel>) -> Result<GradedModule> {
    if hat.is_empty() {
        return match inf {
            None => Ok(GradedModule::zero()),
            Some(_) => Err(Error::InconsistentInput(
                "a tower needs a nonzero hat group below it".into(),
            )),
        };
    }
    let Some(inf) = inf else {
        return Err(Error::InconsistentInput(
            "nonzero hat group without an infinity model".into(),
        ));
    };
    if !hat.torsion_only {
        return Err(Error::HypothesisNotMet(
            "hat group is not declared to live in the torsion Spin^c structure".into(),
        ));
    }
    if !is_quarter(&inf.bottom) {
        return Err(Error::InconsistentInput(format!(
            "tower bottom {} does not have denominator dividing 4",
            inf.bottom
        )));
    }
    let ring = hat
        .ring()
        .ok_or_else(|| Error::InconsistentInput("hat group mixes coefficient rings".into()))?;
    if let Some(g) = hat.support().find(|g| !(*g - &inf.bottom).is_integer()) {
        return Err(Error::InconsistentInput(format!(
            "hat grading {g} and tower bottom {} differ by a non-integer",
            inf.bottom
        )));
    }
    let tower_rank = usize::from(!(inf.trivial_t_action && ring == RingTag::Laurent));
    let lo = hat.support().next().expect("nonempty").clone();
    let hi = hat.support().next_back().expect("nonempty").clone();

    let mut reduced: BTreeMap<Q, usize> = BTreeMap::new();
    let mut above: i64 = 0;
    let mut k = &hi + Q::one();
    while k >= lo {
        let tower = if k == inf.bottom {
            tower_rank as i64
        } else {
            0
        };
        let below = hat.get(&k) as i64 - tower - above;
        if below < 0 {
            return Err(Error::InconsistentInput(format!(
                "hat group at grading {k} is too small for the tower and reduced part"
            )));
        }
        let g = &k - Q::one();
        if below > 0 {
            reduced.insert(g.clone(), below as usize);
        }
        above = below;
        k = g;
    }
    if above != 0 {
        return Err(Error::InconsistentInput(format!(
            "reduced part would reach below the hat support at grading {}",
            &lo - Q::one()
        )));
    }
    let mut summands: Vec<Summand> = reduced
        .into_iter()
        .map(|(g, r)| Summand::free(ring, r, Some(g)))
        .collect();
    summands.push(Summand::Tower {
        bottom: Some(inf.bottom.clone()),
    });
    Ok(GradedModule::new(summands))
}
