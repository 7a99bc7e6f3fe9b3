use crate::complexes::{GradedModule, Summand};
use crate::error::{Error, Result};
use crate::rings::{qi, RingTag, TwistClass};

/// `M ⊗_{L(t)} Λ` together with `Tor_1(M, Λ)`, where `t` acts on `Λ` by `t^d`.
///
/// Free `L(t)` summands become free over `Λ` of the same rank and grading.
/// Summands on which `t` acts trivially, towers included, are killed by the
/// unit `t^d - 1`, so both the tensor product and `Tor_1` vanish on them.
pub fn novikov_base_change(m: &GradedModule, omega: &TwistClass) -> Result<GradedModule> {
    omega.require_nonzero()?;
    let mut out = Vec::new();
    for s in &m.summands {
        match s {
            Summand::FreeField {
                ring: RingTag::Laurent | RingTag::RatFunc | RingTag::Lambda,
                rank,
                grading,
                over_u,
            } => out.push(Summand::FreeField {
                ring: RingTag::Lambda,
                rank: *rank,
                grading: grading.clone(),
                over_u: *over_u,
            }),
            Summand::FreeField {
                ring: RingTag::F2 | RingTag::Integers,
                ..
            }
            | Summand::Tower { .. } => {}
            Summand::Torsion {
                ring: RingTag::Laurent,
                order,
                ..
            } if order != "0" => {}
            Summand::UTorsion {
                ring: RingTag::RatFuncU | RingTag::LambdaU,
                exponent,
                rank,
                top,
            } => out.push(Summand::UTorsion {
                ring: RingTag::LambdaU,
                exponent: *exponent,
                rank: *rank,
                top: top.clone(),
            }),
            other => {
                return Err(Error::Unsupported(format!(
                    "summand {other} is neither free over L(t) nor t-trivial"
                )))
            }
        }
    }
    Ok(GradedModule::new(out))
}

/// Homology of the Hom-dual complex, read off from the homology of the
/// original.
///
/// Free summands over `U` dualize to free summands in the negated grading.
/// A summand `K[U]/U^k` with top `g` contributes `Ext^1`, again `K[U]/U^k`,
/// with top `2k - 1 - g`. Vector spaces over a field are read as `U`-torsion
/// of exponent one. The map is an involution.
pub fn orientation_reverse(m: &GradedModule) -> Result<GradedModule> {
    let mut out = Vec::new();
    for s in &m.summands {
        let dual = match s {
            Summand::FreeField {
                ring,
                rank,
                grading,
                over_u,
            } => Summand::FreeField {
                ring: *ring,
                rank: *rank,
                grading: grading
                    .as_ref()
                    .map(|g| if *over_u { -g } else { qi(1) - g }),
                over_u: *over_u,
            },
            Summand::UTorsion {
                ring,
                exponent,
                rank,
                top,
            } => Summand::UTorsion {
                ring: *ring,
                exponent: *exponent,
                rank: *rank,
                top: top.as_ref().map(|g| qi(2 * *exponent as i64 - 1) - g),
            },
            Summand::Tower { .. } => {
                return Err(Error::Unsupported(
                    "duality of towers is only defined for the minus flavor".into(),
                ))
            }
            Summand::Torsion { .. } => {
                return Err(Error::Unsupported(
                    "duality needs a U action; torsion over a ring without U given".into(),
                ))
            }
        };
        out.push(dual);
    }
    Ok(GradedModule::new(out))
}
