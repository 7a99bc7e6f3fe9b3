use serde::{Deserialize, Serialize};

use crate::complexes::{GradedModule, Summand};
use crate::error::{Error, Result};

/// Cutting along genus-one surfaces and regluing, recorded as metadata.
///
/// `source` and `target` name the pieces; more than one name means a
/// disjoint union. The topology is not checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcisionMove {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub genus_one: bool,
    /// The twisting classes restrict to the same nonzero class on the cut surfaces.
    pub omega_compatible: bool,
    pub note: String,
}

impl ExcisionMove {
    pub fn identity(name: &str) -> Self {
        ExcisionMove {
            source: vec![name.into()],
            target: vec![name.into()],
            genus_one: true,
            omega_compatible: true,
            note: "trivial move".into(),
        }
    }

    /// Regluing the capped Seifert torus of the twist knot by a Dehn twist.
    pub fn twist_knot_to_whitehead(n: i64) -> Self {
        ExcisionMove {
            source: vec![format!("S^3_0(twist knot, n = {n})")],
            target: vec![format!("S^3_0(W_{n})")],
            genus_one: true,
            omega_compatible: true,
            note: "0-surgery on lambda composes the identification with a Dehn twist".into(),
        }
    }

    /// Cutting the Borromean manifold along two tori into two Whitehead manifolds.
    pub fn borromean_split(m: i64, n: i64) -> Self {
        ExcisionMove {
            source: vec![format!("S^3_0(B({m}, {n}))")],
            target: vec![format!("S^3_0(W_{n})"), format!("S^3_0(W_{m})")],
            genus_one: true,
            omega_compatible: true,
            note: "splice decomposition along Sigma_1 and Sigma_2".into(),
        }
    }

    pub fn inverse(&self) -> Self {
        ExcisionMove {
            source: self.target.clone(),
            target: self.source.clone(),
            ..self.clone()
        }
    }
}

/// Twisted Floer homology is unchanged by the move; gradings are dropped
/// because the isomorphism carries no grading information.
///
/// When `move` starts from a disjoint union, `m` is the tensor product of
/// the pieces, as produced by [`kunneth`].
pub fn apply_excision(m: &GradedModule, mv: &ExcisionMove) -> Result<GradedModule> {
    if !mv.genus_one {
        return Err(Error::HypothesisNotMet(format!(
            "move {} -> {} is not along genus-one surfaces",
            mv.source.join(" + "),
            mv.target.join(" + ")
        )));
    }
    if !mv.omega_compatible {
        return Err(Error::HypothesisNotMet(format!(
            "twisting classes of {} and {} are not declared compatible",
            mv.source.join(" + "),
            mv.target.join(" + ")
        )));
    }
    Ok(m.without_gradings())
}

fn field_pieces(
    m: &GradedModule,
) -> Result<Vec<(crate::rings::RingTag, usize, Option<crate::rings::Q>)>> {
    m.summands
        .iter()
        .map(|s| match s {
            Summand::FreeField {
                ring,
                rank,
                grading,
                over_u: false,
            } if ring.is_field() => Ok((*ring, *rank, grading.clone())),
            other => Err(Error::Unsupported(format!(
                "Kunneth formula needs vector spaces over a field, got {other}"
            ))),
        })
        .collect()
}

/// Graded tensor product over a field: ranks multiply, gradings add.
pub fn kunneth(a: &GradedModule, b: &GradedModule) -> Result<GradedModule> {
    let (pa, pb) = (field_pieces(a)?, field_pieces(b)?);
    let mut out = Vec::new();
    for (ra, na, ga) in &pa {
        for (rb, nb, gb) in &pb {
            if ra != rb {
                return Err(Error::Unsupported(format!(
                    "tensor product of {ra} and {rb}"
                )));
            }
            let g = match (ga, gb) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            };
            out.push(Summand::free(*ra, na * nb, g));
        }
    }
    Ok(GradedModule::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{q, qi, RingTag};

    fn lambda(n: usize, g: Option<crate::rings::Q>) -> GradedModule {
        GradedModule::new(vec![Summand::free(RingTag::Lambda, n, g)])
    }

    #[test]
    fn kunneth_examples() {
        let p = kunneth(&lambda(3, None), &lambda(4, None)).unwrap();
        assert_eq!(p, lambda(12, None));
        assert!(kunneth(&GradedModule::zero(), &lambda(5, None))
            .unwrap()
            .is_zero());
        let g = kunneth(&lambda(1, Some(q(-3, 2))), &lambda(1, Some(qi(2)))).unwrap();
        assert_eq!(g, lambda(1, Some(q(1, 2))));
        let tower = GradedModule::new(vec![Summand::Tower { bottom: None }]);
        assert!(matches!(
            kunneth(&tower, &lambda(1, None)),
            Err(Error::Unsupported(_))
        ));
        let laurent = GradedModule::new(vec![Summand::free(RingTag::Laurent, 1, None)]);
        assert!(kunneth(&laurent, &laurent).is_err());
    }

    #[test]
    fn excision_checks_flags() {
        let m = lambda(2, Some(q(-3, 2)));
        assert_eq!(
            apply_excision(&m, &ExcisionMove::twist_knot_to_whitehead(2)).unwrap(),
            lambda(2, None)
        );
        assert_eq!(
            apply_excision(&lambda(1, None), &ExcisionMove::identity("Y")).unwrap(),
            lambda(1, None)
        );
        let mut mv = ExcisionMove::borromean_split(1, 2);
        mv.omega_compatible = false;
        assert!(matches!(
            apply_excision(&m, &mv),
            Err(Error::HypothesisNotMet(_))
        ));
        mv.omega_compatible = true;
        mv.genus_one = false;
        assert!(matches!(
            apply_excision(&m, &mv.inverse()),
            Err(Error::HypothesisNotMet(_))
        ));
    }
}
