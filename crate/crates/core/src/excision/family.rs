use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::rational::serde_q;
use crate::rings::{qi, TwistClass, Q};

/// The manifold families, all obtained by 0-surgery.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `S^3_0` of the twist knot `D_-(U, n)`; negative `n` is the mirror `D_+(U, n)`.
    TwistKnotZeroSurgery { n: i64 },
    /// `S^3_0` of the `n`-twisted Whitehead link.
    WhiteheadZeroSurgery { n: i64 },
    /// `S^3_0` of the `(m, n)`-twisted Borromean rings.
    BorromeanZeroSurgery { m: i64, n: i64 },
    /// `S^3_0` of the 2-bridge link `C(m, clasp, n)`.
    TwoBridge { m: i64, clasp: i64, n: i64 },
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::TwistKnotZeroSurgery { n } => format!("S^3_0(twist knot, n = {n})"),
            Family::WhiteheadZeroSurgery { n } => format!("S^3_0(W_{n})"),
            Family::BorromeanZeroSurgery { m, n } => format!("S^3_0(B({m}, {n}))"),
            Family::TwoBridge { m, clasp, n } => format!("S^3_0(C({m}, {clasp}, {n}))"),
        }
    }

    /// Parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let nonzero = |name: &str, v: i64| {
            if v == 0 {
                Err(Error::FamilyOutOfScope(format!(
                    "{} needs {name} != 0",
                    self.name()
                )))
            } else {
                Ok(())
            }
        };
        match *self {
            Family::TwistKnotZeroSurgery { n } | Family::WhiteheadZeroSurgery { n } => {
                nonzero("n", n)
            }
            Family::BorromeanZeroSurgery { m, n } => {
                nonzero("m", m)?;
                nonzero("n", n)
            }
            Family::TwoBridge { m, clasp, n } => {
                nonzero("m", m)?;
                nonzero("n", n)?;
                if clasp.abs() != 1 {
                    return Err(Error::FamilyOutOfScope(format!(
                        "clasp must be 1 or -1, got {clasp}"
                    )));
                }
                if m != -n && (m - n).abs() != 1 {
                    return Err(Error::FamilyOutOfScope(format!(
                        "{} needs m = -n or |m - n| = 1",
                        self.name()
                    )));
                }
                Ok(())
            }
        }
    }
}

/// Description of the twisting class: which curve it is dual to, and its weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub curve: String,
    #[serde(with = "serde_q")]
    pub weight: Q,
}

impl TwistSpec {
    pub fn class(&self) -> TwistClass {
        TwistClass::new(self.weight.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    pub twist: TwistSpec,
}

impl FamilySpec {
    /// The family with its standard twisting curve at weight `d`.
    pub fn new(family: Family, weight: Q) -> Self {
        let curve = match family {
            Family::TwistKnotZeroSurgery { .. } => "dual of the capped Seifert torus",
            Family::WhiteheadZeroSurgery { .. } => "dual of the capped Seifert torus T",
            Family::BorromeanZeroSurgery { .. } => "eta",
            Family::TwoBridge { .. } => "eta, meridian of the red component",
        };
        FamilySpec {
            family,
            twist: TwistSpec {
                curve: curve.into(),
                weight,
            },
        }
    }

    pub fn with_integer_weight(family: Family, d: i64) -> Self {
        FamilySpec::new(family, qi(d))
    }

    pub fn validate(&self) -> Result<()> {
        self.family.validate()?;
        self.twist.class().require_nonzero()
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: FamilySpec = toml::from_str(text).map_err(|e| Error::from_toml(text, e))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: FamilySpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }
}
