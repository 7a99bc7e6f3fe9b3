use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Alexander polynomial and signature of a thin knot.
///
/// `alexander` lists the symmetrized coefficients `a_s` for `s = -g..=g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThinKnotSpec {
    pub alexander: Vec<i64>,
    pub sigma: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<i64>,
}

impl ThinKnotSpec {
    pub fn new(alexander: Vec<i64>, sigma: i64) -> Result<Self> {
        let spec = ThinKnotSpec {
            alexander,
            sigma,
            tau: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn unknot() -> Self {
        ThinKnotSpec {
            alexander: vec![1],
            sigma: 0,
            tau: None,
        }
    }

    /// The negative-clasped `n`-twisted Whitehead double of the unknot, `n >= 1`.
    pub fn twist_knot(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Spec(format!(
                "twist knot parameter must be positive, got {n}"
            )));
        }
        ThinKnotSpec::new(vec![n, 1 - 2 * n, n], -2)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: ThinKnotSpec = toml::from_str(text).map_err(|e| Error::from_toml(text, e))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ThinKnotSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.alexander;
        if a.len() % 2 == 0 {
            return Err(Error::Spec(format!(
                "alexander list must have odd length, got {}",
                a.len()
            )));
        }
        if a.iter().ne(a.iter().rev()) {
            return Err(Error::Spec(format!(
                "alexander list {a:?} is not symmetric"
            )));
        }
        if self.sigma % 2 != 0 {
            return Err(Error::Spec(format!(
                "signature must be even, got {}",
                self.sigma
            )));
        }
        let at_one: i64 = a.iter().sum();
        if at_one.abs() != 1 {
            return Err(Error::Spec(format!(
                "alexander polynomial has value {at_one} at 1"
            )));
        }
        if let Some(t) = self.tau {
            if t != -self.sigma / 2 {
                return Err(Error::Spec(format!(
                    "tau {t} disagrees with -sigma/2 = {}",
                    -self.sigma / 2
                )));
            }
        }
        Ok(())
    }

    pub fn tau(&self) -> i64 {
        -self.sigma / 2
    }

    /// Largest `s` with `a_s != 0`.
    pub fn genus(&self) -> i64 {
        let g = (self.alexander.len() / 2) as i64;
        (0..=g)
            .rev()
            .find(|&s| self.coefficient(s) != 0)
            .unwrap_or(0)
    }

    pub fn coefficient(&self, s: i64) -> i64 {
        let g = (self.alexander.len() / 2) as i64;
        if s.abs() > g {
            0
        } else {
            self.alexander[(s + g) as usize]
        }
    }

    /// Coefficients normalized so that the polynomial is 1 at `t = 1`.
    pub fn normalized_coefficients(&self) -> Vec<(i64, i64)> {
        let sign = if self.alexander.iter().sum::<i64>() < 0 {
            -1
        } else {
            1
        };
        let g = self.genus();
        (-g..=g).map(|s| (s, sign * self.coefficient(s))).collect()
    }
}
