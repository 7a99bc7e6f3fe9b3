use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::rational::serde_q;
use crate::rings::{qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CobordismRole {
    F1,
    F2,
    F3,
}

/// Topological data of a 2-handle cobordism in one Spin^c structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismData {
    pub euler: i64,
    pub sigma: i64,
    #[serde(with = "serde_q")]
    pub c1sq: Q,
    pub role: CobordismRole,
}

impl CobordismData {
    /// The 0-framed 2-handle from `S^3` to `S^3_0(K)`, torsion Spin^c structure.
    pub fn zero_surgery() -> Self {
        CobordismData {
            euler: 1,
            sigma: 0,
            c1sq: Q::zero(),
            role: CobordismRole::F1,
        }
    }

    /// The `-1`-framed meridional 2-handle from `S^3_0(K)` to `S^3_1(K)`.
    pub fn zero_to_one() -> Self {
        CobordismData {
            role: CobordismRole::F2,
            ..CobordismData::zero_surgery()
        }
    }

    /// The cobordism from `S^3_1(K)` back to `S^3`, with intersection form
    /// `(-1)`, in the Spin^c structure indexed by `j`.
    pub fn one_to_sphere(j: i64) -> Self {
        CobordismData {
            euler: 1,
            sigma: -1,
            c1sq: c1_square(-1, j).expect("p is nonzero"),
            role: CobordismRole::F3,
        }
    }
}

/// `(c1^2 - 2 chi - 3 sigma) / 4`.
pub fn grading_shift(c: &CobordismData) -> Q {
    (&c.c1sq - qi(2 * c.euler) - qi(3 * c.sigma)) / qi(4)
}

/// `c1(t_j)^2 = (2j + p)^2 / p` for a cobordism with intersection form `(p)`.
pub fn c1_square(p: i64, j: i64) -> Result<Q> {
    if p == 0 {
        return Err(Error::DegenerateForm(
            "intersection form (0) has no inverse".into(),
        ));
    }
    let k = 2 * j + p;
    Ok(Q::new((k * k).into(), p.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::q;

    fn data(euler: i64, sigma: i64, c1sq: Q) -> CobordismData {
        CobordismData {
            euler,
            sigma,
            c1sq,
            role: CobordismRole::F1,
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(grading_shift(&data(1, 0, qi(0))), q(-1, 2));
        assert_eq!(grading_shift(&data(0, 0, qi(0))), qi(0));
        assert_eq!(grading_shift(&data(1, -1, qi(-1))), qi(0));
        assert_eq!(grading_shift(&CobordismData::zero_to_one()), q(-1, 2));
    }

    #[test]
    fn characteristic_squares() {
        assert_eq!(c1_square(-1, 0).unwrap(), qi(-1));
        assert_eq!(c1_square(-1, 1).unwrap(), qi(-1));
        assert_eq!(c1_square(1, 0).unwrap(), qi(1));
        assert_eq!(c1_square(3, 1).unwrap(), q(25, 3));
        assert!(matches!(c1_square(0, 2), Err(Error::DegenerateForm(_))));
    }

    #[test]
    fn third_map_never_raises_grading() {
        for j in -10..=10 {
            let c = CobordismData::one_to_sphere(j);
            assert_eq!(
                grading_shift(&c),
                (c1_square(-1, j).unwrap() + qi(1)) / qi(4)
            );
            assert!(grading_shift(&c) <= qi(0));
        }
    }
}
