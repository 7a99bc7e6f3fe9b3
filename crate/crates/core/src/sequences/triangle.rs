use super::dims::GradedDims;
use crate::error::{Error, Result};
use crate::rings::{RingTag, Q};

/// What is known about the grading shift of a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftBound {
    Exact(Q),
    AtMost(Q),
}

/// Shifts of `f1: A -> B`, `f2: B -> C` and `f3: C -> A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleShifts {
    pub f1: Q,
    pub f2: Q,
    pub f3: ShiftBound,
}

fn over_group_ring(ring: RingTag) -> Result<RingTag> {
    match ring {
        RingTag::F2 | RingTag::Integers | RingTag::Laurent => Ok(RingTag::Laurent),
        other => Err(Error::Unsupported(format!(
            "cannot induce a module over L(t) from {other}"
        ))),
    }
}

/// Dimensions of `B` in an exact triangle `A -> B -> C -> A` whose third
/// map is zero for grading reasons.
///
/// `f3` must be forced to vanish: no grading of `C`, moved by any shift
/// `f3` allows, may land in the support of `A`. Then
/// `dim B[g] = dim A[g - f1] + dim C[g + f2]`, both parts induced up to `L(t)`.
pub fn triangle_chase(
    a: &GradedDims,
    c: &GradedDims,
    shifts: &TriangleShifts,
) -> Result<GradedDims> {
    for gc in c.support() {
        let hit = match &shifts.f3 {
            ShiftBound::Exact(s) => a.get(&(gc + s)) > 0,
            ShiftBound::AtMost(s) => a.support().next().is_some_and(|lo| *lo <= gc + s),
        };
        if hit {
            return Err(Error::AmbiguousTriangle(format!(
                "the third map may be nonzero on grading {gc}"
            )));
        }
    }
    let mut b = GradedDims::new();
    for (g, ring, dim) in a.iter() {
        b.add(g + &shifts.f1, over_group_ring(ring)?, dim)?;
    }
    for (g, ring, dim) in c.iter() {
        b.add(g - &shifts.f2, over_group_ring(ring)?, dim)?;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{q, qi};

    fn shifts() -> TriangleShifts {
        TriangleShifts {
            f1: q(-1, 2),
            f2: q(-1, 2),
            f3: ShiftBound::AtMost(qi(0)),
        }
    }

    fn f2(entries: &[(Q, usize)]) -> GradedDims {
        GradedDims::from_entries(entries.iter().map(|(g, d)| (g.clone(), RingTag::F2, *d))).unwrap()
    }

    #[test]
    fn twist_knot_chase() {
        let a = f2(&[(qi(0), 1)]);
        let c = f2(&[(qi(-1), 1), (qi(-2), 2)]);
        let b = triangle_chase(&a, &c, &shifts()).unwrap();
        let expected = GradedDims::from_entries([
            (q(-1, 2), RingTag::Laurent, 2),
            (q(-3, 2), RingTag::Laurent, 2),
        ])
        .unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn empty_third_terms() {
        let a = f2(&[(qi(0), 1), (qi(-2), 3)]);
        let b = triangle_chase(&a, &GradedDims::new(), &shifts()).unwrap();
        assert_eq!(b.get(&q(-1, 2)), 1);
        assert_eq!(b.get(&q(-5, 2)), 3);
        let c = f2(&[(qi(-1), 2)]);
        let b = triangle_chase(&GradedDims::new(), &c, &shifts()).unwrap();
        assert_eq!(
            b.iter().collect::<Vec<_>>(),
            vec![(&q(-1, 2), RingTag::Laurent, 2)]
        );
    }

    #[test]
    fn refuses_ambiguous_triangles() {
        let a = f2(&[(qi(-3), 1)]);
        let c = f2(&[(qi(-1), 1)]);
        assert!(matches!(
            triangle_chase(&a, &c, &shifts()),
            Err(Error::AmbiguousTriangle(_))
        ));
        let exact = TriangleShifts {
            f3: ShiftBound::Exact(qi(-2)),
            ..shifts()
        };
        assert!(triangle_chase(&a, &c, &exact).is_err());
        let exact = TriangleShifts {
            f3: ShiftBound::Exact(qi(-1)),
            ..shifts()
        };
        assert_eq!(triangle_chase(&a, &c, &exact).unwrap().total(), 2);
    }
}
