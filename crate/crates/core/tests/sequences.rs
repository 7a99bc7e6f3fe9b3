use proptest::prelude::*;
use twisted_floer::complexes::{GradedModule, Summand};
use twisted_floer::knots::{
    build_thin_complex, large_surgery, twisted_zero_surgery_cone, SurgeryRequest, ThinKnotSpec,
};
use twisted_floer::rings::{q, qi, Q};
use twisted_floer::sequences::{
    grading_shift, novikov_base_change, orientation_reverse, reconstruct_plus, triangle_chase,
    CobordismData, GradedDims, InfinityModel, ShiftBound, TriangleShifts,
};
use twisted_floer::{Error, RingTag, TwistClass};

/// Plus flavor of 0-surgery on the twist knot, assembled step by step.
fn zero_surgery_plus(n: i64) -> GradedModule {
    let k = build_thin_complex(&ThinKnotSpec::twist_knot(n).unwrap()).unwrap();
    let a = GradedDims::from_module(&k.vertical_homology().unwrap()).unwrap();
    let c =
        GradedDims::from_module(&large_surgery(&k, &SurgeryRequest::hat(1, 0)).unwrap()).unwrap();
    let shifts = TriangleShifts {
        f1: grading_shift(&CobordismData::zero_surgery()),
        f2: grading_shift(&CobordismData::zero_to_one()),
        f3: ShiftBound::AtMost(qi(0)),
    };
    let b = triangle_chase(&a, &c, &shifts)
        .unwrap()
        .assume_torsion_only();
    let inf = InfinityModel {
        bottom: q(-1, 2),
        trivial_t_action: true,
    };
    reconstruct_plus(&b, Some(&inf)).unwrap()
}

#[test]
fn base_change_agrees_with_the_twisted_cone() {
    for n in 1..=10 {
        let plus = zero_surgery_plus(n);
        let k = build_thin_complex(&ThinKnotSpec::twist_knot(n).unwrap()).unwrap();
        for d in [1, 2, -3] {
            let twisted = novikov_base_change(&plus, &TwistClass::integer(d)).unwrap();
            let cone = twisted_zero_surgery_cone(&k, d)
                .unwrap()
                .homology()
                .unwrap();
            let cone_rank: usize = cone.summands.iter().map(Summand::rank).sum();
            assert_eq!(
                twisted.field_rank(RingTag::Lambda),
                cone_rank,
                "n = {n}, d = {d}"
            );
            assert_eq!(cone_rank, n as usize);
        }
    }
}

#[test]
fn base_change_needs_a_nonzero_class() {
    assert!(matches!(
        novikov_base_change(&zero_surgery_plus(2), &TwistClass::integer(0)),
        Err(Error::ZeroTwist)
    ));
}

fn dims() -> impl Strategy<Value = GradedDims> {
    proptest::collection::btree_map(-8i64..8, 1usize..4, 0..4).prop_map(|m| {
        GradedDims::from_entries(m.into_iter().map(|(g, d)| (q(g, 2), RingTag::F2, d))).unwrap()
    })
}

fn module() -> impl Strategy<Value = GradedModule> {
    let summand = (any::<bool>(), 1u32..4, 1usize..4, -12i64..12).prop_map(|(torsion, k, r, g)| {
        let grading = Some(q(g, 4));
        if torsion {
            Summand::UTorsion {
                ring: RingTag::LambdaU,
                exponent: k,
                rank: r,
                top: grading,
            }
        } else {
            Summand::FreeField {
                ring: RingTag::LambdaU,
                rank: r,
                grading,
                over_u: true,
            }
        }
    });
    proptest::collection::vec(summand, 0..5).prop_map(GradedModule::new)
}

fn twisted_module() -> impl Strategy<Value = GradedModule> {
    let summand = (0u8..3, 1usize..4, -6i64..6).prop_map(|(kind, r, g)| match kind {
        0 => Summand::free(RingTag::Laurent, r, Some(q(g, 2))),
        1 => Summand::free(RingTag::F2, r, Some(qi(g))),
        _ => Summand::Tower {
            bottom: Some(q(g, 2)),
        },
    });
    proptest::collection::vec(summand, 0..5).prop_map(GradedModule::new)
}

proptest! {
    #[test]
    fn chase_conserves_total_dimension(a in dims(), c in dims(), f1 in -4i64..4, f2 in -4i64..4, f3 in -12i64..2) {
        let shifts = TriangleShifts {
            f1: q(f1, 2),
            f2: q(f2, 2),
            f3: ShiftBound::AtMost(qi(f3)),
        };
        match triangle_chase(&a, &c, &shifts) {
            Ok(b) => prop_assert_eq!(b.total(), a.total() + c.total()),
            Err(e) => prop_assert!(matches!(e, Error::AmbiguousTriangle(_)), "{}", e),
        }
    }

    #[test]
    fn orientation_reverse_is_an_involution(m in module()) {
        let once = orientation_reverse(&m).unwrap();
        prop_assert_eq!(orientation_reverse(&once).unwrap(), m);
    }

    #[test]
    fn base_change_is_additive(a in twisted_module(), b in twisted_module(), d in 1i64..4) {
        let w = TwistClass::integer(d);
        let sum = novikov_base_change(&a.direct_sum(&b), &w).unwrap();
        let parts = novikov_base_change(&a, &w).unwrap().direct_sum(&novikov_base_change(&b, &w).unwrap());
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn base_change_keeps_exactly_the_twisted_part(m in twisted_module()) {
        let out = novikov_base_change(&m, &TwistClass::integer(1)).unwrap();
        prop_assert_eq!(out.field_rank(RingTag::Lambda), m.field_rank(RingTag::Laurent));
        prop_assert_eq!(out.tower_count(), 0);
    }
}

#[test]
fn shifted_dims_move_every_grading() {
    let d = GradedDims::from_entries([(qi(0), RingTag::F2, 2), (qi(-1), RingTag::F2, 1)]).unwrap();
    let s = d.shifted(&q(-1, 2));
    let support: Vec<Q> = s.support().cloned().collect();
    assert_eq!(support, vec![q(-3, 2), q(-1, 2)]);
    assert_eq!(s.total(), 3);
}
