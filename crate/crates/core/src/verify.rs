//! The acceptance sweep behind the `verify` command.
//!
//! Every check is deterministic: random inputs come from fixed seeds.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complexes::{homology_dimensions, stabilize, ChainComplex, GradedModule, Summand};
use crate::error::{Error, Result};
use crate::excision::{
    compute_borromean_zero_surgery, compute_twist_knot_zero_surgery, compute_two_bridge,
    compute_whitehead_zero_surgery, kunneth, non_relatedness_check, Family,
};
use crate::knots::{build_thin_complex, large_surgery, SurgeryRequest, ThinKnotSpec};
use crate::matrix::Matrix;
use crate::random::{
    random_complex, random_lambda_u_module, random_matrix, random_thin_spec, Sample,
};
use crate::rings::{
    q, qi, EuclideanDomain, F2Poly, LaurentPoly, Poly, RatFunc, RingTag, TwistClass,
};
use crate::sequences::{c1_square, grading_shift, orientation_reverse, CobordismData};
use crate::snf::smith_normal_form;
use crate::Z;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: u32,
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

type Check = (u32, &'static str, &'static str, fn() -> Result<String>);

const CHECKS: [Check; 10] = [
    (
        1,
        "twist-knot surgery table",
        "large surgery formula, twist knots n = 1..20",
        twist_knot_table,
    ),
    (
        2,
        "twisted 0-surgery",
        "twist knot 0-surgery with Novikov coefficients",
        twisted_zero_surgery,
    ),
    (
        3,
        "Whitehead and Borromean",
        "excision and the Kunneth formula",
        whitehead_borromean,
    ),
    (
        4,
        "two-bridge links",
        "twisted surgery exact sequence for C(m, +-1, n)",
        two_bridge_cases,
    ),
    (
        5,
        "grading arithmetic",
        "grading shift formula for 2-handle cobordisms",
        grading_arithmetic,
    ),
    (
        6,
        "mapping-cone property",
        "free stabilization and its quotient",
        stabilization,
    ),
    (
        7,
        "Smith normal form",
        "Smith normal form over Euclidean domains",
        snf_oracle,
    ),
    (
        8,
        "thin complexes",
        "thin knots: Euler characteristic and vertical homology",
        thin_oracle,
    ),
    (
        9,
        "duality involution",
        "Hom duality under orientation reversal",
        duality_involution,
    ),
    (
        10,
        "non-relatedness",
        "excision obstruction for Whitehead manifolds",
        non_relatedness,
    ),
];

/// Runs all checks in order.
pub fn run_all() -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|&(id, name, anchor, check)| {
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            CheckResult {
                id,
                name: name.into(),
                anchor: anchor.into(),
                passed,
                detail,
            }
        })
        .collect()
}

pub fn render_markdown(results: &[CheckResult]) -> String {
    let mut out = String::from("| # | check | anchor | result | detail |\n|---|---|---|---|---|\n");
    for r in results {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            r.id,
            r.name,
            r.anchor,
            if r.passed { "pass" } else { "FAIL" },
            r.detail.replace('|', "\\|")
        ));
    }
    out
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InconsistentInput(msg()))
    }
}

fn twist_knot_table() -> Result<String> {
    for n in 1..=20 {
        let k = build_thin_complex(&ThinKnotSpec::twist_knot(n)?)?;
        let h = large_surgery(&k, &SurgeryRequest::hat(1, 0))?;
        let dims = h.graded_dimensions(&qi(-100), &qi(100));
        let mut want = BTreeMap::from([(qi(-2), n as usize)]);
        if n > 1 {
            want.insert(qi(-1), n as usize - 1);
        }
        ensure(
            dims == want && h.finite_rank() == 2 * n as usize - 1,
            || format!("n = {n}: got {h}"),
        )?;
    }
    Ok("n = 1..20 give (n-1) at -1 and n at -2".into())
}

fn single_lambda(m: &GradedModule) -> Option<(usize, Option<crate::rings::Q>)> {
    match m.summands.as_slice() {
        [Summand::FreeField {
            ring: RingTag::Lambda,
            rank,
            grading,
            over_u: false,
        }] => Some((*rank, grading.clone())),
        _ => None,
    }
}

fn twisted_zero_surgery() -> Result<String> {
    let w = TwistClass::integer(1);
    for n in (-10..=10).filter(|&n| n != 0) {
        let m = compute_twist_knot_zero_surgery(n, &w)?;
        let ok = matches!(single_lambda(&m), Some((r, Some(_))) if r == n.unsigned_abs() as usize);
        ensure(ok, || format!("n = {n}: got {m}"))?;
    }
    Ok("Lambda^|n| in one grading for 1 <= |n| <= 10".into())
}

fn whitehead_borromean() -> Result<String> {
    let w = TwistClass::integer(1);
    let range: Vec<i64> = (-8..=8).filter(|&n| n != 0).collect();
    for &n in &range {
        let m = compute_whitehead_zero_surgery(n, &w)?;
        ensure(
            single_lambda(&m).map(|x| x.0) == Some(n.unsigned_abs() as usize),
            || format!("W_{n}: got {m}"),
        )?;
    }
    for &m in &range {
        for &n in &range {
            let want = (m * n).unsigned_abs() as usize;
            let b = compute_borromean_zero_surgery(m, n, &w)?;
            ensure(single_lambda(&b).map(|x| x.0) == Some(want), || {
                format!("B({m}, {n}): got {b}")
            })?;
            let lm = GradedModule::new(vec![Summand::free(
                RingTag::Lambda,
                m.unsigned_abs() as usize,
                None,
            )]);
            let ln = GradedModule::new(vec![Summand::free(
                RingTag::Lambda,
                n.unsigned_abs() as usize,
                None,
            )]);
            ensure(
                kunneth(&lm, &ln)?.field_rank(RingTag::Lambda) == want,
                || format!("Kunneth rank for ({m}, {n})"),
            )?;
        }
    }
    Ok("Lambda^|n| and Lambda^|mn| for 1 <= |m|, |n| <= 8".into())
}

fn two_bridge_cases() -> Result<String> {
    let w = TwistClass::integer(1);
    let (mut opposite, mut adjacent) = (0, 0);
    for m in -6..=6i64 {
        for n in -6..=6i64 {
            for clasp in [1, -1] {
                if (Family::TwoBridge { m, clasp, n }).validate().is_err() {
                    continue;
                }
                let out = compute_two_bridge(m, clasp, n, &w)?;
                let rank = out.field_rank(RingTag::Lambda);
                if m == -n {
                    opposite += 1;
                    ensure(rank == (n * n) as usize && out.tower_count() == 0, || {
                        format!("C({m}, {clasp}, {n}): got {out}")
                    })?;
                } else {
                    adjacent += 1;
                    ensure(
                        rank == (m * n).unsigned_abs() as usize && out.tower_count() == 1,
                        || format!("C({m}, {clasp}, {n}): got {out}"),
                    )?;
                }
            }
        }
    }
    Ok(format!(
        "{opposite} cases with m = -n, {adjacent} with |m - n| = 1"
    ))
}

fn grading_arithmetic() -> Result<String> {
    for c in [CobordismData::zero_surgery(), CobordismData::zero_to_one()] {
        ensure(grading_shift(&c) == q(-1, 2), || format!("shift of {c:?}"))?;
    }
    for j in -20..=20 {
        let s = (c1_square(-1, j)? + qi(1)) / qi(4);
        ensure(s <= qi(0), || format!("j = {j}: shift {s}"))?;
    }
    Ok("-1/2 twice; non-increasing for j in [-20, 20]".into())
}

fn stabilization() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let (lo, hi) = (qi(-16), qi(8));
    for i in 0..100 {
        let c: ChainComplex<Poly<RatFunc>> = random_complex(&mut rng, 12);
        let s = stabilize(&c)?;
        let lhs = homology_dimensions(&s.complex, &lo, &hi);
        let rhs = c.homology()?.graded_dimensions(&lo, &hi);
        ensure(lhs == rhs, || format!("complex {i}: {lhs:?} vs {rhs:?}"))?;
    }
    Ok("100 complexes over F2(t)[U_z]".into())
}

/// Rank as the size of the largest nonvanishing minor.
fn minor_rank<R: EuclideanDomain>(m: &Matrix<R>) -> Result<usize> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                if !m.submatrix(&rows, &cols).determinant()?.is_zero() {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

fn snf_ring<R: EuclideanDomain + Sample>(seed: u64, label: &str) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..200 {
        let rows = rand::Rng::gen_range(&mut rng, 1..=6);
        let cols = rand::Rng::gen_range(&mut rng, 1..=6);
        let m: Matrix<R> = random_matrix(&mut rng, rows, cols);
        let f = smith_normal_form(&m);
        let fail = |what: &str| format!("{label} matrix {i}: {what}");
        ensure(&(&f.p * &m) * &f.q == f.d, || fail("P m Q != D"))?;
        ensure(f.d.is_diagonal(), || fail("D is not diagonal"))?;
        ensure(&f.p * &f.p_inv == Matrix::identity(rows), || {
            fail("P is not invertible")
        })?;
        let chain = f.diagonal.windows(2).all(|w| w[0].divides(&w[1]));
        ensure(chain, || fail("divisibility chain"))?;
        ensure(f.rank == minor_rank(&m)?, || fail("rank"))?;
    }
    Ok(())
}

fn snf_oracle() -> Result<String> {
    snf_ring::<Z>(71, "Z")?;
    snf_ring::<F2Poly>(72, "F2[U]")?;
    snf_ring::<LaurentPoly>(73, "L(t)")?;
    snf_ring::<Poly<RatFunc>>(74, "F2(t)[U]")?;
    Ok("200 matrices each over Z, F2[U], L(t), F2(t)[U]".into())
}

fn thin_oracle() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..50 {
        let spec = random_thin_spec(&mut rng);
        let k = build_thin_complex(&spec)?;
        let chi = k.euler_characteristic()?;
        let want: BTreeMap<i64, i64> = spec
            .normalized_coefficients()
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .collect();
        let got: BTreeMap<i64, i64> = chi.into_iter().filter(|&(_, v)| v != 0).collect();
        ensure(got == want, || {
            format!("{spec:?}: Euler characteristic {got:?}")
        })?;
        let v = k.vertical_homology()?;
        let dims = v.graded_dimensions(&qi(-100), &qi(100));
        ensure(dims == BTreeMap::from([(qi(0), 1)]), || {
            format!("{spec:?}: vertical homology {v}")
        })?;
    }
    Ok("50 random thin specs of genus <= 3".into())
}

fn duality_involution() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for i in 0..100 {
        let m = random_lambda_u_module(&mut rng);
        let back = orientation_reverse(&orientation_reverse(&m)?)?;
        ensure(back == m, || format!("module {i}: {m} came back as {back}"))?;
    }
    Ok("100 random Lambda[U]-modules".into())
}

fn non_relatedness() -> Result<String> {
    let mut count = 0;
    for n in (-6..=6).filter(|&n| n != 0) {
        for m in (-6..=6).filter(|&m: &i64| m != 0) {
            let r = non_relatedness_check(n, m)?;
            ensure(r.obstructed == (n.abs() != m.abs()), || r.report.clone())?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs"))
}
