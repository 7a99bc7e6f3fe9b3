use std::fmt::Display;

use serde::{Deserialize, Serialize};

use super::family::{Family, FamilySpec};
use super::moves::{apply_excision, kunneth, ExcisionMove};
use crate::complexes::{GradedModule, Summand};
use crate::error::{Error, Result};
use crate::knots::{
    build_thin_complex, large_surgery, twisted_zero_surgery_cone, SurgeryRequest, ThinKnotSpec,
};
use crate::rings::{qi, RingTag, TwistClass, Q};
use crate::sequences::{
    grading_shift, novikov_base_change, orientation_reverse, reconstruct_plus, triangle_chase,
    CobordismData, GradedDims, InfinityModel, ShiftBound, TriangleShifts,
};

/// One step of a pipeline run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationStep {
    pub step: String,
    /// The result the step relies on, by name.
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub input_summary: String,
    pub output_summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DerivationLog {
    steps: Vec<DerivationStep>,
}

impl DerivationLog {
    pub fn new() -> Self {
        DerivationLog::default()
    }

    fn record(&mut self, step: &str, anchor: &str, input: impl Display, output: impl Display) {
        self.steps.push(DerivationStep {
            step: step.into(),
            anchor: anchor.into(),
            input_summary: input.to_string(),
            output_summary: output.to_string(),
        });
    }

    pub fn steps(&self) -> &[DerivationStep] {
        &self.steps
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.steps).expect("log serializes")
    }
}

/// Result of running a family pipeline, with its log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub spec: FamilySpec,
    pub result: GradedModule,
    pub log: DerivationLog,
}

impl Derivation {
    /// Reruns the pipeline from the recorded spec and compares everything.
    pub fn replay(&self) -> Result<bool> {
        Ok(derive(&self.spec)? == *self)
    }
}

pub fn derive(spec: &FamilySpec) -> Result<Derivation> {
    spec.validate()?;
    let omega = spec.twist.class();
    let mut log = DerivationLog::new();
    let result = match spec.family {
        Family::TwistKnotZeroSurgery { n } => twist_knot(n, &omega, &mut log)?,
        Family::WhiteheadZeroSurgery { n } => whitehead(n, &omega, &mut log)?,
        Family::BorromeanZeroSurgery { m, n } => borromean(m, n, &omega, &mut log)?,
        Family::TwoBridge { m, clasp, n } => two_bridge(m, clasp, n, &omega, &mut log)?,
    };
    Ok(Derivation {
        spec: spec.clone(),
        result,
        log,
    })
}

fn tower_bottom(m: &GradedModule) -> Result<Q> {
    match m.summands.as_slice() {
        [Summand::Tower { bottom: Some(b) }] => Ok(b.clone()),
        _ => Err(Error::InconsistentInput(format!(
            "expected a single tower for S^3, got {m}"
        ))),
    }
}

fn twist_knot(n: i64, omega: &TwistClass, log: &mut DerivationLog) -> Result<GradedModule> {
    Family::TwistKnotZeroSurgery { n }.validate()?;
    omega.require_nonzero()?;
    let spec = ThinKnotSpec::twist_knot(n.abs())?;
    let k = build_thin_complex(&spec)?;
    log.record(
        "thin complex",
        "thin knots: CFK determined by tau and the Alexander polynomial",
        format!("alexander {:?}, sigma {}", spec.alexander, spec.sigma),
        format!("{} generators, {} arrows", k.len(), k.arrows().len()),
    );

    let a = GradedDims::from_module(&k.vertical_homology()?)?;
    log.record(
        "hat of S^3",
        "homology of the column C{i = 0}",
        "vertical arrows",
        &a,
    );
    let c = GradedDims::from_module(&large_surgery(&k, &SurgeryRequest::hat(1, 0))?)?;
    log.record(
        "hat of +1 surgery",
        "large surgery formula",
        "p = 1, s = 0",
        &c,
    );

    let f3 = (-20..=20)
        .map(|j| grading_shift(&CobordismData::one_to_sphere(j)))
        .max()
        .expect("nonempty range");
    let shifts = TriangleShifts {
        f1: grading_shift(&CobordismData::zero_surgery()),
        f2: grading_shift(&CobordismData::zero_to_one()),
        f3: ShiftBound::AtMost(f3.clone()),
    };
    log.record(
        "grading shifts",
        "grading shift formula (c1^2 - 2 chi - 3 sigma) / 4",
        "chi = 1; sigma = 0, 0, -1; c1^2 = 0, 0, (2j - 1)^2 / (-1)",
        format!("f1 {}, f2 {}, f3 <= {f3}", shifts.f1, shifts.f2),
    );
    let b = triangle_chase(&a, &c, &shifts)?;
    log.record(
        "exact triangle",
        "surgery exact triangle; f3 vanishes for grading reasons",
        format!("A = {a}, C = {c}"),
        &b,
    );
    let b = b.assume_torsion_only();
    log.record(
        "torsion Spin^c structure",
        "adjunction inequality (declared, not verified)",
        "genus one capped Seifert surface",
        "only the torsion Spin^c structure survives",
    );

    let unknot = build_thin_complex(&ThinKnotSpec::unknot())?;
    let sphere = large_surgery(&unknot, &SurgeryRequest::plus(1, 0))?;
    let inf = InfinityModel {
        bottom: tower_bottom(&sphere)? + &shifts.f1,
        trivial_t_action: true,
    };
    log.record(
        "infinity model",
        "HF-infinity of the torsion Spin^c structure with trivial t action (declared)",
        format!("HF+(S^3) = {sphere}, shifted by f1"),
        format!("tower from {}", inf.bottom),
    );
    let plus = reconstruct_plus(&b, Some(&inf))?;
    log.record(
        "plus flavor",
        "long exact sequence relating hat and plus",
        &b,
        &plus,
    );

    let twisted = novikov_base_change(&plus, omega)?;
    log.record(
        "Novikov coefficients",
        "universal coefficient theorem; Tor_1 vanishes",
        format!("{plus}; t acts by t^{}", omega.weight),
        &twisted,
    );
    if n > 0 {
        return Ok(twisted);
    }
    let mirror = orientation_reverse(&twisted)?;
    log.record(
        "mirror",
        "Hom duality under orientation reversal; Ext^1 of Lambda[U]/U",
        &twisted,
        &mirror,
    );
    Ok(mirror)
}

fn whitehead(n: i64, omega: &TwistClass, log: &mut DerivationLog) -> Result<GradedModule> {
    Family::WhiteheadZeroSurgery { n }.validate()?;
    let knot = twist_knot(n, omega, log)?;
    let mv = ExcisionMove::twist_knot_to_whitehead(n);
    let out = apply_excision(&knot, &mv)?;
    log.record(
        "excision",
        "excision along a genus one surface preserves twisted Floer homology",
        format!(
            "{} -> {}: {knot}",
            mv.source.join(" + "),
            mv.target.join(" + ")
        ),
        &out,
    );
    Ok(out)
}

fn borromean(m: i64, n: i64, omega: &TwistClass, log: &mut DerivationLog) -> Result<GradedModule> {
    Family::BorromeanZeroSurgery { m, n }.validate()?;
    let wm = whitehead(m, omega, log)?;
    let wn = whitehead(n, omega, log)?;
    let product = kunneth(&wm, &wn)?;
    log.record(
        "disjoint union",
        "Kunneth formula over the field Lambda",
        format!("({wm}) x ({wn})"),
        &product,
    );
    let mv = ExcisionMove::borromean_split(m, n).inverse();
    let out = apply_excision(&product, &mv)?;
    log.record(
        "excision",
        "excision along a genus one surface preserves twisted Floer homology",
        format!(
            "{} -> {}: {product}",
            mv.source.join(" + "),
            mv.target.join(" + ")
        ),
        &out,
    );
    Ok(out)
}

/// Exponent `p` with `t^d = s^p` for `s = t^(1/q)`, where `d = p/q`.
fn integral_weight(omega: &TwistClass) -> Result<i64> {
    i64::try_from(omega.weight.numer())
        .map_err(|_| Error::Unsupported(format!("twisting weight {} is too large", omega.weight)))
}

fn two_bridge(
    m: i64,
    clasp: i64,
    n: i64,
    omega: &TwistClass,
    log: &mut DerivationLog,
) -> Result<GradedModule> {
    Family::TwoBridge { m, clasp, n }.validate()?;
    let y0 = borromean(m, n, omega, log)?;
    if m == -n {
        let unknot = build_thin_complex(&ThinKnotSpec::unknot())?;
        let s1s2 = twisted_zero_surgery_cone(&unknot, integral_weight(omega)?)?.homology()?;
        if !s1s2.is_zero() {
            return Err(Error::InconsistentInput(format!(
                "twisted homology of S^1 x S^2 came out as {s1s2}"
            )));
        }
        log.record(
            "third term",
            "twisted Floer homology of S^1 x S^2 vanishes for a class nonzero on the sphere",
            "Y = #2 (S^1 x S^2), twisted 0-surgery cone on the unknot",
            "0",
        );
        log.record(
            "exact sequence",
            "twisted surgery exact sequence",
            format!("HF(Y) = 0, HF(Y_0) = {y0}"),
            &y0,
        );
        return Ok(y0);
    }
    let unknot = build_thin_complex(&ThinKnotSpec::unknot())?;
    let sphere = large_surgery(&unknot, &SurgeryRequest::plus(1, 0))?;
    tower_bottom(&sphere)?;
    log.record(
        "third term",
        "HF+(S^3) is a single tower; twisting on S^3 is trivial",
        "Y = S^3",
        "Lambda[U^-1]",
    );
    let u_torsion = y0.summands.iter().all(|s| {
        matches!(
            s,
            Summand::FreeField { over_u: false, .. } | Summand::UTorsion { .. }
        )
    });
    if !u_torsion {
        return Err(Error::InconsistentInput(format!(
            "HF(Y_0) = {y0} is not U-torsion, so the map from the tower need not vanish"
        )));
    }
    log.record(
        "zero map",
        "a U-divisible module maps to zero in a U-torsion module",
        format!("Lambda[U^-1] -> {y0}"),
        "0",
    );
    let out = y0.direct_sum(&GradedModule::new(vec![Summand::Tower { bottom: None }]));
    log.record(
        "exact sequence",
        "twisted surgery exact sequence; the extension is assumed to split",
        format!("0 -> {y0} -> HF(Y_1) -> Lambda[U^-1] -> 0"),
        &out,
    );
    Ok(out)
}

fn run(family: Family, omega: &TwistClass) -> Result<GradedModule> {
    let spec = FamilySpec::new(family, omega.weight.clone());
    Ok(derive(&spec)?.result)
}

/// Twisted Floer homology of 0-surgery on the twist knot; the mirror for `n < 0`.
pub fn compute_twist_knot_zero_surgery(n: i64, omega: &TwistClass) -> Result<GradedModule> {
    run(Family::TwistKnotZeroSurgery { n }, omega)
}

pub fn compute_whitehead_zero_surgery(n: i64, omega: &TwistClass) -> Result<GradedModule> {
    run(Family::WhiteheadZeroSurgery { n }, omega)
}

pub fn compute_borromean_zero_surgery(m: i64, n: i64, omega: &TwistClass) -> Result<GradedModule> {
    run(Family::BorromeanZeroSurgery { m, n }, omega)
}

pub fn compute_two_bridge(m: i64, clasp: i64, n: i64, omega: &TwistClass) -> Result<GradedModule> {
    run(Family::TwoBridge { m, clasp, n }, omega)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relatedness {
    pub n: i64,
    pub m: i64,
    pub obstructed: bool,
    pub n_module: GradedModule,
    pub m_module: GradedModule,
    pub report: String,
}

/// Whether the two Whitehead manifolds are kept apart by their twisted
/// Floer homology. Excision preserves it, so different ranks obstruct.
pub fn non_relatedness_check(n: i64, m: i64) -> Result<Relatedness> {
    let omega = TwistClass::new(qi(1));
    let n_module = compute_whitehead_zero_surgery(n, &omega)?;
    let m_module = compute_whitehead_zero_surgery(m, &omega)?;
    let (rn, rm) = (
        n_module.field_rank(RingTag::Lambda),
        m_module.field_rank(RingTag::Lambda),
    );
    let obstructed = rn != rm;
    let report = if obstructed {
        format!(
            "S^3_0(W_{n}) and S^3_0(W_{m}) are not related by excision: Lambda^{rn} vs Lambda^{rm}"
        )
    } else {
        format!("no obstruction: both have Lambda^{rn}")
    };
    Ok(Relatedness {
        n,
        m,
        obstructed,
        n_module,
        m_module,
        report,
    })
}
