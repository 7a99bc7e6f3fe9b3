use std::collections::BTreeMap;

use super::complex::{Arrow, KnotComplex, KnotGenerator};
use super::spec::ThinKnotSpec;
use crate::error::{Error, Result};
use crate::rings::qi;

/// Coefficients of the staircase of `tau`: `sum_k (-1)^k t^(|tau| - k)`.
fn staircase_polynomial(tau: i64) -> BTreeMap<i64, i64> {
    let h = tau.abs();
    (0..=2 * h)
        .map(|k| (h - k, if k % 2 == 0 { 1 } else { -1 }))
        .collect()
}

/// Writes `d` as `sum_c e_c t^c (t - 2 + t^-1)`, peeling from the top.
fn box_coefficients(mut d: BTreeMap<i64, i64>) -> Result<BTreeMap<i64, i64>> {
    let mut out = BTreeMap::new();
    loop {
        d.retain(|_, v| *v != 0);
        let Some((&top, &coeff)) = d.iter().next_back() else {
            return Ok(out);
        };
        let c = top - 1;
        if d.keys().next().is_some_and(|&low| low > c - 1) {
            return Err(Error::Spec(
                "alexander polynomial minus the staircase is not divisible by (t - 1)^2".into(),
            ));
        }
        *out.entry(c).or_insert(0) += coeff;
        *d.entry(c + 1).or_insert(0) -= coeff;
        *d.entry(c).or_insert(0) += 2 * coeff;
        *d.entry(c - 1).or_insert(0) -= coeff;
    }
}

/// Thin model of `CFK∞`: the staircase of `tau` plus unit boxes.
///
/// Staircase generators are `a1, ..., a(2|tau|+1)` in increasing Alexander
/// grading. A box centred at Alexander grading `c` has generators `y` at
/// `c + 1`, `x` and `w` at `c`, `z` at `c - 1` with arrows
/// `x -> U y`, `x -> z`, `y -> w` and `z -> U w`. Maslov gradings are
/// `A - tau` throughout.
pub fn build_thin_complex(spec: &ThinKnotSpec) -> Result<KnotComplex> {
    spec.validate()?;
    let tau = spec.tau();
    let h = tau.abs();
    let target: BTreeMap<i64, i64> = spec.normalized_coefficients().into_iter().collect();
    let mut rest = target.clone();
    for (s, v) in staircase_polynomial(tau) {
        *rest.entry(s).or_insert(0) -= v;
    }
    let boxes = box_coefficients(rest)?;

    let mut generators = Vec::new();
    let mut arrows = Vec::new();
    let gen = |name: String, a: i64| KnotGenerator {
        name,
        alexander: a,
        maslov: qi(a - tau),
    };
    for k in 0..=2 * h {
        generators.push(gen(format!("a{}", 2 * h + 1 - k), h - k));
    }
    let k_index = |k: i64| k as usize;
    for k in 0..=2 * h {
        let vertical = Arrow {
            from: k_index(k),
            to: k_index(k + 1),
            i_drop: 0,
            j_drop: 1,
        };
        let horizontal = Arrow {
            from: k_index(k),
            to: k_index(k - 1),
            i_drop: 1,
            j_drop: 0,
        };
        if tau > 0 && k % 2 == 1 {
            arrows.push(horizontal);
            arrows.push(vertical);
        }
        if tau < 0 && k % 2 == 0 {
            if k < 2 * h {
                arrows.push(vertical);
            }
            if k >= 2 {
                arrows.push(horizontal);
            }
        }
    }

    let mut label = 0;
    for (&c, &e) in boxes.iter().rev() {
        let sign = if (c + 1 - tau).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        let count = e * sign;
        if count < 0 {
            return Err(Error::Spec(format!(
                "alexander polynomial is not realized by a thin complex with sigma = {}",
                spec.sigma
            )));
        }
        for _ in 0..count {
            label += 1;
            let base = generators.len();
            generators.push(gen(format!("x{label}"), c));
            generators.push(gen(format!("y{label}"), c + 1));
            generators.push(gen(format!("z{label}"), c - 1));
            generators.push(gen(format!("w{label}"), c));
            let (x, y, z, w) = (base, base + 1, base + 2, base + 3);
            arrows.push(Arrow {
                from: x,
                to: y,
                i_drop: 1,
                j_drop: 0,
            });
            arrows.push(Arrow {
                from: x,
                to: z,
                i_drop: 0,
                j_drop: 1,
            });
            arrows.push(Arrow {
                from: y,
                to: w,
                i_drop: 0,
                j_drop: 1,
            });
            arrows.push(Arrow {
                from: z,
                to: w,
                i_drop: 1,
                j_drop: 0,
            });
        }
    }

    let complex = KnotComplex::new(generators, arrows)?;
    let counts = complex.euler_characteristic()?;
    for (s, v) in &target {
        let present = complex
            .generators()
            .iter()
            .filter(|g| g.alexander == *s)
            .count() as i64;
        if present != v.abs() || counts.get(s).copied().unwrap_or(0) != *v {
            return Err(Error::Spec(format!(
                "thin model has {present} generators at Alexander grading {s}, expected {}",
                v.abs()
            )));
        }
    }
    Ok(complex)
}
