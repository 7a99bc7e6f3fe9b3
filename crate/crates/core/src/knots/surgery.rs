use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::complex::KnotComplex;
use crate::complexes::{ChainComplex, Generator, GradedModule, Summand};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{qi, RingTag, F2, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Hat,
    Plus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryRequest {
    pub p: i64,
    pub s: i64,
    pub flavor: Flavor,
    /// Starting truncation level for the plus flavor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
}

impl SurgeryRequest {
    pub fn hat(p: i64, s: i64) -> Self {
        SurgeryRequest {
            p,
            s,
            flavor: Flavor::Hat,
            truncation: None,
        }
    }

    pub fn plus(p: i64, s: i64) -> Self {
        SurgeryRequest {
            p,
            s,
            flavor: Flavor::Plus,
            truncation: None,
        }
    }

    fn validate(&self, genus: i64) -> Result<()> {
        if self.p < 1 || self.p < 2 * genus - 1 {
            return Err(Error::FormulaOutOfRange(format!(
                "framing {} is below max(1, 2g - 1) = {}",
                self.p,
                (2 * genus - 1).max(1)
            )));
        }
        if 2 * self.s.abs() > self.p {
            return Err(Error::FormulaOutOfRange(format!(
                "spin^c index {} exceeds p/2 for p = {}",
                self.s, self.p
            )));
        }
        Ok(())
    }
}

/// Floer homology of `p`-surgery in the spin^c structure `[s]`.
///
/// The hat flavor is the homology of `C{max(i, j - s) = 0}`. The plus flavor
/// is read off `C{max(i, j - s) >= 0}` truncated at `i <= N`, which agrees
/// with the untruncated quotient in gradings up to `min M + 2N`; the result
/// is a tower plus the graded dimensions of the reduced part. Gradings are
/// `M + 2i` with no further shift.
pub fn large_surgery(k: &KnotComplex, req: &SurgeryRequest) -> Result<GradedModule> {
    req.validate(k.genus())?;
    match req.flavor {
        Flavor::Hat => hat(k, req.s),
        Flavor::Plus => plus(k, req),
    }
}

fn lowest_i(alexander: i64, s: i64) -> i64 {
    -(alexander - s).max(0)
}

fn hat(k: &KnotComplex, s: i64) -> Result<GradedModule> {
    let gens = k.generators();
    let place: Vec<i64> = gens.iter().map(|g| lowest_i(g.alexander, s)).collect();
    let generators = gens
        .iter()
        .zip(&place)
        .map(|(g, &i)| Generator::new(g.name.clone(), &g.maslov + qi(2 * i)))
        .collect();
    let mut entries = Vec::new();
    for a in k.arrows() {
        let i = place[a.from] - a.i_drop as i64;
        let j = place[a.from] + gens[a.from].alexander - a.j_drop as i64;
        if i.max(j - s) == 0 {
            entries.push((a.to, a.from, F2(true)));
        }
    }
    ChainComplex::from_entries(generators, entries)?.homology()
}

/// `C{max(i, j - s) >= 0, i <= n}` as a finite complex over F2.
struct Truncated {
    elements: Vec<(usize, i64)>,
    gradings: Vec<Q>,
    index: HashMap<(usize, i64), usize>,
    boundary: Vec<Vec<usize>>,
    by_grading: BTreeMap<Q, Vec<usize>>,
}

impl Truncated {
    fn new(k: &KnotComplex, s: i64, n: i64) -> Self {
        let gens = k.generators();
        let mut elements = Vec::new();
        for (x, g) in gens.iter().enumerate() {
            for i in lowest_i(g.alexander, s)..=n {
                elements.push((x, i));
            }
        }
        let index: HashMap<(usize, i64), usize> = elements
            .iter()
            .enumerate()
            .map(|(e, &key)| (key, e))
            .collect();
        let gradings: Vec<Q> = elements
            .iter()
            .map(|&(x, i)| &gens[x].maslov + qi(2 * i))
            .collect();
        let mut boundary = vec![Vec::new(); elements.len()];
        for a in k.arrows() {
            for (e, &(x, i)) in elements.iter().enumerate() {
                if x != a.from {
                    continue;
                }
                if let Some(&t) = index.get(&(a.to, i - a.i_drop as i64)) {
                    boundary[e].push(t);
                }
            }
        }
        let mut by_grading: BTreeMap<Q, Vec<usize>> = BTreeMap::new();
        for (e, g) in gradings.iter().enumerate() {
            by_grading.entry(g.clone()).or_default().push(e);
        }
        Truncated {
            elements,
            gradings,
            index,
            boundary,
            by_grading,
        }
    }

    fn basis(&self, g: &Q) -> &[usize] {
        self.by_grading.get(g).map_or(&[], Vec::as_slice)
    }

    /// Matrix of the differential from grading `g` to `g - 1`.
    fn differential(&self, g: &Q) -> Matrix<F2> {
        let src = self.basis(g);
        let dst = self.basis(&(g - qi(1)));
        let pos: HashMap<usize, usize> = dst.iter().enumerate().map(|(r, &e)| (e, r)).collect();
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (c, &e) in src.iter().enumerate() {
            for t in &self.boundary[e] {
                let r = pos[t];
                let cur = *m.get(r, c);
                m.set(r, c, cur + F2(true));
            }
        }
        m
    }

    fn homology_dim(&self, g: &Q) -> usize {
        self.basis(g).len() - self.differential(g).rank() - self.differential(&(g + qi(1))).rank()
    }

    /// Dimension of the image of `U^m` from grading `g + 2m` into `H_g`.
    fn u_image_dim(&self, g: &Q, m: i64) -> usize {
        let top = g + qi(2 * m);
        let cycles = self.differential(&top).kernel();
        let here = self.basis(g);
        let pos: HashMap<usize, usize> = here.iter().enumerate().map(|(r, &e)| (e, r)).collect();
        let boundaries = self.differential(&(g + qi(1)));
        let src = self.basis(&top);
        let mut images = Matrix::zeros(here.len(), cycles.cols());
        for c in 0..cycles.cols() {
            for (r, &e) in src.iter().enumerate() {
                if cycles.get(r, c).is_zero() {
                    continue;
                }
                let (x, i) = self.elements[e];
                if let Some(t) = self.index.get(&(x, i - m)) {
                    let row = pos[t];
                    let cur = *images.get(row, c);
                    images.set(row, c, cur + F2(true));
                }
            }
        }
        let both = Matrix::from_fn(here.len(), boundaries.cols() + images.cols(), |r, c| {
            if c < boundaries.cols() {
                *boundaries.get(r, c)
            } else {
                *images.get(r, c - boundaries.cols())
            }
        });
        both.rank() - boundaries.rank()
    }
}

fn plus_at(k: &KnotComplex, s: i64, n: i64) -> Result<Option<GradedModule>> {
    let t = Truncated::new(k, s, n);
    let min_m = k
        .generators()
        .iter()
        .map(|g| g.maslov.clone())
        .min()
        .unwrap_or_else(Q::zero);
    let reach = k.len() as i64 + 1;
    let window_top = min_m + qi(2 * n) - qi(2 * reach);
    let Some(lo) = t.gradings.iter().min().cloned() else {
        return Ok(None);
    };
    if window_top < lo {
        return Ok(None);
    }
    let mut tower: Option<Q> = None;
    let mut summands = Vec::new();
    let gradings: Vec<Q> = t
        .by_grading
        .range(lo..=window_top.clone())
        .map(|(g, _)| g.clone())
        .collect();
    for g in &gradings {
        let dim = t.homology_dim(g);
        let m = ((&window_top - g) / qi(2)).floor().to_integer();
        let m: i64 = i64::try_from(m).expect("small exponent") + reach;
        let divisible = t.u_image_dim(g, m);
        if divisible > 1 {
            return Err(Error::InconsistentInput(format!(
                "U-divisible part has dimension {divisible} at grading {g}"
            )));
        }
        if divisible == 1 && tower.is_none() {
            tower = Some(g.clone());
        }
        if dim > divisible {
            summands.push(Summand::free(RingTag::F2, dim - divisible, Some(g.clone())));
        }
    }
    let Some(bottom) = tower else {
        return Ok(None);
    };
    summands.push(Summand::Tower {
        bottom: Some(bottom),
    });
    Ok(Some(GradedModule::new(summands)))
}

fn plus(k: &KnotComplex, req: &SurgeryRequest) -> Result<GradedModule> {
    let mut n = req.truncation.unwrap_or((2 * k.genus() + 4) as usize);
    let limit = if req.truncation.is_some() { 1 } else { 8 };
    for _ in 0..limit {
        let a = plus_at(k, req.s, n as i64)?;
        let b = plus_at(k, req.s, 2 * n as i64)?;
        if let (Some(a), Some(b)) = (&a, &b) {
            if a == b {
                return Ok(a.clone());
            }
        }
        n *= 2;
    }
    Err(Error::Truncation {
        tried: n / 2,
        suggested: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::{build_thin_complex, ThinKnotSpec};

    fn twist(n: i64) -> KnotComplex {
        build_thin_complex(&ThinKnotSpec::twist_knot(n).unwrap()).unwrap()
    }

    fn dims(m: &GradedModule) -> BTreeMap<Q, usize> {
        m.graded_dimensions(&qi(-100), &qi(100))
    }

    #[test]
    fn twist_knot_hat() {
        for n in 1..5 {
            let h = large_surgery(&twist(n), &SurgeryRequest::hat(1, 0)).unwrap();
            let d = dims(&h);
            assert_eq!(d.get(&qi(-2)), Some(&(n as usize)));
            assert_eq!(d.get(&qi(-1)).copied().unwrap_or(0), n as usize - 1);
            assert_eq!(d.values().sum::<usize>(), 2 * n as usize - 1);
        }
    }

    #[test]
    fn unknot_hat_and_plus() {
        let u = build_thin_complex(&ThinKnotSpec::unknot()).unwrap();
        let h = large_surgery(&u, &SurgeryRequest::hat(1, 0)).unwrap();
        assert_eq!(h.field_rank(RingTag::F2), 1);
        let p = large_surgery(&u, &SurgeryRequest::plus(1, 0)).unwrap();
        assert_eq!(
            p.summands,
            vec![Summand::Tower {
                bottom: Some(qi(0))
            }]
        );
    }

    #[test]
    fn twist_knot_plus() {
        let p = large_surgery(&twist(3), &SurgeryRequest::plus(1, 0)).unwrap();
        assert_eq!(p.tower_count(), 1, "{p}");
        assert_eq!(
            p.summands.last(),
            Some(&Summand::Tower {
                bottom: Some(qi(-2))
            })
        );
        assert_eq!(p.finite_rank(), 2);
        assert_eq!(p.finite_gradings(), vec![Some(qi(-2))], "{p:?}");
    }

    #[test]
    fn out_of_range() {
        let k = twist(2);
        assert!(matches!(
            large_surgery(&k, &SurgeryRequest::hat(0, 0)),
            Err(Error::FormulaOutOfRange(_))
        ));
        assert!(matches!(
            large_surgery(&k, &SurgeryRequest::hat(1, 1)),
            Err(Error::FormulaOutOfRange(_))
        ));
    }

    #[test]
    fn too_small_explicit_truncation() {
        let req = SurgeryRequest {
            truncation: Some(1),
            ..SurgeryRequest::plus(1, 0)
        };
        assert!(matches!(
            large_surgery(&twist(2), &req),
            Err(Error::Truncation {
                tried: 1,
                suggested: 2
            })
        ));
    }
}
