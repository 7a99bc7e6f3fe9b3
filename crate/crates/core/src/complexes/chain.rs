use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::module::{GradedModule, Summand};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::rational::serde_q;
use crate::rings::{qi, EuclideanDomain, Ring, Q};
use crate::snf::diagonalize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    #[serde(with = "serde_q")]
    pub grading: Q,
}

impl Generator {
    pub fn new(name: impl Into<String>, grading: Q) -> Self {
        Generator {
            name: name.into(),
            grading,
        }
    }
}

/// Finitely generated free chain complex.
///
/// Column `j` of the differential is the boundary of generator `j`. An entry
/// of `U`-degree `k` in position `(i, j)` requires
/// `grading(i) - 2k == grading(j) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex<R> {
    generators: Vec<Generator>,
    differential: Matrix<R>,
    variables: Vec<String>,
}

pub(crate) fn check_entry_grading<R: Ring>(
    value: &R,
    target: &Q,
    source: &Q,
    degree: &Q,
) -> std::result::Result<(), String> {
    let k = value
        .u_degree()
        .ok_or_else(|| format!("entry `{value}` is not homogeneous in U"))?;
    let expected = source + degree;
    let got = target - qi(2 * k as i64);
    if got == expected {
        Ok(())
    } else {
        Err(format!(
            "entry `{value}` maps grading {source} to {got}, expected {expected}"
        ))
    }
}

impl<R: Ring> ChainComplex<R> {
    pub fn new(generators: Vec<Generator>, differential: Matrix<R>) -> Result<Self> {
        Self::with_variables(generators, differential, Vec::new())
    }

    pub fn with_variables(
        generators: Vec<Generator>,
        differential: Matrix<R>,
        variables: Vec<String>,
    ) -> Result<Self> {
        let n = generators.len();
        if differential.rows() != n || differential.cols() != n {
            return Err(Error::Shape(format!(
                "differential is {}x{} but there are {n} generators",
                differential.rows(),
                differential.cols()
            )));
        }
        for (i, j, v) in differential.nonzero() {
            check_entry_grading(v, &generators[i].grading, &generators[j].grading, &qi(-1))
                .map_err(|e| {
                    Error::InvalidComplex(format!(
                        "{} -> {}: {e}",
                        generators[j].name, generators[i].name
                    ))
                })?;
        }
        if !(&differential * &differential).is_zero() {
            return Err(Error::InvalidComplex(
                "the differential does not square to zero".into(),
            ));
        }
        Ok(ChainComplex {
            generators,
            differential,
            variables,
        })
    }

    /// Builds a complex from a sparse list of `(target, source, coefficient)`.
    pub fn from_entries(
        generators: Vec<Generator>,
        entries: Vec<(usize, usize, R)>,
    ) -> Result<Self> {
        let n = generators.len();
        let mut d: Matrix<R> = Matrix::zeros(n, n);
        for (i, j, v) in entries {
            if i >= n || j >= n {
                return Err(Error::Shape(format!(
                    "entry ({i}, {j}) outside {n} generators"
                )));
            }
            let cur = d.get(i, j).clone();
            d.set(i, j, cur + v);
        }
        Self::new(generators, d)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self) -> &Matrix<R> {
        &self.differential
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn has_variable(&self, tag: &str) -> bool {
        self.variables.iter().any(|v| v == tag)
    }

    pub fn tagged(mut self, variables: Vec<String>) -> Self {
        self.variables = variables;
        self
    }

    pub fn gradings(&self) -> Vec<Q> {
        self.generators.iter().map(|g| g.grading.clone()).collect()
    }

    /// Dual complex: transposed differential and negated gradings.
    pub fn dualize(&self) -> Self {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator::new(format!("{}*", g.name), -g.grading.clone()))
            .collect();
        ChainComplex {
            generators,
            differential: self.differential.transpose(),
            variables: self.variables.clone(),
        }
    }

    /// Number of generators in each grading.
    pub fn generator_counts(&self) -> BTreeMap<Q, usize> {
        let mut out = BTreeMap::new();
        for g in &self.generators {
            *out.entry(g.grading.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Grading of the homogeneous vector given by `column` of `basis_change`,
/// read from its first nonzero coordinate.
fn vector_grading<R: Ring>(basis_change: &Matrix<R>, column: usize, gradings: &[Q]) -> Result<Q> {
    for i in 0..basis_change.rows() {
        let v = basis_change.get(i, column);
        if v.is_zero() {
            continue;
        }
        let k = v.u_degree().ok_or_else(|| {
            Error::InvalidComplex(format!("basis change entry `{v}` is not homogeneous"))
        })?;
        return Ok(&gradings[i] - qi(2 * k as i64));
    }
    Err(Error::InvalidComplex("zero basis vector".into()))
}

impl<R: EuclideanDomain> ChainComplex<R> {
    /// Homology as a direct sum of cyclic graded pieces.
    ///
    /// Diagonalizing `p * d * q = diag(d_0, .., d_{r-1}, 0, ..)` gives cycles
    /// `q_j` for `j >= r` and boundaries `d_t * f_t` with `f_t` the columns of
    /// `p^{-1}`. Each `f_t` is a cycle and the `f_t` span a direct summand of
    /// the cycles, so the homology is `sum R/(d_t)` plus a free part whose
    /// generator gradings are those of the `q_j` minus those of the `f_t`.
    pub fn homology(&self) -> Result<GradedModule> {
        let ring = R::ring_tag();
        let gradings = self.gradings();
        let form = diagonalize(&self.differential);
        let r = form.rank;
        let mut summands = Vec::new();
        let mut boundary_gradings = Vec::new();
        for t in 0..r {
            let g = vector_grading(&form.p_inv, t, &gradings)?;
            boundary_gradings.push(g.clone());
            let d = &form.diagonal[t];
            if d.is_unit() {
                continue;
            }
            if R::has_u() {
                let k = d.u_degree().ok_or_else(|| {
                    Error::InvalidComplex(format!("diagonal entry `{d}` is not a power of U"))
                })?;
                summands.push(Summand::UTorsion {
                    ring,
                    exponent: k,
                    rank: 1,
                    top: Some(g),
                });
            } else {
                summands.push(Summand::Torsion {
                    ring,
                    order: d.normalized().to_string(),
                    rank: 1,
                    grading: Some(g),
                });
            }
        }
        let mut cycle_gradings = Vec::new();
        for j in r..self.len() {
            cycle_gradings.push(vector_grading(&form.q, j, &gradings)?);
        }
        for g in boundary_gradings {
            let pos = cycle_gradings.iter().position(|c| *c == g).ok_or_else(|| {
                Error::InvalidComplex(format!("boundary in grading {g} has no matching cycle"))
            })?;
            cycle_gradings.swap_remove(pos);
        }
        for g in cycle_gradings {
            summands.push(Summand::FreeField {
                ring,
                rank: 1,
                grading: Some(g),
                over_u: R::has_u(),
            });
        }
        Ok(GradedModule::new(summands))
    }
}

/// Chain map between complexes over the same ring. Column `j` is the image
/// of source generator `j`; an entry of `U`-degree `k` at `(i, j)` requires
/// `target(i) - 2k == source(j) + degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap<R> {
    pub matrix: Matrix<R>,
    pub degree: Q,
}

impl<R: Ring> ChainMap<R> {
    pub fn new(matrix: Matrix<R>, degree: Q) -> Self {
        ChainMap { matrix, degree }
    }

    pub fn zero(source: &ChainComplex<R>, target: &ChainComplex<R>, degree: Q) -> Self {
        ChainMap::new(Matrix::zeros(target.len(), source.len()), degree)
    }

    pub fn identity(c: &ChainComplex<R>) -> Self {
        ChainMap::new(Matrix::identity(c.len()), Q::zero())
    }

    /// Checks shapes, gradings and `f * d_source == d_target * f`.
    pub fn check(&self, source: &ChainComplex<R>, target: &ChainComplex<R>) -> Result<()> {
        if self.matrix.rows() != target.len() || self.matrix.cols() != source.len() {
            return Err(Error::Shape(format!(
                "map is {}x{}, complexes have {} and {} generators",
                self.matrix.rows(),
                self.matrix.cols(),
                source.len(),
                target.len()
            )));
        }
        for (i, j, v) in self.matrix.nonzero() {
            check_entry_grading(
                v,
                &target.generators[i].grading,
                &source.generators[j].grading,
                &self.degree,
            )
            .map_err(Error::Commutation)?;
        }
        let lhs = &self.matrix * &source.differential;
        let rhs = &target.differential * &self.matrix;
        if lhs != rhs {
            return Err(Error::Commutation("f d != d f".into()));
        }
        Ok(())
    }
}

/// Mapping cone of `f: source -> target` with differential `[[d_A, 0], [f, d_B]]`.
///
/// Source generators come first and are shifted by `degree(f) + 1` so that
/// the cone differential has degree `-1`; for the `U`-maps of degree `-2`
/// this is a shift by `-1`.
pub fn mapping_cone<R: Ring>(
    f: &ChainMap<R>,
    source: &ChainComplex<R>,
    target: &ChainComplex<R>,
) -> Result<ChainComplex<R>> {
    f.check(source, target)?;
    let shift = &f.degree + qi(1);
    let mut generators: Vec<Generator> = source
        .generators
        .iter()
        .map(|g| Generator::new(g.name.clone(), &g.grading + &shift))
        .collect();
    generators.extend(target.generators.iter().cloned());
    let zero = Matrix::zeros(source.len(), target.len());
    let d = Matrix::block(&source.differential, &zero, &f.matrix, &target.differential)?;
    let mut variables = source.variables.clone();
    for v in &target.variables {
        if !variables.contains(v) {
            variables.push(v.clone());
        }
    }
    ChainComplex::with_variables(generators, d, variables)
}

/// Direct sum of complexes.
pub fn direct_sum<R: Ring>(a: &ChainComplex<R>, b: &ChainComplex<R>) -> Result<ChainComplex<R>> {
    let mut generators = a.generators.clone();
    generators.extend(b.generators.iter().cloned());
    let d = Matrix::block(
        &a.differential,
        &Matrix::zeros(a.len(), b.len()),
        &Matrix::zeros(b.len(), a.len()),
        &b.differential,
    )?;
    ChainComplex::with_variables(generators, d, a.variables.clone())
}

/// Shifts every grading by `s`.
pub fn shift_gradings<R: Ring>(c: &ChainComplex<R>, s: &Q) -> ChainComplex<R> {
    let mut out = c.clone();
    for g in &mut out.generators {
        g.grading = &g.grading + s;
    }
    out
}

/// Multiplication by a ring element, as a map of the given degree.
pub fn scalar_map<R: Ring>(c: &ChainComplex<R>, scalar: &R, degree: Q) -> ChainMap<R> {
    let mut m = Matrix::identity(c.len());
    for i in 0..c.len() {
        m.set(i, i, scalar.clone());
    }
    ChainMap::new(m, degree)
}
