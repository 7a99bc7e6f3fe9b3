use num_traits::{One, Zero};

use super::chain::{ChainComplex, Generator};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{qi, Field, MPoly, Poly, PolyTag};

pub const U_Z: &str = "U_z";
pub const U_W0: &str = "U_w0";

/// Marker carried by each generator of a stabilized complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaLabel {
    Plus,
    Minus,
}

impl ThetaLabel {
    pub fn suffix(self) -> &'static str {
        match self {
            ThetaLabel::Plus => "×θ+",
            ThetaLabel::Minus => "×θ-",
        }
    }
}

/// `c ⊗ <θ+, θ->` over the ring with `U_w0` adjoined.
///
/// The first `n` generators are `x×θ+` in grading `gr(x)`, the next `n` are
/// `x×θ-` in grading `gr(x) - 1`. The differential is
/// `[[∂, (U_w0 - U_z) I], [0, -∂]]` with `U` renamed to `U_z`.
#[derive(Debug, Clone)]
pub struct StabilizedComplex<K: Field + PolyTag> {
    pub complex: ChainComplex<MPoly<K>>,
    /// Inclusion `x -> x×θ+`, a `2n × n` matrix.
    pub s_plus: Matrix<MPoly<K>>,
    /// Projection `x×θ- -> x`, `x×θ+ -> 0`, an `n × 2n` matrix.
    pub s_minus: Matrix<MPoly<K>>,
    base_len: usize,
}

impl<K: Field + PolyTag> StabilizedComplex<K> {
    pub fn label(&self, index: usize) -> ThetaLabel {
        if index < self.base_len {
            ThetaLabel::Plus
        } else {
            ThetaLabel::Minus
        }
    }

    /// Index in the original complex of stabilized generator `index`.
    pub fn base_index(&self, index: usize) -> usize {
        index % self.base_len.max(1)
    }
}

pub fn stabilize<K: Field + PolyTag>(c: &ChainComplex<Poly<K>>) -> Result<StabilizedComplex<K>> {
    if !c.has_variable(U_Z) {
        return Err(Error::MissingTag(format!(
            "stabilization needs a {U_Z} tag, found {:?}",
            c.variables()
        )));
    }
    let n = c.len();
    let d = c.differential().map(|p| MPoly::from_poly(p, 0));
    let neg_d = d.map(|p| -p.clone());
    let diff = MPoly::var(1) - MPoly::var(0);
    let mut link = Matrix::zeros(n, n);
    for i in 0..n {
        link.set(i, i, diff.clone());
    }
    let full = Matrix::block(&d, &link, &Matrix::zeros(n, n), &neg_d)?;
    let mut generators: Vec<Generator> = c
        .generators()
        .iter()
        .map(|g| {
            Generator::new(
                format!("{}{}", g.name, ThetaLabel::Plus.suffix()),
                g.grading.clone(),
            )
        })
        .collect();
    generators.extend(c.generators().iter().map(|g| {
        Generator::new(
            format!("{}{}", g.name, ThetaLabel::Minus.suffix()),
            &g.grading - qi(1),
        )
    }));
    let mut variables = c.variables().to_vec();
    if !variables.iter().any(|v| v == U_W0) {
        variables.push(U_W0.to_string());
    }
    let complex = ChainComplex::with_variables(generators, full, variables)?;
    let s_plus = Matrix::from_fn(
        2 * n,
        n,
        |i, j| if i == j { MPoly::one() } else { MPoly::zero() },
    );
    let s_minus = Matrix::from_fn(n, 2 * n, |i, j| {
        if j == i + n {
            MPoly::one()
        } else {
            MPoly::zero()
        }
    });
    Ok(StabilizedComplex {
        complex,
        s_plus,
        s_minus,
        base_len: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::graded::homology_dimensions;
    use crate::rings::RatFunc;

    type RU = Poly<RatFunc>;

    fn single() -> ChainComplex<RU> {
        ChainComplex::from_entries(vec![Generator::new("x", qi(0))], vec![])
            .unwrap()
            .tagged(vec![U_Z.into()])
    }

    #[test]
    fn needs_u_z_tag() {
        let c: ChainComplex<RU> =
            ChainComplex::from_entries(vec![Generator::new("x", qi(0))], vec![]).unwrap();
        assert!(matches!(stabilize(&c), Err(Error::MissingTag(_))));
    }

    #[test]
    fn single_generator_recovers_free_module() {
        let s = stabilize(&single()).unwrap();
        let dims = homology_dimensions(&s.complex, &qi(-8), &qi(2));
        let expected = single()
            .homology()
            .unwrap()
            .graded_dimensions(&qi(-8), &qi(2));
        assert_eq!(dims, expected);
        assert_eq!(s.complex.generators()[1].name, "x×θ-");
    }

    #[test]
    fn theta_maps() {
        let s = stabilize(&single()).unwrap();
        let plus = &s.s_minus * &s.s_plus;
        assert!(plus.is_zero());
        assert_eq!(s.s_minus.get(0, 1), &MPoly::one());
        assert_eq!(s.label(0), ThetaLabel::Plus);
        assert_eq!(s.label(1), ThetaLabel::Minus);
        assert_eq!(s.base_index(1), 0);
    }
}
