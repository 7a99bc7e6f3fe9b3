use std::collections::BTreeMap;

use num_traits::One;

use super::complex::KnotComplex;
use crate::complexes::{mapping_cone, ChainComplex, ChainMap, Generator};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{qi, RatFunc, Q};
use crate::RatFuncU;

fn u_power(e: i64, scalar: &RatFunc) -> RatFuncU {
    RatFuncU::monomial(
        scalar.clone(),
        usize::try_from(e).expect("nonnegative U exponent"),
    )
}

fn parse_name(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let head = chars.next()?;
    chars.as_str().parse().ok().map(|k| (head, k))
}

/// The involution `[x, i, j] -> [σx, j, i]` of a thin complex.
///
/// Staircase generator `a_k` goes to `a_(2h+2-k)`. A box centred at `c`
/// goes to a box centred at `-c` with `y` and `z` exchanged. The result is
/// checked to swap horizontal and vertical arrows.
pub fn flip_symmetry(k: &KnotComplex) -> Result<Vec<usize>> {
    let gens = k.generators();
    let stair = gens.iter().filter(|g| g.name.starts_with('a')).count();
    let mut boxes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for g in gens {
        if let Some(('x', l)) = parse_name(&g.name) {
            boxes.entry(g.alexander).or_default().push(l);
        }
    }
    let mut partner: BTreeMap<usize, usize> = BTreeMap::new();
    for (c, labels) in &boxes {
        let mirror = boxes.get(&-c).map_or(&[][..], Vec::as_slice);
        if mirror.len() != labels.len() {
            return Err(Error::InvalidComplex(format!(
                "boxes at Alexander gradings {c} and {} do not pair up",
                -c
            )));
        }
        partner.extend(labels.iter().copied().zip(mirror.iter().copied()));
    }
    let mut sigma = Vec::with_capacity(gens.len());
    for g in gens {
        let image = match parse_name(&g.name) {
            Some(('a', j)) if (1..=stair).contains(&j) => format!("a{}", stair + 1 - j),
            Some((kind @ ('x' | 'y' | 'z' | 'w'), l)) if partner.contains_key(&l) => {
                let swapped = match kind {
                    'y' => 'z',
                    'z' => 'y',
                    other => other,
                };
                format!("{swapped}{}", partner[&l])
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "generator {} is not part of a thin model",
                    g.name
                )))
            }
        };
        sigma.push(k.index_of(&image).ok_or_else(|| {
            Error::InvalidComplex(format!("mirror generator {image} is missing"))
        })?);
    }
    for (x, &y) in sigma.iter().enumerate() {
        let (gx, gy) = (&gens[x], &gens[y]);
        if gy.alexander != -gx.alexander || gy.maslov != &gx.maslov - qi(2 * gx.alexander) {
            return Err(Error::InvalidComplex(format!(
                "{} and {} do not have mirrored bigradings",
                gx.name, gy.name
            )));
        }
    }
    for a in k.arrows() {
        let swapped = k.arrows().iter().any(|b| {
            b.from == sigma[a.from]
                && b.to == sigma[a.to]
                && (b.i_drop, b.j_drop) == (a.j_drop, a.i_drop)
        });
        if !swapped {
            return Err(Error::InvalidComplex(format!(
                "arrow {} -> {} has no mirror",
                gens[a.from].name, gens[a.to].name
            )));
        }
    }
    Ok(sigma)
}

/// Twisted mapping cone for `0`-surgery in the torsion Spin^c structure,
/// minus flavor, with `t` acting by `t^d`:
/// `v + t^d h : A_0 -> B` where `A_0 = C{i <= 0, j <= 0}` and `B = C{i <= 0}`.
///
/// `v` is the inclusion and `h` is the projection to `C{j <= 0}` followed by
/// [`flip_symmetry`]. Both parts are free over `F2(t)[U]` with one generator
/// per generator of `k`.
pub fn twisted_zero_surgery_cone(k: &KnotComplex, d: i64) -> Result<ChainComplex<RatFuncU>> {
    let sigma = flip_symmetry(k)?;
    let gens = k.generators();
    let n = gens.len();
    let lowest: Vec<i64> = gens.iter().map(|g| (-g.alexander).min(0)).collect();
    let one = RatFunc::one();

    let a_gens: Vec<Generator> = gens
        .iter()
        .zip(&lowest)
        .map(|(g, &i)| Generator::new(format!("A.{}", g.name), &g.maslov + qi(2 * i)))
        .collect();
    let b_gens: Vec<Generator> = gens
        .iter()
        .map(|g| Generator::new(format!("B.{}", g.name), g.maslov.clone()))
        .collect();
    let mut da: Vec<(usize, usize, RatFuncU)> = Vec::new();
    let mut db: Vec<(usize, usize, RatFuncU)> = Vec::new();
    for a in k.arrows() {
        let e = lowest[a.to] - lowest[a.from] + a.i_drop as i64;
        da.push((a.to, a.from, u_power(e, &one)));
        db.push((a.to, a.from, u_power(a.i_drop as i64, &one)));
    }
    let source = ChainComplex::from_entries(a_gens, da)?;
    let target = ChainComplex::from_entries(b_gens, db)?;

    let twist = RatFunc::t_power(d);
    let mut map: Matrix<RatFuncU> = Matrix::zeros(n, n);
    for x in 0..n {
        let v = u_power(-lowest[x], &one);
        map.set(x, x, map.get(x, x).clone() + v);
        let h = u_power(-gens[x].alexander.min(0), &twist);
        let y = sigma[x];
        map.set(y, x, map.get(y, x).clone() + h);
    }
    mapping_cone(
        &ChainMap::new(map, Q::from_integer(0.into())),
        &source,
        &target,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::Summand;
    use crate::knots::{build_thin_complex, ThinKnotSpec};
    use crate::rings::RingTag;

    fn thin(alexander: Vec<i64>, sigma: i64) -> KnotComplex {
        build_thin_complex(&ThinKnotSpec::new(alexander, sigma).unwrap()).unwrap()
    }

    #[test]
    fn flip_is_an_involution() {
        for k in [
            thin(vec![3, -5, 3], -2),
            thin(vec![1, -1, 1], 2),
            thin(vec![-1, 3, -1], 0),
            thin(vec![1, -1, 1, -1, 1], -4),
            thin(vec![2, -4, 5, -4, 2], 0),
        ] {
            let s = flip_symmetry(&k).unwrap();
            assert!(s.iter().enumerate().all(|(x, &y)| s[y] == x));
        }
    }

    #[test]
    fn unknot_cone_is_acyclic() {
        let u = build_thin_complex(&ThinKnotSpec::unknot()).unwrap();
        let h = twisted_zero_surgery_cone(&u, 1)
            .unwrap()
            .homology()
            .unwrap();
        assert!(h.is_zero(), "{h}");
    }

    #[test]
    fn twist_knot_cone_rank() {
        for n in 1..5 {
            let k = build_thin_complex(&ThinKnotSpec::twist_knot(n).unwrap()).unwrap();
            for d in [1, -1, 3] {
                let h = twisted_zero_surgery_cone(&k, d)
                    .unwrap()
                    .homology()
                    .unwrap();
                assert_eq!(h.summands.len(), 1, "{h}");
                let Summand::UTorsion {
                    ring,
                    exponent,
                    rank,
                    ..
                } = &h.summands[0]
                else {
                    panic!("{h}")
                };
                assert_eq!(
                    (*ring, *exponent, *rank),
                    (RingTag::RatFuncU, 1, n as usize)
                );
            }
        }
    }
}
