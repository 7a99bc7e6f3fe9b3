//! Seeded generators for matrices, complexes, chain maps and modules.
//!
//! Complexes are built from elementary pieces (single generators and
//! two-generator pieces `x -> c U^k y`) and then scrambled by random
//! grading-preserving changes of basis, so every output satisfies the
//! grading and `∂² = 0` checks by construction.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::complexes::{ChainComplex, ChainMap, Generator, GradedModule, Summand};
use crate::knots::ThinKnotSpec;
use crate::matrix::Matrix;
use crate::rings::{q, qi, F2Poly, LaurentPoly, Poly, RatFunc, Ring, RingTag, F2, Q};

/// Rings that can produce small random elements.
pub trait Sample: Ring {
    /// A small random element, zero with positive probability.
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self;

    /// A random nonzero element of `U`-degree zero.
    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> Self;

    /// `U^k`, or `None` for rings without `U` unless `k == 0`.
    fn u_monomial(k: u32) -> Option<Self> {
        (k == 0).then(Self::one)
    }
}

fn small_f2poly<G: Rng + ?Sized>(rng: &mut G, max_degree: usize) -> F2Poly {
    let bits: Vec<bool> = (0..=max_degree).map(|_| rng.gen_bool(0.5)).collect();
    F2Poly::from_bits(&bits)
}

impl Sample for BigInt {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        if rng.gen_bool(0.3) {
            BigInt::zero()
        } else {
            BigInt::from(rng.gen_range(-9i64..=9))
        }
    }

    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let v = rng.gen_range(1i64..=3);
        BigInt::from(if rng.gen_bool(0.5) { v } else { -v })
    }
}

impl Sample for Q {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        if rng.gen_bool(0.3) {
            Q::zero()
        } else {
            q(rng.gen_range(-9..=9), rng.gen_range(1..=4))
        }
    }

    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let v = q(rng.gen_range(1..=5), rng.gen_range(1..=3));
        if rng.gen_bool(0.5) {
            v
        } else {
            -v
        }
    }
}

impl Sample for F2 {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        F2(rng.gen_bool(0.5))
    }

    fn sample_scalar<G: Rng + ?Sized>(_rng: &mut G) -> Self {
        F2(true)
    }
}

impl Sample for F2Poly {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        small_f2poly(rng, 3)
    }

    fn sample_scalar<G: Rng + ?Sized>(_rng: &mut G) -> Self {
        F2Poly::one()
    }

    fn u_monomial(k: u32) -> Option<Self> {
        Some(F2Poly::monomial(k as usize))
    }
}

impl Sample for LaurentPoly {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let exps: Vec<i64> = (-2..=2).filter(|_| rng.gen_bool(0.4)).collect();
        LaurentPoly::from_exponents(exps)
    }

    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> Self {
        loop {
            let p = Self::sample(rng);
            if !p.is_zero() {
                return p;
            }
        }
    }
}

impl Sample for RatFunc {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let num = small_f2poly(rng, 2);
        let den = loop {
            let d = small_f2poly(rng, 1);
            if !d.is_zero() {
                break d;
            }
        };
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> Self {
        loop {
            let p = Self::sample(rng);
            if !p.is_zero() {
                return p;
            }
        }
    }
}

impl Sample for Poly<RatFunc> {
    fn sample<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let len = rng.gen_range(0..=3);
        Poly::from_coeffs((0..len).map(|_| RatFunc::sample(rng)).collect())
    }

    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> Self {
        Poly::constant(RatFunc::sample_scalar(rng))
    }

    fn u_monomial(k: u32) -> Option<Self> {
        Some(Poly::u_power(k as usize))
    }
}

pub fn random_matrix<R: Sample, G: Rng + ?Sized>(
    rng: &mut G,
    rows: usize,
    cols: usize,
) -> Matrix<R> {
    Matrix::from_fn(rows, cols, |_, _| R::sample(rng))
}

/// `c U^k` with `k = (target - source) / 2`, if that is a valid degree.
fn graded_scalar<R: Sample, G: Rng + ?Sized>(rng: &mut G, target: &Q, source: &Q) -> Option<R> {
    let diff = target - source;
    if diff < Q::zero() || !diff.is_integer() {
        return None;
    }
    let d = diff.to_integer();
    if d.clone() % 2 != BigInt::zero() {
        return None;
    }
    let k = u32::try_from(d / 2).ok()?;
    Some(R::u_monomial(k)? * R::sample_scalar(rng))
}

/// Gradings and differential of a direct sum of elementary pieces.
fn random_pieces<R: Sample, G: Rng + ?Sized>(rng: &mut G, n: usize) -> (Vec<Q>, Matrix<R>) {
    let mut gradings = Vec::with_capacity(n);
    let mut arrows = Vec::new();
    while gradings.len() < n {
        let g = qi(rng.gen_range(-4..=4));
        if n - gradings.len() >= 2 && rng.gen_bool(0.6) {
            let k = if R::has_u() { rng.gen_range(0..=2) } else { 0 };
            let c = R::u_monomial(k).expect("U power") * R::sample_scalar(rng);
            let x = gradings.len();
            gradings.push(&g + qi(1) - qi(2 * k as i64));
            gradings.push(g);
            arrows.push((x + 1, x, c));
        } else {
            gradings.push(g);
        }
    }
    let mut d: Matrix<R> = Matrix::zeros(n, n);
    for (i, j, c) in arrows {
        d.set(i, j, c);
    }
    (gradings, d)
}

/// Random graded automorphism `a` and its inverse.
fn random_basis_change<R: Sample, G: Rng + ?Sized>(
    rng: &mut G,
    gradings: &[Q],
    steps: usize,
) -> (Matrix<R>, Matrix<R>) {
    let n = gradings.len();
    let mut a = Matrix::identity(n);
    let mut a_inv = Matrix::identity(n);
    if n < 2 {
        return (a, a_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let Some(c) = graded_scalar::<R, G>(rng, &gradings[i], &gradings[j]) else {
            continue;
        };
        // a <- a (I + c E_ij), a_inv <- (I - c E_ij) a_inv
        a.add_col_multiple(j, i, &c);
        a_inv.add_row_multiple(i, j, &(-c));
    }
    (a, a_inv)
}

fn permute<R: Ring>(gradings: &mut Vec<Q>, d: &mut Matrix<R>, perm: &[usize]) {
    let n = perm.len();
    let old = d.clone();
    *d = Matrix::from_fn(n, n, |i, j| old.get(perm[i], perm[j]).clone());
    *gradings = perm.iter().map(|&p| gradings[p].clone()).collect();
}

fn named(gradings: &[Q]) -> Vec<Generator> {
    gradings
        .iter()
        .enumerate()
        .map(|(i, g)| Generator::new(format!("g{i}"), g.clone()))
        .collect()
}

fn conjugate<R: Ring>(d: &Matrix<R>, a: &Matrix<R>, a_inv: &Matrix<R>) -> Matrix<R> {
    &(a_inv * d) * a
}

/// Random complex with `1..=max_generators` generators. Complexes over rings
/// with `U` carry the `U_z` tag.
pub fn random_complex<R: Sample, G: Rng + ?Sized>(
    rng: &mut G,
    max_generators: usize,
) -> ChainComplex<R> {
    let n = rng.gen_range(1..=max_generators.max(1));
    let (mut gradings, d) = random_pieces::<R, G>(rng, n);
    let (a, a_inv) = random_basis_change::<R, G>(rng, &gradings, 3 * n);
    let mut d = conjugate(&d, &a, &a_inv);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    permute(&mut gradings, &mut d, &perm);
    let c = ChainComplex::new(named(&gradings), d).expect("random complexes are valid");
    if R::has_u() {
        c.tagged(vec!["U_z".into()])
    } else {
        c
    }
}

/// A random degree-zero chain map `f: a -> b` together with the rank of the
/// map it induces on homology over a field.
///
/// `a = C ⊕ D` and `b = C ⊕ E` with `f` the identity on `C`, both sides
/// scrambled by basis changes, plus a null-homotopic term `∂h + h∂`.
pub struct RandomMap<R> {
    pub source: ChainComplex<R>,
    pub target: ChainComplex<R>,
    pub map: ChainMap<R>,
    pub shared: ChainComplex<R>,
}

pub fn random_chain_map<R: Sample, G: Rng + ?Sized>(
    rng: &mut G,
    max_generators: usize,
) -> RandomMap<R> {
    let part = (max_generators / 3).max(1);
    let sizes = [
        rng.gen_range(1..=part),
        rng.gen_range(0..=part),
        rng.gen_range(0..=part),
    ];
    let (gc, dc) = random_pieces::<R, G>(rng, sizes[0]);
    let (gd, dd) = random_pieces::<R, G>(rng, sizes[1]);
    let (ge, de) = random_pieces::<R, G>(rng, sizes[2]);
    let (nc, nd, ne) = (gc.len(), gd.len(), ge.len());
    let block = |x: &Matrix<R>, y: &Matrix<R>| {
        Matrix::block(
            x,
            &Matrix::zeros(x.rows(), y.cols()),
            &Matrix::zeros(y.rows(), x.cols()),
            y,
        )
        .expect("square blocks")
    };
    let grad_a: Vec<Q> = gc.iter().chain(&gd).cloned().collect();
    let grad_b: Vec<Q> = gc.iter().chain(&ge).cloned().collect();
    let da = block(&dc, &dd);
    let db = block(&dc, &de);
    let f0 = Matrix::from_fn(nc + ne, nc + nd, |i, j| {
        if i == j && i < nc {
            R::one()
        } else {
            R::zero()
        }
    });
    let (s, s_inv) = random_basis_change::<R, G>(rng, &grad_a, 3 * (nc + nd));
    let (t, t_inv) = random_basis_change::<R, G>(rng, &grad_b, 3 * (nc + ne));
    let da = conjugate(&da, &s, &s_inv);
    let db = conjugate(&db, &t, &t_inv);
    let mut f = &(&t_inv * &f0) * &s;
    let h = Matrix::from_fn(grad_b.len(), grad_a.len(), |i, j| {
        if rng.gen_bool(0.5) {
            graded_scalar::<R, G>(rng, &grad_b[i], &(&grad_a[j] + qi(1))).unwrap_or_else(R::zero)
        } else {
            R::zero()
        }
    });
    let homotopy = (&db * &h).try_add(&(&h * &da)).expect("same shape");
    f = f.try_add(&homotopy).expect("same shape");
    RandomMap {
        source: ChainComplex::new(named(&grad_a), da).expect("valid source"),
        target: ChainComplex::new(named(&grad_b), db).expect("valid target"),
        map: ChainMap::new(f, Q::zero()),
        shared: ChainComplex::new(named(&gc), dc).expect("valid shared part"),
    }
}

/// Random finite module over `Lambda[U]` made of `U`-torsion and free
/// summands, with gradings in quarter steps.
pub fn random_lambda_u_module<G: Rng + ?Sized>(rng: &mut G) -> GradedModule {
    let count = rng.gen_range(0..=5);
    let summands = (0..count)
        .map(|_| {
            let grading = Some(q(rng.gen_range(-16..=16), 4));
            let rank = rng.gen_range(1..=3);
            if rng.gen_bool(0.7) {
                Summand::UTorsion {
                    ring: RingTag::LambdaU,
                    exponent: rng.gen_range(1..=4),
                    rank,
                    top: grading,
                }
            } else {
                Summand::FreeField {
                    ring: RingTag::LambdaU,
                    rank,
                    grading,
                    over_u: true,
                }
            }
        })
        .collect();
    GradedModule::new(summands)
}

/// Random thin knot data of genus at most 3: a staircase for `tau` in
/// `-3..=3` plus boxes placed symmetrically about Alexander grading 0.
///
/// The Alexander polynomial is assembled term by term, every generator at
/// Alexander grading `s` contributing `(-1)^(s - tau) t^s`.
pub fn random_thin_spec<G: Rng + ?Sized>(rng: &mut G) -> ThinKnotSpec {
    let tau: i64 = rng.gen_range(-3..=3);
    let h = tau.abs();
    let mut coeffs = [0i64; 7];
    let mut put = |s: i64, count: i64| {
        let sign = if (s - tau).rem_euclid(2) == 0 { 1 } else { -1 };
        coeffs[(s + 3) as usize] += sign * count;
    };
    for s in -h..=h {
        put(s, 1);
    }
    for c in 0..=2i64 {
        let count = if rng.gen_bool(0.5) {
            rng.gen_range(1..=2)
        } else {
            0
        };
        let centres: &[i64] = if c == 0 { &[0] } else { &[c, -c] };
        for &centre in centres {
            put(centre + 1, count);
            put(centre, 2 * count);
            put(centre - 1, count);
        }
    }
    let g = (0..=3)
        .rev()
        .find(|&s| coeffs[(s + 3) as usize] != 0)
        .unwrap_or(0);
    let alexander = coeffs[(3 - g) as usize..=(3 + g) as usize].to_vec();
    ThinKnotSpec::new(alexander, -2 * tau).expect("assembled spec is valid")
}
