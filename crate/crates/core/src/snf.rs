//! Smith normal form over Euclidean domains and signatures of integer forms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rings::{EuclideanDomain, Q};

/// `p * m * q == d` with `p`, `q` invertible and `d` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm<R> {
    pub diagonal: Vec<R>,
    pub rank: usize,
    pub p: Matrix<R>,
    pub p_inv: Matrix<R>,
    pub q: Matrix<R>,
    pub d: Matrix<R>,
}

struct Reducer<R> {
    a: Matrix<R>,
    p: Matrix<R>,
    p_inv: Matrix<R>,
    q: Matrix<R>,
}

impl<R: EuclideanDomain> Reducer<R> {
    fn new(m: &Matrix<R>) -> Self {
        Reducer {
            a: m.clone(),
            p: Matrix::identity(m.rows()),
            p_inv: Matrix::identity(m.rows()),
            q: Matrix::identity(m.cols()),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
    }

    /// `row[target] += c * row[source]`
    fn add_row(&mut self, target: usize, source: usize, c: &R) {
        self.a.add_row_multiple(target, source, c);
        self.p.add_row_multiple(target, source, c);
        self.p_inv.add_col_multiple(source, target, &-c.clone());
    }

    fn add_col(&mut self, target: usize, source: usize, c: &R) {
        self.a.add_col_multiple(target, source, c);
        self.q.add_col_multiple(target, source, c);
    }

    fn scale_row(&mut self, i: usize, unit: &R) {
        let inv = unit.unit_inverse().expect("scaling by a unit");
        self.a.scale_row(i, unit);
        self.p.scale_row(i, unit);
        self.p_inv.scale_col(i, &inv);
    }

    /// Nonzero entry of least norm in the trailing block, ties to the lowest (row, col).
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(R::Norm, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let n = v.norm();
                if best.as_ref().is_none_or(|(bn, _, _)| n < *bn) {
                    best = Some((n, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row and column `t` outside the diagonal, starting from step `t`.
    /// Returns the number of nonzero diagonal entries.
    fn diagonalize_from(&mut self, start: usize) -> usize {
        let mut t = start;
        while t < self.a.rows().min(self.a.cols()) {
            let Some((pi, pj)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..self.a.rows() {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let (quo, rem) = self.a.get(i, t).div_rem(self.a.get(t, t));
                    self.add_row(i, t, &-quo);
                    if !rem.is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.a.cols() {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let (quo, rem) = self.a.get(t, j).div_rem(self.a.get(t, t));
                    self.add_col(j, t, &-quo);
                    if !rem.is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
                // a remainder of smaller norm survived: move it to the pivot slot
                let mut best: Option<(R::Norm, usize, usize)> = None;
                let cands = (t..self.a.rows())
                    .map(|i| (i, t))
                    .chain((t + 1..self.a.cols()).map(|j| (t, j)));
                for (i, j) in cands {
                    let v = self.a.get(i, j);
                    if v.is_zero() {
                        continue;
                    }
                    let n = v.norm();
                    if best.as_ref().is_none_or(|(bn, _, _)| n < *bn) {
                        best = Some((n, i, j));
                    }
                }
                let (_, bi, bj) = best.expect("pivot row or column is nonzero");
                self.swap_rows(t, bi);
                self.swap_cols(t, bj);
            }
            t += 1;
        }
        t
    }

    fn finish(self, rank: usize) -> SmithForm<R> {
        let diagonal = (0..rank).map(|i| self.a.get(i, i).clone()).collect();
        SmithForm {
            diagonal,
            rank,
            p: self.p,
            p_inv: self.p_inv,
            q: self.q,
            d: self.a,
        }
    }
}

/// Diagonal form `p * m * q = d` without the divisibility chain.
///
/// Pivoting always takes an entry of least norm, so when every entry is a
/// monomial in `U` the diagonal consists of monomials and homogeneity is kept.
pub fn diagonalize<R: EuclideanDomain>(m: &Matrix<R>) -> SmithForm<R> {
    let mut r = Reducer::new(m);
    let rank = r.diagonalize_from(0);
    r.finish(rank)
}

pub fn smith_normal_form<R: EuclideanDomain>(m: &Matrix<R>) -> SmithForm<R> {
    let mut r = Reducer::new(m);
    let mut rank = r.diagonalize_from(0);
    'fix: loop {
        for i in 0..rank {
            for j in i + 1..rank {
                if !r.a.get(i, i).divides(r.a.get(j, j)) {
                    // put d_j into row i, then the gcd takes over position (i, i)
                    r.add_row(i, j, &R::one());
                    rank = r.diagonalize_from(i);
                    continue 'fix;
                }
            }
        }
        break;
    }
    for i in 0..rank {
        let u = r.a.get(i, i).unit_normalizer();
        if !u.is_one() {
            r.scale_row(i, &u);
        }
    }
    r.finish(rank)
}

/// Signature of a symmetric integer matrix by congruence diagonalization over Q.
pub fn signature(m: &Matrix<BigInt>) -> Result<i64> {
    if !m.is_square() {
        return Err(Error::Shape("signature needs a square matrix".into()));
    }
    if *m != m.transpose() {
        return Err(Error::Shape("signature needs a symmetric matrix".into()));
    }
    let n = m.rows();
    let mut a = m.map(|x| Q::from_integer(x.clone()));
    let mut sig = 0i64;
    for k in 0..n {
        if a.get(k, k).is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a.get(i, i).is_zero()) {
                a.swap_rows(k, i);
                a.swap_cols(k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                // diagonal is zero here, so this makes a[k][k] = 2 a[k][j]
                let one = Q::from_integer(1.into());
                a.add_row_multiple(k, j, &one);
                a.add_col_multiple(k, j, &one);
            } else {
                continue;
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            if a.get(i, k).is_zero() {
                continue;
            }
            let c = -(a.get(i, k) / &pivot);
            a.add_row_multiple(i, k, &c);
            a.add_col_multiple(i, k, &c);
        }
        sig += if pivot.is_positive() { 1 } else { -1 };
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{F2Poly, LaurentPoly, Poly, RatFunc, Ring};
    use num_traits::One;
    use proptest::prelude::*;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    fn check<R: EuclideanDomain>(m: &Matrix<R>, s: &SmithForm<R>) {
        assert_eq!(&(&s.p * m) * &s.q, s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(&s.p * &s.p_inv, Matrix::identity(m.rows()));
        for w in s.diagonal.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        for d in &s.diagonal {
            assert_eq!(d.normalized(), *d);
        }
    }

    #[test]
    fn linking_matrix() {
        let m = z(&[&[-1, 1], &[1, 0]]);
        let s = smith_normal_form(&m);
        check(&m, &s);
        assert_eq!(s.diagonal, vec![BigInt::one(), BigInt::one()]);
        assert_eq!(signature(&m).unwrap(), 0);
        assert_eq!(signature(&z(&[&[1]])).unwrap(), 1);
        assert_eq!(signature(&z(&[&[-1]])).unwrap(), -1);
        assert!(signature(&z(&[&[0, 1], &[2, 0]])).is_err());
    }

    #[test]
    fn identity_over_f2_poly() {
        let m: Matrix<F2Poly> = Matrix::identity(3);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank, 3);
        assert!(s.diagonal.iter().all(|d| d.is_one()));
    }

    #[test]
    fn already_diagonal_over_ratfunc_u() {
        let u = |k| Poly::<RatFunc>::u_power(k);
        let m = Matrix::from_rows(vec![vec![u(1), Poly::zero()], vec![Poly::zero(), u(2)]]);
        let s = smith_normal_form(&m);
        check(&m, &s);
        assert_eq!(s.diagonal, vec![u(1), u(2)]);
    }

    #[test]
    fn divisibility_fix() {
        let m = z(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&m);
        check(&m, &s);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        let m = z(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]);
        let s = smith_normal_form(&m);
        check(&m, &s);
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(60)]
        );
    }

    #[test]
    fn zero_and_empty() {
        let m: Matrix<BigInt> = Matrix::zeros(2, 3);
        assert_eq!(smith_normal_form(&m).rank, 0);
        let m: Matrix<BigInt> = Matrix::zeros(0, 3);
        assert_eq!(smith_normal_form(&m).rank, 0);
    }

    fn int_matrix() -> impl Strategy<Value = Matrix<BigInt>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..9, r * c)
                .prop_map(move |v| Matrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
        })
    }

    fn laurent_matrix() -> impl Strategy<Value = Matrix<LaurentPoly>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::btree_set(-3i64..4, 0..3), r * c)
                .prop_map(move |v| {
                    Matrix::from_fn(r, c, |i, j| {
                        LaurentPoly::from_exponents(v[i * c + j].clone())
                    })
                })
        })
    }

    proptest! {
        #[test]
        fn integer_round_trip(m in int_matrix()) {
            let s = smith_normal_form(&m);
            check(&m, &s);
            prop_assert!(s.p.determinant().unwrap().is_unit());
            prop_assert!(s.q.determinant().unwrap().is_unit());
            prop_assert_eq!(s.rank, m.map(|x| Q::from_integer(x.clone())).rank());
        }

        #[test]
        fn laurent_round_trip(m in laurent_matrix()) {
            let s = smith_normal_form(&m);
            check(&m, &s);
            prop_assert!(s.p.determinant().unwrap().is_unit());
            prop_assert!(s.q.determinant().unwrap().is_unit());
        }

        #[test]
        fn signature_congruence_invariant(
            sym in proptest::collection::vec(-5i64..5, 10),
            ops in proptest::collection::vec((0usize..4, 0usize..4, -2i64..3), 0..6),
        ) {
            let mut m = Matrix::<BigInt>::zeros(4, 4);
            let mut k = 0;
            for i in 0..4 {
                for j in i..4 {
                    m.set(i, j, BigInt::from(sym[k]));
                    m.set(j, i, BigInt::from(sym[k]));
                    k += 1;
                }
            }
            let mut s = Matrix::<BigInt>::identity(4);
            for (a, b, c) in ops {
                if a != b {
                    s.add_col_multiple(a, b, &BigInt::from(c));
                }
            }
            let congruent = &(&s.transpose() * &m) * &s;
            prop_assert_eq!(signature(&m).unwrap(), signature(&congruent).unwrap());
        }
    }

    #[test]
    fn ring_tags() {
        assert_eq!(BigInt::ring_tag().name(), "Z");
    }
}
