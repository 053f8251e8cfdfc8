//! Matrices over an arbitrary, possibly noncommutative, carrier.
//!
//! Entry `a^i_j` sits in row `i` and column `j`. Two products are defined:
//!
//! - rc (row over column): `(rc(a, b))^i_j = Σ_k a^i_k b^k_j`
//! - cr (column over row): `(cr(a, b))^i_j = Σ_k a^k_j b^i_k`
//!
//! The factor order inside each sum is the operand order, so over a
//! noncommutative carrier the two products genuinely differ.

mod expr;
mod file;

use std::fmt;

pub use expr::MatExpr;
pub use file::MatrixFile;

use crate::algebra::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Minimal ring interface needed by the matrix engine.
///
/// The ring value is a context object: elements need not know how to build
/// a zero on their own.
pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    /// Whether `a` is an element of this ring.
    fn owns(&self, _a: &Self::Elem) -> bool {
        true
    }
}

/// The field of rationals as a [`Ring`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Option<Rational> {
        Some(Rational::one())
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

impl Ring for Algebra {
    type Elem = AlgElem;

    fn zero(&self) -> AlgElem {
        Algebra::zero(self)
    }
    fn one(&self) -> Option<AlgElem> {
        Algebra::one(self)
    }
    fn add(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        a + b
    }
    fn neg(&self, a: &AlgElem) -> AlgElem {
        -a
    }
    fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        a * b
    }
    fn is_zero(&self, a: &AlgElem) -> bool {
        a.is_zero()
    }
    fn owns(&self, a: &AlgElem) -> bool {
        a.algebra().same_as(self)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GenMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq + fmt::Debug> GenMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(GenMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        GenMatrix { rows, cols, data }
    }

    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        GenMatrix {
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    /// `E_n = (δ^i_j)`; fails for rings without a unit.
    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Result<Self> {
        let one = ring.one().ok_or_else(|| Error::NonUnital("matrix carrier".into()))?;
        let zero = ring.zero();
        Ok(GenMatrix::from_fn(n, n, |i, j| {
            if i == j {
                one.clone()
            } else {
                zero.clone()
            }
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn map<F: Clone + PartialEq + fmt::Debug>(&self, f: impl FnMut(&E) -> F) -> GenMatrix<F> {
        GenMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// `(aᵀ)^i_j = a^j_i`.
    pub fn transpose(&self) -> Self {
        GenMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_owned<R: Ring<Elem = E>>(&self, ring: &R) -> Result<()> {
        if self.data.iter().all(|e| ring.owns(e)) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: "matrix carrier".into(),
                right: "matrix entry".into(),
            })
        }
    }

    /// Row-over-column product: `Σ_k a^i_k b^k_j`. Needs `a.cols = b.rows`.
    pub fn rc<R: Ring<Elem = E>>(&self, b: &Self, ring: &R) -> Result<Self> {
        if self.cols != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "rc-product of {}x{} and {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        self.check_owned(ring)?;
        b.check_owned(ring)?;
        Ok(GenMatrix::from_fn(self.rows, b.cols, |i, j| {
            sum_products(ring, (0..self.cols).map(|k| (self.get(i, k), b.get(k, j))))
        }))
    }

    /// Column-over-row product: `Σ_k a^k_j b^i_k`, the `a` factor first.
    /// Needs `a.rows = b.cols`; the result is `b.rows x a.cols`.
    pub fn cr<R: Ring<Elem = E>>(&self, b: &Self, ring: &R) -> Result<Self> {
        if self.rows != b.cols {
            return Err(Error::DimensionMismatch(format!(
                "cr-product of {}x{} and {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        self.check_owned(ring)?;
        b.check_owned(ring)?;
        Ok(GenMatrix::from_fn(b.rows, self.cols, |i, j| {
            sum_products(ring, (0..self.rows).map(|k| (self.get(k, j), b.get(i, k))))
        }))
    }

    pub fn sum<R: Ring<Elem = E>>(&self, b: &Self, ring: &R) -> Result<Self> {
        if self.shape() != b.shape() {
            return Err(Error::DimensionMismatch(format!(
                "sum of {}x{} and {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        self.check_owned(ring)?;
        b.check_owned(ring)?;
        Ok(GenMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&b.data).map(|(x, y)| ring.add(x, y)).collect(),
        })
    }

    pub fn neg<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        self.map(|x| ring.neg(x))
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }
}

fn sum_products<'a, R: Ring>(ring: &R, terms: impl Iterator<Item = (&'a R::Elem, &'a R::Elem)>) -> R::Elem
where
    R::Elem: 'a,
{
    terms.fold(ring.zero(), |acc, (x, y)| {
        if ring.is_zero(x) || ring.is_zero(y) {
            acc
        } else {
            ring.add(&acc, &ring.mul(x, y))
        }
    })
}

impl<E: fmt::Debug> fmt::Debug for GenMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

/// Rational matrices (the coordinate-free case `algebra: null`).
pub type QMatrix = GenMatrix<Rational>;

impl QMatrix {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        GenMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::load_builtin;

    fn quat_unit_matrices() -> (Algebra, GenMatrix<AlgElem>, GenMatrix<AlgElem>) {
        let h = load_builtin("quaternion").unwrap();
        let mut a = GenMatrix::zeros(&h, 2, 2);
        a.set(0, 1, h.basis_element(1));
        let mut b = GenMatrix::zeros(&h, 2, 2);
        b.set(1, 0, h.basis_element(2));
        (h, a, b)
    }

    #[test]
    fn rc_of_matrix_units() {
        let (h, a, b) = quat_unit_matrices();
        let p = a.rc(&b, &h).unwrap();
        let mut expected = GenMatrix::zeros(&h, 2, 2);
        expected.set(0, 0, h.basis_element(3));
        assert_eq!(p, expected);
    }

    #[test]
    fn cr_of_matrix_units() {
        let (h, a, b) = quat_unit_matrices();
        let p = a.cr(&b, &h).unwrap();
        let mut expected = GenMatrix::zeros(&h, 2, 2);
        expected.set(1, 1, h.basis_element(3));
        assert_eq!(p, expected);
    }

    #[test]
    fn common_identity() {
        let (h, a, _) = quat_unit_matrices();
        let id = GenMatrix::identity(&h, 2).unwrap();
        assert_eq!(id.rc(&a, &h).unwrap(), a);
        assert_eq!(a.rc(&id, &h).unwrap(), a);
        assert_eq!(a.cr(&id, &h).unwrap(), a);
        assert_eq!(id.cr(&a, &h).unwrap(), a);
        assert_eq!(id.transpose(), id);
    }

    #[test]
    fn rational_products() {
        let a = QMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = QMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.rc(&b, &Rationals).unwrap(), QMatrix::from_ints(&[&[2, 1], &[4, 3]]));
        assert_eq!(b.cr(&a, &Rationals).unwrap(), a.rc(&b, &Rationals).unwrap());
    }

    #[test]
    fn transpose_and_sum() {
        let (h, a, _) = quat_unit_matrices();
        let t = a.transpose();
        assert_eq!(t.get(1, 0), &h.basis_element(1));
        assert!(t.get(0, 1).is_zero());
        assert_eq!(t.transpose(), a);
        assert!(a.sum(&a.neg(&h), &h).unwrap().is_zero(&h));
    }

    #[test]
    fn shape_errors() {
        let a = QMatrix::from_ints(&[&[1, 2, 3]]);
        let b = QMatrix::from_ints(&[&[1, 2]]);
        assert!(a.rc(&b, &Rationals).is_err());
        assert!(a.sum(&b, &Rationals).is_err());
        // cr needs a.rows == b.cols: 1 vs 2
        assert!(a.cr(&b, &Rationals).is_err());
        let c = QMatrix::from_ints(&[&[1], &[2]]);
        assert_eq!(a.cr(&b.transpose(), &Rationals).map(|m| m.shape()), Ok((2, 3)));
        assert!(a.rc(&c, &Rationals).is_err());
    }

    #[test]
    fn rejects_foreign_entries() {
        let h = load_builtin("quaternion").unwrap();
        let c = load_builtin("complex").unwrap();
        let a = GenMatrix::identity(&c, 1).unwrap();
        let b = GenMatrix::identity(&h, 1).unwrap();
        assert!(matches!(a.rc(&a, &h), Err(Error::AlgebraMismatch { .. })));
        assert!(b.rc(&b, &h).is_ok());
    }
}
