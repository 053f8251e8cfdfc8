use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense rectangular matrix of rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl DMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(DMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from small integers; handy in tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        DMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular integer matrix")
    }

    /// A single column holding `v`.
    pub fn column(v: Vec<Rational>) -> Self {
        DMatrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    /// Matrix whose `j`-th column is `cols[j]`; every column must have length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Result<Self> {
        let mut m = DMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = DMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &DMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = DMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, rhs: &DMatrix) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        Ok(DMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Reduces to reduced row echelon form in place and returns the pivot
    /// columns. The pivot for each column is the first nonzero entry at or
    /// below the current row.
    fn row_reduce(&mut self, pivot_limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_limit.min(self.cols) {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &factor * &self[(r, j)];
                    self[(i, j)] -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for DMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for DMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl Serialize for DMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(d)?;
        DMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Solution set of `A x = b` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    NoSolution,
    /// One particular solution plus a basis of the nullspace of `A`.
    Infinite {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
}

impl Solution {
    /// A representative solution, if any.
    pub fn any(&self) -> Option<&[Rational]> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Infinite { particular, .. } => Some(particular),
            Solution::NoSolution => None,
        }
    }

    /// Whether `x` belongs to the solution set.
    pub fn contains(&self, a: &DMatrix, b: &[Rational], x: &[Rational]) -> bool {
        match self {
            Solution::NoSolution => false,
            Solution::Unique(u) => u == x,
            Solution::Infinite { .. } => a.mul_vec(x).map(|ax| ax == b).unwrap_or(false),
        }
    }
}

/// Solves `A x = b` exactly. `b` is a column given as a slice.
pub fn solve_linear(a: &DMatrix, b: &[Rational]) -> Result<Solution> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "system has {} rows but right-hand side has {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut aug = DMatrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let pivots = aug.row_reduce(n);
    let rank = pivots.len();
    if (rank..aug.rows()).any(|i| !aug[(i, n)].is_zero()) {
        return Ok(Solution::NoSolution);
    }
    let mut particular = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[(r, n)].clone();
    }
    if rank == n {
        return Ok(Solution::Unique(particular));
    }
    let nullspace = free_columns(&pivots, n)
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&aug[(r, f)];
            }
            v
        })
        .collect();
    Ok(Solution::Infinite { particular, nullspace })
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(a: &DMatrix) -> Vec<Vec<Rational>> {
    match solve_linear(a, &vec![Rational::zero(); a.rows()]).expect("shapes agree") {
        Solution::Infinite { nullspace, .. } => nullspace,
        _ => Vec::new(),
    }
}

/// Row rank over the rationals.
pub fn rank(a: &DMatrix) -> usize {
    let mut m = a.clone();
    m.row_reduce(a.cols()).len()
}

fn free_columns(pivots: &[usize], n: usize) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |c| !pivots.contains(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn identity_system() {
        let s = solve_linear(&DMatrix::identity(2), &qs(&[3, -1])).unwrap();
        assert_eq!(s, Solution::Unique(qs(&[3, -1])));
    }

    #[test]
    fn one_by_one_division() {
        let s = solve_linear(&DMatrix::from_ints(&[&[2]]), &qs(&[3])).unwrap();
        assert_eq!(s, Solution::Unique(vec![Rational::new(3, 2).unwrap()]));
    }

    #[test]
    fn dependent_rows_give_infinite_family() {
        let a = DMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        let s = solve_linear(&a, &qs(&[1, 2])).unwrap();
        assert_eq!(
            s,
            Solution::Infinite {
                particular: qs(&[1, 0]),
                nullspace: vec![qs(&[-2, 1])],
            }
        );
    }

    #[test]
    fn inconsistent_system() {
        let a = DMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve_linear(&a, &qs(&[1, 3])).unwrap(), Solution::NoSolution);
    }

    #[test]
    fn rhs_length_mismatch() {
        assert!(matches!(
            solve_linear(&DMatrix::identity(2), &qs(&[1])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&DMatrix::identity(3)), 3);
        assert_eq!(rank(&DMatrix::zeros(2, 2)), 0);
        assert_eq!(rank(&DMatrix::from_ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&DMatrix::zeros(0, 3)), 0);
    }

    #[test]
    fn wide_and_tall_systems() {
        // x + y + z = 1 has a two-dimensional nullspace
        let a = DMatrix::from_ints(&[&[1, 1, 1]]);
        let Solution::Infinite { nullspace, .. } = solve_linear(&a, &qs(&[1])).unwrap() else {
            panic!("expected infinite family");
        };
        assert_eq!(nullspace.len(), 2);
        for v in &nullspace {
            assert!(a.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
        let tall = DMatrix::from_ints(&[&[1], &[1]]);
        assert_eq!(solve_linear(&tall, &qs(&[2, 2])).unwrap(), Solution::Unique(qs(&[2])));
        assert_eq!(solve_linear(&tall, &qs(&[2, 3])).unwrap(), Solution::NoSolution);
    }
}
