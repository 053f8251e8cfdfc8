//! Finite-dimensional algebras over the rationals, described by structural
//! constants `C_ij^k` with `e_i e_j = C_ij^k e_k`.
//!
//! An [`Algebra`] is a cheap, clonable handle to immutable validated data.
//! Elements ([`AlgElem`]) keep a handle to their algebra so mixing elements of
//! different algebras is caught at the operation.

mod builtin;
mod element;
mod file;

use std::fmt;
use std::sync::Arc;

pub use builtin::{builtin_names, cayley_dickson, load_builtin};
pub use element::AlgElem;
pub use file::{AlgebraFile, ConstantEntry};

use crate::error::{Error, Result};
use crate::exact::{nullspace, solve_linear, DMatrix, Rational, Solution};

struct AlgebraData {
    name: String,
    basis: Vec<String>,
    /// Dense `n*n*n` table, index `(i * n + j) * n + k`.
    constants: Vec<Rational>,
    /// Nonzero entries grouped by `(i, j)`.
    products: Vec<Vec<(usize, Rational)>>,
    unit_index: Option<usize>,
    unit: Option<Vec<Rational>>,
    commutative: bool,
    associative: bool,
}

#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

/// Result of [`Algebra::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub commutative: bool,
    pub associative: bool,
    pub nucleus_dim: usize,
    pub center_dim: usize,
}

impl Algebra {
    /// Builds and validates an algebra from a dense constants table
    /// (`constants[(i * n + j) * n + k] = C_ij^k`).
    ///
    /// A declared `unit_index` must actually be a two-sided unit.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        constants: Vec<Rational>,
        unit_index: Option<usize>,
    ) -> Result<Self> {
        let name = name.into();
        let n = basis.len();
        if constants.len() != n * n * n {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} structural constants for dimension {n}, got {}",
                n * n * n,
                constants.len()
            )));
        }
        if let Some(u) = unit_index {
            if u >= n {
                return Err(Error::InvalidAlgebra(format!("unit index {u} out of range")));
            }
        }
        let mut products = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &constants[(i * n + j) * n + k];
                    if !c.is_zero() {
                        products[i * n + j].push((k, c.clone()));
                    }
                }
            }
        }
        let mut data = AlgebraData {
            name,
            basis,
            constants,
            products,
            unit_index,
            unit: None,
            commutative: false,
            associative: false,
        };
        data.commutative = (0..n).all(|i| (0..n).all(|j| data.products[i * n + j] == data.products[j * n + i]));
        let mut alg = Algebra(Arc::new(data));
        let associative = alg.basis_triples_associate();
        let unit = alg.find_unit()?;
        if let Some(u) = unit_index {
            let expected: Vec<Rational> = (0..n)
                .map(|k| if k == u { Rational::one() } else { Rational::zero() })
                .collect();
            if unit.as_ref() != Some(&expected) {
                return Err(Error::InvalidAlgebra(format!(
                    "declared unit `{}` is not a two-sided unit",
                    alg.0.basis[u]
                )));
            }
        }
        let data = Arc::get_mut(&mut alg.0).expect("freshly built");
        data.associative = associative;
        data.unit = unit;
        Ok(alg)
    }

    /// Builds an algebra from sparse `(i, j, k, c)` entries; duplicates are rejected.
    pub fn from_entries(
        name: impl Into<String>,
        basis: Vec<String>,
        entries: &[(usize, usize, usize, Rational)],
        unit_index: Option<usize>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut constants = vec![Rational::zero(); n * n * n];
        let mut seen = vec![false; n * n * n];
        for (i, j, k, c) in entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "constant index ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            let idx = (i * n + j) * n + k;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate structural constant ({i}, {j}, {k})"
                )));
            }
            constants[idx] = c.clone();
        }
        Algebra::new(name, basis, constants, unit_index)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.0.basis
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.0.unit_index
    }

    /// `C_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.0.constants[(i * n + j) * n + k]
    }

    pub fn is_commutative(&self) -> bool {
        self.0.commutative
    }

    pub fn is_associative(&self) -> bool {
        self.0.associative
    }

    pub fn has_unit(&self) -> bool {
        self.0.unit.is_some()
    }

    /// Handles to the same data, or algebras with identical name and constants.
    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.name == other.0.name && self.0.basis == other.0.basis && self.0.constants == other.0.constants)
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem::zero(self)
    }

    /// The two-sided unit, if the algebra has one (it need not be a basis vector).
    pub fn one(&self) -> Option<AlgElem> {
        self.0
            .unit
            .as_ref()
            .map(|u| AlgElem::from_coords(self, u.clone()).expect("unit has algebra dimension"))
    }

    pub fn basis_element(&self, i: usize) -> AlgElem {
        AlgElem::basis(self, i)
    }

    pub fn basis_elements(&self) -> Vec<AlgElem> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// Builds an element from small integer coordinates.
    pub fn elem(&self, coords: &[i64]) -> AlgElem {
        AlgElem::from_ints(self, coords)
    }

    /// Product coordinates `(ab)^k = C_ij^k a^i b^j`.
    pub(crate) fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = &self.0.products[i * n + j];
                if prod.is_empty() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in prod {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check_owns(a)?;
        self.check_owns(b)?;
        Ok(AlgElem::from_coords_unchecked(
            self,
            self.mul_coords(a.coords(), b.coords()),
        ))
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        Ok(&self.mul(a, b)? - &self.mul(b, a)?)
    }

    /// `(ab)c - a(bc)`.
    pub fn associator(&self, a: &AlgElem, b: &AlgElem, c: &AlgElem) -> Result<AlgElem> {
        let left = self.mul(&self.mul(a, b)?, c)?;
        let right = self.mul(a, &self.mul(b, c)?)?;
        Ok(&left - &right)
    }

    pub(crate) fn check_owns(&self, a: &AlgElem) -> Result<()> {
        if a.algebra().same_as(self) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.name().to_string(),
                right: a.algebra().name().to_string(),
            })
        }
    }

    fn basis_triples_associate(&self) -> bool {
        let basis = self.basis_elements();
        basis.iter().all(|a| {
            basis.iter().all(|b| {
                basis
                    .iter()
                    .all(|c| self.associator(a, b, c).expect("same algebra").is_zero())
            })
        })
    }

    /// Solves `u e_j = e_j = e_j u` for all `j`.
    fn find_unit(&self) -> Result<Option<Vec<Rational>>> {
        let n = self.dim();
        if n == 0 {
            return Ok(None);
        }
        let basis = self.basis_elements();
        // unknown u = u^t e_t; equation rows: coords of e_t e_j and e_j e_t
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for (j, ej) in basis.iter().enumerate() {
            let left: Vec<Vec<Rational>> = basis
                .iter()
                .map(|et| self.mul_coords(et.coords(), ej.coords()))
                .collect();
            let right: Vec<Vec<Rational>> = basis
                .iter()
                .map(|et| self.mul_coords(ej.coords(), et.coords()))
                .collect();
            for side in [&left, &right] {
                for k in 0..n {
                    rows.push(side.iter().map(|row| row[k].clone()).collect::<Vec<_>>());
                    rhs.push(if k == j { Rational::one() } else { Rational::zero() });
                }
            }
        }
        let system = DMatrix::from_rows(rows)?;
        Ok(match solve_linear(&system, &rhs)? {
            Solution::Unique(u) => Some(u),
            // a unit is unique whenever it exists
            Solution::Infinite { particular, .. } => Some(particular),
            Solution::NoSolution => None,
        })
    }

    /// Commutativity, associativity and the dimensions of the nucleus and center.
    pub fn classify(&self) -> Classification {
        let n = self.dim();
        let basis = self.basis_elements();
        let mut nucleus_rows: Vec<Vec<Rational>> = Vec::new();
        let push_condition = |rows: &mut Vec<Vec<Rational>>, f: &dyn Fn(&AlgElem) -> AlgElem| {
            let cols: Vec<AlgElem> = basis.iter().map(f).collect();
            for k in 0..n {
                let row: Vec<Rational> = cols.iter().map(|c| c.coords()[k].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        };
        for ej in &basis {
            for ek in &basis {
                push_condition(&mut nucleus_rows, &|a| self.associator(a, ej, ek).unwrap());
                push_condition(&mut nucleus_rows, &|a| self.associator(ej, a, ek).unwrap());
                push_condition(&mut nucleus_rows, &|a| self.associator(ej, ek, a).unwrap());
            }
        }
        let mut center_rows = nucleus_rows.clone();
        for ej in &basis {
            push_condition(&mut center_rows, &|a| self.commutator(a, ej).unwrap());
        }
        let kernel_dim = |rows: Vec<Vec<Rational>>| {
            if rows.is_empty() {
                n
            } else {
                nullspace(&DMatrix::from_rows(rows).expect("rows have length n")).len()
            }
        };
        Classification {
            commutative: self.is_commutative(),
            associative: self.is_associative(),
            nucleus_dim: kernel_dim(nucleus_rows),
            center_dim: kernel_dim(center_rows),
        }
    }

    /// Matrix of `x ↦ a x` acting on coordinate columns.
    pub fn left_regular(&self, a: &AlgElem) -> Result<DMatrix> {
        self.check_owns(a)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| self.mul_coords(a.coords(), self.basis_element(j).coords()))
            .collect();
        DMatrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `x ↦ x a` acting on coordinate columns.
    pub fn right_regular(&self, a: &AlgElem) -> Result<DMatrix> {
        self.check_owns(a)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim())
            .map(|j| self.mul_coords(self.basis_element(j).coords(), a.coords()))
            .collect();
        DMatrix::from_columns(self.dim(), &cols)
    }

    /// Adjoins a unit: `A ⊕ D` with `(a + n)(b + m) = (ab + ma + nb) + nm`.
    /// Algebras that already have a unit are returned unchanged.
    pub fn unital_extension(&self) -> Algebra {
        if self.has_unit() {
            return self.clone();
        }
        let n = self.dim();
        let m = n + 1;
        let mut constants = vec![Rational::zero(); m * m * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    constants[(i * m + j) * m + k] = self.constant(i, j, k).clone();
                }
            }
        }
        for i in 0..n {
            constants[(i * m + n) * m + i] = Rational::one();
            constants[(n * m + i) * m + i] = Rational::one();
        }
        constants[(n * m + n) * m + n] = Rational::one();
        let mut basis = self.0.basis.clone();
        let mut unit_label = "1".to_string();
        while basis.contains(&unit_label) {
            unit_label.push('\'');
        }
        basis.push(unit_label);
        Algebra::new(format!("{}(1)", self.name()), basis, constants, Some(n)).expect("unital extension is well formed")
    }

    /// Checks `C1_ij^k f_k^l = f_i^p f_j^q C2_pq^l`, i.e. `f(e_i e_j) = f(e_i) f(e_j)`,
    /// for a coordinate matrix `f` of shape `target.dim() x source.dim()`.
    pub fn check_hom(f: &DMatrix, source: &Algebra, target: &Algebra) -> Result<bool> {
        if f.cols() != source.dim() || f.rows() != target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra map must be {}x{}, got {}x{}",
                target.dim(),
                source.dim(),
                f.rows(),
                f.cols()
            )));
        }
        let image: Vec<Vec<Rational>> = (0..source.dim()).map(|i| f.col(i)).collect();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let prod = source.mul_coords(source.basis_element(i).coords(), source.basis_element(j).coords());
                let lhs = f.mul_vec(&prod)?;
                let rhs = target.mul_coords(&image[i], &image[j]);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Maps an element through an algebra homomorphism matrix into `target`.
    pub fn map_element(f: &DMatrix, a: &AlgElem, target: &Algebra) -> Result<AlgElem> {
        AlgElem::from_coords(target, f.mul_vec(a.coords())?)
    }

    /// Multiplication table as element strings, `table[i][j] = e_i e_j`.
    pub fn table(&self) -> Vec<Vec<String>> {
        let basis = self.basis_elements();
        basis
            .iter()
            .map(|a| basis.iter().map(|b| self.mul(a, b).unwrap().to_string()).collect())
            .collect()
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile::from_algebra(self)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name(), self.dim())
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Algebra {}

#[cfg(test)]
mod tests {
    use super::*;

    fn quat() -> Algebra {
        load_builtin("quaternion").unwrap()
    }

    #[test]
    fn quaternion_basis_products() {
        let h = quat();
        let [one, i, j, k] = [0, 1, 2, 3].map(|t| h.basis_element(t));
        assert_eq!(h.mul(&i, &j).unwrap(), k);
        assert_eq!(h.mul(&j, &i).unwrap(), -&k);
        assert_eq!(h.mul(&i, &i).unwrap(), -&one);
        assert_eq!(h.mul(&k, &i).unwrap(), j);
        assert_eq!(h.mul(&i, &k).unwrap(), -&j);
    }

    #[test]
    fn matrix_units() {
        let m = load_builtin("matrix2").unwrap();
        let [e11, e12, e21, e22] = [0, 1, 2, 3].map(|t| m.basis_element(t));
        assert_eq!(m.mul(&e12, &e21).unwrap(), e11);
        assert_eq!(m.mul(&e21, &e12).unwrap(), e22);
        assert!(m.mul(&e12, &e12).unwrap().is_zero());
        assert_eq!(m.one().unwrap(), &e11 + &e22);
        assert_eq!(m.unit_index(), None);
    }

    #[test]
    fn zero_product_algebra() {
        let z = load_builtin("zero1").unwrap();
        let eps = z.basis_element(0);
        assert!(z.mul(&eps, &eps).unwrap().is_zero());
        assert_eq!(z.unit_index(), None);
        assert!(!z.has_unit());
    }

    #[test]
    fn commutators_and_associators() {
        let h = quat();
        let [_, i, j, k] = [0, 1, 2, 3].map(|t| h.basis_element(t));
        assert_eq!(h.commutator(&i, &j).unwrap(), k.scale(&Rational::from_int(2)));
        assert!(h.associator(&i, &j, &k).unwrap().is_zero());
        let o = load_builtin("octonion").unwrap();
        let b = o.basis_elements();
        let nonzero = b.iter().any(|x| {
            b.iter()
                .any(|y| b.iter().any(|z| !o.associator(x, y, z).unwrap().is_zero()))
        });
        assert!(nonzero);
    }

    #[test]
    fn classification_table() {
        let c = |name: &str| load_builtin(name).unwrap().classify();
        assert_eq!(
            c("complex"),
            Classification {
                commutative: true,
                associative: true,
                nucleus_dim: 2,
                center_dim: 2
            }
        );
        assert_eq!(
            c("quaternion"),
            Classification {
                commutative: false,
                associative: true,
                nucleus_dim: 4,
                center_dim: 1
            }
        );
        assert_eq!(
            c("matrix2"),
            Classification {
                commutative: false,
                associative: true,
                nucleus_dim: 4,
                center_dim: 1
            }
        );
        let oct = c("octonion");
        assert!(!oct.commutative && !oct.associative);
        assert_eq!((oct.nucleus_dim, oct.center_dim), (1, 1));
    }

    #[test]
    fn matrix2_center_is_scalar_matrices() {
        let m = load_builtin("matrix2").unwrap();
        let id = m.one().unwrap();
        for b in m.basis_elements() {
            assert!(m.commutator(&id, &b).unwrap().is_zero());
        }
    }

    #[test]
    fn unital_extension_of_unital_algebra_is_identity() {
        let h = quat();
        let ext = h.unital_extension();
        assert!(ext.same_as(&h));
        assert_eq!(ext.dim(), 4);
    }

    #[test]
    fn unital_extension_of_zero_algebra_gives_dual_numbers() {
        let z = load_builtin("zero1").unwrap();
        let d = z.unital_extension();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.unit_index(), Some(1));
        let eps = d.basis_element(0);
        let one = d.one().unwrap();
        assert!(d.mul(&eps, &eps).unwrap().is_zero());
        let x = &eps + &one;
        assert_eq!(d.mul(&x, &x).unwrap(), d.elem(&[2, 1]));
    }

    #[test]
    fn regular_representations() {
        let h = quat();
        let [one, i, j, k] = [0, 1, 2, 3].map(|t| h.basis_element(t));
        assert_eq!(h.left_regular(&one).unwrap(), DMatrix::identity(4));
        assert_eq!(h.left_regular(&i).unwrap().mul_vec(j.coords()).unwrap(), k.coords());
        let li = h.left_regular(&i).unwrap();
        let lj = h.left_regular(&j).unwrap();
        assert_eq!(li.mul(&lj).unwrap(), h.left_regular(&k).unwrap());
        assert_eq!(h.right_regular(&j).unwrap().mul_vec(i.coords()).unwrap(), k.coords());
    }

    #[test]
    fn algebra_homomorphism_checks() {
        let h = quat();
        let c = load_builtin("complex").unwrap();
        assert!(Algebra::check_hom(&DMatrix::identity(4), &h, &h).unwrap());
        let embed = DMatrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        assert!(Algebra::check_hom(&embed, &c, &h).unwrap());
        // i ↦ 1
        let bad = DMatrix::from_ints(&[&[1, 1], &[0, 0]]);
        assert!(!Algebra::check_hom(&bad, &c, &c).unwrap());
        assert!(Algebra::check_hom(&embed, &h, &c).is_err());
    }

    #[test]
    fn rejects_false_unit_and_mismatch() {
        let basis = vec!["a".to_string()];
        let err = Algebra::new("bad", basis, vec![Rational::zero()], Some(0)).unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(_)));
        let h = quat();
        let c = load_builtin("complex").unwrap();
        assert!(matches!(
            h.mul(&h.basis_element(0), &c.basis_element(0)),
            Err(Error::AlgebraMismatch { .. })
        ));
    }
}
