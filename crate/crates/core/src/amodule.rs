//! Free modules `Aⁿ` over an algebra, in the four orientations
//! left/right × column/row.
//!
//! The side decides the multiplication order of scalar actions and linear
//! combinations (`c v` on the left, `v c` on the right). Column vs row is
//! carried along and checked but has no arithmetic effect here; it matters
//! for homomorphism matrices in [`crate::hom`].
//!
//! Coordinate problems are solved by D-linearization: each unknown
//! coefficient `c = c^t e_t` contributes `dim A` rational unknowns, and
//! `c v = c^t (e_t v)` turns the `A`-linear equation into a rational system.
//! This needs only bilinearity of the product, so it also works for
//! nonassociative algebras.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::exact::{rank, solve_linear, DMatrix, Rational, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Column,
    Row,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    pub side: Side,
    pub shape: Shape,
}

impl Orientation {
    pub const LEFT_COLUMN: Orientation = Orientation {
        side: Side::Left,
        shape: Shape::Column,
    };
    pub const LEFT_ROW: Orientation = Orientation {
        side: Side::Left,
        shape: Shape::Row,
    };
    pub const RIGHT_COLUMN: Orientation = Orientation {
        side: Side::Right,
        shape: Shape::Column,
    };
    pub const RIGHT_ROW: Orientation = Orientation {
        side: Side::Right,
        shape: Shape::Row,
    };

    pub const ALL: [Orientation; 4] = [
        Orientation::LEFT_COLUMN,
        Orientation::LEFT_ROW,
        Orientation::RIGHT_COLUMN,
        Orientation::RIGHT_ROW,
    ];

    /// Scalar action on one component: `a x` for left modules, `x a` for right ones.
    pub fn act(&self, a: &AlgElem, x: &AlgElem) -> Result<AlgElem> {
        match self.side {
            Side::Left => a.try_mul(x),
            Side::Right => x.try_mul(a),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let shape = match self.shape {
            Shape::Column => "column",
            Shape::Row => "row",
        };
        write!(f, "{side}-{shape}")
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Orientation::ALL
            .into_iter()
            .find(|o| o.to_string() == s)
            .ok_or_else(|| Error::Format(format!("unknown orientation `{s}`")))
    }
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Orientation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of `Aⁿ` tagged with its orientation.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedVector {
    algebra: Algebra,
    orientation: Orientation,
    comps: Vec<AlgElem>,
}

impl OrientedVector {
    pub fn new(algebra: &Algebra, orientation: Orientation, comps: Vec<AlgElem>) -> Result<Self> {
        for c in &comps {
            algebra.check_owns(c)?;
        }
        Ok(OrientedVector {
            algebra: algebra.clone(),
            orientation,
            comps,
        })
    }

    pub fn zero(algebra: &Algebra, orientation: Orientation, n: usize) -> Self {
        OrientedVector {
            algebra: algebra.clone(),
            orientation,
            comps: vec![algebra.zero(); n],
        }
    }

    /// The `i`-th standard vector of `Aⁿ`; needs a unital algebra.
    pub fn unit(algebra: &Algebra, orientation: Orientation, n: usize, i: usize) -> Result<Self> {
        let one = algebra
            .one()
            .ok_or_else(|| Error::NonUnital(algebra.name().to_string()))?;
        let mut v = OrientedVector::zero(algebra, orientation, n);
        v.comps[i] = one;
        Ok(v)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn comps(&self) -> &[AlgElem] {
        &self.comps
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(AlgElem::is_zero)
    }

    fn check_compatible(&self, other: &OrientedVector) -> Result<()> {
        if !self.algebra.same_as(&other.algebra) {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            });
        }
        if self.orientation != other.orientation {
            return Err(Error::OrientationMismatch(format!(
                "{} vs {}",
                self.orientation, other.orientation
            )));
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &OrientedVector) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.with_comps(self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect()))
    }

    pub fn neg(&self) -> Self {
        self.with_comps(self.comps.iter().map(|a| -a).collect())
    }

    /// Scalar action along the module's side.
    pub fn act(&self, a: &AlgElem) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|x| self.orientation.act(a, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_comps(comps))
    }

    /// Scalar action from the side opposite to the module's side.
    pub fn act_opposite(&self, a: &AlgElem) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(|x| match self.orientation.side {
                Side::Left => x.try_mul(a),
                Side::Right => a.try_mul(x),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_comps(comps))
    }

    /// Multiplication by a rational scalar (central, so the side is irrelevant).
    pub fn scale(&self, d: &Rational) -> Self {
        self.with_comps(self.comps.iter().map(|x| x.scale(d)).collect())
    }

    /// All coordinates of all components, component-major.
    pub fn flatten(&self) -> Vec<Rational> {
        self.comps.iter().flat_map(|c| c.coords().iter().cloned()).collect()
    }

    fn with_comps(&self, comps: Vec<AlgElem>) -> Self {
        OrientedVector {
            algebra: self.algebra.clone(),
            orientation: self.orientation,
            comps,
        }
    }
}

impl fmt::Debug for OrientedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.comps.iter().map(ToString::to_string).collect();
        write!(f, "{}({})", self.orientation, comps.join(", "))
    }
}

/// `Σ cⁱ vᵢ` (left) or `Σ vᵢ cⁱ` (right), componentwise.
pub fn contract(coeffs: &[AlgElem], vectors: &[OrientedVector]) -> Result<OrientedVector> {
    if coeffs.len() != vectors.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for {} vectors",
            coeffs.len(),
            vectors.len()
        )));
    }
    let first = vectors
        .first()
        .ok_or_else(|| Error::DimensionMismatch("linear combination of no vectors".into()))?;
    let mut acc = OrientedVector::zero(&first.algebra, first.orientation, first.len());
    for (c, v) in coeffs.iter().zip(vectors) {
        acc = acc.add(&v.act(c)?)?;
    }
    Ok(acc)
}

/// Outcome of [`coordinates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coordinates {
    Unique(Vec<AlgElem>),
    NotInSpan,
    /// `witness` is a nonzero tuple of coefficients whose combination is the
    /// zero vector.
    NonUnique {
        particular: Vec<AlgElem>,
        witness: Vec<AlgElem>,
    },
}

/// A finite family of vectors of `Aⁿ` sharing one orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    algebra: Algebra,
    orientation: Orientation,
    module_len: usize,
    vectors: Vec<OrientedVector>,
    verified: bool,
}

impl Basis {
    /// Collects `vectors` of length `n`. The verified flag is set when the
    /// basis extension is linearly independent over the rationals, which is
    /// exactly when coordinates are unique.
    pub fn new(algebra: &Algebra, orientation: Orientation, n: usize, vectors: Vec<OrientedVector>) -> Result<Self> {
        for v in &vectors {
            if !v.algebra.same_as(algebra) {
                return Err(Error::AlgebraMismatch {
                    left: algebra.name().to_string(),
                    right: v.algebra.name().to_string(),
                });
            }
            if v.orientation != orientation {
                return Err(Error::OrientationMismatch(format!(
                    "basis is {orientation}, vector is {}",
                    v.orientation
                )));
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "basis vector of length {} in A^{n}",
                    v.len()
                )));
            }
        }
        let mut basis = Basis {
            algebra: algebra.clone(),
            orientation,
            module_len: n,
            vectors,
            verified: false,
        };
        let ext = basis.extension();
        basis.verified = ext.is_independent();
        Ok(basis)
    }

    pub fn from_vectors(vectors: Vec<OrientedVector>) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty basis needs an explicit algebra".into()))?;
        let (alg, o, n) = (first.algebra.clone(), first.orientation, first.len());
        Basis::new(&alg, o, n, vectors)
    }

    /// Standard basis `(δ^i_j)` of `Aⁿ`.
    pub fn standard(algebra: &Algebra, orientation: Orientation, n: usize) -> Result<Self> {
        let vectors = (0..n)
            .map(|i| OrientedVector::unit(algebra, orientation, n, i))
            .collect::<Result<Vec<_>>>()?;
        Basis::new(algebra, orientation, n, vectors)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Length `n` of the vectors (the module is `Aⁿ`).
    pub fn module_len(&self) -> usize {
        self.module_len
    }

    pub fn vectors(&self) -> &[OrientedVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Whether every vector of `Aⁿ` is a combination of this family.
    pub fn spans_module(&self) -> bool {
        self.extension().spans()
    }

    fn extension(&self) -> BasisExtension {
        extend_basis(self)
    }
}

/// `expand(basis, c) = contract(c, basis.vectors)`.
pub fn expand(basis: &Basis, coords: &[AlgElem]) -> Result<OrientedVector> {
    if coords.len() != basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coordinates for a basis of {} vectors",
            coords.len(),
            basis.len()
        )));
    }
    if basis.is_empty() {
        return Err(Error::DimensionMismatch("expansion in an empty basis".into()));
    }
    contract(coords, &basis.vectors)
}

/// Rational system whose unknowns are the coordinates of the coefficients:
/// column `i * d + t` holds the flattened vector `e_t vᵢ` (left) or `vᵢ e_t` (right).
fn linearize(algebra: &Algebra, orientation: Orientation, n: usize, gens: &[OrientedVector]) -> Result<DMatrix> {
    let d = algebra.dim();
    let mut cols = Vec::with_capacity(gens.len() * d);
    for g in gens {
        for t in 0..d {
            let e = algebra.basis_element(t);
            let mut col = Vec::with_capacity(n * d);
            for x in g.comps() {
                col.extend(orientation.act(&e, x)?.into_coords());
            }
            cols.push(col);
        }
    }
    DMatrix::from_columns(n * d, &cols)
}

fn unflatten(algebra: &Algebra, x: &[Rational]) -> Vec<AlgElem> {
    let d = algebra.dim();
    if d == 0 {
        return Vec::new();
    }
    x.chunks(d)
        .map(|c| AlgElem::from_coords(algebra, c.to_vec()).expect("chunk has algebra dimension"))
        .collect()
}

fn check_target(v: &OrientedVector, algebra: &Algebra, orientation: Orientation, n: usize) -> Result<()> {
    if !v.algebra.same_as(algebra) {
        return Err(Error::AlgebraMismatch {
            left: algebra.name().to_string(),
            right: v.algebra.name().to_string(),
        });
    }
    if v.orientation != orientation {
        return Err(Error::OrientationMismatch(format!(
            "{orientation} vs {}",
            v.orientation
        )));
    }
    if v.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in A^{n}",
            v.len()
        )));
    }
    Ok(())
}

/// Coordinates of `v` relative to `basis`.
pub fn coordinates(v: &OrientedVector, basis: &Basis) -> Result<Coordinates> {
    check_target(v, &basis.algebra, basis.orientation, basis.module_len)?;
    let system = linearize(&basis.algebra, basis.orientation, basis.module_len, &basis.vectors)?;
    Ok(match solve_linear(&system, &v.flatten())? {
        Solution::Unique(x) => Coordinates::Unique(unflatten(&basis.algebra, &x)),
        Solution::NoSolution => Coordinates::NotInSpan,
        Solution::Infinite { particular, nullspace } => Coordinates::NonUnique {
            particular: unflatten(&basis.algebra, &particular),
            witness: unflatten(&basis.algebra, &nullspace[0]),
        },
    })
}

/// Whether `v` is an `A`-linear combination of `generators`.
pub fn in_span(v: &OrientedVector, generators: &[OrientedVector]) -> Result<bool> {
    for g in generators {
        v.check_compatible(g)?;
    }
    if generators.is_empty() {
        return Ok(v.is_zero());
    }
    let system = linearize(&v.algebra, v.orientation, v.len(), generators)?;
    Ok(solve_linear(&system, &v.flatten())? != Solution::NoSolution)
}

/// Products of the algebra basis with the module basis, and their rank over
/// the rationals.
#[derive(Clone, Debug)]
pub struct BasisExtension {
    /// Ordered by module basis vector, then algebra basis element.
    pub vectors: Vec<OrientedVector>,
    pub rank: usize,
    /// `(number of module basis vectors) * dim A`.
    pub independent_rank: usize,
    /// `n * dim A`, the rational dimension of `Aⁿ`.
    pub full_rank: usize,
}

impl BasisExtension {
    pub fn is_independent(&self) -> bool {
        self.rank == self.independent_rank
    }

    pub fn spans(&self) -> bool {
        self.rank == self.full_rank
    }

    /// Independent and spanning: a rational basis of `Aⁿ`.
    pub fn is_full(&self) -> bool {
        self.is_independent() && self.spans()
    }
}

/// `e_k vᵢ` for left modules, `vᵢ e_k` for right modules.
pub fn extend_basis(basis: &Basis) -> BasisExtension {
    let d = basis.algebra.dim();
    let vectors: Vec<OrientedVector> = basis
        .vectors
        .iter()
        .flat_map(|v| (0..d).map(move |k| v.act(&basis.algebra.basis_element(k)).expect("same algebra")))
        .collect();
    let flat: Vec<Vec<Rational>> = vectors.iter().map(OrientedVector::flatten).collect();
    let r = if flat.is_empty() {
        0
    } else {
        rank(&DMatrix::from_rows(flat).expect("equal lengths"))
    };
    BasisExtension {
        rank: r,
        independent_rank: basis.len() * d,
        full_rank: basis.module_len * d,
        vectors,
    }
}

/// JSON vector/basis file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorFile {
    pub algebra: String,
    pub orientation: Orientation,
    pub vectors: Vec<Vec<String>>,
}

impl VectorFile {
    pub fn from_json(src: &str) -> Result<Self> {
        Ok(serde_json::from_str(src)?)
    }

    pub fn to_vectors(&self) -> Result<(Algebra, Vec<OrientedVector>)> {
        let alg = Algebra::resolve(&self.algebra)?;
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                let comps = v.iter().map(|e| AlgElem::parse(&alg, e)).collect::<Result<Vec<_>>>()?;
                OrientedVector::new(&alg, self.orientation, comps)
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = vectors.first() {
            if vectors.iter().any(|v| v.len() != first.len()) {
                return Err(Error::Format("vectors of different lengths".into()));
            }
        }
        Ok((alg, vectors))
    }

    pub fn to_basis(&self) -> Result<Basis> {
        let (alg, vectors) = self.to_vectors()?;
        if vectors.is_empty() {
            return Err(Error::Format("basis file lists no vectors".into()));
        }
        let n = vectors[0].len();
        Basis::new(&alg, self.orientation, n, vectors)
    }

    pub fn from_vectors(algebra: &str, orientation: Orientation, vectors: &[OrientedVector]) -> Self {
        VectorFile {
            algebra: algebra.to_string(),
            orientation,
            vectors: vectors
                .iter()
                .map(|v| v.comps.iter().map(AlgElem::to_coord_string).collect())
                .collect(),
        }
    }
}
