//! Homomorphisms of free modules, acting on coordinate tuples.
//!
//! Matrix layout follows the orientation. For columns the matrix is
//! `target x source` with entry `f^k_i` at row `k`, column `i`; for rows it is
//! `source x target` with `f^i_k` at row `i`, column `k`. The image of `v` is
//!
//! | orientation  | image                   |
//! |--------------|-------------------------|
//! | left-column  | `w^k = Σ_i v^i f^k_i`   |
//! | left-row     | `w_k = Σ_i v_i f^i_k`   |
//! | right-column | `w^k = Σ_i f^k_i v^i`   |
//! | right-row    | `w_k = Σ_i f^i_k v_i`   |
//!
//! An optional algebra homomorphism `g: A₁ → A₂` (a rational matrix) first
//! maps the coordinates of `v` into the algebra of the matrix entries.
//!
//! A homomorphism stores no bases: its matrix is relative to whichever bases
//! the coordinate tuples refer to.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElem, Algebra};
use crate::amodule::{Orientation, OrientedVector, Shape, Side};
use crate::biring::GenMatrix;
use crate::error::{Error, Result};
use crate::exact::DMatrix;

#[derive(Clone, PartialEq)]
pub struct ModuleHom {
    orientation: Orientation,
    source_algebra: Algebra,
    algebra: Algebra,
    matrix: GenMatrix<AlgElem>,
    alg_hom: Option<DMatrix>,
}

impl ModuleHom {
    /// Homomorphism over a single algebra.
    pub fn new(orientation: Orientation, algebra: &Algebra, matrix: GenMatrix<AlgElem>) -> Result<Self> {
        ModuleHom::with_alg_hom(orientation, algebra, algebra, matrix, None)
    }

    /// Homomorphism from an `A₁`-module to an `A₂`-module along the algebra
    /// map `alg_hom` (`dim A₂ x dim A₁`), which must be multiplicative. Without
    /// `alg_hom` the two algebras must coincide.
    pub fn with_alg_hom(
        orientation: Orientation,
        source_algebra: &Algebra,
        algebra: &Algebra,
        matrix: GenMatrix<AlgElem>,
        alg_hom: Option<DMatrix>,
    ) -> Result<Self> {
        if matrix.entries().any(|e| !e.algebra().same_as(algebra)) {
            return Err(Error::AlgebraMismatch {
                left: algebra.name().to_string(),
                right: "homomorphism matrix entry".into(),
            });
        }
        match &alg_hom {
            Some(g) => {
                if !Algebra::check_hom(g, source_algebra, algebra)? {
                    return Err(Error::InvalidAlgebra(format!(
                        "the given map {} -> {} is not an algebra homomorphism",
                        source_algebra.name(),
                        algebra.name()
                    )));
                }
            }
            None if !source_algebra.same_as(algebra) => {
                return Err(Error::AlgebraMismatch {
                    left: source_algebra.name().to_string(),
                    right: algebra.name().to_string(),
                });
            }
            None => {}
        }
        Ok(ModuleHom {
            orientation,
            source_algebra: source_algebra.clone(),
            algebra: algebra.clone(),
            matrix,
            alg_hom,
        })
    }

    /// Identity of `Aⁿ`.
    pub fn identity(orientation: Orientation, algebra: &Algebra, n: usize) -> Result<Self> {
        ModuleHom::new(orientation, algebra, GenMatrix::identity(algebra, n)?)
    }

    pub fn zero(orientation: Orientation, algebra: &Algebra, source_dim: usize, target_dim: usize) -> Self {
        let (r, c) = layout(orientation, source_dim, target_dim);
        ModuleHom {
            orientation,
            source_algebra: algebra.clone(),
            algebra: algebra.clone(),
            matrix: GenMatrix::zeros(algebra, r, c),
            alg_hom: None,
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn source_algebra(&self) -> &Algebra {
        &self.source_algebra
    }

    pub fn matrix(&self) -> &GenMatrix<AlgElem> {
        &self.matrix
    }

    pub fn alg_hom(&self) -> Option<&DMatrix> {
        self.alg_hom.as_ref()
    }

    pub fn source_dim(&self) -> usize {
        match self.orientation.shape {
            Shape::Column => self.matrix.cols(),
            Shape::Row => self.matrix.rows(),
        }
    }

    pub fn target_dim(&self) -> usize {
        match self.orientation.shape {
            Shape::Column => self.matrix.rows(),
            Shape::Row => self.matrix.cols(),
        }
    }

    /// Entry relating source index `i` to target index `k`.
    pub fn entry(&self, k: usize, i: usize) -> &AlgElem {
        match self.orientation.shape {
            Shape::Column => self.matrix.get(k, i),
            Shape::Row => self.matrix.get(i, k),
        }
    }

    fn lift(&self, v: &AlgElem) -> Result<AlgElem> {
        self.source_algebra.check_owns(v)?;
        match &self.alg_hom {
            Some(g) => Algebra::map_element(g, v, &self.algebra),
            None => Ok(v.clone()),
        }
    }

    /// Image coordinates of the coordinate tuple `v`.
    pub fn apply(&self, v: &[AlgElem]) -> Result<Vec<AlgElem>> {
        if v.len() != self.source_dim() {
            return Err(Error::DimensionMismatch(format!(
                "homomorphism from A^{} applied to a vector of length {}",
                self.source_dim(),
                v.len()
            )));
        }
        let lifted = v.iter().map(|x| self.lift(x)).collect::<Result<Vec<_>>>()?;
        Ok((0..self.target_dim())
            .map(|k| {
                lifted.iter().enumerate().fold(self.algebra.zero(), |acc, (i, vi)| {
                    let f = self.entry(k, i);
                    let term = match self.orientation.side {
                        Side::Left => vi * f,
                        Side::Right => f * vi,
                    };
                    &acc + &term
                })
            })
            .collect())
    }

    pub fn apply_vector(&self, v: &OrientedVector) -> Result<OrientedVector> {
        if v.orientation() != self.orientation {
            return Err(Error::OrientationMismatch(format!(
                "{} homomorphism applied to a {} vector",
                self.orientation,
                v.orientation()
            )));
        }
        OrientedVector::new(&self.algebra, self.orientation, self.apply(v.comps())?)
    }

    fn check_same_kind(&self, other: &ModuleHom) -> Result<()> {
        if self.orientation != other.orientation {
            return Err(Error::OrientationMismatch(format!(
                "{} vs {}",
                self.orientation, other.orientation
            )));
        }
        if !self.algebra.same_as(&other.algebra) || !self.source_algebra.same_as(&other.source_algebra) {
            return Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            });
        }
        Ok(())
    }

    /// `(g + h)(v) = g(v) + h(v)`: the entrywise matrix sum.
    pub fn sum(&self, other: &ModuleHom) -> Result<ModuleHom> {
        self.check_same_kind(other)?;
        if self.alg_hom != other.alg_hom {
            return Err(Error::InvalidAlgebra("summands use different algebra maps".into()));
        }
        Ok(ModuleHom {
            matrix: self.matrix.sum(&other.matrix, &self.algebra)?,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> ModuleHom {
        ModuleHom {
            matrix: self.matrix.neg(&self.algebra),
            ..self.clone()
        }
    }

    /// `self ∘ g`: apply `g` first, then `self`.
    pub fn compose(&self, g: &ModuleHom) -> Result<ModuleHom> {
        let h = self;
        if h.orientation != g.orientation {
            return Err(Error::OrientationMismatch(format!(
                "{} vs {}",
                h.orientation, g.orientation
            )));
        }
        if g.target_dim() != h.source_dim() {
            return Err(Error::DimensionMismatch(format!(
                "composing A^{} -> A^{} after A^{} -> A^{}",
                h.source_dim(),
                h.target_dim(),
                g.source_dim(),
                g.target_dim()
            )));
        }
        if !g.algebra.same_as(&h.source_algebra) {
            return Err(Error::AlgebraMismatch {
                left: g.algebra.name().to_string(),
                right: h.source_algebra.name().to_string(),
            });
        }
        // entries of g are pushed through h's algebra map so both factors live in h's algebra
        let g_entries = GenMatrix::from_fn(g.matrix.rows(), g.matrix.cols(), |r, c| {
            h.lift(g.matrix.get(r, c))
                .expect("g entries live in h's source algebra")
        });
        let (n, p, m) = (g.source_dim(), g.target_dim(), h.target_dim());
        let entry_g = |k: usize, i: usize| match g.orientation.shape {
            Shape::Column => g_entries.get(k, i),
            Shape::Row => g_entries.get(i, k),
        };
        let composite = |k: usize, i: usize| -> AlgElem {
            (0..p).fold(h.algebra.zero(), |acc, mid| {
                let term = match h.orientation.side {
                    Side::Left => entry_g(mid, i) * h.entry(k, mid),
                    Side::Right => h.entry(k, mid) * entry_g(mid, i),
                };
                &acc + &term
            })
        };
        let (rows, cols) = layout(h.orientation, n, m);
        let matrix = GenMatrix::from_fn(rows, cols, |r, c| match h.orientation.shape {
            Shape::Column => composite(r, c),
            Shape::Row => composite(c, r),
        });
        let alg_hom = match (&h.alg_hom, &g.alg_hom) {
            (None, None) => None,
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => Some(a.mul(b)?),
        };
        Ok(ModuleHom {
            orientation: h.orientation,
            source_algebra: g.source_algebra.clone(),
            algebra: h.algebra.clone(),
            matrix,
            alg_hom,
        })
    }

    pub fn to_file(&self) -> HomFile {
        HomFile {
            algebra: self.algebra.name().to_string(),
            orientation: self.orientation,
            matrix: self
                .matrix
                .to_rows()
                .iter()
                .map(|r| r.iter().map(AlgElem::to_coord_string).collect())
                .collect(),
            alg_hom: self.alg_hom.clone(),
            source_algebra: self.alg_hom.as_ref().map(|_| self.source_algebra.name().to_string()),
        }
    }
}

/// Storage shape `(rows, cols)` of the matrix for a hom `Aⁿ -> Aᵐ`.
fn layout(orientation: Orientation, source_dim: usize, target_dim: usize) -> (usize, usize) {
    match orientation.shape {
        Shape::Column => (target_dim, source_dim),
        Shape::Row => (source_dim, target_dim),
    }
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom({}, {:?})", self.orientation, self.matrix)
    }
}

/// The four candidate matrix products of the factors of `h ∘ g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StarForm {
    RcGH,
    CrGH,
    RcHG,
    CrHG,
}

impl StarForm {
    pub const ALL: [StarForm; 4] = [StarForm::RcGH, StarForm::CrGH, StarForm::RcHG, StarForm::CrHG];

    pub fn eval(&self, g: &ModuleHom, h: &ModuleHom) -> Result<GenMatrix<AlgElem>> {
        let ring = &h.algebra;
        let (gm, hm) = (&g.matrix, &h.matrix);
        match self {
            StarForm::RcGH => gm.rc(hm, ring),
            StarForm::CrGH => gm.cr(hm, ring),
            StarForm::RcHG => hm.rc(gm, ring),
            StarForm::CrHG => hm.cr(gm, ring),
        }
    }
}

impl fmt::Display for StarForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarForm::RcGH => "rc(g,h)",
            StarForm::CrGH => "cr(g,h)",
            StarForm::RcHG => "rc(h,g)",
            StarForm::CrHG => "cr(h,g)",
        })
    }
}

/// Which of the four products reproduce the matrix of `h ∘ g`.
pub fn identify_star(h: &ModuleHom, g: &ModuleHom) -> Result<Vec<StarForm>> {
    let f = h.compose(g)?;
    Ok(StarForm::ALL
        .into_iter()
        .filter(|form| form.eval(g, h).map(|m| m == f.matrix).unwrap_or(false))
        .collect())
}

/// JSON homomorphism file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomFile {
    pub algebra: String,
    pub orientation: Orientation,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alg_hom: Option<DMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_algebra: Option<String>,
}

impl HomFile {
    pub fn from_json(src: &str) -> Result<Self> {
        Ok(serde_json::from_str(src)?)
    }

    pub fn to_hom(&self) -> Result<ModuleHom> {
        let alg = Algebra::resolve(&self.algebra)?;
        let source = match &self.source_algebra {
            Some(name) => Algebra::resolve(name)?,
            None => alg.clone(),
        };
        if self.matrix.is_empty() || self.matrix[0].is_empty() {
            return Err(Error::Format("homomorphism matrix is empty".into()));
        }
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|e| AlgElem::parse(&alg, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let matrix = GenMatrix::from_rows(rows)?;
        ModuleHom::with_alg_hom(self.orientation, &source, &alg, matrix, self.alg_hom.clone())
    }
}
