use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Algebra;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// An element `a = a^i e_i` of an [`Algebra`], stored by coordinates.
///
/// The operator impls (`+`, `-`, `*`) panic when operands come from
/// different algebras; the `try_*` methods report [`Error::AlgebraMismatch`].
#[derive(Clone)]
pub struct AlgElem {
    alg: Algebra,
    coords: Vec<Rational>,
}

impl AlgElem {
    pub fn zero(alg: &Algebra) -> Self {
        AlgElem {
            alg: alg.clone(),
            coords: vec![Rational::zero(); alg.dim()],
        }
    }

    pub fn basis(alg: &Algebra, i: usize) -> Self {
        assert!(i < alg.dim(), "basis index {i} out of range");
        let mut e = AlgElem::zero(alg);
        e.coords[i] = Rational::one();
        e
    }

    pub fn from_coords(alg: &Algebra, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} has dimension {}, got {} coordinates",
                alg.name(),
                alg.dim(),
                coords.len()
            )));
        }
        Ok(AlgElem {
            alg: alg.clone(),
            coords,
        })
    }

    pub(crate) fn from_coords_unchecked(alg: &Algebra, coords: Vec<Rational>) -> Self {
        debug_assert_eq!(coords.len(), alg.dim());
        AlgElem {
            alg: alg.clone(),
            coords,
        }
    }

    pub fn from_ints(alg: &Algebra, coords: &[i64]) -> Self {
        AlgElem::from_coords(alg, coords.iter().map(|&c| Rational::from_int(c)).collect())
            .expect("coordinate count matches dimension")
    }

    /// Rational multiple of the unit, when the algebra has one.
    pub fn scalar(alg: &Algebra, c: Rational) -> Result<Self> {
        let one = alg.one().ok_or_else(|| Error::NonUnital(alg.name().to_string()))?;
        Ok(one.scale(&c))
    }

    /// Parses a coordinate string `"c0,c1,...,c(d-1)"`.
    pub fn parse(alg: &Algebra, s: &str) -> Result<Self> {
        let coords = s.split(',').map(str::parse).collect::<Result<Vec<Rational>>>()?;
        AlgElem::from_coords(alg, coords)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlgElem {
            alg: self.alg.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// The coordinate string accepted by [`AlgElem::parse`].
    pub fn to_coord_string(&self) -> String {
        self.coords
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn try_add(&self, other: &AlgElem) -> Result<Self> {
        self.alg.check_owns(other)?;
        Ok(AlgElem {
            alg: self.alg.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &AlgElem) -> Result<Self> {
        self.alg.check_owns(other)?;
        Ok(AlgElem {
            alg: self.alg.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &AlgElem) -> Result<Self> {
        self.alg.mul(self, other)
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.alg.same_as(&other.alg)
    }
}

impl Eq for AlgElem {}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alg.name(), self)
    }
}

/// Human-readable form such as `2*j + k` or `1/2 - i`.
impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.alg.basis_labels();
        let unit = self.alg.unit_index();
        let mut first = true;
        for (idx, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if Some(idx) == unit {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", labels[idx])?;
            } else {
                write!(f, "{mag}*{}", labels[idx])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &AlgElem {
    type Output = AlgElem;
    fn add(self, rhs: &AlgElem) -> AlgElem {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl Sub for &AlgElem {
    type Output = AlgElem;
    fn sub(self, rhs: &AlgElem) -> AlgElem {
        self.try_sub(rhs).expect("subtracting elements of different algebras")
    }
}

impl Mul for &AlgElem {
    type Output = AlgElem;
    fn mul(self, rhs: &AlgElem) -> AlgElem {
        self.try_mul(rhs).expect("multiplying elements of different algebras")
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem {
            alg: self.alg.clone(),
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}
