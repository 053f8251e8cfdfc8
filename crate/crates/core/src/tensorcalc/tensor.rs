use std::fmt;

use crate::algebra::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::exact::{DMatrix, Rational};

pub(crate) fn require_associative(alg: &Algebra) -> Result<()> {
    if alg.is_associative() {
        Ok(())
    } else {
        Err(Error::NonAssociative(format!(
            "tensor operations need an associative algebra, {} is not",
            alg.name()
        )))
    }
}

#[derive(Clone, PartialEq)]
pub struct TensorTerm {
    pub scale: Rational,
    pub a: AlgElem,
    pub b: AlgElem,
}

/// Formal sum `Σ scale·(a ⊗ b)` acting on `A` by `(a ⊗ b) ∘ c = (a c) b`.
///
/// Term lists are not normalized; use [`Tensor::equivalent`] to compare.
#[derive(Clone, PartialEq)]
pub struct Tensor {
    algebra: Algebra,
    terms: Vec<TensorTerm>,
}

impl Tensor {
    pub fn zero(alg: &Algebra) -> Tensor {
        Tensor {
            algebra: alg.clone(),
            terms: Vec::new(),
        }
    }

    pub fn simple(a: &AlgElem, b: &AlgElem) -> Result<Tensor> {
        let mut t = Tensor::zero(a.algebra());
        t.push(Rational::one(), a.clone(), b.clone())?;
        Ok(t)
    }

    /// `1 ⊗ 1`.
    pub fn identity(alg: &Algebra) -> Result<Tensor> {
        let one = alg
            .one()
            .ok_or_else(|| Error::NonUnital(format!("{} has no unit", alg.name())))?;
        Tensor::simple(&one, &one)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn terms(&self) -> &[TensorTerm] {
        &self.terms
    }

    /// Appends a term; terms with a zero factor are dropped.
    pub fn push(&mut self, scale: Rational, a: AlgElem, b: AlgElem) -> Result<()> {
        self.algebra.check_owns(&a)?;
        self.algebra.check_owns(&b)?;
        if !(scale.is_zero() || a.is_zero() || b.is_zero()) {
            self.terms.push(TensorTerm { scale, a, b });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Tensor) -> Result<()> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.algebra.name().to_string(),
                right: other.algebra.name().to_string(),
            })
        }
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        let mut out = Tensor::zero(&self.algebra);
        for t in &self.terms {
            out.push(&t.scale * c, t.a.clone(), t.b.clone()).expect("same algebra");
        }
        out
    }

    pub fn apply(&self, c: &AlgElem) -> Result<AlgElem> {
        require_associative(&self.algebra)?;
        self.algebra.check_owns(c)?;
        Ok(self.terms.iter().fold(self.algebra.zero(), |acc, t| {
            let image = &(&t.a * c) * &t.b;
            &acc + &image.scale(&t.scale)
        }))
    }

    /// `self ∘ other`, term by term `(p₀ ⊗ p₁) ∘ (q₀ ⊗ q₁) = (p₀ q₀) ⊗ (q₁ p₁)`.
    pub fn compose(&self, other: &Tensor) -> Result<Tensor> {
        require_associative(&self.algebra)?;
        self.check_compatible(other)?;
        let mut out = Tensor::zero(&self.algebra);
        for p in &self.terms {
            for q in &other.terms {
                out.push(&p.scale * &q.scale, &p.a * &q.a, &q.b * &p.b)?;
            }
        }
        Ok(out)
    }

    /// Matrix of `c ↦ self ∘ c` in the algebra basis.
    pub fn to_map(&self) -> Result<DMatrix> {
        require_associative(&self.algebra)?;
        let cols = self
            .algebra
            .basis_elements()
            .iter()
            .map(|e| self.apply(e).map(AlgElem::into_coords))
            .collect::<Result<Vec<_>>>()?;
        DMatrix::from_columns(self.algebra.dim(), &cols)
    }

    /// Equality of the induced linear maps.
    pub fn equivalent(&self, other: &Tensor) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.to_map()? == other.to_map()?)
    }
}

fn factor(e: &AlgElem) -> String {
    let s = e.to_string();
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{}·({} ⊗ {})", t.scale, factor(&t.a), factor(&t.b)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor({self})")
    }
}
