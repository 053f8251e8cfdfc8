use std::collections::BTreeMap;
use std::fmt;

use super::poly::{var_index, NCPoly, Word};
use super::tensor::{require_associative, Tensor};
use crate::algebra::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPolyTerm {
    pub scale: Rational,
    pub prefix: Word,
    pub suffix: Word,
}

/// Symbolic tensor `Σ scale·(prefix ⊗ suffix)` with polynomial words as factors.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    vars: Vec<String>,
    terms: Vec<TensorPolyTerm>,
}

impl TensorPoly {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &[TensorPolyTerm] {
        &self.terms
    }

    /// Terms with equal factor pairs merged, zero sums removed.
    pub fn normalized(&self) -> BTreeMap<(Word, Word), Rational> {
        let mut out: BTreeMap<(Word, Word), Rational> = BTreeMap::new();
        for t in &self.terms {
            *out.entry((t.prefix.clone(), t.suffix.clone()))
                .or_insert_with(Rational::zero) += &t.scale;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn eval(&self, alg: &Algebra, point: &[AlgElem]) -> Result<Tensor> {
        NCPoly::zero(&self.vars).check_point(alg, point)?;
        let mut t = Tensor::zero(alg);
        for term in &self.terms {
            t.push(
                term.scale.clone(),
                term.prefix.eval(alg, point)?,
                term.suffix.eval(alg, point)?,
            )?;
        }
        Ok(t)
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                format!(
                    "{}·({} ⊗ {})",
                    t.scale,
                    t.prefix.render(&self.vars),
                    t.suffix.render(&self.vars)
                )
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({self})")
    }
}

/// Partial derivative: every occurrence of `var` in a word `u var w`
/// contributes `c·(u ⊗ w)`. Terms follow word order, then occurrence order.
pub fn differentiate(p: &NCPoly, var: &str) -> Result<TensorPoly> {
    let v = var_index(p.vars(), var)?;
    let mut terms = Vec::new();
    for (w, c) in p.terms() {
        for (pos, &l) in w.letters().iter().enumerate() {
            if l == v {
                terms.push(TensorPolyTerm {
                    scale: c.clone(),
                    prefix: Word(w.letters()[..pos].to_vec()),
                    suffix: Word(w.letters()[pos + 1..].to_vec()),
                });
            }
        }
    }
    Ok(TensorPoly {
        vars: p.vars().to_vec(),
        terms,
    })
}

/// Element `value + t·tangent` of `A[t]/(t²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual {
    pub value: AlgElem,
    pub tangent: AlgElem,
}

impl Dual {
    pub fn add(&self, other: &Dual) -> Dual {
        Dual {
            value: &self.value + &other.value,
            tangent: &self.tangent + &other.tangent,
        }
    }

    pub fn mul(&self, other: &Dual) -> Dual {
        Dual {
            value: &self.value * &other.value,
            tangent: &(&self.value * &other.tangent) + &(&self.tangent * &other.value),
        }
    }
}

/// Evaluates `p` at `point + t·displacement` over `A[t]/(t²)`.
pub fn eval_dual(p: &NCPoly, alg: &Algebra, point: &[AlgElem], displacement: &[AlgElem]) -> Result<Dual> {
    p.check_point(alg, point)?;
    p.check_point(alg, displacement)?;
    let one = alg
        .one()
        .ok_or_else(|| Error::NonUnital(format!("{} has no unit", alg.name())))?;
    let mut acc = Dual {
        value: alg.zero(),
        tangent: alg.zero(),
    };
    for (w, c) in p.terms() {
        let mut m = Dual {
            value: one.clone(),
            tangent: alg.zero(),
        };
        for &l in w.letters() {
            m = m.mul(&Dual {
                value: point[l].clone(),
                tangent: displacement[l].clone(),
            });
        }
        acc = acc.add(&Dual {
            value: m.value.scale(c),
            tangent: m.tangent.scale(c),
        });
    }
    Ok(acc)
}

/// The matrix of partials `∂p_r/∂v`.
pub fn jacobian(map: &[NCPoly]) -> Result<Vec<Vec<TensorPoly>>> {
    map.iter()
        .map(|p| p.vars().iter().map(|v| differentiate(p, v)).collect())
        .collect()
}

/// Component `r` is `Σ_v (∂p_r/∂v at point) ∘ displacement_v`.
pub fn jacobian_apply(
    map: &[NCPoly],
    alg: &Algebra,
    point: &[AlgElem],
    displacement: &[AlgElem],
) -> Result<Vec<AlgElem>> {
    require_associative(alg)?;
    let mut out = Vec::with_capacity(map.len());
    for (p, row) in map.iter().zip(jacobian(map)?) {
        p.check_point(alg, point)?;
        p.check_point(alg, displacement)?;
        let mut acc = alg.zero();
        for (partial, h) in row.iter().zip(displacement) {
            acc = &acc + &partial.eval(alg, point)?.apply(h)?;
        }
        out.push(acc);
    }
    Ok(out)
}
