use std::fmt;

use super::{GenMatrix, Ring};
use crate::error::{Error, Result};

/// A matrix expression tree over one carrier.
#[derive(Clone, PartialEq)]
pub enum MatExpr<E> {
    Leaf(GenMatrix<E>),
    Transpose(Box<MatExpr<E>>),
    Rc(Box<MatExpr<E>>, Box<MatExpr<E>>),
    Cr(Box<MatExpr<E>>, Box<MatExpr<E>>),
    Sum(Box<MatExpr<E>>, Box<MatExpr<E>>),
}

impl<E: Clone + PartialEq + fmt::Debug> MatExpr<E> {
    pub fn leaf(m: GenMatrix<E>) -> Self {
        MatExpr::Leaf(m)
    }

    pub fn transpose(e: Self) -> Self {
        MatExpr::Transpose(Box::new(e))
    }

    pub fn rc(a: Self, b: Self) -> Self {
        MatExpr::Rc(Box::new(a), Box::new(b))
    }

    pub fn cr(a: Self, b: Self) -> Self {
        MatExpr::Cr(Box::new(a), Box::new(b))
    }

    pub fn sum(a: Self, b: Self) -> Self {
        MatExpr::Sum(Box::new(a), Box::new(b))
    }

    /// Shape of the value, checking compatibility at every node.
    pub fn shape(&self) -> Result<(usize, usize)> {
        match self {
            MatExpr::Leaf(m) => Ok(m.shape()),
            MatExpr::Transpose(e) => e.shape().map(|(r, c)| (c, r)),
            MatExpr::Rc(a, b) => {
                let ((ar, ac), (br, bc)) = (a.shape()?, b.shape()?);
                if ac != br {
                    return Err(Error::DimensionMismatch(format!("rc node: {ar}x{ac} by {br}x{bc}")));
                }
                Ok((ar, bc))
            }
            MatExpr::Cr(a, b) => {
                let ((ar, ac), (br, bc)) = (a.shape()?, b.shape()?);
                if ar != bc {
                    return Err(Error::DimensionMismatch(format!("cr node: {ar}x{ac} by {br}x{bc}")));
                }
                Ok((br, ac))
            }
            MatExpr::Sum(a, b) => {
                let (sa, sb) = (a.shape()?, b.shape()?);
                if sa != sb {
                    return Err(Error::DimensionMismatch(format!("sum node: {sa:?} vs {sb:?}")));
                }
                Ok(sa)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            MatExpr::Leaf(_) => 0,
            MatExpr::Transpose(e) => 1 + e.depth(),
            MatExpr::Rc(a, b) | MatExpr::Cr(a, b) | MatExpr::Sum(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Strict bottom-up evaluation. The whole tree is shape-checked first.
    pub fn eval<R: Ring<Elem = E>>(&self, ring: &R) -> Result<GenMatrix<E>> {
        self.shape()?;
        self.eval_checked(ring)
    }

    fn eval_checked<R: Ring<Elem = E>>(&self, ring: &R) -> Result<GenMatrix<E>> {
        match self {
            MatExpr::Leaf(m) => Ok(m.clone()),
            MatExpr::Transpose(e) => Ok(e.eval_checked(ring)?.transpose()),
            MatExpr::Rc(a, b) => a.eval_checked(ring)?.rc(&b.eval_checked(ring)?, ring),
            MatExpr::Cr(a, b) => a.eval_checked(ring)?.cr(&b.eval_checked(ring)?, ring),
            MatExpr::Sum(a, b) => a.eval_checked(ring)?.sum(&b.eval_checked(ring)?, ring),
        }
    }

    /// Dual statement: every leaf is transposed and the two products swap.
    /// Evaluating the dual yields the transpose of the original value.
    pub fn dualize(&self) -> Self {
        match self {
            MatExpr::Leaf(m) => MatExpr::Leaf(m.transpose()),
            MatExpr::Transpose(e) => MatExpr::transpose(e.dualize()),
            MatExpr::Rc(a, b) => MatExpr::cr(a.dualize(), b.dualize()),
            MatExpr::Cr(a, b) => MatExpr::rc(a.dualize(), b.dualize()),
            MatExpr::Sum(a, b) => MatExpr::sum(a.dualize(), b.dualize()),
        }
    }
}

impl<E: fmt::Debug> fmt::Debug for MatExpr<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatExpr::Leaf(m) => write!(f, "{m:?}"),
            MatExpr::Transpose(e) => write!(f, "T({e:?})"),
            MatExpr::Rc(a, b) => write!(f, "rc({a:?}, {b:?})"),
            MatExpr::Cr(a, b) => write!(f, "cr({a:?}, {b:?})"),
            MatExpr::Sum(a, b) => write!(f, "sum({a:?}, {b:?})"),
        }
    }
}
