use serde::{Deserialize, Serialize};

use super::GenMatrix;
use crate::algebra::{load_builtin, AlgElem, Algebra};
use crate::error::{Error, Result};

/// JSON matrix file. Entries are coordinate strings `"c0,c1,..."`, or plain
/// rationals when `algebra` is null.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub algebra: Option<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    /// Parses the entries. A null algebra means the rationals, carried as the
    /// one-dimensional `rational` algebra.
    pub fn to_matrix(&self) -> Result<(Algebra, GenMatrix<AlgElem>)> {
        let alg = match &self.algebra {
            Some(name) => Algebra::resolve(name)?,
            None => load_builtin("rational")?,
        };
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Format(format!(
                "matrix file declares {}x{} but entries do not match",
                self.rows, self.cols
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| AlgElem::parse(&alg, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = if self.rows == 0 {
            GenMatrix::zeros(&alg, 0, self.cols)
        } else {
            GenMatrix::from_rows(rows)?
        };
        Ok((alg, m))
    }

    pub fn from_matrix(algebra: Option<&str>, m: &GenMatrix<AlgElem>) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            algebra: algebra.map(str::to_string),
            entries: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(AlgElem::to_coord_string).collect())
                .collect(),
        }
    }

    pub fn from_json(src: &str) -> Result<Self> {
        Ok(serde_json::from_str(src)?)
    }
}
