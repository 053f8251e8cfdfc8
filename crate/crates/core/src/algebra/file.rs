use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{load_builtin, Algebra};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// JSON form of an algebra: omitted constants are zero, indices are 0-based.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Option<usize>,
    pub constants: Vec<ConstantEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> Self {
        let n = alg.dim();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = alg.constant(i, j, k);
                    if !c.is_zero() {
                        constants.push(ConstantEntry { i, j, k, c: c.clone() });
                    }
                }
            }
        }
        AlgebraFile {
            name: alg.name().to_string(),
            dim: n,
            basis: alg.basis_labels().to_vec(),
            unit: alg.unit_index(),
            constants,
        }
    }

    pub fn into_algebra(self) -> Result<Algebra> {
        if self.basis.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!(
                "dim is {} but {} basis labels were given",
                self.dim,
                self.basis.len()
            )));
        }
        let entries: Vec<_> = self.constants.into_iter().map(|e| (e.i, e.j, e.k, e.c)).collect();
        Algebra::from_entries(self.name, self.basis, &entries, self.unit)
    }
}

impl Algebra {
    pub fn from_json(src: &str) -> Result<Algebra> {
        let file: AlgebraFile = serde_json::from_str(src)?;
        file.into_algebra()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra file serializes")
    }

    /// A built-in name, or otherwise a path to a structure-constants file.
    pub fn resolve(name_or_path: &str) -> Result<Algebra> {
        match load_builtin(name_or_path) {
            Err(Error::UnknownAlgebra(_)) if Path::new(name_or_path).is_file() => {
                let src =
                    std::fs::read_to_string(name_or_path).map_err(|e| Error::Format(format!("{name_or_path}: {e}")))?;
                Algebra::from_json(&src)
            }
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_preserves_constants() {
        let h = load_builtin("quaternion").unwrap();
        let back = Algebra::from_json(&h.to_json()).unwrap();
        assert!(back.same_as(&h));
        assert_eq!(back.unit_index(), Some(0));
    }

    #[test]
    fn duplicate_triples_are_rejected() {
        let src = r#"{"name":"d","dim":1,"basis":["a"],"unit":null,
            "constants":[{"i":0,"j":0,"k":0,"c":"1"},{"i":0,"j":0,"k":0,"c":"2"}]}"#;
        assert!(matches!(Algebra::from_json(src), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn false_unit_is_rejected() {
        let src = r#"{"name":"d","dim":2,"basis":["a","b"],"unit":0,
            "constants":[{"i":0,"j":0,"k":0,"c":"1"}]}"#;
        assert!(matches!(Algebra::from_json(src), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn malformed_files() {
        assert!(matches!(Algebra::from_json("{"), Err(Error::Format(_))));
        let wrong_dim = r#"{"name":"d","dim":2,"basis":["a"],"unit":null,"constants":[]}"#;
        assert!(Algebra::from_json(wrong_dim).is_err());
        let out_of_range = r#"{"name":"d","dim":1,"basis":["a"],"unit":null,
            "constants":[{"i":0,"j":1,"k":0,"c":"1"}]}"#;
        assert!(Algebra::from_json(out_of_range).is_err());
        let bad_rational = r#"{"name":"d","dim":1,"basis":["a"],"unit":null,
            "constants":[{"i":0,"j":0,"k":0,"c":"1/0"}]}"#;
        assert!(Algebra::from_json(bad_rational).is_err());
    }

    #[test]
    fn omitted_triples_are_zero() {
        let src = r#"{"name":"dual","dim":2,"basis":["1","e"],"unit":0,
            "constants":[{"i":0,"j":0,"k":0,"c":"1"},{"i":0,"j":1,"k":1,"c":"1"},{"i":1,"j":0,"k":1,"c":"1"}]}"#;
        let d = Algebra::from_json(src).unwrap();
        let e = d.basis_element(1);
        assert!((&e * &e).is_zero());
        assert!(d.is_commutative() && d.is_associative());
    }
}
