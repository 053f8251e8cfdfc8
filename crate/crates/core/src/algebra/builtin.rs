use super::{AlgElem, Algebra};
use crate::error::{Error, Result};
use crate::exact::Rational;

const NAMES: [&str; 6] = ["rational", "complex", "quaternion", "octonion", "matrix2", "zero1"];

pub fn builtin_names() -> &'static [&'static str] {
    &NAMES
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

/// Loads one of the built-in algebras by name.
///
/// `complex`, `quaternion` and `octonion` are generated by repeated
/// Cayley–Dickson doubling starting from `rational`.
pub fn load_builtin(name: &str) -> Result<Algebra> {
    match name {
        "rational" => rational(),
        "complex" => cayley_dickson(&rational()?, "complex", labels(&["1", "i"])),
        "quaternion" => {
            let c = load_builtin("complex")?;
            cayley_dickson(&c, "quaternion", labels(&["1", "i", "j", "k"]))
        }
        "octonion" => {
            let h = load_builtin("quaternion")?;
            cayley_dickson(&h, "octonion", labels(&["1", "i", "j", "k", "l", "il", "jl", "kl"]))
        }
        "matrix2" => matrix2(),
        "zero1" => Algebra::new("zero1", labels(&["ε"]), vec![Rational::zero()], None),
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

fn rational() -> Result<Algebra> {
    Algebra::new("rational", labels(&["1"]), vec![Rational::one()], Some(0))
}

/// 2x2 matrix units `E11, E12, E21, E22` with `E_ab E_cd = δ_bc E_ad`.
fn matrix2() -> Result<Algebra> {
    let idx = |a: usize, b: usize| 2 * a + b;
    let mut entries = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                entries.push((idx(a, b), idx(b, d), idx(a, d), Rational::one()));
            }
        }
    }
    Algebra::from_entries("matrix2", labels(&["E11", "E12", "E21", "E22"]), &entries, None)
}

/// Doubles `base` into pairs `(x, y)` with
/// `(x, y)(u, v) = (xu - v̄y, vx + yū)`, where conjugation negates every
/// coordinate except the unit. `base` must have its unit at index 0.
pub fn cayley_dickson(base: &Algebra, name: &str, labels: Vec<String>) -> Result<Algebra> {
    if base.unit_index() != Some(0) {
        return Err(Error::InvalidAlgebra(format!(
            "Cayley–Dickson doubling needs a unit at basis index 0 of {}",
            base.name()
        )));
    }
    let n = base.dim();
    let m = 2 * n;
    if labels.len() != m {
        return Err(Error::InvalidAlgebra(format!("doubled algebra needs {m} labels")));
    }
    let conj = |x: &AlgElem| {
        let coords = x
            .coords()
            .iter()
            .enumerate()
            .map(|(idx, c)| if idx == 0 { c.clone() } else { -c })
            .collect();
        AlgElem::from_coords_unchecked(base, coords)
    };
    let split = |t: usize| {
        if t < n {
            (base.basis_element(t), base.zero())
        } else {
            (base.zero(), base.basis_element(t - n))
        }
    };
    let mut constants = vec![Rational::zero(); m * m * m];
    for p in 0..m {
        let (x, y) = split(p);
        for q in 0..m {
            let (u, v) = split(q);
            let first = &(&x * &u) - &(&conj(&v) * &y);
            let second = &(&v * &x) + &(&y * &conj(&u));
            for (k, c) in first.coords().iter().chain(second.coords()).enumerate() {
                constants[(p * m + q) * m + k] = c.clone();
            }
        }
    }
    Algebra::new(name, labels, constants, Some(0))
}
