use serde::Serialize;

use crate::algebra::{AlgElem, Algebra, Classification};
use crate::amodule::{Basis, BasisExtension, Coordinates};
use crate::biring::{GenMatrix, MatrixFile};
use crate::hom::{ModuleHom, StarForm};
use crate::tensorcalc::{NCPoly, TensorPoly};
use crate::verify::SuiteReport;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn coord_strings(v: &[AlgElem]) -> Vec<String> {
    v.iter().map(AlgElem::to_coord_string).collect()
}

fn human(v: &[AlgElem]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub(super) fn algebra_list(names: &[&str], text: bool) -> String {
    if text {
        names.join("\n")
    } else {
        json(&names)
    }
}

#[derive(Serialize)]
struct AlgebraView<'a> {
    name: &'a str,
    dim: usize,
    basis: &'a [String],
    unit: Option<String>,
    classification: Classification,
    table: Vec<Vec<String>>,
}

pub(super) fn algebra_show(alg: &Algebra, text: bool) -> String {
    let c = alg.classify();
    let table = alg.table();
    if !text {
        return json(&AlgebraView {
            name: alg.name(),
            dim: alg.dim(),
            basis: alg.basis_labels(),
            unit: alg.one().map(|u| u.to_coord_string()),
            classification: c,
            table,
        });
    }
    let labels = alg.basis_labels();
    let width = table
        .iter()
        .flatten()
        .chain(labels)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    let mut lines = vec![format!("{} (dim {})", alg.name(), alg.dim())];
    let header: Vec<String> = labels.iter().map(|l| pad(l)).collect();
    lines.push(format!("{} | {}", pad(""), header.join(" ")));
    for (label, row) in labels.iter().zip(&table) {
        let cells: Vec<String> = row.iter().map(|s| pad(s)).collect();
        lines.push(format!("{} | {}", pad(label), cells.join(" ")));
    }
    lines.push(format!(
        "unit: {}",
        alg.one().map(|u| u.to_string()).unwrap_or_else(|| "none".into())
    ));
    lines.push(format!(
        "commutative: {}, associative: {}, nucleus_dim: {}, center_dim: {}",
        c.commutative, c.associative, c.nucleus_dim, c.center_dim
    ));
    lines.join("\n")
}

pub(super) fn element(e: &AlgElem, text: bool) -> String {
    if text {
        e.to_string()
    } else {
        json(&e.to_coord_string())
    }
}

pub(super) fn elements(v: &[AlgElem], text: bool) -> String {
    if text {
        human(v)
    } else {
        json(&coord_strings(v))
    }
}

pub(super) fn matrix(algebra: Option<&str>, m: &GenMatrix<AlgElem>, text: bool) -> String {
    if text {
        return m.to_rows().iter().map(|r| human(r)).collect::<Vec<_>>().join("\n");
    }
    json(&MatrixFile::from_matrix(algebra, m))
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
enum CoordinatesView {
    Unique {
        coordinates: Vec<String>,
    },
    NotInSpan,
    NonUnique {
        particular: Vec<String>,
        witness: Vec<String>,
    },
}

pub(super) fn coordinates(c: &Coordinates, text: bool) -> String {
    if text {
        return match c {
            Coordinates::Unique(x) => format!("unique {}", human(x)),
            Coordinates::NotInSpan => "not in span".into(),
            Coordinates::NonUnique { particular, witness } => {
                format!("non-unique {} + multiples of {}", human(particular), human(witness))
            }
        };
    }
    json(&match c {
        Coordinates::Unique(x) => CoordinatesView::Unique {
            coordinates: coord_strings(x),
        },
        Coordinates::NotInSpan => CoordinatesView::NotInSpan,
        Coordinates::NonUnique { particular, witness } => CoordinatesView::NonUnique {
            particular: coord_strings(particular),
            witness: coord_strings(witness),
        },
    })
}

#[derive(Serialize)]
struct ExtensionView {
    vectors: usize,
    rank: usize,
    independent_rank: usize,
    full_rank: usize,
    verified: bool,
    spans: bool,
}

pub(super) fn extension(b: &Basis, e: &BasisExtension, text: bool) -> String {
    if text {
        return format!(
            "rank {} of {} products in a rational space of dimension {}; verified basis: {}",
            e.rank,
            e.independent_rank,
            e.full_rank,
            b.is_verified()
        );
    }
    json(&ExtensionView {
        vectors: e.vectors.len(),
        rank: e.rank,
        independent_rank: e.independent_rank,
        full_rank: e.full_rank,
        verified: b.is_verified(),
        spans: e.spans(),
    })
}

#[derive(Serialize)]
struct TermView {
    scale: String,
    prefix: String,
    suffix: String,
}

#[derive(Serialize)]
struct DerivativeView<'a> {
    expr: String,
    wrt: &'a str,
    terms: Vec<TermView>,
    display: String,
}

pub(super) fn derivative(p: &NCPoly, wrt: &str, d: &TensorPoly, text: bool) -> String {
    if text {
        return d.to_string();
    }
    json(&DerivativeView {
        expr: p.to_string(),
        wrt,
        terms: d
            .terms()
            .iter()
            .map(|t| TermView {
                scale: t.scale.to_string(),
                prefix: t.prefix.render(d.vars()),
                suffix: t.suffix.render(d.vars()),
            })
            .collect(),
        display: d.to_string(),
    })
}

#[derive(Serialize)]
struct ComponentView<'a> {
    name: &'a str,
    value: String,
}

pub(super) fn jacobian(names: &[&str], values: &[AlgElem], text: bool) -> String {
    if text {
        return names
            .iter()
            .zip(values)
            .map(|(n, v)| format!("{n} = {v}"))
            .collect::<Vec<_>>()
            .join("\n");
    }
    let comps: Vec<ComponentView> = names
        .iter()
        .zip(values)
        .map(|(n, v)| ComponentView {
            name: n,
            value: v.to_coord_string(),
        })
        .collect();
    json(&comps)
}

#[derive(Serialize)]
struct HomView {
    #[serde(flatten)]
    file: crate::hom::HomFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    product_forms: Option<Vec<String>>,
}

pub(super) fn hom(f: &ModuleHom, forms: Option<&[StarForm]>, text: bool) -> String {
    let forms = forms.map(|fs| fs.iter().map(|f| f.to_string()).collect::<Vec<_>>());
    if text {
        let mut lines: Vec<String> = f.matrix().to_rows().iter().map(|r| human(r)).collect();
        if let Some(fs) = forms {
            lines.push(format!("matrix equals: {}", fs.join(", ")));
        }
        return format!("{} homomorphism\n{}", f.orientation(), lines.join("\n"));
    }
    json(&HomView {
        file: f.to_file(),
        product_forms: forms,
    })
}

pub(super) fn reports(rs: &[SuiteReport], as_array: bool, text: bool) -> String {
    if text {
        return rs
            .iter()
            .map(|r| {
                let mut lines = vec![format!(
                    "{} on {}: {} ({} trials, seed {}, {} failures)",
                    r.suite,
                    r.algebra,
                    if r.passed { "passed" } else { "FAILED" },
                    r.trials,
                    r.seed,
                    r.failures.len()
                )];
                lines.extend(
                    r.failures
                        .iter()
                        .map(|f| format!("  failure: {} [{}] {}", f.law, f.inputs, f.detail)),
                );
                lines.extend(r.observations.iter().map(|o| format!("  note: {o}")));
                lines.join("\n")
            })
            .collect::<Vec<_>>()
            .join("\n");
    }
    if as_array {
        json(&rs)
    } else {
        json(&rs[0])
    }
}
