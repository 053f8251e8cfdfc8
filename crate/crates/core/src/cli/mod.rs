//! Command-line front end. Output is JSON unless `--text` is given.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage error,
//! 3 malformed input file.

mod output;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{builtin_names, AlgElem, Algebra};
use crate::amodule::{coordinates, extend_basis, OrientedVector, VectorFile};
use crate::biring::MatrixFile;
use crate::error::{Error, Result};
use crate::hom::{identify_star, HomFile};
use crate::tensorcalc::{differentiate, jacobian_apply, parse_map, parse_ncpoly};
use crate::verify::run_suites;

pub const SEED_ENV: &str = "NCMOD_SEED";
pub const DEFAULT_SEED: u64 = 42;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ncmod",
    version,
    about = "Exact algebra over finite-dimensional noncommutative algebras"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Built-in algebras.
    Algebras {
        #[command(subcommand)]
        action: AlgebrasAction,
    },
    /// Inspect one algebra.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Product of two elements given as coordinate strings.
    Mul {
        #[arg(long)]
        algebra: String,
        x: String,
        y: String,
    },
    /// Matrix operations on matrix files.
    Mat {
        #[arg(long, value_enum)]
        op: MatOp,
        a: String,
        b: Option<String>,
    },
    /// Coordinates of a vector relative to a basis file.
    Coords {
        #[arg(long)]
        basis: String,
        /// One component of the target vector; repeat per component.
        #[arg(long = "comp", required = true)]
        comps: Vec<String>,
    },
    /// Rank of the basis extension of a basis file.
    Extend {
        #[arg(long)]
        basis: String,
    },
    /// Module homomorphisms given as hom files.
    Hom {
        #[command(subcommand)]
        action: HomAction,
    },
    /// Partial derivative of a noncommutative polynomial.
    Diff {
        /// Algebra the polynomial is meant over; checked to exist.
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        wrt: String,
    },
    /// Jacobian of a polynomial map applied to a displacement.
    Jacobian {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Bindings `name = expr; ...`.
        #[arg(long)]
        map: String,
        /// Coordinates of the point, one per variable.
        #[arg(long = "point", required = true)]
        point: Vec<String>,
        /// Coordinates of the displacement, one per variable.
        #[arg(long = "disp", required = true)]
        disp: Vec<String>,
    },
    /// Seeded property suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum AlgebrasAction {
    List,
}

#[derive(Subcommand, Debug)]
enum AlgebraAction {
    /// Multiplication table and classification.
    Show { name: String },
}

#[derive(Subcommand, Debug)]
enum HomAction {
    Apply {
        #[arg(long)]
        hom: String,
        #[arg(long = "comp", required = true)]
        comps: Vec<String>,
    },
    Sum {
        g: String,
        h: String,
    },
    /// `h ∘ g`: apply `g` first.
    Compose {
        h: String,
        g: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatOp {
    Rc,
    Cr,
    Transpose,
    Sum,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    algebra: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Defaults to the NCMOD_SEED environment variable, then 42.
    #[arg(long)]
    seed: Option<u64>,
    /// Matrix or module size used by the suites.
    #[arg(long)]
    dim: Option<usize>,
}

/// Failure of a command, tagged with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Format(_) | Error::InvalidAlgebra(_) => EXIT_MALFORMED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_file(path: &str) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_MALFORMED,
        message: format!("{path}: {e}"),
    })
}

/// Errors raised while decoding a file count as malformed input.
fn decoding<T>(path: &str, r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure {
        code: EXIT_MALFORMED,
        message: format!("{path}: {e}"),
    })
}

pub fn main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let seed_env = std::env::var(SEED_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, seed_env.as_deref(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation. `seed_env` stands in for the NCMOD_SEED variable.
pub fn run(args: Vec<String>, seed_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match dispatch(&cli, seed_env) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, seed_env: Option<&str>) -> std::result::Result<(String, i32), Failure> {
    let text = cli.text;
    let ok = |s: String| Ok((s, EXIT_OK));
    match &cli.command {
        Command::Algebras {
            action: AlgebrasAction::List,
        } => ok(output::algebra_list(builtin_names(), text)),
        Command::Algebra {
            action: AlgebraAction::Show { name },
        } => ok(output::algebra_show(&Algebra::resolve(name)?, text)),
        Command::Mul { algebra, x, y } => {
            let alg = Algebra::resolve(algebra)?;
            let a = AlgElem::parse(&alg, x)?;
            let b = AlgElem::parse(&alg, y)?;
            ok(output::element(&alg.mul(&a, &b)?, text))
        }
        Command::Mat { op, a, b } => ok(mat(*op, a, b.as_deref(), text)?),
        Command::Coords { basis, comps } => {
            let file = decoding(basis, VectorFile::from_json(&read_file(basis)?))?;
            let basis_obj = file.to_basis()?;
            let alg = basis_obj.algebra().clone();
            let comps = comps
                .iter()
                .map(|c| AlgElem::parse(&alg, c))
                .collect::<Result<Vec<_>>>()?;
            let target = OrientedVector::new(&alg, basis_obj.orientation(), comps)?;
            ok(output::coordinates(&coordinates(&target, &basis_obj)?, text))
        }
        Command::Extend { basis } => {
            let file = decoding(basis, VectorFile::from_json(&read_file(basis)?))?;
            let b = file.to_basis()?;
            ok(output::extension(&b, &extend_basis(&b), text))
        }
        Command::Hom { action } => ok(hom(action, text)?),
        Command::Diff {
            algebra,
            vars,
            expr,
            wrt,
        } => {
            if let Some(name) = algebra {
                Algebra::resolve(name)?;
            }
            let p = parse_ncpoly(expr, vars)?;
            ok(output::derivative(&p, wrt, &differentiate(&p, wrt)?, text))
        }
        Command::Jacobian {
            algebra,
            vars,
            map,
            point,
            disp,
        } => {
            let alg = Algebra::resolve(algebra)?;
            let bindings = parse_map(map, vars)?;
            let parse_all = |xs: &[String]| xs.iter().map(|c| AlgElem::parse(&alg, c)).collect::<Result<Vec<_>>>();
            let (pt, dp) = (parse_all(point)?, parse_all(disp)?);
            let polys: Vec<_> = bindings.iter().map(|(_, p)| p.clone()).collect();
            let values = jacobian_apply(&polys, &alg, &pt, &dp)?;
            let names: Vec<&str> = bindings.iter().map(|(n, _)| n.as_str()).collect();
            ok(output::jacobian(&names, &values, text))
        }
        Command::Verify(args) => verify(args, seed_env, text),
    }
}

fn load_matrix(
    path: &str,
) -> std::result::Result<(Option<String>, Algebra, crate::biring::GenMatrix<AlgElem>), Failure> {
    let file = decoding(path, MatrixFile::from_json(&read_file(path)?))?;
    let (alg, m) = file.to_matrix()?;
    Ok((file.algebra, alg, m))
}

fn mat(op: MatOp, a: &str, b: Option<&str>, text: bool) -> std::result::Result<String, Failure> {
    let (name, alg, ma) = load_matrix(a)?;
    let result = match op {
        MatOp::Transpose => {
            if b.is_some() {
                return Err(Error::DimensionMismatch("transpose takes one matrix".into()).into());
            }
            ma.transpose()
        }
        _ => {
            let b = b.ok_or_else(|| Error::DimensionMismatch("this operation takes two matrices".into()))?;
            let (_, alg_b, mb) = load_matrix(b)?;
            if !alg.same_as(&alg_b) {
                return Err(Error::AlgebraMismatch {
                    left: alg.name().to_string(),
                    right: alg_b.name().to_string(),
                }
                .into());
            }
            match op {
                MatOp::Rc => ma.rc(&mb, &alg)?,
                MatOp::Cr => ma.cr(&mb, &alg)?,
                _ => ma.sum(&mb, &alg)?,
            }
        }
    };
    Ok(output::matrix(name.as_deref(), &result, text))
}

fn load_hom(path: &str) -> std::result::Result<crate::hom::ModuleHom, Failure> {
    let file = decoding(path, HomFile::from_json(&read_file(path)?))?;
    Ok(file.to_hom()?)
}

fn hom(action: &HomAction, text: bool) -> std::result::Result<String, Failure> {
    match action {
        HomAction::Apply { hom, comps } => {
            let f = load_hom(hom)?;
            let v = comps
                .iter()
                .map(|c| AlgElem::parse(f.source_algebra(), c))
                .collect::<Result<Vec<_>>>()?;
            Ok(output::elements(&f.apply(&v)?, text))
        }
        HomAction::Sum { g, h } => Ok(output::hom(&load_hom(g)?.sum(&load_hom(h)?)?, None, text)),
        HomAction::Compose { h, g } => {
            let (h, g) = (load_hom(h)?, load_hom(g)?);
            let f = h.compose(&g)?;
            let forms = if h.alg_hom().is_none() && g.alg_hom().is_none() {
                Some(identify_star(&h, &g)?)
            } else {
                None
            };
            Ok(output::hom(&f, forms.as_deref(), text))
        }
    }
}

fn verify(args: &VerifyArgs, seed_env: Option<&str>, text: bool) -> std::result::Result<(String, i32), Failure> {
    let seed = match (args.seed, seed_env) {
        (Some(s), _) => s,
        (None, Some(env)) => env.trim().parse().map_err(|_| Failure {
            code: EXIT_USAGE,
            message: format!("{SEED_ENV} is not an unsigned 64-bit integer: {env:?}"),
        })?,
        (None, None) => DEFAULT_SEED,
    };
    let alg = Algebra::resolve(&args.algebra)?;
    let reports = run_suites(&args.suite, &alg, args.trials, seed, args.dim)?;
    let code = if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILURES
    };
    Ok((output::reports(&reports, args.suite == "all", text), code))
}
