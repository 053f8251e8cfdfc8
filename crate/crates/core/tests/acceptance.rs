//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Checks compare library output against oracles written here from first
//! principles (Hamilton quaternion products, index formulas for the matrix
//! products, dual-number tangents) as well as against the seeded suites.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use ncmod::algebra::load_builtin;
use ncmod::amodule::{coordinates, expand, extend_basis, Basis, Coordinates, Orientation, OrientedVector, Shape};
use ncmod::biring::{GenMatrix, MatExpr, Rationals};
use ncmod::hom::{identify_star, ModuleHom, StarForm};
use ncmod::tensorcalc::{differentiate, jacobian_apply, parse_ncpoly, NCPoly, Tensor, Word};
use ncmod::verify::{
    gen_element, gen_elements, gen_expr, gen_matrix, gen_ncpoly, gen_qmatrix, gen_tensor, run_suite, Prng, SuiteReport,
    SUITES,
};
use ncmod::{AlgElem, Algebra, Rational};

const SEED: u64 = 42;
const BIRING_TRIALS: usize = 200;
const BIRING_BUDGET: Duration = Duration::from_secs(5);
const REDUCIBILITY_PAIRS: usize = 100;
const DUALITY_TREES: usize = 100;
const DUALITY_DEPTH: usize = 5;
const MODULE_TRIALS: usize = 200;
const COORD_TUPLES: usize = 50;
const EXTENSION_BASES: usize = 10;
const HOM_TRIALS: usize = 100;
const TENSOR_PAIRS: usize = 100;
const DIFF_MAPS: usize = 100;
const SHIFT_PAIRS: usize = 100;
const CLI_TRIALS: &str = "100";
const TOTAL_BUDGET: Duration = Duration::from_secs(60);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

trait Ctx<T> {
    fn ctx(self, what: &str) -> Result<T, String>;
}

impl<T, E: std::fmt::Display> Ctx<T> for Result<T, E> {
    fn ctx(self, what: &str) -> Result<T, String> {
        self.map_err(|e| format!("{what}: {e}"))
    }
}

fn alg(name: &str) -> Algebra {
    load_builtin(name).expect("builtin algebra")
}

fn suite_clean(r: &SuiteReport, trials: usize) -> Result<(), String> {
    ensure(r.trials == trials, || {
        format!("{} ran {} trials, wanted {trials}", r.suite, r.trials)
    })?;
    ensure(r.passed && r.failures.is_empty(), || {
        let first = r
            .failures
            .first()
            .map(|f| format!("{}: {}", f.law, f.detail))
            .unwrap_or_default();
        format!(
            "{} on {}: {} failures, first: {first}",
            r.suite,
            r.algebra,
            r.failures.len()
        )
    })
}

// Hamilton quaternions on coordinates (1, i, j, k).

type Q = [Rational; 4];

fn q(e: &AlgElem) -> Q {
    let c = e.coords();
    [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]
}

fn qzero() -> Q {
    std::array::from_fn(|_| Rational::zero())
}

/// `e_a e_b = sign * e_c`.
fn hamilton(a: usize, b: usize) -> (i64, usize) {
    match (a, b) {
        (0, x) | (x, 0) => (1, x),
        (x, y) if x == y => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

fn qmul(x: &Q, y: &Q) -> Q {
    let mut out = qzero();
    for (a, xa) in x.iter().enumerate() {
        for (b, yb) in y.iter().enumerate() {
            let (s, c) = hamilton(a, b);
            out[c] += &(&(xa * yb) * &Rational::from_int(s));
        }
    }
    out
}

fn qadd(x: &Q, y: &Q) -> Q {
    std::array::from_fn(|i| &x[i] + &y[i])
}

type QMat = Vec<Vec<Q>>;

fn qmat(m: &GenMatrix<AlgElem>) -> QMat {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| q(m.get(i, j))).collect())
        .collect()
}

fn qmat_t(a: &QMat) -> QMat {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// `(rc(a,b))[i][j] = Σ_k a[i][k] b[k][j]`.
fn qmat_rc(a: &QMat, b: &QMat) -> QMat {
    let (rows, inner, cols) = (a.len(), b.len(), b[0].len());
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).fold(qzero(), |acc, k| qadd(&acc, &qmul(&a[i][k], &b[k][j]))))
                .collect()
        })
        .collect()
}

/// `(cr(a,b))[i][j] = Σ_k a[k][j] b[i][k]`.
fn qmat_cr(a: &QMat, b: &QMat) -> QMat {
    let (rows, inner, cols) = (b.len(), a.len(), a[0].len());
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).fold(qzero(), |acc, k| qadd(&acc, &qmul(&a[k][j], &b[i][k]))))
                .collect()
        })
        .collect()
}

fn qmat_sum(a: &QMat, b: &QMat) -> QMat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| qadd(x, y)).collect())
        .collect()
}

fn qeval(e: &MatExpr<AlgElem>) -> QMat {
    match e {
        MatExpr::Leaf(m) => qmat(m),
        MatExpr::Transpose(x) => qmat_t(&qeval(x)),
        MatExpr::Rc(a, b) => qmat_rc(&qeval(a), &qeval(b)),
        MatExpr::Cr(a, b) => qmat_cr(&qeval(a), &qeval(b)),
        MatExpr::Sum(a, b) => qmat_sum(&qeval(a), &qeval(b)),
    }
}

fn rank_oracle(rows: Vec<Vec<Rational>>) -> usize {
    let mut m = rows;
    let mut rank = 0;
    let cols = m.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].checked_div(&prow[c]).expect("nonzero pivot");
                for (v, p) in row.iter_mut().zip(&prow).skip(c) {
                    *v -= &(&f * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn biring() -> Check {
    let h = alg("quaternion");
    let start = Instant::now();
    let report = run_suite("biring", &h, BIRING_TRIALS, SEED, Some(3)).ctx("biring suite")?;
    let elapsed = start.elapsed();
    suite_clean(&report, BIRING_TRIALS)?;
    ensure(elapsed < BIRING_BUDGET, || {
        format!("suite took {elapsed:.2?}, budget {BIRING_BUDGET:?}")
    })?;
    let id = GenMatrix::identity(&h, 3).ctx("identity")?;
    ensure(id.transpose() == id, || "E^T != E".into())?;
    for t in 0..BIRING_TRIALS {
        let mut rng = Prng::for_trial(SEED, t as u64);
        let a = gen_matrix(&h, 3, 3, &mut rng);
        let b = gen_matrix(&h, 3, 3, &mut rng);
        let b2 = gen_matrix(&h, 3, 3, &mut rng);
        let (qa, qb, qb2) = (qmat(&a), qmat(&b), qmat(&b2));
        let rc = a.rc(&b, &h).ctx("rc")?;
        let cr = a.cr(&b, &h).ctx("cr")?;
        ensure(qmat(&rc) == qmat_rc(&qa, &qb), || {
            format!("trial {t}: rc disagrees with index formula")
        })?;
        ensure(qmat(&cr) == qmat_cr(&qa, &qb), || {
            format!("trial {t}: cr disagrees with index formula")
        })?;
        ensure(a.transpose().transpose() == a, || format!("trial {t}: (a^T)^T != a"))?;
        ensure(
            qmat_t(&qmat_rc(&qa, &qb)) == qmat_cr(&qmat_t(&qa), &qmat_t(&qb)),
            || format!("trial {t}: oracle (rc a b)^T != cr a^T b^T"),
        )?;
        ensure(
            qmat_t(&qmat_cr(&qa, &qb)) == qmat_rc(&qmat_t(&qa), &qmat_t(&qb)),
            || format!("trial {t}: oracle (cr a b)^T != rc a^T b^T"),
        )?;
        let s = qmat_sum(&qb, &qb2);
        for (name, lhs, rhs) in [
            (
                "a rc (b1+b2)",
                qmat_rc(&qa, &s),
                qmat_sum(&qmat_rc(&qa, &qb), &qmat_rc(&qa, &qb2)),
            ),
            (
                "(b1+b2) rc a",
                qmat_rc(&s, &qa),
                qmat_sum(&qmat_rc(&qb, &qa), &qmat_rc(&qb2, &qa)),
            ),
            (
                "a cr (b1+b2)",
                qmat_cr(&qa, &s),
                qmat_sum(&qmat_cr(&qa, &qb), &qmat_cr(&qa, &qb2)),
            ),
            (
                "(b1+b2) cr a",
                qmat_cr(&s, &qa),
                qmat_sum(&qmat_cr(&qb, &qa), &qmat_cr(&qb2, &qa)),
            ),
        ] {
            ensure(lhs == rhs, || {
                format!("trial {t}: oracle distributivity fails for {name}")
            })?;
        }
    }
    Ok(format!(
        "quaternion 3x3, {BIRING_TRIALS} trials, 0 failures, suite {elapsed:.2?} < {BIRING_BUDGET:?}, index-formula oracle agrees"
    ))
}

fn reducibility() -> Check {
    for t in 0..REDUCIBILITY_PAIRS {
        let mut rng = Prng::for_trial(SEED, t as u64);
        let (r, m, c) = (1 + rng.below(4), 1 + rng.below(4), 1 + rng.below(4));
        let a = gen_qmatrix(r, m, &mut rng);
        let b = gen_qmatrix(m, c, &mut rng);
        let rc = a.rc(&b, &Rationals).ctx("rc")?;
        let cr = b.cr(&a, &Rationals).ctx("cr")?;
        ensure(rc == cr, || {
            format!("pair {t}: rc(a,b) != cr(b,a) for {r}x{m} by {m}x{c}")
        })?;
        for i in 0..r {
            for j in 0..c {
                let direct: Rational = (0..m).map(|k| a.get(i, k) * b.get(k, j)).sum();
                ensure(&direct == rc.get(i, j), || {
                    format!("pair {t}: rc entry ({i},{j}) is wrong")
                })?;
            }
        }
    }
    let suite = run_suite("reducibility", &alg("rational"), REDUCIBILITY_PAIRS, SEED, None).ctx("suite")?;
    suite_clean(&suite, REDUCIBILITY_PAIRS)?;
    Ok(format!(
        "{REDUCIBILITY_PAIRS} random rational pairs of shapes up to 4x4, exact"
    ))
}

fn duality() -> Check {
    let h = alg("quaternion");
    let mut deepest = 0;
    for t in 0..DUALITY_TREES {
        let mut rng = Prng::for_trial(SEED, t as u64);
        let e = gen_expr(&h, 2, DUALITY_DEPTH, &mut rng);
        ensure(e.depth() <= DUALITY_DEPTH, || format!("tree {t} too deep"))?;
        deepest = deepest.max(e.depth());
        let value = e.eval(&h).ctx("eval")?;
        let dual = e.dualize().eval(&h).ctx("eval dual")?;
        ensure(dual == value.transpose(), || {
            format!("tree {t}: eval(dualize(e)) != eval(e)^T")
        })?;
        ensure(qmat(&dual) == qmat_t(&qeval(&e)), || {
            format!("tree {t}: oracle evaluation disagrees")
        })?;
    }
    let suite = run_suite("duality", &h, DUALITY_TREES, SEED, Some(2)).ctx("suite")?;
    suite_clean(&suite, DUALITY_TREES)?;
    Ok(format!(
        "{DUALITY_TREES} quaternion 2x2 trees, depth <= {DUALITY_DEPTH} (max seen {deepest}), exact"
    ))
}

fn classification() -> Check {
    let c = alg("complex").classify();
    ensure(c.commutative && c.associative, || format!("complex: {c:?}"))?;
    for name in ["quaternion", "matrix2"] {
        let c = alg(name).classify();
        ensure(!c.commutative && c.associative && c.center_dim == 1, || {
            format!("{name}: {c:?}")
        })?;
    }
    let o = alg("octonion");
    let c = o.classify();
    ensure(!c.commutative && !c.associative, || format!("octonion: {c:?}"))?;
    let h = alg("quaternion");
    let basis = h.basis_elements();
    for x in &basis {
        for y in &basis {
            ensure(q(&(x * y)) == qmul(&q(x), &q(y)), || {
                format!("quaternion {x}*{y} differs from Hamilton's table")
            })?;
            for z in &basis {
                ensure(h.associator(x, y, z).ctx("associator")?.is_zero(), || {
                    format!("[{x},{y},{z}] != 0")
                })?;
                let (qx, qy, qz) = (q(x), q(y), q(z));
                ensure(qmul(&qmul(&qx, &qy), &qz) == qmul(&qx, &qmul(&qy, &qz)), || {
                    "oracle not associative".into()
                })?;
            }
        }
    }
    let owned = o.basis_elements();
    let ob = &owned;
    let witness = ob
        .iter()
        .flat_map(|x| ob.iter().flat_map(move |y| ob.iter().map(move |z| (x, y, z))))
        .find(|(x, y, z)| {
            let a = o.associator(x, y, z).expect("same algebra");
            !a.is_zero() && &(&(*x * *y) * *z) - &(*x * &(*y * *z)) == a
        })
        .ok_or("no octonion basis triple with nonzero associator")?;
    Ok(format!(
        "table matches, 64 quaternion triples associate, octonion witness [{}, {}, {}]",
        witness.0, witness.1, witness.2
    ))
}

fn unital_extension() -> Check {
    let z = alg("zero1");
    let d = z.unital_extension();
    ensure(d.dim() == 2, || format!("dimension {}", d.dim()))?;
    let u = d.one().ok_or("extension has no unit")?;
    let basis = d.basis_elements();
    for e in &basis {
        ensure(&(&u * e) == e && &(e * &u) == e, || format!("unit fails on {e}"))?;
    }
    let eps = basis.iter().find(|e| **e != u).ok_or("no nilpotent generator")?;
    ensure(!eps.is_zero() && (eps * eps).is_zero(), || format!("{eps}^2 != 0"))?;
    let h = alg("quaternion");
    let hx = h.unital_extension();
    ensure(hx.same_as(&h) && hx.to_json() == h.to_json(), || {
        "quaternion extension differs from quaternion".into()
    })?;
    Ok(format!(
        "zero1 -> dim 2 with unit {u}, {eps}^2 = 0; quaternion unchanged"
    ))
}

fn module_laws() -> Check {
    let mut notes = Vec::new();
    for name in ["quaternion", "octonion"] {
        let a = alg(name);
        let report = run_suite("module-laws", &a, MODULE_TRIALS, SEED, None).ctx("module-laws")?;
        suite_clean(&report, MODULE_TRIALS)?;
        ensure(
            report.observations.iter().any(|o| o.contains("left-column gives")),
            || format!("{name}: no recorded contraction witness"),
        )?;
        notes.push(format!("{name} {MODULE_TRIALS} trials x 4 orientations clean"));
    }
    let h = alg("quaternion");
    let (i, j) = (h.basis_element(1), h.basis_element(2));
    let left = Orientation::LEFT_COLUMN.act(&i, &j).ctx("left")?;
    let right = Orientation::RIGHT_COLUMN.act(&i, &j).ctx("right")?;
    ensure(
        q(&left) == qmul(&q(&i), &q(&j)) && q(&right) == qmul(&q(&j), &q(&i)),
        || "actions disagree with the oracle".into(),
    )?;
    ensure(left != right, || "left and right actions agree".into())?;
    notes.push(format!(
        "witness: i acting on (j) gives {left} on the left, {right} on the right"
    ));
    Ok(notes.join("; "))
}

fn random_verified_basis(h: &Algebra, o: Orientation, n: usize, rng: &mut Prng) -> Result<Basis, String> {
    for _ in 0..50 {
        let vs = (0..n)
            .map(|_| OrientedVector::new(h, o, gen_elements(h, n, rng)).ctx("vector"))
            .collect::<Result<Vec<_>, _>>()?;
        let b = Basis::new(h, o, n, vs).ctx("basis")?;
        if b.is_verified() {
            return Ok(b);
        }
    }
    Err(format!("no verified basis of A^{n} found in 50 draws"))
}

fn combine(o: Orientation, coeffs: &[AlgElem], vectors: &[OrientedVector], h: &Algebra) -> Vec<AlgElem> {
    let n = vectors[0].len();
    (0..n)
        .map(|k| {
            coeffs.iter().zip(vectors).fold(h.zero(), |acc, (c, v)| {
                &acc + &o.act(c, &v.comps()[k]).expect("same algebra")
            })
        })
        .collect()
}

fn coords() -> Check {
    let h = alg("quaternion");
    let mut count = 0;
    for (oi, o) in Orientation::ALL.into_iter().enumerate() {
        for n in [2, 3] {
            let mut rng = Prng::for_trial(SEED, (oi * 10 + n) as u64);
            let basis = random_verified_basis(&h, o, n, &mut rng)?;
            for t in 0..COORD_TUPLES {
                let c = gen_elements(&h, n, &mut rng);
                let v = expand(&basis, &c).ctx("expand")?;
                ensure(v.comps() == combine(o, &c, basis.vectors(), &h).as_slice(), || {
                    format!("{o} A^{n} tuple {t}: expand disagrees with direct combination")
                })?;
                let got = coordinates(&v, &basis).ctx("coordinates")?;
                ensure(got == Coordinates::Unique(c.clone()), || {
                    format!("{o} A^{n} tuple {t}: got {got:?}")
                })?;
                count += 1;
            }
        }
    }
    let o = Orientation::LEFT_COLUMN;
    let mut rng = Prng::for_trial(SEED, 99);
    let v1 = OrientedVector::new(&h, o, gen_elements(&h, 2, &mut rng)).ctx("v1")?;
    let v2 = OrientedVector::new(&h, o, gen_elements(&h, 2, &mut rng)).ctx("v2")?;
    let v3 = v1.add(&v2).ctx("v1+v2")?;
    let gens = vec![v1.clone(), v2, v3];
    let fam = Basis::new(&h, o, 2, gens.clone()).ctx("family")?;
    match coordinates(&v1, &fam).ctx("coordinates")? {
        Coordinates::NonUnique { particular, witness } => {
            ensure(witness.iter().any(|w| !w.is_zero()), || "zero witness".into())?;
            ensure(combine(o, &witness, &gens, &h).iter().all(AlgElem::is_zero), || {
                "witness does not annihilate".into()
            })?;
            ensure(combine(o, &particular, &gens, &h).as_slice() == v1.comps(), || {
                "particular solution is wrong".into()
            })?;
        }
        other => return Err(format!("dependent family gave {other:?}")),
    }
    Ok(format!(
        "{count} tuples over verified bases of A^2 and A^3 in 4 orientations; (v1, v2, v1+v2) non-unique"
    ))
}

fn basis_extension() -> Check {
    let h = alg("quaternion");
    let mut count = 0;
    for (oi, o) in Orientation::ALL.into_iter().enumerate() {
        for n in 1..=3 {
            for t in 0..EXTENSION_BASES {
                let mut rng = Prng::for_trial(SEED, (oi * 100 + n * 10 + t) as u64);
                let basis = random_verified_basis(&h, o, n, &mut rng)?;
                let ext = extend_basis(&basis);
                let flat: Vec<Vec<Rational>> = ext.vectors.iter().map(OrientedVector::flatten).collect();
                let oracle = rank_oracle(flat);
                ensure(ext.rank == 4 * n && oracle == 4 * n, || {
                    format!("{o} n={n}: rank {} (oracle {oracle}), wanted {}", ext.rank, 4 * n)
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} verified bases, rank = 4n for n = 1, 2, 3"))
}

/// Column homomorphisms store target x source entries, row ones source x target.
fn random_hom(h: &Algebra, o: Orientation, source: usize, target: usize, rng: &mut Prng) -> ModuleHom {
    let (r, c) = match o.shape {
        Shape::Column => (target, source),
        Shape::Row => (source, target),
    };
    ModuleHom::new(o, h, gen_matrix(h, r, c, rng)).expect("entries in algebra")
}

fn homs() -> Check {
    let h = alg("quaternion");
    let add = |u: &[AlgElem], v: &[AlgElem]| -> Vec<AlgElem> { u.iter().zip(v).map(|(a, b)| a + b).collect() };
    let report = run_suite("hom-laws", &h, HOM_TRIALS, SEED, None).ctx("hom-laws")?;
    suite_clean(&report, HOM_TRIALS)?;
    let mut named = Vec::new();
    for (oi, o) in Orientation::ALL.into_iter().enumerate() {
        let mut common: BTreeSet<StarForm> = StarForm::ALL.into_iter().collect();
        for t in 0..HOM_TRIALS {
            let mut rng = Prng::for_trial(SEED ^ 0x5eed, (oi * HOM_TRIALS + t) as u64);
            let (n, p, m) = (1 + rng.below(3), 1 + rng.below(3), 1 + rng.below(3));
            let g = random_hom(&h, o, n, p, &mut rng);
            let g2 = random_hom(&h, o, n, p, &mut rng);
            let f = random_hom(&h, o, p, m, &mut rng);
            let u = gen_elements(&h, n, &mut rng);
            let v = gen_elements(&h, n, &mut rng);
            let a = gen_element(&h, &mut rng);
            let gv = g.apply(&v).ctx("apply")?;
            ensure(
                g.apply(&add(&u, &v)).ctx("apply")? == add(&g.apply(&u).ctx("apply")?, &gv),
                || format!("{o} trial {t}: not additive"),
            )?;
            let av: Vec<AlgElem> = v.iter().map(|x| o.act(&a, x).expect("same algebra")).collect();
            let agv: Vec<AlgElem> = gv.iter().map(|x| o.act(&a, x).expect("same algebra")).collect();
            ensure(g.apply(&av).ctx("apply")? == agv, || {
                format!("{o} trial {t}: scalar law fails")
            })?;
            ensure(
                g.sum(&g2).ctx("sum")?.apply(&v).ctx("apply")? == add(&gv, &g2.apply(&v).ctx("apply")?),
                || format!("{o} trial {t}: sum does not apply as a sum"),
            )?;
            ensure(
                f.compose(&g).ctx("compose")?.apply(&v).ctx("apply")? == f.apply(&gv).ctx("apply")?,
                || format!("{o} trial {t}: composite differs from successive application"),
            )?;
            let here: BTreeSet<StarForm> = identify_star(&f, &g).ctx("identify")?.into_iter().collect();
            common = common.intersection(&here).copied().collect();
        }
        ensure(common.len() == 1, || {
            format!("{o}: forms consistent on all trials: {common:?}")
        })?;
        let form = *common.iter().next().expect("one form");
        let line = format!("{o}: composite matrix equals {form} on all {HOM_TRIALS} trials");
        ensure(report.observations.contains(&line), || {
            format!("report does not name `{line}`")
        })?;
        named.push(format!("{o} {form}"));
    }
    Ok(format!(
        "{HOM_TRIALS} trials per orientation; forms {}",
        named.join(", ")
    ))
}

fn tensor_apply_oracle(t: &Tensor, x: &Q) -> Q {
    t.terms().iter().fold(qzero(), |acc, term| {
        let axb = qmul(&qmul(&q(&term.a), x), &q(&term.b));
        qadd(&acc, &axb.map(|c| &c * &term.scale))
    })
}

fn tensors() -> Check {
    let h = alg("quaternion");
    for t in 0..TENSOR_PAIRS {
        let mut rng = Prng::for_trial(SEED, t as u64);
        let s = gen_tensor(&h, 3, &mut rng);
        let r = gen_tensor(&h, 3, &mut rng);
        let sr = s.compose(&r).ctx("compose")?;
        let lhs = sr.to_map().ctx("to_map")?;
        let rhs = s.to_map().ctx("to_map")?.mul(&r.to_map().ctx("to_map")?).ctx("mul")?;
        ensure(lhs == rhs, || format!("pair {t}: map of composite != product of maps"))?;
        let x = gen_element(&h, &mut rng);
        let qx = q(&x);
        ensure(
            q(&sr.apply(&x).ctx("apply")?) == tensor_apply_oracle(&s, &tensor_apply_oracle(&r, &qx)),
            || format!("pair {t}: composite action disagrees with the oracle"),
        )?;
    }
    let (one, i, j, k) = (
        h.basis_element(0),
        h.basis_element(1),
        h.basis_element(2),
        h.basis_element(3),
    );
    let ij = Tensor::simple(&i, &j).ctx("i⊗j")?;
    ensure(ij.apply(&k).ctx("apply")? == one, || "(i⊗j)∘k != 1".into())?;
    let o = alg("octonion");
    let (a, b) = (o.basis_element(1), o.basis_element(2));
    let ot = Tensor::simple(&a, &b).ctx("octonion tensor")?;
    let rejected = [ot.apply(&a).is_err(), ot.compose(&ot).is_err(), ot.to_map().is_err()];
    ensure(rejected.iter().all(|r| *r), || {
        format!("octonion rejections: {rejected:?}")
    })?;
    ensure(matches!(ot.apply(&a), Err(ncmod::Error::NonAssociative(_))), || {
        "wrong rejection error".into()
    })?;
    Ok(format!(
        "{TENSOR_PAIRS} pairs, (i⊗j)∘k = 1, octonion apply/compose/to_map rejected"
    ))
}

/// Golden map and partials in display notation: juxtaposition, `^n`, `1` for the empty word.
const GOLDEN_MAP: &str = "x^2y^3 + xz^2x";

const GOLDEN: [(&str, &str); 3] = [
    ("x", "(1 ⊗ xy^3) + (x ⊗ y^3) + (1 ⊗ z^2x) + (xz^2 ⊗ 1)"),
    ("y", "(x^2 ⊗ y^2) + (x^2y ⊗ y) + (x^2y^2 ⊗ 1)"),
    ("z", "(x ⊗ zx) + (xz ⊗ x)"),
];

/// Juxtaposed variables with optional `^n`; `1` is the empty word.
fn golden_word(s: &str, vars: &[String]) -> Word {
    let s = s.trim();
    if s == "1" {
        return Word::empty();
    }
    let chars: Vec<char> = s.chars().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let v = vars
            .iter()
            .position(|n| n.starts_with(chars[i]))
            .expect("known variable");
        i += 1;
        let mut e = 1;
        if chars.get(i) == Some(&'^') {
            let start = i + 1;
            i = start;
            while chars.get(i).is_some_and(char::is_ascii_digit) {
                i += 1;
            }
            e = chars[start..i].iter().collect::<String>().parse().expect("exponent");
        }
        letters.extend(std::iter::repeat_n(v, e));
    }
    Word(letters)
}

fn dual_oracle(p: &NCPoly, h: &Algebra, point: &[AlgElem], disp: &[AlgElem]) -> AlgElem {
    let one = h.one().expect("unital");
    p.terms().fold(h.zero(), |acc, (w, c)| {
        let (mut val, mut tan) = (one.clone(), h.zero());
        for &v in w.letters() {
            tan = &(&val * &disp[v]) + &(&tan * &point[v]);
            val = &val * &point[v];
        }
        &acc + &tan.scale(c)
    })
}

fn differentiation() -> Check {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let mut v = NCPoly::zero(&vars);
    for w in GOLDEN_MAP.split('+') {
        v.add_term(golden_word(w, &vars), Rational::one());
    }
    let parsed = parse_ncpoly("x^2*y^3 + x*z^2*x", &vars).ctx("parse")?;
    ensure(parsed == v, || format!("parser gives {parsed}, text gives {v}"))?;
    for (var, display) in GOLDEN {
        let mut expected: Vec<(Word, Word, Rational)> = display
            .split('+')
            .map(|term| {
                let inner = term.trim().trim_start_matches('(').trim_end_matches(')');
                let (l, r) = inner.split_once('⊗').expect("tensor term");
                (golden_word(l, &vars), golden_word(r, &vars), Rational::one())
            })
            .collect();
        let d = differentiate(&v, var).ctx("differentiate")?;
        let mut got: Vec<(Word, Word, Rational)> = d
            .terms()
            .iter()
            .map(|t| (t.prefix.clone(), t.suffix.clone(), t.scale.clone()))
            .collect();
        expected.sort();
        got.sort();
        ensure(got == expected, || format!("∂v/∂{var} = {d}, expected {display}"))?;
    }
    let h = alg("quaternion");
    for t in 0..DIFF_MAPS {
        let mut rng = Prng::for_trial(SEED, t as u64);
        let map = vec![gen_ncpoly(&vars, &mut rng), gen_ncpoly(&vars, &mut rng)];
        let point = gen_elements(&h, 3, &mut rng);
        let disp = gen_elements(&h, 3, &mut rng);
        let got = jacobian_apply(&map, &h, &point, &disp).ctx("jacobian")?;
        for (r, p) in map.iter().enumerate() {
            ensure(got[r] == dual_oracle(p, &h, &point, &disp), || {
                format!("map {t} component {r} ({p}): Jacobian disagrees with the dual tangent")
            })?;
        }
    }
    let suite = run_suite("diff", &h, DIFF_MAPS, SEED, None).ctx("diff suite")?;
    suite_clean(&suite, DIFF_MAPS)?;
    Ok(format!(
        "three partials term-for-term; {DIFF_MAPS} maps match the dual-number tangent"
    ))
}

fn shifts_commute(a: &Algebra, x: &AlgElem, y: &AlgElem) -> Result<bool, String> {
    let l = a.left_regular(x).ctx("L")?;
    let r = a.right_regular(y).ctx("R")?;
    Ok(l.mul(&r).ctx("LR")? == r.mul(&l).ctx("RL")?)
}

fn shifts() -> Check {
    let h = alg("quaternion");
    let basis = h.basis_elements();
    for x in &basis {
        for y in &basis {
            ensure(shifts_commute(&h, x, y)?, || format!("L({x}) R({y}) do not commute"))?;
            for z in &basis {
                let (qx, qy, qz) = (q(x), q(y), q(z));
                ensure(qmul(&qx, &qmul(&qz, &qy)) == qmul(&qmul(&qx, &qz), &qy), || {
                    "oracle shift fails".into()
                })?;
            }
        }
    }
    for t in 0..SHIFT_PAIRS {
        let mut rng = Prng::for_trial(SEED, t as u64);
        let (x, y) = (gen_element(&h, &mut rng), gen_element(&h, &mut rng));
        ensure(shifts_commute(&h, &x, &y)?, || {
            format!("random pair {t}: L({x}) R({y}) do not commute")
        })?;
    }
    let o = alg("octonion");
    let ob = o.basis_elements();
    let mut witness = None;
    'search: for x in &ob {
        for y in &ob {
            if !shifts_commute(&o, x, y)? {
                witness = Some((x.clone(), y.clone()));
                break 'search;
            }
        }
    }
    let (x, y) = witness.ok_or("no octonion witness")?;
    let z = ob
        .iter()
        .find(|z| &x * &(*z * &y) != &(&x * *z) * &y)
        .ok_or("witness matrices differ but no basis element separates them")?;
    Ok(format!(
        "16 basis pairs and {SHIFT_PAIRS} random pairs commute; octonion L({x}) R({y}) differ on {z}"
    ))
}

fn cli_run() -> Result<(bool, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ncmod"))
        .args([
            "verify",
            "--suite",
            "all",
            "--algebra",
            "quaternion",
            "--trials",
            CLI_TRIALS,
            "--seed",
            "42",
        ])
        .env_remove("NCMOD_SEED")
        .output()
        .ctx("spawn ncmod")?;
    Ok((out.status.code() == Some(0), out.stdout))
}

const REPORT_KEYS: [&str; 7] = [
    "suite",
    "algebra",
    "trials",
    "seed",
    "passed",
    "failures",
    "observations",
];

fn cli() -> Check {
    let (ok1, first) = cli_run()?;
    let (ok2, second) = cli_run()?;
    ensure(ok1 && ok2, || "nonzero exit".into())?;
    ensure(first == second, || "outputs differ between runs".into())?;
    let text = String::from_utf8(first).ctx("utf-8")?;
    let value: serde_json::Value = serde_json::from_str(&text).ctx("json")?;
    let reports = value.as_array().ok_or("top level is not an array")?;
    ensure(reports.len() == SUITES.len(), || format!("{} reports", reports.len()))?;
    for (r, name) in reports.iter().zip(SUITES) {
        let obj = r.as_object().ok_or("report is not an object")?;
        ensure(
            obj.len() == REPORT_KEYS.len() && REPORT_KEYS.iter().all(|k| obj.contains_key(*k)),
            || format!("{name}: keys {:?}", obj.keys().collect::<Vec<_>>()),
        )?;
        ensure(obj["suite"] == name && obj["algebra"] == "quaternion", || {
            format!("{name}: wrong labels")
        })?;
        ensure(obj["trials"] == 100 && obj["seed"] == 42, || {
            format!("{name}: wrong trials or seed")
        })?;
        let failures = obj["failures"].as_array().ok_or("failures is not an array")?;
        ensure(obj["passed"].as_bool() == Some(failures.is_empty()), || {
            format!("{name}: passed flag")
        })?;
        ensure(obj["passed"] == true, || format!("{name}: failed"))?;
        ensure(
            obj["observations"]
                .as_array()
                .is_some_and(|o| o.iter().all(|s| s.is_string())),
            || format!("{name}: observations"),
        )?;
        let typed: SuiteReport = serde_json::from_value(r.clone()).ctx("report")?;
        ensure(typed.suite == name, || "typed round trip".into())?;
    }
    let order: Vec<&str> = text
        .lines()
        .filter_map(|l| {
            l.strip_prefix("    \"")
                .and_then(|rest| rest.split_once('"'))
                .map(|(k, _)| k)
        })
        .collect();
    let expected: Vec<&str> = REPORT_KEYS
        .iter()
        .copied()
        .cycle()
        .take(REPORT_KEYS.len() * SUITES.len())
        .collect();
    ensure(order == expected, || {
        format!("key order {:?}", &order[..order.len().min(8)])
    })?;
    Ok(format!(
        "exit 0, {} reports, keys in field order, byte-identical rerun",
        reports.len()
    ))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("biring laws", biring),
        ("reducibility over the rationals", reducibility),
        ("duality rewrite", duality),
        ("classification table", classification),
        ("unital extension", unital_extension),
        ("module laws", module_laws),
        ("coordinates", coords),
        ("basis extension", basis_extension),
        ("homomorphisms", homs),
        ("tensor laws", tensors),
        ("differentiation", differentiation),
        ("shifts", shifts),
        ("cli determinism", cli),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} {:>2} {name} ({:.2?}): {detail}", n + 1, t.elapsed());
    }
    let total = start.elapsed();
    let within = total < TOTAL_BUDGET;
    println!(
        "{} total runtime {total:.2?} (budget {TOTAL_BUDGET:?}); {} of {} criteria passed",
        if within { "ok" } else { "over budget" },
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
