use std::collections::BTreeSet;

use super::gen::*;
use super::{Ctx, Log};
use crate::algebra::{AlgElem, Algebra};
use crate::amodule::{
    contract, coordinates, expand, extend_basis, Basis, Coordinates, Orientation, OrientedVector, Shape, Side,
};
use crate::biring::{GenMatrix, Rationals};
use crate::error::{Error, Result};
use crate::exact::{DMatrix, Rational};
use crate::hom::{identify_star, ModuleHom, StarForm};
use crate::tensorcalc::{differentiate, eval_dual, jacobian_apply, parse_ncpoly, NCPoly, Tensor, Word};
use crate::verify::prng::Prng;

fn fixed() -> Log {
    Log::new("fixed")
}

fn vars3() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

fn label_of(alg: &Algebra, e: &AlgElem) -> String {
    e.coords()
        .iter()
        .position(|c| !c.is_zero())
        .map(|i| alg.basis_labels()[i].clone())
        .unwrap_or_else(|| "0".into())
}

pub(crate) fn biring(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let n = ctx.dim.unwrap_or(3);
    let assoc = alg.is_associative();
    let identity = GenMatrix::identity(alg, n).ok();
    let mut out = fixed();
    match &identity {
        Some(e) => out.check("identity matrix is symmetric", &e.transpose() == e, || format!("n={n}")),
        None => out.observe(format!("{} has no unit: identity laws skipped", alg.name())),
    }
    if !assoc {
        out.observe(format!(
            "{} is not associative: associativity of rc and cr skipped",
            alg.name()
        ));
    }
    let mut logs: Vec<Log> = ctx
        .run(|rng, log| {
            let a = gen_matrix(alg, n, n, rng);
            let b1 = gen_matrix(alg, n, n, rng);
            let b2 = gen_matrix(alg, n, n, rng);
            let inputs = || format!("a={a:?}, b1={b1:?}, b2={b2:?}");
            let sum = |x: &GenMatrix<AlgElem>, y: &GenMatrix<AlgElem>| x.sum(y, alg);
            log.check("transpose is an involution", a.transpose().transpose() == a, inputs);
            let b = sum(&b1, &b2).expect("same shape");
            log.check_eq(
                "rc distributes over a sum in the second factor",
                a.rc(&b, alg),
                a.rc(&b1, alg).and_then(|x| sum(&x, &a.rc(&b2, alg)?)),
                inputs,
            );
            log.check_eq(
                "rc distributes over a sum in the first factor",
                b.rc(&a, alg),
                b1.rc(&a, alg).and_then(|x| sum(&x, &b2.rc(&a, alg)?)),
                inputs,
            );
            log.check_eq(
                "cr distributes over a sum in the second factor",
                a.cr(&b, alg),
                a.cr(&b1, alg).and_then(|x| sum(&x, &a.cr(&b2, alg)?)),
                inputs,
            );
            log.check_eq(
                "cr distributes over a sum in the first factor",
                b.cr(&a, alg),
                b1.cr(&a, alg).and_then(|x| sum(&x, &b2.cr(&a, alg)?)),
                inputs,
            );
            log.check_eq(
                "transpose of rc is cr of transposes",
                a.rc(&b1, alg).map(|m| m.transpose()),
                a.transpose().cr(&b1.transpose(), alg),
                inputs,
            );
            log.check_eq(
                "transpose of cr is rc of transposes",
                a.cr(&b1, alg).map(|m| m.transpose()),
                a.transpose().rc(&b1.transpose(), alg),
                inputs,
            );
            if assoc {
                log.check_eq(
                    "rc is associative",
                    a.rc(&b1, alg).and_then(|x| x.rc(&b2, alg)),
                    b1.rc(&b2, alg).and_then(|x| a.rc(&x, alg)),
                    inputs,
                );
                log.check_eq(
                    "cr is associative",
                    a.cr(&b1, alg).and_then(|x| x.cr(&b2, alg)),
                    b1.cr(&b2, alg).and_then(|x| a.cr(&x, alg)),
                    inputs,
                );
            }
            if let Some(e) = &identity {
                for (law, l, r) in [
                    ("identity is neutral for rc", e.rc(&a, alg), a.rc(e, alg)),
                    ("identity is neutral for cr", e.cr(&a, alg), a.cr(e, alg)),
                ] {
                    log.check_eq(law, l, Ok(a.clone()), inputs);
                    log.check_eq(law, r, Ok(a.clone()), inputs);
                }
            }
        })
        .into_iter()
        .map(|(l, ())| l)
        .collect();
    logs.push(out);
    logs
}

pub(crate) fn duality(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let n = ctx.dim.unwrap_or(2);
    ctx.run(|rng, log| {
        let e = gen_expr(alg, n, 5, rng);
        let inputs = || format!("expr={e:?}");
        let value = e.eval(alg);
        log.check_eq(
            "dual expression evaluates to the transpose",
            e.dualize().eval(alg),
            value.clone().map(|m| m.transpose()),
            inputs,
        );
        log.check_eq(
            "dualizing twice preserves the value",
            e.dualize().dualize().eval(alg),
            value,
            inputs,
        );
    })
    .into_iter()
    .map(|(l, ())| l)
    .collect()
}

pub(crate) fn reducibility(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let commutative = alg.is_commutative();
    let mut logs: Vec<Log> = ctx
        .run(|rng, log| {
            let (r, m, c) = match ctx.dim {
                Some(n) => (n, n, n),
                None => (1 + rng.below(3), 1 + rng.below(3), 1 + rng.below(3)),
            };
            let a = gen_qmatrix(r, m, rng);
            let b = gen_qmatrix(m, c, rng);
            log.check_eq(
                "over the rationals rc(a,b) = cr(b,a)",
                a.rc(&b, &Rationals),
                b.cr(&a, &Rationals),
                || format!("a={a:?}, b={b:?}"),
            );
            if commutative {
                let n = ctx.dim.unwrap_or(2);
                let a = gen_matrix(alg, n, n, rng);
                let b = gen_matrix(alg, n, n, rng);
                log.check_eq(
                    "over a commutative algebra rc(a,b) = cr(b,a)",
                    a.rc(&b, alg),
                    b.cr(&a, alg),
                    || format!("a={a:?}, b={b:?}"),
                );
            }
        })
        .into_iter()
        .map(|(l, ())| l)
        .collect();
    let mut out = fixed();
    if !commutative {
        let mut witness = None;
        'search: for x in alg.basis_elements() {
            for y in alg.basis_elements() {
                let a = GenMatrix::from_rows(vec![vec![x.clone()]]).expect("1x1");
                let b = GenMatrix::from_rows(vec![vec![y.clone()]]).expect("1x1");
                if a.rc(&b, alg).ok() != b.cr(&a, alg).ok() {
                    witness = Some((label_of(alg, &x), label_of(alg, &y)));
                    break 'search;
                }
            }
        }
        out.check(
            "a noncommutative algebra breaks rc(a,b) = cr(b,a)",
            witness.is_some(),
            || alg.name().to_string(),
        );
        if let Some((x, y)) = witness {
            out.observe(format!(
                "over {}: rc(a,b) != cr(b,a) for a = [{x}], b = [{y}]",
                alg.name()
            ));
        }
    }
    logs.push(out);
    logs
}

pub(crate) fn module_laws(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let n = ctx.dim.unwrap_or(2);
    let assoc = alg.is_associative();
    let one = alg.one();
    let mut logs: Vec<Log> = ctx
        .run(|rng, log| {
            let p = gen_element(alg, rng);
            let q = gen_element(alg, rng);
            let m = gen_rational(rng);
            let k = gen_rational(rng);
            for o in Orientation::ALL {
                let v = gen_vector(alg, o, n, rng);
                let w = gen_vector(alg, o, n, rng);
                let inputs = || format!("{o}, p={p}, q={q}, m={m}, k={k}, v={v:?}, w={w:?}");
                let law = |s: &str| format!("{o}: {s}");
                log.check_eq(&law("addition is commutative"), v.add(&w), w.add(&v), inputs);
                log.check_eq(
                    &law("rational scalars associate"),
                    Ok(v.scale(&(&m * &k))),
                    Ok(v.scale(&k).scale(&m)),
                    inputs,
                );
                log.check_eq(
                    &law("action distributes over vector sums"),
                    v.add(&w).and_then(|s| s.act(&p)),
                    v.act(&p).and_then(|x| x.add(&w.act(&p)?)),
                    inputs,
                );
                log.check_eq(
                    &law("action distributes over scalar sums"),
                    v.act(&(&p + &q)),
                    v.act(&p).and_then(|x| x.add(&v.act(&q)?)),
                    inputs,
                );
                log.check_eq(
                    &law("rational scalars commute with the action"),
                    v.scale(&m).act(&p),
                    v.act(&p).map(|x| x.scale(&m)),
                    inputs,
                );
                if let Some(one) = &one {
                    log.check_eq(&law("unit acts trivially"), v.act(one), Ok(v.clone()), inputs);
                }
                if assoc {
                    // (pq)v = p(qv) on the left, v(pq) = (vp)q on the right
                    let nested = match o.side {
                        Side::Left => v.act(&q).and_then(|x| x.act(&p)),
                        Side::Right => v.act(&p).and_then(|x| x.act(&q)),
                    };
                    log.check_eq(&law("action is associative"), v.act(&(&p * &q)), nested, inputs);
                }
            }
        })
        .into_iter()
        .map(|(l, ())| l)
        .collect();

    let mut out = fixed();
    if one.is_none() {
        out.observe(format!("{} has no unit: unitarity skipped", alg.name()));
    }
    let basis = alg.basis_elements();
    let mut contraction = None;
    for a in &basis {
        for x in &basis {
            let left = OrientedVector::new(alg, Orientation::LEFT_COLUMN, vec![x.clone()]).expect("same algebra");
            let right = OrientedVector::new(alg, Orientation::RIGHT_COLUMN, vec![x.clone()]).expect("same algebra");
            let l = contract(std::slice::from_ref(a), &[left]).expect("one vector");
            let r = contract(std::slice::from_ref(a), &[right]).expect("one vector");
            if l.comps() != r.comps() && contraction.is_none() {
                contraction = Some((a.clone(), x.clone(), l.comps()[0].clone(), r.comps()[0].clone()));
            }
        }
    }
    if alg.is_commutative() {
        out.check(
            "left and right contraction agree over a commutative algebra",
            contraction.is_none(),
            || alg.name().to_string(),
        );
    } else {
        out.check(
            "left and right contraction differ for some basis pair",
            contraction.is_some(),
            || alg.name().to_string(),
        );
        if let Some((a, x, l, r)) = contraction {
            out.observe(format!(
                "contracting coefficient {a} against ({x}): left-column gives {l}, right-column gives {r}"
            ));
        }
    }
    if !assoc {
        let mut triple = None;
        'search: for p in &basis {
            for q in &basis {
                for x in &basis {
                    if !alg.associator(p, q, x).expect("same algebra").is_zero() {
                        triple = Some((p.clone(), q.clone(), x.clone()));
                        break 'search;
                    }
                }
            }
        }
        out.check(
            "the action fails associativity for some basis triple",
            triple.is_some(),
            || alg.name().to_string(),
        );
        if let Some((p, q, x)) = triple {
            out.observe(format!(
                "action is not associative: ({p}*{q})*({x}) = {} but {p}*({q}*({x})) = {}",
                &(&p * &q) * &x,
                &p * &(&q * &x)
            ));
        }
    }
    logs.push(out);
    logs
}

/// First verified basis among up to `attempts` random families.
fn gen_verified_basis(alg: &Algebra, o: Orientation, n: usize, rng: &mut Prng, attempts: usize) -> Option<Basis> {
    (0..attempts).find_map(|_| {
        let vectors = (0..n).map(|_| gen_vector(alg, o, n, rng)).collect();
        Basis::new(alg, o, n, vectors).ok().filter(Basis::is_verified)
    })
}

const BASIS_ATTEMPTS: usize = 20;

pub(crate) fn coords(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let dims: Vec<usize> = ctx.dim.map(|n| vec![n]).unwrap_or_else(|| vec![2, 3]);
    let results = ctx.run(|rng, log| {
        let mut misses = 0;
        for &n in &dims {
            for o in Orientation::ALL {
                let Some(basis) = gen_verified_basis(alg, o, n, rng, BASIS_ATTEMPTS) else {
                    misses += 1;
                    continue;
                };
                let c = gen_elements(alg, n, rng);
                log.check_eq(
                    &format!("{o}: coordinates of an expansion recover the coefficients"),
                    expand(&basis, &c).and_then(|v| coordinates(&v, &basis)),
                    Ok(Coordinates::Unique(c.clone())),
                    || format!("n={n}, basis={:?}, c={c:?}", basis.vectors()),
                );
            }
        }
        misses
    });
    let misses: usize = results.iter().map(|(_, m)| m).sum();
    let mut logs: Vec<Log> = results.into_iter().map(|(l, _)| l).collect();

    let mut out = fixed();
    if misses > 0 {
        out.observe(format!("no verified basis found in {misses} sampled cases"));
    }
    let mut rng = Prng::for_trial(ctx.seed, ctx.trials as u64);
    let o = Orientation::LEFT_COLUMN;
    let v1 = gen_vector(alg, o, 2, &mut rng);
    let v2 = gen_vector(alg, o, 2, &mut rng);
    let v3 = v1.add(&v2).expect("same kind");
    let gens = vec![v1, v2, v3];
    let family = Basis::new(alg, o, 2, gens.clone()).expect("consistent family");
    let c = gen_elements(alg, 3, &mut rng);
    let target = expand(&family, &c).expect("three coefficients");
    let law = "a dependent generating set has non-unique coordinates";
    let inputs = || format!("gens={gens:?}, target={target:?}");
    match coordinates(&target, &family) {
        Ok(Coordinates::NonUnique { particular, witness }) => {
            out.check(law, witness.iter().any(|w| !w.is_zero()), inputs);
            out.check_ok(
                "the witness combines to the zero vector",
                contract(&witness, &gens).map(|v| v.is_zero()),
                inputs,
            );
            out.check_eq(
                "the particular solution reproduces the target",
                contract(&particular, &gens),
                Ok(target.clone()),
                inputs,
            );
            let shown: Vec<String> = witness.iter().map(|w| w.to_string()).collect();
            out.observe(format!(
                "annihilating witness for (v1, v2, v1+v2): ({})",
                shown.join(", ")
            ));
        }
        other => out.fail(law, inputs(), format!("got {other:?}")),
    }
    logs.push(out);
    logs
}

pub(crate) fn extension(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let d = alg.dim();
    let results = ctx.run(|rng, log| {
        let n = ctx.dim.unwrap_or_else(|| 1 + rng.below(3));
        let o = *rng.pick(&Orientation::ALL);
        let Some(basis) = gen_verified_basis(alg, o, n, rng, BASIS_ATTEMPTS) else {
            return 1;
        };
        let inputs = || format!("{o}, n={n}, basis={:?}", basis.vectors());
        let ext = extend_basis(&basis);
        log.check_eq(
            "a verified basis extends to n*dim A independent rational vectors",
            Ok(ext.rank),
            Ok(n * d),
            inputs,
        );
        let target = gen_vector(alg, o, n, rng);
        log.check_ok(
            "targets have unique coordinates in a verified basis",
            coordinates(&target, &basis).map(|c| matches!(c, Coordinates::Unique(_))),
            inputs,
        );
        let mut repeated = basis.vectors().to_vec();
        repeated.push(basis.vectors()[0].clone());
        let family = Basis::new(alg, o, n, repeated).expect("consistent family");
        log.check(
            "a repeated vector leaves the extension dependent",
            !family.is_verified() && extend_basis(&family).rank == n * d,
            inputs,
        );
        0
    });
    let misses: usize = results.iter().map(|(_, m)| m).sum();
    let mut logs: Vec<Log> = results.into_iter().map(|(l, _)| l).collect();
    if misses > 0 {
        let mut out = fixed();
        out.observe(format!("no verified basis found in {misses} trials"));
        logs.push(out);
    }
    logs
}

fn hom_matrix(alg: &Algebra, o: Orientation, source: usize, target: usize, rng: &mut Prng) -> GenMatrix<AlgElem> {
    match o.shape {
        Shape::Column => gen_matrix(alg, target, source, rng),
        Shape::Row => gen_matrix(alg, source, target, rng),
    }
}

fn act_all(o: Orientation, a: &AlgElem, v: &[AlgElem]) -> Vec<AlgElem> {
    v.iter().map(|x| o.act(a, x).expect("same algebra")).collect()
}

fn add_all(u: &[AlgElem], v: &[AlgElem]) -> Vec<AlgElem> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub(crate) fn hom_laws(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let assoc = alg.is_associative();
    let results = ctx.run(|rng, log| {
        let mut forms = Vec::new();
        for o in Orientation::ALL {
            let (n, p, m) = match ctx.dim {
                Some(k) => (k, k, k),
                None => (2 + rng.below(2), 2 + rng.below(2), 2 + rng.below(2)),
            };
            let g = ModuleHom::new(o, alg, hom_matrix(alg, o, n, p, rng)).expect("entries in algebra");
            let g2 = ModuleHom::new(o, alg, hom_matrix(alg, o, n, p, rng)).expect("entries in algebra");
            let h = ModuleHom::new(o, alg, hom_matrix(alg, o, p, m, rng)).expect("entries in algebra");
            let u = gen_elements(alg, n, rng);
            let v = gen_elements(alg, n, rng);
            let a = gen_element(alg, rng);
            let inputs = || format!("{o}, g={g:?}, g2={g2:?}, h={h:?}, u={u:?}, v={v:?}, a={a}");
            let law = |s: &str| format!("{o}: {s}");
            log.check_eq(
                &law("homomorphism is additive"),
                g.apply(&add_all(&u, &v)),
                g.apply(&u).and_then(|x| Ok(add_all(&x, &g.apply(&v)?))),
                inputs,
            );
            log.check_eq(
                &law("sum of homomorphisms applies as the sum of images"),
                g.sum(&g2).and_then(|s| s.apply(&v)),
                g.apply(&v).and_then(|x| Ok(add_all(&x, &g2.apply(&v)?))),
                inputs,
            );
            if assoc {
                log.check_eq(
                    &law("homomorphism commutes with the scalar action"),
                    g.apply(&act_all(o, &a, &v)),
                    g.apply(&v).map(|x| act_all(o, &a, &x)),
                    inputs,
                );
                log.check_eq(
                    &law("composite applies as successive application"),
                    h.compose(&g).and_then(|f| f.apply(&v)),
                    g.apply(&v).and_then(|x| h.apply(&x)),
                    inputs,
                );
                forms.push(identify_star(&h, &g).unwrap_or_default());
            }
        }
        forms
    });
    let mut out = fixed();
    if assoc {
        let noncommutative = !alg.is_commutative();
        for (idx, o) in Orientation::ALL.into_iter().enumerate() {
            let mut common: BTreeSet<StarForm> = StarForm::ALL.into_iter().collect();
            for (_, forms) in &results {
                let here: BTreeSet<StarForm> = forms[idx].iter().copied().collect();
                common = common.intersection(&here).copied().collect();
            }
            let ok = !common.is_empty() && (!noncommutative || common.len() == 1);
            out.check(&format!("{o}: one product form reproduces every composite"), ok, || {
                format!("forms matching on all trials: {common:?}")
            });
            let names: Vec<String> = common.iter().map(|f| f.to_string()).collect();
            out.observe(format!(
                "{o}: composite matrix equals {} on all {} trials",
                if names.is_empty() {
                    "none of rc(g,h), cr(g,h), rc(h,g), cr(h,g)".into()
                } else {
                    names.join(" = ")
                },
                ctx.trials
            ));
        }
    } else {
        out.observe(format!(
            "{} is not associative: scalar, composition and product-form laws skipped",
            alg.name()
        ));
    }
    let mut logs: Vec<Log> = results.into_iter().map(|(l, _)| l).collect();
    if alg.name() == "quaternion" {
        logs.extend(cross_algebra(ctx));
    }
    logs.push(out);
    logs
}

/// Homomorphisms of a complex module into a quaternion module along the
/// embedding `a + b i ↦ a + b i`.
fn cross_algebra(ctx: &Ctx) -> Vec<Log> {
    let h = ctx.alg.clone();
    let c = crate::algebra::load_builtin("complex").expect("builtin");
    let embed = DMatrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
    let offset = ctx.trials as u64 + 1;
    let mut logs = Vec::with_capacity(ctx.trials);
    for t in 0..ctx.trials {
        let mut rng = Prng::for_trial(ctx.seed, offset + t as u64);
        let mut log = Log::new(format!("cross-algebra trial {t}"));
        for o in Orientation::ALL {
            let (n, m) = (1 + rng.below(3), 1 + rng.below(3));
            let f = ModuleHom::with_alg_hom(o, &c, &h, hom_matrix(&h, o, n, m, &mut rng), Some(embed.clone()))
                .expect("valid embedding");
            let a = gen_element(&c, &mut rng);
            let v = gen_elements(&c, n, &mut rng);
            let ga = Algebra::map_element(&embed, &a, &h).expect("shapes agree");
            log.check_eq(
                &format!("{o}: homomorphism along the complex embedding twists scalars"),
                f.apply(&act_all(o, &a, &v)),
                f.apply(&v).map(|x| act_all(o, &ga, &x)),
                || format!("{o}, f={f:?}, a={a}, v={v:?}"),
            );
        }
        logs.push(log);
    }
    logs
}

pub(crate) fn tensor_laws(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let mut out = fixed();
    if !alg.is_associative() {
        let e = alg.basis_element(0);
        let t = Tensor::simple(&e, &e).expect("same algebra");
        let rejected = |r: Result<()>| matches!(r, Err(Error::NonAssociative(_)));
        let all_rejected = rejected(t.apply(&e).map(|_| ()))
            && rejected(t.compose(&t).map(|_| ()))
            && rejected(t.to_map().map(|_| ()));
        out.check(
            "tensor operations are rejected on a nonassociative algebra",
            all_rejected,
            || alg.name().to_string(),
        );
        out.observe(format!("tensor apply, compose and to_map rejected on {}", alg.name()));
        return vec![out];
    }
    let identity = Tensor::identity(alg).ok();
    let mut logs: Vec<Log> = ctx
        .run(|rng, log| {
            let s = gen_tensor(alg, 3, rng);
            let t = gen_tensor(alg, 3, rng);
            let u = gen_tensor(alg, 2, rng);
            let c1 = gen_element(alg, rng);
            let c2 = gen_element(alg, rng);
            let q = gen_rational(rng);
            let inputs = || format!("s={s}, t={t}, u={u}, c1={c1}, c2={c2}, q={q}");
            log.check_eq(
                "map of a composite is the product of the maps",
                s.compose(&t).and_then(|st| st.to_map()),
                s.to_map().and_then(|a| a.mul(&t.to_map()?)),
                inputs,
            );
            log.check_ok(
                "composition is associative",
                s.compose(&t)
                    .and_then(|st| st.compose(&u))
                    .and_then(|l| l.equivalent(&s.compose(&t.compose(&u)?)?)),
                inputs,
            );
            log.check_eq(
                "composite acts as the composed maps",
                s.compose(&t).and_then(|st| st.apply(&c1)),
                t.apply(&c1).and_then(|x| s.apply(&x)),
                inputs,
            );
            log.check_eq(
                "action is additive in the argument",
                s.apply(&(&c1 + &c2)),
                s.apply(&c1).and_then(|x| Ok(&x + &s.apply(&c2)?)),
                inputs,
            );
            log.check_eq(
                "action is additive in the tensor",
                s.add(&t).and_then(|st| st.apply(&c1)),
                s.apply(&c1).and_then(|x| Ok(&x + &t.apply(&c1)?)),
                inputs,
            );
            log.check_eq(
                "action is homogeneous in the argument",
                s.apply(&c1.scale(&q)),
                s.apply(&c1).map(|x| x.scale(&q)),
                inputs,
            );
            log.check_eq(
                "action is homogeneous in the tensor",
                s.scale(&q).apply(&c1),
                s.apply(&c1).map(|x| x.scale(&q)),
                inputs,
            );
            if let Some(id) = &identity {
                log.check_ok(
                    "1⊗1 is a left identity",
                    id.compose(&t).and_then(|x| x.equivalent(&t)),
                    inputs,
                );
                log.check_ok(
                    "1⊗1 is a right identity",
                    t.compose(id).and_then(|x| x.equivalent(&t)),
                    inputs,
                );
            }
        })
        .into_iter()
        .map(|(l, ())| l)
        .collect();
    if identity.is_none() {
        out.observe(format!("{} has no unit: identity tensor laws skipped", alg.name()));
    }
    if alg.name() == "quaternion" {
        let [one, i, j, k] = [0, 1, 2, 3].map(|t| alg.basis_element(t));
        out.check_eq(
            "(i⊗j)∘k = 1",
            Tensor::simple(&i, &j).and_then(|t| t.apply(&k)),
            Ok(one),
            || "quaternion".into(),
        );
    }
    logs.push(out);
    logs
}

fn shifts_commute(alg: &Algebra, a: &AlgElem, b: &AlgElem) -> Result<bool> {
    let l = alg.left_regular(a)?;
    let r = alg.right_regular(b)?;
    Ok(l.mul(&r)? == r.mul(&l)?)
}

pub(crate) fn shifts(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let assoc = alg.is_associative();
    let mut out = fixed();
    let basis = alg.basis_elements();
    let mut witness = None;
    for a in &basis {
        for b in &basis {
            let ok = shifts_commute(alg, a, b);
            if assoc {
                out.check_ok("left and right shifts by basis elements commute", ok, || {
                    format!("a={a}, b={b}")
                });
            } else if witness.is_none() && matches!(ok, Ok(false)) {
                witness = Some((a.clone(), b.clone()));
            }
        }
    }
    if !assoc {
        out.check("some basis pair has non-commuting shifts", witness.is_some(), || {
            alg.name().to_string()
        });
        if let Some((a, b)) = witness {
            let c = basis.iter().find(|c| &a * &(*c * &b) != &(&a * *c) * &b).cloned();
            match c {
                Some(c) => out.observe(format!(
                    "L({a}) and R({b}) do not commute: {a}*({c}*{b}) = {} but ({a}*{c})*{b} = {}",
                    &a * &(&c * &b),
                    &(&a * &c) * &b
                )),
                None => out.observe(format!("L({a}) and R({b}) do not commute")),
            }
        }
    }
    let mut logs: Vec<Log> = ctx
        .run(|rng, log| {
            if assoc {
                let a = gen_element(alg, rng);
                let b = gen_element(alg, rng);
                log.check_ok("left and right shifts commute", shifts_commute(alg, &a, &b), || {
                    format!("a={a}, b={b}")
                });
            }
        })
        .into_iter()
        .map(|(l, ())| l)
        .collect();
    logs.push(out);
    logs
}

/// Golden partial derivatives of `x^2*y^3 + x*z^2*x` written as factor words.
const CUBIC: &str = "x^2*y^3 + x*z^2*x";
const CUBIC_PARTIALS: [(&str, &[(&str, &str)]); 3] = [
    ("x", &[("", "xyyy"), ("x", "yyy"), ("", "zzx"), ("xzz", "")]),
    ("y", &[("xx", "yy"), ("xxy", "y"), ("xxyy", "")]),
    ("z", &[("x", "zx"), ("xz", "x")]),
];

fn word(s: &str) -> Word {
    Word(s.bytes().map(|b| (b - b'x') as usize).collect())
}

pub(crate) fn diff(ctx: &Ctx) -> Vec<Log> {
    let alg = ctx.alg;
    let vars = vars3();
    let mut out = fixed();
    let p = parse_ncpoly(CUBIC, &vars).expect("literal parses");
    for (var, expected) in CUBIC_PARTIALS {
        let mut want = std::collections::BTreeMap::new();
        for (pre, suf) in expected {
            want.insert((word(pre), word(suf)), Rational::one());
        }
        out.check_eq(
            &format!("partial derivative of the cubic map in {var}"),
            differentiate(&p, var).map(|d| d.normalized()),
            Ok(want),
            || CUBIC.into(),
        );
    }
    if !alg.is_associative() || !alg.has_unit() {
        let x = vec![NCPoly::var(&vars[..1], "x").expect("x is a variable")];
        let r = jacobian_apply(&x, alg, &[alg.zero()], &[alg.zero()]);
        let expected = if alg.is_associative() {
            matches!(r, Err(Error::NonUnital(_)))
        } else {
            matches!(r, Err(Error::NonAssociative(_)))
        };
        out.check(
            "jacobians are rejected without associativity and a unit",
            expected,
            || alg.name().to_string(),
        );
        out.observe(format!("jacobian evaluation rejected on {}", alg.name()));
        return vec![out];
    }
    let mut logs: Vec<Log> = ctx
        .run(|rng, log| {
            let comps = 1 + rng.below(3);
            let map: Vec<NCPoly> = (0..comps).map(|_| gen_ncpoly(&vars, rng)).collect();
            let point = gen_elements(alg, 3, rng);
            let disp = gen_elements(alg, 3, rng);
            let inputs = || format!("map={map:?}, point={point:?}, displacement={disp:?}");
            log.check_eq(
                "jacobian is the first-order part of the dual evaluation",
                jacobian_apply(&map, alg, &point, &disp),
                map.iter()
                    .map(|p| eval_dual(p, alg, &point, &disp).map(|d| d.tangent))
                    .collect::<Result<Vec<_>>>(),
                inputs,
            );
            let (p, q) = (&map[0], gen_ncpoly(&vars, rng));
            let var = rng.below(3);
            let h = &disp[var];
            let partial = |f: &NCPoly| differentiate(f, &vars[var]).and_then(|d| d.eval(alg, &point)?.apply(h));
            let inputs = || format!("p={p:?}, q={q:?}, var={}, point={point:?}, h={h}", vars[var]);
            let leibniz = (|| -> Result<AlgElem> {
                Ok(&(&partial(p)? * &q.eval(alg, &point)?) + &(&p.eval(alg, &point)? * &partial(&q)?))
            })();
            log.check_eq("Leibniz rule for a product", partial(&p.mul(&q)), leibniz, inputs);
            let mut along = vec![alg.zero(); 3];
            along[var] = h.clone();
            log.check_eq(
                "partial derivative matches the dual evaluation along one variable",
                partial(&p.mul(&q)),
                eval_dual(&p.mul(&q), alg, &point, &along).map(|d| d.tangent),
                inputs,
            );
        })
        .into_iter()
        .map(|(l, ())| l)
        .collect();
    logs.push(out);
    logs
}
