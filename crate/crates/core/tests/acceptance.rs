//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p hopfcontra --test acceptance`.

use std::path::Path;
use std::time::{Duration, Instant};

use hopfcontra::ayd::{
    build_trivial_coefficient, check_ayd_compatibility, check_ayd_module, check_stability, dualize_ayd_module,
    AydCoefficient, AydFlavour, AydModuleData,
};
use hopfcontra::cyclic::{
    build_cocyclic_complex, build_cyclic_complex, equivariant_hom_basis, hom_bimodule_actions, homology_dims,
    tensor_over_h, tensor_power_module, verify_bimodule_laws, verify_cyclic_relations, BuildOptions, ComplexKind,
    CyclicComplexData, HomologyMode, ModuleAlgebraData, ModuleCoalgebraData, DEFAULT_DIM_CAP,
};
use hopfcontra::homconn::{build_dga, curvature_and_flatness, hom_connection_from_contramodule, hom_connection_unchecked};
use hopfcontra::hopf::{build_named_example, check_hopf_axioms, HopfData, NAMED_EXAMPLES};
use hopfcontra::reps::{ModuleRep, Side};
use hopfcontra::session::load_session;
use hopfcontra::tasks::{run, Command, RunOptions};
use hopfcontra::{Error, FieldSpec, Matrix, Report, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T>(r: hopfcontra::Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn failures(r: &Report) -> String {
    r.failures().map(|v| v.name.clone()).collect::<Vec<_>>().join(", ")
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:?}, limit {limit:?}"))
}

fn named(name: &str) -> HopfData {
    build_named_example(name, Q).unwrap()
}

fn counit(h: &HopfData) -> Vec<Scalar> {
    (0..h.dim()).map(|i| h.counit_of(i).clone()).collect()
}

/// Adds a random nonzero constant to one random entry of one structure table.
fn mutate(h: &HopfData, rng: &mut ChaCha8Rng) -> (HopfData, String) {
    let mut m = h.clone();
    let table = rng.gen_range(0..6);
    let target: (&str, &mut Matrix) = match table {
        0 => ("mul", &mut m.algebra.mul),
        1 => ("unit", &mut m.algebra.unit),
        2 => ("comul", &mut m.coalgebra.comul),
        3 => ("counit", &mut m.coalgebra.counit),
        4 => ("antipode", &mut m.antipode),
        _ => ("antipode_inv", &mut m.antipode_inv),
    };
    let (name, mat) = target;
    let r = rng.gen_range(0..mat.rows());
    let c = rng.gen_range(0..mat.cols());
    let delta = [1, -1, 2, 3][rng.gen_range(0..4)];
    mat.add_at(r, c, &Q.from_i64(delta));
    (m, format!("{name}[{r},{c}] += {delta}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for name in NAMED_EXAMPLES {
        for field in [Q, FieldSpec::prime(7).unwrap()] {
            let h = ok(build_named_example(name, field), name)?;
            let r = ok(check_hopf_axioms(&h), name)?;
            ensure(r.all_pass(), format!("{name} over {field}: {}", failures(&r)))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut caught = 0;
    for name in ["group_C2", "sweedler_H4"] {
        let h = named(name);
        for _ in 0..25 {
            let (m, desc) = mutate(&h, &mut rng);
            let r = ok(check_hopf_axioms(&m), &desc)?;
            let first = r.failures().next().ok_or(format!("{name}: mutation {desc} passed every axiom"))?;
            ensure(first.witness.is_some(), format!("{name}: {desc} failed {} without a witness", first.name))?;
            caught += 1;
        }
    }
    within(start, Duration::from_secs(1), "axiom suite")?;
    Ok(format!("{checked} algebras clean, {caught}/50 mutations caught, {:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let h = named("sweedler_H4");
    let s = &h.antipode;
    let id = Matrix::identity(Q, 4);
    ensure(!s.pow(2).is_identity(), "S^2 = id")?;
    ensure(s.pow(4).is_identity(), "S^4 != id")?;
    ensure(s.mul(&h.antipode_inv) == id && h.antipode_inv.mul(s) == id, "S^-1 is not inverse to S")?;
    // basis 1, g, x, gx
    ensure(h.apply_antipode_inv(2) == h.basis(3), "S^-1(x) != gx")?;
    Ok("S^2 != id, S^4 = id, S^-1(x) = gx".into())
}

fn h4_dual_sayd(h: &HopfData) -> std::result::Result<AydCoefficient, String> {
    let n = ok(AydModuleData::one_dimensional(h, AydFlavour::RIGHT_LEFT, &counit(h), &h.basis(1)), "module")?;
    let r = ok(check_ayd_module(&n, h), "sayd check")?;
    ensure(r.all_pass(), format!("module is not SAYD: {}", failures(&r)))?;
    ok(ok(dualize_ayd_module(&n, h), "dual")?.evaluated(h), "evaluate")
}

fn cyclic_builds() -> std::result::Result<Vec<(String, CyclicComplexData)>, String> {
    let c2 = named("group_C2");
    let h4 = named("sweedler_H4");
    let trivial = ok(build_trivial_coefficient(&c2, AydFlavour::LEFT_RIGHT), "trivial")?;
    let dual = h4_dual_sayd(&h4)?;
    let opts = BuildOptions::default();
    Ok(vec![
        ("C2".into(), ok(build_cyclic_complex(&c2, &ModuleCoalgebraData::regular(&c2), &trivial, 3, &opts), "C2")?),
        ("H4".into(), ok(build_cyclic_complex(&h4, &ModuleCoalgebraData::regular(&h4), &dual, 3, &opts), "H4")?),
    ])
}

fn h4_ll(h: &HopfData) -> std::result::Result<AydCoefficient, String> {
    let m = ok(AydCoefficient::one_dimensional(h, AydFlavour::LEFT_LEFT, &counit(h), &h.basis(1)), "ll")?;
    ok(m.evaluated(h), "ll")
}

fn cocyclic_builds() -> std::result::Result<Vec<(String, CyclicComplexData)>, String> {
    let c2 = named("group_C2");
    let h4 = named("sweedler_H4");
    let trivial = ok(build_trivial_coefficient(&c2, AydFlavour::LEFT_LEFT), "trivial")?;
    let ev_g = h4_ll(&h4)?;
    let opts = BuildOptions::default();
    let ground = ok(build_cocyclic_complex(&c2, &ModuleAlgebraData::ground(&c2), &trivial, 3, &opts), "C2")?;
    let adjoint = ModuleAlgebraData::adjoint(&h4);
    let top = match build_cocyclic_complex(&h4, &adjoint, &ev_g, 3, &opts) {
        Ok(d) => d,
        Err(Error::DimensionCap { .. }) => ok(build_cocyclic_complex(&h4, &adjoint, &ev_g, 2, &opts), "H4")?,
        Err(e) => return Err(format!("H4: {e}")),
    };
    Ok(vec![("C2 ground".into(), ground), ("H4 adjoint".into(), top)])
}

fn relations_hold(builds: &[(String, CyclicComplexData)]) -> Outcome {
    let mut out = vec![];
    for (name, d) in builds {
        let r = verify_cyclic_relations(d);
        ensure(r.verdicts.len() == 6, format!("{name}: expected six relation families"))?;
        ensure(r.all_pass(), format!("{name}: {}", failures(&r)))?;
        out.push(format!("{name} through degree {} {:?}", d.max_degree, d.dims()));
    }
    Ok(out.join("; "))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let builds = cyclic_builds()?;
    for (name, d) in &builds {
        // the two relations singled out, checked directly
        for n in 0..=d.max_degree {
            ensure(d.cyclic[n].pow(n + 1).is_identity(), format!("{name}: t_{n}^{} != id", n + 1))?;
            if n < d.max_degree {
                ensure(d.faces[n + 1][n + 1].mul(&d.degeneracies[n][n]).is_identity(), format!("{name}: d_{}s_{n} != id", n + 1))?;
            }
        }
    }
    let msg = relations_hold(&builds)?;
    within(start, Duration::from_secs(30), "cyclic builds")?;
    Ok(msg)
}

fn criterion_4() -> Outcome {
    let builds = cocyclic_builds()?;
    for (name, d) in &builds {
        ensure(d.max_degree >= 2, format!("{name}: only built to degree {}", d.max_degree))?;
        for n in 0..=d.max_degree {
            ensure(d.cyclic[n].pow(n + 1).is_identity(), format!("{name}: tau_{n}^{} != id", n + 1))?;
        }
        // τ_n δ_n = δ_{n-1} τ_{n-1}
        for n in 1..=d.max_degree {
            let lhs = d.cyclic[n].mul(&d.faces[n][n]);
            let rhs = d.faces[n][n - 1].mul(&d.cyclic[n - 1]);
            ensure(lhs == rhs, format!("{name}: tau_{n} delta_{n} != delta_{} tau_{}", n - 1, n - 1))?;
        }
    }
    relations_hold(&builds)
}

fn criterion_5() -> Outcome {
    let c2 = named("group_C2");
    let h4 = named("sweedler_H4");
    let configs = [
        ("C2 ground", c2.clone(), ModuleAlgebraData::ground(&c2), ok(build_trivial_coefficient(&c2, AydFlavour::LEFT_LEFT), "C2")?),
        ("H4 adjoint", h4.clone(), ModuleAlgebraData::adjoint(&h4), h4_ll(&h4)?),
    ];
    let mut laws = 0;
    for (name, h, a, m) in &configs {
        let b = ok(hom_bimodule_actions(h, a, m), name)?;
        let r = verify_bimodule_laws(a, &b);
        ensure(r.all_pass(), format!("{name}: {}", failures(&r)))?;
        laws += r.verdicts.len();
    }
    Ok(format!("{laws} law verdicts pass on both configurations"))
}

fn criterion_6() -> Outcome {
    let h = named("group_C2");
    let m = ok(AydCoefficient::one_dimensional(&h, AydFlavour::LEFT_RIGHT, &[Q.one(), -Q.one()], &h.basis(1)), "sign")?;
    ensure(ok(check_ayd_compatibility(&m, &h), "compat")?.all_pass(), "flavour compatibility fails")?;
    ensure(!ok(check_stability(&m, &h), "stability")?.all_pass(), "coefficient is stable")?;
    let m = ok(m.evaluated(&h), "evaluate")?;
    let c = ModuleCoalgebraData::regular(&h);
    ensure(
        matches!(build_cyclic_complex(&h, &c, &m, 3, &BuildOptions::default()), Err(Error::PrerequisiteFailed(_))),
        "unstable coefficient built without the flag",
    )?;
    let opts = BuildOptions { allow_unstable: true, ..BuildOptions::default() };
    let d = ok(build_cyclic_complex(&h, &c, &m, 3, &opts), "build")?;
    let r = verify_cyclic_relations(&d);
    let failed: Vec<_> = r.failures().map(|v| v.name.as_str()).collect();
    ensure(failed == ["relation (f)"], format!("failed relations: {failed:?}"))?;
    let w = r.verdict("relation (f)").and_then(|v| v.witness.clone()).ok_or("no witness for relation (f)")?;
    Ok(format!("only relation (f) fails, first at n={}", w.indices[0]))
}

/// Orbits of `G^{n+1}` under diagonal multiplication in the cyclic group of `order`.
fn orbit_count(order: usize, legs: u32) -> usize {
    let size = order.pow(legs);
    let shift = |t: usize| -> usize {
        let mut digits = vec![0; legs as usize];
        let mut x = t;
        for d in digits.iter_mut().rev() {
            *d = (x % order + 1) % order;
            x /= order;
        }
        digits.iter().fold(0, |acc, d| acc * order + d)
    };
    (0..size)
        .filter(|&t| {
            let mut u = t;
            (0..order).all(|_| {
                u = shift(u);
                u >= t
            })
        })
        .count()
}

fn criterion_7() -> Outcome {
    let builds = cyclic_builds()?;
    let c2 = &builds[0].1;
    let oracle: Vec<usize> = (0..=3).map(|n| orbit_count(2, n + 1)).collect();
    ensure(c2.dims() == oracle, format!("C2 {:?} vs orbits {oracle:?}", c2.dims()))?;
    ensure(oracle == [1, 2, 4, 8], format!("orbit oracle {oracle:?}"))?;
    let h4 = &builds[1].1;
    let free: Vec<usize> = (0..=2).map(|n| 4usize.pow(n) * h4.bases[0].dim()).collect();
    ensure(h4.dims()[..3] == free[..], format!("H4 {:?} vs free rank {free:?}", h4.dims()))?;
    ensure(free == [1, 4, 16], format!("freeness oracle {free:?}"))?;
    Ok(format!("C2 {oracle:?}, H4 {free:?}"))
}

fn criterion_8() -> Outcome {
    let mut out = vec![];
    let h4 = named("sweedler_H4");
    let mut pairs = vec![];
    for name in ["group_C2", "group_C3", "sweedler_H4"] {
        let h = named(name);
        pairs.push((format!("{name} regular"), h.clone(), ok(AydModuleData::regular(&h, AydFlavour::RIGHT_LEFT), name)?));
    }
    let one = ok(AydModuleData::one_dimensional(&h4, AydFlavour::RIGHT_LEFT, &counit(&h4), &h4.basis(1)), "H4")?;
    pairs.push(("sweedler_H4 one-dimensional".into(), h4.clone(), one));
    for (name, h, n) in &pairs {
        ensure(ok(check_ayd_module(n, h), name)?.all_pass(), format!("{name} is not SAYD"))?;
        let m = ok(ok(dualize_ayd_module(n, h), name)?.evaluated(h), name)?;
        let x = ModuleRep::regular(h, Side::Left);
        let mut dims = vec![];
        for deg in 0..=3 {
            let t = ok(tensor_over_h(h, &n.action, &tensor_power_module(h, &x, deg + 1)), name)?;
            let e = ok(equivariant_hom_basis(h, &x, &m, deg, DEFAULT_DIM_CAP), name)?;
            ensure(t.dim == e.dim(), format!("{name} n={deg}: tensor {} vs hom {}", t.dim, e.dim()))?;
            dims.push(t.dim);
        }
        out.push(format!("{name} {dims:?}"));
    }
    Ok(out.join("; "))
}

fn boundary(d: &CyclicComplexData, n: usize) -> Matrix {
    let dims = d.dims();
    let (rows, cols) = match d.kind {
        ComplexKind::CyclicOfCoalgebra => (dims[n - 1], dims[n]),
        ComplexKind::CocyclicOfAlgebra => (dims[n], dims[n - 1]),
    };
    let mut b = Matrix::zeros(d.field, rows, cols);
    for (i, face) in d.faces[n].iter().enumerate() {
        let sign = if i % 2 == 0 { d.field.one() } else { -d.field.one() };
        b.add_scaled(&sign, face);
    }
    b
}

fn square_zero(name: &str, d: &CyclicComplexData) -> std::result::Result<usize, String> {
    let mut count = 0;
    for n in 1..d.max_degree {
        let bb = match d.kind {
            ComplexKind::CyclicOfCoalgebra => boundary(d, n).mul(&boundary(d, n + 1)),
            ComplexKind::CocyclicOfAlgebra => boundary(d, n + 1).mul(&boundary(d, n)),
        };
        ensure(bb.is_zero(), format!("{name}: b^2 != 0 at degree {n}"))?;
        count += 1;
    }
    Ok(count)
}

/// Frozen from the brute-force rank oracle in `tests/oracles.rs`.
const C2_HOCHSCHILD: [usize; 4] = [1, 0, 0, 0];
const C2_CONNES: [usize; 4] = [1, 0, 1, 0];

fn table(d: &CyclicComplexData, mode: HomologyMode) -> std::result::Result<Vec<usize>, String> {
    Ok(ok(homology_dims(d, mode), "homology")?.dims.iter().map(|p| p.1).collect())
}

fn criterion_9() -> Outcome {
    let mut squares = 0;
    let mut builds = cyclic_builds()?;
    builds.extend(cocyclic_builds()?);
    let triv = named("trivial");
    let k = ok(build_trivial_coefficient(&triv, AydFlavour::LEFT_RIGHT), "k")?;
    let collapse = ok(build_cyclic_complex(&triv, &ModuleCoalgebraData::ground(&triv), &k, 4, &BuildOptions::default()), "trivial")?;
    builds.push(("trivial".into(), collapse));
    for (name, d) in &builds {
        squares += square_zero(name, d)?;
    }
    let collapse = &builds.last().unwrap().1;
    let hh = table(collapse, HomologyMode::Hochschild)?;
    ensure(hh == [1, 0, 0, 0], format!("trivial HH {hh:?}"))?;

    let c2 = named("group_C2");
    let m = ok(build_trivial_coefficient(&c2, AydFlavour::LEFT_RIGHT), "C2")?;
    let d = ok(build_cyclic_complex(&c2, &ModuleCoalgebraData::regular(&c2), &m, 4, &BuildOptions::default()), "C2")?;
    let hh = table(&d, HomologyMode::Hochschild)?;
    let hc = table(&d, HomologyMode::ConnesLambda)?;
    ensure(hh == C2_HOCHSCHILD, format!("C2 HH {hh:?}, golden {C2_HOCHSCHILD:?}"))?;
    ensure(hc == C2_CONNES, format!("C2 HC {hc:?}, golden {C2_CONNES:?}"))?;
    Ok(format!("b^2 = 0 in {squares} degrees; trivial HH {:?}; C2 HH {hh:?} HC {hc:?}", [1, 0, 0, 0]))
}

fn criterion_10() -> Outcome {
    let c2 = named("group_C2");
    let h4 = named("sweedler_H4");
    let coefficients = [
        ("C2 trivial", c2.clone(), ok(build_trivial_coefficient(&c2, AydFlavour::RIGHT_RIGHT), "C2")?),
        (
            "H4 ev_g",
            h4.clone(),
            ok(ok(AydCoefficient::one_dimensional(&h4, AydFlavour::RIGHT_RIGHT, &counit(&h4), &h4.basis(1)), "H4")?.evaluated(&h4), "H4")?,
        ),
    ];
    for (name, h, m) in &coefficients {
        ensure(m.accepted(), format!("{name} not accepted"))?;
        let hc = ok(hom_connection_from_contramodule(h, m), name)?;
        ensure(hc.report.passed("leibniz"), format!("{name}: Leibniz rule fails"))?;
        let (curv, rep) = curvature_and_flatness(h, &hc);
        ensure(curv.is_zero() && rep.all_pass(), format!("{name}: curvature nonzero"))?;
    }
    let mut bent = coefficients[1].2.clone();
    // α = ev_g + ev_x
    bent.alpha.alpha.add_at(0, 2, &Q.one());
    ensure(hom_connection_from_contramodule(&h4, &bent).is_err(), "corrupted alpha accepted")?;
    let hc = ok(hom_connection_unchecked(&h4, &bent), "corrupted")?;
    let (curv, rep) = curvature_and_flatness(&h4, &hc);
    ensure(!curv.is_zero(), "corrupted alpha is flat")?;
    let w = rep.verdict("flatness").and_then(|v| v.witness.clone()).ok_or("curvature without witness")?;
    for (name, dim) in [("trivial", 1), ("group_C2", 2), ("group_C3", 3), ("sweedler_H4", 4)] {
        let g = ok(build_dga(&named(name)), name)?;
        ensure(g.report.passed("d1 d0 = 0"), format!("{name}: d1 d0 != 0"))?;
        let expect = [dim, (dim - 1) * dim, (dim - 1) * (dim - 1) * dim];
        ensure(g.omega_dims == expect, format!("{name}: Omega dims {:?} vs {expect:?}", g.omega_dims))?;
    }
    Ok(format!("flat and Leibniz on both; corrupted alpha curved at {:?}; Omega dims match", w.indices))
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../sessions");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "session"))
        .collect();
    paths.sort();
    ensure(!paths.is_empty(), "no bundled sessions")?;
    for p in &paths {
        let s = load_session(p).map_err(|e| format!("{}: {e:?}", p.display()))?;
        let render = || run(&s, Command::Report, &RunOptions::default()).map(|r| r.render_canonical());
        let a = ok(render(), "first run")?;
        let b = ok(render(), "second run")?;
        ensure(a == b, format!("{} differs between runs", p.display()))?;
    }
    within(start, Duration::from_secs(120), "bundled suite")?;
    Ok(format!("{} sessions byte-identical, {:?}", paths.len(), start.elapsed()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("axiom suite and mutations", criterion_1),
        ("antipode of H4", criterion_2),
        ("cyclic module relations", criterion_3),
        ("cocyclic module relations", criterion_4),
        ("bimodule laws", criterion_5),
        ("stability and cyclicity", criterion_6),
        ("dimension law", criterion_7),
        ("duality of dimensions", criterion_8),
        ("homology sanity", criterion_9),
        ("flat hom-connections", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
