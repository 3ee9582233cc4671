//! Acceptance criteria 1 to 6. Runs without the libtest harness so that each
//! criterion prints one PASS/FAIL line; any failure makes the process exit
//! nonzero.

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use moritakit::algebra::{corner_algebra, Algebra, Idempotent};
use moritakit::cli::cmd_analyze;
use moritakit::exactlin::Field;
use moritakit::fixtures;
use moritakit::fuzz::{run_suite, FuzzConfig};
use moritakit::homological::{
    dominant_dimension, minimal_injective_resolution, qf3_minimal_faithful, DomDim,
};
use moritakit::krullschmidt::{is_isomorphic, lift_end_algebra};
use moritakit::modules::{
    direct_sum, end_algebra, injective_indecomposable, projective_indecomposable, regular_module,
    simple_module, Module, Side,
};
use moritakit::morita::{
    commutative_cover_check, corner_bimodules, cover_check, double_centralizer_check,
    idempotent_projective, inverse_nakayama, is_morita_algebra, is_self_injective,
};
use moritakit::Result;

/// Seed of the fuzz criterion.
const FUZZ_SEED: u64 = 7;
const FUZZ_CASES: usize = 200;

/// Named sub-checks of one criterion.
#[derive(Default)]
struct Checks {
    items: Vec<(String, bool)>,
}

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push((name.into(), ok));
    }

    fn passed(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }

    fn failures(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

fn build(name: &str) -> Arc<Algebra> {
    let p = fixtures::named(name, Field::Rationals).expect("fixture");
    Arc::new(moritakit::algebra::build_algebra(&p).expect("fixture builds"))
}

fn vertex(a: &Algebra, label: &str) -> usize {
    a.vertex_index(label).expect("vertex")
}

fn proj(a: &Arc<Algebra>, label: &str) -> Module {
    projective_indecomposable(a, vertex(a, label), Side::Left).unwrap()
}

fn inj(a: &Arc<Algebra>, label: &str) -> Module {
    injective_indecomposable(a, vertex(a, label), Side::Left).unwrap()
}

fn sum(a: &Arc<Algebra>, parts: &[Module]) -> Module {
    direct_sum(a, Side::Left, parts).unwrap().module
}

fn idem(a: &Algebra, labels: &[&str]) -> Idempotent {
    Idempotent::new(labels.iter().map(|l| vertex(a, l)).collect())
}

fn criterion_1() -> Result<Checks> {
    let mut c = Checks::default();
    let a = build("ex14");
    c.check("dim A = 5", a.dim() == 5);
    let (p1, p2, p3) = (proj(&a, "1"), proj(&a, "2"), proj(&a, "3"));
    let (i1, i2, i3) = (inj(&a, "1"), inj(&a, "2"), inj(&a, "3"));
    c.check(
        "dim P(1), P(2), P(3) = 2, 2, 1",
        [p1.dim(), p2.dim(), p3.dim()] == [2, 2, 1],
    );
    c.check("P(1) = I(2)", is_isomorphic(&p1, &i2)?);
    c.check("P(2) = I(3)", is_isomorphic(&p2, &i3)?);

    let res = minimal_injective_resolution(&regular_module(&a, Side::Left), 10)?;
    let expected = [
        sum(&a, &[p1.clone(), p2.clone(), p2.clone()]),
        p1.clone(),
        i1.clone(),
    ];
    c.check(
        "injective resolution has three terms and stops",
        res.len() == 3 && res.complete && res.is_exact(),
    );
    let mut terms_ok = res.len() == 3;
    for (t, e) in res.terms.iter().zip(&expected) {
        terms_ok &= is_isomorphic(t, e)?;
    }
    c.check("resolution terms P(1)+P(2)^2, P(1), I(1)", terms_ok);

    c.check(
        "domdim = 2",
        dominant_dimension(&a, 10)?.value == DomDim::Exact(2),
    );
    let p12 = sum(&a, &[p1.clone(), p2.clone()]);
    let mf = qf3_minimal_faithful(&a)?;
    c.check(
        "minimal faithful = P(1)+P(2)",
        match &mf {
            Some(m) => m.idempotent == idem(&a, &["1", "2"]) && is_isomorphic(&m.module, &p12)?,
            None => false,
        },
    );
    let b = lift_end_algebra(&end_algebra(&p12)?)?.algebra;
    c.check("dim B = 3", b.dim() == 3);
    c.check("B is not self-injective", !is_self_injective(&b)?);

    let v12 = cover_check(&p12)?;
    c.check(
        "cover(A, P(1)+P(2)) = false by all three criteria",
        !v12.holds && v12.methods == [Some(false); 3],
    );
    let p23 = sum(&a, &[p2.clone(), p3.clone()]);
    let v23 = cover_check(&p23)?;
    c.check(
        "cover(A, P(2)+P(3)) = true by all three criteria",
        v23.holds && v23.methods == [Some(true); 3],
    );
    c.check(
        "inverse Nakayama of P(1)+P(2) = P(2)+P(3)",
        is_isomorphic(&inverse_nakayama(&p12)?, &p23)?,
    );
    let m = is_morita_algebra(&a, 10)?;
    c.check(
        "not Morita, every condition false",
        !m.verdict && m.conditions.len() == 7 && m.conditions.values().all(|&v| !v),
    );
    Ok(c)
}

fn criterion_2() -> Result<Checks> {
    let mut c = Checks::default();
    let a = build("ex15");
    c.check("dim A = 9", a.dim() == 9);
    let e = idem(&a, &["1", "2"]);
    c.check("dim eAe = 6", corner_algebra(&a, &e)?.algebra.dim() == 6);
    c.check("not QF-3", qf3_minimal_faithful(&a)?.is_none());
    c.check(
        "domdim = 0",
        dominant_dimension(&a, 10)?.value == DomDim::Exact(0),
    );
    let ae = idempotent_projective(&a, &e)?;
    let v = cover_check(&ae)?;
    c.check(
        "cover(A, P(1)+P(2)) = true by all three criteria",
        v.holds && v.methods == [Some(true); 3],
    );
    let (ae_bi, ea_bi) = corner_bimodules(&a, &e)?;
    c.check("double centralizer on Ae", double_centralizer_check(&ae_bi));
    c.check("double centralizer on eA", double_centralizer_check(&ea_bi));
    let m = is_morita_algebra(&a, 10)?;
    c.check("not Morita", !m.verdict && !m.qf3);
    Ok(c)
}

fn criterion_3() -> Result<Checks> {
    let mut c = Checks::default();
    let a = build("selfinj-x2");
    let m = is_morita_algebra(&a, 10)?;
    c.check("k[x]/(x^2) is Morita", m.verdict);
    c.check(
        "k[x]/(x^2) has domdim >= 10",
        dominant_dimension(&a, 10)?.value == DomDim::AtLeast(10),
    );
    c.check("k[x]/(x^2) is self-injective", is_self_injective(&a)?);

    // the Auslander algebra built as an endomorphism algebra, and the fixture
    let reg = regular_module(&a, Side::Left);
    let simple = simple_module(&a, 0, Side::Left)?;
    let gen = sum(&a, &[reg, simple]);
    let built = lift_end_algebra(&end_algebra(&gen)?)?.algebra;
    for (name, b) in [
        ("End(A+S)^op", built),
        ("auslander-x2", build("auslander-x2")),
    ] {
        let m = is_morita_algebra(&b, 10)?;
        c.check(format!("{name} is Morita"), m.verdict);
        c.check(
            format!("{name} has domdim exactly 2"),
            dominant_dimension(&b, 10)?.value == DomDim::Exact(2),
        );
        let five = ["i", "ii", "iii", "iv", "v"];
        c.check(
            format!("{name} satisfies conditions i to v"),
            five.iter().all(|k| m.conditions.get(k) == Some(&true)),
        );
    }
    Ok(c)
}

fn criterion_4() -> Result<Checks> {
    let mut c = Checks::default();
    let cfg = FuzzConfig::with_seed(FUZZ_SEED, FUZZ_CASES);
    let start = Instant::now();
    let report = run_suite(&cfg)?;
    println!(
        "    fuzz: seed {FUZZ_SEED}, {} cases in {:.1}s",
        report.cases.len(),
        start.elapsed().as_secs_f64()
    );
    c.check(
        format!("{FUZZ_CASES} cases ran"),
        report.cases.len() == FUZZ_CASES,
    );
    c.check("no case skipped", report.skipped == 0);
    let counts = report.violation_counts();
    for (check, n) in &counts {
        println!("    fuzz violation {check}: {n}");
    }
    for (label, check) in [
        ("a", "lemma4"),
        ("b", "theorem1"),
        ("c", "domdim_sides"),
        ("d", "nakayama"),
        ("e", "reduction"),
        ("f", "prop9"),
        ("g", "krull_schmidt"),
        ("-", "validation"),
        ("-", "build"),
        ("-", "morita_tachikawa"),
    ] {
        c.check(
            format!("({label}) no {check} violations"),
            counts.get(check).copied().unwrap_or(0) == 0,
        );
    }
    c.check("zero violations", report.violations.is_empty());
    Ok(c)
}

fn criterion_5() -> Result<Checks> {
    let mut c = Checks::default();
    let mut proper_non_cover_kxk = false;
    for name in ["kxk", "x3", "k-x2"] {
        let a = build(name);
        let n = a.num_idempotents();
        let mut ok = true;
        for mask in 1u32..(1 << n) {
            let e = Idempotent::new((0..n).filter(|&v| mask & (1 << v) != 0).collect());
            let cover = cover_check(&idempotent_projective(&a, &e)?)?.holds;
            let same_dim = corner_algebra(&a, &e)?.algebra.dim() == a.dim();
            ok &= !cover || same_dim;
            if name == "kxk" && e.vertices().len() < n && !cover {
                proper_non_cover_kxk = true;
            }
        }
        c.check(format!("{name}: cover(A, Ae) implies dim A = dim eAe"), ok);
        let rows = commutative_cover_check(&a)?;
        c.check(
            format!("{name}: library table has {} rows", (1 << n) - 1),
            rows.len() == (1 << n) - 1,
        );
    }
    c.check(
        "k x k has a proper non-cover idempotent",
        proper_non_cover_kxk,
    );
    Ok(c)
}

fn criterion_6() -> Result<Checks> {
    let mut c = Checks::default();
    let bin = env!("CARGO_BIN_EXE_moritakit");
    let fixture_dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let mut slowest = 0.0f64;
    for name in fixtures::NAMES {
        let path = format!("{fixture_dir}/{name}.json");
        let run_lib = |threads: usize| -> Result<(String, String)> {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            pool.install(|| {
                let r = cmd_analyze(&path, 10, &[], false)?;
                Ok((r.to_text(), r.to_json()))
            })
        };
        let start = Instant::now();
        let first = run_lib(1)?;
        slowest = slowest.max(start.elapsed().as_secs_f64());
        let second = run_lib(1)?;
        let wide = run_lib(4)?;
        c.check(
            format!("{name}: library output identical across runs and 1/4 threads"),
            first == second && first == wide,
        );

        let run_bin = |threads: &str, json: bool| -> Vec<u8> {
            let mut cmd = Command::new(bin);
            cmd.arg("analyze")
                .arg(&path)
                .env("RAYON_NUM_THREADS", threads);
            cmd.env_remove("MORITAKIT_CAP");
            if json {
                cmd.arg("--json");
            }
            let out = cmd.output().expect("binary runs");
            assert!(out.status.success(), "analyze {name} failed");
            out.stdout
        };
        for json in [false, true] {
            let a = run_bin("1", json);
            let b = run_bin("1", json);
            let w = run_bin("8", json);
            c.check(
                format!(
                    "{name}: binary {} output identical across runs and 1/8 threads",
                    if json { "json" } else { "text" }
                ),
                a == b && a == w,
            );
        }
    }
    println!("    slowest fixture analysis: {slowest:.3}s");
    Ok(c)
}

type Criterion = fn() -> Result<Checks>;

fn main() {
    let criteria: [(&str, Criterion); 6] = [
        ("ex14 fixture", criterion_1),
        ("ex15 fixture", criterion_2),
        ("positive controls", criterion_3),
        ("fuzz suite", criterion_4),
        ("commutative covers", criterion_5),
        ("determinism", criterion_6),
    ];
    let mut all = true;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(checks) => {
                let pass = checks.passed();
                all &= pass;
                println!(
                    "criterion {}: {} {name} ({} checks, {secs:.1}s)",
                    k + 1,
                    if pass { "PASS" } else { "FAIL" },
                    checks.items.len()
                );
                for f in checks.failures() {
                    println!("    failed: {f}");
                }
            }
            Err(e) => {
                all = false;
                println!("criterion {}: FAIL {name} (error: {e})", k + 1);
            }
        }
    }
    if !all {
        std::process::exit(1);
    }
}
