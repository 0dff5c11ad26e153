//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p eprseq --test acceptance`. Every comparison is
//! exact; the only tolerances are the runtime budgets below.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{gf2_mul, laplace_det, ryser_det_gf2, ryser_epr};
use eprseq::classify::{accepted_epr, accepted_pr};
use eprseq::matrix::named;
use eprseq::verify::{enumerate_epr, enumerate_pr, theorem_suite, SuiteBounds};
use eprseq::{classify_epr_z2, compute_epr, compute_pr, witness_epr_z2, witness_pr_char2, Field, FormId, SymMatrix};

/// Exhaustive enumeration for n <= 5.
const SMALL_ENUM_BUDGET: Duration = Duration::from_secs(5);
/// Exhaustive enumeration for n = 6.
const ORDER_SIX_BUDGET: Duration = Duration::from_secs(120);
/// Both witness round trips together.
const WITNESS_BUDGET: Duration = Duration::from_secs(60);
/// Attained-set sizes for n = 1, 2, 3.
const SMALL_SIZES: [usize; 3] = [2, 6, 12];
/// Upper bound on template instances of order <= 12.
const WITNESS_INSTANCE_CAP: usize = 938;
const MIN_GF4_CASES: u64 = 1000;
const SUITE_SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn characterization() -> Outcome {
    let mut sizes = Vec::new();
    let start = Instant::now();
    for n in 1..=6 {
        if n == 6 {
            ensure(start.elapsed() <= SMALL_ENUM_BUDGET, || {
                format!("n <= 5 took {:?}", start.elapsed())
            })?;
        }
        let t = Instant::now();
        let cat = enumerate_epr(n, Field::GF2, false).map_err(|e| e.to_string())?;
        let attained: Vec<_> = cat.counts.keys().cloned().collect();
        let accepted = accepted_epr(n);
        ensure(attained == accepted, || {
            let a: BTreeSet<_> = attained.iter().map(|e| e.to_string()).collect();
            let b: BTreeSet<_> = accepted.iter().map(|e| e.to_string()).collect();
            format!(
                "n={n}: attained only {:?}, accepted only {:?}",
                a.difference(&b).collect::<Vec<_>>(),
                b.difference(&a).collect::<Vec<_>>()
            )
        })?;
        if n == 6 {
            ensure(t.elapsed() <= ORDER_SIX_BUDGET, || {
                format!("n = 6 took {:?}", t.elapsed())
            })?;
        }
        sizes.push(attained.len());
    }
    ensure(sizes[..3] == SMALL_SIZES, || format!("sizes {sizes:?}"))?;
    Ok(format!("attained sizes n=1..6: {sizes:?}"))
}

fn pr_characterization() -> Outcome {
    let mut sizes = Vec::new();
    for n in 2..=6 {
        let attained: Vec<_> = enumerate_pr(n, Field::GF2, false)
            .map_err(|e| e.to_string())?
            .into_keys()
            .collect();
        let accepted = accepted_pr(n);
        ensure(attained == accepted, || format!("n={n}: {attained:?} vs {accepted:?}"))?;
        sizes.push(attained.len());
    }
    Ok(format!("pr-set sizes n=2..6: {sizes:?}"))
}

const GF4_FIXTURES: [(&str, &[&str]); 6] = [
    ("AAN", &["1 z w", "z 1 0", "w 0 1"]),
    (
        "ASSAN",
        &["z 1 z w 0", "1 z w 0 1", "z w z 1 z", "w 0 1 z w", "0 1 z w z"],
    ),
    (
        "NANSNN",
        &[
            "0 z w 1 1 1",
            "z 0 1 1 1 1",
            "w 1 0 1 1 1",
            "1 1 1 0 1 1",
            "1 1 1 1 0 1",
            "1 1 1 1 1 0",
        ],
    ),
    ("SAAA", &["1 0 1 1", "0 1 z z", "1 z 0 1", "1 z 1 0"]),
    ("SASN", &["1 z z 1", "z 1 1 1", "z 1 0 1", "1 1 1 0"]),
    (
        "SASSA",
        &["1 z z z 1", "z 1 0 1 1", "z 0 1 1 1", "z 1 1 0 1", "1 1 1 1 0"],
    ),
];

fn gf4_fixtures() -> Outcome {
    for (want, rows) in GF4_FIXTURES {
        let m = SymMatrix::parse_rows(Field::GF4, rows).map_err(|e| e.to_string())?;
        let e = compute_epr(&m).map_err(|e| e.to_string())?;
        ensure(e.to_string() == want, || format!("M_{want} has epr {e}"))?;
        let v = classify_epr_z2(&e);
        ensure(!v.attainable, || format!("{want} accepted over GF(2): {}", v.render()))?;
    }
    let aan = "AAN".parse().expect("literal");
    let gf4 = enumerate_epr(3, Field::GF4, false).map_err(|e| e.to_string())?;
    let gf2 = enumerate_epr(3, Field::GF2, false).map_err(|e| e.to_string())?;
    ensure(gf4.contains(&aan) && !gf2.contains(&aan), || {
        "AAN catalog membership wrong".into()
    })?;
    Ok(format!(
        "6 fixtures; GF(4) n=3 catalog has {} sequences",
        gf4.counts.len()
    ))
}

fn witness_round_trip() -> Outcome {
    let start = Instant::now();
    let mut epr_count = 0;
    for n in 1..=12 {
        for e in accepted_epr(n) {
            let w = witness_epr_z2(&e).map_err(|err| format!("{e}: {err}"))?;
            let got = compute_epr(&w.matrix).map_err(|err| err.to_string())?;
            ensure(got == e, || format!("{e}: witness has {got} ({})", w.recipe))?;
            epr_count += 1;
        }
    }
    let instances: usize = (1..=12).flat_map(|n| FormId::EPR.map(|f| f.instances(n).len())).sum();
    ensure(instances <= WITNESS_INSTANCE_CAP, || {
        format!("{instances} template instances")
    })?;
    let mut pr_count = 0;
    for n in 1..=10 {
        for p in accepted_pr(n) {
            let w = witness_pr_char2(&p).map_err(|err| format!("{p}: {err}"))?;
            let got = compute_pr(&w.matrix).map_err(|err| err.to_string())?;
            ensure(got == p, || format!("{p}: witness has {got} ({})", w.recipe))?;
            pr_count += 1;
        }
    }
    ensure(start.elapsed() <= WITNESS_BUDGET, || {
        format!("took {:?}", start.elapsed())
    })?;
    Ok(format!("{epr_count} epr-sequences ({instances} template instances) of order <= 12, {pr_count} pr-sequences of order <= 10"))
}

fn grid_of(m: &SymMatrix) -> Vec<Vec<u8>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|v| v.bits()).collect())
        .collect()
}

fn rows_of(g: &[Vec<u8>]) -> Vec<u64> {
    g.iter()
        .map(|r| r.iter().enumerate().fold(0, |a, (j, &v)| a | (v as u64) << j))
        .collect()
}

/// epr from the library, cross-checked against the Ryser oracle.
fn checked_epr(m: &SymMatrix) -> Result<String, String> {
    let lib = compute_epr(m).map_err(|e| e.to_string())?.to_string();
    let oracle = ryser_epr(&grid_of(m));
    ensure(lib == oracle, || format!("library {lib} vs oracle {oracle}"))?;
    Ok(lib)
}

fn named_facts() -> Outcome {
    let f = Field::GF2;
    let err = |e: eprseq::Error| e.to_string();
    for n in 2..=12 {
        // Principal submatrices of A(K_n) are A(K_k), singular exactly when k is odd.
        let want: String = (1..=n).map(|k| if k % 2 == 0 { 'A' } else { 'N' }).collect();
        let got = checked_epr(&named::complete_graph(f, n))?;
        ensure(got == want, || format!("A(K_{n}) has {got}"))?;
    }
    for n in 1..=10 {
        for k in 0..=n {
            let g = grid_of(&named::r_matrix(f, n, k).map_err(err)?);
            let lib = named::r_matrix(f, n, k).map_err(err)?.determinant().is_zero();
            let oracle = ryser_det_gf2(&rows_of(&g), n) == 0;
            ensure(lib == oracle, || format!("det R({n},{k}) disagrees with oracle"))?;
            ensure(lib == (n % 2 == 1 && k % 2 == 0), || {
                format!("det R({n},{k}) zero: {lib}")
            })?;
        }
    }
    for n in 2..=12 {
        let g = grid_of(&named::f_matrix(f, n).map_err(err)?);
        let lib = named::f_matrix(f, n).map_err(err)?.determinant().is_zero();
        ensure(!lib && ryser_det_gf2(&rows_of(&g), n) == 1, || {
            format!("F_{n} singular")
        })?;
    }
    for n in (4..=12).step_by(2) {
        let e = checked_epr(&named::g_matrix(f, n).map_err(err)?)?;
        ensure(e.starts_with("SS") && e.ends_with("AN"), || format!("G_{n} has {e}"))?;
    }
    for n in (2..=12).step_by(2) {
        let want = format!("{}NA", "NS".repeat(n / 2 - 1));
        let e = checked_epr(&named::m1(f, n).map_err(err)?)?;
        ensure(e == want, || format!("M1({n}) has {e}"))?;
    }
    for n in (3..=11).step_by(2) {
        let want = format!("{}NAN", "NS".repeat((n - 3) / 2));
        let e = checked_epr(&named::m2(f, n).map_err(err)?)?;
        ensure(e == want, || format!("M2({n}) has {e}"))?;
    }
    for (n, m) in [
        (6, named::block_4k2(f, 6)),
        (10, named::block_4k2(f, 10)),
        (8, named::block_4k(f, 8)),
        (12, named::block_4k(f, 12)),
    ] {
        let e = checked_epr(&m.map_err(err)?)?;
        ensure(e.starts_with("ASS") && e.ends_with("AN"), || {
            format!("block of order {n} has {e}")
        })?;
    }
    // One small determinant through cofactor expansion as well.
    let r = grid_of(&named::r_matrix(f, 5, 2).map_err(err)?);
    ensure(laplace_det(&r, gf2_mul) == 0, || {
        "det R(5,2) nonzero by cofactors".into()
    })?;
    Ok("A(K_n), R, F, G, M1, M2, block_4k2, block_4k".into())
}

fn suite() -> Outcome {
    let report = theorem_suite(SuiteBounds::default(), SUITE_SEED).map_err(|e| e.to_string())?;
    ensure(report.checks.len() == 16, || format!("{} checks", report.checks.len()))?;
    for c in &report.checks {
        ensure(c.failures == 0, || format!("{}: {} failures", c.name, c.failures))?;
        ensure(c.cases > 0, || format!("{}: no cases", c.name))?;
    }
    for name in ["schur-minors", "hyperdeterminant", "append-transforms", "congruence-pr"] {
        let c = report
            .checks
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| format!("{name} missing"))?;
        ensure(c.gf4_cases >= MIN_GF4_CASES, || {
            format!("{name}: {} GF(4) cases", c.gf4_cases)
        })?;
    }
    let total: u64 = report.checks.iter().map(|c| c.cases).sum();
    Ok(format!("16 checks, {total} cases, 0 failures"))
}

fn determinism() -> Outcome {
    let mut texts = Vec::new();
    for jobs in [1, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| e.to_string())?;
        let cat = pool
            .install(|| enumerate_epr(6, Field::GF2, false))
            .map_err(|e| e.to_string())?;
        texts.push(cat.to_text());
    }
    ensure(texts[0] == texts[1] && texts[0] == texts[2], || {
        "catalogs differ".into()
    })?;
    Ok(format!(
        "n=6 catalog, {} bytes, identical for 1, 2 and 8 jobs",
        texts[0].len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("epr characterization, n = 1..6", characterization),
        ("pr characterization, n = 2..6", pr_characterization),
        ("GF(4) fixtures", gf4_fixtures),
        ("witness round trip", witness_round_trip),
        ("named-matrix facts", named_facts),
        ("theorem suite", suite),
        ("enumeration determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{:.1?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
