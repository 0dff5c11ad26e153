//! The theorem suite: each structural result about principal minors as an
//! executable check.
//!
//! Matrix-level checks run over every symmetric GF(2) matrix up to
//! [`SuiteBounds::matrix_max_n`]; sequence-level checks run over every
//! sequence attained up to [`SuiteBounds::sequence_max_n`], weighted by how
//! many matrices attain it. Identities that hold over any field of
//! characteristic 2 also run on seeded random GF(4) matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{decode, enumerate_epr, triangle, CheckReport, EprCatalog, Failure, SuiteReport};
use crate::classify::rule_violations;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{is_invertible, named, IndexSet, SymMatrix};
use crate::sequence::{compute_epr, compute_pr, principal_minor_table, EprSequence, Letter};

/// Limits for [`theorem_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    /// Largest order for exhaustive matrix-level checks (at most 6).
    pub matrix_max_n: usize,
    /// Largest order for sequence-level checks (at most 7).
    pub sequence_max_n: usize,
    /// Largest order for checks on the named families.
    pub named_max_n: usize,
    /// Random GF(4) matrices per field-generic check.
    pub gf4_matrices: usize,
}

impl Default for SuiteBounds {
    fn default() -> SuiteBounds {
        SuiteBounds {
            matrix_max_n: 5,
            sequence_max_n: 6,
            named_max_n: 12,
            gf4_matrices: 1000,
        }
    }
}

const MAX_SAMPLES: usize = 8;

#[derive(Default)]
struct Acc {
    cases: u64,
    gf4_cases: u64,
    failures: u64,
    samples: Vec<Failure>,
}

impl Acc {
    fn check(&mut self, ok: bool, m: &SymMatrix, note: impl FnOnce() -> String) {
        self.weighted(1, ok, m, note);
    }

    fn weighted(&mut self, weight: u64, ok: bool, m: &SymMatrix, note: impl FnOnce() -> String) {
        self.cases += weight;
        if !m.field().is_gf2() {
            self.gf4_cases += weight;
        }
        if !ok {
            self.failures += weight;
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(Failure {
                    note: note(),
                    matrix: m.to_text().ok(),
                });
            }
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.cases += other.cases;
        self.gf4_cases += other.gf4_cases;
        self.failures += other.failures;
        let room = MAX_SAMPLES - self.samples.len();
        self.samples.extend(other.samples.into_iter().take(room));
        self
    }

    fn report(self, name: &str) -> CheckReport {
        CheckReport {
            name: name.into(),
            cases: self.cases,
            gf4_cases: self.gf4_cases,
            failures: self.failures,
            samples: self.samples,
        }
    }
}

type MatrixCheck = dyn Fn(&SymMatrix, &mut ChaCha8Rng, &mut Acc) + Sync;

fn rng_for(seed: u64, tag: u64, n: usize, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ tag.rotate_left(48) ^ (n as u64).rotate_left(40) ^ index)
}

/// Runs `f` on every symmetric GF(2) matrix of order `min_n..=max_n`.
fn exhaustive(seed: u64, tag: u64, min_n: usize, max_n: usize, f: &MatrixCheck) -> Acc {
    let mut acc = Acc::default();
    for n in min_n..=max_n {
        let total = 1u64 << triangle(n);
        let chunks = total.min(256);
        let step = total.div_ceil(chunks);
        let parts: Vec<Acc> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut part = Acc::default();
                for code in c * step..((c + 1) * step).min(total) {
                    let m = decode(Field::GF2, n, code);
                    let mut rng = rng_for(seed, tag, n, code);
                    f(&m, &mut rng, &mut part);
                }
                part
            })
            .collect();
        acc = parts.into_iter().fold(acc, Acc::merge);
    }
    acc
}

fn random_sym(field: Field, n: usize, rng: &mut ChaCha8Rng) -> SymMatrix {
    let q = field.size() as u32;
    SymMatrix::from_upper_fn(field, n, |_, _| field.elem(rng.gen_range(0..q)).expect("in range"))
}

/// Runs `f` on `count` seeded random symmetric GF(4) matrices of order
/// `min_n..=max_n`.
fn random_gf4(seed: u64, tag: u64, count: usize, min_n: usize, max_n: usize, f: &MatrixCheck) -> Acc {
    let parts: Vec<Acc> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut part = Acc::default();
            let mut rng = rng_for(seed, tag | 1 << 40, 0, i);
            let n = rng.gen_range(min_n..=max_n);
            let m = random_sym(Field::GF4, n, &mut rng);
            f(&m, &mut rng, &mut part);
            part
        })
        .collect();
    parts.into_iter().fold(Acc::default(), Acc::merge)
}

/// epr letters of the principal submatrix on `universe`, from a minor table.
fn letters_within(table: &[Elem], universe: u64) -> Vec<Letter> {
    let m = universe.count_ones() as usize;
    let mut state = vec![0u8; m + 1];
    let mut s = universe;
    while s != 0 {
        let k = s.count_ones() as usize;
        state[k] |= if table[s as usize].is_zero() { 2 } else { 1 };
        s = (s - 1) & universe;
    }
    state[1..]
        .iter()
        .map(|&st| match st {
            1 => Letter::A,
            2 => Letter::N,
            _ => Letter::S,
        })
        .collect()
}

fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

fn seq(letters: Vec<Letter>) -> EprSequence {
    EprSequence::new(letters).expect("nonempty")
}

// Sequence-level predicates.

fn nn_holds(l: &[Letter]) -> bool {
    (0..l.len().saturating_sub(1))
        .filter(|&k| l[k] == Letter::N && l[k + 1] == Letter::N)
        .all(|k| l[k..].iter().all(|&x| x == Letter::N))
}

fn nsa_holds(s: &str) -> bool {
    if s.contains("NSA") {
        return false;
    }
    match s.find("ASN") {
        Some(k) => !s[k + 3..].contains('A'),
        None => true,
    }
}

fn na_ns_holds(l: &[Letter]) -> bool {
    (0..l.len().saturating_sub(1))
        .filter(|&k| l[k] == Letter::N && l[k + 1] != Letter::N)
        .all(|k| k % 2 == 0 && l.iter().step_by(2).all(|&x| x == Letter::N))
}

fn over_catalogs(catalogs: &[EprCatalog], pred: impl Fn(&EprSequence) -> bool) -> Acc {
    let mut acc = Acc::default();
    for c in catalogs {
        for (e, &count) in &c.counts {
            acc.weighted(count, pred(e), &c.exemplar[e], || format!("epr {e}"));
        }
    }
    acc
}

// Matrix-level checks.

fn check_inverse(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    if m.is_singular() {
        return;
    }
    let e = compute_epr(m).expect("small");
    let inv = compute_epr(&m.inverse().expect("nonsingular")).expect("small");
    let want = e.reversed_for_inverse();
    acc.check(inv == want, m, || format!("epr {e}, inverse {inv}, expected {want}"));
}

fn check_inheritance(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    let n = m.order();
    let table = principal_minor_table(m).expect("small");
    let full = letters_within(&table, full_mask(n));
    let mut problem = None;
    for size in 1..=n {
        let subs: Vec<Vec<Letter>> = (1..=full_mask(n))
            .filter(|t| t.count_ones() as usize == size)
            .map(|t| letters_within(&table, t))
            .collect();
        for i in 1..=size {
            let at: Vec<Letter> = subs.iter().map(|s| s[i - 1]).collect();
            let ok = match full[i - 1] {
                Letter::N => at.iter().all(|&x| x == Letter::N),
                Letter::A => at.iter().all(|&x| x == Letter::A),
                Letter::S if i == size => at.contains(&Letter::A) && at.contains(&Letter::N),
                Letter::S => at.contains(&Letter::S),
            };
            if !ok && problem.is_none() {
                problem = Some((size, i));
            }
        }
    }
    acc.check(problem.is_none(), m, || {
        let (size, i) = problem.unwrap_or_default();
        format!("letter {i} not inherited by order-{size} principal submatrices")
    });
}

/// Rank and quotient identity for every nonsingular principal pivot.
fn check_schur_minors(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    let n = m.order();
    let f = m.field();
    let table = principal_minor_table(m).expect("small");
    let rank = m.rank();
    for alpha in 1..=full_mask(n) {
        let d = table[alpha as usize];
        if d.is_zero() {
            continue;
        }
        let k = alpha.count_ones() as usize;
        let sc = m
            .schur_complement(&IndexSet::from_mask(alpha))
            .expect("nonsingular pivot");
        let c = &sc.matrix;
        let ct = principal_minor_table(c).expect("small");
        let labels = sc.labels.as_slice();
        let quotient_ok = (0..1u64 << c.order()).all(|g| {
            let orig = (0..c.order())
                .filter(|i| g >> i & 1 == 1)
                .fold(alpha, |acc, i| acc | 1 << labels[i]);
            ct[g as usize] == f.div(table[orig as usize], d).expect("nonzero")
        });
        let ok = c.order() == n - k && quotient_ok && c.rank() + k == rank;
        acc.check(ok, m, || format!("pivot {}", IndexSet::from_mask(alpha)));
    }
}

fn check_schur_corollary(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    let n = m.order();
    let table = principal_minor_table(m).expect("small");
    let full = letters_within(&table, full_mask(n));
    for alpha in 1..full_mask(n) {
        if table[alpha as usize].is_zero() {
            continue;
        }
        let k = alpha.count_ones() as usize;
        let c = m
            .schur_complement(&IndexSet::from_mask(alpha))
            .expect("nonsingular pivot")
            .matrix;
        let ec = compute_epr(&c).expect("small");
        let ok = (1..=n - k).all(|j| {
            let l = full[j + k - 1];
            l == Letter::S || ec.letter(j) == l
        });
        acc.check(ok, m, || {
            format!("pivot {}, complement epr {ec}", IndexSet::from_mask(alpha))
        });
    }
}

/// `B_I^2 B_{I+abc}^2 + B_{I+a}^2 B_{I+bc}^2 + B_{I+b}^2 B_{I+ac}^2 + B_{I+c}^2 B_{I+ab}^2 = 0`.
fn check_hyperdeterminant(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    let n = m.order();
    let f = m.field();
    let table = principal_minor_table(m).expect("small");
    let sq = |mask: u64| {
        let v = table[mask as usize];
        f.mul(v, v)
    };
    for t in 1..=full_mask(n) {
        if t.count_ones() != 3 {
            continue;
        }
        let bits: Vec<u64> = (0..n).filter(|i| t >> i & 1 == 1).map(|i| 1u64 << i).collect();
        let (a, b, c) = (bits[0], bits[1], bits[2]);
        let rest = full_mask(n) & !t;
        let mut i = rest;
        loop {
            let terms = [
                f.mul(sq(i), sq(i | a | b | c)),
                f.mul(sq(i | a), sq(i | b | c)),
                f.mul(sq(i | b), sq(i | a | c)),
                f.mul(sq(i | c), sq(i | a | b)),
            ];
            let total = terms.into_iter().fold(Elem::ZERO, |x, y| f.add(x, y));
            acc.check(total.is_zero(), m, || {
                format!("T = {}, I = {}", IndexSet::from_mask(t), IndexSet::from_mask(i))
            });
            if i == 0 {
                break;
            }
            i = (i - 1) & rest;
        }
    }
}

fn check_an_minors(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    let n = m.order();
    if n < 2 {
        return;
    }
    let e = compute_epr(m).expect("small");
    if e.letter(n - 1) != Letter::A || e.letter(n) != Letter::N {
        return;
    }
    let all = IndexSet::all(n);
    let drop = |x: usize| IndexSet::from_mask(full_mask(n) & !(1 << x));
    let ok = all.iter().all(|i| {
        all.iter()
            .all(|j| !m.minor(&drop(i), &drop(j)).expect("valid sets").is_zero())
    });
    acc.check(ok, m, || format!("epr {e} with a zero order-{} minor", n - 1));
}

fn check_append(m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc) {
    let e = compute_epr(m).expect("small");
    let weaken = |l: Letter| if l == Letter::N { Letter::N } else { Letter::S };
    let mut dup: Vec<Letter> = e
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &l)| if i == 0 { l } else { weaken(l) })
        .collect();
    dup.push(Letter::N);
    let mut zero: Vec<Letter> = e.letters().iter().map(|&l| weaken(l)).collect();
    zero.push(Letter::N);
    let got_dup = compute_epr(&m.append_duplicate_last().expect("nonempty")).expect("small");
    let got_zero = compute_epr(&m.append_zero()).expect("small");
    let ok = got_dup == seq(dup) && got_zero == seq(zero);
    acc.check(ok, m, || {
        format!("epr {e}: duplicate gives {got_dup}, zero gives {got_zero}")
    });
}

fn random_invertible(field: Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Elem>> {
    let q = field.size() as u32;
    loop {
        let e: Vec<Vec<Elem>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| field.elem(rng.gen_range(0..q)).expect("in range"))
                    .collect()
            })
            .collect();
        if is_invertible(field, &e) {
            return e;
        }
    }
}

fn check_congruence(m: &SymMatrix, rng: &mut ChaCha8Rng, acc: &mut Acc) {
    let e = random_invertible(m.field(), m.order(), rng);
    let c = m.congruent(&e).expect("square");
    let before = compute_pr(m).expect("small");
    let after = compute_pr(&c).expect("small");
    acc.check(before.bits() == after.bits(), m, || {
        format!("pr {before} became {after}")
    });
}

fn named_checks(max_n: usize) -> [CheckReport; 4] {
    let f = Field::GF2;
    let mut kn = Acc::default();
    for n in 2..=max_n {
        let m = named::complete_graph(f, n);
        let mut want = "NA".repeat(n / 2);
        if n % 2 == 1 {
            want.push('N');
        }
        let got = compute_epr(&m).expect("small").to_string();
        kn.check(got == want, &m, || format!("order {n}: {got}"));
    }
    let mut r = Acc::default();
    for n in 1..=max_n.min(10) {
        for k in 0..=n {
            let m = named::r_matrix(f, n, k).expect("valid");
            let ok = m.is_singular() == (n % 2 == 1 && k % 2 == 0);
            r.check(ok, &m, || format!("R({n},{k})"));
        }
    }
    let mut fm = Acc::default();
    for n in 2..=max_n {
        let m = named::f_matrix(f, n).expect("valid");
        fm.check(!m.is_singular(), &m, || format!("F({n}) singular"));
    }
    let mut g = Acc::default();
    for n in (4..=max_n).step_by(2) {
        let m = named::g_matrix(f, n).expect("valid");
        let e = compute_epr(&m).expect("small").to_string();
        g.check(e.starts_with("SS") && e.ends_with("AN"), &m, || format!("G({n}): {e}"));
    }
    [
        kn.report("complete-graph"),
        r.report("r-determinant"),
        fm.report("f-nonsingular"),
        g.report("g-endpoints"),
    ]
}

/// Runs all sixteen checks. The report is identical for identical bounds
/// and seed.
pub fn theorem_suite(bounds: SuiteBounds, seed: u64) -> Result<SuiteReport> {
    if bounds.matrix_max_n > 6 {
        return Err(Error::BoundExceeded {
            what: "matrix-level checks",
            limit: 6,
            asked: bounds.matrix_max_n,
        });
    }
    if bounds.sequence_max_n > super::GF2_FORCED_LIMIT {
        return Err(Error::BoundExceeded {
            what: "sequence-level checks",
            limit: super::GF2_FORCED_LIMIT,
            asked: bounds.sequence_max_n,
        });
    }
    let mx = bounds.matrix_max_n;
    let g4 = bounds.gf4_matrices;
    let catalogs: Vec<EprCatalog> = (1..=bounds.sequence_max_n)
        .map(|n| enumerate_epr(n, Field::GF2, true))
        .collect::<Result<_>>()?;

    let both = |tag: u64, min_n: usize, f: &MatrixCheck| {
        exhaustive(seed, tag, min_n, mx, f).merge(random_gf4(seed, tag, g4, min_n.max(1), 5, f))
    };

    let [kn, r, fm, g] = named_checks(bounds.named_max_n);
    let checks = vec![
        over_catalogs(&catalogs, |e| nn_holds(e.letters())).report("nn"),
        exhaustive(seed, 2, 1, mx, &check_inverse).report("inverse"),
        exhaustive(seed, 3, 1, mx, &check_inheritance).report("inheritance"),
        over_catalogs(&catalogs, |e| nsa_holds(&e.to_string())).report("nsa"),
        both(5, 1, &check_schur_minors).report("schur-minors"),
        exhaustive(seed, 6, 1, mx, &check_schur_corollary).report("schur-corollary"),
        both(7, 3, &check_hyperdeterminant).report("hyperdeterminant"),
        exhaustive(seed, 8, 2, mx, &check_an_minors).report("an-minors"),
        both(9, 1, &check_append).report("append-transforms"),
        over_catalogs(&catalogs, |e| na_ns_holds(e.letters())).report("na-ns-parity"),
        both(11, 1, &check_congruence).report("congruence-pr"),
        kn,
        r,
        fm,
        g,
        over_catalogs(&catalogs, |e| rule_violations(e).is_empty()).report("prohibitions"),
    ];
    Ok(SuiteReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_predicates() {
        let l = |s: &str| s.parse::<EprSequence>().unwrap().letters().to_vec();
        assert!(nn_holds(&l("SNNN")));
        assert!(!nn_holds(&l("NNA")));
        assert!(!nsa_holds("ANSA"));
        assert!(!nsa_holds("ASNNA"));
        assert!(nsa_holds("ASNN"));
        assert!(na_ns_holds(&l("NANA")));
        assert!(!na_ns_holds(&l("ANA")));
    }

    #[test]
    fn hyperdeterminant_on_order_three() {
        let acc = exhaustive(0, 7, 3, 3, &check_hyperdeterminant);
        assert_eq!((acc.cases, acc.failures), (64, 0));
    }

    #[test]
    fn failures_are_sampled_with_matrices() {
        let broken = |m: &SymMatrix, _: &mut ChaCha8Rng, acc: &mut Acc| acc.check(false, m, || "forced".into());
        let acc = exhaustive(0, 0, 2, 2, &broken);
        assert_eq!(acc.failures, 8);
        assert_eq!(acc.samples.len(), MAX_SAMPLES);
        assert!(acc.samples[0]
            .matrix
            .as_deref()
            .unwrap()
            .starts_with("field gf2\nn 2\n"));
    }

    #[test]
    fn small_suite_is_clean_and_reproducible() {
        let bounds = SuiteBounds {
            matrix_max_n: 3,
            sequence_max_n: 4,
            named_max_n: 6,
            gf4_matrices: 20,
        };
        let a = theorem_suite(bounds, 7).unwrap();
        assert!(a.passed(), "{}", a.render());
        assert_eq!(a.checks.len(), 16);
        assert_eq!(a, theorem_suite(bounds, 7).unwrap());
    }
}
