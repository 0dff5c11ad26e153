//! Exhaustive enumeration of small symmetric matrices and executable checks
//! of the characterization.
//!
//! A symmetric matrix of order `n` is encoded by its upper triangle read row
//! by row, one base-`q` digit per entry, entry `(0, 0)` least significant.
//! Enumeration walks every code in fixed contiguous chunks; the merge only
//! adds counts and keeps minimal codes, so results do not depend on how many
//! threads run the chunks.

mod suite;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

pub use suite::{theorem_suite, SuiteBounds};

use crate::classify::{accepted_epr, classify_epr_z2};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::SymMatrix;
use crate::sequence::{compute_epr, epr_code_gf2, pr_of_epr, EprSequence, PrSequence};

/// Largest GF(2) order enumerated without `force`.
pub const GF2_LIMIT: usize = 6;
/// Largest GF(2) order enumerated with `force`.
pub const GF2_FORCED_LIMIT: usize = 7;
pub const GF4_LIMIT: usize = 4;

const CHUNKS: u64 = 1024;

/// Attained epr-sequences of one order with their multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct EprCatalog {
    pub order: usize,
    pub field: Field,
    pub counts: BTreeMap<EprSequence, u64>,
    /// The first matrix in enumeration order attaining each sequence.
    pub exemplar: BTreeMap<EprSequence, SymMatrix>,
}

impl EprCatalog {
    /// Number of matrices enumerated.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `<epr> <count>` lines in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.counts {
            writeln!(out, "{e} {c}").expect("string write");
        }
        out
    }

    pub fn contains(&self, e: &EprSequence) -> bool {
        self.counts.contains_key(e)
    }
}

/// Number of free entries of an order-`n` symmetric matrix.
fn triangle(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `(i, j)` for each digit of the code, `i <= j`.
fn positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// The matrix with the given code.
pub fn decode(field: Field, n: usize, code: u64) -> SymMatrix {
    let digit_bits = if field.is_gf2() { 1 } else { 2 };
    let mask = (1u64 << digit_bits) - 1;
    // Row i of the triangle starts at digit i*n - i*(i-1)/2.
    SymMatrix::from_upper_fn(field, n, |i, j| {
        let t = i * n - i * i.saturating_sub(1) / 2 + (j - i);
        Elem::from_bits((code >> (t * digit_bits) & mask) as u8)
    })
}

fn check_bounds(n: usize, field: Field, force: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if field.is_gf2() {
        if n > GF2_FORCED_LIMIT {
            return Err(Error::BoundExceeded {
                what: "gf2 enumeration",
                limit: GF2_FORCED_LIMIT,
                asked: n,
            });
        }
        if n > GF2_LIMIT && !force {
            return Err(Error::BoundExceeded {
                what: "gf2 enumeration",
                limit: GF2_LIMIT,
                asked: n,
            });
        }
        Ok(())
    } else if field == Field::GF4 {
        if n > GF4_LIMIT {
            return Err(Error::BoundExceeded {
                what: "gf4 enumeration",
                limit: GF4_LIMIT,
                asked: n,
            });
        }
        Ok(())
    } else {
        Err(Error::Unsupported(format!("enumeration over {field}")))
    }
}

/// Per-chunk accumulator: epr code -> (count, smallest matrix code).
type Tally = HashMap<u64, (u64, u64)>;

/// Set in a tally key when the matrix has a zero diagonal entry.
const ZERO_DIAG: u64 = 1 << 63;

fn tally_gf2(n: usize, range: std::ops::Range<u64>, with_diag: bool) -> Tally {
    let pos = positions(n);
    let mut tally = Tally::new();
    let mut rows = [0u64; 8];
    for code in range {
        rows[..n].fill(0);
        for (t, &(i, j)) in pos.iter().enumerate() {
            if code >> t & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        let mut e = epr_code_gf2(&rows[..n]);
        if with_diag && (0..n).any(|i| rows[i] >> i & 1 == 0) {
            e |= ZERO_DIAG;
        }
        let slot = tally.entry(e).or_insert((0, code));
        slot.0 += 1;
    }
    tally
}

fn tally_generic(field: Field, n: usize, range: std::ops::Range<u64>, with_diag: bool) -> Tally {
    let mut tally = Tally::new();
    for code in range {
        let m = decode(field, n, code);
        let mut e = compute_epr(&m).expect("order within limits").code();
        if with_diag && m.has_zero_diagonal_entry() {
            e |= ZERO_DIAG;
        }
        let slot = tally.entry(e).or_insert((0, code));
        slot.0 += 1;
    }
    tally
}

fn tally_all(n: usize, field: Field, force: bool, with_diag: bool) -> Result<HashMap<u64, (u64, u64)>> {
    check_bounds(n, field, force)?;
    let digit_bits = if field.is_gf2() { 1 } else { 2 };
    let total = 1u64 << (triangle(n) * digit_bits);
    let chunks = CHUNKS.min(total);
    let step = total.div_ceil(chunks);
    let tallies: Vec<Tally> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let range = c * step..((c + 1) * step).min(total);
            if field.is_gf2() {
                tally_gf2(n, range, with_diag)
            } else {
                tally_generic(field, n, range, with_diag)
            }
        })
        .collect();
    let mut merged: HashMap<u64, (u64, u64)> = HashMap::new();
    for t in tallies {
        for (e, (count, first)) in t {
            let slot = merged.entry(e).or_insert((0, first));
            slot.0 += count;
            slot.1 = slot.1.min(first);
        }
    }
    Ok(merged)
}

/// Every attained epr-sequence of order `n` over `field` (GF(2) or GF(4))
/// with multiplicities. Runs on the current rayon pool.
pub fn enumerate_epr(n: usize, field: Field, force: bool) -> Result<EprCatalog> {
    let mut counts = BTreeMap::new();
    let mut exemplar = BTreeMap::new();
    for (e, (count, first)) in tally_all(n, field, force, false)? {
        let seq = EprSequence::from_code(e, n);
        counts.insert(seq.clone(), count);
        exemplar.insert(seq, decode(field, n, first));
    }
    Ok(EprCatalog {
        order: n,
        field,
        counts,
        exemplar,
    })
}

/// Every attained pr-sequence of order `n` with multiplicities. Same bounds
/// as [`enumerate_epr`].
pub fn enumerate_pr(n: usize, field: Field, force: bool) -> Result<BTreeMap<PrSequence, u64>> {
    let mut counts = BTreeMap::new();
    for (key, (count, _)) in tally_all(n, field, force, true)? {
        let e = EprSequence::from_code(key & !ZERO_DIAG, n);
        *counts.entry(pr_of_epr(&e, key & ZERO_DIAG != 0)).or_insert(0) += count;
    }
    Ok(counts)
}

/// One failing case in a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub note: String,
    /// The offending matrix in the matrix file format, when there is one.
    pub matrix: Option<String>,
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    /// How many of `cases` ran over GF(4).
    pub gf4_cases: u64,
    pub failures: u64,
    /// The first few failures in enumeration order.
    pub samples: Vec<Failure>,
}

/// Results of a group of checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    /// One `<name> <cases> <failures>` line per check, then every sampled
    /// failure as a comment line followed by its matrix.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            writeln!(out, "{} {} {}", c.name, c.cases, c.failures).expect("string write");
        }
        for c in &self.checks {
            for f in &c.samples {
                writeln!(out, "# {}: {}", c.name, f.note).expect("string write");
                if let Some(m) = &f.matrix {
                    out.push_str(m);
                }
            }
        }
        out
    }
}

/// Compares the attained set at order `n` over GF(2) with the classifier:
/// `attained-rejected` lists sequences some matrix attains but the
/// classifier rejects, `accepted-unattained` the reverse. Both must be empty.
pub fn compare_with_classifier(n: usize, force: bool) -> Result<SuiteReport> {
    let catalog = enumerate_epr(n, Field::GF2, force)?;
    let accepted = accepted_epr(n);
    let rejected: Vec<Failure> = catalog
        .counts
        .keys()
        .filter(|e| !classify_epr_z2(e).attainable)
        .map(|e| Failure {
            note: format!("{e} is attained but rejected"),
            matrix: catalog.exemplar[e].to_text().ok(),
        })
        .collect();
    let unattained: Vec<Failure> = accepted
        .iter()
        .filter(|e| !catalog.contains(e))
        .map(|e| Failure {
            note: format!("{e} is accepted but never attained"),
            matrix: None,
        })
        .collect();
    Ok(SuiteReport {
        checks: vec![
            CheckReport {
                name: "attained-rejected".into(),
                cases: catalog.counts.len() as u64,
                gf4_cases: 0,
                failures: rejected.len() as u64,
                samples: rejected,
            },
            CheckReport {
                name: "accepted-unattained".into(),
                cases: accepted.len() as u64,
                gf4_cases: 0,
                failures: unattained.len() as u64,
                samples: unattained,
            },
        ],
    })
}
