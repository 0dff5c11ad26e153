//! epr- and pr-sequences: representation, parsing and computation.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{dense, packed, IndexSet, SymMatrix};

/// Largest order [`compute_epr`] and [`compute_pr`] accept without an
/// explicit limit.
pub const DEFAULT_ORDER_LIMIT: usize = 24;

/// Orders from which a single computation is split across threads.
const PARALLEL_FROM: usize = 16;

/// One letter of an epr-sequence. Variants are declared alphabetically so
/// the derived ordering matches string ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// All principal minors of the order are nonzero.
    A,
    /// None are.
    N,
    /// Some but not all.
    S,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::N => 'N',
            Letter::S => 'S',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'N' => Some(Letter::N),
            'S' => Some(Letter::S),
            _ => None,
        }
    }

    /// Combines the letters of two disjoint groups of minors of one order.
    pub fn join(self, other: Letter) -> Letter {
        if self == other {
            self
        } else {
            Letter::S
        }
    }

    fn from_state(state: u8) -> Letter {
        match state {
            SEEN_NONZERO => Letter::A,
            SEEN_ZERO => Letter::N,
            _ => Letter::S,
        }
    }
}

const SEEN_NONZERO: u8 = 1;
const SEEN_ZERO: u8 = 2;
const MIXED: u8 = 3;

/// `l_1 l_2 ... l_n`, never empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EprSequence(Vec<Letter>);

impl EprSequence {
    pub fn new(letters: Vec<Letter>) -> Result<EprSequence> {
        if letters.is_empty() {
            return Err(Error::BadSequence {
                text: String::new(),
                msg: "empty sequence".into(),
            });
        }
        Ok(EprSequence(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The order of the matrices the sequence describes.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `l_k` for `1 <= k <= n`.
    pub fn letter(&self, k: usize) -> Letter {
        self.0[k - 1]
    }

    /// `l_{n-1} ... l_1 A`, the sequence of the inverse.
    pub fn reversed_for_inverse(&self) -> EprSequence {
        let n = self.0.len();
        let mut v: Vec<Letter> = self.0[..n - 1].iter().rev().copied().collect();
        v.push(Letter::A);
        EprSequence(v)
    }

    /// Two bits per letter, position `k` at bits `2k..2k+2`. Orders up to 32.
    pub(crate) fn code(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .fold(0, |acc, (k, l)| acc | (*l as u64) << (2 * k))
    }

    pub(crate) fn from_code(code: u64, n: usize) -> EprSequence {
        EprSequence(
            (0..n)
                .map(|k| match code >> (2 * k) & 3 {
                    0 => Letter::A,
                    1 => Letter::N,
                    _ => Letter::S,
                })
                .collect(),
        )
    }
}

impl fmt::Display for EprSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl fmt::Debug for EprSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "epr({self})")
    }
}

impl FromStr for EprSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<EprSequence> {
        let bad = |msg: String| Error::BadSequence { text: s.into(), msg };
        if s.is_empty() {
            return Err(bad("empty sequence".into()));
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Letter::from_char(c).ok_or_else(|| bad(format!("illegal letter {c:?} at position {}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()
            .map(EprSequence)
    }
}

impl Serialize for EprSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `r_0]r_1 ... r_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrSequence {
    r0: bool,
    bits: Vec<bool>,
}

impl PrSequence {
    pub fn new(r0: bool, bits: Vec<bool>) -> Result<PrSequence> {
        if bits.is_empty() {
            return Err(Error::BadSequence {
                text: format!("{}]", r0 as u8),
                msg: "empty sequence".into(),
            });
        }
        Ok(PrSequence { r0, bits })
    }

    /// Whether the matrix has a zero diagonal entry.
    pub fn r0(&self) -> bool {
        self.r0
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for PrSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}]", self.r0 as u8)?;
        self.bits.iter().try_for_each(|b| write!(f, "{}", *b as u8))
    }
}

impl fmt::Debug for PrSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pr({self})")
    }
}

impl FromStr for PrSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<PrSequence> {
        let bad = |msg: String| Error::BadSequence { text: s.into(), msg };
        let (head, tail) = s.split_once(']').ok_or_else(|| bad("missing ']'".into()))?;
        let r0 = match head {
            "0" => false,
            "1" => true,
            _ => return Err(bad(format!("r0 must be 0 or 1, got {head:?}"))),
        };
        if tail.is_empty() {
            return Err(bad("empty sequence".into()));
        }
        let bits = tail
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(bad(format!("illegal digit {c:?} at position {}", i + 1))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PrSequence { r0, bits })
    }
}

impl Serialize for PrSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `r_k = 0` exactly where `l_k = N`.
pub fn pr_of_epr(e: &EprSequence, zero_diag: bool) -> PrSequence {
    PrSequence {
        r0: zero_diag,
        bits: e.letters().iter().map(|l| *l != Letter::N).collect(),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Goal {
    Epr,
    Pr,
}

impl Goal {
    fn settled(self, state: u8) -> bool {
        match self {
            Goal::Epr => state == MIXED,
            Goal::Pr => state & SEEN_NONZERO != 0,
        }
    }
}

/// Per-order states over the masks in `range`; index `k` is order `k`.
fn scan(b: &SymMatrix, range: Range<u64>, goal: Goal) -> Vec<u8> {
    let n = b.order();
    let mut state = vec![0u8; n + 1];
    match b.gf2_rows() {
        Some(rows) => {
            let mut scratch = [0u64; 64];
            for mask in range {
                let k = mask.count_ones() as usize;
                if goal.settled(state[k]) {
                    continue;
                }
                state[k] |= if packed::masked_nonsingular(rows, mask, &mut scratch) {
                    SEEN_NONZERO
                } else {
                    SEEN_ZERO
                };
            }
        }
        None => {
            let field = b.field();
            let mut buf = Vec::with_capacity(n * n);
            let mut idx = Vec::with_capacity(n);
            for mask in range {
                let k = mask.count_ones() as usize;
                if goal.settled(state[k]) {
                    continue;
                }
                idx.clear();
                idx.extend((0..n).filter(|i| mask >> i & 1 == 1));
                buf.clear();
                buf.extend(
                    idx.iter()
                        .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
                        .map(|(i, j)| b.get(i, j)),
                );
                state[k] |= if dense::det_in_place(field, &mut buf, k).is_zero() {
                    SEEN_ZERO
                } else {
                    SEEN_NONZERO
                };
            }
        }
    }
    state
}

fn scan_all(b: &SymMatrix, goal: Goal) -> Vec<u8> {
    let n = b.order();
    let end = 1u64 << n;
    if n < PARALLEL_FROM {
        return scan(b, 1..end, goal);
    }
    let chunk = 1u64 << (n - 8);
    (0..256u64)
        .into_par_iter()
        .map(|c| scan(b, (c * chunk).max(1)..(c + 1) * chunk, goal))
        .reduce(
            || vec![0u8; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
                a
            },
        )
}

fn check_order(b: &SymMatrix, limit: usize) -> Result<()> {
    let n = b.order();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let hard = 63;
    if n > limit.min(hard) {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: limit.min(hard),
        });
    }
    Ok(())
}

/// The epr-sequence of `b`, for orders up to [`DEFAULT_ORDER_LIMIT`].
pub fn compute_epr(b: &SymMatrix) -> Result<EprSequence> {
    compute_epr_with_limit(b, DEFAULT_ORDER_LIMIT)
}

/// [`compute_epr`] with a caller-chosen order limit. Cost is `2^n`
/// determinants.
pub fn compute_epr_with_limit(b: &SymMatrix, limit: usize) -> Result<EprSequence> {
    check_order(b, limit)?;
    let state = scan_all(b, Goal::Epr);
    Ok(EprSequence(state[1..].iter().map(|&s| Letter::from_state(s)).collect()))
}

/// The pr-sequence of `b`, for orders up to [`DEFAULT_ORDER_LIMIT`].
pub fn compute_pr(b: &SymMatrix) -> Result<PrSequence> {
    compute_pr_with_limit(b, DEFAULT_ORDER_LIMIT)
}

pub fn compute_pr_with_limit(b: &SymMatrix, limit: usize) -> Result<PrSequence> {
    check_order(b, limit)?;
    let state = scan_all(b, Goal::Pr);
    Ok(PrSequence {
        r0: b.has_zero_diagonal_entry(),
        bits: state[1..].iter().map(|&s| s & SEEN_NONZERO != 0).collect(),
    })
}

/// epr code (see [`EprSequence::code`]) of a GF(2) matrix of order at most
/// 32 given as one word per row. Allocation free, for enumeration.
pub(crate) fn epr_code_gf2(rows: &[u64]) -> u64 {
    let n = rows.len();
    let mut state = [0u8; 33];
    let mut scratch = [0u64; 32];
    for mask in 1..1u64 << n {
        let k = mask.count_ones() as usize;
        if state[k] == MIXED {
            continue;
        }
        state[k] |= if packed::masked_nonsingular(rows, mask, &mut scratch) {
            SEEN_NONZERO
        } else {
            SEEN_ZERO
        };
    }
    (1..=n).fold(0, |acc, k| acc | (Letter::from_state(state[k]) as u64) << (2 * (k - 1)))
}

/// Every principal minor, indexed by the bitmask of its index set. Entry 0
/// is the empty minor, 1.
pub fn principal_minor_table(b: &SymMatrix) -> Result<Vec<Elem>> {
    let n = b.order();
    if n > 20 {
        return Err(Error::OrderTooLarge { order: n, limit: 20 });
    }
    Ok((0..1u64 << n).map(|mask| minor_at_mask(b, mask)).collect())
}

fn minor_at_mask(b: &SymMatrix, mask: u64) -> Elem {
    match b.gf2_rows() {
        Some(rows) => {
            let mut scratch = [0u64; 64];
            Elem::from_bits(packed::masked_nonsingular(rows, mask, &mut scratch) as u8)
        }
        None => minor_dense(b.field(), b, mask),
    }
}

fn minor_dense(field: Field, b: &SymMatrix, mask: u64) -> Elem {
    let idx: Vec<usize> = (0..b.order()).filter(|i| mask >> i & 1 == 1).collect();
    let mut buf: Vec<Elem> = idx
        .iter()
        .flat_map(|&i| idx.iter().map(move |&j| b.get(i, j)))
        .collect();
    dense::det_in_place(field, &mut buf, idx.len())
}

/// The order-`k` principal minors in lexicographic order of index sets.
pub fn principal_minors_of_order(b: &SymMatrix, k: usize) -> Result<Vec<(IndexSet, Elem)>> {
    let n = b.order();
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, order: n });
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set = IndexSet::new(idx.clone())?;
        let m = b.principal_minor(&set)?;
        out.push((set, m));
        // Next combination.
        let Some(p) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    Ok(out)
}
