//! The named matrices used as witnesses: complete-graph adjacency matrices,
//! identity/ones block patterns and their bordered variants.
//!
//! All entries are 0 or 1, so each construction is available over any field,
//! though the epr facts attached to them hold over GF(2).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedKind {
    /// `I_n`; params `[n]`.
    Identity,
    /// `O_n`; params `[n]`.
    Zero,
    /// `J_n`; params `[n]`.
    AllOnes,
    /// `A(K_n) = J_n - I_n`; params `[n]`.
    CompleteGraph,
    /// `[[I_k, J], [J, A(K_{n-k})]]`; params `[n, k]`.
    R,
    /// `A(K_n)` with its first diagonal entry set to 1; params `[n]`.
    F,
    /// `[[1, e_1^T], [e_1, F_{n-1}]]`; params `[n]`.
    G,
    /// `A(K_2) (+) ... (+) A(K_2)` of even order; params `[n]`.
    M1,
    /// `M1` of order `n - 1` bordered by a ones column and a zero corner; params `[n]`, `n` odd.
    M2,
    /// `[[I_2, 1], [1^T, 1]]`, order 3.
    MAsa,
    /// `[[I_2, J_2], [J_2, I_2]]`, order 4.
    MAsaa,
    /// `[[J_m, I_m], [I_m, I_m]]` with `n = 2m`, `n = 2 (mod 4)`, `n >= 6`.
    Block4k2,
    /// `[[J_{m-1}, W], [W^T, I_{m+1}]]`, `W = [I_{m-1}, J_{m-1,2}]`, `n = 2m = 0 (mod 4)`, `n >= 8`.
    Block4k,
    /// `[[I_{n-2}, J_{n-2,2}], [J_{2,n-2}, I_2]]`; params `[n]`, `n >= 3`.
    BorderedIdentity,
}

impl NamedKind {
    pub const ALL: [NamedKind; 14] = [
        NamedKind::Identity,
        NamedKind::Zero,
        NamedKind::AllOnes,
        NamedKind::CompleteGraph,
        NamedKind::R,
        NamedKind::F,
        NamedKind::G,
        NamedKind::M1,
        NamedKind::M2,
        NamedKind::MAsa,
        NamedKind::MAsaa,
        NamedKind::Block4k2,
        NamedKind::Block4k,
        NamedKind::BorderedIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedKind::Identity => "identity",
            NamedKind::Zero => "zero",
            NamedKind::AllOnes => "all_ones",
            NamedKind::CompleteGraph => "complete_graph",
            NamedKind::R => "R",
            NamedKind::F => "F",
            NamedKind::G => "G",
            NamedKind::M1 => "M1",
            NamedKind::M2 => "M2",
            NamedKind::MAsa => "M_ASA",
            NamedKind::MAsaa => "M_ASAA",
            NamedKind::Block4k2 => "block_4k2",
            NamedKind::Block4k => "block_4k",
            NamedKind::BorderedIdentity => "bordered_identity",
        }
    }

    pub fn from_name(name: &str) -> Option<NamedKind> {
        NamedKind::ALL.into_iter().find(|k| k.name() == name)
    }

    fn arity(self) -> usize {
        match self {
            NamedKind::MAsa | NamedKind::MAsaa => 0,
            NamedKind::R => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for NamedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn bad(kind: NamedKind, reason: impl Into<String>) -> Error {
    Error::BadParameters {
        kind: kind.name().to_string(),
        reason: reason.into(),
    }
}

fn bit(b: bool) -> Elem {
    if b {
        Elem::ONE
    } else {
        Elem::ZERO
    }
}

/// Builds a named matrix from its kind and integer parameters.
pub fn construct_named(kind: NamedKind, params: &[usize], field: Field) -> Result<SymMatrix> {
    if params.len() != kind.arity() {
        return Err(bad(
            kind,
            format!("expected {} parameter(s), got {}", kind.arity(), params.len()),
        ));
    }
    let n = params.first().copied().unwrap_or(0);
    match kind {
        NamedKind::Identity => Ok(SymMatrix::identity(field, n)),
        NamedKind::Zero => Ok(SymMatrix::zeros(field, n)),
        NamedKind::AllOnes => Ok(all_ones(field, n)),
        NamedKind::CompleteGraph => Ok(complete_graph(field, n)),
        NamedKind::R => r_matrix(field, n, params[1]),
        NamedKind::F => f_matrix(field, n),
        NamedKind::G => g_matrix(field, n),
        NamedKind::M1 => m1(field, n),
        NamedKind::M2 => m2(field, n),
        NamedKind::MAsa => Ok(m_asa(field)),
        NamedKind::MAsaa => Ok(m_asaa(field)),
        NamedKind::Block4k2 => block_4k2(field, n),
        NamedKind::Block4k => block_4k(field, n),
        NamedKind::BorderedIdentity => bordered_identity(field, n),
    }
}

pub fn all_ones(field: Field, n: usize) -> SymMatrix {
    SymMatrix::from_upper_fn(field, n, |_, _| Elem::ONE)
}

pub fn complete_graph(field: Field, n: usize) -> SymMatrix {
    SymMatrix::from_upper_fn(field, n, |i, j| bit(i != j))
}

/// `R_{n,k}`: identity on the first `k` positions, complete graph on the
/// rest, all ones between. `R_{n,n} = I_n` and `R_{n,0} = A(K_n)`.
pub fn r_matrix(field: Field, n: usize, k: usize) -> Result<SymMatrix> {
    if n == 0 || k > n {
        return Err(bad(NamedKind::R, format!("need 0 <= k <= n, n >= 1; got n={n}, k={k}")));
    }
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| {
        if i < k && j < k {
            bit(i == j)
        } else if i < k {
            Elem::ONE
        } else {
            bit(i != j)
        }
    }))
}

/// `F_n`: `A(K_n)` with entry (1,1) replaced by 1. `F_1 = [1]`.
pub fn f_matrix(field: Field, n: usize) -> Result<SymMatrix> {
    if n == 0 {
        return Err(bad(NamedKind::F, "need n >= 1"));
    }
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| bit(i != j || i == 0)))
}

pub fn g_matrix(field: Field, n: usize) -> Result<SymMatrix> {
    if n < 2 {
        return Err(bad(NamedKind::G, "need n >= 2"));
    }
    let f = f_matrix(field, n - 1)?;
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| match (i, j) {
        (0, 0) | (0, 1) => Elem::ONE,
        (0, _) => Elem::ZERO,
        _ => f.get(i - 1, j - 1),
    }))
}

pub fn m1(field: Field, n: usize) -> Result<SymMatrix> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(bad(NamedKind::M1, format!("need even n >= 2, got {n}")));
    }
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| bit(i % 2 == 0 && j == i + 1)))
}

pub fn m2(field: Field, n: usize) -> Result<SymMatrix> {
    if n < 3 || n % 2 != 1 {
        return Err(bad(NamedKind::M2, format!("need odd n >= 3, got {n}")));
    }
    let inner = m1(field, n - 1)?;
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| {
        if j == n - 1 {
            bit(i != n - 1)
        } else {
            inner.get(i, j)
        }
    }))
}

pub fn m_asa(field: Field) -> SymMatrix {
    SymMatrix::from_upper_fn(field, 3, |i, j| bit(i == j || j == 2))
}

pub fn m_asaa(field: Field) -> SymMatrix {
    SymMatrix::from_upper_fn(field, 4, |i, j| bit(i == j || (i < 2 && j >= 2)))
}

pub fn block_4k2(field: Field, n: usize) -> Result<SymMatrix> {
    if n < 6 || n % 4 != 2 {
        return Err(bad(NamedKind::Block4k2, format!("need n = 2 (mod 4), n >= 6; got {n}")));
    }
    let m = n / 2;
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| {
        if j < m {
            Elem::ONE
        } else if i < m {
            bit(j - m == i)
        } else {
            bit(i == j)
        }
    }))
}

pub fn block_4k(field: Field, n: usize) -> Result<SymMatrix> {
    if n < 8 || !n.is_multiple_of(4) {
        return Err(bad(NamedKind::Block4k, format!("need n = 0 (mod 4), n >= 8; got {n}")));
    }
    let top = n / 2 - 1;
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| {
        if j < top {
            Elem::ONE
        } else if i < top {
            let c = j - top;
            bit(c == i || c >= top)
        } else {
            bit(i == j)
        }
    }))
}

pub fn bordered_identity(field: Field, n: usize) -> Result<SymMatrix> {
    if n < 3 {
        return Err(bad(NamedKind::BorderedIdentity, "need n >= 3"));
    }
    let k = n - 2;
    Ok(SymMatrix::from_upper_fn(field, n, |i, j| {
        bit(i == j || (i < k && j >= k))
    }))
}
