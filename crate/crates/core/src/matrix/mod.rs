//! Symmetric matrices over small binary fields.
//!
//! GF(2) matrices are stored bit-packed, one machine word per 64 columns of
//! each row, and their determinants and ranks come from XOR elimination.
//! Matrices over larger fields are stored densely and use generic
//! elimination. Both paths are exact.

pub(crate) mod dense;
mod index;
pub mod named;
pub(crate) mod packed;
mod text;

use std::fmt;

pub use index::IndexSet;
pub use named::{construct_named, NamedKind};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone)]
enum Store {
    Packed { words: usize, bits: Vec<u64> },
    Dense(Vec<Elem>),
}

/// An `n x n` symmetric matrix over a [`Field`].
///
/// Values are immutable; every operation returns a new matrix. Order 0 is
/// allowed and has determinant 1.
#[derive(Clone)]
pub struct SymMatrix {
    field: Field,
    order: usize,
    store: Store,
}

/// Result of [`SymMatrix::schur_complement`].
#[derive(Clone, Debug, PartialEq)]
pub struct SchurComplement {
    pub matrix: SymMatrix,
    /// `labels.as_slice()[i]` is the position in the original matrix that
    /// row `i` of `matrix` came from.
    pub labels: IndexSet,
}

impl SymMatrix {
    /// Validates a square, symmetric grid whose entries belong to `field`.
    pub fn new(field: Field, rows: Vec<Vec<Elem>>) -> Result<SymMatrix> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for &v in row {
                field.elem(v.bits() as u32)?;
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for j in i + 1..n {
                if row[j] != rows[j][i] {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix::from_upper_fn(field, n, |i, j| rows[i][j]))
    }

    /// Builds from the upper triangle: `f(i, j)` is called for `i <= j` only
    /// and mirrored. Entries are assumed to be valid elements of `field`.
    pub fn from_upper_fn(field: Field, n: usize, mut f: impl FnMut(usize, usize) -> Elem) -> SymMatrix {
        if field.is_gf2() {
            let words = n.div_ceil(64);
            let mut bits = vec![0u64; n * words];
            for i in 0..n {
                for j in i..n {
                    if !f(i, j).is_zero() {
                        bits[i * words + j / 64] |= 1 << (j % 64);
                        bits[j * words + i / 64] |= 1 << (i % 64);
                    }
                }
            }
            SymMatrix {
                field,
                order: n,
                store: Store::Packed { words, bits },
            }
        } else {
            let mut data = vec![Elem::ZERO; n * n];
            for i in 0..n {
                for j in i..n {
                    let v = f(i, j);
                    data[i * n + j] = v;
                    data[j * n + i] = v;
                }
            }
            SymMatrix {
                field,
                order: n,
                store: Store::Dense(data),
            }
        }
    }

    /// Rows of whitespace-separated element symbols, e.g. `["1 z", "z 0"]`.
    pub fn parse_rows(field: Field, rows: &[&str]) -> Result<SymMatrix> {
        let grid = rows
            .iter()
            .map(|row| {
                row.split_whitespace()
                    .map(|s| field.parse_symbol(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SymMatrix::new(field, grid)
    }

    /// GF(2) matrix from bit rows: bit `j` of `rows[i]` is entry `(i, j)`.
    /// Only the upper triangle is read.
    pub fn from_gf2_rows(rows: &[u64]) -> SymMatrix {
        let n = rows.len();
        assert!(n <= 64, "bit rows hold at most 64 columns");
        SymMatrix::from_upper_fn(Field::GF2, n, |i, j| Elem::from_bits((rows[i] >> j & 1) as u8))
    }

    pub fn identity(field: Field, n: usize) -> SymMatrix {
        SymMatrix::from_upper_fn(field, n, |i, j| if i == j { Elem::ONE } else { Elem::ZERO })
    }

    pub fn zeros(field: Field, n: usize) -> SymMatrix {
        SymMatrix::from_upper_fn(field, n, |_, _| Elem::ZERO)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        assert!(i < self.order && j < self.order, "entry ({i}, {j}) out of range");
        match &self.store {
            Store::Packed { words, bits } => Elem::from_bits((bits[i * words + j / 64] >> (j % 64) & 1) as u8),
            Store::Dense(data) => data[i * self.order + j],
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn to_buffer(&self) -> Vec<Elem> {
        (0..self.order)
            .flat_map(|i| (0..self.order).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect()
    }

    pub fn diagonal(&self) -> Vec<Elem> {
        (0..self.order).map(|i| self.get(i, i)).collect()
    }

    pub fn has_zero_diagonal_entry(&self) -> bool {
        (0..self.order).any(|i| self.get(i, i).is_zero())
    }

    /// One word per row for GF(2) matrices of order at most 64.
    pub fn gf2_rows(&self) -> Option<&[u64]> {
        match &self.store {
            Store::Packed { words: 1, bits } => Some(bits),
            Store::Packed { words: 0, bits } => Some(bits),
            _ => None,
        }
    }

    /// Same matrix forced onto the generic dense representation, so GF(2)
    /// arithmetic runs through the field-generic elimination instead of the
    /// bit-packed one.
    pub fn with_dense_storage(&self) -> SymMatrix {
        SymMatrix {
            field: self.field,
            order: self.order,
            store: Store::Dense(self.to_buffer()),
        }
    }

    pub fn is_bit_packed(&self) -> bool {
        matches!(self.store, Store::Packed { .. })
    }

    pub fn determinant(&self) -> Elem {
        match &self.store {
            Store::Packed { words, bits } => {
                let mut scratch = bits.clone();
                Elem::from_bits(packed::nonsingular(&mut scratch, self.order, *words) as u8)
            }
            Store::Dense(data) => dense::det_in_place(self.field, &mut data.clone(), self.order),
        }
    }

    pub fn is_singular(&self) -> bool {
        self.determinant().is_zero()
    }

    pub fn rank(&self) -> usize {
        match &self.store {
            Store::Packed { words, bits } => packed::echelon(&mut bits.clone(), self.order, self.order, *words),
            Store::Dense(data) => dense::rank_in_place(self.field, &mut data.clone(), self.order, self.order),
        }
    }

    /// `B[alpha]`.
    pub fn principal_submatrix(&self, alpha: &IndexSet) -> Result<SymMatrix> {
        alpha.check_bounds(self.order)?;
        let idx = alpha.as_slice();
        Ok(self.sub_from(idx))
    }

    fn sub_from(&self, idx: &[usize]) -> SymMatrix {
        let k = idx.len();
        let sub = SymMatrix::from_upper_fn(self.field, k, |i, j| self.get(idx[i], idx[j]));
        if self.is_bit_packed() {
            sub
        } else {
            sub.with_dense_storage()
        }
    }

    /// `det B[alpha]`; the empty set gives 1.
    pub fn principal_minor(&self, alpha: &IndexSet) -> Result<Elem> {
        Ok(self.principal_submatrix(alpha)?.determinant())
    }

    /// Determinant of the (possibly non-principal) submatrix `B[rows | cols]`.
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Elem> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        rows.check_bounds(self.order)?;
        cols.check_bounds(self.order)?;
        let k = rows.len();
        let mut buf: Vec<Elem> = rows
            .iter()
            .flat_map(|i| cols.iter().map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Ok(dense::det_in_place(self.field, &mut buf, k))
    }

    pub fn inverse(&self) -> Result<SymMatrix> {
        let n = self.order;
        let inv = dense::inverse(self.field, &self.to_buffer(), n).ok_or(Error::Singular)?;
        Ok(self.same_storage(SymMatrix::from_upper_fn(self.field, n, |i, j| inv[i * n + j])))
    }

    fn same_storage(&self, m: SymMatrix) -> SymMatrix {
        if self.is_bit_packed() || !m.is_bit_packed() {
            m
        } else {
            m.with_dense_storage()
        }
    }

    /// `B / B[alpha] = B(alpha) - B[alpha^c, alpha] B[alpha]^-1 B[alpha, alpha^c]`.
    ///
    /// Rows of the result keep the relative order of the positions outside
    /// `alpha`; [`SchurComplement::labels`] records where each came from.
    pub fn schur_complement(&self, alpha: &IndexSet) -> Result<SchurComplement> {
        alpha.check_bounds(self.order)?;
        let f = self.field;
        let k = alpha.len();
        let a: Vec<Elem> = alpha
            .iter()
            .flat_map(|i| alpha.iter().map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        let a_inv = dense::inverse(f, &a, k).ok_or_else(|| Error::SingularPivot(alpha.to_string()))?;
        let beta = alpha.complement(self.order);
        let m = beta.len();
        // P = B[beta, alpha], m x k.
        let p: Vec<Elem> = beta
            .iter()
            .flat_map(|i| alpha.iter().map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        let p_t: Vec<Elem> = (0..k)
            .flat_map(|t| (0..m).map(move |i| (i, t)))
            .map(|(i, t)| p[i * k + t])
            .collect();
        let correction = dense::mul(f, &dense::mul(f, &p, &a_inv, m, k, k), &p_t, m, k, m);
        let b = beta.as_slice();
        let matrix = SymMatrix::from_upper_fn(f, m, |i, j| f.sub(self.get(b[i], b[j]), correction[i * m + j]));
        debug_assert!((0..m).all(|i| (0..m).all(|j| correction[i * m + j] == correction[j * m + i])));
        Ok(SchurComplement {
            matrix: self.same_storage(matrix),
            labels: beta,
        })
    }

    /// Block diagonal `self (+) other`.
    pub fn direct_sum(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let p = self.order;
        Ok(SymMatrix::from_upper_fn(self.field, p + other.order, |i, j| {
            if j < p {
                self.get(i, j)
            } else if i >= p {
                other.get(i - p, j - p)
            } else {
                Elem::ZERO
            }
        }))
    }

    /// Copies the last row down and then the last column across.
    pub fn append_duplicate_last(&self) -> Result<SymMatrix> {
        let n = self.order;
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let src = |i: usize| if i == n { n - 1 } else { i };
        Ok(SymMatrix::from_upper_fn(self.field, n + 1, |i, j| {
            self.get(src(i), src(j))
        }))
    }

    /// `self (+) [0]`.
    pub fn append_zero(&self) -> SymMatrix {
        self.direct_sum(&SymMatrix::zeros(self.field, 1)).expect("same field")
    }

    /// `E B E^T` for a square `e` of matching order; symmetric by construction.
    pub fn congruent(&self, e: &[Vec<Elem>]) -> Result<SymMatrix> {
        let n = self.order;
        for (i, row) in e.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        if e.len() != n {
            return Err(Error::SizeMismatch { rows: e.len(), cols: n });
        }
        let f = self.field;
        let eb: Vec<Elem> = e.iter().flatten().copied().collect();
        let e_t: Vec<Elem> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| e[j][i])
            .collect();
        let prod = dense::mul(f, &dense::mul(f, &eb, &self.to_buffer(), n, n, n), &e_t, n, n, n);
        Ok(self.same_storage(SymMatrix::from_upper_fn(f, n, |i, j| prod[i * n + j])))
    }

    /// `self * other` as a plain row-major grid (products of symmetric
    /// matrices need not be symmetric).
    pub fn product(&self, other: &SymMatrix) -> Result<Vec<Vec<Elem>>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.order != other.order {
            return Err(Error::SizeMismatch {
                rows: self.order,
                cols: other.order,
            });
        }
        let n = self.order;
        let prod = dense::mul(self.field, &self.to_buffer(), &other.to_buffer(), n, n, n);
        Ok(prod.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect())
    }
}

/// Square general (not necessarily symmetric) matrices, for invertibility
/// tests of congruence transforms.
pub fn is_invertible(field: Field, e: &[Vec<Elem>]) -> bool {
    let n = e.len();
    let mut buf: Vec<Elem> = e.iter().flatten().copied().collect();
    buf.len() == n * n && !dense::det_in_place(field, &mut buf, n).is_zero()
}

impl PartialEq for SymMatrix {
    fn eq(&self, other: &SymMatrix) -> bool {
        self.field == other.field
            && self.order == other.order
            && (0..self.order).all(|i| (i..self.order).all(|j| self.get(i, j) == other.get(i, j)))
    }
}

impl Eq for SymMatrix {}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix({}, ", self.field)?;
        f.debug_list()
            .entries((0..self.order).map(|i| {
                (0..self.order)
                    .map(|j| {
                        let v = self.get(i, j);
                        self.field
                            .symbol(v)
                            .map(str::to_string)
                            .unwrap_or_else(|| v.bits().to_string())
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()?;
        f.write_str(")")
    }
}
