//! GF(2) elimination on bit-packed rows.
//!
//! A row of an order-`n` matrix occupies `words = ceil(n / 64)` machine words,
//! column `j` at bit `j % 64` of word `j / 64`. Row operations are word XORs.

#[inline]
fn bit(rows: &[u64], words: usize, r: usize, c: usize) -> bool {
    rows[r * words + c / 64] >> (c % 64) & 1 == 1
}

fn swap_rows(rows: &mut [u64], words: usize, a: usize, b: usize) {
    if a != b {
        for w in 0..words {
            rows.swap(a * words + w, b * words + w);
        }
    }
}

fn xor_row(rows: &mut [u64], words: usize, dst: usize, src: usize) {
    for w in 0..words {
        let s = rows[src * words + w];
        rows[dst * words + w] ^= s;
    }
}

/// Reduces `rows` (nrows x ncols) to row echelon form in place and returns
/// the rank. Pivots are taken from the first row at or below the current one.
pub(crate) fn echelon(rows: &mut [u64], nrows: usize, ncols: usize, words: usize) -> usize {
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| bit(rows, words, r, c)) else {
            continue;
        };
        swap_rows(rows, words, rank, p);
        for r in rank + 1..nrows {
            if bit(rows, words, r, c) {
                xor_row(rows, words, r, rank);
            }
        }
        rank += 1;
    }
    rank
}

/// `true` when the square matrix is nonsingular. Consumes `rows` as scratch.
pub(crate) fn nonsingular(rows: &mut [u64], n: usize, words: usize) -> bool {
    echelon(rows, n, n, words) == n
}

/// Whether the principal submatrix on the positions in `mask` is nonsingular,
/// for matrices of order at most 64 stored one word per row.
///
/// Rows are restricted to the mask columns rather than compressed; the
/// selected rows are independent exactly when the principal minor is
/// nonzero. `scratch` must hold at least `mask.count_ones()` words.
#[inline]
pub(crate) fn masked_nonsingular(rows: &[u64], mask: u64, scratch: &mut [u64]) -> bool {
    let mut k = 0;
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        scratch[k] = rows[i] & mask;
        k += 1;
        m &= m - 1;
    }
    let buf = &mut scratch[..k];
    let mut cols = mask;
    for r in 0..k {
        let c = cols & cols.wrapping_neg();
        cols ^= c;
        let Some(p) = (r..k).find(|&q| buf[q] & c != 0) else {
            return false;
        };
        buf.swap(r, p);
        let pivot = buf[r];
        for q in buf[r + 1..].iter_mut() {
            if *q & c != 0 {
                *q ^= pivot;
            }
        }
    }
    true
}
