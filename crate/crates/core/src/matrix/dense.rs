//! Gaussian elimination over an arbitrary [`Field`] on row-major element
//! buffers. No row scaling: pivots are inverted exactly where needed.

use crate::field::{Elem, Field};

/// Determinant of the `n x n` row-major buffer, destroying it.
///
/// Leftmost nonzero pivot per column, first candidate row wins. Row swaps
/// flip no sign in characteristic 2, so the determinant is the pivot product.
pub(crate) fn det_in_place(field: Field, a: &mut [Elem], n: usize) -> Elem {
    let mut det = Elem::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
            return Elem::ZERO;
        };
        if p != c {
            for j in 0..n {
                a.swap(c * n + j, p * n + j);
            }
        }
        let pivot = a[c * n + c];
        det = field.mul(det, pivot);
        let pinv = field.inv(pivot).expect("pivot is nonzero");
        for r in c + 1..n {
            let lead = a[r * n + c];
            if lead.is_zero() {
                continue;
            }
            let factor = field.mul(lead, pinv);
            for j in c..n {
                let v = field.mul(factor, a[c * n + j]);
                a[r * n + j] = field.sub(a[r * n + j], v);
            }
        }
    }
    det
}

/// Rank of a `rows x cols` buffer, destroying it.
pub(crate) fn rank_in_place(field: Field, a: &mut [Elem], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(rank * cols + j, p * cols + j);
            }
        }
        let pinv = field.inv(a[rank * cols + c]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let lead = a[r * cols + c];
            if lead.is_zero() {
                continue;
            }
            let factor = field.mul(lead, pinv);
            for j in c..cols {
                let v = field.mul(factor, a[rank * cols + j]);
                a[r * cols + j] = field.sub(a[r * cols + j], v);
            }
        }
        rank += 1;
    }
    rank
}

/// Gauss-Jordan inverse of an `n x n` buffer; `None` when singular.
pub(crate) fn inverse(field: Field, a: &[Elem], n: usize) -> Option<Vec<Elem>> {
    let w = 2 * n;
    let mut aug = vec![Elem::ZERO; n * w];
    for i in 0..n {
        aug[i * w..i * w + n].copy_from_slice(&a[i * n..(i + 1) * n]);
        aug[i * w + n + i] = Elem::ONE;
    }
    for c in 0..n {
        let p = (c..n).find(|&r| !aug[r * w + c].is_zero())?;
        if p != c {
            for j in 0..w {
                aug.swap(c * w + j, p * w + j);
            }
        }
        let pinv = field.inv(aug[c * w + c]).expect("pivot is nonzero");
        for j in 0..w {
            aug[c * w + j] = field.mul(aug[c * w + j], pinv);
        }
        for r in 0..n {
            if r == c {
                continue;
            }
            let lead = aug[r * w + c];
            if lead.is_zero() {
                continue;
            }
            for j in 0..w {
                let v = field.mul(lead, aug[c * w + j]);
                aug[r * w + j] = field.sub(aug[r * w + j], v);
            }
        }
    }
    Some((0..n).flat_map(|i| aug[i * w + n..(i + 1) * w].to_vec()).collect())
}

/// `(m x k) * (k x n)`.
pub(crate) fn mul(field: Field, a: &[Elem], b: &[Elem], m: usize, k: usize, n: usize) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; m * n];
    for i in 0..m {
        for t in 0..k {
            let x = a[i * k + t];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = field.add(out[i * n + j], field.mul(x, b[t * n + j]));
            }
        }
    }
    out
}
