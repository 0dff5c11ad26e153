//! Independent oracles for the integration tests.
//!
//! Nothing here calls into the library's elimination routines. Determinants
//! come from cofactor expansion or from the Ryser parity formula, GF(4)
//! products come from the `(a + b z)(c + d z)` expansion with `z^2 = z + 1`,
//! and sequences come from enumerating index combinations directly.
#![allow(dead_code)]

/// Element values 0, 1, 2 = z, 3 = z + 1.
pub fn gf4_mul(x: u8, y: u8) -> u8 {
    let (a, b) = (x & 1, (x >> 1) & 1);
    let (c, d) = (y & 1, (y >> 1) & 1);
    // (a + bz)(c + dz) = ac + (ad + bc) z + bd z^2, and z^2 = z + 1.
    let constant = (a & c) ^ (b & d);
    let linear = (a & d) ^ (b & c) ^ (b & d);
    constant | (linear << 1)
}

pub fn gf4_inv(x: u8) -> Option<u8> {
    (1..4).find(|&y| gf4_mul(x, y) == 1)
}

pub fn gf2_mul(x: u8, y: u8) -> u8 {
    x & y
}

/// Cofactor expansion along the first row. Signs vanish in characteristic 2.
pub fn laplace_det(grid: &[Vec<u8>], mul: fn(u8, u8) -> u8) -> u8 {
    let n = grid.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return grid[0][0];
    }
    let mut acc = 0u8;
    for col in 0..n {
        let a = grid[0][col];
        if a == 0 {
            continue;
        }
        let sub: Vec<Vec<u8>> = grid[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        acc ^= mul(a, laplace_det(&sub, mul));
    }
    acc
}

/// det over GF(2) equals the permanent mod 2; Ryser's formula mod 2 reduces
/// to an XOR over column subsets of the AND over rows of row-sum parities.
pub fn ryser_det_gf2(rows: &[u64], n: usize) -> u8 {
    let mut acc = 0u8;
    for s in 0u64..(1u64 << n) {
        let prod = rows[..n].iter().all(|&r| (r & s).count_ones() % 2 == 1);
        acc ^= prod as u8;
    }
    acc
}

pub fn submatrix(grid: &[Vec<u8>], rows: &[usize], cols: &[usize]) -> Vec<Vec<u8>> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| grid[i][j]).collect())
        .collect()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// epr-sequence by enumerating every principal minor with cofactor expansion.
pub fn naive_epr(grid: &[Vec<u8>], mul: fn(u8, u8) -> u8) -> String {
    let n = grid.len();
    (1..=n)
        .map(|k| {
            let (mut nonzero, mut zero) = (false, false);
            for idx in combinations(n, k) {
                if laplace_det(&submatrix(grid, &idx, &idx), mul) != 0 {
                    nonzero = true;
                } else {
                    zero = true;
                }
            }
            match (nonzero, zero) {
                (true, false) => 'A',
                (false, true) => 'N',
                _ => 'S',
            }
        })
        .collect()
}

/// GF(2) epr-sequence through the Ryser parity determinant; usable to n = 12.
pub fn ryser_epr(grid: &[Vec<u8>]) -> String {
    let n = grid.len();
    (1..=n)
        .map(|k| {
            let (mut nonzero, mut zero) = (false, false);
            for idx in combinations(n, k) {
                let rows: Vec<u64> = idx
                    .iter()
                    .map(|&i| {
                        idx.iter()
                            .enumerate()
                            .fold(0u64, |acc, (c, &j)| acc | ((grid[i][j] as u64 & 1) << c))
                    })
                    .collect();
                if ryser_det_gf2(&rows, k) != 0 {
                    nonzero = true;
                } else {
                    zero = true;
                }
            }
            match (nonzero, zero) {
                (true, false) => 'A',
                (false, true) => 'N',
                _ => 'S',
            }
        })
        .collect()
}

/// pr-sequence rendered as `r0]bits`.
pub fn naive_pr(grid: &[Vec<u8>], mul: fn(u8, u8) -> u8) -> String {
    let n = grid.len();
    let r0 = if (0..n).any(|i| grid[i][i] == 0) { '1' } else { '0' };
    let bits: String = (1..=n)
        .map(|k| {
            let any = combinations(n, k)
                .into_iter()
                .any(|idx| laplace_det(&submatrix(grid, &idx, &idx), mul) != 0);
            if any {
                '1'
            } else {
                '0'
            }
        })
        .collect();
    format!("{r0}]{bits}")
}

/// Every symmetric GF(q) grid of order `n`, q = 2 or 4, upper triangle read
/// row-major as base-q digits of a counter.
pub fn all_symmetric(n: usize, q: u8) -> impl Iterator<Item = Vec<Vec<u8>>> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let total = (q as u64).pow(cells.len() as u32);
    (0..total).map(move |mut code| {
        let mut g = vec![vec![0u8; n]; n];
        for &(i, j) in &cells {
            let v = (code % q as u64) as u8;
            code /= q as u64;
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    })
}

pub fn direct_sum(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let (p, q) = (a.len(), b.len());
    let mut g = vec![vec![0u8; p + q]; p + q];
    for i in 0..p {
        for j in 0..p {
            g[i][j] = a[i][j];
        }
    }
    for i in 0..q {
        for j in 0..q {
            g[p + i][p + j] = b[i][j];
        }
    }
    g
}

pub fn identity(n: usize) -> Vec<Vec<u8>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as u8).collect()).collect()
}

/// Parses rows like "1 z w 0" with 0, 1, z, w symbols.
pub fn grid(text: &[&str]) -> Vec<Vec<u8>> {
    text.iter()
        .map(|row| {
            row.split_whitespace()
                .map(|s| match s {
                    "0" => 0,
                    "1" => 1,
                    "z" => 2,
                    "w" => 3,
                    other => panic!("bad symbol {other}"),
                })
                .collect()
        })
        .collect()
}
