//! Exact linear algebra over ZZ, QQ and ZZ/2.

mod matrix;
mod smith;
mod sparse;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, smith_normal_form_with_transforms, SmithForm};
pub use sparse::{solve_linear, FieldEchelon, IntegerEchelon, SparseRow};

/// Rank over QQ by fraction-free (Bareiss) elimination.
pub fn rank_over_rationals(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v.div_floor(&prev);
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of the reduction mod 2.
pub fn rank_mod2(m: &IntMatrix) -> usize {
    let words = m.cols().div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            let mut bits = vec![0u64; words];
            for (j, x) in m.row(i).iter().enumerate() {
                if x.is_odd() {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[w] & b != 0 {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of `{v : M v = 0}` over ZZ, in Hermite normal form (so each vector is primitive).
/// Empty iff `M` has full column rank.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut echelon = IntegerEchelon::new(rows + cols);
    for j in 0..cols {
        let mut v: SparseRow<BigInt> = (0..rows)
            .filter(|&i| !m[(i, j)].is_zero())
            .map(|i| (i, m[(i, j)].clone()))
            .collect();
        v.push((rows + j, BigInt::from(1)));
        echelon.insert(&v);
    }
    // Rows leading in the identity block have zero image; restrict to that block.
    let mut kernel = IntegerEchelon::new(cols);
    for (p, row) in echelon.rows() {
        if p >= rows {
            let v: SparseRow<BigInt> = row.iter().map(|(c, x)| (c - rows, x.clone())).collect();
            kernel.insert(&v);
        }
    }
    kernel.hermite_reduce();
    kernel
        .rows()
        .map(|(_, row)| {
            let mut d = vec![BigInt::zero(); cols];
            for (c, x) in row {
                d[*c] = x.clone();
            }
            d
        })
        .collect()
}
