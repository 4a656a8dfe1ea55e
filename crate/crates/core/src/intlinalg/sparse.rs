//! Incremental echelon forms over sparse rows.
//!
//! Rows are `(column, value)` lists sorted by column with no zero values.
//! The pivot of a row is its smallest column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{smith_normal_form, IntMatrix};
use crate::polycore::FieldCoefficient;

pub type SparseRow<T> = Vec<(usize, T)>;

/// `a + f * b`, dropping zeros.
fn axpy<T>(a: &[(usize, T)], f: &T, b: &[(usize, T)]) -> SparseRow<T>
where
    T: Clone + Zero + for<'x> std::ops::Mul<&'x T, Output = T>,
{
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = b[j].1.clone() * f;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() + b[j].1.clone() * f;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry<T>(row: &[(usize, T)], col: usize) -> Option<&T> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// Reduced row echelon form over a field, built one vector at a time.
///
/// Every stored row has a unit pivot and is zero in all other pivot columns.
#[derive(Clone, Debug)]
pub struct FieldEchelon<F> {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow<F>>,
}

impl<F: FieldCoefficient> FieldEchelon<F> {
    pub fn new(ncols: usize) -> Self {
        FieldEchelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Stored rows keyed by pivot column, in ascending pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow<F>)> + '_ {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// Residue of `v` modulo the row space; supported on non-pivot columns only.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseRow<F> {
        let mut out: SparseRow<F> = v
            .iter()
            .filter(|(c, x)| !x.is_zero() && !self.is_pivot(*c))
            .cloned()
            .collect();
        for (c, x) in v {
            if x.is_zero() {
                continue;
            }
            if let Some(row) = self.rows.get(c) {
                out = axpy(&out, &-x.clone(), &row[1..]);
            }
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank went up.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let residue = self.reduce(v);
        let Some((pivot, lead)) = residue.first().cloned() else {
            return false;
        };
        let inv = lead.inv();
        let row: SparseRow<F> = residue.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        for other in self.rows.values_mut() {
            if let Some(x) = entry(other, pivot) {
                let f = -x.clone();
                *other = axpy(other, &f, &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }
}

/// Row echelon basis of a sublattice of `ZZ^ncols`, built one vector at a time
/// by unimodular row operations. Pivots are positive; unit-pivot columns are
/// kept clear in the other rows.
#[derive(Clone, Debug)]
pub struct IntegerEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow<BigInt>>,
}

impl IntegerEchelon {
    pub fn new(ncols: usize) -> Self {
        IntegerEchelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow<BigInt>)> + '_ {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    pub fn insert(&mut self, v: &[(usize, BigInt)]) -> bool {
        let mut v: SparseRow<BigInt> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut leading_free = false;
        let mut cursor = 0;
        loop {
            let pos = v.partition_point(|(c, _)| *c < cursor);
            let Some((c, x)) = v.get(pos).cloned() else {
                break;
            };
            cursor = c + 1;
            let Some(row) = self.rows.get(&c) else {
                leading_free = true;
                continue;
            };
            let a = row[0].1.clone();
            if leading_free || x.is_multiple_of(&a) {
                let q = x.div_floor(&a);
                v = axpy(&v, &-q, row);
                continue;
            }
            // v leads at c and a does not divide x: replace the row by the gcd combination.
            let ext = a.extended_gcd(&x);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let combined = axpy(&scale(row, &s), &t, &v);
            let rest = axpy(&scale(&v, &(&a / &g)), &-(&x / &g), row);
            self.rows.insert(c, positive(combined));
            if g.is_one() {
                self.clear_column(c);
            }
            v = rest;
        }
        let Some((pivot, _)) = v.first().cloned() else {
            return false;
        };
        let row = positive(v);
        let unit = row[0].1.is_one();
        self.rows.insert(pivot, row);
        if unit {
            self.clear_column(pivot);
        }
        true
    }

    fn clear_column(&mut self, pivot: usize) {
        let row = self.rows[&pivot].clone();
        for (p, other) in self.rows.range_mut(..pivot) {
            debug_assert!(*p < pivot);
            if let Some(x) = entry(other, pivot) {
                let f = -x.clone();
                *other = axpy(other, &f, &row);
            }
        }
    }

    pub fn pivots_are_units(&self) -> bool {
        self.rows.values().all(|r| r[0].1.is_one())
    }

    /// Nonzero invariant factors of the lattice (Smith diagonal of the row basis).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let units: Vec<usize> = self
            .rows
            .iter()
            .filter(|(_, r)| r[0].1.is_one())
            .map(|(p, _)| *p)
            .collect();
        let mut factors = vec![BigInt::one(); units.len()];
        let mut rest: Vec<SparseRow<BigInt>> = Vec::new();
        for row in self.rows.values().filter(|r| !r[0].1.is_one()) {
            let mut row = row.clone();
            for p in &units {
                if let Some(x) = entry(&row, *p) {
                    let f = -x.clone();
                    row = axpy(&row, &f, &self.rows[p]);
                }
            }
            rest.push(row);
        }
        if rest.is_empty() {
            return factors;
        }
        let keep: Vec<usize> = (0..self.ncols)
            .filter(|c| units.binary_search(c).is_err())
            .collect();
        let dense: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); keep.len()];
                for (c, x) in r {
                    let j = keep.binary_search(c).expect("unit column was cleared");
                    d[j] = x.clone();
                }
                d
            })
            .collect();
        let snf = smith_normal_form(&IntMatrix::from_rows_with_cols(&dense, keep.len()));
        factors.extend(snf.diagonal.into_iter().filter(|d| !d.is_zero()));
        factors
    }

    /// Hermite-reduces the entries above each pivot into `[0, pivot)`.
    pub fn hermite_reduce(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &p in &pivots {
            let row = self.rows[&p].clone();
            let a = row[0].1.clone();
            for (_, other) in self.rows.range_mut(..p) {
                if let Some(x) = entry(other, p) {
                    let q = x.div_floor(&a);
                    if !q.is_zero() {
                        *other = axpy(other, &-q, &row);
                    }
                }
            }
        }
    }
}

fn scale(row: &[(usize, BigInt)], f: &BigInt) -> SparseRow<BigInt> {
    if f.is_zero() {
        return Vec::new();
    }
    row.iter().map(|(c, x)| (*c, x * f)).collect()
}

fn positive(row: SparseRow<BigInt>) -> SparseRow<BigInt> {
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        row.into_iter().map(|(c, x)| (c, -x)).collect()
    } else {
        row
    }
}

/// Solves `a x = b` over a field by Gauss-Jordan elimination; `None` when inconsistent.
/// Free variables are set to zero.
pub fn solve_linear<F: FieldCoefficient>(a: &[Vec<F>], b: &[F], ncols: usize) -> Option<Vec<F>> {
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(f.clone() * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (i, c) in pivots.into_iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}
