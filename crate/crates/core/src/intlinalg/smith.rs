use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Diagonal `d_1 | d_2 | ...` of length `min(rows, cols)`, with optional
/// unimodular `U`, `V` such that `U * M * V` is the diagonal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithForm {
    /// Diagonal entries greater than one: the torsion of the cokernel.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .cloned()
            .collect()
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith(m, false)
}

pub fn smith_normal_form_with_transforms(m: &IntMatrix) -> SmithForm {
    smith(m, true)
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, f: &BigInt) {
        self.a.add_row_multiple(target, source, f);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(target, source, f);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, f: &BigInt) {
        self.a.add_col_multiple(target, source, f);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(target, source, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }
}

fn smith(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: with_transforms.then(|| IntMatrix::identity(rows)),
        v: with_transforms.then(|| IntMatrix::identity(cols)),
    };
    let steps = rows.min(cols);
    for t in 0..steps {
        while let Some((pi, pj)) = min_pivot(&w.a, t) {
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let mut clean = true;
            let p = w.a[(t, t)].clone();
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = w.a[(i, t)].div_floor(&p);
                w.add_row(i, t, &-q);
                clean &= w.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = w.a[(t, j)].div_floor(&p);
                w.add_col(j, t, &-q);
                clean &= w.a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&p)));
            match offending {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    let diagonal: Vec<BigInt> = (0..steps).map(|i| w.a[(i, i)].clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    SmithForm {
        diagonal,
        rank,
        transforms: w.u.zip(w.v),
    }
}

/// Nonzero entry of least absolute value in the trailing block; ties go to
/// the smallest row, then the smallest column.
fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let abs = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| abs < *b) {
                best = Some((abs, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            diag(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])),
            [1, 6]
        );
        assert_eq!(
            diag(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]])),
            [2, 4]
        );
        let z = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert_eq!(z.rank, 0);
        assert!(z.diagonal.iter().all(Zero::is_zero));
    }

    #[test]
    fn transforms_recheck() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form_with_transforms(&m);
        let (u, v) = s.transforms.clone().unwrap();
        assert_eq!(u.mul(&m).mul(&v), s.diagonal_matrix(3, 3));
        assert_eq!(diag(&m), [2, 6, 12]);
    }
}
