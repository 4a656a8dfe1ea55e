//! The Cayley-transform Springer map `g -> (g - E^-1 g^t E) / 2` for `Sp(2n)`
//! and `SO(2n+1)`, and the test for polynomial characters in `((t - 1/t)/2)^2`.

mod character;
mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polycore::PolyError;

pub use character::{
    char_from_symmetric, is_omega1_polynomial, monomial_symmetric, x_grading, LaurentCharacter,
};
pub use matrix::RatMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpringerError {
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("torus coordinates must be nonzero")]
    ZeroEntry,
    #[error("matrix is not in {0}: {1}")]
    NotInGroup(GroupSpec, &'static str),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("character is not invariant under the Weyl group")]
    NotInvariant,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// `Sp(2n)`
    Sp,
    /// `SO(2n+1)`
    So,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: GroupFamily,
    n: usize,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::Sp => write!(f, "Sp({})", 2 * self.n),
            GroupFamily::So => write!(f, "SO({})", 2 * self.n + 1),
        }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl GroupSpec {
    pub fn new(family: GroupFamily, n: usize) -> Result<Self, SpringerError> {
        if n == 0 {
            return Err(SpringerError::InvalidRank);
        }
        Ok(GroupSpec { family, n })
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Size of the defining matrices.
    pub fn dim(&self) -> usize {
        match self.family {
            GroupFamily::Sp => 2 * self.n,
            GroupFamily::So => 2 * self.n + 1,
        }
    }

    /// The only nonzero entry of row `a` of the form sits in column `dim - 1 - a`.
    fn form_entry(&self, a: usize) -> BigRational {
        match self.family {
            GroupFamily::Sp => q(if a < self.n { 1 } else { -1 }),
            GroupFamily::So => q(if a == self.n { 2 } else { 1 }),
        }
    }

    /// `E_C = ((0, J), (-J, 0))` for `Sp`, the antidiagonal form with a central 2 for `SO`.
    pub fn form(&self) -> RatMatrix {
        let d = self.dim();
        let mut e = RatMatrix::zeros(d);
        for a in 0..d {
            e[(a, d - 1 - a)] = self.form_entry(a);
        }
        e
    }

    /// Whether `x^t E + E x = 0`.
    pub fn in_lie_algebra(&self, x: &RatMatrix) -> bool {
        let e = self.form();
        x.size() == self.dim() && x.transpose().mul(&e).add(&e.mul(x)).is_zero()
    }

    /// Whether `g^t E g = E` and `det g = 1`.
    pub fn contains(&self, g: &RatMatrix) -> bool {
        let e = self.form();
        g.size() == self.dim() && g.transpose().mul(&e).mul(g) == e && g.determinant().is_one()
    }

    /// Root vectors `E_ij - (e_{i'} / e_{j'}) E_{j' i'}` (primes denote `a -> dim - 1 - a`)
    /// that lie in the Lie algebra and are nilpotent.
    pub fn root_vectors(&self) -> Vec<RatMatrix> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let (ib, jb) = (d - 1 - i, d - 1 - j);
                // (i, j) and (j', i') give proportional vectors; keep the smaller pair.
                if i == j || (jb, ib) < (i, j) {
                    continue;
                }
                let mut x = RatMatrix::zeros(d);
                x[(i, j)] = BigRational::one();
                let y = -(self.form_entry(ib) / self.form_entry(jb));
                x[(jb, ib)] += &y;
                if x.is_zero() || !self.in_lie_algebra(&x) {
                    continue;
                }
                if nilpotent_exp(&x, &BigRational::one()).is_some() {
                    out.push(x);
                }
            }
        }
        out
    }
}

/// `exp(a x)` for nilpotent `x`; `None` if `x^dim != 0`.
pub fn nilpotent_exp(x: &RatMatrix, a: &BigRational) -> Option<RatMatrix> {
    let d = x.size();
    let ax = x.scale(a);
    let mut term = RatMatrix::identity(d);
    let mut sum = RatMatrix::identity(d);
    for m in 1..=d {
        term = term
            .mul(&ax)
            .scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
        if term.is_zero() {
            return Some(sum);
        }
        sum = sum.add(&term);
    }
    None
}

/// A matrix verified to preserve the form and have determinant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMatrix {
    group: GroupSpec,
    entries: RatMatrix,
}

impl GroupMatrix {
    pub fn new(group: GroupSpec, entries: RatMatrix) -> Result<Self, SpringerError> {
        if entries.size() != group.dim() {
            return Err(SpringerError::NotInGroup(group, "wrong size"));
        }
        let e = group.form();
        if entries.transpose().mul(&e).mul(&entries) != e {
            return Err(SpringerError::NotInGroup(group, "form is not preserved"));
        }
        if !entries.determinant().is_one() {
            return Err(SpringerError::NotInGroup(group, "determinant is not 1"));
        }
        Ok(GroupMatrix { group, entries })
    }

    pub fn identity(group: GroupSpec) -> Self {
        GroupMatrix {
            group,
            entries: RatMatrix::identity(group.dim()),
        }
    }

    /// `exp(a x)` for a nilpotent Lie algebra element `x`.
    pub fn unipotent(
        group: GroupSpec,
        x: &RatMatrix,
        a: &BigRational,
    ) -> Result<Self, SpringerError> {
        let m = nilpotent_exp(x, a).ok_or(SpringerError::NotInGroup(
            group,
            "generator is not nilpotent",
        ))?;
        Self::new(group, m)
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        GroupMatrix {
            group: self.group,
            entries: self.entries.mul(&other.entries),
        }
    }

    /// Group inverse `E^-1 g^t E`.
    pub fn inverse(&self) -> Self {
        let e = self.group.form();
        let e_inv = e.inverse().expect("forms are invertible");
        GroupMatrix {
            group: self.group,
            entries: e_inv.mul(&self.entries.transpose()).mul(&e),
        }
    }
}

/// `(g - E^-1 g^t E) / 2`.
pub fn theta_matrix(g: &GroupMatrix) -> RatMatrix {
    let e = g.group.form();
    let e_inv = e.inverse().expect("forms are invertible");
    let reflected = e_inv.mul(&g.entries.transpose()).mul(&e);
    g.entries
        .sub(&reflected)
        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
}

/// Point `(t_1, ..., t_n)` of the maximal torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    group: GroupSpec,
    t: Vec<BigRational>,
}

impl TorusElement {
    pub fn new(group: GroupSpec, t: Vec<BigRational>) -> Result<Self, SpringerError> {
        if t.len() != group.rank() {
            return Err(SpringerError::LengthMismatch {
                expected: group.rank(),
                got: t.len(),
            });
        }
        if t.iter().any(Zero::is_zero) {
            return Err(SpringerError::ZeroEntry);
        }
        Ok(TorusElement { group, t })
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn coordinates(&self) -> &[BigRational] {
        &self.t
    }

    /// `diag(t_1..t_n, t_n^-1..t_1^-1)`, with a central 1 for `SO`.
    pub fn to_matrix(&self) -> GroupMatrix {
        let mut diag: Vec<BigRational> = self.t.clone();
        if self.group.family == GroupFamily::So {
            diag.push(BigRational::one());
        }
        diag.extend(self.t.iter().rev().map(BigRational::recip));
        GroupMatrix {
            group: self.group,
            entries: RatMatrix::diagonal(&diag),
        }
    }
}

/// Diagonal element `diag(x_1..x_n, -x_n..-x_1)` of the Cartan subalgebra (central 0 for `SO`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanElement {
    group: GroupSpec,
    x: Vec<BigRational>,
}

impl CartanElement {
    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn coordinates(&self) -> &[BigRational] {
        &self.x
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let mut diag: Vec<BigRational> = self.x.clone();
        if self.group.family == GroupFamily::So {
            diag.push(BigRational::zero());
        }
        diag.extend(self.x.iter().rev().map(|x| -x.clone()));
        RatMatrix::diagonal(&diag)
    }
}

/// `x_i = (t_i - t_i^-1) / 2`.
pub fn theta_torus(t: &TorusElement) -> CartanElement {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    CartanElement {
        group: t.group,
        x: t.t.iter().map(|ti| (ti - ti.recip()) * &half).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sp(n: usize) -> GroupSpec {
        GroupSpec::new(GroupFamily::Sp, n).unwrap()
    }

    fn so(n: usize) -> GroupSpec {
        GroupSpec::new(GroupFamily::So, n).unwrap()
    }

    #[test]
    fn identity_goes_to_zero() {
        for g in [sp(2), so(2), sp(3)] {
            assert!(theta_matrix(&GroupMatrix::identity(g)).is_zero());
        }
    }

    #[test]
    fn torus_examples() {
        let t = TorusElement::new(sp(2), vec![r(3, 1), r(2, 1)]).unwrap();
        let th = theta_matrix(&t.to_matrix());
        assert_eq!(
            th.diagonal_entries(),
            [r(4, 3), r(3, 4), r(-3, 4), r(-4, 3)]
        );
        assert_eq!(th, theta_torus(&t).to_matrix());

        let t = TorusElement::new(sp(1), vec![r(2, 1)]).unwrap();
        assert_eq!(theta_torus(&t).coordinates(), [r(3, 4)]);

        let t = TorusElement::new(so(2), vec![r(3, 1), r(2, 1)]).unwrap();
        let c = theta_torus(&t);
        assert_eq!(c.coordinates(), [r(4, 3), r(3, 4)]);
        assert_eq!(c.to_matrix().diagonal_entries()[2], r(0, 1));
        assert_eq!(theta_matrix(&t.to_matrix()), c.to_matrix());

        assert_eq!(
            TorusElement::new(sp(2), vec![r(0, 1), r(1, 1)]),
            Err(SpringerError::ZeroEntry)
        );
        assert!(GroupSpec::new(GroupFamily::Sp, 0).is_err());
    }

    #[test]
    fn forms_and_root_vectors() {
        for g in [sp(1), sp(2), sp(3), so(1), so(2), so(3)] {
            let e = g.form();
            assert!(g.contains(&RatMatrix::identity(g.dim())));
            let roots = g.root_vectors();
            // Both groups have 2n^2 roots.
            assert_eq!(roots.len(), 2 * g.rank() * g.rank(), "{g}");
            for x in &roots {
                assert!(g.in_lie_algebra(x));
                let u = GroupMatrix::unipotent(g, x, &r(3, 2)).unwrap();
                assert_eq!(u.mul(&u.inverse()), GroupMatrix::identity(g));
                assert!(g.in_lie_algebra(&theta_matrix(&u)));
            }
            assert!(e.inverse().is_some());
        }
    }

    #[test]
    fn rejects_non_members() {
        let mut m = RatMatrix::identity(4);
        m[(0, 1)] = r(1, 1);
        assert!(matches!(
            GroupMatrix::new(sp(2), m),
            Err(SpringerError::NotInGroup(_, _))
        ));
    }
}
