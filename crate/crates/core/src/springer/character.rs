use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SpringerError;
use crate::intlinalg::solve_linear;
use crate::polycore::{GeneratorMap, GradingSpec, LaurentPolynomial, Polynomial};

/// Variables `x1..xn`, each of degree 1; `x_i` stands for `((t_i - t_i^-1)/2)^2`.
pub fn x_grading(n: usize) -> GradingSpec {
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    GradingSpec::new(names, vec![1; n]).expect("positive degrees")
}

/// A Laurent polynomial on the torus of `Sp(2n)` or `SO(2n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentCharacter {
    n: usize,
    f: LaurentPolynomial,
}

impl LaurentCharacter {
    pub fn new(f: LaurentPolynomial) -> Self {
        LaurentCharacter { n: f.nvars(), f }
    }

    pub fn parse(text: &str, n: usize) -> Result<Self, SpringerError> {
        Ok(Self::new(LaurentPolynomial::parse(text, n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polynomial(&self) -> &LaurentPolynomial {
        &self.f
    }

    /// Invariance under adjacent transpositions and `t_1 -> t_1^-1`, which
    /// generate the signed permutation group.
    pub fn is_weyl_invariant(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return true;
        }
        let id: Vec<usize> = (0..n).collect();
        let mut flip = vec![false; n];
        flip[0] = true;
        if self.f.signed_permute(&id, &flip) != self.f {
            return false;
        }
        let none = vec![false; n];
        (0..n.saturating_sub(1)).all(|i| {
            let mut perm = id.clone();
            perm.swap(i, i + 1);
            self.f.signed_permute(&perm, &none) == self.f
        })
    }
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.f.fmt(f)
    }
}

fn half_difference_squared(n: usize, i: usize) -> LaurentPolynomial {
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let t = LaurentPolynomial::power(n, i, 1);
    let ti = LaurentPolynomial::power(n, i, -1);
    let d = t.sub(&ti);
    d.mul(&d).scale(&quarter)
}

fn is_symmetric(p: &Polynomial<BigRational>) -> Result<bool, SpringerError> {
    let g = p.grading();
    for i in 0..g.len().saturating_sub(1) {
        let mut swap = GeneratorMap::new(g, Polynomial::one(g));
        for v in 0..g.len() {
            let to = if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            };
            swap.set(v, Polynomial::variable(g, to));
        }
        if swap.apply(p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Substitutes `x_i = ((t_i - t_i^-1)/2)^2` into a symmetric polynomial.
pub fn char_from_symmetric(p: &Polynomial<BigRational>) -> Result<LaurentCharacter, SpringerError> {
    if !is_symmetric(p)? {
        return Err(SpringerError::NotSymmetric);
    }
    Ok(LaurentCharacter::new(substitute(p)?))
}

fn substitute(p: &Polynomial<BigRational>) -> Result<LaurentPolynomial, SpringerError> {
    let n = p.grading().len();
    let mut map = GeneratorMap::new(p.grading(), LaurentPolynomial::one(n));
    for i in 0..n {
        map.set(i, half_difference_squared(n, i));
    }
    Ok(map.apply(p)?)
}

/// Partitions with at most `len` parts, each at most `max_part`, largest first.
fn partitions_in_box(len: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn grow(len: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() == len {
            return;
        }
        for p in (1..=cap).rev() {
            cur.push(p);
            grow(len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(len, max_part, &mut Vec::new(), &mut out);
    out
}

/// The monomial symmetric polynomial `m_lambda(x_1..x_n)`.
pub fn monomial_symmetric(grading: &GradingSpec, lambda: &[u32]) -> Polynomial<BigRational> {
    let n = grading.len();
    let mut base = lambda.to_vec();
    base.resize(n, 0);
    let mut orbit: BTreeSet<Vec<u32>> = BTreeSet::new();
    permutations(&mut base, 0, &mut orbit);
    Polynomial::from_terms(grading, orbit.into_iter().map(|e| (e, BigRational::one())))
        .expect("exponent vectors have the grading's length")
}

fn permutations(v: &mut Vec<u32>, start: usize, out: &mut BTreeSet<Vec<u32>>) {
    if start == v.len() {
        out.insert(v.clone());
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, out);
        v.swap(start, i);
    }
}

/// The symmetric `P` with `f(t) = P(((t_1 - t_1^-1)/2)^2, ...)`, if one exists.
///
/// The leading `t_i`-power of `((t_i - t_i^-1)/2)^2` is `t_i^2 / 4`, and the
/// substituted variables are algebraically independent, so the `t_i`-degree
/// of the image is exactly twice the `x_i`-degree of `P`. Every monomial of
/// `P` therefore has all exponents at most half the largest absolute
/// exponent of `f`; the solver searches exactly that space.
pub fn is_omega1_polynomial(
    f: &LaurentCharacter,
) -> Result<Option<Polynomial<BigRational>>, SpringerError> {
    if !f.is_weyl_invariant() {
        return Err(SpringerError::NotInvariant);
    }
    let n = f.n();
    let grading = x_grading(n);
    if f.f.is_zero() {
        return Ok(Some(Polynomial::zero(&grading)));
    }
    let bound = (0..n).map(|i| f.f.max_abs_exponent(i)).max().unwrap_or(0) / 2;
    let lambdas = partitions_in_box(n, bound);
    let basis: Vec<Polynomial<BigRational>> = lambdas
        .iter()
        .map(|l| monomial_symmetric(&grading, l))
        .collect();
    let images: Vec<LaurentPolynomial> = basis.iter().map(substitute).collect::<Result<_, _>>()?;

    let mut rows_index: BTreeSet<Vec<i32>> = f.f.terms().map(|(e, _)| e.clone()).collect();
    for img in &images {
        rows_index.extend(img.terms().map(|(e, _)| e.clone()));
    }
    let a: Vec<Vec<BigRational>> = rows_index
        .iter()
        .map(|e| images.iter().map(|img| img.coefficient(e)).collect())
        .collect();
    let b: Vec<BigRational> = rows_index.iter().map(|e| f.f.coefficient(e)).collect();
    let Some(x) = solve_linear(&a, &b, basis.len()) else {
        return Ok(None);
    };
    let mut p = Polynomial::zero(&grading);
    for (coef, m) in x.iter().zip(&basis) {
        if !coef.is_zero() {
            p = &p + &m.scale(coef);
        }
    }
    Ok(Some(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(s: &str, n: usize) -> Polynomial<BigRational> {
        Polynomial::parse(s, &x_grading(n)).unwrap()
    }

    #[test]
    fn substitution_examples() {
        let f = char_from_symmetric(&xp("x1", 1)).unwrap();
        assert_eq!(f.to_string(), "1/4*t1^2 - 1/2 + 1/4*t1^-2");
        let f = char_from_symmetric(&xp("1", 2)).unwrap();
        assert_eq!(f.to_string(), "1");
        assert!(matches!(
            char_from_symmetric(&xp("x1", 2)),
            Err(SpringerError::NotSymmetric)
        ));
    }

    #[test]
    fn membership_examples() {
        let f =
            LaurentCharacter::parse("1/4*t1^2 - 1/2 + 1/4*t1^-2 + 1/4*t2^2 - 1/2 + 1/4*t2^-2", 2)
                .unwrap();
        assert_eq!(is_omega1_polynomial(&f).unwrap().unwrap(), xp("x1 + x2", 2));
        let f = LaurentCharacter::parse("t1 + t1^-1", 1).unwrap();
        assert_eq!(is_omega1_polynomial(&f).unwrap(), None);
        let f = LaurentCharacter::parse("1", 3).unwrap();
        assert_eq!(is_omega1_polynomial(&f).unwrap().unwrap(), xp("1", 3));
        let f = LaurentCharacter::parse("t1", 1).unwrap();
        assert_eq!(is_omega1_polynomial(&f), Err(SpringerError::NotInvariant));
        // Invariant but not a polynomial in the squared coordinates.
        let f = LaurentCharacter::parse(
            "t1^2 + t1^-2 + t2^2 + t2^-2 + t1*t2 + t1^-1*t2^-1 + t1*t2^-1 + t1^-1*t2",
            2,
        )
        .unwrap();
        assert!(f.is_weyl_invariant());
        assert_eq!(is_omega1_polynomial(&f).unwrap(), None);
    }

    #[test]
    fn box_partitions() {
        assert_eq!(
            partitions_in_box(2, 2),
            [vec![], vec![2], vec![2, 2], vec![2, 1], vec![1], vec![1, 1]]
        );
        assert_eq!(
            monomial_symmetric(&x_grading(2), &[2, 1]).to_string(),
            "x1^2*x2 + x1*x2^2"
        );
    }
}
