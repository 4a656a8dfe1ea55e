use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parse::parse_sum;
use super::poly::SubstitutionTarget;
use super::PolyError;

/// Laurent polynomial in `t1..tn` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], BigRational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: BigRational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    /// `t_var^exp`
    pub fn power(nvars: usize, var: usize, exp: i32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Self::monomial(nvars, exps, BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add_term(&mut self, exps: Vec<i32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    /// Largest absolute exponent of `t_var` over all terms.
    pub fn max_abs_exponent(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| e[var].unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Applies `t_i -> t_{perm[i]}^{±1}`, where `invert[i]` selects the inverse.
    pub fn signed_permute(&self, perm: &[usize], invert: &[bool]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for i in 0..self.nvars {
                f[perm[i]] = if invert[i] { -e[i] } else { e[i] };
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Parses text such as `3/4*t1^2*t2^-1 + t1 - 2`; variables must be `t1..tn`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self, PolyError> {
        let mut out = Self::zero(nvars);
        for term in parse_sum(text)? {
            let mut exps = vec![0i32; nvars];
            for (name, e) in term.factors {
                let var = name
                    .strip_prefix('t')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= nvars)
                    .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                exps[var - 1] += i32::try_from(e).map_err(|_| PolyError::NegativeExponent)?;
            }
            out.add_term(exps, term.coef);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        format!("t{}", v + 1)
                    } else {
                        format!("t{}^{}", v + 1, x)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl SubstitutionTarget<BigRational> for LaurentPolynomial {
    fn zero_like(&self) -> Self {
        LaurentPolynomial::zero(self.nvars)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    fn product(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn scaled(&self, c: &BigRational) -> Self {
        self.scale(c)
    }
}
