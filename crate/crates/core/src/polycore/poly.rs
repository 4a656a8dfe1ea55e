use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::coeff::{Coefficient, CoefficientDomain, Gf2};
use super::grading::{GradingSpec, Monomial};
use super::parse::parse_sum;
use super::PolyError;

/// Sparse polynomial over a weighted grading; never stores a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<R: Coefficient> {
    grading: GradingSpec,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Coefficient> Polynomial<R> {
    pub fn zero(grading: &GradingSpec) -> Self {
        Polynomial {
            grading: grading.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(grading: &GradingSpec) -> Self {
        Self::constant(grading, R::one())
    }

    pub fn constant(grading: &GradingSpec, c: R) -> Self {
        Self::term(grading, grading.unit_monomial(), c)
    }

    pub fn term(grading: &GradingSpec, monomial: Monomial, c: R) -> Self {
        let mut p = Self::zero(grading);
        if !c.is_zero() {
            p.terms.insert(monomial, c);
        }
        p
    }

    pub fn variable(grading: &GradingSpec, var: usize) -> Self {
        Self::term(grading, grading.variable(var), R::one())
    }

    pub fn variable_named(grading: &GradingSpec, name: &str) -> Result<Self, PolyError> {
        let var = grading
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::variable(grading, var))
    }

    /// Builds from (exponent vector, coefficient) pairs; repeated monomials are summed.
    pub fn from_terms<I>(grading: &GradingSpec, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, R)>,
    {
        let mut p = Self::zero(grading);
        for (exps, c) in terms {
            let m = grading.monomial(exps)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    pub fn domain(&self) -> CoefficientDomain {
        R::DOMAIN
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    fn check_grading(&self, other: &Self) -> Result<(), PolyError> {
        if self.grading == other.grading {
            Ok(())
        } else {
            Err(PolyError::GradingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_grading(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_grading(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_grading(other)?;
        let mut out = Self::zero(&self.grading);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(&self.grading);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            let v = a.clone() * c;
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial) -> Self {
        Polynomial {
            grading: self.grading.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.grading);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Sum of the terms of weighted degree exactly `degree`.
    pub fn graded_component(&self, degree: u32) -> Self {
        Polynomial {
            grading: self.grading.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct weighted degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        ds.dedup();
        ds
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    /// The common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.keys().next()?.degree();
        let last = self.terms.keys().next_back()?.degree();
        (first == last).then_some(first)
    }

    pub fn map_coefficients<S, F>(&self, mut f: F) -> Polynomial<S>
    where
        S: Coefficient,
        F: FnMut(&R) -> S,
    {
        let mut out = Polynomial::zero(&self.grading);
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Same terms read in another grading with the same number of variables.
    pub fn with_grading(&self, grading: &GradingSpec) -> Result<Self, PolyError> {
        if grading.len() != self.grading.len() {
            return Err(PolyError::GradingMismatch);
        }
        let mut out = Self::zero(grading);
        for (m, c) in &self.terms {
            out.terms
                .insert(grading.monomial(m.exponents().to_vec())?, c.clone());
        }
        Ok(out)
    }

    /// Applies a ring map given by images of the generators.
    pub fn substitute<T: SubstitutionTarget<R>>(
        &self,
        map: &GeneratorMap<T>,
    ) -> Result<T, PolyError> {
        map.apply(self)
    }

    pub fn parse(text: &str, grading: &GradingSpec) -> Result<Self, PolyError> {
        let mut out = Self::zero(grading);
        for term in parse_sum(text)? {
            let coef = R::from_rational(&term.coef)
                .ok_or_else(|| PolyError::NotInDomain(term.coef.to_string(), R::DOMAIN))?;
            let mut exps = vec![0u32; grading.len()];
            for (name, e) in term.factors {
                let var = grading
                    .index_of(&name)
                    .ok_or(PolyError::UnknownVariable(name))?;
                if e < 0 {
                    return Err(PolyError::NegativeExponent);
                }
                exps[var] += e as u32;
            }
            out.add_term(grading.monomial(exps)?, coef);
        }
        Ok(out)
    }

    /// JSON rendering: variables, degrees, and terms in descending monomial order.
    pub fn to_json(&self) -> Value {
        json!({
            "vars": self.grading.names(),
            "degrees": self.grading.degrees(),
            "terms": self
                .terms()
                .map(|(m, c)| json!({"exp": m.exponents(), "coef": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, PolyError> {
        let bad = |msg: &str| PolyError::Json(msg.to_string());
        let names: Vec<String> = value["vars"]
            .as_array()
            .ok_or_else(|| bad("missing vars"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("var name"))
            })
            .collect::<Result<_, _>>()?;
        let degrees: Vec<u32> = value["degrees"]
            .as_array()
            .ok_or_else(|| bad("missing degrees"))?
            .iter()
            .map(|v| v.as_u64().map(|d| d as u32).ok_or_else(|| bad("degree")))
            .collect::<Result<_, _>>()?;
        let grading = GradingSpec::new(names, degrees)?;
        let mut out = Self::zero(&grading);
        for t in value["terms"]
            .as_array()
            .ok_or_else(|| bad("missing terms"))?
        {
            let exps: Vec<u32> = t["exp"]
                .as_array()
                .ok_or_else(|| bad("exp"))?
                .iter()
                .map(|v| v.as_u64().map(|e| e as u32).ok_or_else(|| bad("exponent")))
                .collect::<Result<_, _>>()?;
            let coef = t["coef"]
                .as_str()
                .and_then(R::parse_coefficient)
                .ok_or_else(|| bad("coef"))?;
            out.add_term(grading.monomial(exps)?, coef);
        }
        Ok(out)
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map_coefficients(|c| BigRational::from_integer(c.clone()))
    }

    pub fn reduce_mod2(&self) -> Polynomial<Gf2> {
        self.map_coefficients(Gf2::from_bigint)
    }
}

impl Polynomial<BigRational> {
    /// The integer polynomial with the same coefficients, if all are integral.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        if self.terms.values().all(|c| c.is_integer()) {
            Some(self.map_coefficients(|c| c.to_integer()))
        } else {
            None
        }
    }
}

impl<R: Coefficient> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&m.render(&self.grading))?;
            } else {
                write!(f, "{abs}*{}", m.render(&self.grading))?;
            }
        }
        Ok(())
    }
}

impl<R: Coefficient> Add for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        self.try_add(rhs)
            .expect("polynomials over different gradings")
    }
}

impl<R: Coefficient> Sub for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        self.try_sub(rhs)
            .expect("polynomials over different gradings")
    }
}

impl<R: Coefficient> Mul for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        self.try_mul(rhs)
            .expect("polynomials over different gradings")
    }
}

impl<R: Coefficient> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        self.map_coefficients(|c| -c.clone())
    }
}

/// Anything a polynomial with coefficients in `R` can be evaluated into.
pub trait SubstitutionTarget<R>: Clone {
    fn zero_like(&self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn product(&self, other: &Self) -> Self;
    fn scaled(&self, c: &R) -> Self;
}

impl<R: Coefficient> SubstitutionTarget<R> for Polynomial<R> {
    fn zero_like(&self) -> Self {
        Polynomial::zero(&self.grading)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        assert!(
            self.grading == other.grading,
            "images over different gradings"
        );
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn product(&self, other: &Self) -> Self {
        self * other
    }

    fn scaled(&self, c: &R) -> Self {
        self.scale(c)
    }
}

/// A ring homomorphism out of a polynomial ring, fixed by its generator images.
#[derive(Clone, Debug)]
pub struct GeneratorMap<T> {
    source: GradingSpec,
    unit: T,
    images: Vec<Option<T>>,
}

impl<T: Clone> GeneratorMap<T> {
    /// A map with no images yet; `unit` is the target's multiplicative identity.
    pub fn new(source: &GradingSpec, unit: T) -> Self {
        GeneratorMap {
            source: source.clone(),
            unit,
            images: vec![None; source.len()],
        }
    }

    pub fn set(&mut self, var: usize, image: T) -> &mut Self {
        self.images[var] = Some(image);
        self
    }

    pub fn set_named(&mut self, name: &str, image: T) -> Result<&mut Self, PolyError> {
        let var = self
            .source
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.set(var, image))
    }

    pub fn image(&self, var: usize) -> Option<&T> {
        self.images[var].as_ref()
    }

    pub fn source(&self) -> &GradingSpec {
        &self.source
    }

    pub fn apply<R: Coefficient>(&self, p: &Polynomial<R>) -> Result<T, PolyError>
    where
        T: SubstitutionTarget<R>,
    {
        if p.grading != self.source {
            return Err(PolyError::GradingMismatch);
        }
        // powers[var][e - 1] = image(var)^e
        let mut powers: Vec<Vec<T>> = vec![Vec::new(); self.images.len()];
        let mut acc = self.unit.zero_like();
        for (m, c) in &p.terms {
            let mut value = self.unit.clone();
            for (var, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = self.images[var]
                    .as_ref()
                    .ok_or_else(|| PolyError::MissingImage(self.source.name_of(var).to_string()))?;
                let cache = &mut powers[var];
                while cache.len() < e as usize {
                    let next = match cache.last() {
                        Some(last) => last.product(image),
                        None => image.clone(),
                    };
                    cache.push(next);
                }
                value = value.product(&cache[e as usize - 1]);
            }
            acc.add_assign_ref(&value.scaled(c));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn c(n: usize) -> GradingSpec {
        GradingSpec::indexed("c", n, 2)
    }

    fn zp(text: &str, g: &GradingSpec) -> Polynomial<BigInt> {
        Polynomial::parse(text, g).unwrap()
    }

    #[test]
    fn products() {
        let g = c(3);
        let c1 = zp("c1", &g);
        assert_eq!((&c1 * &c1).to_string(), "c1^2");
        let p = zp("c1^2 - c2", &g);
        assert_eq!(&p * &Polynomial::one(&g), p);
        let lhs = &zp("c1 + c2", &g) * &zp("c1 - c2", &g);
        assert_eq!(lhs.to_string(), "-c2^2 + c1^2");
    }

    #[test]
    fn graded_components() {
        let g = c(3);
        let p = zp("c1^2 - c2", &g);
        assert_eq!(p.graded_component(4), p);
        assert_eq!(zp("1 + c1", &g).graded_component(0).to_string(), "1");
        assert!(zp("c1^3 - 2*c1*c2 + c3", &g).graded_component(2).is_zero());
    }

    #[test]
    fn rendering_orders_terms_descending() {
        let g = c(3);
        let p = zp("-2*c2 + c1^2", &g);
        assert_eq!(p.to_string(), "c1^2 - 2*c2");
        assert_eq!(zp("3 - c1", &g).to_string(), "-c1 + 3");
        assert_eq!(Polynomial::<BigInt>::zero(&g).to_string(), "0");
    }

    #[test]
    fn substitution_examples() {
        let tau = GradingSpec::indexed("tau", 2, 2);
        let cg = c(2);
        let mut m = GeneratorMap::new(&cg, Polynomial::one(&tau));
        m.set(0, zp("tau1", &tau)).set(1, zp("2*tau2", &tau));
        assert_eq!(zp("c2", &cg).substitute(&m).unwrap().to_string(), "2*tau2");

        let e = GradingSpec::indexed("e", 1, 4);
        let mut m = GeneratorMap::new(&e, Polynomial::one(&cg));
        m.set(0, zp("c1^2", &cg));
        assert_eq!(zp("e1", &e).substitute(&m).unwrap().to_string(), "c1^2");

        let mut kill = GeneratorMap::new(&cg, Polynomial::one(&cg));
        kill.set(0, zp("c1", &cg)).set(1, Polynomial::zero(&cg));
        assert_eq!(
            zp("c1^2 - c2", &cg).substitute(&kill).unwrap().to_string(),
            "c1^2"
        );
    }

    #[test]
    fn structural_errors() {
        let a = zp("c1", &c(2));
        let b = zp("c1", &c(3));
        assert_eq!(a.try_mul(&b), Err(PolyError::GradingMismatch));
        let m: GeneratorMap<Polynomial<BigInt>> = GeneratorMap::new(&c(2), Polynomial::one(&c(2)));
        assert!(matches!(a.substitute(&m), Err(PolyError::MissingImage(_))));
        // a constant needs no images
        assert!(Polynomial::<BigInt>::one(&c(2)).substitute(&m).unwrap() == Polynomial::one(&c(2)));
    }

    #[test]
    fn json_round_trip() {
        let g = c(3);
        let p = zp("c1^3 - 2*c1*c2 + c3", &g)
            .to_rational()
            .scale(&BigRational::new(1.into(), 2.into()));
        let v = p.to_json();
        assert_eq!(v["terms"][0]["coef"], "1/2");
        assert_eq!(Polynomial::<BigRational>::from_json(&v).unwrap(), p);
    }

    #[test]
    fn mod2_reduction_drops_even_terms() {
        let g = c(4);
        let p = zp("c2^2 - 2*c1*c3 + 2*c4", &g);
        assert_eq!(p.reduce_mod2().to_string(), "c2^2");
        assert!(p
            .reduce_mod2()
            .graded_component(8)
            .terms()
            .all(|(_, c)| c.is_one()));
    }
}
