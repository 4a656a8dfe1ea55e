use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

#[derive(Debug, PartialEq, Eq, Hash)]
struct GradingInner {
    names: Vec<String>,
    degrees: Vec<u32>,
}

/// Ordered variable names together with their (strictly positive) weights.
///
/// Cheap to clone; two specs are equal when names and degrees agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingSpec(Arc<GradingInner>);

impl GradingSpec {
    pub fn new(names: Vec<String>, degrees: Vec<u32>) -> Result<Self, PolyError> {
        if names.len() != degrees.len() {
            return Err(PolyError::InvalidGrading(format!(
                "{} names but {} degrees",
                names.len(),
                degrees.len()
            )));
        }
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(PolyError::InvalidGrading(format!(
                "variable {} has degree 0",
                names[pos]
            )));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(PolyError::InvalidGrading(format!(
                    "duplicate or empty variable name {name:?}"
                )));
            }
        }
        Ok(GradingSpec(Arc::new(GradingInner { names, degrees })))
    }

    /// Variables `{prefix}1 .. {prefix}{count}` where variable `i` has degree `step * i`.
    pub fn indexed(prefix: &str, count: usize, step: u32) -> Self {
        let names = (1..=count).map(|i| format!("{prefix}{i}")).collect();
        let degrees = (1..=count as u32).map(|i| step * i).collect();
        Self::new(names, degrees).expect("indexed grading is valid")
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0.degrees
    }

    pub fn degree_of(&self, var: usize) -> u32 {
        self.0.degrees[var]
    }

    pub fn name_of(&self, var: usize) -> &str {
        &self.0.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn weighted_degree(&self, exponents: &[u32]) -> u32 {
        exponents
            .iter()
            .zip(self.degrees())
            .map(|(e, d)| e * d)
            .sum()
    }

    pub fn monomial(&self, exponents: Vec<u32>) -> Result<Monomial, PolyError> {
        if exponents.len() != self.len() {
            return Err(PolyError::GradingMismatch);
        }
        Ok(Monomial {
            degree: self.weighted_degree(&exponents),
            exponents,
        })
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial {
            degree: 0,
            exponents: vec![0; self.len()],
        }
    }

    pub fn variable(&self, var: usize) -> Monomial {
        let mut exponents = vec![0; self.len()];
        exponents[var] = 1;
        Monomial {
            degree: self.degree_of(var),
            exponents,
        }
    }
}

/// Exponent vector with its cached weighted degree.
///
/// The derived order is the fixed monomial order: weighted degree first,
/// then lexicographic on the exponent vector (first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiplies by a single variable of the given weight.
    pub fn times_variable(&self, var: usize, var_degree: u32) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[var] += 1;
        Monomial {
            degree: self.degree + var_degree,
            exponents,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Order of `self` against `other` in the monomial order.
    pub fn compare(&self, other: &Monomial) -> Ordering {
        self.cmp(other)
    }

    pub fn render(&self, grading: &GradingSpec) -> String {
        let mut out = String::new();
        for (var, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(grading.name_of(var));
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

/// All monomials of weighted degree exactly `degree`, largest first.
///
/// When `restrict_to` is given only those variables may appear.
pub fn monomials_of_degree(
    grading: &GradingSpec,
    degree: u32,
    restrict_to: Option<&[usize]>,
) -> Vec<Monomial> {
    let allowed: Vec<usize> = match restrict_to {
        Some(vars) => {
            let mut v: Vec<usize> = vars
                .iter()
                .copied()
                .filter(|&i| i < grading.len())
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        }
        None => (0..grading.len()).collect(),
    };
    let mut out = Vec::new();
    let mut exps = vec![0u32; grading.len()];
    fill(grading, &allowed, 0, degree, &mut exps, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill(
    grading: &GradingSpec,
    allowed: &[usize],
    pos: usize,
    remaining: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if pos == allowed.len() {
        if remaining == 0 {
            out.push(Monomial {
                degree: grading.weighted_degree(exps),
                exponents: exps.clone(),
            });
        }
        return;
    }
    let var = allowed[pos];
    let w = grading.degree_of(var);
    let mut e = 0;
    while e * w <= remaining {
        exps[var] = e;
        fill(grading, allowed, pos + 1, remaining - e * w, exps, out);
        e += 1;
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c_grading(n: usize) -> GradingSpec {
        GradingSpec::indexed("c", n, 2)
    }

    fn render(g: &GradingSpec, ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| m.render(g)).collect()
    }

    #[test]
    fn degree_four_in_two_variables() {
        let g = c_grading(2);
        assert_eq!(
            render(&g, &monomials_of_degree(&g, 4, None)),
            ["c1^2", "c2"]
        );
    }

    #[test]
    fn degree_zero_is_unit() {
        let g = c_grading(3);
        let ms = monomials_of_degree(&g, 0, None);
        assert_eq!(ms.len(), 1);
        assert!(ms[0].is_unit());
    }

    #[test]
    fn degree_six_in_three_variables() {
        let g = c_grading(3);
        assert_eq!(
            render(&g, &monomials_of_degree(&g, 6, None)),
            ["c1^3", "c1*c2", "c3"]
        );
    }

    #[test]
    fn restriction_and_odd_degrees() {
        let g = c_grading(3);
        assert!(monomials_of_degree(&g, 5, None).is_empty());
        assert_eq!(
            render(&g, &monomials_of_degree(&g, 6, Some(&[1, 2]))),
            ["c3"]
        );
    }

    #[test]
    fn rejects_zero_degree() {
        assert!(GradingSpec::new(vec!["x".into()], vec![0]).is_err());
        assert!(GradingSpec::new(vec!["x".into(), "x".into()], vec![1, 1]).is_err());
    }
}
