//! The maps from the polynomial representation rings of `Sp(2k)` and
//! `SO(2k+1)` into the (stable) cohomology rings, with verification routines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::intlinalg::{integer_kernel, rank_mod2, rank_over_rationals, IntMatrix};
use crate::polycore::{
    monomials_of_degree, GeneratorMap, GradingSpec, Monomial, PolyError, Polynomial,
};
use crate::presentations::{
    c_grading, c_to_tau_integral, tau_to_c, transition_map, Family, GradedQuotient, LieType,
    PresentationError, QuotientElement, RingPresentation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum XiError {
    #[error("generator index {i} is outside 1..={k}")]
    InvalidIndex { i: u32, k: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Generators `e1..ek` with `deg e_i = 4i`.
pub fn e_grading(k: u32) -> GradingSpec {
    GradingSpec::indexed("e", k as usize, 4)
}

/// The free polynomial ring on `e_1..e_k` attached to `Sp(2k)` or `SO(2k+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepPolyDomain {
    pub lie_type: LieType,
    pub k: u32,
    grading: GradingSpec,
}

impl RepPolyDomain {
    pub fn new(lie_type: LieType, k: u32) -> Self {
        RepPolyDomain {
            lie_type,
            k,
            grading: e_grading(k),
        }
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    /// Monomials in the `e_i` of degree `d`, largest first.
    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(&self.grading, d, None)
    }
}

/// `c_i^2 + 2 sum_{j=1}^{i} (-1)^j c_{i+j} c_{i-j}` over the generators of
/// `grading` (`c_0 = 1`, generators past the end are 0).
pub fn xi_formula(i: u32, grading: &GradingSpec) -> Polynomial<BigInt> {
    let gen = |j: i64| -> Polynomial<BigInt> {
        if j == 0 {
            Polynomial::one(grading)
        } else if j < 0 || j as usize > grading.len() {
            Polynomial::zero(grading)
        } else {
            Polynomial::variable(grading, j as usize - 1)
        }
    };
    let i = i as i64;
    let mut p = &gen(i) * &gen(i);
    for j in 1..=i {
        let sign = if j % 2 == 0 { 2 } else { -2 };
        p = &p + &(&gen(i + j) * &gen(i - j)).scale(&BigInt::from(sign));
    }
    p
}

/// The ring map on generators, with images written in the codomain's generators.
#[derive(Debug, Clone)]
pub struct XiMap {
    domain: RepPolyDomain,
    codomain: Family,
    map: GeneratorMap<Polynomial<BigInt>>,
}

impl XiMap {
    /// The map attached to a presentation; `k` is the presentation's `k`.
    pub fn new(pres: &RingPresentation) -> Result<Self, XiError> {
        let family = pres.family();
        let k = family.k();
        let domain = RepPolyDomain::new(family.lie_type(), k);
        let target = pres.grading();
        let mut map = GeneratorMap::new(domain.grading(), Polynomial::one(target));
        for i in 1..=k {
            let image = if family.uses_tau() {
                c_to_tau_integral(k, &xi_formula(i, &c_grading(target.len())))?
            } else {
                xi_formula(i, target)
            };
            map.set(i as usize - 1, image);
        }
        Ok(XiMap {
            domain,
            codomain: family,
            map,
        })
    }

    pub fn domain(&self) -> &RepPolyDomain {
        &self.domain
    }

    pub fn codomain(&self) -> Family {
        self.codomain
    }

    /// Image of `e_i` as a polynomial in the codomain generators.
    pub fn generator_image(&self, i: u32) -> Result<&Polynomial<BigInt>, XiError> {
        if i == 0 || i > self.domain.k {
            return Err(XiError::InvalidIndex {
                i,
                k: self.domain.k,
            });
        }
        Ok(self
            .map
            .image(i as usize - 1)
            .expect("all generators are set"))
    }

    /// Image of a polynomial in the `e_i`, before reduction.
    pub fn apply(&self, p: &Polynomial<BigInt>) -> Result<Polynomial<BigInt>, XiError> {
        Ok(self.map.apply(p)?)
    }
}

fn check_target(map: &XiMap, q: &GradedQuotient<BigRational>) -> Result<(), XiError> {
    if q.presentation().family() != map.codomain() {
        return Err(XiError::InvalidParameters(format!(
            "map targets {} but the quotient is {}",
            map.codomain(),
            q.presentation().family()
        )));
    }
    Ok(())
}

/// Normal form of the image of `e_i`.
pub fn xi_generator_image<'q>(
    i: u32,
    q: &'q GradedQuotient<BigRational>,
) -> Result<QuotientElement<'q, BigRational>, XiError> {
    let map = XiMap::new(q.presentation())?;
    let image = map.generator_image(i)?;
    if 4 * i > q.cap() {
        return Err(PresentationError::CapExceeded {
            degree: 4 * i,
            cap: q.cap(),
        }
        .into());
    }
    Ok(q.normal_form_integral(image)?)
}

/// Normal form of the image of a polynomial in the `e_i`.
pub fn xi_evaluate<'q>(
    p: &Polynomial<BigInt>,
    map: &XiMap,
    q: &'q GradedQuotient<BigRational>,
) -> Result<QuotientElement<'q, BigRational>, XiError> {
    check_target(map, q)?;
    Ok(q.normal_form_integral(&map.apply(p)?)?)
}

/// `e^a -> prod_i c_i^(2 a_i)`, as a monomial of `grading`.
pub fn mod2_xi_monomial(a: &[u32], grading: &GradingSpec) -> Result<Monomial, XiError> {
    if a.len() > grading.len() {
        return Err(XiError::InvalidParameters(format!(
            "{} exponents but only {} generators",
            a.len(),
            grading.len()
        )));
    }
    let mut exps = vec![0; grading.len()];
    for (i, e) in a.iter().enumerate() {
        exps[i] = 2 * e;
    }
    Ok(grading.monomial(exps)?)
}

/// One degree of an injectivity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub domain_dim: usize,
    pub codomain_rank: usize,
    pub image_rank_q: usize,
    pub image_rank_mod2: usize,
    /// Integer basis of the kernel over the `e`-monomial basis (largest monomial first).
    pub kernel_basis: Vec<Vec<BigInt>>,
    /// Whether the mod-2 image of every `e^a` is the basis monomial `prod c_i^(2 a_i)`.
    pub mod2_is_monomial: bool,
    /// Type B only: images computed in the `tau` ring are integral after `tau -> c`
    /// and agree with the `c`-side images.
    pub integral: Option<bool>,
    /// Type B only: image rank over QQ in the `tau` ring agrees with the subring computation.
    pub tau_rank_agrees: Option<bool>,
}

impl DegreeReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "degree": self.degree,
            "domain_dim": self.domain_dim,
            "codomain_rank": self.codomain_rank,
            "image_rank_Q": self.image_rank_q,
            "image_rank_mod2": self.image_rank_mod2,
            "kernel_basis": self.kernel_basis.iter()
                .map(|v| v.iter().map(BigInt::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "mod2_is_monomial": self.mod2_is_monomial,
        });
        if let Some(b) = self.integral {
            v["integral"] = json!(b);
        }
        if let Some(b) = self.tau_rank_agrees {
            v["tau_rank_agrees"] = json!(b);
        }
        v
    }
}

/// Per-degree injectivity certificate of a stable map, up to a degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub lie_type: LieType,
    pub k: u32,
    pub degree_cap: u32,
    pub codomain: Family,
    pub degrees: Vec<DegreeReport>,
}

impl KernelReport {
    /// Injective in every scanned degree.
    pub fn is_injective(&self) -> bool {
        self.degrees.iter().all(|d| d.kernel_basis.is_empty())
    }

    /// Every mod-2 image is full rank and monomial, and all type-B checks passed.
    pub fn mod2_route_holds(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.mod2_is_monomial && d.image_rank_mod2 == d.domain_dim)
    }

    pub fn type_b_checks_hold(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.integral != Some(false) && d.tau_rank_agrees != Some(false))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.lie_type.to_string(),
            "k": self.k,
            "degree_cap": self.degree_cap,
            "codomain": self.codomain.to_string(),
            "injective_up_to_cap": self.is_injective(),
            "degrees": self.degrees.iter().map(DegreeReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Column `j` holds the coordinates of the `j`-th image; rows are scaled to clear denominators.
fn integral_coordinate_matrix(columns: &[Vec<BigRational>], rows: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, columns.len());
    for i in 0..rows {
        let lcm = columns
            .iter()
            .fold(BigInt::one(), |acc, col| acc.lcm(col[i].denom()));
        for (j, col) in columns.iter().enumerate() {
            m[(i, j)] = (&col[i] * BigRational::from_integer(lcm.clone())).to_integer();
        }
    }
    m
}

/// Scans the stable map degree by degree. Type C uses the stable ring; type B
/// runs in the `c`-generated subring and is cross-checked against the `tau` ring.
pub fn injectivity_scan(k: u32, lie_type: LieType, cap: u32) -> Result<KernelReport, XiError> {
    if cap < 4 || !cap.is_multiple_of(2) {
        return Err(XiError::InvalidParameters(format!(
            "degree cap must be even and at least 4, got {cap}"
        )));
    }
    let pres = match lie_type {
        LieType::C => RingPresentation::stable(LieType::C, k, cap)?,
        LieType::B => RingPresentation::stable_b_subring(k, cap)?,
    };
    let q = GradedQuotient::<BigRational>::build(&pres, cap)?;
    let q2 = q.mod2_quotient()?;
    let map = XiMap::new(&pres)?;

    let tau_side = match lie_type {
        LieType::C => None,
        LieType::B => {
            let tp = RingPresentation::stable(LieType::B, k, cap)?;
            let tq = GradedQuotient::<BigRational>::build(&tp, cap)?;
            let tmap = XiMap::new(&tp)?;
            Some((tq, tmap))
        }
    };

    let domain = map.domain().clone();
    let mut degrees = Vec::new();
    for d in (0..=cap).step_by(2) {
        let monomials = domain.basis(d);
        let rank = q.rank(d);
        let rank2 = q2.rank(d);
        let basis2 = q2.basis(d);
        let mut columns = Vec::new();
        let mut columns2 = Vec::new();
        let mut mod2_is_monomial = true;
        let mut integral = tau_side.as_ref().map(|_| true);
        let mut tau_columns = Vec::new();
        for m in &monomials {
            let e = Polynomial::term(domain.grading(), m.clone(), BigInt::one());
            let image = map.apply(&e)?;
            columns.push(q.normal_form_integral(&image)?.coordinates(d));

            let nf2 = q2.normal_form(&image.reduce_mod2())?;
            let c2 = nf2.coordinates(d);
            let target = mod2_xi_monomial(m.exponents(), q2.grading())?;
            let expected_pos = basis2.iter().position(|b| *b == target);
            let is_unit_vector = match expected_pos {
                Some(pos) => c2.iter().enumerate().all(|(i, x)| x.bit() == (i == pos)),
                None => false,
            };
            mod2_is_monomial &= is_unit_vector;
            columns2.push(c2);

            if let Some((tq, tmap)) = &tau_side {
                let tau_image = tmap.apply(&e)?;
                let back = tau_to_c(k, &tau_image.to_rational())?;
                let ok = back.to_integer().is_some_and(|b| b == image);
                integral = integral.map(|acc| acc && ok);
                tau_columns.push(tq.normal_form_integral(&tau_image)?.coordinates(d));
            }
        }
        let mz = integral_coordinate_matrix(&columns, rank);
        let m2 = IntMatrix::from_rows_with_cols(
            &(0..rank2)
                .map(|i| {
                    columns2
                        .iter()
                        .map(|c| BigInt::from(u8::from(c[i].bit())))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
            monomials.len(),
        );
        let image_rank_q = rank_over_rationals(&mz);
        let tau_rank_agrees = tau_side.as_ref().map(|(tq, _)| {
            let tm = integral_coordinate_matrix(&tau_columns, tq.rank(d));
            rank_over_rationals(&tm) == image_rank_q
        });
        degrees.push(DegreeReport {
            degree: d,
            domain_dim: monomials.len(),
            codomain_rank: rank,
            image_rank_q,
            image_rank_mod2: rank_mod2(&m2),
            kernel_basis: integer_kernel(&mz),
            mod2_is_monomial,
            integral,
            tau_rank_agrees,
        });
    }
    Ok(KernelReport {
        lie_type,
        k,
        degree_cap: cap,
        codomain: pres.family(),
        degrees,
    })
}

/// Whether pulling the `(n+1, k)` map back along `x_{n+k+1} -> 0` gives the
/// `(n, k)` map on every generator, compared in the `(n, k)` ring.
pub fn diagram_check(n: u32, k: u32, lie_type: LieType) -> Result<bool, XiError> {
    if k > n {
        return Err(XiError::InvalidParameters(format!(
            "need k <= n, got n = {n}, k = {k}"
        )));
    }
    let big = RingPresentation::finite(lie_type, n + 1, k)?;
    let small = RingPresentation::finite(lie_type, n, k)?;
    let big_map = XiMap::new(&big)?;
    let small_map = XiMap::new(&small)?;
    let pi = transition_map(big.grading(), small.grading());
    let cap = small.natural_cap().max(4 * k);
    let q = GradedQuotient::<BigRational>::build(&small, cap)?;
    for i in 1..=k {
        let pulled = pi.apply(big_map.generator_image(i)?)?;
        let lhs = q.normal_form_integral(&pulled)?;
        let rhs = q.normal_form_integral(small_map.generator_image(i)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree in which the image misses a nonzero class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSurjectivityWitness {
    pub codomain: Family,
    pub degree: u32,
    pub domain_dim: usize,
    pub codomain_rank: usize,
    /// Codomain basis in that degree, rendered.
    pub missed_classes: Vec<String>,
}

impl NonSurjectivityWitness {
    pub fn is_valid(&self) -> bool {
        self.domain_dim == 0 && self.codomain_rank > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "codomain": self.codomain.to_string(),
            "degree": self.degree,
            "domain_dim": self.domain_dim,
            "codomain_rank": self.codomain_rank,
            "missed_classes": self.missed_classes,
        })
    }
}

/// The domain vanishes in degree 2 (its generators start in degree 4) while
/// the stable ring has rank 1 there, spanned by `c1` (or `tau1`).
pub fn nonsurjectivity_witness(
    k: u32,
    lie_type: LieType,
    cap: u32,
) -> Result<NonSurjectivityWitness, XiError> {
    if k == 0 {
        return Err(XiError::InvalidParameters("k must be at least 1".into()));
    }
    let pres = RingPresentation::stable(lie_type, k, cap)?;
    let q = GradedQuotient::<BigRational>::build(&pres, cap.min(4))?;
    let domain = RepPolyDomain::new(lie_type, k);
    Ok(NonSurjectivityWitness {
        codomain: pres.family(),
        degree: 2,
        domain_dim: domain.basis(2).len(),
        codomain_rank: q.rank(2),
        missed_classes: q.basis(2).iter().map(|m| m.render(q.grading())).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        let g = c_grading(8);
        assert_eq!(xi_formula(1, &g).to_string(), "c1^2 - 2*c2");
        assert_eq!(xi_formula(2, &g).to_string(), "-2*c1*c3 + c2^2 + 2*c4");
    }

    #[test]
    fn finite_projective_space() {
        let pres = RingPresentation::finite(LieType::C, 2, 1).unwrap();
        let q = GradedQuotient::<BigRational>::build(&pres, 8).unwrap();
        let img = xi_generator_image(1, &q).unwrap();
        assert_eq!(img.to_string(), "-c1^2");
        assert!(xi_generator_image(2, &q).is_err());
    }

    #[test]
    fn evaluation_in_stable_ring() {
        let pres = RingPresentation::stable(LieType::C, 1, 8).unwrap();
        let q = GradedQuotient::<BigRational>::build(&pres, 8).unwrap();
        let map = XiMap::new(&pres).unwrap();
        let e = e_grading(1);
        let one = xi_evaluate(&Polynomial::one(&e), &map, &q).unwrap();
        assert_eq!(one.to_string(), "1");
        let sq = xi_evaluate(&Polynomial::parse("e1^2", &e).unwrap(), &map, &q).unwrap();
        let direct = q
            .normal_form(&Polynomial::parse("c1^2 - 2*c2", q.grading()).unwrap())
            .unwrap();
        assert_eq!(sq, direct.mul(&direct).unwrap());
    }

    #[test]
    fn mod2_monomials() {
        let g = c_grading(4);
        assert_eq!(mod2_xi_monomial(&[1], &g).unwrap().render(&g), "c1^2");
        assert_eq!(
            mod2_xi_monomial(&[1, 1], &g).unwrap().render(&g),
            "c1^2*c2^2"
        );
        assert_eq!(mod2_xi_monomial(&[0, 0], &g).unwrap().render(&g), "1");
    }

    #[test]
    fn small_scans() {
        let r = injectivity_scan(1, LieType::C, 12).unwrap();
        assert!(r.is_injective() && r.mod2_route_holds());
        let r = injectivity_scan(1, LieType::B, 12).unwrap();
        assert!(r.is_injective() && r.mod2_route_holds() && r.type_b_checks_hold());
    }

    #[test]
    fn diagrams_and_witness() {
        assert!(diagram_check(2, 1, LieType::C).unwrap());
        assert!(diagram_check(2, 1, LieType::B).unwrap());
        let w = nonsurjectivity_witness(1, LieType::B, 16).unwrap();
        assert!(w.is_valid());
        assert_eq!(w.missed_classes, ["tau1"]);
    }
}
