//! Presentations of the cohomology rings of `IG(n-k, 2n)`, `OG(n-k, 2n+1)` and
//! their stable limits, with degreewise quotient computations.

mod quotient;
mod relations;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::partitions::grassmannian_dimension;
use crate::polycore::{GeneratorMap, GradingSpec, PolyError, Polynomial};

pub use quotient::{torsion_report, GradedQuotient, QuotientElement, TorsionEntry};
pub use relations::{
    c_grading, c_to_tau, c_to_tau_integral, delta, jacobi_determinant, relations_finite_b,
    relations_finite_c, relations_stable, s_bar_stable, s_hat, tau_grading, tau_to_c,
    LabeledRelation,
};

/// Default truncation degree for stable rings.
pub const DEFAULT_DEGREE_CAP: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree cap must be even, got {0}")]
    OddCap(u32),
    #[error("degree {degree} exceeds the degree cap {cap}")]
    CapExceeded { degree: u32, cap: u32 },
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("polynomial does not live over the generators of this ring")]
    GradingMismatch,
    #[error("{0} is only defined for stable rings")]
    NotStable(&'static str),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Symplectic (`C`) or odd orthogonal (`B`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieType {
    C,
    B,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieType::C => "C",
            LieType::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    FiniteC {
        n: u32,
        k: u32,
    },
    FiniteB {
        n: u32,
        k: u32,
    },
    StableC {
        k: u32,
    },
    StableB {
        k: u32,
    },
    /// The subring of the stable type-B ring generated by `c_i = delta_i tau_i`,
    /// presented in the `c_i`.
    StableBSubring {
        k: u32,
    },
}

impl Family {
    pub fn finite(ty: LieType, n: u32, k: u32) -> Self {
        match ty {
            LieType::C => Family::FiniteC { n, k },
            LieType::B => Family::FiniteB { n, k },
        }
    }

    pub fn stable(ty: LieType, k: u32) -> Self {
        match ty {
            LieType::C => Family::StableC { k },
            LieType::B => Family::StableB { k },
        }
    }

    pub fn k(&self) -> u32 {
        match *self {
            Family::FiniteC { k, .. }
            | Family::FiniteB { k, .. }
            | Family::StableC { k }
            | Family::StableB { k }
            | Family::StableBSubring { k } => k,
        }
    }

    pub fn n(&self) -> Option<u32> {
        match *self {
            Family::FiniteC { n, .. } | Family::FiniteB { n, .. } => Some(n),
            _ => None,
        }
    }

    pub fn lie_type(&self) -> LieType {
        match self {
            Family::FiniteC { .. } | Family::StableC { .. } => LieType::C,
            _ => LieType::B,
        }
    }

    pub fn is_stable(&self) -> bool {
        self.n().is_none()
    }

    /// Whether the generators are the `tau_i` (as opposed to the `c_i`).
    pub fn uses_tau(&self) -> bool {
        matches!(self, Family::FiniteB { .. } | Family::StableB { .. })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::FiniteC { n, k } => write!(f, "FiniteC(n={n}, k={k})"),
            Family::FiniteB { n, k } => write!(f, "FiniteB(n={n}, k={k})"),
            Family::StableC { k } => write!(f, "StableC(k={k})"),
            Family::StableB { k } => write!(f, "StableB(k={k})"),
            Family::StableBSubring { k } => write!(f, "StableBSubring(k={k})"),
        }
    }
}

/// Generators, degrees and integral relations of one of the rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    family: Family,
    grading: GradingSpec,
    relations: Vec<LabeledRelation>,
    truncation: Option<u32>,
    warnings: Vec<String>,
}

impl RingPresentation {
    pub fn finite(ty: LieType, n: u32, k: u32) -> Result<Self, PresentationError> {
        let relations = match ty {
            LieType::C => relations_finite_c(n, k)?,
            LieType::B => relations_finite_b(n, k)?,
        };
        let m = (n + k) as usize;
        let grading = match ty {
            LieType::C => c_grading(m),
            LieType::B => tau_grading(m),
        };
        Ok(RingPresentation {
            family: Family::finite(ty, n, k),
            grading,
            relations,
            truncation: None,
            warnings: Vec::new(),
        })
    }

    /// Stable ring truncated at `cap`: generators of degree `<= cap`, relations of degree `<= cap`.
    pub fn stable(ty: LieType, k: u32, cap: u32) -> Result<Self, PresentationError> {
        let relations = relations_stable(ty, k, cap)?;
        let m = (cap / 2) as usize;
        let grading = match ty {
            LieType::C => c_grading(m),
            LieType::B => tau_grading(m),
        };
        Ok(RingPresentation {
            family: Family::stable(ty, k),
            grading,
            warnings: small_cap_warning(k, cap, relations.is_empty()),
            relations,
            truncation: Some(cap),
        })
    }

    /// The `c`-generated subring of the stable type-B ring. Its relations are
    /// the images of `4 S^s` under `tau -> c`, which must come out integral.
    pub fn stable_b_subring(k: u32, cap: u32) -> Result<Self, PresentationError> {
        let tau = relations_stable(LieType::B, k, cap)?;
        let m = (cap / 2) as usize;
        let grading = c_grading(m);
        let four = BigRational::from_integer(BigInt::from(4));
        let mut relations = Vec::with_capacity(tau.len());
        for rel in &tau {
            let rewritten = tau_to_c(k, &rel.poly.to_rational().scale(&four))?;
            let poly = rewritten.to_integer().ok_or_else(|| {
                PresentationError::Unsupported(format!(
                    "4*{} is not integral after tau -> c",
                    rel.label
                ))
            })?;
            relations.push(LabeledRelation {
                label: rel.label.clone(),
                poly,
            });
        }
        Ok(RingPresentation {
            family: Family::StableBSubring { k },
            grading,
            warnings: small_cap_warning(k, cap, relations.is_empty()),
            relations,
            truncation: Some(cap),
        })
    }

    /// Builds any family; `cap` is required for stable families.
    pub fn from_family(family: Family, cap: Option<u32>) -> Result<Self, PresentationError> {
        let cap = cap.unwrap_or(DEFAULT_DEGREE_CAP);
        match family {
            Family::FiniteC { n, k } => Self::finite(LieType::C, n, k),
            Family::FiniteB { n, k } => Self::finite(LieType::B, n, k),
            Family::StableC { k } => Self::stable(LieType::C, k, cap),
            Family::StableB { k } => Self::stable(LieType::B, k, cap),
            Family::StableBSubring { k } => Self::stable_b_subring(k, cap),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    pub fn relations(&self) -> &[LabeledRelation] {
        &self.relations
    }

    /// Degree bound of the generator truncation (stable families only).
    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Truncation degree for stable rings, twice the complex dimension for finite ones.
    pub fn natural_cap(&self) -> u32 {
        match (self.truncation, self.family) {
            (Some(cap), _) => cap,
            (None, Family::FiniteC { n, k } | Family::FiniteB { n, k }) => {
                2 * grassmannian_dimension(k, n).expect("validated on construction")
            }
            (None, _) => unreachable!("stable families carry a truncation"),
        }
    }
}

fn small_cap_warning(k: u32, cap: u32, empty: bool) -> Vec<String> {
    if empty {
        vec![format!(
            "degree cap {cap} is below 4(k+1) = {}; no relations included",
            4 * (k + 1)
        )]
    } else {
        Vec::new()
    }
}

/// Outcome of pushing the relations of the `n+1` ring down to the `n` ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub n: u32,
    pub k: u32,
    pub lie_type: LieType,
    /// `(label, whether the image has zero normal form)`.
    pub relations: Vec<(String, bool)>,
}

impl StabilityReport {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

/// The substitution `x_j -> x_j` (`j <= n+k`), `x_{n+k+1} -> 0` from the ring
/// with `n+k+1` generators to the one with `n+k`.
pub fn transition_map(from: &GradingSpec, to: &GradingSpec) -> GeneratorMap<Polynomial<BigInt>> {
    let mut map = GeneratorMap::new(from, Polynomial::one(to));
    for j in 0..from.len() {
        let image = if j < to.len() {
            Polynomial::variable(to, j)
        } else {
            Polynomial::zero(to)
        };
        map.set(j, image);
    }
    map
}

/// Checks that every relation of the `(n+1, k)` ring maps into the ideal of the `(n, k)` ring.
pub fn stability_check(ty: LieType, n: u32, k: u32) -> Result<StabilityReport, PresentationError> {
    let big = RingPresentation::finite(ty, n + 1, k)?;
    let small = RingPresentation::finite(ty, n, k)?;
    let map = transition_map(big.grading(), small.grading());
    let images: Vec<(String, Polynomial<BigInt>)> = big
        .relations()
        .iter()
        .map(|r| Ok((r.label.clone(), map.apply(&r.poly)?)))
        .collect::<Result<_, PolyError>>()?;
    let cap = images
        .iter()
        .filter_map(|(_, p)| p.max_degree())
        .max()
        .unwrap_or(0)
        .max(small.natural_cap());
    let q = GradedQuotient::<BigRational>::build(&small, cap)?;
    let mut relations = Vec::new();
    for (label, p) in images {
        relations.push((label, q.normal_form_integral(&p)?.is_zero()));
    }
    Ok(StabilityReport {
        n,
        k,
        lie_type: ty,
        relations,
    })
}
