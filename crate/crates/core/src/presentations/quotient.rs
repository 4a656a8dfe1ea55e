use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{Family, PresentationError, RingPresentation};
use crate::intlinalg::{FieldEchelon, IntegerEchelon, SparseRow};
use crate::polycore::{
    monomials_of_degree, Coefficient, FieldCoefficient, Gf2, GradingSpec, Monomial, Polynomial,
};

/// Monomials of one degree, indexed in ascending monomial order.
#[derive(Clone, Debug)]
struct DegreeIndex {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeIndex {
    fn new(grading: &GradingSpec, degree: u32) -> Self {
        let mut monomials = monomials_of_degree(grading, degree, None);
        monomials.reverse();
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        DegreeIndex { monomials, index }
    }

    fn vector<R: Coefficient>(&self, p: &Polynomial<R>) -> SparseRow<R> {
        let mut v: SparseRow<R> = p.terms().map(|(m, c)| (self.index[m], c.clone())).collect();
        v.sort_by_key(|(c, _)| *c);
        v
    }
}

/// Minimal interface shared by the field and lattice echelon forms.
trait Echelon<T> {
    fn with_cols(n: usize) -> Self;
    fn add(&mut self, v: &[(usize, T)]);
    fn basis_rows(&self) -> Vec<SparseRow<T>>;
}

impl<F: FieldCoefficient> Echelon<F> for FieldEchelon<F> {
    fn with_cols(n: usize) -> Self {
        FieldEchelon::new(n)
    }
    fn add(&mut self, v: &[(usize, F)]) {
        self.insert(v);
    }
    fn basis_rows(&self) -> Vec<SparseRow<F>> {
        self.rows().map(|(_, r)| r.clone()).collect()
    }
}

impl Echelon<BigInt> for IntegerEchelon {
    fn with_cols(n: usize) -> Self {
        IntegerEchelon::new(n)
    }
    fn add(&mut self, v: &[(usize, BigInt)]) {
        self.insert(v);
    }
    fn basis_rows(&self) -> Vec<SparseRow<BigInt>> {
        self.rows().map(|(_, r)| r.clone()).collect()
    }
}

/// Degreewise echelon bases of the ideal: `I_d = sum_v x_v I_{d - deg x_v} + span(relations of degree d)`.
fn ideal_by_degree<T, E, C>(
    pres: &RingPresentation,
    cap: u32,
    convert: C,
) -> Result<(Vec<DegreeIndex>, Vec<E>), PresentationError>
where
    T: Clone,
    E: Echelon<T>,
    C: Fn(&BigInt) -> T,
{
    if !cap.is_multiple_of(2) {
        return Err(PresentationError::OddCap(cap));
    }
    if let Some(t) = pres.truncation() {
        if cap > t {
            return Err(PresentationError::InvalidParameters(format!(
                "degree cap {cap} exceeds the generator truncation {t}"
            )));
        }
    }
    let grading = pres.grading();
    let mut by_degree: BTreeMap<u32, Vec<&Polynomial<BigInt>>> = BTreeMap::new();
    for rel in pres.relations() {
        if rel.poly.is_zero() {
            continue;
        }
        let d = rel
            .poly
            .homogeneous_degree()
            .ok_or_else(|| PresentationError::Inhomogeneous(rel.label.clone()))?;
        by_degree.entry(d).or_default().push(&rel.poly);
    }
    let mut indices: Vec<DegreeIndex> = Vec::new();
    let mut echelons: Vec<E> = Vec::new();
    for d in 0..=cap {
        let idx = DegreeIndex::new(grading, d);
        let mut ech = E::with_cols(idx.monomials.len());
        for v in 0..grading.len() {
            let w = grading.degree_of(v);
            if w > d {
                continue;
            }
            let prev = (d - w) as usize;
            let lower = &indices[prev];
            for row in echelons[prev].basis_rows() {
                let mut mapped: SparseRow<T> = row
                    .into_iter()
                    .map(|(c, x)| (idx.index[&lower.monomials[c].times_variable(v, w)], x))
                    .collect();
                mapped.sort_by_key(|(c, _)| *c);
                ech.add(&mapped);
            }
        }
        for rel in by_degree.get(&d).into_iter().flatten() {
            let v: SparseRow<T> = idx
                .vector(rel)
                .into_iter()
                .map(|(c, x)| (c, convert(&x)))
                .collect();
            ech.add(&v);
        }
        indices.push(idx);
        echelons.push(ech);
    }
    Ok((indices, echelons))
}

#[derive(Clone, Debug)]
struct Piece<F> {
    index: DegreeIndex,
    echelon: FieldEchelon<F>,
    /// Non-pivot columns, largest monomial first.
    basis: Vec<usize>,
    /// Column to position in `basis`.
    basis_pos: HashMap<usize, usize>,
}

/// Per-degree lattice diagnostics of the integral ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionEntry {
    pub degree: u32,
    pub monomials: usize,
    pub ideal_rank: usize,
    pub free_rank: usize,
    pub torsion_factors: Vec<BigInt>,
}

/// The presented ring over the field `F`, computed in every degree up to a cap.
#[derive(Clone, Debug)]
pub struct GradedQuotient<F: FieldCoefficient> {
    presentation: RingPresentation,
    cap: u32,
    pieces: Vec<Piece<F>>,
}

impl<F: FieldCoefficient> GradedQuotient<F> {
    pub fn build(pres: &RingPresentation, cap: u32) -> Result<Self, PresentationError> {
        let (indices, echelons) =
            ideal_by_degree::<F, FieldEchelon<F>, _>(pres, cap, |x| F::from_bigint(x))?;
        let pieces = indices
            .into_iter()
            .zip(echelons)
            .map(|(index, echelon)| {
                let basis: Vec<usize> = (0..index.monomials.len())
                    .rev()
                    .filter(|&c| !echelon.is_pivot(c))
                    .collect();
                let basis_pos = basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
                Piece {
                    index,
                    echelon,
                    basis,
                    basis_pos,
                }
            })
            .collect();
        Ok(GradedQuotient {
            presentation: pres.clone(),
            cap,
            pieces,
        })
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn grading(&self) -> &GradingSpec {
        self.presentation.grading()
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Rank of the quotient in `degree` (zero above the cap is not asserted).
    pub fn rank(&self, degree: u32) -> usize {
        self.pieces
            .get(degree as usize)
            .map_or(0, |p| p.basis.len())
    }

    /// Even degree to quotient rank, for every even degree up to the cap.
    pub fn ranks(&self) -> BTreeMap<u32, usize> {
        (0..=self.cap)
            .step_by(2)
            .map(|d| (d, self.rank(d)))
            .collect()
    }

    pub fn free_dimension(&self, degree: u32) -> usize {
        self.pieces
            .get(degree as usize)
            .map_or(0, |p| p.index.monomials.len())
    }

    pub fn ideal_dimension(&self, degree: u32) -> usize {
        self.pieces
            .get(degree as usize)
            .map_or(0, |p| p.echelon.rank())
    }

    /// Quotient basis monomials of `degree`, largest first.
    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        self.pieces.get(degree as usize).map_or_else(Vec::new, |p| {
            p.basis
                .iter()
                .map(|&c| p.index.monomials[c].clone())
                .collect()
        })
    }

    pub fn zero(&self) -> QuotientElement<'_, F> {
        QuotientElement {
            parent: self,
            coords: BTreeMap::new(),
        }
    }

    pub fn normal_form(
        &self,
        p: &Polynomial<F>,
    ) -> Result<QuotientElement<'_, F>, PresentationError> {
        if p.grading() != self.grading() {
            return Err(PresentationError::GradingMismatch);
        }
        let mut coords = BTreeMap::new();
        for d in p.degrees() {
            let piece = self
                .pieces
                .get(d as usize)
                .ok_or(PresentationError::CapExceeded {
                    degree: d,
                    cap: self.cap,
                })?;
            let v = piece.index.vector(&p.graded_component(d));
            let residue = piece.echelon.reduce(&v);
            if residue.is_empty() {
                continue;
            }
            let mut c = vec![F::zero(); piece.basis.len()];
            for (col, x) in residue {
                c[piece.basis_pos[&col]] = x;
            }
            coords.insert(d, c);
        }
        Ok(QuotientElement {
            parent: self,
            coords,
        })
    }

    /// Normal form of an integral polynomial, read in `F`.
    pub fn normal_form_integral(
        &self,
        p: &Polynomial<BigInt>,
    ) -> Result<QuotientElement<'_, F>, PresentationError> {
        self.normal_form(&p.map_coefficients(|c| F::from_bigint(c)))
    }

    /// Polynomial supported on basis monomials with the given coordinates in `degree`.
    fn lift_degree(&self, degree: u32, coords: &[F]) -> Polynomial<F> {
        let piece = &self.pieces[degree as usize];
        let mut p = Polynomial::zero(self.grading());
        for (pos, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                let m = piece.index.monomials[piece.basis[pos]].clone();
                p = &p + &Polynomial::term(self.grading(), m, x.clone());
            }
        }
        p
    }
}

impl GradedQuotient<BigRational> {
    /// The same presentation with coefficients reduced mod 2 (stable families only).
    pub fn mod2_quotient(&self) -> Result<GradedQuotient<Gf2>, PresentationError> {
        if !self.presentation.family().is_stable() {
            return Err(PresentationError::NotStable("mod2_quotient"));
        }
        GradedQuotient::build(&self.presentation, self.cap)
    }

    /// Lattice diagnostics of the integral ideal in every degree up to the cap.
    pub fn torsion_report(&self) -> Result<Vec<TorsionEntry>, PresentationError> {
        torsion_report(&self.presentation, self.cap)
    }
}

impl GradedQuotient<Gf2> {
    /// Checks that the basis in each degree is exactly the monomials
    /// `c_1^a_1 ... c_k^a_k * prod_{j>k} c_j^{e_j}` with `e_j` in `{0, 1}`.
    /// Applies to the `c`-presented stable families.
    pub fn matches_exterior_basis(&self) -> Result<bool, PresentationError> {
        let k = match self.presentation.family() {
            Family::StableC { k } | Family::StableBSubring { k } => k as usize,
            Family::StableB { .. } => {
                return Err(PresentationError::Unsupported(
                    "the mod-2 basis description applies to the c-generated subring; use StableBSubring"
                        .into(),
                ))
            }
            _ => return Err(PresentationError::NotStable("matches_exterior_basis")),
        };
        for d in (0..=self.cap).step_by(2) {
            let mut expected: Vec<Monomial> = monomials_of_degree(self.grading(), d, None)
                .into_iter()
                .filter(|m| m.exponents().iter().skip(k).all(|&e| e <= 1))
                .collect();
            let mut actual = self.basis(d);
            expected.sort();
            actual.sort();
            if expected != actual {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Lattice diagnostics of the integral ideal of `pres` up to `cap`.
pub fn torsion_report(
    pres: &RingPresentation,
    cap: u32,
) -> Result<Vec<TorsionEntry>, PresentationError> {
    let (indices, echelons) =
        ideal_by_degree::<BigInt, IntegerEchelon, _>(pres, cap, Clone::clone)?;
    Ok(indices
        .iter()
        .zip(&echelons)
        .enumerate()
        .filter(|(d, _)| d % 2 == 0)
        .map(|(d, (idx, ech))| {
            let torsion_factors = if ech.pivots_are_units() {
                Vec::new()
            } else {
                ech.invariant_factors()
                    .into_iter()
                    .filter(|f| !f.is_one())
                    .collect()
            };
            TorsionEntry {
                degree: d as u32,
                monomials: idx.monomials.len(),
                ideal_rank: ech.rank(),
                free_rank: idx.monomials.len() - ech.rank(),
                torsion_factors,
            }
        })
        .collect())
}

/// An element of a graded quotient, stored by its normal-form coordinates.
#[derive(Clone)]
pub struct QuotientElement<'q, F: FieldCoefficient> {
    parent: &'q GradedQuotient<F>,
    coords: BTreeMap<u32, Vec<F>>,
}

impl<'q, F: FieldCoefficient> QuotientElement<'q, F> {
    pub fn parent(&self) -> &'q GradedQuotient<F> {
        self.parent
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinates over the basis of `degree` (all zero when the component vanishes).
    pub fn coordinates(&self, degree: u32) -> Vec<F> {
        self.coords
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| vec![F::zero(); self.parent.rank(degree)])
    }

    /// Degrees with a nonzero component.
    pub fn support(&self) -> Vec<u32> {
        self.coords.keys().copied().collect()
    }

    /// The representative supported on basis monomials.
    pub fn lift(&self) -> Polynomial<F> {
        let mut p = Polynomial::zero(self.parent.grading());
        for (d, c) in &self.coords {
            p = &p + &self.parent.lift_degree(*d, c);
        }
        p
    }

    pub fn add(&self, other: &Self) -> Result<Self, PresentationError> {
        self.parent.normal_form(&(&self.lift() + &other.lift()))
    }

    /// Product in the quotient; fails if it would leave the computed range.
    pub fn mul(&self, other: &Self) -> Result<Self, PresentationError> {
        self.parent.normal_form(&(&self.lift() * &other.lift()))
    }
}

impl<F: FieldCoefficient> PartialEq for QuotientElement<'_, F> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.coords == other.coords
    }
}

impl<F: FieldCoefficient> fmt::Debug for QuotientElement<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientElement")
            .field("family", &self.parent.presentation.family())
            .field("coords", &self.coords)
            .finish()
    }
}

impl<F: FieldCoefficient> fmt::Display for QuotientElement<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::LieType;

    fn qq(ty: LieType, n: u32, k: u32, cap: u32) -> GradedQuotient<BigRational> {
        GradedQuotient::build(&RingPresentation::finite(ty, n, k).unwrap(), cap).unwrap()
    }

    fn parse(q: &GradedQuotient<BigRational>, s: &str) -> Polynomial<BigRational> {
        Polynomial::parse(s, q.grading()).unwrap()
    }

    #[test]
    fn projective_space_model() {
        let q = qq(LieType::C, 2, 1, 8);
        assert_eq!(
            q.ranks(),
            BTreeMap::from([(0, 1), (2, 1), (4, 1), (6, 1), (8, 0)])
        );
        let c2 = q.normal_form(&parse(&q, "c2")).unwrap();
        assert_eq!(c2, q.normal_form(&parse(&q, "c1^2")).unwrap());
        assert_eq!(c2.to_string(), "c1^2");
        assert!(q.normal_form(&parse(&q, "c1^4")).unwrap().is_zero());
        assert!(!q.normal_form(&parse(&q, "c1^3")).unwrap().is_zero());
        assert!(q
            .normal_form(&Polynomial::zero(q.grading()))
            .unwrap()
            .is_zero());
        assert!(matches!(
            q.normal_form(&parse(&q, "c1^5")),
            Err(PresentationError::CapExceeded { degree: 10, cap: 8 })
        ));
        for rel in q.presentation().relations() {
            assert!(q.normal_form_integral(&rel.poly).unwrap().is_zero());
        }
    }

    #[test]
    fn lagrangian_and_type_b_small() {
        let q = qq(LieType::C, 2, 0, 8);
        assert_eq!(
            q.ranks(),
            BTreeMap::from([(0, 1), (2, 1), (4, 1), (6, 1), (8, 0)])
        );
        let q = qq(LieType::B, 2, 1, 8);
        assert_eq!(
            q.ranks(),
            BTreeMap::from([(0, 1), (2, 1), (4, 1), (6, 1), (8, 0)])
        );
    }

    #[test]
    fn stable_low_degrees_and_torsion() {
        let pres = RingPresentation::stable(LieType::C, 1, 4).unwrap();
        assert!(!pres.warnings().is_empty());
        let q = GradedQuotient::<BigRational>::build(&pres, 4).unwrap();
        assert_eq!(q.ranks(), BTreeMap::from([(0, 1), (2, 1), (4, 2)]));
        let pres = RingPresentation::stable(LieType::C, 1, 8).unwrap();
        let q = GradedQuotient::<BigRational>::build(&pres, 8).unwrap();
        assert!(q
            .torsion_report()
            .unwrap()
            .iter()
            .all(|e| e.torsion_factors.is_empty()));
    }

    #[test]
    fn mod2_structure() {
        let pres = RingPresentation::stable(LieType::C, 1, 8).unwrap();
        let q = GradedQuotient::<BigRational>::build(&pres, 8).unwrap();
        let m = q.mod2_quotient().unwrap();
        let s2 = pres.relations()[0].poly.reduce_mod2();
        assert_eq!(s2.to_string(), "c2^2");
        assert!(m.matches_exterior_basis().unwrap());
        let names: Vec<String> = m.basis(8).iter().map(|x| x.render(m.grading())).collect();
        assert_eq!(names, ["c1^4", "c1^2*c2", "c1*c3", "c4"]);
        assert!(qq(LieType::C, 2, 1, 8).mod2_quotient().is_err());
    }

    #[test]
    fn torsion_detected_when_present() {
        // 2*c1 = 0 gives ZZ/2 in degree 2.
        let g = crate::presentations::c_grading(1);
        let pres = RingPresentation {
            family: Family::StableC { k: 0 },
            grading: g.clone(),
            relations: vec![crate::presentations::LabeledRelation {
                label: "T".into(),
                poly: Polynomial::parse("2*c1", &g).unwrap(),
            }],
            truncation: None,
            warnings: Vec::new(),
        };
        let report = torsion_report(&pres, 4).unwrap();
        assert_eq!(report[1].torsion_factors, vec![BigInt::from(2)]);
        assert_eq!(report[2].torsion_factors, vec![BigInt::from(2)]);
    }
}
