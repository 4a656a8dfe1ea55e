use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use isocoh::polycore::{GradingSpec, Polynomial};
use isocoh::presentations::{GradedQuotient, LieType, RingPresentation};
use isocoh::xi::{e_grading, xi_evaluate, XiMap};

fn poly_in(grading: GradingSpec, max_exp: u32) -> impl Strategy<Value = Polynomial<BigInt>> {
    let n = grading.len();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -5i64..=5), 0..5).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &grading,
                terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
            )
            .unwrap()
        },
    )
}

fn bounded(p: Polynomial<BigInt>, max: u32) -> Polynomial<BigInt> {
    p.degrees()
        .into_iter()
        .filter(|d| *d <= max)
        .fold(Polynomial::zero(p.grading()), |acc, d| {
            &acc + &p.graded_component(d)
        })
}

fn finite_c31() -> RingPresentation {
    RingPresentation::finite(LieType::C, 3, 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_a_ring_map(
        a in poly_in(finite_c31().grading().clone(), 2),
        b in poly_in(finite_c31().grading().clone(), 2),
    ) {
        let pres = finite_c31();
        let q = GradedQuotient::<BigRational>::build(&pres, pres.natural_cap()).unwrap();
        let (a, b) = (bounded(a, 6), bounded(b, 6));
        let (na, nb) = (q.normal_form_integral(&a).unwrap(), q.normal_form_integral(&b).unwrap());
        prop_assert_eq!(q.normal_form_integral(&(&a * &b)).unwrap(), na.mul(&nb).unwrap());
        prop_assert_eq!(q.normal_form_integral(&(&a + &b)).unwrap(), na.add(&nb).unwrap());
        // Normal forms are fixed points.
        prop_assert_eq!(q.normal_form(&na.lift()).unwrap(), na);
    }

    #[test]
    fn ideal_elements_reduce_to_zero(m in poly_in(finite_c31().grading().clone(), 1), idx in 0usize..8) {
        let pres = finite_c31();
        let q = GradedQuotient::<BigRational>::build(&pres, pres.natural_cap()).unwrap();
        let rel = &pres.relations()[idx % pres.relations().len()].poly;
        let m = bounded(m, pres.natural_cap().saturating_sub(rel.max_degree().unwrap()));
        prop_assert!(q.normal_form_integral(&(&m * rel)).unwrap().is_zero());
    }

    #[test]
    fn xi_is_multiplicative(
        ty in prop_oneof![Just(LieType::C), Just(LieType::B)],
        a in poly_in(e_grading(2), 2),
        b in poly_in(e_grading(2), 2),
    ) {
        let pres = RingPresentation::stable(ty, 2, 16).unwrap();
        let q = GradedQuotient::<BigRational>::build(&pres, 16).unwrap();
        let map = XiMap::new(&pres).unwrap();
        let (a, b) = (bounded(a, 8), bounded(b, 8));
        let lhs = xi_evaluate(&(&a * &b), &map, &q).unwrap();
        let rhs = xi_evaluate(&a, &map, &q).unwrap().mul(&xi_evaluate(&b, &map, &q).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = xi_evaluate(&(&a + &b), &map, &q).unwrap();
        prop_assert_eq!(sum, xi_evaluate(&a, &map, &q).unwrap().add(&xi_evaluate(&b, &map, &q).unwrap()).unwrap());
    }
}
