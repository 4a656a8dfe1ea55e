use num_bigint::BigInt;
use proptest::prelude::*;

use isocoh::polycore::{monomials_of_degree, GeneratorMap, GradingSpec, Polynomial};
use isocoh::presentations::c_grading;

fn poly_strategy(nvars: usize, max_exp: u32) -> impl Strategy<Value = Polynomial<BigInt>> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -20i64..=20),
        0..6,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            &c_grading(nvars),
            terms.into_iter().map(|(e, c)| (e, BigInt::from(c))),
        )
        .unwrap()
    })
}

/// Counts exponent vectors of weighted degree `d` by direct recursion.
fn count_by_hand(degrees: &[u32], d: u32) -> usize {
    match degrees.split_first() {
        None => usize::from(d == 0),
        Some((&w, rest)) => (0..=d / w).map(|e| count_by_hand(rest, d - e * w)).sum(),
    }
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(3, 2), b in poly_strategy(3, 2), c in poly_strategy(3, 2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(a.grading()), a.clone());
    }

    #[test]
    fn degrees_add_under_products(a in poly_strategy(3, 3), b in poly_strategy(3, 3), d1 in 0u32..12, d2 in 0u32..12) {
        let (x, y) = (a.graded_component(2 * d1), b.graded_component(2 * d2));
        let prod = &x * &y;
        if !prod.is_zero() {
            prop_assert_eq!(prod.homogeneous_degree(), Some(2 * (d1 + d2)));
        }
        let rebuilt = a.degrees().into_iter().fold(Polynomial::zero(a.grading()), |acc, d| &acc + &a.graded_component(d));
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn substitution_is_a_homomorphism(
        a in poly_strategy(3, 2),
        b in poly_strategy(3, 2),
        images in prop::collection::vec(poly_strategy(3, 1), 3),
    ) {
        let g = a.grading().clone();
        let mut map = GeneratorMap::new(&g, Polynomial::one(&g));
        for (i, img) in images.into_iter().enumerate() {
            map.set(i, img);
        }
        let (fa, fb) = (map.apply(&a).unwrap(), map.apply(&b).unwrap());
        prop_assert_eq!(map.apply(&(&a * &b)).unwrap(), &fa * &fb);
        prop_assert_eq!(map.apply(&(&a + &b)).unwrap(), &fa + &fb);
    }

    #[test]
    fn text_and_json_round_trip(a in poly_strategy(4, 3)) {
        let text = a.to_string();
        prop_assert_eq!(Polynomial::<BigInt>::parse(&text, a.grading()).unwrap(), a.clone());
        prop_assert_eq!(Polynomial::<BigInt>::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn monomial_listing_matches_brute_force(degrees in prop::collection::vec(1u32..=4, 1..=8), d in 0u32..=20) {
        let names = (1..=degrees.len()).map(|i| format!("y{i}")).collect();
        let g = GradingSpec::new(names, degrees.clone()).unwrap();
        let listed = monomials_of_degree(&g, d, None);
        prop_assert_eq!(listed.len(), count_by_hand(&degrees, d));
        prop_assert!(listed.iter().all(|m| m.degree() == d));
        prop_assert!(listed.windows(2).all(|w| w[0].compare(&w[1]) == std::cmp::Ordering::Greater));
    }
}
