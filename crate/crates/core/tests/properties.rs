use elimination::cube::{delta, glue, permute, CubeArrangement, CubeDocument, Side};
use elimination::linalg::{determinant, Matrix};
use elimination::poly::{parse_polynomial, Homogeneity, Monomial, Polynomial, Rational};
use elimination::selftest::gen;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn polynomial(n_vars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n_vars), rational()), 0..6).prop_map(
        move |terms| {
            Polynomial::from_terms(
                n_vars,
                terms.into_iter().map(|(e, c)| (Monomial::new(e), c)),
            )
        },
    )
}

fn form(n_vars: usize) -> impl Strategy<Value = Polynomial> {
    (any::<u64>(), 0u32..=3)
        .prop_map(move |(seed, d)| gen::form(&mut ChaCha8Rng::seed_from_u64(seed), n_vars, d))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(rational(), n), n).prop_map(Matrix::from_rows)
}

fn arrangement(dimension: usize) -> impl Strategy<Value = CubeArrangement> {
    any::<u64>()
        .prop_map(move |seed| gen::arrangement(&mut ChaCha8Rng::seed_from_u64(seed), dimension))
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(3), b in polynomial(3), c in polynomial(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
    }

    #[test]
    fn print_parse_round_trip(a in polynomial(4)) {
        let text = a.to_string();
        prop_assert_eq!(parse_polynomial(&text, 4).unwrap(), a);
    }

    #[test]
    fn products_of_forms_are_forms(f in form(3), g in form(3)) {
        let (Homogeneity::Degree(df), Homogeneity::Degree(dg)) =
            (f.homogeneous_degree(), g.homogeneous_degree()) else { unreachable!() };
        prop_assert_eq!((&f * &g).homogeneous_degree(), Homogeneity::Degree(df + dg));
    }

    #[test]
    fn restriction_and_dehomogenization_are_ring_maps(
        a in polynomial(3), b in polynomial(3), i in 0usize..3
    ) {
        for map in [Polynomial::restrict_to_hyperplane, Polynomial::dehomogenize] {
            let (ma, mb) = (map(&a, i).unwrap(), map(&b, i).unwrap());
            prop_assert_eq!(map(&(&a * &b), i).unwrap(), &ma * &mb);
            prop_assert_eq!(map(&(&a + &b), i).unwrap(), &ma + &mb);
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(4), b in matrix(4)) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(
            determinant(&ab).unwrap(),
            determinant(&a).unwrap() * determinant(&b).unwrap()
        );
        prop_assert_eq!(determinant(&a.transpose()).unwrap(), determinant(&a).unwrap());
    }

    #[test]
    fn determinant_alternates_in_rows(a in matrix(4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let mut swapped = a.clone();
        swapped.swap_rows(i, j);
        prop_assert_eq!(determinant(&swapped).unwrap(), -determinant(&a).unwrap());
        let mut repeated = a.clone();
        for k in 0..4 {
            repeated[(j, k)] = a[(i, k)].clone();
        }
        prop_assert!(determinant(&repeated).unwrap().is_zero());
    }

    #[test]
    fn triangular_determinant_is_diagonal_product(a in matrix(5)) {
        let mut t = a.clone();
        for i in 0..5 {
            for j in 0..i {
                t[(i, j)] = Rational::zero();
            }
        }
        let diag: Rational = (0..5).map(|i| t[(i, i)].clone()).product();
        prop_assert_eq!(determinant(&t).unwrap(), diag);
    }

    #[test]
    fn delta_is_additive_under_gluing(a in arrangement(3), b in arrangement(3), i in 0usize..3) {
        // a's front face becomes the back face of b2
        let b2 = CubeArrangement::stack(
            &a.face(i, Side::Front).unwrap(),
            &b.face(i, Side::Front).unwrap(),
            i,
        );
        let glued = glue(&a, &b2, i).unwrap();
        prop_assert_eq!(delta(&glued), delta(&a).plus(&delta(&b2)));
    }

    #[test]
    fn delta_is_permutation_invariant(a in arrangement(3), seed in any::<u64>()) {
        let sigma = gen::permutation(&mut ChaCha8Rng::seed_from_u64(seed), 3);
        prop_assert_eq!(delta(&permute(&a, &sigma).unwrap()), delta(&a));
    }

    #[test]
    fn cube_documents_round_trip(a in arrangement(3)) {
        let doc = CubeDocument::from_arrangement(&a);
        let json = serde_json::to_string(&doc).unwrap();
        let back: CubeDocument = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_arrangement().unwrap(), a);
    }
}
