mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symlp::group::{
    decompose_signed_permutation, group_closure, orbits_from_generators, Permutation,
    SignedPermutation,
};
use symlp::numeric::{format_rational, parse_rational, ratio, Matrix, Rational};
use symlp::Error;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rational(), rows * cols)
        .prop_map(move |entries| Matrix::from_entries(rows, cols, entries).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn sized_permutations(
    max_n: usize,
    count: usize,
) -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), prop::collection::vec(permutation(n), 0..=count)))
}

proptest! {
    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if a != ratio(0, 1) {
            prop_assert_eq!(&a * a.recip(), ratio(1, 1));
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn decimal_literals_are_exact(whole in 0u32..1000, frac in 0u32..1000) {
        let text = format!("{whole}.{frac:03}");
        let expected = ratio(i64::from(whole) * 1000 + i64::from(frac), 1000);
        prop_assert_eq!(parse_rational(&text).unwrap(), expected);
    }

    #[test]
    fn matrix_product_is_associative(
        (a, b, c) in (1usize..4, 1usize..4, 1usize..4, 1usize..4)
            .prop_flat_map(|(p, q, r, s)| (matrix(p, q), matrix(q, r), matrix(r, s)))
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transpose_reverses_products(
        (a, b) in (1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(p, q, r)| (matrix(p, q), matrix(q, r)))
    ) {
        let lhs = a.mul(&b).unwrap().transpose();
        let rhs = b.transpose().mul(&a.transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_matches_matrix_product(
        (g, h) in (1usize..7).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let gh = g.then(&h).unwrap();
        prop_assert_eq!(gh.matrix(), h.matrix().mul(&g.matrix()).unwrap());
        prop_assert!(g.then(&g.inverse()).unwrap().is_identity());
    }

    #[test]
    fn action_matches_matrix(
        (g, x) in (1usize..7).prop_flat_map(|n| (permutation(n), prop::collection::vec(rational(), n)))
    ) {
        prop_assert_eq!(g.act(&x).unwrap(), g.matrix().mul_vec(&x).unwrap());
    }

    #[test]
    fn composition_is_associative(
        (f, g, h) in (1usize..7).prop_flat_map(|n| (permutation(n), permutation(n), permutation(n)))
    ) {
        let left = f.then(&g).unwrap().then(&h).unwrap();
        let right = f.then(&g.then(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cycle_notation_round_trip(g in (1usize..10).prop_flat_map(permutation)) {
        let text = g.to_cycle_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, g.degree()).unwrap(), g);
    }

    #[test]
    fn closure_is_a_group((n, gens) in sized_permutations(6, 3)) {
        let group = group_closure(&gens, n, 1000).unwrap();
        prop_assert!(group.contains(&Permutation::identity(n)));
        for g in &group {
            prop_assert!(group.contains(&g.inverse()));
            for h in &group {
                prop_assert!(group.binary_search(&g.then(h).unwrap()).is_ok());
            }
        }
        for g in &gens {
            prop_assert!(group.contains(g));
        }
    }

    #[test]
    fn lagrange_and_orbit_stabilizer((n, gens) in sized_permutations(6, 3)) {
        let group = group_closure(&gens, n, 1000).unwrap();
        for g in &gens {
            let cyclic = group_closure(std::slice::from_ref(g), n, 1000).unwrap();
            prop_assert_eq!(group.len() % cyclic.len(), 0);
        }
        let orbits = orbits_from_generators(&gens, n).unwrap();
        for block in orbits.blocks() {
            let point = block[0];
            let stabilizer = group.iter().filter(|g| g.apply(point) == point).count();
            prop_assert_eq!(block.len() * stabilizer, group.len());
        }
    }

    #[test]
    fn signed_permutation_round_trip(
        (perm, signs) in (1usize..6).prop_flat_map(|n| (
            permutation(n),
            prop::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n),
        ))
    ) {
        let sp = SignedPermutation { signs, perm };
        let decomposed = decompose_signed_permutation(&sp.to_matrix()).unwrap();
        prop_assert_eq!(decomposed, sp);
    }
}

#[test]
fn closure_limit_is_enforced() {
    let gens = [
        Permutation::parse_cycles("(1 2)", 6).unwrap(),
        Permutation::parse_cycles("(1 2 3 4 5 6)", 6).unwrap(),
    ];
    assert_eq!(group_closure(&gens, 6, 720).unwrap().len(), 720);
    assert_eq!(
        group_closure(&gens, 6, 719),
        Err(Error::ClosureLimitExceeded { limit: 719 })
    );
}

#[test]
fn random_closures_stay_within_symmetric_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=5 {
        let gens: Vec<_> = (0..2)
            .map(|_| common::random_permutation(&mut rng, n))
            .collect();
        let order = group_closure(&gens, n, 1000).unwrap().len();
        let factorial: usize = (1..=n).product();
        assert_eq!(factorial % order, 0);
    }
}
