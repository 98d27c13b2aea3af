use proptest::prelude::*;

use intnum_core::bkk::{
    bkk_number, newton_polytope, oracle_roots, oracle_roots_univariate, transform_supports,
    Exponent, LaurentPolynomial, OracleConfig, SupportSystem,
};
use intnum_core::Rational;

fn support(n: usize, max_pts: usize) -> impl Strategy<Value = Vec<Exponent>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=max_pts)
}

fn planar_system() -> impl Strategy<Value = SupportSystem> {
    (support(2, 5), support(2, 5)).prop_map(|(a, b)| SupportSystem::new(2, vec![a, b]).unwrap())
}

fn unimodular2() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop_oneof![
        (-3i64..=3).prop_map(|k| vec![vec![1, k], vec![0, 1]]),
        (-3i64..=3).prop_map(|k| vec![vec![1, 0], vec![k, 1]]),
        Just(vec![vec![0, 1], vec![1, 0]]),
        Just(vec![vec![-1, 0], vec![0, 1]]),
        Just(vec![vec![2, 1], vec![1, 1]]),
    ]
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn univariate_matches_oracle(s in prop::collection::vec(-6i64..=6, 1..=5), seed in any::<u64>()) {
        let sys = SupportSystem::new(1, vec![s.iter().map(|&e| vec![e]).collect()]).unwrap();
        let cfg = OracleConfig { seed, ..OracleConfig::default() };
        let b = bkk_number(&sys).unwrap();
        prop_assert_eq!(b, oracle_roots_univariate(&s, &cfg).unwrap() as u64);
        prop_assert_eq!(b as i64, s.iter().max().unwrap() - s.iter().min().unwrap());
    }

    #[test]
    fn translation_invariant(sys in planar_system(), shift in prop::collection::vec(-3i64..=3, 2)) {
        let moved = SupportSystem::new(
            2,
            vec![
                sys.supports()[0].iter().map(|e| vec![e[0] + shift[0], e[1] + shift[1]]).collect(),
                sys.supports()[1].clone(),
            ],
        )
        .unwrap();
        prop_assert_eq!(bkk_number(&moved).unwrap(), bkk_number(&sys).unwrap());
    }

    #[test]
    fn unimodular_invariant(sys in planar_system(), m in unimodular2()) {
        let image = transform_supports(&sys, &m).unwrap();
        prop_assert_eq!(bkk_number(&image).unwrap(), bkk_number(&sys).unwrap());
    }

    #[test]
    fn monotone_under_enlargement(sys in planar_system(), extra in support(2, 3)) {
        let mut bigger = sys.supports()[0].clone();
        bigger.extend(extra);
        let enlarged = SupportSystem::new(2, vec![bigger, sys.supports()[1].clone()]).unwrap();
        prop_assert!(bkk_number(&enlarged).unwrap() >= bkk_number(&sys).unwrap());
    }

    #[test]
    fn newton_polytope_ignores_coefficients(s in support(2, 6), c in 1i64..=9) {
        let unit = LaurentPolynomial::from_support(2, &s).unwrap();
        let scaled = LaurentPolynomial::new(
            2,
            s.iter().map(|e| (e.clone(), Rational::from_integer((-c).into()))),
        )
        .unwrap();
        prop_assert_eq!(newton_polytope(&unit).unwrap(), newton_polytope(&scaled).unwrap());
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn bivariate_matches_oracle(sys in planar_system()) {
        let b = bkk_number(&sys).unwrap();
        let roots = oracle_roots(&sys, &OracleConfig::default()).unwrap();
        prop_assert_eq!(b, roots as u64);
    }
}

#[test]
fn bezout_dense_supports() {
    let dense = |d: i64| -> Vec<Exponent> {
        (0..=d)
            .flat_map(|i| (0..=d - i).map(move |j| vec![i, j]))
            .collect()
    };
    for d1 in 1..=4 {
        for d2 in 1..=4 {
            let sys = SupportSystem::new(2, vec![dense(d1), dense(d2)]).unwrap();
            assert_eq!(bkk_number(&sys).unwrap(), (d1 * d2) as u64);
        }
    }
}

#[test]
fn oracle_is_seeded() {
    let sys = SupportSystem::new(
        2,
        vec![
            vec![vec![0, 0], vec![2, 0], vec![0, 1]],
            vec![vec![0, 0], vec![1, 1], vec![0, 2]],
        ],
    )
    .unwrap();
    let cfg = OracleConfig {
        seed: 7,
        ..OracleConfig::default()
    };
    assert_eq!(
        oracle_roots(&sys, &cfg).unwrap(),
        oracle_roots(&sys, &cfg).unwrap()
    );
    assert_eq!(
        oracle_roots(&sys, &cfg).unwrap() as u64,
        bkk_number(&sys).unwrap()
    );
}
