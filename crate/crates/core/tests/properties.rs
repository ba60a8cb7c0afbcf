use num_bigint::BigInt;
use proptest::prelude::*;

use sepcount::arith::{binom_gen, factorial, falling_factorial, frac, rat};
use sepcount::counting::{composition_sum, h_composition, BinomialRule};
use sepcount::lemma::{omega_closed_1, omega_direct, OmegaQuery};
use sepcount::oracle::{count_brute, is_separate_circle, is_separate_line, list_brute};
use sepcount::series::{binomial_series, phi_residue};
use sepcount::{CountQuery, ExactRational, PowerSeries, SeparationParams, Topology};

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=20).prop_map(|(a, b)| frac(a, b))
}

fn series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(small_rational(), order + 1).prop_map(move |c| PowerSeries::from_coeffs(c, order))
}

fn topology() -> impl Strategy<Value = Topology> {
    prop_oneof![Just(Topology::Line), Just(Topology::Circle)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_product_is_commutative_and_associative(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn binomial_series_exponents_add(a in small_rational(), b in small_rational(), c in small_rational()) {
        let lhs = binomial_series(&a, &c, 6).mul(&binomial_series(&b, &c, 6)).unwrap();
        prop_assert_eq!(lhs, binomial_series(&(&a + &b), &c, 6));
    }

    #[test]
    fn binom_gen_times_factorial_is_falling_factorial(a in small_rational(), k in 0i64..8) {
        let lhs = binom_gen(&a, k) * ExactRational::from_integer(factorial(k));
        prop_assert_eq!(lhs, falling_factorial(&a, k).unwrap());
    }

    #[test]
    fn phi_residue_matches_abel_term(lambda in small_rational(), mu in small_rational(), k in 0i64..6) {
        let top = &lambda + &mu * rat(k);
        prop_assume!(top != rat(0));
        let closed = &lambda / &top * binom_gen(&top, k);
        prop_assert_eq!(phi_residue(&lambda, &mu, k).unwrap(), closed);
    }

    #[test]
    fn omega_direct_matches_closed_form(
        lambdas in prop::collection::vec(small_rational(), 1..=4),
        mu in small_rational(),
        k in 0i64..=5,
    ) {
        let q = OmegaQuery::new(lambdas, mu, k).unwrap();
        prop_assert_eq!(omega_direct(&q), omega_closed_1(&q));
    }

    #[test]
    fn generalized_row_sum_depends_only_on_total(
        sizes in prop::collection::vec(0i64..8, 1..=4),
        shift in prop::collection::vec(0usize..4, 1..4),
        k in 0i64..=5,
        p in 1i64..=3,
    ) {
        // Move objects between rows; the total stays fixed.
        let mut moved = sizes.clone();
        for s in shift {
            let (from, to) = (s % moved.len(), (s + 1) % moved.len());
            if moved[from] > 0 {
                moved[from] -= 1;
                moved[to] += 1;
            }
        }
        prop_assert_eq!(
            composition_sum(&sizes, k, p, BinomialRule::Generalized),
            composition_sum(&moved, k, p, BinomialRule::Generalized)
        );
    }

    #[test]
    fn composition_count_matches_oracle(n in 0i64..=14, k in 0i64..=5, m in 1i64..=3, p in 1i64..=3) {
        let sep = SeparationParams::new(m, p).unwrap();
        prop_assert_eq!(h_composition(n, k, sep), count_brute(&CountQuery::line(n, k, m, p).unwrap()).unwrap());
    }

    #[test]
    fn wider_separation_never_adds_subsets(
        t in topology(), n in 0i64..=14, k in 0i64..=4, m in 1i64..=3, p in 1i64..=2,
    ) {
        let count = |m, p| count_brute(&CountQuery::new(t, n, k, SeparationParams::new(m, p).unwrap()).unwrap()).unwrap();
        prop_assert!(count(m, p + 1) <= count(m, p));
    }

    #[test]
    fn circle_never_exceeds_line(n in 0i64..=14, k in 0i64..=4, m in 1i64..=3, p in 1i64..=2) {
        let line = count_brute(&CountQuery::line(n, k, m, p).unwrap()).unwrap();
        let circle = count_brute(&CountQuery::circle(n, k, m, p).unwrap()).unwrap();
        prop_assert!(circle <= line);
    }

    #[test]
    fn listing_is_sorted_separated_and_counted(
        t in topology(), n in 0i64..=12, k in 0i64..=4, m in 1i64..=3, p in 1i64..=2,
    ) {
        let sep = SeparationParams::new(m, p).unwrap();
        let q = CountQuery::new(t, n, k, sep).unwrap();
        let listed: Vec<_> = list_brute(&q).unwrap().collect();
        prop_assert_eq!(BigInt::from(listed.len()), count_brute(&q).unwrap());
        for pair in listed.windows(2) {
            prop_assert!(pair[0].positions() < pair[1].positions());
        }
        for s in &listed {
            prop_assert_eq!(s.len() as i64, k);
            let ok = match t {
                Topology::Line => is_separate_line(s, &sep),
                Topology::Circle => is_separate_circle(s, n, &sep),
            };
            prop_assert!(ok);
        }
    }
}
