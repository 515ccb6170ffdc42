use koornwinder::combinatorics::{factorial, gen_binomial, pochhammer};
use koornwinder::inversion::{solve_system, verify_system, RhsSequence};
use koornwinder::rational::{self, frac, int, Rational};
use koornwinder::Poly;
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=50).prop_map(|(n, d)| frac(n, d))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn grid_alpha() -> impl Strategy<Value = Rational> {
    prop::sample::select(koornwinder::suites::alpha_grid())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructed_values_are_canonical(n in -1000i64..1000, d in -1000i64..1000, p in small_poly(8)) {
        prop_assume!(d != 0);
        let r = frac(n, d);
        prop_assert!(rational::is_canonical(&r));
        prop_assert_eq!(Rational::new(r.numer().clone(), r.denom().clone()), r.clone());
        prop_assert!(p.is_canonical());
        prop_assert_eq!(Poly::from_coeffs(p.coeffs().to_vec()), p);
    }

    #[test]
    fn rational_text_round_trips(r in small_rational()) {
        prop_assert_eq!(rational::parse(&rational::format(&r)).unwrap(), r);
    }

    #[test]
    fn ring_laws(p in small_poly(8), q in small_poly(8), r in small_poly(8)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn product_degree_adds(p in small_poly(8), q in small_poly(8)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn reflect_is_involution(p in small_poly(8)) {
        prop_assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn derivative_composes(p in small_poly(8), i in 0usize..5, j in 0usize..5) {
        prop_assert_eq!(p.derivative(i).derivative(j), p.derivative(i + j));
    }

    #[test]
    fn pochhammer_splits(a in small_rational(), j in 0usize..=6, k in 0usize..=6) {
        let lhs = pochhammer(&a, j + k);
        let rhs = pochhammer(&a, j) * pochhammer(&(&a + int(j as i64)), k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_times_factorial_is_pochhammer(alpha in small_rational(), n in 0usize..=12) {
        let two_a = int(2) * &alpha;
        let lhs = gen_binomial(&(int(n as i64) + &two_a), n as i64) * factorial(n);
        prop_assert_eq!(lhs, pochhammer(&(two_a + int(1)), n));
    }

    #[test]
    fn solver_round_trip(alpha in grid_alpha(), q in prop::collection::vec(small_rational(), 27)) {
        // Q_i of degree <= i for i = 1..=6 carved out of a flat coefficient pool
        let mut pool = q.into_iter();
        let qs: Vec<Poly> = (1..=6usize)
            .map(|i| Poly::from_coeffs(pool.by_ref().take(i + 1).collect()))
            .collect();
        let rhs = RhsSequence::from_coefficients(alpha, &qs, 6).unwrap();
        let sol = solve_system(&rhs).unwrap();
        prop_assert_eq!(sol.entries(), &qs[..]);
        prop_assert!(verify_system(&rhs, &sol).unwrap().passed());
    }
}

#[test]
fn binomial_at_continuity_point() {
    // C(n+2α, n) at α = -1/2, n = 2 is C(1, 2) = (0)_2 / 2! = 0
    assert_eq!(gen_binomial(&int(1), 2), int(0));
    assert_eq!(pochhammer(&int(0), 2) / factorial(2), int(0));
}

#[test]
fn big_values_stay_exact() {
    let v = factorial(40);
    assert_eq!(
        v.numer(),
        &"815915283247897734345611269596115894272000000000"
            .parse::<BigInt>()
            .unwrap()
    );
}
