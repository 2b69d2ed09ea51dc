use std::cmp::Ordering;

use orbisurf_core::numeric::{cyc_to_rat, parse_fraction, fraction_string, poly_compare_lex, Cyclotomic, Poly};
use orbisurf_core::{Rat, Scalar};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| Rat::from_frac(n, d))
}

fn cyc(order: u32) -> impl Strategy<Value = Cyclotomic<Rat>> {
    prop::collection::vec(rat(), 0..(order as usize + 3))
        .prop_map(move |c| Cyclotomic::from_power_sum(order, &c))
}

fn triple() -> impl Strategy<Value = (Cyclotomic<Rat>, Cyclotomic<Rat>, Cyclotomic<Rat>)> {
    (1u32..=12).prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))
}

fn poly() -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec(rat(), 0..5).prop_map(Poly::new)
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, Cyclotomic::one().promote(a.order()));
        }
    }

    #[test]
    fn roots_have_the_right_order(n in 1u32..=12, k in -30i64..30) {
        let z = Cyclotomic::<Rat>::root(n, k);
        let mut p = Cyclotomic::one().promote(n);
        for _ in 0..n {
            p = &p * &z;
        }
        prop_assert_eq!(p, Cyclotomic::one().promote(n));
    }

    #[test]
    fn orbit_sums_are_rational(n in 1u32..=12, k in 0i64..12) {
        // Σ_j ζ^{jk} is n when n | k and 0 otherwise.
        let s: Cyclotomic<Rat> = (0..i64::from(n)).map(|j| Cyclotomic::root(n, j * k)).sum();
        let expect = if k % i64::from(n) == 0 { i64::from(n) } else { 0 };
        prop_assert_eq!(cyc_to_rat(&s).unwrap(), Rat::from_i64(expect));
    }

    #[test]
    fn lex_order_matches_large_evaluation(a in poly(), b in poly()) {
        let m = Rat::from_i64(1_000_000);
        let by_value = a.eval(&m).cmp(&b.eval(&m));
        prop_assert_eq!(poly_compare_lex(&a, &b), by_value);
        prop_assert_eq!(poly_compare_lex(&a, &a), Ordering::Equal);
    }

    #[test]
    fn interpolation_recovers_polynomial(p in poly()) {
        let points: Vec<_> = (0..5).map(|x| {
            let x = Rat::from_i64(x);
            (x.clone(), p.eval(&x))
        }).collect();
        prop_assert_eq!(Poly::interpolate(&points), p);
    }

    #[test]
    fn fraction_text_round_trip(x in rat()) {
        prop_assert_eq!(parse_fraction::<Rat>(&fraction_string(&x)), Some(x));
    }
}

#[test]
fn phi_values() {
    use orbisurf_core::numeric::{cyclotomic_polynomial, euler_phi};
    assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
    for n in 1..=30 {
        assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
    }
}

#[test]
fn nonreal_element_is_not_rational() {
    let z = Cyclotomic::<Rat>::root(3, 1);
    assert!(cyc_to_rat(&z).is_err());
    let conj = &z + &Cyclotomic::root(3, 2);
    assert_eq!(cyc_to_rat(&conj).unwrap(), Rat::from_i64(-1));
}
