mod common;

use common::{int, random_root_stack, random_sheaf, rng};
use orbisurf_core::geometry::StackyClass;
use orbisurf_core::sheafdata::default_generating_sheaf;
use orbisurf_core::stability::{
    beta, delta, restriction_threshold, slopes, thm39_check, BoundsInput, HNPolygon,
};
use orbisurf_core::{Rat, Scalar};
use proptest::prelude::*;
use rand::Rng;

fn polygon() -> impl Strategy<Value = HNPolygon<Rat>> {
    prop::collection::btree_map(-8i64..=8, 1u32..=4, 1..5).prop_map(|m| {
        let blocks = m
            .into_iter()
            .rev()
            .map(|(s, r)| (r, Rat::from_frac(s, 4)))
            .collect();
        HNPolygon::new(blocks).unwrap()
    })
}

proptest! {
    #[test]
    fn hn_sum_closed_form(p in polygon()) {
        prop_assert_eq!(p.hn_sum(), p.hn_sum_pairwise());
        prop_assert!(p.hn_sum() >= int(0));
    }

    #[test]
    fn threshold_is_monotone(d in -20i64..20, extra in 0i64..10, t in 0i64..6, p in 2u64..12) {
        let mut lo = BoundsInput::new(p, 2, int(1), int(1), int(d));
        lo.slope_terms = vec![int(t)];
        let mut hi = lo.clone();
        hi.delta_hd2 = int(d + extra);
        prop_assert!(restriction_threshold(&lo).unwrap() <= restriction_threshold(&hi).unwrap());
        let mut steeper = lo.clone();
        steeper.slope_terms = vec![int(t + extra)];
        prop_assert!(beta(&lo).unwrap() <= beta(&steeper).unwrap());
        prop_assert!(restriction_threshold(&lo).unwrap() <= restriction_threshold(&steeper).unwrap());
    }

    #[test]
    fn parabolic_identity(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let rank = g.gen_range(1..=3);
        let p = common::random_parabolic(&mut g, &rs, rank);
        let report = thm39_check(&p).unwrap();
        prop_assert_eq!(int(2 * i64::from(rank)) * report.verdict.residual, report.delta_w);
    }

    /// Under Condition ⋆ the modified slope orders sheaves like `deg/rk`.
    #[test]
    fn slope_orders_agree(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let xi = default_generating_sheaf(&rs).unwrap();
        let h = rs.base().h().clone();
        let a = slopes(&random_sheaf(&mut g, &rs), &xi, &h).unwrap();
        let b = slopes(&random_sheaf(&mut g, &rs), &xi, &h).unwrap();
        prop_assert_eq!(a.mu_xi.cmp(&b.mu_xi), a.mu_orb.cmp(&b.mu_orb));
        prop_assert_eq!(a.deg_xi, a.deg);
    }

    /// Sums of line bundles of equal H-slope have `Δ ≥ 0` by the Hodge index
    /// theorem.
    #[test]
    fn polystable_sums(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rho = g.gen_range(1..=3);
        let rs = common::random_root_stack_with(&mut g, rho, 0, 1);
        let s = rs.base();
        let h = s.h();
        let hh = s.intersect(h, h).unwrap();
        let base = common::random_integral_class(&mut g, &rs, 3);
        let mut e = None;
        for _ in 0..g.gen_range(1..=4) {
            let x = common::random_integral_class(&mut g, &rs, 3).base;
            let xi = &x.scale(&hh) - &h.scale(&s.intersect(&x, h).unwrap());
            let c = base.add(&StackyClass::pullback(xi, 0));
            let l = orbisurf_core::sheafdata::line_bundle(&rs, &c).unwrap();
            e = Some(match e {
                None => l,
                Some(acc) => orbisurf_core::sheafdata::direct_sum(&acc, &l).unwrap(),
            });
        }
        prop_assert!(delta(&e.unwrap()) >= int(0));
    }
}
