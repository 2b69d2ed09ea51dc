mod common;

use common::{int, random_root_stack, random_sheaf, rng};
use orbisurf_core::geometry::StackyClass;
use orbisurf_core::riemannroch::{euler_char, modified_alphas, modified_hilbert};
use orbisurf_core::sheafdata::{default_generating_sheaf, line_bundle, GeneratingSheafData};
use orbisurf_core::{Rat, Scalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_characteristic_is_additive(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let a = random_sheaf(&mut g, &rs);
        let b = random_sheaf(&mut g, &rs);
        prop_assert_eq!(
            euler_char(&a.direct_sum(&b).unwrap()).unwrap(),
            euler_char(&a).unwrap() + euler_char(&b).unwrap()
        );
    }

    /// `χ(E) = χ(E^∨ ⊗ ω)` with `ω = O(K_𝒳)`.
    #[test]
    fn serre_duality(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let e = random_sheaf(&mut g, &rs);
        let omega = line_bundle(&rs, &rs.canonical_class()).unwrap();
        let dual = e.dual().tensor(&omega).unwrap();
        prop_assert_eq!(euler_char(&dual).unwrap(), euler_char(&e).unwrap());
    }

    /// Pulling back along the coarse map does not change χ of a pulled-back
    /// line bundle: `χ(π*L) = χ(L)`.
    #[test]
    fn pullback_line_bundles_match_the_surface(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let c = common::random_integral_class(&mut g, &rs, 3).base;
        let s = rs.base();
        let expect = s.chi_structure_sheaf().unwrap()
            + s.intersect(&c, &(&c - s.k())).unwrap() / int(2);
        let l = line_bundle(&rs, &rs.pullback(&c)).unwrap();
        prop_assert_eq!(euler_char(&l).unwrap(), expect);
    }

    #[test]
    fn modified_hilbert_is_additive(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let xi = default_generating_sheaf(&rs).unwrap();
        let h = rs.base().h().clone();
        let a = random_sheaf(&mut g, &rs);
        let b = random_sheaf(&mut g, &rs);
        let sum = modified_hilbert(&a.direct_sum(&b).unwrap(), &xi, &h).unwrap();
        let parts = &modified_hilbert(&a, &xi, &h).unwrap() + &modified_hilbert(&b, &xi, &h).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn leading_coefficient(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let xi = default_generating_sheaf(&rs).unwrap();
        let h = rs.base().h().clone();
        let e = random_sheaf(&mut g, &rs);
        let (a2, _) = modified_alphas(&e, &xi, &h).unwrap();
        let hh = rs.base().intersect(&h, &h).unwrap();
        prop_assert_eq!(a2, int(i64::from(e.rank() * xi.rk_xi())) * hh);
    }

    /// Doubling the generating sheaf doubles every α, leaving `μ_Ξ` fixed.
    #[test]
    fn doubled_generating_sheaf(seed in any::<u64>()) {
        let mut g = rng(seed);
        let rs = random_root_stack(&mut g);
        let xi = default_generating_sheaf(&rs).unwrap();
        let xi2 = GeneratingSheafData::new(xi.sheaf().direct_sum(xi.sheaf()).unwrap()).unwrap();
        let h = rs.base().h().clone();
        let e = random_sheaf(&mut g, &rs);
        let (a2, a1) = modified_alphas(&e, &xi, &h).unwrap();
        let (b2, b1) = modified_alphas(&e, &xi2, &h).unwrap();
        prop_assert_eq!(b2.clone(), int(2) * a2.clone());
        prop_assert_eq!(b1.clone() / b2, a1 / a2);
    }
}

#[test]
fn fuzzed_euler_characteristics_are_rational() {
    let mut g = rng(0x5eed);
    for _ in 0..200 {
        let rs = random_root_stack(&mut g);
        let e = random_sheaf(&mut g, &rs);
        euler_char(&e).unwrap();
    }
}

#[test]
fn single_line_pushforward_table() {
    use orbisurf_core::geometry::standard::plane_root_stack;
    for r in [1u32, 2, 3, 5] {
        let rs = plane_root_stack::<Rat>(r, 1).unwrap();
        let ri = i64::from(r);
        for k in -2 * ri..=2 * ri {
            let l = line_bundle(&rs, &rs.tilde(0).scale(&int(k))).unwrap();
            let f = k.div_euclid(ri);
            assert_eq!(euler_char(&l).unwrap(), Rat::from_frac((f + 1) * (f + 2), 2), "r={r} k={k}");
        }
    }
    let rs = plane_root_stack::<Rat>(2, 2).unwrap();
    assert_eq!(
        euler_char(&line_bundle(&rs, &StackyClass::zero(1, 2)).unwrap()).unwrap(),
        int(1)
    );
}
