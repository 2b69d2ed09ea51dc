use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::geometry::standard::{plane_root_stack, projective_plane, quadric};
use crate::geometry::{DivClass, RootStackModel, StackyClass};
use crate::sheafdata::{default_generating_sheaf, line_bundle, ParabolicPiece, ParabolicSheaf};
use crate::{Error, Rat, Scalar};

fn q(n: i64, d: i64) -> Rat {
    Rat::from_frac(n, d)
}

fn int(n: i64) -> Rat {
    Rat::from_i64(n)
}

fn bounds(p: u64, rk: u32, delta: Rat) -> BoundsInput<Rat> {
    BoundsInput::new(p, rk, int(1), int(1), delta)
}

#[test]
fn slope_examples() {
    let rs = plane_root_stack::<Rat>(2, 1).unwrap();
    let xi = default_generating_sheaf(&rs).unwrap();
    let h = rs.base().h().clone();
    let o = line_bundle(&rs, &rs.zero_class()).unwrap();
    assert_eq!(slopes(&o, &xi, &h).unwrap().mu_orb, int(0));
    let od = line_bundle(&rs, &rs.tilde(0)).unwrap();
    let s = slopes(&od, &xi, &h).unwrap();
    assert_eq!((s.deg.clone(), s.mu_orb.clone()), (q(1, 2), q(1, 2)));
    assert_eq!(s.deg_xi, s.deg);
    let doubled = slopes(&od.direct_sum(&od).unwrap(), &xi, &h).unwrap();
    assert_eq!(doubled.mu_orb, s.mu_orb);
    assert_eq!(doubled.mu_xi, s.mu_xi);

    let bad = crate::sheafdata::GeneratingSheafData::new(
        o.direct_sum(&od).unwrap().direct_sum(&o).unwrap(),
    )
    .unwrap();
    assert_eq!(slopes(&o, &bad, &h).unwrap_err(), Error::ConditionStarViolated);
}

#[test]
fn delta_examples() {
    let rs = plane_root_stack::<Rat>(1, 1).unwrap();
    let l = |c: i64| line_bundle(&rs, &StackyClass::new(DivClass::from_ints(&[c]), vec![int(0)])).unwrap();
    assert_eq!(delta(&l(3)), int(0));
    let e = l(1).direct_sum(&l(-1)).unwrap();
    assert_eq!(delta(&e), int(-4));
    let report = bogomolov_check(&e, &StabilityClaim::default());
    assert!(!report.verdict.holds);
    assert_eq!(report.claim, ClaimStatus::NotApplicable);
    let claimed = StabilityClaim {
        semistable: true,
        strongly: false,
        characteristic: 0,
    };
    assert_eq!(bogomolov_check(&e, &claimed).claim, ClaimStatus::Refuted);

    let quad = Arc::new(RootStackModel::new(quadric::<Rat>(), 1, &[], &Default::default()).unwrap());
    let a = line_bundle(&quad, &StackyClass::new(DivClass::from_ints(&[1, -1]), vec![])).unwrap();
    let b = line_bundle(&quad, &StackyClass::new(DivClass::from_ints(&[-1, 1]), vec![])).unwrap();
    let e = a.direct_sum(&b).unwrap();
    let report = bogomolov_check(&e, &claimed);
    assert_eq!(report.verdict, Verdict { holds: true, residual: int(8) });
    assert_eq!(report.claim, ClaimStatus::Consistent);
}

#[test]
fn hn_examples() {
    let single = HNPolygon::new(vec![(3, q(1, 2))]).unwrap();
    assert_eq!(hn_sum(&single), int(0));
    let two = HNPolygon::new(vec![(1, int(1)), (1, int(0))]).unwrap();
    assert_eq!(hn_sum(&two), int(1));
    assert!(HNPolygon::new(vec![(1, int(0)), (1, int(1))]).is_err());
    assert!(HNPolygon::<Rat>::new(vec![]).is_err());
}

#[test]
fn thm_a1_examples() {
    let mut b = bounds(3, 2, int(0));
    b.l_max = Some(int(0));
    b.l_min = Some(int(0));
    b.mu = Some(int(0));
    let trivial = HNPolygon::new(vec![(2, int(0))]).unwrap();
    assert!(thm_a1_check(&trivial, &b).unwrap().holds);
    let split = HNPolygon::new(vec![(1, int(1)), (1, int(-1))]).unwrap();
    let v = thm_a1_check(&split, &b).unwrap();
    assert_eq!(v, Verdict { holds: false, residual: int(-4) });
    b.l_max = Some(int(1));
    b.l_min = Some(int(-1));
    // 2·4·1·1·1 = 8 ≥ 4
    assert_eq!(thm_a1_check(&split, &b).unwrap().residual, int(4));
    b.mu = None;
    assert_eq!(thm_a1_check(&split, &b).unwrap_err(), Error::MissingField("mu"));
}

#[test]
fn beta_and_alpha_values() {
    let mut b = bounds(3, 1, int(0));
    assert_eq!(beta(&b).unwrap(), int(0));
    assert_eq!(alpha_bound(&b).unwrap(), int(0));
    b.rk = 2;
    assert_eq!(beta(&b).unwrap_err(), Error::EmptySlopeTerms);
    b.slope_terms = vec![int(1), int(-3)];
    assert_eq!(beta(&b).unwrap(), int(1));
    let mut b = bounds(2, 3, int(0));
    b.slope_terms = vec![int(1)];
    assert_eq!(beta(&b).unwrap(), int(36));
    let mut b = bounds(2, 2, int(0));
    b.slope_terms = vec![int(3)];
    assert_eq!(alpha_bound(&b).unwrap(), int(3));
}

#[test]
fn thm_a3_examples() {
    let mut b = bounds(3, 2, int(5));
    b.slope_terms = vec![int(0)];
    assert!(thm_a3_check(&b).unwrap().holds);
    b.slope_terms = vec![int(1)];
    b.delta_hd2 = int(-1);
    assert_eq!(thm_a3_check(&b).unwrap(), Verdict { holds: true, residual: int(0) });
    b.delta_hd2 = int(-2);
    assert!(!thm_a3_check(&b).unwrap().holds);
}

#[test]
fn thm_a5_examples() {
    let mut b = bounds(3, 2, int(3));
    b.mu = Some(q(1, 2));
    b.l_max = Some(q(1, 2));
    b.l_min = Some(q(1, 2));
    b.mu_max = Some(q(1, 2));
    b.mu_min = Some(q(1, 2));
    let (first, second) = thm_a5_checks(&b).unwrap();
    assert_eq!(first.residual, int(3));
    assert_eq!(first, second);
    b.mu_min = None;
    assert_eq!(thm_a5_checks(&b).unwrap_err(), Error::MissingField("mumin"));
}

#[test]
fn xi_and_kplus() {
    let rs = plane_root_stack::<Rat>(1, 1).unwrap();
    let h = StackyClass::new(DivClass::from_ints(&[1]), vec![int(0)]);
    let zero = rs.zero_class();
    assert!(xi_class((1, &h), (1, &h), &int(2)).unwrap().is_zero());
    assert_eq!(
        xi_class((1, &h), (1, &zero), &int(3)).unwrap(),
        h.scale(&q(1, 3))
    );
    let p2 = projective_plane::<Rat>(1);
    assert!(kplus_membership(&p2, p2.h(), p2.h()).unwrap());
    assert!(!kplus_membership(&p2, &-p2.h(), p2.h()).unwrap());
    let quad = quadric::<Rat>();
    assert!(!kplus_membership(&quad, &DivClass::from_ints(&[1, -1]), quad.h()).unwrap());
}

#[test]
fn restriction_threshold_values() {
    let b = bounds(3, 2, int(4));
    assert_eq!(restriction_threshold(&b).unwrap(), BigInt::from(3));
    let b = bounds(3, 2, int(0));
    assert_eq!(restriction_threshold(&b).unwrap(), BigInt::from(1));
    assert_eq!(restriction_threshold(&bounds(3, 1, int(0))).unwrap_err(), Error::RankOne);
}

#[test]
fn higgs_characteristic() {
    let nonneg = higgs_min_char(3, &int(1), &int(1), &int(1), &int(0), &int(0)).unwrap();
    assert!(nonneg.already_nonnegative);
    assert_eq!(nonneg.min_q, BigInt::from(3));
    // K = 4: need (q-1)² > 4
    let b = higgs_min_char(2, &int(1), &int(1), &int(1), &int(0), &int(-1)).unwrap();
    assert_eq!(b.min_q, BigInt::from(4));
    assert_eq!(b.min_prime, BigInt::from(5));
}

#[test]
fn miyaoka_yau_values() {
    assert_eq!(
        miyaoka_yau_check(&projective_plane::<Rat>(1)).unwrap(),
        Verdict { holds: true, residual: int(0) }
    );
    assert_eq!(miyaoka_yau_check(&quadric::<Rat>()).unwrap().residual, int(4));
}

fn rank_one_parabolic() -> ParabolicSheaf<Rat> {
    let rs = plane_root_stack::<Rat>(2, 1).unwrap();
    ParabolicSheaf::new(
        rs,
        1,
        DivClass::from_ints(&[0]),
        int(0),
        vec![ParabolicPiece {
            weight: q(1, 2),
            ranks: vec![1],
            degrees: vec![int(0)],
        }],
    )
    .unwrap()
}

#[test]
fn parabolic_slope_and_euler() {
    let p = rank_one_parabolic();
    let h = p.model().base().h().clone();
    assert_eq!(parabolic_slope(&p, &h).unwrap().padeg, q(1, 2));
    let chi = parabolic_euler(&p, &h).unwrap();
    assert_eq!(chi.eval(&int(0)), q(1, 2));

    let trivial = ParabolicSheaf::trivial(p.model().clone(), 1, DivClass::from_ints(&[0]), int(0)).unwrap();
    assert_eq!(parabolic_slope(&trivial, &h).unwrap().padeg, int(0));
    // χ(O(m-1)) on P²
    let chi = parabolic_euler(&trivial, &h).unwrap();
    for m in -3..4 {
        assert_eq!(chi.eval(&int(m)), Rat::from_frac(m * (m + 1), 2));
    }
}

#[test]
fn thm39_rank_one() {
    let p = rank_one_parabolic();
    let report = thm39_check(&p).unwrap();
    assert_eq!(report.delta_w, int(0));
    assert_eq!(report.verdict.residual, int(0));
    let rs = p.model().clone();
    let e = ParabolicSheaf::trivial(rs, 2, DivClass::from_ints(&[0]), int(-1)).unwrap();
    let report = thm39_check(&e).unwrap();
    assert_eq!(report.delta_w, int(-4));
    assert!(!report.verdict.holds);
}
