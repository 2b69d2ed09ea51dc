//! Random models and sheaves shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use orbisurf_core::geometry::{inertia, DivClass, RootStackModel, StackyClass, SurfaceModel};
use orbisurf_core::sheafdata::{line_bundle, OrbSheaf, ParabolicPiece, ParabolicSheaf};
use orbisurf_core::{Rat, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(n: i64) -> Rat {
    Rat::from_i64(n)
}

pub fn rat(rng: &mut impl Rng, bound: i64, den: i64) -> Rat {
    Rat::from_frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=den))
}

fn int_vec(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Gram matrix `Pᵀ·diag(1, -a, -b, …)·P` for a random invertible integer `P`,
/// so the signature is `(1, ρ-1)`.
pub fn random_gram(rng: &mut impl Rng, rho: usize) -> Vec<Vec<Rat>> {
    loop {
        let diag: Vec<i64> = (0..rho)
            .map(|i| if i == 0 { rng.gen_range(1..=3) } else { -rng.gen_range(1..=3) })
            .collect();
        let p: Vec<Vec<i64>> = (0..rho).map(|_| int_vec(rng, rho, 2)).collect();
        let gram: Vec<Vec<Rat>> = (0..rho)
            .map(|i| {
                (0..rho)
                    .map(|j| int((0..rho).map(|k| p[k][i] * diag[k] * p[k][j]).sum()))
                    .collect()
            })
            .collect();
        let s = inertia(&gram);
        if s.positive == 1 && s.negative == rho - 1 && s.null == 0 {
            return gram;
        }
    }
}

fn pair(gram: &[Vec<Rat>], a: &[i64], b: &[i64]) -> Rat {
    let mut t = int(0);
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            t += gram[i][j].clone() * int(x * y);
        }
    }
    t
}

/// A random surface with `ρ ≤ 3` and `branch` named divisor classes `B0, B1, …`
/// that meet pairwise in a nonnegative number of points.
pub fn random_surface(rng: &mut impl Rng, rho: usize, branch: usize) -> SurfaceModel<Rat> {
    let gram = random_gram(rng, rho);
    // the positive cone can be narrow, so the search box grows
    let mut bound = 3;
    let h = loop {
        let h = int_vec(rng, rho, bound / 16 + 3);
        if pair(&gram, &h, &h) > int(0) {
            break h;
        }
        bound += 1;
    };
    let divisors: Vec<Vec<i64>> = loop {
        let ds: Vec<Vec<i64>> = (0..branch).map(|_| int_vec(rng, rho, 2)).collect();
        let ok = (0..branch).all(|i| {
            (i + 1..branch).all(|j| {
                let v = pair(&gram, &ds[i], &ds[j]);
                v >= int(0) && v <= int(4)
            })
        });
        if ok {
            break ds;
        }
    };
    let k = int_vec(rng, rho, 3);
    let euler = int(rng.gen_range(-4..=30));
    let names: BTreeMap<String, DivClass<Rat>> = divisors
        .iter()
        .enumerate()
        .map(|(i, d)| (format!("B{i}"), DivClass::from_ints(d)))
        .collect();
    SurfaceModel::new(gram, DivClass::from_ints(&h), DivClass::from_ints(&k), Some(euler), names)
        .expect("constructed with signature (1, ρ-1)")
}

pub fn random_root_stack(rng: &mut impl Rng) -> Arc<RootStackModel<Rat>> {
    let rho = rng.gen_range(1..=3);
    let branch = rng.gen_range(0..=2);
    let r = rng.gen_range(1..=4);
    random_root_stack_with(rng, rho, branch, r)
}

pub fn random_root_stack_with(
    rng: &mut impl Rng,
    rho: usize,
    branch: usize,
    r: u32,
) -> Arc<RootStackModel<Rat>> {
    let s = random_surface(rng, rho, branch);
    let names: Vec<String> = (0..branch).map(|i| format!("B{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Arc::new(RootStackModel::new(s, r, &refs, &BTreeMap::new()).expect("valid root stack"))
}

pub fn random_integral_class(rng: &mut impl Rng, rs: &RootStackModel<Rat>, bound: i64) -> StackyClass<Rat> {
    StackyClass::new(
        DivClass::from_ints(&int_vec(rng, rs.rho(), bound)),
        int_vec(rng, rs.components(), bound).into_iter().map(int).collect(),
    )
}

pub fn random_line_bundle(rng: &mut impl Rng, rs: &Arc<RootStackModel<Rat>>) -> OrbSheaf<Rat> {
    let c = random_integral_class(rng, rs, 3);
    line_bundle(rs, &c).unwrap()
}

/// Same sector data and first Chern class, different `∫c₂`.
pub fn with_c2(e: &OrbSheaf<Rat>, c2: Rat) -> OrbSheaf<Rat> {
    let curve = (0..e.model().components()).map(|i| e.curve_data(i).to_vec()).collect();
    OrbSheaf::explicit(
        e.model().clone(),
        e.rank(),
        e.c1().clone(),
        c2,
        curve,
        e.point_tables().clone(),
    )
    .unwrap()
}

/// Sum of up to three line bundles, possibly tensored with another sum,
/// with `∫c₂` perturbed.
pub fn random_sheaf(rng: &mut impl Rng, rs: &Arc<RootStackModel<Rat>>) -> OrbSheaf<Rat> {
    let mut e = random_line_bundle(rng, rs);
    for _ in 0..rng.gen_range(0..3) {
        e = e.direct_sum(&random_line_bundle(rng, rs)).unwrap();
    }
    if rng.gen_bool(0.3) {
        let f = random_line_bundle(rng, rs).direct_sum(&random_line_bundle(rng, rs)).unwrap();
        e = e.tensor(&f).unwrap();
    }
    if rng.gen_bool(0.3) {
        e = e.dual();
    }
    let shift = rat(rng, 5, 3);
    let c2 = e.c2().clone() + shift;
    with_c2(&e, c2)
}

pub fn random_parabolic(rng: &mut impl Rng, rs: &Arc<RootStackModel<Rat>>, rank: u32) -> ParabolicSheaf<Rat> {
    let r = rs.r();
    let h = rs.components();
    let mut multipliers: Vec<u32> = (0..r).filter(|_| rng.gen_bool(0.5)).collect();
    multipliers.sort_unstable();
    let mut remaining = vec![rank; h];
    let pieces = multipliers
        .into_iter()
        .map(|m| {
            let ranks: Vec<u32> = (0..h)
                .map(|l| {
                    let x = rng.gen_range(0..=remaining[l]);
                    remaining[l] -= x;
                    x
                })
                .collect();
            let degrees = (0..h).map(|_| rat(rng, 4, 1)).collect();
            ParabolicPiece {
                weight: Rat::from_frac(i64::from(m), i64::from(r)),
                ranks,
                degrees,
            }
        })
        .collect();
    ParabolicSheaf::new(
        rs.clone(),
        rank,
        DivClass::from_ints(&int_vec(rng, rs.rho(), 3)),
        int(rng.gen_range(-5..=5)),
        pieces,
    )
    .unwrap()
}
