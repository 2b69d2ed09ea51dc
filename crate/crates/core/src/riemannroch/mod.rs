//! Orbifold Chern character and Todd class on the inertia stack, the
//! Riemann-Roch Euler characteristic and modified Hilbert polynomials.
//!
//! Sector integrals use weight 1 on the untwisted sector, `1/r` on a gerbe
//! curve (whose degrees are recorded on the coarse curve) and `1/r²` per point
//! of a `μ_r × μ_r` point sector.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{DivClass, RootStackModel, Sector, StackyClass};
use crate::numeric::{cyc_root, cyc_to_rat, Cyclotomic, Poly, Scalar};
use crate::sheafdata::{GeneratingSheafData, OrbSheaf};


/// A truncated class on one inertia sector.
///
/// Curve degrees are degrees on the coarse curve `D_λ`; the untwisted degree-2
/// part is an integral over the stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectorClass<T: Scalar> {
    Untwisted {
        deg0: T,
        deg1: StackyClass<T>,
        /// `None` when it depends on an Euler number the surface lacks.
        deg2: Option<T>,
    },
    Curve {
        deg0: Cyclotomic<T>,
        deg1: Cyclotomic<T>,
    },
    Point {
        deg0: Cyclotomic<T>,
    },
}

/// One [`SectorClass`] per inertia sector, in the order of
/// [`RootStackModel::sectors`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorClassVector<T: Scalar> {
    pub entries: Vec<(Sector, SectorClass<T>)>,
}

impl<T: Scalar> SectorClassVector<T> {
    pub fn get(&self, sector: &Sector) -> Option<&SectorClass<T>> {
        self.entries.iter().find(|(s, _)| s == sector).map(|(_, c)| c)
    }

    pub fn untwisted(&self) -> &SectorClass<T> {
        &self.entries[0].1
    }
}

impl<T: Scalar> fmt::Display for SectorClassVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (sector, class) in &self.entries {
            match (sector, class) {
                (_, SectorClass::Untwisted { deg0, deg1, deg2 }) => {
                    write!(f, "untwisted: {deg0} | {deg1} | ")?;
                    match deg2 {
                        Some(d) => writeln!(f, "{d}")?,
                        None => writeln!(f, "?")?,
                    }
                }
                (Sector::Curve { component, k }, SectorClass::Curve { deg0, deg1 }) => {
                    writeln!(f, "curve {component} k={k}: {deg0} | {deg1}")?
                }
                (Sector::Point { first, second, k1, k2, .. }, SectorClass::Point { deg0 }) => {
                    writeln!(f, "point {first},{second} k=({k1},{k2}): {deg0}")?
                }
                _ => unreachable!("sector and class kinds always agree"),
            }
        }
        Ok(())
    }
}

fn weighted_sum<T: Scalar>(r: u32, terms: impl Iterator<Item = (usize, T)>) -> Cyclotomic<T> {
    let mut coeffs = vec![T::zero(); r as usize];
    for (e, c) in terms {
        let slot = e % r as usize;
        coeffs[slot] = coeffs[slot].clone() + c;
    }
    Cyclotomic::from_power_sum(r, &coeffs)
}

/// Orbifold Chern character: on each sector, the eigenpieces weighted by the
/// eigenvalue of the sector generator.
pub fn orb_ch<T: Scalar>(e: &OrbSheaf<T>) -> SectorClassVector<T> {
    let model = e.model();
    let r = model.r();
    let entries = model
        .sectors()
        .iter()
        .map(|sector| {
            let class = match *sector {
                Sector::Untwisted => SectorClass::Untwisted {
                    deg0: T::from_u32(e.rank()),
                    deg1: e.c1().clone(),
                    deg2: Some(e.ch2()),
                },
                Sector::Curve { component, k } => {
                    let pieces = e.curve_data(component);
                    let k = k as usize;
                    SectorClass::Curve {
                        deg0: weighted_sum(
                            r,
                            pieces.iter().enumerate().map(|(j, p)| (j * k, T::from_u32(p.rank))),
                        ),
                        deg1: weighted_sum(
                            r,
                            pieces.iter().enumerate().map(|(j, p)| (j * k, p.degree.clone())),
                        ),
                    }
                }
                Sector::Point {
                    first,
                    second,
                    k1,
                    k2,
                    ..
                } => {
                    let table = e.point_data(first, second).expect("validated crossing table");
                    let terms = table.iter().enumerate().flat_map(|(j1, row)| {
                        row.iter().enumerate().map(move |(j2, &n)| {
                            (j1 * k1 as usize + j2 * k2 as usize, T::from_u32(n))
                        })
                    });
                    SectorClass::Point {
                        deg0: weighted_sum(r, terms),
                    }
                }
            };
            (sector.clone(), class)
        })
        .collect();
    SectorClassVector { entries }
}

/// `1/(1 - ζ_r^{-k})`
fn inverse_one_minus<T: Scalar>(r: u32, k: i64) -> Cyclotomic<T> {
    let w = cyc_root::<T>(r, -k);
    (&Cyclotomic::one() - &w)
        .inv()
        .expect("ζ^{-k} ≠ 1 on a twisted sector")
}

/// Orbifold Todd class of the tangent bundle.
///
/// Untwisted: `1 - K_𝒳/2 + (K_𝒳² + e_orb)/12`. On the gerbe sector `(λ, k)`
/// with `w = ζ_r^{-k}`, normal degree `N` and tangent degree `T` (both on
/// the coarse curve): `1/(1-w) + T/(2(1-w)) - w·N/(1-w)²`. On a point sector:
/// `1/((1-ζ^{-k₁})(1-ζ^{-k₂}))`.
pub fn orb_todd<T: Scalar>(model: &RootStackModel<T>) -> SectorClassVector<T> {
    let r = model.r();
    let half = T::one() / T::from_i64(2);
    let entries = model
        .sectors()
        .iter()
        .map(|sector| {
            let class = match *sector {
                Sector::Untwisted => {
                    let k = model.canonical_class();
                    let k2 = model.stacky_intersect(&k, &k).expect("model class");
                    SectorClass::Untwisted {
                        deg0: T::one(),
                        deg1: k.scale(&-half.clone()),
                        deg2: model
                            .orbifold_euler_number()
                            .ok()
                            .map(|e| (k2 + e) / T::from_i64(12)),
                    }
                }
                Sector::Curve { component, k } => {
                    let inv = inverse_one_minus::<T>(r, i64::from(k));
                    let w = cyc_root::<T>(r, -i64::from(k));
                    let tangent = model.gerbe_tangent_degree(component);
                    let normal = model.gerbe_normal_degree(component);
                    let deg1 = &inv.scale(&(tangent * half.clone()))
                        - &(&(&w * &inv) * &inv).scale(&normal);
                    SectorClass::Curve { deg0: inv, deg1 }
                }
                Sector::Point { k1, k2, .. } => SectorClass::Point {
                    deg0: &inverse_one_minus::<T>(r, i64::from(k1))
                        * &inverse_one_minus::<T>(r, i64::from(k2)),
                },
            };
            (sector.clone(), class)
        })
        .collect();
    SectorClassVector { entries }
}

/// `χ(E) - rk(E)·td₂`: everything in the Riemann-Roch sum except the term
/// that needs the Euler number.
fn euler_char_without_td2<T: Scalar>(e: &OrbSheaf<T>, todd: &SectorClassVector<T>) -> Result<T> {
    let model = e.model();
    let r = model.r();
    let rt = T::from_u32(r);
    let ch = orb_ch(e);
    let mut untwisted = T::zero();
    let mut twisted = Cyclotomic::zero();
    for ((sector, c), (_, t)) in ch.entries.iter().zip(&todd.entries) {
        match (c, t) {
            (
                SectorClass::Untwisted { deg1: c1, deg2, .. },
                SectorClass::Untwisted { deg1: t1, .. },
            ) => {
                untwisted = model.stacky_intersect(c1, t1)? + deg2.clone().expect("ch₂ always known");
            }
            (
                SectorClass::Curve { deg0: c0, deg1: c1 },
                SectorClass::Curve { deg0: t0, deg1: t1 },
            ) => {
                let term = &(c0 * t1) + &(c1 * t0);
                twisted = &twisted + &term.scale(&(T::one() / rt.clone()));
            }
            (SectorClass::Point { deg0: c0 }, SectorClass::Point { deg0: t0 }) => {
                let n = match sector {
                    Sector::Point { multiplicity, .. } => T::from_u32(*multiplicity),
                    _ => unreachable!(),
                };
                twisted = &twisted + &(c0 * t0).scale(&(n / (rt.clone() * rt.clone())));
            }
            _ => unreachable!("sector lists agree"),
        }
    }
    Ok(untwisted + cyc_to_rat(&twisted)?)
}

fn untwisted_td2<T: Scalar>(todd: &SectorClassVector<T>) -> Result<T> {
    match todd.untwisted() {
        SectorClass::Untwisted { deg2: Some(t), .. } => Ok(t.clone()),
        _ => Err(Error::MissingEulerNumber),
    }
}

/// `χ(𝒳, E)` by the Riemann-Roch theorem on the inertia stack. Fails with
/// `NotRational` if the twisted contributions do not cancel to a rational.
pub fn euler_char<T: Scalar>(e: &OrbSheaf<T>) -> Result<T> {
    let todd = orb_todd(e.model());
    let td2 = untwisted_td2(&todd)?;
    Ok(euler_char_without_td2(e, &todd)? + T::from_u32(e.rank()) * td2)
}

/// The sheaves `E ⊗ Ξ^∨ ⊗ π*O(mH)` for `m = 0, 1, 2`.
fn hilbert_samples<T: Scalar>(
    e: &OrbSheaf<T>,
    xi: &GeneratingSheafData<T>,
    h: &DivClass<T>,
) -> Result<Vec<OrbSheaf<T>>> {
    let model = e.model();
    let base = e.tensor(&xi.sheaf().dual())?;
    (0..3)
        .map(|m| base.twist(&StackyClass::pullback(h.scale(&T::from_i64(m)), model.components())))
        .collect()
}

/// `H_Ξ(E, m) = χ(E ⊗ Ξ^∨ ⊗ π*O(mH))`.
pub fn modified_hilbert<T: Scalar>(
    e: &OrbSheaf<T>,
    xi: &GeneratingSheafData<T>,
    h: &DivClass<T>,
) -> Result<Poly<T>> {
    let points = hilbert_samples(e, xi, h)?
        .iter()
        .enumerate()
        .map(|(m, f)| Ok((T::from_i64(m as i64), euler_char(f)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::interpolate(&points))
}

/// `(α_{Ξ,2}(E), α_{Ξ,1}(E))` where `H_Ξ(E, m) = α₂m²/2 + α₁m + α₀`. These do
/// not depend on the Euler number of the surface.
pub fn modified_alphas<T: Scalar>(
    e: &OrbSheaf<T>,
    xi: &GeneratingSheafData<T>,
    h: &DivClass<T>,
) -> Result<(T, T)> {
    let todd = orb_todd(e.model());
    let points = hilbert_samples(e, xi, h)?
        .iter()
        .enumerate()
        .map(|(m, f)| Ok((T::from_i64(m as i64), euler_char_without_td2(f, &todd)?)))
        .collect::<Result<Vec<_>>>()?;
    let p = Poly::interpolate(&points);
    Ok((p.coeff(2) * T::from_i64(2), p.coeff(1)))
}
