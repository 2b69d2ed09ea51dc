use crate::error::{Error, Result};
use crate::geometry::DivClass;
use crate::numeric::{Poly, Scalar};
use crate::sheafdata::{parabolic_to_orb, ParabolicSheaf};

use super::{delta, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSlope<T> {
    pub padeg: T,
    pub pamu: T,
}

/// `padeg = c₁(E)·H + Σ_{i,λ} α_i·r_{iλ}·(D_λ·H)` and `pamu = padeg/rk`.
pub fn parabolic_slope<T: Scalar>(p: &ParabolicSheaf<T>, h: &DivClass<T>) -> Result<ParabolicSlope<T>> {
    let base = p.model().base();
    let padeg = base.intersect(p.c1(), h)? + base.intersect(&p.weight_class(), h)?;
    Ok(ParabolicSlope {
        pamu: padeg.clone() / T::from_u32(p.rank()),
        padeg,
    })
}

/// `χ(E(-D)(m)) + Σ_i α_i·χ(G_i(m))` as a polynomial in `m`, by Riemann-Roch
/// on the surface and on each branch curve.
pub fn parabolic_euler<T: Scalar>(p: &ParabolicSheaf<T>, h: &DivClass<T>) -> Result<Poly<T>> {
    let model = p.model();
    let base = model.base();
    let chi_o = base
        .chi_structure_sheaf()
        .map_err(|_| Error::MissingGeometry("the surface has no Euler number".into()))?;
    let branch = (0..model.components()).fold(DivClass::zero(model.rho()), |acc, i| {
        &acc + model.component_class(i)
    });
    let rk = T::from_u32(p.rank());
    let two = T::from_i64(2);
    let k = base.k();
    let mut points = Vec::with_capacity(3);
    for m in 0..3i64 {
        let mt = T::from_i64(m);
        let twist = &h.scale(&mt) - &branch;
        let c1 = p.c1() + &twist.scale(&rk);
        let c2 = p.c2().clone()
            + (rk.clone() - T::one()) * base.intersect(p.c1(), &twist)?
            + rk.clone() * (rk.clone() - T::one()) / two.clone() * base.intersect(&twist, &twist)?;
        let mut chi = rk.clone() * chi_o.clone() + base.intersect(&c1, &(&c1 - k))? / two.clone() - c2;
        for piece in p.pieces() {
            let mut graded = T::zero();
            for lambda in 0..model.components() {
                let d = model.component_class(lambda);
                let r = T::from_u32(piece.ranks[lambda]);
                let one_minus_g = base.curve_euler_number(d)? / two.clone();
                graded = graded
                    + piece.degrees[lambda].clone()
                    + mt.clone() * r.clone() * base.intersect(d, h)?
                    + r * one_minus_g;
            }
            chi = chi + piece.weight.clone() * graded;
        }
        points.push((mt, chi));
    }
    Ok(Poly::interpolate(&points))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm39Report<T> {
    pub verdict: Verdict<T>,
    pub lhs: T,
    pub rhs: T,
    /// `Δ(W)` of the corresponding sheaf on the root stack.
    pub delta_w: T,
}

/// Parabolic Bogomolov inequality
/// `c₂(E) + c₁(E)·A + A²/2 - Σ(α_i² r_{iλ} D_λ²/2 + α_i d_{iλ}) ≥ (rk-1)/(2rk)·(c₁(E) + A)²`
/// with `A = Σ α_i r_{iλ} D_λ`. Also checks that `2·rk·(lhs - rhs) = Δ(W)`.
pub fn thm39_check<T: Scalar>(p: &ParabolicSheaf<T>) -> Result<Thm39Report<T>> {
    let model = p.model();
    let base = model.base();
    let a = p.weight_class();
    let two = T::from_i64(2);
    let rk = T::from_u32(p.rank());
    let lhs = p.c2().clone() + base.intersect(p.c1(), &a)? + base.intersect(&a, &a)? / two.clone()
        - p.graded_correction();
    let total = p.c1() + &a;
    let rhs = (rk.clone() - T::one()) / (two.clone() * rk.clone()) * base.intersect(&total, &total)?;
    let residual = lhs.clone() - rhs.clone();
    let delta_w = delta(&parabolic_to_orb(model, p)?);
    if two * rk * residual.clone() != delta_w {
        return Err(Error::IdentityFailure(format!(
            "2·rk·({residual}) differs from Δ(W) = {delta_w}"
        )));
    }
    Ok(Thm39Report {
        verdict: Verdict::from_residual(residual),
        lhs,
        rhs,
        delta_w,
    })
}
