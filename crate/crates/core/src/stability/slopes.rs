use crate::error::{Error, Result};
use crate::geometry::{DivClass, StackyClass};
use crate::numeric::Scalar;
use crate::riemannroch::modified_alphas;
use crate::sheafdata::{GeneratingSheafData, OrbSheaf};

use super::Verdict;

/// Slopes of a sheaf with respect to a polarization and a generating sheaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeReport<T> {
    /// `α_{Ξ,1}/α_{Ξ,2}`
    pub mu_xi: T,
    /// `∫c₁·π*H`
    pub deg: T,
    /// `deg/rk`
    pub mu_orb: T,
    /// `α_{Ξ,1}(E)/rk(Ξ) - rk(E)·α_{Ξ,1}(O)/rk(Ξ)`
    pub deg_xi: T,
}

/// Refuses generating sheaves violating Condition ⋆, for which the modified
/// slope and the orbifold slope need not order sheaves the same way.
pub fn slopes<T: Scalar>(
    e: &OrbSheaf<T>,
    xi: &GeneratingSheafData<T>,
    h: &DivClass<T>,
) -> Result<SlopeReport<T>> {
    if !xi.condition_star() {
        return Err(Error::ConditionStarViolated);
    }
    let model = e.model();
    let (a2, a1) = modified_alphas(e, xi, h)?;
    let o = OrbSheaf::trivial(model.clone(), 1)?;
    let (_, a1_o) = modified_alphas(&o, xi, h)?;
    let rk = T::from_u32(e.rank());
    let rk_xi = T::from_u32(xi.rk_xi());
    let deg = model.stacky_intersect(e.c1(), &StackyClass::pullback(h.clone(), model.components()))?;
    Ok(SlopeReport {
        mu_xi: a1.clone() / a2,
        mu_orb: deg.clone() / rk.clone(),
        deg,
        deg_xi: a1 / rk_xi.clone() - rk * a1_o / rk_xi,
    })
}

/// `Δ(E) = 2·rk·∫c₂ - (rk-1)·∫c₁²`
pub fn delta<T: Scalar>(e: &OrbSheaf<T>) -> T {
    let rk = T::from_u32(e.rank());
    T::from_i64(2) * rk.clone() * e.c2().clone() - (rk - T::one()) * e.c1_squared()
}

/// Hypotheses the caller asserts about a sheaf; none of them can be checked
/// from numerical data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StabilityClaim {
    pub semistable: bool,
    pub strongly: bool,
    /// 0 for characteristic zero.
    pub characteristic: u64,
}

impl StabilityClaim {
    /// Whether the Bogomolov inequality is a theorem under the claim:
    /// semistable in characteristic zero, or strongly semistable.
    pub fn implies_bogomolov(&self) -> bool {
        self.semistable && (self.characteristic == 0 || self.strongly)
    }
}

/// Outcome of confronting `Δ(E)` with a stability claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    /// No claim that forces `Δ ≥ 0` was made.
    NotApplicable,
    /// The claim forces `Δ ≥ 0` and the data agrees.
    Consistent,
    /// The claim forces `Δ ≥ 0` but `Δ < 0`: the claim is false.
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BogomolovReport<T> {
    pub verdict: Verdict<T>,
    pub claim: ClaimStatus,
}

/// Residual `Δ(E)`; holds iff it is nonnegative.
pub fn bogomolov_check<T: Scalar>(e: &OrbSheaf<T>, claim: &StabilityClaim) -> BogomolovReport<T> {
    let verdict = Verdict::from_residual(delta(e));
    let claim = match (claim.implies_bogomolov(), verdict.holds) {
        (false, _) => ClaimStatus::NotApplicable,
        (true, true) => ClaimStatus::Consistent,
        (true, false) => ClaimStatus::Refuted,
    };
    BogomolovReport { verdict, claim }
}
