//! Slopes, discriminants and the Bogomolov-type inequalities, each reported
//! as an exact residual. Semistability is never verified here: it is a
//! hypothesis supplied by the caller.

mod bounds;
mod parabolic;
mod polygon;
mod slopes;

pub use bounds::{
    alpha_bound, beta, higgs_min_char, kplus_membership, miyaoka_yau_check, restriction_threshold,
    thm_a3_check, thm_a5_checks, xi_class, BoundsInput, HiggsBound,
};
pub use parabolic::{parabolic_euler, parabolic_slope, thm39_check, ParabolicSlope, Thm39Report};
pub use polygon::{hn_sum, thm_a1_check, HNPolygon};
pub use slopes::{
    bogomolov_check, delta, slopes, BogomolovReport, ClaimStatus, SlopeReport, StabilityClaim,
};

use crate::numeric::Scalar;

#[cfg(test)]
mod tests;

/// An inequality evaluated exactly: `holds` iff `residual ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<T> {
    pub holds: bool,
    pub residual: T,
}

impl<T: Scalar> Verdict<T> {
    pub fn from_residual(residual: T) -> Self {
        Self {
            holds: !residual.is_negative(),
            residual,
        }
    }
}
