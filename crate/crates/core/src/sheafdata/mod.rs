//! Numerical invariants of sheaves on a root stack and of parabolic sheaves on
//! its coarse surface, with the operations relating them.

mod generating;
mod orbsheaf;
mod parabolic;

pub use generating::{condition_star_check, default_generating_sheaf, GeneratingSheafData};
pub use orbsheaf::{
    direct_sum, dual, frobenius_pullback, line_bundle, tensor, twist, CharacterRule, EigenPiece,
    OrbSheaf, SectorRestriction,
};
pub use parabolic::{orb_to_parabolic, parabolic_to_orb, ParabolicPiece, ParabolicSheaf};
