//! Exact numerical engine for sheaves on root stacks over smooth projective
//! surfaces: intersection pairings, inertia sectors, orbifold Riemann-Roch,
//! modified slopes, discriminants and the Bogomolov-type bound evaluators.
//!
//! Every module is generic over an exact [`Scalar`]; the aliases below fix the
//! scalar to arbitrary-precision rationals, which is what the CLI uses.

pub mod error;
pub mod geometry;
pub mod numeric;
pub mod riemannroch;
pub mod sheafdata;
pub mod stability;

pub use error::{Error, Result};
pub use numeric::Scalar;

use num_bigint::BigInt;
use num_rational::Ratio;

/// Arbitrary-precision rational number.
pub type Rat = Ratio<BigInt>;
/// Element of a cyclotomic field over [`Rat`].
pub type Cyc = numeric::Cyclotomic<Rat>;
/// Univariate polynomial over [`Rat`].
pub type RatPoly = numeric::Poly<Rat>;

pub type DivClass = geometry::DivClass<Rat>;
pub type StackyClass = geometry::StackyClass<Rat>;
pub type SurfaceModel = geometry::SurfaceModel<Rat>;
pub type RootStackModel = geometry::RootStackModel<Rat>;
pub type OrbSheaf = sheafdata::OrbSheaf<Rat>;
pub type GeneratingSheafData = sheafdata::GeneratingSheafData<Rat>;
pub type ParabolicSheaf = sheafdata::ParabolicSheaf<Rat>;
pub type SectorClassVector = riemannroch::SectorClassVector<Rat>;
pub type SlopeReport = stability::SlopeReport<Rat>;
pub type HNPolygon = stability::HNPolygon<Rat>;
pub type BoundsInput = stability::BoundsInput<Rat>;
pub type Verdict = stability::Verdict<Rat>;
