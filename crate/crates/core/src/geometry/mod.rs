//! Numerical surface models, root stacks and their inertia sectors.

mod rootstack;
pub mod standard;
mod surface;

pub use rootstack::{stacky_intersect, RootStackModel, Sector, StackyClass};
pub use surface::{inertia, intersect, DivClass, Inertia, SurfaceModel};
