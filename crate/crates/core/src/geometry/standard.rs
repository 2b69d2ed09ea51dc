//! Ready-made models: the projective plane, the quadric surface and root
//! stacks of the plane along lines.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{DivClass, RootStackModel, SurfaceModel};
use crate::error::Result;
use crate::numeric::Scalar;

/// `P²` with basis the hyperplane class and `lines` named copies `L1, L2, …`
/// of it (`L` alone when `lines == 1`).
pub fn projective_plane<T: Scalar>(lines: usize) -> SurfaceModel<T> {
    let divisors = line_names(lines)
        .into_iter()
        .map(|n| (n, DivClass::from_ints(&[1])))
        .collect();
    SurfaceModel::new(
        vec![vec![T::one()]],
        DivClass::from_ints(&[1]),
        DivClass::from_ints(&[-3]),
        Some(T::from_i64(3)),
        divisors,
    )
    .expect("P² lattice is valid")
}

/// `P¹ × P¹` in the basis of the two rulings `F1`, `F2`, polarized by `F1 + F2`.
pub fn quadric<T: Scalar>() -> SurfaceModel<T> {
    let mut divisors = BTreeMap::new();
    divisors.insert("F1".to_string(), DivClass::from_ints(&[1, 0]));
    divisors.insert("F2".to_string(), DivClass::from_ints(&[0, 1]));
    SurfaceModel::new(
        vec![vec![T::zero(), T::one()], vec![T::one(), T::zero()]],
        DivClass::from_ints(&[1, 1]),
        DivClass::from_ints(&[-2, -2]),
        Some(T::from_i64(4)),
        divisors,
    )
    .expect("quadric lattice is valid")
}

/// The `r`-th root stack of `P²` along `lines` general lines.
pub fn plane_root_stack<T: Scalar>(r: u32, lines: usize) -> Result<Arc<RootStackModel<T>>> {
    let names = line_names(lines);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    RootStackModel::new(projective_plane(lines), r, &refs, &BTreeMap::new()).map(Arc::new)
}

fn line_names(lines: usize) -> Vec<String> {
    match lines {
        1 => vec!["L".to_string()],
        n => (1..=n).map(|i| format!("L{i}")).collect(),
    }
}
