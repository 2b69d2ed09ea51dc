use std::sync::Arc;

use super::orbsheaf::{line_bundle, OrbSheaf};
use crate::error::{Error, Result};
use crate::geometry::RootStackModel;
use crate::numeric::Scalar;

/// A locally free sheaf used as generating sheaf: on every gerbe curve each of
/// the `r` characters occurs with eigenrank at least one.
#[derive(Clone, Debug)]
pub struct GeneratingSheafData<T> {
    sheaf: OrbSheaf<T>,
}

impl<T: Scalar> PartialEq for GeneratingSheafData<T> {
    fn eq(&self, other: &Self) -> bool {
        self.sheaf == other.sheaf
    }
}

impl<T: Scalar> Eq for GeneratingSheafData<T> {}

impl<T: Scalar> GeneratingSheafData<T> {
    pub fn new(sheaf: OrbSheaf<T>) -> Result<Self> {
        let model = sheaf.model().clone();
        for lambda in 0..model.components() {
            if let Some(j) = sheaf.curve_data(lambda).iter().position(|p| p.rank == 0) {
                return Err(Error::NotGenerating(format!(
                    "character {j}/{} is missing on `{}`",
                    model.r(),
                    model.component_name(lambda)
                )));
            }
        }
        Ok(Self { sheaf })
    }

    pub fn sheaf(&self) -> &OrbSheaf<T> {
        &self.sheaf
    }

    pub fn rk_xi(&self) -> u32 {
        self.sheaf.rank()
    }

    pub fn condition_star(&self) -> bool {
        condition_star_check(&self.sheaf)
    }
}

/// `Ξ = ⊕_{i=0}^{r-1} O_𝒳(i·Σ_λ D̃_λ)`.
pub fn default_generating_sheaf<T: Scalar>(
    model: &Arc<RootStackModel<T>>,
) -> Result<GeneratingSheafData<T>> {
    let diagonal = model
        .components_iter()
        .fold(model.zero_class(), |acc, i| acc.add(&model.tilde(i)));
    let mut xi = line_bundle(model, &model.zero_class())?;
    for i in 1..model.r() {
        xi = xi.direct_sum(&line_bundle(model, &diagonal.scale(&T::from_u32(i)))?)?;
    }
    GeneratingSheafData::new(xi)
}

/// True iff on every gerbe curve all `r` eigenranks are equal.
pub fn condition_star_check<T: Scalar>(xi: &OrbSheaf<T>) -> bool {
    (0..xi.model().components()).all(|lambda| {
        let pieces = xi.curve_data(lambda);
        pieces.iter().all(|p| p.rank == pieces[0].rank)
    })
}
