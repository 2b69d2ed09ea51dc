use std::collections::BTreeMap;
use std::sync::Arc;

use super::orbsheaf::{northwest_corner, same_model, EigenPiece, OrbSheaf};
use crate::error::{Error, Result};
use crate::geometry::{DivClass, RootStackModel, StackyClass};
use crate::numeric::Scalar;

/// One weight `α` of a parabolic structure together with the graded pieces
/// `G_{α,λ}` it carries on each branch component: rank `ranks[λ]` and degree
/// `degrees[λ]` on `D_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicPiece<T> {
    pub weight: T,
    pub ranks: Vec<u32>,
    pub degrees: Vec<T>,
}

impl<T: Scalar> ParabolicPiece<T> {
    fn is_invisible(&self) -> bool {
        self.weight.is_zero()
            || (self.ranks.iter().all(|&r| r == 0) && self.degrees.iter().all(|d| d.is_zero()))
    }
}

/// Numerical data of a parabolic sheaf on `(X, D)` with weights in `(1/r)Z`.
#[derive(Clone, Debug)]
pub struct ParabolicSheaf<T> {
    model: Arc<RootStackModel<T>>,
    rank: u32,
    c1: DivClass<T>,
    c2: T,
    pieces: Vec<ParabolicPiece<T>>,
}

impl<T: Scalar> PartialEq for ParabolicSheaf<T> {
    fn eq(&self, other: &Self) -> bool {
        same_model(&self.model, &other.model)
            && self.rank == other.rank
            && self.c1 == other.c1
            && self.c2 == other.c2
            && self.pieces == other.pieces
    }
}

impl<T: Scalar> Eq for ParabolicSheaf<T> {}

impl<T: Scalar> ParabolicSheaf<T> {
    /// `c1` and `c2` are the invariants of the underlying sheaf `E`; the
    /// weights of `pieces` must be strictly increasing in `[0, 1)` with
    /// denominator dividing the root order of `model`.
    pub fn new(
        model: Arc<RootStackModel<T>>,
        rank: u32,
        c1: DivClass<T>,
        c2: T,
        pieces: Vec<ParabolicPiece<T>>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("sheaf rank must be positive".into()));
        }
        if c1.dim() != model.rho() {
            return Err(Error::DimensionMismatch {
                expected: model.rho(),
                found: c1.dim(),
            });
        }
        let r = model.r();
        let h = model.components();
        let mut previous: Option<&T> = None;
        for piece in &pieces {
            let w = &piece.weight;
            if w.is_negative() || *w >= T::one() {
                return Err(Error::InvalidWeights(format!("weight {w} is outside [0, 1)")));
            }
            if previous.is_some_and(|p| p >= w) {
                return Err(Error::InvalidWeights("weights must be strictly increasing".into()));
            }
            previous = Some(w);
            if !(w.clone() * T::from_u32(r)).is_integer() {
                return Err(Error::WeightDenominatorMismatch {
                    weight: w.to_string(),
                    r,
                });
            }
            for len in [piece.ranks.len(), piece.degrees.len()] {
                if len != h {
                    return Err(Error::DimensionMismatch {
                        expected: h,
                        found: len,
                    });
                }
            }
        }
        for lambda in 0..h {
            let total: u32 = pieces.iter().map(|p| p.ranks[lambda]).sum();
            if total > rank {
                return Err(Error::InvalidWeights(format!(
                    "graded ranks on `{}` sum to {total}, more than the rank {rank}",
                    model.component_name(lambda)
                )));
            }
        }
        Ok(Self {
            model,
            rank,
            c1,
            c2,
            pieces,
        })
    }

    /// The trivial parabolic structure on `E`.
    pub fn trivial(model: Arc<RootStackModel<T>>, rank: u32, c1: DivClass<T>, c2: T) -> Result<Self> {
        Self::new(model, rank, c1, c2, Vec::new())
    }

    pub fn model(&self) -> &Arc<RootStackModel<T>> {
        &self.model
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn c1(&self) -> &DivClass<T> {
        &self.c1
    }

    pub fn c2(&self) -> &T {
        &self.c2
    }

    pub fn pieces(&self) -> &[ParabolicPiece<T>] {
        &self.pieces
    }

    /// Drops weight zero and pieces with no rank or degree anywhere; these
    /// leave no trace in the numerical invariants.
    pub fn normalized(&self) -> Self {
        Self {
            pieces: self
                .pieces
                .iter()
                .filter(|p| !p.is_invisible())
                .cloned()
                .collect(),
            ..self.clone()
        }
    }

    /// `Σ_{i,λ} α_i·r_{iλ}·D_λ`
    pub fn weight_class(&self) -> DivClass<T> {
        let mut acc = DivClass::zero(self.model.rho());
        for piece in &self.pieces {
            for (lambda, &rk) in piece.ranks.iter().enumerate() {
                let c = piece.weight.clone() * T::from_u32(rk);
                acc = &acc + &self.model.component_class(lambda).scale(&c);
            }
        }
        acc
    }

    /// `Σ_{i,λ} (α_i²·r_{iλ}·D_λ²/2 + α_i·d_{iλ})`
    pub(crate) fn graded_correction(&self) -> T {
        let two = T::from_i64(2);
        let mut total = T::zero();
        for piece in &self.pieces {
            let a = &piece.weight;
            for lambda in 0..self.model.components() {
                let dd = self.model.self_intersection(lambda);
                total = total
                    + a.clone() * a.clone() * T::from_u32(piece.ranks[lambda]) * dd / two.clone()
                    + a.clone() * piece.degrees[lambda].clone();
            }
        }
        total
    }
}

/// The sheaf `W` on the root stack corresponding to a parabolic sheaf.
///
/// `c₁(W) = π*c₁(E) + Σ m_i·r_{iλ}·D̃_λ` and `∫c₂(W)` comes from writing `W`
/// in K-theory as `π*E` plus the pushforwards `ι_*(π*G_{iλ} ⊗ N^j)`,
/// `1 ≤ j ≤ m_i`, along the gerbes. On `𝒟_λ`, the graded piece of weight
/// `m/r` sits in character `m`; the rest of the rank sits in character 0.
/// Crossing tables are filled greedily from these margins.
pub fn parabolic_to_orb<T: Scalar>(
    model: &Arc<RootStackModel<T>>,
    p: &ParabolicSheaf<T>,
) -> Result<OrbSheaf<T>> {
    if !same_model(model, &p.model) {
        return Err(Error::ModelMismatch);
    }
    let r = model.r();
    let rt = T::from_u32(r);
    let base = model.base();
    let mut stacky = vec![T::zero(); model.components()];
    let mut curve = vec![vec![EigenPiece::<T>::zero(); r as usize]; model.components()];
    for piece in &p.pieces {
        let m = (piece.weight.clone() * rt.clone())
            .to_i64_exact()
            .expect("validated weight") as usize;
        for lambda in 0..model.components() {
            let rk = piece.ranks[lambda];
            stacky[lambda] = stacky[lambda].clone() + T::from_u32(rk) * T::from_u32(m as u32);
            if m == 0 {
                continue;
            }
            let slot = &mut curve[lambda][m];
            slot.rank += rk;
            slot.degree = slot.degree.clone()
                + piece.degrees[lambda].clone()
                + piece.weight.clone() * T::from_u32(rk) * model.self_intersection(lambda);
        }
    }
    let c1 = StackyClass::new(p.c1.clone(), stacky);
    let a = p.weight_class();
    let c2 = p.c2.clone()
        + base.intersect(&p.c1, &a)?
        + base.intersect(&a, &a)? / T::from_i64(2)
        - p.graded_correction();
    for lambda in 0..model.components() {
        let twisted: u32 = curve[lambda][1..].iter().map(|x| x.rank).sum();
        let twisted_degree = curve[lambda][1..]
            .iter()
            .fold(T::zero(), |acc, x| acc + x.degree.clone());
        let total_degree = model.stacky_intersect(&c1, &model.tilde(lambda))? * rt.clone();
        curve[lambda][0] = EigenPiece::new(p.rank - twisted, total_degree - twisted_degree);
    }
    let points = model
        .crossing_pairs()
        .map(|(i, j)| {
            let rows: Vec<u32> = curve[i].iter().map(|x| x.rank).collect();
            let cols: Vec<u32> = curve[j].iter().map(|x| x.rank).collect();
            ((i, j), northwest_corner(&rows, &cols))
        })
        .collect::<BTreeMap<_, _>>();
    OrbSheaf::explicit(model.clone(), p.rank, c1, c2, curve, points)
}

/// Inverse of [`parabolic_to_orb`] on numerical data: reads the weights off
/// the characters on each gerbe curve.
pub fn orb_to_parabolic<T: Scalar>(w: &OrbSheaf<T>) -> Result<ParabolicSheaf<T>> {
    let model = w.model();
    let r = model.r();
    let rt = T::from_u32(r);
    let h = model.components();
    let mut c1 = w.c1().base.clone();
    for lambda in 0..h {
        let a = w.c1().stacky[lambda].to_i64_exact().ok_or_else(|| {
            Error::InconsistentSectorData(format!(
                "non-integral D̃ coefficient on `{}`",
                model.component_name(lambda)
            ))
        })?;
        let c: i64 = w
            .curve_data(lambda)
            .iter()
            .enumerate()
            .map(|(j, x)| j as i64 * i64::from(x.rank))
            .sum();
        if (a - c).rem_euclid(i64::from(r)) != 0 {
            return Err(Error::InconsistentSectorData(format!(
                "determinant character {} on `{}` does not match c1 coefficient {a}",
                c.rem_euclid(i64::from(r)),
                model.component_name(lambda)
            )));
        }
        let shift = T::from_i64((a - c) / i64::from(r));
        c1 = &c1 + &model.component_class(lambda).scale(&shift);
    }
    let mut pieces = Vec::new();
    for j in 1..r as usize {
        if (0..h).all(|lambda| w.curve_data(lambda)[j].is_zero()) {
            continue;
        }
        let weight = T::from_u32(j as u32) / rt.clone();
        let ranks: Vec<u32> = (0..h).map(|lambda| w.curve_data(lambda)[j].rank).collect();
        let degrees = (0..h)
            .map(|lambda| {
                let x = &w.curve_data(lambda)[j];
                x.degree.clone()
                    - weight.clone() * T::from_u32(x.rank) * model.self_intersection(lambda)
            })
            .collect();
        pieces.push(ParabolicPiece {
            weight,
            ranks,
            degrees,
        });
    }
    let mut p = ParabolicSheaf::new(model.clone(), w.rank(), c1, T::zero(), pieces)?;
    let base = model.base();
    let a = p.weight_class();
    p.c2 = w.c2().clone() - base.intersect(&p.c1, &a)? - base.intersect(&a, &a)? / T::from_i64(2)
        + p.graded_correction();
    Ok(p)
}
