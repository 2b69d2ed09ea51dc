use crate::error::{Error, Result};
use crate::numeric::Scalar;

use super::{BoundsInput, Verdict};

/// Harder-Narasimhan profile: ranks and slopes of the graded pieces, slopes
/// strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HNPolygon<T> {
    blocks: Vec<(u32, T)>,
}

impl<T: Scalar> HNPolygon<T> {
    pub fn new(blocks: Vec<(u32, T)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPolygon("no blocks".into()));
        }
        if blocks.iter().any(|(r, _)| *r == 0) {
            return Err(Error::InvalidPolygon("block ranks must be positive".into()));
        }
        if blocks.windows(2).any(|w| w[0].1 <= w[1].1) {
            return Err(Error::InvalidPolygon("slopes must be strictly decreasing".into()));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[(u32, T)] {
        &self.blocks
    }

    pub fn total_rank(&self) -> u32 {
        self.blocks.iter().map(|(r, _)| r).sum()
    }

    /// `Σ_{i<j} r_i r_j (μ_i - μ_j)²` through `rk·Σ r_i μ_i² - (Σ r_i μ_i)²`.
    pub fn hn_sum(&self) -> T {
        let rk = T::from_u32(self.total_rank());
        let (mut first, mut second) = (T::zero(), T::zero());
        for (r, mu) in &self.blocks {
            let r = T::from_u32(*r);
            first = first + r.clone() * mu.clone();
            second = second + r * mu.clone() * mu.clone();
        }
        rk * second - first.clone() * first
    }

    /// The pairwise double sum, evaluated term by term.
    pub fn hn_sum_pairwise(&self) -> T {
        let mut total = T::zero();
        for (i, (ri, mi)) in self.blocks.iter().enumerate() {
            for (rj, mj) in &self.blocks[i + 1..] {
                let d = mi.clone() - mj.clone();
                total = total + T::from_u32(*ri) * T::from_u32(*rj) * d.clone() * d;
            }
        }
        total
    }
}

pub fn hn_sum<T: Scalar>(poly: &HNPolygon<T>) -> T {
    poly.hn_sum()
}

/// Restriction inequality for a Harder-Narasimhan profile:
/// `Σ r_i r_j (μ_i - μ_j)² ≤ H^d·Δ + 2·rk²·rk(Ξ)²·(L_max - μ)(μ - L_min)`.
/// The residual is right side minus left side.
pub fn thm_a1_check<T: Scalar>(poly: &HNPolygon<T>, b: &BoundsInput<T>) -> Result<Verdict<T>> {
    b.validate()?;
    if poly.total_rank() != b.rk {
        return Err(Error::InvalidPolygon(format!(
            "polygon has rank {}, sheaf has rank {}",
            poly.total_rank(),
            b.rk
        )));
    }
    let l_max = b.l_max.clone().ok_or(Error::MissingField("Lmax"))?;
    let l_min = b.l_min.clone().ok_or(Error::MissingField("Lmin"))?;
    let mu = b.mu.clone().ok_or(Error::MissingField("mu"))?;
    let rk = T::from_u32(b.rk);
    let rhs = b.hd.clone() * b.delta_hd2.clone()
        + T::from_i64(2) * rk.clone() * rk * b.rk_xi.clone() * b.rk_xi.clone()
            * (l_max - mu.clone())
            * (mu - l_min);
    Ok(Verdict::from_residual(rhs - poly.hn_sum()))
}
