use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{DivClass, StackyClass, SurfaceModel};
use crate::numeric::Scalar;

use super::Verdict;

/// Scalar inputs of the characteristic-p bounds. Intersection numbers are
/// taken as given, so `d > 2` data can be supplied directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsInput<T> {
    pub p: u64,
    pub rk: u32,
    pub rk_xi: T,
    /// `H^d`
    pub hd: T,
    /// `μ_Ξ(A ⊗ L^k)` for `k = 1..m-1`.
    pub slope_terms: Vec<T>,
    pub l_max: Option<T>,
    pub l_min: Option<T>,
    /// `μ_Ξ(E)`
    pub mu: Option<T>,
    pub mu_max: Option<T>,
    pub mu_min: Option<T>,
    /// `∫Δ(E)·H^{d-2}`
    pub delta_hd2: T,
}

impl<T: Scalar> BoundsInput<T> {
    pub fn new(p: u64, rk: u32, rk_xi: T, hd: T, delta_hd2: T) -> Self {
        Self {
            p,
            rk,
            rk_xi,
            hd,
            slope_terms: Vec::new(),
            l_max: None,
            l_min: None,
            mu: None,
            mu_max: None,
            mu_min: None,
            delta_hd2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p < 2 {
            return Err(Error::InvalidArgument(format!("p = {} is below 2", self.p)));
        }
        if self.rk == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        if !self.hd.is_positive() {
            return Err(Error::InvalidArgument(format!("H^d = {} is not positive", self.hd)));
        }
        Ok(())
    }

    fn max_slope_term(&self) -> Result<T> {
        self.slope_terms
            .iter()
            .max()
            .cloned()
            .ok_or(Error::EmptySlopeTerms)
    }
}

/// `β_rk = (rk(rk-1)·max_k μ_Ξ(A⊗L^k)/(p-1))²`, zero in rank one.
pub fn beta<T: Scalar>(b: &BoundsInput<T>) -> Result<T> {
    b.validate()?;
    if b.rk == 1 {
        return Ok(T::zero());
    }
    let rk = T::from_u32(b.rk);
    let p1 = T::from_bigint(&(BigInt::from(b.p) - 1)).ok_or_else(|| Error::Overflow(b.p.to_string()))?;
    let x = rk.clone() * (rk - T::one()) * b.max_slope_term()? / p1;
    Ok(x.clone() * x)
}

/// `(rk-1)/(p-1)·max_k μ_Ξ(A⊗L^k)`, the bound on `α_Ξ(E)`.
pub fn alpha_bound<T: Scalar>(b: &BoundsInput<T>) -> Result<T> {
    b.validate()?;
    if b.rk == 1 {
        return Ok(T::zero());
    }
    let p1 = T::from_bigint(&(BigInt::from(b.p) - 1)).ok_or_else(|| Error::Overflow(b.p.to_string()))?;
    Ok((T::from_u32(b.rk) - T::one()) * b.max_slope_term()? / p1)
}

/// Residual `H^d·ΔH^{d-2} + rk(Ξ)²·β`.
pub fn thm_a3_check<T: Scalar>(b: &BoundsInput<T>) -> Result<Verdict<T>> {
    let residual = b.hd.clone() * b.delta_hd2.clone() + b.rk_xi.clone() * b.rk_xi.clone() * beta(b)?;
    Ok(Verdict::from_residual(residual))
}

/// The two general inequalities, with residuals
/// `H^d·ΔH^{d-2} + rk²·rk(Ξ)²·(L_max - μ)(μ - L_min)` and the same with
/// `μ_max`, `μ_min` in place of `L_max`, `L_min`.
pub fn thm_a5_checks<T: Scalar>(b: &BoundsInput<T>) -> Result<(Verdict<T>, Verdict<T>)> {
    b.validate()?;
    let mu = b.mu.clone().ok_or(Error::MissingField("mu"))?;
    let l_max = b.l_max.clone().ok_or(Error::MissingField("Lmax"))?;
    let l_min = b.l_min.clone().ok_or(Error::MissingField("Lmin"))?;
    let mu_max = b.mu_max.clone().ok_or(Error::MissingField("mumax"))?;
    let mu_min = b.mu_min.clone().ok_or(Error::MissingField("mumin"))?;
    let rk = T::from_u32(b.rk);
    let scale = rk.clone() * rk * b.rk_xi.clone() * b.rk_xi.clone();
    let base = b.hd.clone() * b.delta_hd2.clone();
    let first = base.clone() + scale.clone() * (l_max - mu.clone()) * (mu.clone() - l_min);
    let second = base + scale * (mu_max - mu.clone()) * (mu - mu_min);
    Ok((Verdict::from_residual(first), Verdict::from_residual(second)))
}

/// `ξ = c₁(G′)/(rk(Ξ)·rk G′) - c₁(G)/(rk(Ξ)·rk G)`
pub fn xi_class<T: Scalar>(
    g_prime: (u32, &StackyClass<T>),
    g: (u32, &StackyClass<T>),
    rk_xi: &T,
) -> Result<StackyClass<T>> {
    if g_prime.0 == 0 || g.0 == 0 {
        return Err(Error::InvalidArgument("ranks must be positive".into()));
    }
    let a = g_prime.1.scale(&(T::one() / (rk_xi.clone() * T::from_u32(g_prime.0))));
    let b = g.1.scale(&(T::one() / (rk_xi.clone() * T::from_u32(g.0))));
    Ok(a.sub(&b))
}

/// `D ∈ K⁺` on a surface: `D² > 0` and `D·H ≥ 0`.
pub fn kplus_membership<T: Scalar>(s: &SurfaceModel<T>, d: &DivClass<T>, h: &DivClass<T>) -> Result<bool> {
    Ok(s.intersect(d, d)?.is_positive() && !s.intersect(d, h)?.is_negative())
}

/// Least integer `m` with
/// `m > ⌊(rk-1)/rk·ΔH^{d-2} + 1/(H^d·rk(rk-1)) + (rk-1)β/(H^d·rk)⌋`.
pub fn restriction_threshold<T: Scalar>(b: &BoundsInput<T>) -> Result<BigInt> {
    b.validate()?;
    if b.rk < 2 {
        return Err(Error::RankOne);
    }
    let rk = T::from_u32(b.rk);
    let rk1 = rk.clone() - T::one();
    let beta = if b.slope_terms.is_empty() { T::zero() } else { beta(b)? };
    let x = rk1.clone() / rk.clone() * b.delta_hd2.clone()
        + T::one() / (b.hd.clone() * rk.clone() * rk1.clone())
        + rk1 * beta / (b.hd.clone() * rk);
    Ok(x.floor_int() + BigInt::one())
}

/// Smallest characteristic for which the Higgs-sheaf estimate
/// `ΔH^{d-2} ≥ -(rk·rk(Ξ))²(rk-1)²(H^{d-1}A/H^d + M)² / (H^d (q-1)²)`
/// rules out the given negative discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiggsBound {
    /// Least integer `q ≥ max(rk, 2)` making the estimate contradict `Δ`.
    pub min_q: BigInt,
    /// Least prime `≥ min_q`.
    pub min_prime: BigInt,
    /// `Δ ≥ 0` already; every `q ≥ rk` works and `min_q = rk`.
    pub already_nonnegative: bool,
}

pub fn higgs_min_char<T: Scalar>(
    rk: u32,
    rk_xi: &T,
    hd: &T,
    h_a_d1: &T,
    m: &T,
    delta_hd2: &T,
) -> Result<HiggsBound> {
    if rk == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    if m.is_negative() {
        return Err(Error::InvalidArgument(format!("M = {m} is negative")));
    }
    if !hd.is_positive() {
        return Err(Error::InvalidArgument(format!("H^d = {hd} is not positive")));
    }
    let floor_q = BigInt::from(rk.max(2));
    if !delta_hd2.is_negative() {
        let q = BigInt::from(rk);
        return Ok(HiggsBound {
            min_prime: next_prime(&q.clone().max(BigInt::from(2))),
            min_q: q,
            already_nonnegative: true,
        });
    }
    let rkt = T::from_u32(rk);
    let slope = h_a_d1.clone() / hd.clone() + m.clone();
    let coeff = (rkt.clone() * rk_xi.clone()).pow2() * (rkt - T::one()).pow2() * slope.pow2() / hd.clone();
    // need (q-1)² > coeff/|Δ|
    let ratio = coeff / delta_hd2.abs();
    let s = if ratio.is_negative() {
        BigInt::zero()
    } else {
        ratio.floor_int().sqrt() + BigInt::one()
    };
    let q = (s + BigInt::one()).max(floor_q);
    Ok(HiggsBound {
        min_prime: next_prime(&q),
        min_q: q,
        already_nonnegative: false,
    })
}

trait Square {
    fn pow2(self) -> Self;
}

impl<T: Scalar> Square for T {
    fn pow2(self) -> Self {
        self.clone() * self
    }
}

fn next_prime(n: &BigInt) -> BigInt {
    let mut c = n.clone().max(BigInt::from(2));
    loop {
        let mut d = BigInt::from(2);
        let mut prime = true;
        while &d * &d <= c {
            if (&c % &d).is_zero() {
                prime = false;
                break;
            }
            d += 1;
        }
        if prime {
            return c;
        }
        c += 1;
    }
}

/// Residual `3·e(X) - K²`; the inequality is a theorem when `K` is nef.
pub fn miyaoka_yau_check<T: Scalar>(s: &SurfaceModel<T>) -> Result<Verdict<T>> {
    let e = s.euler_number().cloned().ok_or(Error::MissingEulerNumber)?;
    let k2 = s.intersect(s.k(), s.k())?;
    Ok(Verdict::from_residual(T::from_i64(3) * e - k2))
}
