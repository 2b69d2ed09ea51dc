//! Elements of cyclotomic fields `Q(ζ_n)` in the power basis of `ζ_n`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use super::{Poly, Scalar};
use crate::error::{Error, Result};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().expect("cache poisoned").get(&n) {
        return Arc::clone(found);
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n. Each divisor is monic,
    // so the division stays in the integers.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_monic_division(&num, &cyclotomic_polynomial(d));
    }
    let phi = Arc::new(num);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(n, Arc::clone(&phi));
    phi
}

fn exact_monic_division(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd];
        quot[shift] = c;
        for (i, b) in den.iter().enumerate() {
            rem[shift + i] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Euler's totient, the degree of `Q(ζ_n)` over `Q`.
pub fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// An element of `Q(ζ_n)` with coefficients in `T`.
///
/// Stored reduced modulo `Φ_n`, so the coefficient vector always has length
/// `φ(n)` and two elements of the same order are equal iff their vectors are.
/// Binary operations on different orders promote both sides to the lcm.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    order: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> Cyclotomic<T> {
    /// Reduces `Σ c_i ζ_n^i` for an arbitrary-length coefficient list.
    pub fn from_power_sum(order: u32, coeffs: &[T]) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let n = order as usize;
        let mut folded = vec![T::zero(); n];
        for (i, c) in coeffs.iter().enumerate() {
            folded[i % n] = folded[i % n].clone() + c.clone();
        }
        Self::reduce(order, folded)
    }

    fn reduce(order: u32, coeffs: Vec<T>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let modulus = Poly::new(phi.iter().map(|&c| T::from_i64(c)).collect());
        let (_, rem) = Poly::new(coeffs)
            .div_rem(&modulus)
            .expect("cyclotomic polynomial is nonzero");
        let mut coeffs = rem.into_coeffs();
        coeffs.resize(phi.len() - 1, T::zero());
        Self { order, coeffs }
    }

    /// `ζ_n^k`, with `k` taken modulo `n`.
    pub fn root(order: u32, k: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = k.rem_euclid(i64::from(order)) as usize;
        let mut coeffs = vec![T::zero(); e + 1];
        coeffs[e] = T::one();
        Self::from_power_sum(order, &coeffs)
    }

    /// Embeds a scalar as an element of `Q(ζ_1) = Q`.
    pub fn from_scalar(c: T) -> Self {
        Self {
            order: 1,
            coeffs: vec![c],
        }
    }

    pub fn zero() -> Self {
        Self::from_scalar(T::zero())
    }

    pub fn one() -> Self {
        Self::from_scalar(T::one())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-expresses the element in `Q(ζ_m)`; `m` must be a multiple of the order.
    pub fn promote(&self, order: u32) -> Self {
        assert!(
            order.is_multiple_of(self.order),
            "cannot embed Q(ζ_{}) into Q(ζ_{order})",
            self.order
        );
        if order == self.order {
            return self.clone();
        }
        let step = (order / self.order) as usize;
        let mut spread = vec![T::zero(); self.coeffs.len() * step];
        for (i, c) in self.coeffs.iter().enumerate() {
            spread[i * step] = c.clone();
        }
        Self::from_power_sum(order, &spread)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let order = self.order.lcm(&other.order);
        (self.promote(order), other.promote(order))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_polynomial(self.order);
        let modulus = Poly::new(phi.iter().map(|&c| T::from_i64(c)).collect());
        let (g, s, _) = Poly::new(self.coeffs.clone()).ext_gcd(&modulus);
        // Φ_n is irreducible, so the gcd with a nonzero reduced element is 1.
        debug_assert_eq!(g.degree(), Some(0));
        Some(Self::reduce(self.order, s.into_coeffs()))
    }

    /// The rational value, if the element lies in the prime field.
    pub fn to_scalar(&self) -> Result<T> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }
}

/// `ζ_n^k`
pub fn cyc_root<T: Scalar>(n: u32, k: i64) -> Cyclotomic<T> {
    Cyclotomic::root(n, k)
}

/// Collapses a cyclotomic value known to be rational.
pub fn cyc_to_rat<T: Scalar>(z: &Cyclotomic<T>) -> Result<T> {
    z.to_scalar()
}

impl<T: Scalar> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl<T: Scalar> Eq for Cyclotomic<T> {}

impl<T: Scalar> Add for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn add(self, rhs: Self) -> Cyclotomic<T> {
        let (a, b) = self.aligned(rhs);
        Cyclotomic {
            order: a.order,
            coeffs: a
                .coeffs
                .into_iter()
                .zip(b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn sub(self, rhs: Self) -> Cyclotomic<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn mul(self, rhs: Self) -> Cyclotomic<T> {
        let (a, b) = self.aligned(rhs);
        let mut prod = vec![T::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].clone() + x.clone() * y.clone();
            }
        }
        Cyclotomic::from_power_sum(a.order, &prod)
    }
}

impl<T: Scalar> std::iter::Sum for Cyclotomic<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl<T: Scalar> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*z{}", self.order),
                _ => format!("({c})*z{}^{i}", self.order),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyc, Rat};

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn small_roots() {
        assert_eq!(cyc_root::<Rat>(1, 0), Cyc::one());
        assert_eq!(cyc_root::<Rat>(2, 1), Cyc::from_scalar(Rat::from_i64(-1)));
        let s = &cyc_root::<Rat>(3, 1) + &cyc_root(3, 2);
        assert_eq!(s, Cyc::from_scalar(Rat::from_i64(-1)));
    }

    #[test]
    fn nth_power_is_one() {
        for n in 1..=12u32 {
            let z = cyc_root::<Rat>(n, 1);
            let mut acc = Cyc::one();
            for _ in 0..n {
                acc = &acc * &z;
            }
            assert_eq!(acc, Cyc::one(), "order {n}");
            assert_eq!(cyc_root::<Rat>(n, -1), cyc_root(n, i64::from(n) - 1));
        }
    }

    #[test]
    fn to_rat_detects_irrational() {
        let z2 = &cyc_root::<Rat>(2, 1) + &Cyc::one();
        assert_eq!(cyc_to_rat(&z2).unwrap(), Rat::from_i64(0));
        let z3 = &(&cyc_root::<Rat>(3, 1) + &cyc_root(3, 2)) + &Cyc::one();
        assert_eq!(cyc_to_rat(&z3).unwrap(), Rat::from_i64(0));
        assert!(matches!(
            cyc_to_rat(&cyc_root::<Rat>(5, 1)),
            Err(Error::NotRational(_))
        ));
    }

    #[test]
    fn mixed_orders_promote_to_lcm() {
        // ζ_4 · ζ_6 = ζ_12^{3+2}
        let p = &cyc_root::<Rat>(4, 1) * &cyc_root(6, 1);
        assert_eq!(p.order(), 12);
        assert_eq!(p, cyc_root(12, 5));
        // ζ_6^3 = -1 regardless of how it is written
        assert_eq!(cyc_root::<Rat>(6, 3), Cyc::from_scalar(Rat::from_i64(-1)));
    }

    #[test]
    fn inverse_of_one_minus_root() {
        // 1/(1 - ζ_2) = 1/2
        let x = &Cyc::one() - &cyc_root::<Rat>(2, 1);
        assert_eq!(x.inv().unwrap(), Cyc::from_scalar(Rat::from_frac(1, 2)));
        let y = &Cyc::one() - &cyc_root::<Rat>(7, 3);
        assert_eq!(&y * &y.inv().unwrap(), Cyc::one());
        assert!(Cyc::zero().inv().is_none());
    }

    #[test]
    fn fixed_width_scalars_work_too() {
        use num_rational::Ratio;
        let z = cyc_root::<Ratio<i64>>(5, 2);
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Cyclotomic::one());
    }
}
