//! Dense univariate polynomials over an exact field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;

/// Polynomial with coefficients stored lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let d = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for shift in (0..quot.len()).rev() {
            let c = rem[shift + d].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - c.clone() * b.clone();
            }
            quot[shift] = c;
        }
        rem.truncate(d);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`,
    /// `g` monic (or zero when both inputs vanish).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(T::one()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(T::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = T::one() / lead;
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Lagrange interpolation through `(x_i, y_i)`; the `x_i` must be distinct.
    pub fn interpolate(points: &[(T, T)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::constant(T::one());
            let mut denom = T::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &Self::new(vec![-xj.clone(), T::one()]);
                denom = denom * (xi.clone() - xj.clone());
            }
            acc = &acc + &basis.scale(&(yi.clone() / denom));
        }
        acc
    }

    /// Asymptotic comparison: `Less` iff `self(m) < other(m)` for all `m ≫ 0`.
    pub fn compare_lex(&self, other: &Self) -> Ordering {
        let diff = self - other;
        match diff.leading() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

/// Free-function form of [`Poly::compare_lex`].
pub fn poly_compare_lex<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> Ordering {
    a.compare_lex(b)
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RatPoly};

    fn p(cs: &[i64]) -> RatPoly {
        Poly::new(cs.iter().map(|&c| Rat::from_i64(c)).collect())
    }

    #[test]
    fn compare_lex_examples() {
        // m² vs m² + 1
        assert_eq!(p(&[0, 0, 1]).compare_lex(&p(&[1, 0, 1])), Ordering::Less);
        // m² + 5m vs m² + 4m + 100
        assert_eq!(
            p(&[0, 5, 1]).compare_lex(&p(&[100, 4, 1])),
            Ordering::Greater
        );
        let q = p(&[3, -2, 7]);
        assert_eq!(q.compare_lex(&q), Ordering::Equal);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, 0, -3, 2, 1]);
        let b = p(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert!(a.div_rem(&Poly::zero()).is_none());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-1, 1]); // x - 1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn interpolation_recovers_quadratic() {
        let q = RatPoly::new(vec![Rat::from_i64(1), Rat::from_frac(3, 2), Rat::from_frac(1, 2)]);
        let pts: Vec<_> = (0..3)
            .map(|m| {
                let x = Rat::from_i64(m);
                let y = q.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(RatPoly::interpolate(&pts), q);
    }

    #[test]
    fn display_is_readable() {
        let q = RatPoly::new(vec![Rat::from_i64(1), Rat::from_frac(-3, 2), Rat::from_i64(1)]);
        assert_eq!(q.to_string(), "m^2 - 3/2*m + 1");
    }
}
