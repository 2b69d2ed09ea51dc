use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::numeric::Scalar;

/// A class in `Num(X) ⊗ Q`, written in the basis of its surface model.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivClass<T>(pub Vec<T>);

impl<T: Scalar> DivClass<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    pub fn zero(rho: usize) -> Self {
        Self(vec![T::zero(); rho])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self(self.0.iter().map(|x| x.clone() * c.clone()).collect())
    }
}

impl<T: Scalar> Add for &DivClass<T> {
    type Output = DivClass<T>;

    fn add(self, rhs: Self) -> DivClass<T> {
        assert_eq!(self.dim(), rhs.dim(), "class dimension mismatch");
        DivClass(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &DivClass<T> {
    type Output = DivClass<T>;

    fn sub(self, rhs: Self) -> DivClass<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &DivClass<T> {
    type Output = DivClass<T>;

    fn neg(self) -> DivClass<T> {
        DivClass(self.0.iter().map(|a| -a.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for DivClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Numerical model of a smooth projective surface: the intersection form on
/// `Num(X)`, a polarization `H`, the canonical class `K`, the topological Euler
/// number (when known) and a table of named divisor classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel<T> {
    gram: Vec<Vec<T>>,
    h: DivClass<T>,
    k: DivClass<T>,
    euler_number: Option<T>,
    divisors: BTreeMap<String, DivClass<T>>,
}

impl<T: Scalar> SurfaceModel<T> {
    /// Validates and builds a model. The form must be symmetric of signature
    /// `(1, ρ-1)` and `H·H > 0`.
    pub fn new(
        gram: Vec<Vec<T>>,
        h: DivClass<T>,
        k: DivClass<T>,
        euler_number: Option<T>,
        divisors: BTreeMap<String, DivClass<T>>,
    ) -> Result<Self> {
        let rho = gram.len();
        if rho == 0 {
            return Err(Error::InvalidArgument("Picard number must be positive".into()));
        }
        for row in &gram {
            check_dim(rho, row.len())?;
        }
        check_dim(rho, h.dim())?;
        check_dim(rho, k.dim())?;
        for class in divisors.values() {
            check_dim(rho, class.dim())?;
        }
        for i in 0..rho {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        let sig = inertia(&gram);
        if sig.positive != 1 || sig.negative != rho - 1 {
            return Err(Error::BadSignature {
                positive: sig.positive,
                negative: sig.negative,
                null: sig.null,
                expected_negative: rho - 1,
            });
        }
        let model = Self {
            gram,
            h,
            k,
            euler_number,
            divisors,
        };
        let hh = model.pair(&model.h, &model.h);
        if !hh.is_positive() {
            return Err(Error::NotAmpleSquare(hh.to_string()));
        }
        Ok(model)
    }

    pub fn rho(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<T>] {
        &self.gram
    }

    pub fn h(&self) -> &DivClass<T> {
        &self.h
    }

    pub fn k(&self) -> &DivClass<T> {
        &self.k
    }

    pub fn euler_number(&self) -> Option<&T> {
        self.euler_number.as_ref()
    }

    pub fn divisors(&self) -> &BTreeMap<String, DivClass<T>> {
        &self.divisors
    }

    /// Looks up a named class; `H` and `K` resolve to the polarization and
    /// canonical class unless shadowed by an explicit entry.
    pub fn divisor(&self, name: &str) -> Result<&DivClass<T>> {
        match (self.divisors.get(name), name) {
            (Some(class), _) => Ok(class),
            (None, "H") => Ok(&self.h),
            (None, "K") => Ok(&self.k),
            (None, _) => Err(Error::UnknownDivisor(name.to_string())),
        }
    }

    /// `aᵀ · gram · b`
    pub fn intersect(&self, a: &DivClass<T>, b: &DivClass<T>) -> Result<T> {
        check_dim(self.rho(), a.dim())?;
        check_dim(self.rho(), b.dim())?;
        Ok(self.pair(a, b))
    }

    pub(crate) fn pair(&self, a: &DivClass<T>, b: &DivClass<T>) -> T {
        let mut acc = T::zero();
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                acc = acc + ai.clone() * self.gram[i][j].clone() * bj.clone();
            }
        }
        acc
    }

    /// Topological Euler number of a smooth curve in the class `d`, by
    /// adjunction: `2 - 2g = -K·D - D²`.
    pub fn curve_euler_number(&self, d: &DivClass<T>) -> Result<T> {
        Ok(-self.intersect(&self.k, d)? - self.intersect(d, d)?)
    }

    /// Holomorphic Euler characteristic `χ(O_X) = (K² + e)/12` (Noether).
    pub fn chi_structure_sheaf(&self) -> Result<T> {
        let e = self.euler_number.clone().ok_or(Error::MissingEulerNumber)?;
        Ok((self.pair(&self.k, &self.k) + e) / T::from_i64(12))
    }
}

/// `intersect(S, a, b)`
pub fn intersect<T: Scalar>(s: &SurfaceModel<T>, a: &DivClass<T>, b: &DivClass<T>) -> Result<T> {
    s.intersect(a, b)
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

/// Sylvester inertia of a symmetric matrix, by symmetric Gaussian elimination.
pub fn inertia<T: Scalar>(gram: &[Vec<T>]) -> Inertia {
    let mut a: Vec<Vec<T>> = gram.to_vec();
    let n = a.len();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        null: 0,
    };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            a.swap(k, p);
            for row in a.iter_mut() {
                row.swap(k, p);
            }
        } else if let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            // Zero diagonal with a nonzero off-diagonal entry: the congruence
            // e_i ↦ e_i + e_j makes a_ii = 2·a_ij nonzero.
            for c in 0..n {
                let v = a[j][c].clone();
                a[i][c] = a[i][c].clone() + v;
            }
            for row in a.iter_mut() {
                let v = row[j].clone();
                row[i] = row[i].clone() + v;
            }
            a.swap(k, i);
            for row in a.iter_mut() {
                row.swap(k, i);
            }
        } else {
            out.null += n - k;
            break;
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for i in k + 1..n {
            let factor = a[i][k].clone() / pivot.clone();
            if factor.is_zero() {
                continue;
            }
            for c in k..n {
                let v = factor.clone() * a[k][c].clone();
                a[i][c] = a[i][c].clone() - v;
            }
        }
        for i in k + 1..n {
            a[k][i] = T::zero();
        }
        k += 1;
    }
    out
}
