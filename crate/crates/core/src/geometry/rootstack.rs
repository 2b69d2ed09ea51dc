use std::collections::BTreeMap;
use std::fmt;

use super::surface::{check_dim, DivClass, SurfaceModel};
use crate::error::{Error, Result};
use crate::numeric::Scalar;

/// A divisor class on the root stack: `π*base + Σ_λ stacky[λ]·D̃_λ`, where
/// `r·D̃_λ = π*D_λ`. The stacky vector is indexed by branch position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StackyClass<T> {
    pub base: DivClass<T>,
    pub stacky: Vec<T>,
}

impl<T: Scalar> StackyClass<T> {
    pub fn new(base: DivClass<T>, stacky: Vec<T>) -> Self {
        Self { base, stacky }
    }

    pub fn zero(rho: usize, components: usize) -> Self {
        Self {
            base: DivClass::zero(rho),
            stacky: vec![T::zero(); components],
        }
    }

    /// `π*base`, no stacky part.
    pub fn pullback(base: DivClass<T>, components: usize) -> Self {
        Self {
            base,
            stacky: vec![T::zero(); components],
        }
    }

    /// The class `D̃_λ`.
    pub fn tilde(rho: usize, components: usize, component: usize) -> Self {
        let mut c = Self::zero(rho, components);
        c.stacky[component] = T::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.stacky.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            base: self.base.scale(c),
            stacky: self.stacky.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            base: &self.base + &other.base,
            stacky: self
                .stacky
                .iter()
                .zip(&other.stacky)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> fmt::Display for StackyClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.stacky.is_empty() {
            let parts: Vec<String> = self.stacky.iter().map(|c| c.to_string()).collect();
            write!(f, " + ~({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// One component of the inertia stack.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Untwisted,
    /// The μ_r-gerbe over `D_λ`, with `ζ_r^k` acting on the normal direction.
    Curve { component: usize, k: u32 },
    /// The points over `D_λ ∩ D_μ`, with `(ζ_r^{k1}, ζ_r^{k2})` acting on the
    /// two normal directions. `multiplicity` points share the same data.
    Point {
        first: usize,
        second: usize,
        k1: u32,
        k2: u32,
        multiplicity: u32,
    },
}

impl Sector {
    /// The normal-bundle character `k/r` of a curve sector, as `(k, r)`.
    pub fn normal_character(&self, r: u32) -> Option<(u32, u32)> {
        match self {
            Sector::Curve { k, .. } => Some((*k, r)),
            _ => None,
        }
    }

    /// Integration weight over the sector: 1 on the untwisted sector, `1/r`
    /// on a gerbe curve and `1/r²` per point.
    pub fn integration_weight<T: Scalar>(&self, r: u32) -> T {
        let r = T::from_u32(r);
        match self {
            Sector::Untwisted => T::one(),
            Sector::Curve { .. } => T::one() / r,
            Sector::Point { .. } => T::one() / (r.clone() * r),
        }
    }
}

/// The `r`-th root stack of a surface along a simple normal crossing divisor
/// `D = Σ D_λ`, together with its enumerated inertia sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootStackModel<T> {
    base: SurfaceModel<T>,
    r: u32,
    branch: Vec<(String, DivClass<T>)>,
    crossings: BTreeMap<(usize, usize), u32>,
    sectors: Vec<Sector>,
}

impl<T: Scalar> RootStackModel<T> {
    /// Builds the root stack. `crossings` overrides the number of transverse
    /// intersection points per unordered pair of component names; pairs not
    /// listed default to `D_λ·D_μ`, which must then be a nonnegative integer.
    pub fn new(
        base: SurfaceModel<T>,
        r: u32,
        branch: &[&str],
        crossings: &BTreeMap<(String, String), i64>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidRootOrder);
        }
        let mut components: Vec<(String, DivClass<T>)> = Vec::with_capacity(branch.len());
        for name in branch {
            if components.iter().any(|(n, _)| n == name) {
                return Err(Error::DuplicateComponent(name.to_string()));
            }
            components.push((name.to_string(), base.divisor(name)?.clone()));
        }
        let position = |name: &str| -> Result<usize> {
            components
                .iter()
                .position(|(n, _)| n == name)
                .ok_or_else(|| Error::UnknownDivisor(name.to_string()))
        };
        let mut overrides = BTreeMap::new();
        for ((a, b), &n) in crossings {
            let (i, j) = (position(a)?, position(b)?);
            if i == j {
                return Err(Error::InvalidArgument(format!(
                    "crossing of `{a}` with itself"
                )));
            }
            if n < 0 {
                return Err(Error::NegativeCrossing {
                    first: a.clone(),
                    second: b.clone(),
                    value: n.to_string(),
                });
            }
            overrides.insert((i.min(j), i.max(j)), n as u32);
        }
        let mut crossing_counts = BTreeMap::new();
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                let n = match overrides.get(&(i, j)) {
                    Some(&n) => n,
                    None => {
                        let dd = base.pair(&components[i].1, &components[j].1);
                        match dd.to_i64_exact() {
                            Some(v) if v >= 0 => v as u32,
                            _ => {
                                return Err(Error::NegativeCrossing {
                                    first: components[i].0.clone(),
                                    second: components[j].0.clone(),
                                    value: dd.to_string(),
                                })
                            }
                        }
                    }
                };
                crossing_counts.insert((i, j), n);
            }
        }
        let sectors = enumerate_sectors(r, components.len(), &crossing_counts);
        Ok(Self {
            base,
            r,
            branch: components,
            crossings: crossing_counts,
            sectors,
        })
    }

    pub fn base(&self) -> &SurfaceModel<T> {
        &self.base
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn rho(&self) -> usize {
        self.base.rho()
    }

    pub fn components(&self) -> usize {
        self.branch.len()
    }

    pub fn components_iter(&self) -> std::ops::Range<usize> {
        0..self.branch.len()
    }

    pub fn component_name(&self, i: usize) -> &str {
        &self.branch[i].0
    }

    pub fn component_class(&self, i: usize) -> &DivClass<T> {
        &self.branch[i].1
    }

    pub fn component_index(&self, name: &str) -> Result<usize> {
        self.branch
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::UnknownDivisor(name.to_string()))
    }

    /// Number of transverse points of `D_i ∩ D_j` (zero for `i == j`).
    pub fn crossing(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 0;
        }
        self.crossings.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    /// Crossing pairs `(i, j)`, `i < j`, with at least one intersection point.
    pub fn crossing_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.crossings
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(&pair, _)| pair)
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    /// The class `D̃_λ`.
    pub fn tilde(&self, component: usize) -> StackyClass<T> {
        StackyClass::tilde(self.rho(), self.components(), component)
    }

    pub fn pullback(&self, base: &DivClass<T>) -> StackyClass<T> {
        StackyClass::pullback(base.clone(), self.components())
    }

    pub fn zero_class(&self) -> StackyClass<T> {
        StackyClass::zero(self.rho(), self.components())
    }

    /// Intersection pairing on the root stack: the bilinear extension of the
    /// base form with `D̃_λ·D̃_μ = D_λ·D_μ / r²` and `D̃_λ·π*c = D_λ·c / r`.
    pub fn stacky_intersect(&self, a: &StackyClass<T>, b: &StackyClass<T>) -> Result<T> {
        self.check_class(a)?;
        self.check_class(b)?;
        let r = T::from_u32(self.r);
        let mut total = self.base.pair(&a.base, &b.base);
        for (i, (_, d)) in self.branch.iter().enumerate() {
            if !a.stacky[i].is_zero() {
                total = total + a.stacky[i].clone() * self.base.pair(d, &b.base) / r.clone();
            }
            if !b.stacky[i].is_zero() {
                total = total + b.stacky[i].clone() * self.base.pair(d, &a.base) / r.clone();
            }
        }
        for (i, (_, di)) in self.branch.iter().enumerate() {
            if a.stacky[i].is_zero() {
                continue;
            }
            for (j, (_, dj)) in self.branch.iter().enumerate() {
                if b.stacky[j].is_zero() {
                    continue;
                }
                total = total
                    + a.stacky[i].clone() * b.stacky[j].clone() * self.base.pair(di, dj)
                        / (r.clone() * r.clone());
            }
        }
        Ok(total)
    }

    /// Numerical image of a stacky class on the coarse surface.
    pub fn coarse_class(&self, a: &StackyClass<T>) -> DivClass<T> {
        let r = T::from_u32(self.r);
        self.branch
            .iter()
            .zip(&a.stacky)
            .fold(a.base.clone(), |acc, ((_, d), c)| {
                &acc + &d.scale(&(c.clone() / r.clone()))
            })
    }

    pub fn check_class(&self, a: &StackyClass<T>) -> Result<()> {
        check_dim(self.rho(), a.base.dim())?;
        check_dim(self.components(), a.stacky.len())
    }

    /// `D_λ²`
    pub fn self_intersection(&self, component: usize) -> T {
        let d = &self.branch[component].1;
        self.base.pair(d, d)
    }

    /// Total number of crossing points on `D_λ`.
    pub fn crossings_on(&self, component: usize) -> u32 {
        (0..self.components()).map(|j| self.crossing(component, j)).sum()
    }

    /// Degree of the tangent bundle of the gerbe `𝒟_λ`, measured on the coarse
    /// curve: `e(D_λ) - c_λ(1 - 1/r)` where `c_λ` counts the crossing points on
    /// `D_λ`, each of which carries an extra μ_r stabilizer inside `𝒟_λ`.
    pub fn gerbe_tangent_degree(&self, component: usize) -> T {
        let d = &self.branch[component].1;
        let e = -self.base.pair(self.base.k(), d) - self.base.pair(d, d);
        let r = T::from_u32(self.r);
        let c = T::from_u32(self.crossings_on(component));
        e - c * (T::one() - T::one() / r)
    }

    /// Degree of the normal bundle `O(D̃_λ)|_{𝒟_λ}` on the coarse curve: `D_λ²/r`.
    pub fn gerbe_normal_degree(&self, component: usize) -> T {
        self.self_intersection(component) / T::from_u32(self.r)
    }

    /// Canonical class `K_𝒳 = π*K + (r-1)·Σ D̃_λ`.
    pub fn canonical_class(&self) -> StackyClass<T> {
        let rm1 = T::from_u32(self.r - 1);
        StackyClass::new(self.base.k().clone(), vec![rm1; self.components()])
    }

    /// Orbifold Euler number `∫c₂(T_𝒳)`:
    /// `e(X) - Σ_λ (1 - 1/r)·e(D_λ°) - n·(1 - 1/r²)` with `D_λ°` the component
    /// minus its crossing points and `n` the number of crossing points.
    pub fn orbifold_euler_number(&self) -> Result<T> {
        let e = self
            .base
            .euler_number()
            .cloned()
            .ok_or(Error::MissingEulerNumber)?;
        let r = T::from_u32(self.r);
        let one = T::one();
        let mut total = e;
        for i in 0..self.components() {
            let d = &self.branch[i].1;
            let open = -self.base.pair(self.base.k(), d) - self.base.pair(d, d)
                - T::from_u32(self.crossings_on(i));
            total = total - (one.clone() - one.clone() / r.clone()) * open;
        }
        let n: u32 = self.crossings.values().sum();
        total = total - T::from_u32(n) * (one.clone() - one / (r.clone() * r));
        Ok(total)
    }
}

fn enumerate_sectors(
    r: u32,
    components: usize,
    crossings: &BTreeMap<(usize, usize), u32>,
) -> Vec<Sector> {
    let mut sectors = vec![Sector::Untwisted];
    for component in 0..components {
        for k in 1..r {
            sectors.push(Sector::Curve { component, k });
        }
    }
    for (&(first, second), &multiplicity) in crossings {
        if multiplicity == 0 {
            continue;
        }
        for k1 in 1..r {
            for k2 in 1..r {
                sectors.push(Sector::Point {
                    first,
                    second,
                    k1,
                    k2,
                    multiplicity,
                });
            }
        }
    }
    sectors
}

/// `stacky_intersect(RS, a, b)`
pub fn stacky_intersect<T: Scalar>(
    rs: &RootStackModel<T>,
    a: &StackyClass<T>,
    b: &StackyClass<T>,
) -> Result<T> {
    rs.stacky_intersect(a, b)
}
