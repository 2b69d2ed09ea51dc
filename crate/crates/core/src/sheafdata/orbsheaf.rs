use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::{RootStackModel, Sector, StackyClass};
use crate::numeric::Scalar;

/// One isotypic piece of the restriction of a sheaf to a gerbe curve `𝒟_λ`.
///
/// `degree` is the degree of the piece measured on the coarse curve `D_λ`, i.e.
/// `r·∫_{𝒟_λ} c₁`. For `O(aD̃)` it is `a·D_λ²/r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigenPiece<T> {
    pub rank: u32,
    pub degree: T,
}

impl<T: Scalar> EigenPiece<T> {
    pub fn new(rank: u32, degree: T) -> Self {
        Self { rank, degree }
    }

    pub fn zero() -> Self {
        Self::new(0, T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.degree.is_zero()
    }
}

/// Eigendecomposition of a sheaf restricted to one inertia sector.
///
/// Entry `f` of each list is the piece on which the sector generator acts by
/// `exp(2πi f/r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectorRestriction<T> {
    Untwisted { rank: u32 },
    Curve { pieces: Vec<EigenPiece<T>> },
    Point { ranks: Vec<u32> },
}

/// How characters transform under Frobenius pullback.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CharacterRule {
    /// `f ↦ {pⁿ f}`: the pulled-back representation of a tame stabilizer.
    #[default]
    Multiply,
    /// Characters unchanged, as the Frobenius argument is sometimes written.
    Fixed,
}

/// Numerical invariants of a torsion-free sheaf on a root stack.
///
/// Sector data is stored once per branch component as a μ_r-representation:
/// `curve[λ][j]` is the part of `E|_{𝒟_λ}` on which the stabilizer acts by
/// `ζ_r^j`, and `points[(λ, μ)][j₁][j₂]` is the eigenrank table at the points
/// of `D_λ ∩ D_μ`. Every twisted sector view is derived from these.
#[derive(Clone, Debug)]
pub struct OrbSheaf<T> {
    model: Arc<RootStackModel<T>>,
    rank: u32,
    c1: StackyClass<T>,
    c2: T,
    curve: Vec<Vec<EigenPiece<T>>>,
    points: BTreeMap<(usize, usize), Vec<Vec<u32>>>,
}

impl<T: Scalar> PartialEq for OrbSheaf<T> {
    fn eq(&self, other: &Self) -> bool {
        same_model(&self.model, &other.model)
            && self.rank == other.rank
            && self.c1 == other.c1
            && self.c2 == other.c2
            && self.curve == other.curve
            && self.points == other.points
    }
}

impl<T: Scalar> Eq for OrbSheaf<T> {}

pub(crate) fn same_model<T: Scalar>(a: &Arc<RootStackModel<T>>, b: &Arc<RootStackModel<T>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn modulo(a: i64, r: u32) -> usize {
    a.rem_euclid(i64::from(r)) as usize
}

impl<T: Scalar> OrbSheaf<T> {
    /// Builds a sheaf from explicit data, checking that:
    /// the rank is positive; eigenranks on every component sum to the rank;
    /// eigendegrees on `𝒟_λ` sum to `r·c₁·D̃_λ`; and each crossing table has
    /// the curve eigenranks as its margins. Missing crossing tables are filled
    /// greedily from the margins.
    pub fn explicit(
        model: Arc<RootStackModel<T>>,
        rank: u32,
        c1: StackyClass<T>,
        c2: T,
        curve: Vec<Vec<EigenPiece<T>>>,
        mut points: BTreeMap<(usize, usize), Vec<Vec<u32>>>,
    ) -> Result<Self> {
        if curve.len() != model.components() {
            return Err(Error::DimensionMismatch {
                expected: model.components(),
                found: curve.len(),
            });
        }
        for (i, j) in model.crossing_pairs().collect::<Vec<_>>() {
            points.entry((i, j)).or_insert_with(|| {
                let rows: Vec<u32> = curve[i].iter().map(|p| p.rank).collect();
                let cols: Vec<u32> = curve[j].iter().map(|p| p.rank).collect();
                northwest_corner(&rows, &cols)
            });
        }
        let sheaf = Self {
            model,
            rank,
            c1,
            c2,
            curve,
            points,
        };
        sheaf.validate()?;
        Ok(sheaf)
    }

    fn validate(&self) -> Result<()> {
        let model = &self.model;
        let r = model.r() as usize;
        if self.rank == 0 {
            return Err(Error::InvalidArgument("sheaf rank must be positive".into()));
        }
        model.check_class(&self.c1)?;
        for (lambda, pieces) in self.curve.iter().enumerate() {
            let name = model.component_name(lambda);
            if pieces.len() != r {
                return Err(Error::InconsistentSectorData(format!(
                    "component `{name}` has {} characters, expected {r}",
                    pieces.len()
                )));
            }
            let total: u32 = pieces.iter().map(|p| p.rank).sum();
            if total != self.rank {
                return Err(Error::InconsistentSectorData(format!(
                    "eigenranks on `{name}` sum to {total}, rank is {}",
                    self.rank
                )));
            }
            let degree = pieces.iter().fold(T::zero(), |acc, p| acc + p.degree.clone());
            let expected = self.c1_degree_on(lambda)?;
            if degree != expected {
                return Err(Error::InconsistentSectorData(format!(
                    "eigendegrees on `{name}` sum to {degree}, c1 restricts with degree {expected}"
                )));
            }
        }
        let pairs: Vec<_> = model.crossing_pairs().collect();
        for key in self.points.keys() {
            if !pairs.contains(key) {
                return Err(Error::InconsistentSectorData(format!(
                    "`{}` and `{}` do not cross",
                    model.component_name(key.0),
                    model.component_name(key.1)
                )));
            }
        }
        for (i, j) in pairs {
            let table = self.points.get(&(i, j)).ok_or_else(|| {
                Error::InconsistentSectorData(format!(
                    "no crossing table for `{}` and `{}`",
                    model.component_name(i),
                    model.component_name(j)
                ))
            })?;
            let shape_ok = table.len() == r && table.iter().all(|row| row.len() == r);
            let rows_ok = shape_ok
                && table
                    .iter()
                    .zip(&self.curve[i])
                    .all(|(row, p)| row.iter().sum::<u32>() == p.rank);
            let cols_ok = shape_ok
                && (0..r).all(|c| table.iter().map(|row| row[c]).sum::<u32>() == self.curve[j][c].rank);
            if !(rows_ok && cols_ok) {
                return Err(Error::InconsistentSectorData(format!(
                    "crossing table for `{}` and `{}` does not match the curve eigenranks",
                    model.component_name(i),
                    model.component_name(j)
                )));
            }
        }
        Ok(())
    }

    /// `r·c₁·D̃_λ`, the degree of `det E|_{𝒟_λ}` on the coarse curve.
    fn c1_degree_on(&self, lambda: usize) -> Result<T> {
        let tilde = self.model.tilde(lambda);
        Ok(self.model.stacky_intersect(&self.c1, &tilde)? * T::from_u32(self.model.r()))
    }

    /// `O^{⊕rank}`.
    pub fn trivial(model: Arc<RootStackModel<T>>, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("sheaf rank must be positive".into()));
        }
        let mut sum = line_bundle(&model, &model.zero_class())?;
        for _ in 1..rank {
            sum = sum.direct_sum(&line_bundle(&model, &model.zero_class())?)?;
        }
        Ok(sum)
    }

    pub fn model(&self) -> &Arc<RootStackModel<T>> {
        &self.model
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn c1(&self) -> &StackyClass<T> {
        &self.c1
    }

    /// `∫c₂`
    pub fn c2(&self) -> &T {
        &self.c2
    }

    /// `∫c₁²`
    pub fn c1_squared(&self) -> T {
        self.model
            .stacky_intersect(&self.c1, &self.c1)
            .expect("validated class")
    }

    /// `∫ch₂ = ∫c₁²/2 - ∫c₂`
    pub fn ch2(&self) -> T {
        self.c1_squared() / T::from_i64(2) - self.c2.clone()
    }

    /// Representation data on `𝒟_λ`, indexed by character `0..r`.
    pub fn curve_data(&self, component: usize) -> &[EigenPiece<T>] {
        &self.curve[component]
    }

    /// Eigenrank table at the points of `D_i ∩ D_j` for a crossing pair `i < j`.
    pub fn point_data(&self, first: usize, second: usize) -> Option<&Vec<Vec<u32>>> {
        self.points.get(&(first, second))
    }

    pub fn point_tables(&self) -> &BTreeMap<(usize, usize), Vec<Vec<u32>>> {
        &self.points
    }

    /// The eigendecomposition seen by a given sector.
    pub fn sector_restriction(&self, sector: &Sector) -> SectorRestriction<T> {
        let r = self.model.r();
        match *sector {
            Sector::Untwisted => SectorRestriction::Untwisted { rank: self.rank },
            Sector::Curve { component, k } => {
                let mut pieces = vec![EigenPiece::<T>::zero(); r as usize];
                for (j, p) in self.curve[component].iter().enumerate() {
                    let f = (j * k as usize) % r as usize;
                    pieces[f].rank += p.rank;
                    pieces[f].degree = pieces[f].degree.clone() + p.degree.clone();
                }
                SectorRestriction::Curve { pieces }
            }
            Sector::Point {
                first,
                second,
                k1,
                k2,
                ..
            } => {
                let mut ranks = vec![0; r as usize];
                if let Some(table) = self.points.get(&(first, second)) {
                    for (j1, row) in table.iter().enumerate() {
                        for (j2, &n) in row.iter().enumerate() {
                            let f = (j1 * k1 as usize + j2 * k2 as usize) % r as usize;
                            ranks[f] += n;
                        }
                    }
                }
                SectorRestriction::Point { ranks }
            }
        }
    }

    fn check_model(&self, other: &Self) -> Result<()> {
        if same_model(&self.model, &other.model) {
            Ok(())
        } else {
            Err(Error::ModelMismatch)
        }
    }

    /// Whitney sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_model(other)?;
        let c1c1 = self.model.stacky_intersect(&self.c1, &other.c1)?;
        let curve = self
            .curve
            .iter()
            .zip(&other.curve)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| EigenPiece::new(x.rank + y.rank, x.degree.clone() + y.degree.clone()))
                    .collect()
            })
            .collect();
        let points = self
            .points
            .iter()
            .map(|(key, a)| {
                let b = &other.points[key];
                let table = a
                    .iter()
                    .zip(b)
                    .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
                    .collect();
                (*key, table)
            })
            .collect();
        Ok(Self {
            model: self.model.clone(),
            rank: self.rank + other.rank,
            c1: self.c1.add(&other.c1),
            c2: self.c2.clone() + other.c2.clone() + c1c1,
            curve,
            points,
        })
    }

    /// Tensor product. Characters add, eigenranks multiply and eigendegrees
    /// follow `δ = l_F·δ_E + l_E·δ_F` on each pair of pieces.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_model(other)?;
        let r = self.model.r() as usize;
        let (ra, rb) = (T::from_u32(self.rank), T::from_u32(other.rank));
        let c1 = self.c1.scale(&rb).add(&other.c1.scale(&ra));
        let ch2 = rb.clone() * self.ch2()
            + self.model.stacky_intersect(&self.c1, &other.c1)?
            + ra * other.ch2();
        let c1_sq = self.model.stacky_intersect(&c1, &c1)?;
        let c2 = c1_sq / T::from_i64(2) - ch2;
        let curve = self
            .curve
            .iter()
            .zip(&other.curve)
            .map(|(a, b)| {
                let mut out = vec![EigenPiece::<T>::zero(); r];
                for (j1, x) in a.iter().enumerate() {
                    for (j2, y) in b.iter().enumerate() {
                        let slot = &mut out[(j1 + j2) % r];
                        slot.rank += x.rank * y.rank;
                        slot.degree = slot.degree.clone()
                            + T::from_u32(y.rank) * x.degree.clone()
                            + T::from_u32(x.rank) * y.degree.clone();
                    }
                }
                out
            })
            .collect();
        let points = self
            .points
            .iter()
            .map(|(key, a)| {
                let b = &other.points[key];
                let mut out = vec![vec![0u32; r]; r];
                for (i1, row_a) in a.iter().enumerate() {
                    for (i2, &na) in row_a.iter().enumerate() {
                        if na == 0 {
                            continue;
                        }
                        for (j1, row_b) in b.iter().enumerate() {
                            for (j2, &nb) in row_b.iter().enumerate() {
                                out[(i1 + j1) % r][(i2 + j2) % r] += na * nb;
                            }
                        }
                    }
                }
                (*key, out)
            })
            .collect();
        Ok(Self {
            model: self.model.clone(),
            rank: self.rank * other.rank,
            c1,
            c2,
            curve,
            points,
        })
    }

    /// `E ⊗ O(L)`.
    pub fn twist(&self, l: &StackyClass<T>) -> Result<Self> {
        self.tensor(&line_bundle(&self.model, l)?)
    }

    /// `E^∨` (numerically; for a torsion-free but not locally free `E` this is
    /// the dual of its locally free model).
    pub fn dual(&self) -> Self {
        let r = self.model.r();
        let curve = self
            .curve
            .iter()
            .map(|pieces| {
                (0..r as usize)
                    .map(|j| {
                        let p = &pieces[modulo(-(j as i64), r)];
                        EigenPiece::new(p.rank, -p.degree.clone())
                    })
                    .collect()
            })
            .collect();
        let points = self
            .points
            .iter()
            .map(|(key, table)| {
                let out = (0..r as usize)
                    .map(|j1| {
                        (0..r as usize)
                            .map(|j2| table[modulo(-(j1 as i64), r)][modulo(-(j2 as i64), r)])
                            .collect()
                    })
                    .collect();
                (*key, out)
            })
            .collect();
        Self {
            model: self.model.clone(),
            rank: self.rank,
            c1: self.c1.neg(),
            c2: self.c2.clone(),
            curve,
            points,
        }
    }

    /// Pullback along the `n`-th power of the absolute Frobenius in
    /// characteristic `p`.
    pub fn frobenius_pullback(&self, p: u64, n: u32, rule: CharacterRule) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let r = self.model.r();
        if r > 1 && u64::from(r) % p == 0 {
            return Err(Error::WildCharacteristic { p, r });
        }
        if n == 0 {
            return Err(Error::InvalidArgument("Frobenius power must be at least 1".into()));
        }
        let q_big: BigInt = Pow::pow(BigInt::from(p), n);
        let q = T::from_bigint(&q_big).ok_or_else(|| Error::Overflow(format!("{p}^{n}")))?;
        let q_mod = (&q_big % BigInt::from(r)).to_usize().expect("residue below r");
        let r = r as usize;
        let target = |j: usize| match rule {
            CharacterRule::Multiply => (j * q_mod) % r,
            CharacterRule::Fixed => j,
        };
        let curve = self
            .curve
            .iter()
            .map(|pieces| {
                let mut out = vec![EigenPiece::<T>::zero(); r];
                for (j, piece) in pieces.iter().enumerate() {
                    let slot = &mut out[target(j)];
                    slot.rank += piece.rank;
                    slot.degree = slot.degree.clone() + piece.degree.clone() * q.clone();
                }
                out
            })
            .collect();
        let points = self
            .points
            .iter()
            .map(|(key, table)| {
                let mut out = vec![vec![0u32; r]; r];
                for (j1, row) in table.iter().enumerate() {
                    for (j2, &v) in row.iter().enumerate() {
                        out[target(j1)][target(j2)] += v;
                    }
                }
                (*key, out)
            })
            .collect();
        Ok(Self {
            model: self.model.clone(),
            rank: self.rank,
            c1: self.c1.scale(&q),
            c2: self.c2.clone() * q.clone() * q,
            curve,
            points,
        })
    }
}

impl<T: Scalar> fmt::Display for OrbSheaf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}, c1 = {}, c2 = {}", self.rank, self.c1, self.c2)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Greedy table with the given row and column sums (the sums must agree).
pub(crate) fn northwest_corner(rows: &[u32], cols: &[u32]) -> Vec<Vec<u32>> {
    let mut table = vec![vec![0u32; cols.len()]; rows.len()];
    let (mut rows, mut cols) = (rows.to_vec(), cols.to_vec());
    let (mut i, mut j) = (0, 0);
    while i < rows.len() && j < cols.len() {
        let m = rows[i].min(cols[j]);
        table[i][j] += m;
        rows[i] -= m;
        cols[j] -= m;
        if rows[i] == 0 {
            i += 1;
        } else {
            j += 1;
        }
    }
    table
}

/// The line bundle `O_𝒳(c₁)`; every stacky coefficient must be an integer.
pub fn line_bundle<T: Scalar>(
    model: &Arc<RootStackModel<T>>,
    c1: &StackyClass<T>,
) -> Result<OrbSheaf<T>> {
    model.check_class(c1)?;
    let r = model.r();
    let mut characters = Vec::with_capacity(model.components());
    for (i, a) in c1.stacky.iter().enumerate() {
        let a = a.to_i64_exact().ok_or_else(|| Error::NonIntegralTwist {
            component: model.component_name(i).to_string(),
            value: a.to_string(),
        })?;
        characters.push(modulo(a, r));
    }
    let rt = T::from_u32(r);
    let mut curve = Vec::with_capacity(model.components());
    for (i, &j) in characters.iter().enumerate() {
        let mut pieces = vec![EigenPiece::<T>::zero(); r as usize];
        let degree = model.stacky_intersect(c1, &model.tilde(i))? * rt.clone();
        pieces[j] = EigenPiece::new(1, degree);
        curve.push(pieces);
    }
    let points = model
        .crossing_pairs()
        .map(|(i, j)| {
            let mut table = vec![vec![0u32; r as usize]; r as usize];
            table[characters[i]][characters[j]] = 1;
            ((i, j), table)
        })
        .collect();
    Ok(OrbSheaf {
        model: model.clone(),
        rank: 1,
        c1: c1.clone(),
        c2: T::zero(),
        curve,
        points,
    })
}

/// Whitney sum of two sheaves over the same root stack.
pub fn direct_sum<T: Scalar>(a: &OrbSheaf<T>, b: &OrbSheaf<T>) -> Result<OrbSheaf<T>> {
    a.direct_sum(b)
}

pub fn tensor<T: Scalar>(a: &OrbSheaf<T>, b: &OrbSheaf<T>) -> Result<OrbSheaf<T>> {
    a.tensor(b)
}

pub fn twist<T: Scalar>(e: &OrbSheaf<T>, l: &StackyClass<T>) -> Result<OrbSheaf<T>> {
    e.twist(l)
}

pub fn dual<T: Scalar>(e: &OrbSheaf<T>) -> OrbSheaf<T> {
    e.dual()
}

pub fn frobenius_pullback<T: Scalar>(
    e: &OrbSheaf<T>,
    p: u64,
    n: u32,
    rule: CharacterRule,
) -> Result<OrbSheaf<T>> {
    e.frobenius_pullback(p, n, rule)
}
