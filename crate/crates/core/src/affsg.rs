//! Affine semigroups `Γ ⊆ ℕ^d` given by a finite generator list.
//!
//! Membership is decided by dynamic programming over the box `[0, v]`: since
//! every generator has nonnegative coordinates, each partial sum of a
//! representation of `v` stays inside that box.
//!
//! For `d ≤ 2` the multiplicity is the normalized volume of the bounded
//! region `ℝ^d_{≥0} ∖ K₊(Γ)`, where `K₊(Γ) = conv(generators) + ℝ^d_{≥0}` is
//! the convex hull of `Γ ∖ {0}`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Cell budget for membership tables.
pub const MAX_CELLS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffsgError {
    ZeroDimension,
    ZeroGenerator,
    NegativeCoordinate,
    DimensionMismatch { expected: usize, found: usize },
    BoxTooLarge { cells: u64 },
    UnsupportedDimension(usize),
    /// Some coordinate axis carries no generator, so the complement of the
    /// hull is unbounded.
    ConeNotFull,
}

impl fmt::Display for AffsgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffsgError::ZeroDimension => write!(f, "dimension must be at least 1"),
            AffsgError::ZeroGenerator => write!(f, "zero vector is not allowed as a generator"),
            AffsgError::NegativeCoordinate => write!(f, "generators must lie in ℕ^d"),
            AffsgError::DimensionMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            AffsgError::BoxTooLarge { cells } => {
                write!(f, "membership box has {cells} cells (limit {MAX_CELLS})")
            }
            AffsgError::UnsupportedDimension(d) => {
                write!(f, "operation not supported in dimension {d}")
            }
            AffsgError::ConeNotFull => {
                write!(f, "cone of the semigroup is not the full orthant")
            }
        }
    }
}

/// A finitely generated sub-semigroup of `ℕ^d`.
///
/// Generators keep their input order (binomials index into it) with
/// duplicates removed. A semigroup built by [`AffineSemigroup::product`]
/// remembers its factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<Vec<u64>>,
    factors: Vec<AffineSemigroup>,
}

impl AffineSemigroup {
    pub fn new<I, V>(dim: usize, gens: I) -> Result<Self, AffsgError>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[i64]>,
    {
        let mut nat = Vec::new();
        for g in gens {
            let g = g.as_ref();
            if g.iter().any(|&x| x < 0) {
                return Err(AffsgError::NegativeCoordinate);
            }
            nat.push(g.iter().map(|&x| x as u64).collect());
        }
        Self::from_natural(dim, nat)
    }

    pub fn from_natural(dim: usize, gens: Vec<Vec<u64>>) -> Result<Self, AffsgError> {
        if dim == 0 {
            return Err(AffsgError::ZeroDimension);
        }
        let mut generators: Vec<Vec<u64>> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != dim {
                return Err(AffsgError::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(AffsgError::ZeroGenerator);
            }
            if !generators.contains(&g) {
                generators.push(g);
            }
        }
        Ok(AffineSemigroup {
            dim,
            generators,
            factors: Vec::new(),
        })
    }

    /// `ℕ^d` with the standard basis.
    pub fn orthant(dim: usize) -> Self {
        let gens = (0..dim)
            .map(|i| {
                let mut e = vec![0; dim];
                e[i] = 1;
                e
            })
            .collect();
        Self::from_natural(dim, gens).expect("basis vectors are valid")
    }

    /// Numerical semigroup generators as a one-dimensional affine semigroup.
    pub fn numerical(gens: &[u64]) -> Result<Self, AffsgError> {
        Self::from_natural(1, gens.iter().map(|&g| vec![g]).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    /// Factors of a product semigroup; empty otherwise.
    pub fn factors(&self) -> &[AffineSemigroup] {
        &self.factors
    }

    /// `Γ₁ × Γ₂` with generators `(g, 0)` and `(0, h)`.
    pub fn product(&self, other: &AffineSemigroup) -> AffineSemigroup {
        let dim = self.dim + other.dim;
        let mut generators = Vec::with_capacity(self.generators.len() + other.generators.len());
        for g in &self.generators {
            let mut v = g.clone();
            v.resize(dim, 0);
            generators.push(v);
        }
        for h in &other.generators {
            let mut v = vec![0; self.dim];
            v.extend_from_slice(h);
            generators.push(v);
        }
        let mut factors = self.factor_list();
        factors.extend(other.factor_list());
        AffineSemigroup {
            dim,
            generators,
            factors,
        }
    }

    fn factor_list(&self) -> Vec<AffineSemigroup> {
        if self.factors.is_empty() {
            vec![self.clone()]
        } else {
            self.factors.clone()
        }
    }

    fn check_dim(&self, v: &[u64]) -> Result<(), AffsgError> {
        if v.len() != self.dim {
            return Err(AffsgError::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Membership table over `[0, bounds]`.
    pub fn table(&self, bounds: &[u64]) -> Result<MembershipTable, AffsgError> {
        self.check_dim(bounds)?;
        MembershipTable::build(&self.generators, bounds)
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool, AffsgError> {
        self.check_dim(v)?;
        if v.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        let t = MembershipTable::build(&self.generators, v)?;
        Ok(t.contains(v) == Some(true))
    }

    /// Generators that are not ℕ-combinations of the other generators, in
    /// lexicographic order.
    pub fn min_generators(&self) -> Result<Vec<Vec<u64>>, AffsgError> {
        let mut out = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let others: Vec<Vec<u64>> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let t = MembershipTable::build(&others, g)?;
            if t.contains(g) != Some(true) {
                out.push(g.clone());
            }
        }
        out.sort();
        Ok(out)
    }

    /// The same semigroup presented by its minimal generators.
    pub fn minimized(&self) -> Result<AffineSemigroup, AffsgError> {
        let mut s = Self::from_natural(self.dim, self.min_generators()?)?;
        s.factors = self
            .factors
            .iter()
            .map(|f| f.minimized())
            .collect::<Result<_, _>>()?;
        Ok(s)
    }

    pub fn embedding_dimension(&self) -> Result<usize, AffsgError> {
        Ok(self.min_generators()?.len())
    }

    pub fn hull_complement(&self) -> Result<HullComplement, AffsgError> {
        HullComplement::new(self)
    }

    /// Nonzero lattice points of `ℕ^d` outside `K₊(Γ)`.
    pub fn outside_hull_points(&self) -> Result<Vec<Vec<u64>>, AffsgError> {
        Ok(self.hull_complement()?.outside_points())
    }

    /// Multiplicity at the origin: least element for `d = 1`, normalized
    /// volume of the hull complement for `d = 2`, product of the factor
    /// multiplicities for tagged products of higher dimension.
    pub fn multiplicity(&self) -> Result<u64, AffsgError> {
        match self.dim {
            1 | 2 => Ok(self.hull_complement()?.normalized_volume()),
            d if self.factors.is_empty() => Err(AffsgError::UnsupportedDimension(d)),
            _ => self
                .factors
                .iter()
                .try_fold(1u64, |acc, f| Ok(acc * f.multiplicity()?)),
        }
    }

    /// Is `v` in `K₊(Γ)`? Beyond the plane this is available for products of
    /// numerical semigroups, where `K₊` is `{x : Σ xᵢ/mᵢ ≥ 1}`.
    pub fn in_hull(&self, v: &[u64]) -> Result<bool, AffsgError> {
        self.check_dim(v)?;
        if self.dim <= 2 {
            return Ok(self.hull_complement()?.in_hull(v));
        }
        if self.factors.is_empty() || self.factors.iter().any(|f| f.dim != 1) {
            return Err(AffsgError::UnsupportedDimension(self.dim));
        }
        let mults = self
            .factors
            .iter()
            .map(|f| f.multiplicity())
            .collect::<Result<Vec<_>, _>>()?;
        let l = mults.iter().fold(1u128, |acc, &m| num_integer::lcm(acc, m as u128));
        let weighted: u128 = v
            .iter()
            .zip(&mults)
            .map(|(&x, &m)| x as u128 * (l / m as u128))
            .sum();
        Ok(weighted >= l)
    }
}

impl fmt::Display for AffineSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write_vector(f, g)?;
        }
        write!(f, "⟩")
    }
}

pub(crate) fn write_vector(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    if v.len() == 1 {
        return write!(f, "{}", v[0]);
    }
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Boolean table of `Γ ∩ [0, bounds]`, filled in increasing row-major order.
#[derive(Debug, Clone)]
pub struct MembershipTable {
    bounds: Vec<u64>,
    strides: Vec<usize>,
    cells: Vec<bool>,
}

impl MembershipTable {
    pub fn build(generators: &[Vec<u64>], bounds: &[u64]) -> Result<Self, AffsgError> {
        let dim = bounds.len();
        let total = bounds.iter().try_fold(1u64, |acc, &b| {
            acc.checked_mul(b + 1).filter(|&c| c <= MAX_CELLS)
        });
        let total = total.ok_or_else(|| AffsgError::BoxTooLarge {
            cells: bounds
                .iter()
                .fold(1u64, |acc, &b| acc.saturating_mul(b.saturating_add(1))),
        })? as usize;
        let mut strides = vec![1usize; dim];
        for i in (0..dim.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bounds[i + 1] as usize + 1);
        }
        // generators that fit in the box, with their flat offsets
        let usable: Vec<(&[u64], usize)> = generators
            .iter()
            .filter(|g| g.len() == dim && g.iter().zip(bounds).all(|(x, b)| x <= b))
            .map(|g| {
                let off = g.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum();
                (g.as_slice(), off)
            })
            .collect();

        let mut cells = vec![false; total];
        let mut coords = vec![0u64; dim];
        cells[0] = true;
        for idx in 1..total {
            // odometer increment
            for i in (0..dim).rev() {
                if coords[i] < bounds[i] {
                    coords[i] += 1;
                    break;
                }
                coords[i] = 0;
            }
            cells[idx] = usable.iter().any(|(g, off)| {
                g.iter().zip(&coords).all(|(x, c)| x <= c) && cells[idx - off]
            });
        }
        Ok(MembershipTable {
            bounds: bounds.to_vec(),
            strides,
            cells,
        })
    }

    /// `None` when `v` lies outside the box.
    pub fn contains(&self, v: &[u64]) -> Option<bool> {
        if v.len() != self.bounds.len() || v.iter().zip(&self.bounds).any(|(x, b)| x > b) {
            return None;
        }
        let idx: usize = v
            .iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum();
        Some(self.cells[idx])
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    /// Flat row-major cells, aligned with [`Self::points`].
    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// Every lattice point of the box, in row-major order.
    pub fn points(&self) -> BoxPoints {
        BoxPoints::new(&self.bounds)
    }

    /// Members of the box, in row-major order.
    pub fn members(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        self.points()
            .zip(self.cells.iter())
            .filter(|(_, &b)| b)
            .map(|(p, _)| p)
    }
}

/// Row-major iterator over the lattice points of `[0, bounds]`.
#[derive(Debug, Clone)]
pub struct BoxPoints {
    bounds: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl BoxPoints {
    pub fn new(bounds: &[u64]) -> Self {
        BoxPoints {
            bounds: bounds.to_vec(),
            next: Some(vec![0; bounds.len()]),
        }
    }
}

impl Iterator for BoxPoints {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bounds[i] {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(cur);
            }
            succ[i] = 0;
        }
        Some(cur)
    }
}

/// The bounded region `ℝ^d_{≥0} ∖ K₊(Γ)` for `d ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullComplement {
    dim: usize,
    // for d = 2: lower-left hull chain from (0, b) to (a, 0)
    chain: Vec<[u64; 2]>,
    polygon_vertices: Vec<Vec<u64>>,
    normalized_volume: u64,
}

impl HullComplement {
    pub fn new(s: &AffineSemigroup) -> Result<Self, AffsgError> {
        match s.dim {
            1 => {
                let m = s
                    .generators
                    .iter()
                    .map(|g| g[0])
                    .min()
                    .ok_or(AffsgError::ConeNotFull)?;
                Ok(HullComplement {
                    dim: 1,
                    chain: Vec::new(),
                    polygon_vertices: vec![vec![0], vec![m]],
                    normalized_volume: m,
                })
            }
            2 => Self::planar(&s.generators),
            d => Err(AffsgError::UnsupportedDimension(d)),
        }
    }

    fn planar(gens: &[Vec<u64>]) -> Result<Self, AffsgError> {
        let a = gens
            .iter()
            .filter(|g| g[1] == 0)
            .map(|g| g[0])
            .min()
            .ok_or(AffsgError::ConeNotFull)?;
        let b = gens
            .iter()
            .filter(|g| g[0] == 0)
            .map(|g| g[1])
            .min()
            .ok_or(AffsgError::ConeNotFull)?;
        // Anything componentwise above (a, 0) or (0, b) cannot touch the chain.
        let mut pts: Vec<[u64; 2]> = gens
            .iter()
            .filter(|g| g[0] < a && g[1] < b)
            .map(|g| [g[0], g[1]])
            .collect();
        pts.push([0, b]);
        pts.push([a, 0]);
        pts.sort();
        pts.dedup();

        let mut chain: Vec<[u64; 2]> = Vec::new();
        for p in pts {
            while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= 0 {
                chain.pop();
            }
            chain.push(p);
        }

        let mut poly: Vec<[u64; 2]> = vec![[0, 0]];
        poly.extend(chain.iter().rev().copied());
        let twice_area: i128 = (0..poly.len())
            .map(|i| {
                let p = poly[i];
                let q = poly[(i + 1) % poly.len()];
                p[0] as i128 * q[1] as i128 - q[0] as i128 * p[1] as i128
            })
            .sum();
        debug_assert!(twice_area > 0);
        Ok(HullComplement {
            dim: 2,
            polygon_vertices: poly.iter().map(|p| p.to_vec()).collect(),
            chain,
            normalized_volume: twice_area as u64,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Counter-clockwise vertices starting at the origin.
    pub fn polygon_vertices(&self) -> &[Vec<u64>] {
        &self.polygon_vertices
    }

    /// `d!` times the euclidean volume.
    pub fn normalized_volume(&self) -> u64 {
        self.normalized_volume
    }

    /// Is the lattice point `v` in `K₊(Γ)`?
    pub fn in_hull(&self, v: &[u64]) -> bool {
        match self.dim {
            1 => v[0] >= self.normalized_volume,
            _ => {
                let p = [v[0], v[1]];
                self.chain.windows(2).all(|w| cross(w[0], w[1], p) >= 0)
            }
        }
    }

    pub fn outside_points(&self) -> Vec<Vec<u64>> {
        match self.dim {
            1 => (1..self.normalized_volume).map(|x| vec![x]).collect(),
            _ => {
                let a = self.chain.last().unwrap()[0];
                let b = self.chain[0][1];
                let mut out = Vec::new();
                for x in 0..a {
                    for y in 0..b {
                        if (x, y) != (0, 0) && !self.in_hull(&[x, y]) {
                            out.push(vec![x, y]);
                        }
                    }
                }
                out
            }
        }
    }
}

fn cross(o: [u64; 2], a: [u64; 2], b: [u64; 2]) -> i128 {
    let (ox, oy) = (o[0] as i128, o[1] as i128);
    (a[0] as i128 - ox) * (b[1] as i128 - oy) - (a[1] as i128 - oy) * (b[0] as i128 - ox)
}

/// Display order for planar exponent vectors: by angle from the first axis,
/// then by size.
pub(crate) fn angular_cmp(p: &[u64], q: &[u64]) -> Ordering {
    let c = cross([0, 0], [p[0], p[1]], [q[0], q[1]]);
    0.cmp(&c).then_with(|| (p[0] + p[1]).cmp(&(q[0] + q[1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn wu() -> AffineSemigroup {
        AffineSemigroup::new(2, [[1, 0], [1, 1], [0, 2]]).unwrap()
    }

    /// ℕ-combinations of `gens` with coefficient sum at most `depth`.
    fn combos(gens: &[Vec<u64>], depth: usize) -> BTreeSet<Vec<u64>> {
        let dim = gens.first().map_or(0, |g| g.len());
        let mut layer = BTreeSet::from([vec![0u64; dim]]);
        let mut all = layer.clone();
        for _ in 0..depth {
            let mut next = BTreeSet::new();
            for v in &layer {
                for g in gens {
                    let w: Vec<u64> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                    if all.insert(w.clone()) {
                        next.insert(w);
                    }
                }
            }
            layer = next;
        }
        all
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            AffineSemigroup::new(2, [[0, 0]]),
            Err(AffsgError::ZeroGenerator)
        );
        assert_eq!(
            AffineSemigroup::new(2, [[1, -1]]),
            Err(AffsgError::NegativeCoordinate)
        );
        assert_eq!(
            AffineSemigroup::new(2, [vec![1, 0, 0]]),
            Err(AffsgError::DimensionMismatch { expected: 2, found: 3 })
        );
        let s = AffineSemigroup::new(1, [[2], [3], [2]]).unwrap();
        assert_eq!(s.generators(), &[vec![2], vec![3]]);
    }

    #[test]
    fn wu_membership() {
        let s = wu();
        assert!(!s.contains(&[0, 3]).unwrap());
        assert!(s.contains(&[2, 2]).unwrap());
        assert!(s.contains(&[3, 5]).unwrap());
        assert!(combos(s.generators(), 5).contains(&vec![3, 5]));
        assert!(s.contains(&[0, 0]).unwrap());
        assert!(s.contains(&[1]).is_err());
        // ℕ² ∖ Γ is the odd part of the second axis
        let t = s.table(&[6, 9]).unwrap();
        for p in t.points() {
            let expected = !(p[0] == 0 && p[1] % 2 == 1);
            assert_eq!(t.contains(&p), Some(expected), "{p:?}");
        }
    }

    #[test]
    fn box_budget() {
        let s = AffineSemigroup::orthant(3);
        assert!(matches!(
            s.contains(&[1000, 1000, 1000]),
            Err(AffsgError::BoxTooLarge { .. })
        ));
    }

    #[test]
    fn minimal_generators() {
        let s = AffineSemigroup::new(2, [[1, 0], [1, 1], [0, 2], [2, 1]]).unwrap();
        assert_eq!(
            s.min_generators().unwrap(),
            vec![vec![0, 2], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(AffineSemigroup::orthant(2).embedding_dimension().unwrap(), 2);
    }

    #[test]
    fn product_of_cusps() {
        let c = AffineSemigroup::numerical(&[2, 3]).unwrap();
        let p = c.product(&c);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.factors().len(), 2);
        assert!(!p.contains(&[1, 1]).unwrap());
        assert!(p.contains(&[2, 3]).unwrap());
        assert_eq!(p.multiplicity().unwrap(), 4);
        assert_eq!(p.embedding_dimension().unwrap(), 4);
        let n = AffineSemigroup::numerical(&[1]).unwrap();
        assert_eq!(n.product(&n).min_generators().unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn hull_examples() {
        let h = wu().hull_complement().unwrap();
        assert_eq!(h.polygon_vertices(), &[vec![0, 0], vec![1, 0], vec![0, 2]]);
        assert_eq!(h.normalized_volume(), 2);
        assert_eq!(wu().outside_hull_points().unwrap(), vec![vec![0, 1]]);
        assert_eq!(wu().multiplicity().unwrap(), 2);

        let hyp = AffineSemigroup::new(2, [[1, 0], [3, 11], [0, 5]]).unwrap();
        let h = hyp.hull_complement().unwrap();
        assert_eq!(h.polygon_vertices(), &[vec![0, 0], vec![1, 0], vec![0, 5]]);
        assert_eq!(h.normalized_volume(), 5);
        assert_eq!(
            hyp.outside_hull_points().unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]]
        );

        let n2 = AffineSemigroup::orthant(2);
        assert_eq!(n2.multiplicity().unwrap(), 1);
        assert!(n2.outside_hull_points().unwrap().is_empty());

        let one = AffineSemigroup::numerical(&[5, 11]).unwrap();
        assert_eq!(one.multiplicity().unwrap(), 5);
        assert_eq!(one.outside_hull_points().unwrap().len(), 4);
    }

    #[test]
    fn hull_with_interior_chain_vertex() {
        // (1,1) lies below the chord from (0,4) to (4,0)
        let s = AffineSemigroup::new(2, [[4, 0], [1, 1], [0, 4]]).unwrap();
        let h = s.hull_complement().unwrap();
        assert_eq!(
            h.polygon_vertices(),
            &[vec![0, 0], vec![4, 0], vec![1, 1], vec![0, 4]]
        );
        // shoelace: 2·area = 4 + 4 = 8
        assert_eq!(h.normalized_volume(), 8);
        assert!(h.in_hull(&[1, 1]));
        assert!(!h.in_hull(&[0, 3]));
        assert!(h.in_hull(&[2, 1]));
    }

    #[test]
    fn hull_errors() {
        let s = AffineSemigroup::new(2, [[1, 1], [2, 0]]).unwrap();
        assert_eq!(s.hull_complement(), Err(AffsgError::ConeNotFull));
        assert_eq!(
            AffineSemigroup::orthant(3).hull_complement(),
            Err(AffsgError::UnsupportedDimension(3))
        );
        assert_eq!(
            AffineSemigroup::orthant(3).multiplicity(),
            Err(AffsgError::UnsupportedDimension(3))
        );
    }

    #[test]
    fn three_factor_product_multiplicity() {
        let a = AffineSemigroup::numerical(&[2, 3]).unwrap();
        let b = AffineSemigroup::numerical(&[3, 4, 5]).unwrap();
        let p = a.product(&b).product(&a);
        assert_eq!(p.dim(), 3);
        assert_eq!(p.factors().len(), 3);
        assert_eq!(p.multiplicity().unwrap(), 12);
        assert!(p.in_hull(&[0, 3, 0]).unwrap());
        // 2/3 + 1/2 ≥ 1
        assert!(p.in_hull(&[0, 2, 1]).unwrap());
        assert!(!p.in_hull(&[1, 1, 0]).unwrap());
        assert!(!p.in_hull(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn box_points_order() {
        let pts: Vec<Vec<u64>> = BoxPoints::new(&[1, 2]).collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
    }
}
