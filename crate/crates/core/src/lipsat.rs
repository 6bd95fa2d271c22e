//! Saturated semigroups `Γ^s` for the families where they are known
//! explicitly:
//!
//! * irreducible curves, through characteristic exponents of a generic plane
//!   model and the numerical saturation of [`crate::numsg`];
//! * products of curves, factor by factor;
//! * the hypersurfaces `y^N − x^{αN} z^β`, `gcd(β, N) = 1`, with
//!   normalization `(u, v) ↦ (u, u^α v^β, v^N)`, where `(a, b) ∈ Γ^s` iff
//!   `N | b` or (`a ≥ α` and `b ∈ T^s`), `T = ⟨N, β⟩`.
//!
//! Every [`SaturationResult`] can re-check its own invariants on a box.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::affsg::{self, AffineSemigroup, AffsgError};
use crate::numsg::{self, NumericalSemigroup, NumsgError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SaturationError {
    Numerical(NumsgError),
    Affine(AffsgError),
    EmptyCurve,
    EmptySupport,
    ZeroExponent,
    /// gcd of all exponents is not 1.
    NotReduced { gcd: u64 },
    TooFewFactors,
    InvalidSpec(&'static str),
    /// A computed result failed one of its self-checks.
    Invariant(InvariantViolation),
}

impl From<NumsgError> for SaturationError {
    fn from(e: NumsgError) -> Self {
        SaturationError::Numerical(e)
    }
}

impl From<AffsgError> for SaturationError {
    fn from(e: AffsgError) -> Self {
        SaturationError::Affine(e)
    }
}

impl fmt::Display for SaturationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaturationError::Numerical(e) => e.fmt(f),
            SaturationError::Affine(e) => e.fmt(f),
            SaturationError::EmptyCurve => write!(f, "curve has no coordinates"),
            SaturationError::EmptySupport => write!(f, "coordinate with empty support"),
            SaturationError::ZeroExponent => {
                write!(f, "exponent 0: coordinates must vanish at the origin")
            }
            SaturationError::NotReduced { gcd } => {
                write!(f, "exponents have gcd {gcd}; parametrization is not reduced")
            }
            SaturationError::TooFewFactors => write!(f, "a product needs at least two curves"),
            SaturationError::InvalidSpec(why) => write!(f, "invalid hypersurface: {why}"),
            SaturationError::Invariant(v) => write!(f, "invariant violated: {v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantViolation {
    /// A point of `Γ` is missing from `Γ^s`.
    NotContained(Vec<u64>),
    MultiplicityChanged { before: u64, after: u64 },
    /// A point of `Γ^s` lies outside `K₊(Γ)`.
    OutsideHull(Vec<u64>),
    EmbeddingDimension { claimed: usize, actual: usize },
    /// Generated semigroup disagrees with the membership formula.
    FormulaMismatch(Vec<u64>),
    NonMinimal,
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantViolation::NotContained(p) => write!(f, "{p:?} ∈ Γ but ∉ Γ^s"),
            InvariantViolation::MultiplicityChanged { before, after } => {
                write!(f, "multiplicity changed from {before} to {after}")
            }
            InvariantViolation::OutsideHull(p) => write!(f, "{p:?} ∈ Γ^s lies outside K₊(Γ)"),
            InvariantViolation::EmbeddingDimension { claimed, actual } => {
                write!(f, "embedding dimension {claimed} but {actual} minimal generators")
            }
            InvariantViolation::FormulaMismatch(p) => {
                write!(f, "generated semigroup and membership formula disagree at {p:?}")
            }
            InvariantViolation::NonMinimal => write!(f, "generating set is not minimal"),
        }
    }
}

/// A branch given by the exponent supports of its coordinate series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCurve {
    supports: Vec<Vec<u64>>,
}

impl MonomialCurve {
    pub fn new(supports: Vec<Vec<u64>>) -> Result<Self, SaturationError> {
        if supports.is_empty() {
            return Err(SaturationError::EmptyCurve);
        }
        let mut supports = supports;
        let mut g = 0u64;
        for s in supports.iter_mut() {
            if s.is_empty() {
                return Err(SaturationError::EmptySupport);
            }
            if s.contains(&0) {
                return Err(SaturationError::ZeroExponent);
            }
            s.sort_unstable();
            s.dedup();
            g = s.iter().fold(g, |acc, &x| acc.gcd(&x));
        }
        if g != 1 {
            return Err(SaturationError::NotReduced { gcd: g });
        }
        Ok(MonomialCurve { supports })
    }

    /// The monomial curve `t ↦ (t^{g₁}, …, t^{g_n})`.
    pub fn monomial(exponents: &[u64]) -> Result<Self, SaturationError> {
        Self::new(exponents.iter().map(|&e| vec![e]).collect())
    }

    pub fn supports(&self) -> &[Vec<u64>] {
        &self.supports
    }

    fn is_monomial(&self) -> bool {
        self.supports.iter().all(|s| s.len() == 1)
    }

    /// Exponent data `(m, support)` of a generic plane projection, assuming
    /// no cancellation: `m` is the least exponent and `support` the remaining
    /// exponents of all coordinates.
    pub fn plane_model(&self) -> (u64, Vec<u64>) {
        let mut all: Vec<u64> = self.supports.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        let m = all[0];
        (m, all.split_off(1))
    }
}

/// Triple `(α, β, N)` for the hypersurface `y^N − x^{αN} z^β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypersurfaceSpec {
    alpha: u64,
    beta: u64,
    big_n: u64,
}

impl HypersurfaceSpec {
    pub fn new(alpha: u64, beta: u64, big_n: u64) -> Result<Self, SaturationError> {
        if alpha == 0 {
            return Err(SaturationError::InvalidSpec("α must be at least 1"));
        }
        if beta == 0 {
            return Err(SaturationError::InvalidSpec("β must be at least 1"));
        }
        if big_n < 2 {
            return Err(SaturationError::InvalidSpec("N must be at least 2"));
        }
        if beta.gcd(&big_n) != 1 {
            return Err(SaturationError::InvalidSpec("gcd(β, N) must be 1"));
        }
        Ok(HypersurfaceSpec { alpha, beta, big_n })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn big_n(&self) -> u64 {
        self.big_n
    }

    /// `Γ = ⟨(1,0), (α,β), (0,N)⟩`.
    pub fn semigroup(&self) -> AffineSemigroup {
        AffineSemigroup::from_natural(
            2,
            vec![vec![1, 0], vec![self.alpha, self.beta], vec![0, self.big_n]],
        )
        .expect("generators are nonzero")
    }

    /// Default validation box `[0, 3α] × [0, 3(N+β)]`.
    pub fn validation_box(&self) -> [u64; 2] {
        [3 * self.alpha, 3 * (self.big_n + self.beta)]
    }
}

/// Extra hypotheses a result depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assumption {
    /// Plane model exponents are the union of the coordinate supports.
    GenericProjection,
    /// The curve is not monomial; `Γ` is replaced by the semigroup generated
    /// by its characteristic exponents for the self-checks.
    ExponentSemigroupAsSource,
}

impl Assumption {
    pub fn name(&self) -> &'static str {
        match self {
            Assumption::GenericProjection => "generic_projection_no_cancellation",
            Assumption::ExponentSemigroupAsSource => "source_semigroup_from_characteristic_exponents",
        }
    }
}

/// The saturated semigroup `Γ^s` together with its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult {
    /// `Γ`, the semigroup of the input germ.
    pub source: AffineSemigroup,
    /// `Γ^s`, presented by its minimal generators.
    pub semigroup: AffineSemigroup,
    /// Minimal generators in lexicographic order.
    pub min_gens: Vec<Vec<u64>>,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    /// Exponent vectors of the monomial normalization map of `X^s`.
    pub parametrization: Vec<Vec<u64>>,
    pub assumptions: Vec<Assumption>,
}

impl SaturationResult {
    fn from_semigroup(
        source: AffineSemigroup,
        semigroup: AffineSemigroup,
        multiplicity: u64,
        assumptions: Vec<Assumption>,
    ) -> Result<Self, SaturationError> {
        let min_gens = semigroup.min_generators()?;
        let mut parametrization = min_gens.clone();
        sort_for_display(&mut parametrization);
        Ok(SaturationResult {
            source,
            embedding_dimension: min_gens.len(),
            semigroup,
            min_gens,
            multiplicity,
            parametrization,
            assumptions,
        })
    }

    /// Default box used by [`Self::check_invariants`]: twice the largest
    /// generator coordinate in every direction.
    pub fn default_box(&self) -> Vec<u64> {
        let top = self
            .min_gens
            .iter()
            .flatten()
            .chain(self.source.generators().iter().flatten())
            .copied()
            .max()
            .unwrap_or(1);
        let d = self.semigroup.dim();
        // keep higher-dimensional boxes small
        let side = if d <= 2 { 2 * top } else { top };
        vec![side; d]
    }

    /// Checks on `[0, bounds]`: `Γ ⊆ Γ^s`, equal multiplicities, every
    /// nonzero point of `Γ^s` inside `K₊(Γ)`, and the embedding dimension.
    pub fn check_invariants(&self, bounds: &[u64]) -> Result<(), SaturationError> {
        let violation = |v| Err(SaturationError::Invariant(v));
        let before = self.source.multiplicity()?;
        let after = self.semigroup.multiplicity()?;
        if before != after || after != self.multiplicity {
            return violation(InvariantViolation::MultiplicityChanged { before, after });
        }
        let actual = self.semigroup.embedding_dimension()?;
        if actual != self.embedding_dimension || actual != self.min_gens.len() {
            return violation(InvariantViolation::EmbeddingDimension {
                claimed: self.embedding_dimension,
                actual,
            });
        }
        let gamma = self.source.table(bounds)?;
        let sat = self.semigroup.table(bounds)?;
        for (p, (&inner, &outer)) in gamma.points().zip(gamma.cells().iter().zip(sat.cells())) {
            if inner && !outer {
                return violation(InvariantViolation::NotContained(p));
            }
            if outer && p.iter().any(|&x| x != 0) && !self.source.in_hull(&p)? {
                return violation(InvariantViolation::OutsideHull(p));
            }
        }
        Ok(())
    }
}

/// Planar vectors by angle from the first axis; otherwise by the position of
/// the first nonzero coordinate, then by size.
fn sort_for_display(v: &mut [Vec<u64>]) {
    if v.first().is_some_and(|g| g.len() == 2) {
        v.sort_by(|p, q| affsg::angular_cmp(p, q));
    } else {
        v.sort_by_key(|g| (g.iter().position(|&x| x != 0), g.iter().sum::<u64>()));
    }
}

/// Saturation of an irreducible curve.
pub fn saturate_curve(curve: &MonomialCurve) -> Result<SaturationResult, SaturationError> {
    let (m, support) = curve.plane_model();
    let chars = numsg::char_exponents(m, &support)?;
    let sat = numsg::saturate_chars(&chars)?;
    let mut assumptions = vec![Assumption::GenericProjection];
    let source = if curve.is_monomial() {
        let exps: Vec<u64> = curve.supports.iter().map(|s| s[0]).collect();
        AffineSemigroup::numerical(&exps)?
    } else {
        assumptions.push(Assumption::ExponentSemigroupAsSource);
        AffineSemigroup::numerical(chars.betas())?
    };
    let semigroup = AffineSemigroup::numerical(sat.min_generators())?;
    SaturationResult::from_semigroup(source, semigroup, chars.multiplicity(), assumptions)
}

/// Saturation of a product of two or more curves, `Γ^s = Γ₁^s × Γ₂^s × ⋯`.
pub fn saturate_product(curves: &[MonomialCurve]) -> Result<SaturationResult, SaturationError> {
    if curves.len() < 2 {
        return Err(SaturationError::TooFewFactors);
    }
    let factors = curves
        .iter()
        .map(saturate_curve)
        .collect::<Result<Vec<_>, _>>()?;
    let source = fold_product(factors.iter().map(|f| &f.source));
    let semigroup = fold_product(factors.iter().map(|f| &f.semigroup));
    let multiplicity = factors.iter().map(|f| f.multiplicity).product();
    let mut assumptions: Vec<Assumption> = Vec::new();
    for a in factors.iter().flat_map(|f| f.assumptions.iter()) {
        if !assumptions.contains(a) {
            assumptions.push(*a);
        }
    }
    let result = SaturationResult::from_semigroup(source, semigroup, multiplicity, assumptions)?;
    let edim: usize = factors.iter().map(|f| f.embedding_dimension).sum();
    if edim != result.embedding_dimension {
        return Err(SaturationError::Invariant(InvariantViolation::EmbeddingDimension {
            claimed: edim,
            actual: result.embedding_dimension,
        }));
    }
    Ok(result)
}

fn fold_product<'a>(mut it: impl Iterator<Item = &'a AffineSemigroup>) -> AffineSemigroup {
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, s| acc.product(s))
}

/// `T^s` for `T = ⟨N, β⟩`.
pub fn hyp_t_saturation(spec: &HypersurfaceSpec) -> Result<NumericalSemigroup, SaturationError> {
    Ok(numsg::saturate_generated(&[spec.big_n, spec.beta])?)
}

/// Membership formula for `Γ^s`: `N | b`, or `a ≥ α` and `b ∈ T^s`.
pub fn hyp_membership(spec: &HypersurfaceSpec, t_sat: &NumericalSemigroup, point: [u64; 2]) -> bool {
    let [a, b] = point;
    b % spec.big_n == 0 || (a >= spec.alpha && t_sat.contains(b))
}

/// Minimal generators `A ∪ B` of `Γ^s`, validated against the membership
/// formula on the default box.
pub fn hyp_min_generators(spec: &HypersurfaceSpec) -> Result<SaturationResult, SaturationError> {
    hyp_min_generators_in_box(spec, spec.validation_box())
}

pub fn hyp_min_generators_in_box(
    spec: &HypersurfaceSpec,
    bounds: [u64; 2],
) -> Result<SaturationResult, SaturationError> {
    let (alpha, beta, n) = (spec.alpha, spec.beta, spec.big_n);
    let mut gens: Vec<Vec<u64>> = vec![vec![1, 0], vec![alpha, beta], vec![0, n]];
    if beta == 1 {
        gens.extend((2..n).map(|j| vec![alpha, j]));
    } else if n < beta {
        let k = beta / n;
        gens.extend(
            (beta + 1..beta + n)
                .filter(|&b| b != (k + 1) * n)
                .map(|b| vec![alpha, b]),
        );
    } else {
        let k = n / beta;
        gens.extend((2..=k).map(|i| vec![alpha, i * beta]));
        gens.extend(
            (n + 1..2 * n)
                .filter(|&b| !(1..=k).any(|i| b == n + i * beta))
                .map(|b| vec![alpha, b]),
        );
    }
    let semigroup = AffineSemigroup::from_natural(2, gens.clone())?;
    let t_sat = hyp_t_saturation(spec)?;
    let table = semigroup.table(&bounds)?;
    for p in table.points() {
        if table.contains(&p) != Some(hyp_membership(spec, &t_sat, [p[0], p[1]])) {
            return Err(SaturationError::Invariant(InvariantViolation::FormulaMismatch(p)));
        }
    }
    let result =
        SaturationResult::from_semigroup(spec.semigroup(), semigroup, n, Vec::new())?;
    gens.sort();
    if result.min_gens != gens || result.embedding_dimension as u64 != n + 1 {
        return Err(SaturationError::Invariant(InvariantViolation::NonMinimal));
    }
    Ok(result)
}
