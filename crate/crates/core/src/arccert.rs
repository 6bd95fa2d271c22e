//! Arc certificates of non-membership in the integral closure of the
//! diagonal ideal `I_Δ = ⟨x^a − y^a : a a generator of Γ⟩`.
//!
//! For an arc `φ(t) = (x₁, x₂, y₁, y₂)` through the origin, if
//! `ord φ*(x^c − y^c) < ord φ*(I_Δ)` then `x^c − y^c` is not integral over
//! `I_Δ`, hence `u^c ∉ Γ^s`. Coefficients live in `ℚ(ζ_M)`, represented as
//! rational vectors modulo the cyclotomic polynomial `Φ_M`, so both orders
//! are computed exactly.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::affsg::AffineSemigroup;
use crate::lipsat::{self, HypersurfaceSpec, SaturationError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcError {
    ZeroOrder,
    EvenExponent(u64),
    /// Axis witness exponent is not admissible (zero, or divisible by `N`).
    BadExponent(u64),
    /// Point is outside the range the witness family covers.
    BadRange { a: u64, b: u64 },
    /// The point satisfies the membership formula, no arc can refute it.
    MemberPoint { a: u64, b: u64 },
    ConstantTerm { coordinate: usize },
    FieldMismatch { expected: u64, found: u64 },
    EmptyIdeal,
    NotPlanar(usize),
    InconclusiveArc { ord_target: Order, ord_ideal: Order },
    Saturation(SaturationError),
}

impl From<SaturationError> for ArcError {
    fn from(e: SaturationError) -> Self {
        ArcError::Saturation(e)
    }
}

impl fmt::Display for ArcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcError::ZeroOrder => write!(f, "cyclotomic order must be at least 1"),
            ArcError::EvenExponent(r) => write!(f, "exponent {r} must be odd and at least 3"),
            ArcError::BadExponent(k) => write!(f, "exponent {k} is not admissible for this witness"),
            ArcError::BadRange { a, b } => {
                write!(f, "point ({a},{b}) is outside the range of this witness family")
            }
            ArcError::MemberPoint { a, b } => {
                write!(f, "point ({a},{b}) belongs to the saturated semigroup")
            }
            ArcError::ConstantTerm { coordinate } => {
                write!(f, "arc coordinate {} does not vanish at t = 0", COORD_NAMES[*coordinate])
            }
            ArcError::FieldMismatch { expected, found } => {
                write!(f, "coefficient in Q(ζ_{found}) where Q(ζ_{expected}) was expected")
            }
            ArcError::EmptyIdeal => write!(f, "diagonal ideal needs at least one generator"),
            ArcError::NotPlanar(d) => write!(f, "diagonal ideals need dimension 2, got {d}"),
            ArcError::InconclusiveArc {
                ord_target,
                ord_ideal,
            } => write!(
                f,
                "arc is inconclusive: target order {ord_target} is not below ideal order {ord_ideal}"
            ),
            ArcError::Saturation(e) => e.fmt(f),
        }
    }
}

/// Order of a power series in `t`; the zero series has order `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "∞"),
        }
    }
}

/// `Φ_n`, coefficients from the constant term up.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // t^n - 1
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        let phi_d = cyclotomic_memo(d, memo);
        p = div_monic_exact(&p, &phi_d);
    }
    memo.insert(n, p.clone());
    p
}

fn div_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division by Φ_d is exact");
    quot
}

/// `ℚ(ζ_M)` as `ℚ[z] / Φ_M(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u64,
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Result<Self, ArcError> {
        if order == 0 {
            return Err(ArcError::ZeroOrder);
        }
        Ok(CyclotomicField {
            order,
            modulus: cyclotomic_poly(order),
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(M)`, the dimension over `ℚ`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduces an arbitrary polynomial in `ζ` to normal form.
    pub fn element(&self, mut coeffs: Vec<BigRational>) -> CyclotomicNumber {
        let deg = self.degree();
        for i in (deg..coeffs.len()).rev() {
            let c = core::mem::replace(&mut coeffs[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus[..deg].iter().enumerate() {
                if !m.is_zero() {
                    coeffs[i - deg + j] -= &c * m;
                }
            }
        }
        coeffs.resize(deg, BigRational::zero());
        CyclotomicNumber {
            order: self.order,
            coeffs,
        }
    }

    pub fn zero(&self) -> CyclotomicNumber {
        self.element(Vec::new())
    }

    pub fn integer(&self, n: i64) -> CyclotomicNumber {
        self.element(vec![BigRational::from_integer(BigInt::from(n))])
    }

    pub fn one(&self) -> CyclotomicNumber {
        self.integer(1)
    }

    /// `ζ^k`.
    pub fn zeta_pow(&self, k: u64) -> CyclotomicNumber {
        let k = (k % self.order) as usize;
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = BigRational::one();
        self.element(coeffs)
    }

    pub fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        debug_assert!(a.order == self.order && b.order == self.order);
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        // work over ℤ[ζ] with one common denominator; Φ_M is monic
        let (na, da) = integral(&a.coeffs);
        let (nb, db) = integral(&b.coeffs);
        let mut prod = vec![BigInt::zero(); na.len() + nb.len()];
        for (i, x) in na.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in nb.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                prod[i + j] += x * y;
            }
        }
        let deg = self.degree();
        for i in (deg..prod.len()).rev() {
            let c = core::mem::replace(&mut prod[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus[..deg].iter().enumerate() {
                if !m.is_zero() {
                    prod[i - deg + j] -= &c * m;
                }
            }
        }
        prod.truncate(deg);
        prod.resize(deg, BigInt::zero());
        let den = da * db;
        let coeffs = prod
            .into_iter()
            .map(|n| {
                if den.is_one() {
                    BigRational::from_integer(n)
                } else {
                    BigRational::new(n, den.clone())
                }
            })
            .collect();
        CyclotomicNumber {
            order: self.order,
            coeffs,
        }
    }

    pub fn contains(&self, x: &CyclotomicNumber) -> bool {
        x.order == self.order && x.coeffs.len() == self.degree()
    }
}

/// Numerators over a common denominator.
fn integral(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

/// An element of `ℚ(ζ_M)` in the basis `1, ζ, …, ζ^{φ(M)−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl ops::Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        assert_eq!(self.order, rhs.order, "adding elements of different fields");
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl ops::Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        assert_eq!(self.order, rhs.order, "subtracting elements of different fields");
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl ops::Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})ζ{}", self.order)?,
                _ => write!(f, "({c})ζ{}^{i}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `t` with cyclotomic coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    terms: BTreeMap<u64, CyclotomicNumber>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, CyclotomicNumber)>) -> Self {
        let mut p = TPoly::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// `c·t^d`.
    pub fn monomial(d: u64, c: CyclotomicNumber) -> Self {
        Self::from_terms([(d, c)])
    }

    fn add_term(&mut self, d: u64, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&d) {
            None => {
                self.terms.insert(d, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(d, s);
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<u64, CyclotomicNumber> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> Order {
        self.terms
            .keys()
            .next()
            .map_or(Order::Infinite, |&d| Order::Finite(d))
    }

    pub fn leading(&self) -> Option<&CyclotomicNumber> {
        self.terms.values().next()
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        let mut p = self.clone();
        for (&d, c) in &other.terms {
            p.add_term(d, -c);
        }
        p
    }

    /// Largest exponent present, `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn mul(&self, other: &TPoly, field: &CyclotomicField) -> TPoly {
        self.mul_trunc(other, field, u64::MAX)
    }

    /// Product modulo `t^prec`.
    pub fn mul_trunc(&self, other: &TPoly, field: &CyclotomicField, prec: u64) -> TPoly {
        let mut p = TPoly::zero();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in other.terms.range(..prec.saturating_sub(d1)) {
                p.add_term(d1 + d2, field.mul(c1, c2));
            }
        }
        p
    }

    pub fn pow(&self, e: u64, field: &CyclotomicField) -> TPoly {
        self.pow_trunc(e, field, u64::MAX)
    }

    /// Power modulo `t^prec`.
    pub fn pow_trunc(&self, mut e: u64, field: &CyclotomicField, prec: u64) -> TPoly {
        let mut acc = TPoly::monomial(0, field.one());
        let mut base = self.clone();
        base.terms.retain(|&d, _| d < prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_trunc(&base, field, prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(&base, field, prec);
            }
        }
        acc
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]t^{d}")?;
        }
        Ok(())
    }
}

pub const COORD_NAMES: [&str; 4] = ["x1", "x2", "y1", "y2"];

/// An arc `t ↦ (x₁(t), x₂(t), y₁(t), y₂(t))` through the origin of
/// `ℂ² × ℂ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    field: CyclotomicField,
    coords: [TPoly; 4],
}

impl Arc {
    pub fn new(field: CyclotomicField, coords: [TPoly; 4]) -> Result<Self, ArcError> {
        for (i, c) in coords.iter().enumerate() {
            if c.terms.contains_key(&0) {
                return Err(ArcError::ConstantTerm { coordinate: i });
            }
            if let Some(bad) = c.terms.values().find(|x| !field.contains(x)) {
                return Err(ArcError::FieldMismatch {
                    expected: field.order,
                    found: bad.order,
                });
            }
        }
        Ok(Arc { field, coords })
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// `[x₁, x₂, y₁, y₂]`.
    pub fn coordinates(&self) -> &[TPoly; 4] {
        &self.coords
    }

    /// `φ*(x^a − y^a) = x₁^{a₁} x₂^{a₂} − y₁^{a₁} y₂^{a₂}`.
    pub fn pullback(&self, a: [u64; 2]) -> TPoly {
        let f = &self.field;
        let [x1, x2, y1, y2] = &self.coords;
        let x = x1.pow(a[0], f).mul(&x2.pow(a[1], f), f);
        let y = y1.pow(a[0], f).mul(&y2.pow(a[1], f), f);
        x.sub(&y)
    }

    /// Order of [`Self::pullback`], computed with truncated series and a
    /// growing precision.
    pub fn pullback_order(&self, a: [u64; 2]) -> Order {
        let f = &self.field;
        let [x1, x2, y1, y2] = &self.coords;
        let side = |p: &TPoly, q: &TPoly| -> Option<(u64, u64)> {
            let ends = |r: &TPoly, e: u64| match (r.order(), r.degree()) {
                _ if e == 0 => Some((0, 0)),
                (Order::Finite(lo), Some(hi)) => Some((lo * e, hi * e)),
                _ => None,
            };
            let (l1, h1) = ends(p, a[0])?;
            let (l2, h2) = ends(q, a[1])?;
            Some((l1 + l2, h1 + h2))
        };
        if (a[0] == 0 || x1 == y1) && (a[1] == 0 || x2 == y2) {
            return Order::Infinite;
        }
        let (low, high) = match (side(x1, x2), side(y1, y2)) {
            (None, None) => return Order::Infinite,
            (Some((l, _)), None) | (None, Some((l, _))) => return Order::Finite(l),
            (Some((l1, h1)), Some((l2, h2))) => (l1.min(l2), h1.max(h2)),
        };
        let mut prec = low + 8;
        loop {
            let x = x1.pow_trunc(a[0], f, prec).mul_trunc(&x2.pow_trunc(a[1], f, prec), f, prec);
            let y = y1.pow_trunc(a[0], f, prec).mul_trunc(&y2.pow_trunc(a[1], f, prec), f, prec);
            let d = x.sub(&y);
            if !d.is_zero() {
                return d.order();
            }
            if prec > high {
                return Order::Infinite;
            }
            prec = low + 2 * (prec - low);
        }
    }

    /// Order of the principal ideal `⟨φ*(I_Δ)⟩`.
    pub fn ideal_order(&self, ideal: &DiagonalIdeal) -> Order {
        ideal
            .generators
            .iter()
            .map(|&g| self.pullback_order(g))
            .min()
            .unwrap_or(Order::Infinite)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t ↦ (")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `I_Δ = ⟨x^a − y^a⟩` over the generators `a` of a planar semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalIdeal {
    generators: Vec<[u64; 2]>,
}

impl DiagonalIdeal {
    pub fn new(generators: Vec<[u64; 2]>) -> Result<Self, ArcError> {
        if generators.is_empty() {
            return Err(ArcError::EmptyIdeal);
        }
        Ok(DiagonalIdeal { generators })
    }

    pub fn from_semigroup(s: &AffineSemigroup) -> Result<Self, ArcError> {
        if s.dim() != 2 {
            return Err(ArcError::NotPlanar(s.dim()));
        }
        Self::new(s.generators().iter().map(|g| [g[0], g[1]]).collect())
    }

    pub fn generators(&self) -> &[[u64; 2]] {
        &self.generators
    }
}

/// Self-contained evidence that `x^target − y^target ∉ \overline{I_Δ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonMembershipCertificate {
    pub arc: Arc,
    pub ideal: DiagonalIdeal,
    pub target: [u64; 2],
    pub ord_target: Order,
    pub ord_ideal: Order,
    /// `ord_target < ord_ideal`.
    pub verdict: bool,
}

impl NonMembershipCertificate {
    /// Computes both orders, whatever the verdict.
    pub fn evaluate(arc: Arc, target: [u64; 2], ideal: DiagonalIdeal) -> Self {
        let ord_target = arc.pullback_order(target);
        let ord_ideal = arc.ideal_order(&ideal);
        NonMembershipCertificate {
            arc,
            ideal,
            target,
            ord_target,
            ord_ideal,
            verdict: ord_target < ord_ideal,
        }
    }

    /// Recomputes both orders from the arc and ideal alone and compares them
    /// with the recorded ones.
    pub fn verify(&self) -> bool {
        let ord_target = self.arc.pullback_order(self.target);
        let ord_ideal = self.arc.ideal_order(&self.ideal);
        ord_target == self.ord_target
            && ord_ideal == self.ord_ideal
            && self.verdict == (ord_target < ord_ideal)
    }
}

/// A certificate with a positive verdict, or [`ArcError::InconclusiveArc`].
pub fn certify_nonmembership(
    arc: Arc,
    target: [u64; 2],
    ideal: DiagonalIdeal,
) -> Result<NonMembershipCertificate, ArcError> {
    let cert = NonMembershipCertificate::evaluate(arc, target, ideal);
    if cert.verdict {
        Ok(cert)
    } else {
        Err(ArcError::InconclusiveArc {
            ord_target: cert.ord_target,
            ord_ideal: cert.ord_ideal,
        })
    }
}

fn build_arc(
    field: CyclotomicField,
    coords: [Vec<(u64, CyclotomicNumber)>; 4],
) -> Result<Arc, ArcError> {
    let coords = coords.map(TPoly::from_terms);
    Arc::new(field, coords)
}

/// `t ↦ (t^{r+1}, t, t^{r+2}, −t)` for the Whitney umbrella, `r` odd.
pub fn wu_witness(r: u64) -> Result<Arc, ArcError> {
    if r < 3 || r % 2 == 0 {
        return Err(ArcError::EvenExponent(r));
    }
    let f = CyclotomicField::new(2)?;
    let one = f.one();
    build_arc(
        f.clone(),
        [
            vec![(r + 1, one.clone())],
            vec![(1, one.clone())],
            vec![(r + 2, one)],
            vec![(1, f.zeta_pow(1))],
        ],
    )
}

/// `t ↦ (t^{k+1}, t, t^{k+2}, θt)` with `θ = ζ_N`, certifying `(0, k)`.
///
/// Any `k ≥ 1` with `N ∤ k` works: the ideal pulls back to `⟨t^{k+1}⟩` and
/// the target to `(1 − θ^k)t^k`.
pub fn hyp_witness_axis(spec: &HypersurfaceSpec, k: u64) -> Result<Arc, ArcError> {
    hyp_witness_axis_with_root(spec, k, 1)
}

/// Axis witness with `θ = ζ_N^j` for `j` coprime to `N`.
pub fn hyp_witness_axis_with_root(
    spec: &HypersurfaceSpec,
    k: u64,
    root_power: u64,
) -> Result<Arc, ArcError> {
    let n = spec.big_n();
    if k == 0 || k % n == 0 {
        return Err(ArcError::BadExponent(k));
    }
    if root_power.gcd(&n) != 1 {
        return Err(ArcError::BadExponent(root_power));
    }
    let f = CyclotomicField::new(n)?;
    let one = f.one();
    build_arc(
        f.clone(),
        [
            vec![(k + 1, one.clone())],
            vec![(1, one.clone())],
            vec![(k + 2, one)],
            vec![(1, f.zeta_pow(root_power))],
        ],
    )
}

/// `t ↦ (t^{b+1}, t, t^{b+1} + t^r, θt)` with `r = α(b+1) + β`,
/// certifying `(a, b)` for `0 < a < α`, `N ∤ b`.
pub fn hyp_witness_interior(spec: &HypersurfaceSpec, a: u64, b: u64) -> Result<Arc, ArcError> {
    let n = spec.big_n();
    if a == 0 || a >= spec.alpha() || b % n == 0 {
        return Err(ArcError::BadRange { a, b });
    }
    let r = spec.alpha() * (b + 1) + spec.beta();
    let f = CyclotomicField::new(n)?;
    let one = f.one();
    build_arc(
        f.clone(),
        [
            vec![(b + 1, one.clone())],
            vec![(1, one.clone())],
            vec![(b + 1, one.clone()), (r, one)],
            vec![(1, f.zeta_pow(1))],
        ],
    )
}

/// Witness for `(a, b)` with `a ≥ α`, `N ∤ b`, `b ∉ T^s`.
///
/// The arc `t ↦ (t, t^e, t, ρ(t^e + t^{e+s}))` keeps `x₁ = y₁` and restricts
/// to the branch `⟨N, β⟩`. When `N < β`, `ρ = ζ_N` kills the leading term of
/// `x₂^N − y₂^N`; when `β < N`, `ρ = ζ_β` kills that of `x₂^β − y₂^β`. The
/// exponents `e` and `s` are the least ones that put the target strictly
/// below the ideal.
pub fn hyp_witness_fiber(spec: &HypersurfaceSpec, a: u64, b: u64) -> Result<Arc, ArcError> {
    let (alpha, beta, n) = (spec.alpha(), spec.beta(), spec.big_n());
    let t_sat = lipsat::hyp_t_saturation(spec)?;
    if a < alpha || b % n == 0 || t_sat.contains(b) {
        return Err(ArcError::BadRange { a, b });
    }
    // target order a + e·b
    let (root, e, s) = if n < beta {
        // b < β here; ideal order min(α + eβ, eN + s)
        let e = (a - alpha) / (beta - b) + 1;
        let s = (a + e * b + 1).saturating_sub(e * n).max(1);
        (n, e, s)
    } else {
        // b < N and β ∤ b; ideal order min(α + eβ + s, eN)
        let e = a / (n - b) + 1;
        let s = (a + e * b + 1).saturating_sub(alpha + e * beta).max(1);
        (beta, e, s)
    };
    let f = CyclotomicField::new(root)?;
    let one = f.one();
    let rho = f.zeta_pow(1);
    build_arc(
        f.clone(),
        [
            vec![(1, one.clone())],
            vec![(e, one.clone())],
            vec![(1, one)],
            vec![(e, rho.clone()), (e + s, rho)],
        ],
    )
}

/// Which witness family produced an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessFamily {
    Axis,
    Interior,
    Fiber,
}

impl WitnessFamily {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessFamily::Axis => "axis",
            WitnessFamily::Interior => "interior",
            WitnessFamily::Fiber => "fiber",
        }
    }
}

/// Picks the witness family for a point rejected by the membership formula.
pub fn hyp_witness(
    spec: &HypersurfaceSpec,
    point: [u64; 2],
) -> Result<(WitnessFamily, Arc), ArcError> {
    let [a, b] = point;
    let t_sat = lipsat::hyp_t_saturation(spec)?;
    if lipsat::hyp_membership(spec, &t_sat, point) {
        return Err(ArcError::MemberPoint { a, b });
    }
    if a == 0 {
        Ok((WitnessFamily::Axis, hyp_witness_axis(spec, b)?))
    } else if a < spec.alpha() {
        Ok((WitnessFamily::Interior, hyp_witness_interior(spec, a, b)?))
    } else {
        Ok((WitnessFamily::Fiber, hyp_witness_fiber(spec, a, b)?))
    }
}

/// Certificate that `u^a v^b ∉ O^s` for a hypersurface.
pub fn hyp_certificate(
    spec: &HypersurfaceSpec,
    point: [u64; 2],
) -> Result<(WitnessFamily, NonMembershipCertificate), ArcError> {
    let (family, arc) = hyp_witness(spec, point)?;
    let ideal = DiagonalIdeal::from_semigroup(&spec.semigroup())?;
    Ok((family, certify_nonmembership(arc, point, ideal)?))
}
