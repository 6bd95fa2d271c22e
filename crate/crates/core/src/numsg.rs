//! Numerical semigroups of `ℕ` and the saturation of plane branches.
//!
//! A [`NumericalSemigroup`] is stored by its minimal generators, its conductor
//! and a membership table below the conductor. Everything at or above the
//! conductor is a member, so membership is a single lookup.
//!
//! The saturation procedure starts from the characteristic exponents
//! `β₀ < β₁ < … < β_g` of a branch and adds, for each `j`, the arithmetic
//! progression `β_j + e_j·ℕ` where `e_j` is the running gcd. The result is
//! the smallest saturated numerical semigroup containing the exponents.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

/// Largest table the constructors are willing to materialise.
pub const MAX_SCAN: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumsgError {
    EmptyGenerators,
    ZeroGenerator,
    NonCoprime { gcd: u64 },
    /// The exponent support was exhausted before the gcd chain reached 1.
    GcdNotOne { gcd: u64 },
    InvalidExponents(&'static str),
    /// A materialised element set failed closure under addition.
    NotClosed { a: u64, b: u64 },
    NotSaturated { element: u64 },
    TooLarge { bound: u64 },
}

impl fmt::Display for NumsgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumsgError::EmptyGenerators => write!(f, "empty generator list"),
            NumsgError::ZeroGenerator => write!(f, "generators must be positive"),
            NumsgError::NonCoprime { gcd } => {
                write!(f, "generators have gcd {gcd}, expected 1")
            }
            NumsgError::GcdNotOne { gcd } => write!(
                f,
                "exponent support exhausted with gcd {gcd}; parametrization is not reduced"
            ),
            NumsgError::InvalidExponents(why) => write!(f, "invalid exponents: {why}"),
            NumsgError::NotClosed { a, b } => {
                write!(f, "element set not closed: {a} + {b} missing")
            }
            NumsgError::NotSaturated { element } => {
                write!(f, "semigroup not saturated at {element}")
            }
            NumsgError::TooLarge { bound } => {
                write!(f, "semigroup table of size {bound} exceeds the scan limit")
            }
        }
    }
}

/// A sub-semigroup of `ℕ` with finite complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    conductor: u64,
    // membership for 0..conductor
    below: Vec<bool>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`.
    pub fn new(gens: &[u64]) -> Result<Self, NumsgError> {
        if gens.is_empty() {
            return Err(NumsgError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(NumsgError::ZeroGenerator);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(NumsgError::NonCoprime { gcd: g });
        }
        let m = gens[0];
        let big = *gens.last().unwrap();
        // Schur: the Frobenius number is at most (m-1)(M-1)-1.
        let bound = (m - 1)
            .checked_mul(big - 1)
            .and_then(|x| x.checked_add(big + 1))
            .filter(|&b| b <= MAX_SCAN)
            .ok_or(NumsgError::TooLarge { bound: u64::MAX })?;
        let mut member = vec![false; bound as usize];
        member[0] = true;
        for n in 1..bound as usize {
            member[n] = gens
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| member[n - g as usize]);
        }
        Ok(Self::from_membership(member))
    }

    /// The whole of `ℕ`.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            conductor: 0,
            below: Vec::new(),
        }
    }

    /// Packages a membership table for `0..member.len()`; every integer at or
    /// above `member.len()` is taken to be a member.
    fn from_membership(member: Vec<bool>) -> Self {
        let conductor = member.iter().rposition(|&x| !x).map_or(0, |i| i + 1);
        let mut below = member;
        below.truncate(conductor);
        let mut s = NumericalSemigroup {
            generators: Vec::new(),
            conductor: conductor as u64,
            below,
        };
        s.generators = s.compute_min_generators();
        s
    }

    fn compute_min_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        // Minimal generators lie below conductor + multiplicity.
        (1..self.conductor + m + 1)
            .filter(|&s| self.contains(s))
            .filter(|&s| !(m..=s / 2).any(|x| self.contains(x) && self.contains(s - x)))
            .collect()
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.conductor || self.below[n as usize]
    }

    /// Least `c` with `c + ℕ ⊆ S`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, `None` for `ℕ`.
    pub fn frobenius(&self) -> Option<u64> {
        self.conductor.checked_sub(1)
    }

    /// Elements smaller than the conductor, in increasing order.
    pub fn small_elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.below
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64)
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.below
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i as u64)
            .collect()
    }

    /// The unique minimal generating set, ascending.
    pub fn min_generators(&self) -> &[u64] {
        &self.generators
    }

    /// Least nonzero element.
    pub fn multiplicity(&self) -> u64 {
        (1..=self.conductor)
            .find(|&n| self.contains(n))
            .unwrap_or(1)
    }

    /// `true` iff `s + d_S(s) ∈ S` for every nonzero `s ∈ S`, where `d_S(s)`
    /// is the gcd of the nonzero elements of `S` that are at most `s`.
    pub fn is_saturated(&self) -> bool {
        self.first_unsaturated().is_none()
    }

    fn first_unsaturated(&self) -> Option<u64> {
        let top = self.conductor + self.generators.last().copied().unwrap_or(1);
        let mut d = 0u64;
        for s in 1..=top {
            if !self.contains(s) {
                continue;
            }
            d = d.gcd(&s);
            if !self.contains(s + d) {
                return Some(s);
            }
        }
        None
    }

    /// Checks that the elements below the conductor are closed under sums.
    fn check_closed(&self) -> Result<(), NumsgError> {
        let small: Vec<u64> = self.small_elements().filter(|&x| x > 0).collect();
        for (i, &a) in small.iter().enumerate() {
            for &b in &small[i..] {
                if !self.contains(a + b) {
                    return Err(NumsgError::NotClosed { a, b });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Characteristic exponents `β₀ < … < β_g` with their gcd chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharExponents {
    betas: Vec<u64>,
    gcd_chain: Vec<u64>,
}

impl CharExponents {
    /// Validates a list of characteristic exponents.
    pub fn new(betas: Vec<u64>) -> Result<Self, NumsgError> {
        let Some(&first) = betas.first() else {
            return Err(NumsgError::InvalidExponents("empty"));
        };
        if first == 0 {
            return Err(NumsgError::InvalidExponents("β₀ must be positive"));
        }
        let mut chain = vec![first];
        for w in betas.windows(2) {
            if w[1] <= w[0] {
                return Err(NumsgError::InvalidExponents("not strictly increasing"));
            }
            let e = *chain.last().unwrap();
            if w[1] % e == 0 {
                return Err(NumsgError::InvalidExponents(
                    "exponent divisible by the current gcd",
                ));
            }
            chain.push(e.gcd(&w[1]));
        }
        let last = *chain.last().unwrap();
        if last != 1 {
            return Err(NumsgError::GcdNotOne { gcd: last });
        }
        Ok(CharExponents {
            betas,
            gcd_chain: chain,
        })
    }

    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    /// `e₀ = β₀`, `e_{j+1} = gcd(e_j, β_{j+1})`.
    pub fn gcd_chain(&self) -> &[u64] {
        &self.gcd_chain
    }

    pub fn multiplicity(&self) -> u64 {
        self.betas[0]
    }
}

/// Extracts characteristic exponents from the multiplicity `m` and the
/// remaining exponents of a (generic plane model of a) branch.
pub fn char_exponents(m: u64, support: &[u64]) -> Result<CharExponents, NumsgError> {
    if m == 0 {
        return Err(NumsgError::InvalidExponents("multiplicity must be positive"));
    }
    if support.windows(2).any(|w| w[0] >= w[1]) {
        return Err(NumsgError::InvalidExponents("support must be strictly increasing"));
    }
    if support.first().is_some_and(|&s| s <= m) {
        return Err(NumsgError::InvalidExponents("support must exceed the multiplicity"));
    }
    let mut betas = vec![m];
    let mut e = m;
    for &s in support {
        if e == 1 {
            break;
        }
        if s % e != 0 {
            betas.push(s);
            e = e.gcd(&s);
        }
    }
    if e != 1 {
        return Err(NumsgError::GcdNotOne { gcd: e });
    }
    CharExponents::new(betas)
}

/// The smallest saturated numerical semigroup containing the exponents.
pub fn saturate_chars(chars: &CharExponents) -> Result<NumericalSemigroup, NumsgError> {
    let betas = chars.betas();
    let b0 = betas[0];
    let bg = *betas.last().unwrap();
    let bound = b0
        .checked_mul(b0)
        .map(|sq| sq.max(bg))
        .and_then(|x| x.checked_mul(2))
        .and_then(|x| x.checked_add(bg))
        .filter(|&b| b <= MAX_SCAN)
        .ok_or(NumsgError::TooLarge { bound: u64::MAX })?;
    let mut member = vec![false; bound as usize];
    for n in (0..bound).step_by(b0 as usize) {
        member[n as usize] = true;
    }
    for (&beta, &e) in betas.iter().zip(chars.gcd_chain()).skip(1) {
        for n in (beta..bound).step_by(e as usize) {
            member[n as usize] = true;
        }
    }
    let s = NumericalSemigroup::from_membership(member);
    s.check_closed()?;
    if let Some(element) = s.first_unsaturated() {
        return Err(NumsgError::NotSaturated { element });
    }
    Ok(s)
}

/// Saturation of the semigroup generated by `gens`: the sorted generators
/// are read as a branch with multiplicity `min(gens)`.
pub fn saturate_generated(gens: &[u64]) -> Result<NumericalSemigroup, NumsgError> {
    let mut gens = gens.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let (&m, rest) = gens.split_first().ok_or(NumsgError::EmptyGenerators)?;
    saturate_chars(&char_exponents(m, rest)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// All sums of generators up to `limit`, by plain enumeration.
    fn enumerate(gens: &[u64], limit: u64) -> BTreeSet<u64> {
        let mut reached = BTreeSet::from([0u64]);
        let mut frontier = vec![0u64];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x + g;
                if y <= limit && reached.insert(y) {
                    frontier.push(y);
                }
            }
        }
        reached
    }

    #[test]
    fn naturals_from_one() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.min_generators(), &[1]);
        assert!(s.gaps().is_empty());
        assert_eq!(s.multiplicity(), 1);
        assert!(s.is_saturated());
        assert_eq!(s, NumericalSemigroup::naturals());
    }

    #[test]
    fn five_eleven() {
        let s = NumericalSemigroup::new(&[5, 11]).unwrap();
        let oracle = enumerate(&[5, 11], 60);
        let gaps: Vec<u64> = (0..=60).filter(|n| !oracle.contains(n)).collect();
        assert_eq!(gaps.len(), 20);
        assert_eq!(s.gaps(), gaps);
        assert_eq!(s.conductor(), 40);
        assert_eq!(s.frobenius(), Some(39));
        assert!(s.contains(16));
        assert!(!s.contains(13));
        assert!(s.contains(0));
        assert_eq!(s.multiplicity(), 5);
        // s = 11 has d = 1 but 12 is a gap
        assert!(!s.is_saturated());
    }

    #[test]
    fn six_nine_eleven_closure() {
        let s = NumericalSemigroup::new(&[6, 9, 11, 13, 14, 16]).unwrap();
        let oracle = enumerate(&[6, 9, 11, 13, 14, 16], 60);
        let c = (0..=60u64).rev().find(|n| !oracle.contains(n)).unwrap() + 1;
        assert_eq!(c, 11);
        assert_eq!(s.conductor(), 11);
    }

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        let t = saturate_chars(&CharExponents::new(vec![2, 3]).unwrap()).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(NumericalSemigroup::new(&[]), Err(NumsgError::EmptyGenerators));
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]),
            Err(NumsgError::NonCoprime { gcd: 2 })
        );
        assert_eq!(NumericalSemigroup::new(&[0, 1]), Err(NumsgError::ZeroGenerator));
    }

    #[test]
    fn char_exponent_examples() {
        assert_eq!(char_exponents(6, &[9, 11]).unwrap().betas(), &[6, 9, 11]);
        assert_eq!(char_exponents(6, &[9, 11]).unwrap().gcd_chain(), &[6, 3, 1]);
        assert_eq!(char_exponents(4, &[6, 7]).unwrap().betas(), &[4, 6, 7]);
        assert_eq!(char_exponents(1, &[]).unwrap().betas(), &[1]);
        // multiples of the running gcd are skipped
        assert_eq!(char_exponents(4, &[8, 10, 12, 13]).unwrap().betas(), &[4, 10, 13]);
        assert_eq!(
            char_exponents(4, &[6, 8]),
            Err(NumsgError::GcdNotOne { gcd: 2 })
        );
        assert!(CharExponents::new(vec![4, 8, 9]).is_err());
        assert!(CharExponents::new(vec![6, 4, 5]).is_err());
    }

    #[test]
    fn saturation_examples() {
        let s = saturate_chars(&char_exponents(6, &[9, 11]).unwrap()).unwrap();
        assert_eq!(s.min_generators(), &[6, 9, 11, 13, 14, 16]);
        assert_eq!(s.multiplicity(), 6);
        assert!(s.is_saturated());

        let s = saturate_chars(&char_exponents(4, &[6, 7]).unwrap()).unwrap();
        assert_eq!(s.min_generators(), &[4, 6, 7, 9]);

        let s = saturate_generated(&[11, 5]).unwrap();
        assert_eq!(s.min_generators(), &[5, 11, 12, 13, 14]);

        let s = saturate_generated(&[1, 2]).unwrap();
        assert_eq!(s, NumericalSemigroup::naturals());
    }

    #[test]
    fn min_generators_regenerate() {
        for gens in [&[5u64, 11][..], &[6, 9, 11, 13, 14, 16], &[4, 6, 7, 9], &[3, 7]] {
            let s = NumericalSemigroup::new(gens).unwrap();
            let t = NumericalSemigroup::new(s.min_generators()).unwrap();
            assert_eq!(s, t);
        }
    }
}
