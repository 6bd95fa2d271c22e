//! Binomials of the toric ideal `I_Γ = ⟨z^α − z^β : π(α) = π(β)⟩`, where
//! `π` sends an exponent vector to the matching combination of generators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::affsg::{AffineSemigroup, MAX_CELLS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToricError {
    /// A binomial does not have one exponent per generator.
    IndexOutOfRange { expected: usize, found: usize },
    BudgetExceeded,
    Overflow,
}

impl fmt::Display for ToricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToricError::IndexOutOfRange { expected, found } => write!(
                f,
                "binomial has {found} exponents but the semigroup has {expected} generators"
            ),
            ToricError::BudgetExceeded => {
                write!(f, "fiber enumeration exceeds the budget of {MAX_CELLS} cells")
            }
            ToricError::Overflow => write!(f, "integer overflow during lattice reduction"),
        }
    }
}

/// An integer vector `u` with `A·u = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticeRelation {
    vector: Vec<i64>,
}

impl LatticeRelation {
    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    pub fn positive_part(&self) -> Vec<u64> {
        self.vector.iter().map(|&x| x.max(0) as u64).collect()
    }

    pub fn negative_part(&self) -> Vec<u64> {
        self.vector.iter().map(|&x| (-x).max(0) as u64).collect()
    }

    pub fn binomial(&self) -> Binomial {
        Binomial::new(self.positive_part(), self.negative_part())
    }
}

/// `z^lead − z^trail`, with the lexicographically larger exponent first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    lead: Vec<u64>,
    trail: Vec<u64>,
}

impl Binomial {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Self {
        if a >= b {
            Binomial { lead: a, trail: b }
        } else {
            Binomial { lead: b, trail: a }
        }
    }

    pub fn lead(&self) -> &[u64] {
        &self.lead
    }

    pub fn trail(&self) -> &[u64] {
        &self.trail
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.lead)?;
        write!(f, " - ")?;
        write_monomial(f, &self.trail)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[u64]) -> fmt::Result {
    let mut first = true;
    for (i, &x) in e.iter().enumerate().filter(|(_, &x)| x > 0) {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if x == 1 {
            write!(f, "z{}", i + 1)?;
        } else {
            write!(f, "z{}^{x}", i + 1)?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

fn image(s: &AffineSemigroup, u: &[u64]) -> Vec<u64> {
    let mut v = vec![0u64; s.dim()];
    for (g, &c) in s.generators().iter().zip(u) {
        for (vi, gi) in v.iter_mut().zip(g) {
            *vi += c * gi;
        }
    }
    v
}

/// A ℤ-basis of `ker A`, where the columns of `A` are the generators.
///
/// Unimodular column operations bring `A` to echelon form while the same
/// operations are applied to the identity; the columns of the transformed
/// identity sitting over zero columns span the kernel. Each basis vector is
/// primitive with its first nonzero entry positive.
pub fn lattice_kernel(s: &AffineSemigroup) -> Result<Vec<LatticeRelation>, ToricError> {
    let n = s.generators().len();
    let d = s.dim();
    // cols[j] = (A column j, U column j)
    let mut cols: Vec<(Vec<i128>, Vec<i128>)> = s
        .generators()
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let mut e = vec![0i128; n];
            e[j] = 1;
            (g.iter().map(|&x| x as i128).collect(), e)
        })
        .collect();

    let mut pivot = 0;
    for row in 0..d {
        if pivot == n {
            break;
        }
        loop {
            // smallest nonzero entry of this row among the unreduced columns
            let best = (pivot..n)
                .filter(|&j| cols[j].0[row] != 0)
                .min_by_key(|&j| cols[j].0[row].unsigned_abs());
            let Some(best) = best else { break };
            cols.swap(pivot, best);
            let mut done = true;
            for j in pivot + 1..n {
                let q = Integer::div_floor(&cols[j].0[row], &cols[pivot].0[row]);
                if q != 0 {
                    let (p_a, p_u) = cols[pivot].clone();
                    axpy(&mut cols[j].0, -q, &p_a)?;
                    axpy(&mut cols[j].1, -q, &p_u)?;
                }
                if cols[j].0[row] != 0 {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }

    let mut basis = Vec::new();
    for (_, u) in &cols[pivot..] {
        let g = u.iter().fold(0i128, |acc, x| acc.gcd(x));
        let sign = if u.iter().find(|&&x| x != 0).copied().unwrap_or(0) < 0 {
            -1
        } else {
            1
        };
        let vector = u
            .iter()
            .map(|&x| i64::try_from(sign * x / g).map_err(|_| ToricError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        basis.push(LatticeRelation { vector });
    }
    Ok(basis)
}

fn axpy(y: &mut [i128], a: i128, x: &[i128]) -> Result<(), ToricError> {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi = a
            .checked_mul(*xi)
            .and_then(|p| yi.checked_add(p))
            .ok_or(ToricError::Overflow)?;
    }
    Ok(())
}

/// Does every binomial satisfy `π(lead) = π(trail)`?
pub fn verify_vanishing(binomials: &[Binomial], s: &AffineSemigroup) -> Result<bool, ToricError> {
    let n = s.generators().len();
    for b in binomials {
        for e in [&b.lead, &b.trail] {
            if e.len() != n {
                return Err(ToricError::IndexOutOfRange {
                    expected: n,
                    found: e.len(),
                });
            }
        }
    }
    Ok(binomials
        .iter()
        .all(|b| image(s, &b.lead) == image(s, &b.trail)))
}

/// A fiber `π⁻¹(v)` with its members in lexicographic order.
struct Fiber {
    members: Vec<Vec<u64>>,
}

/// Moves connecting every fiber `π⁻¹(v)` with `v = π(u)`, `|u| ≤ degree_bound`.
///
/// Fibers are processed by increasing `|v|`; whenever the current moves leave
/// a fiber disconnected a move joining two components is added. The set is
/// then pruned greedily: a move is dropped whenever every fiber stays
/// connected without it.
pub fn degree_bounded_generators(
    s: &AffineSemigroup,
    degree_bound: u64,
) -> Result<Vec<Binomial>, ToricError> {
    let n = s.generators().len();
    // number of monomials of degree ≤ D in n variables is C(n + D, n)
    let mut count: u64 = 1;
    for i in 1..=n as u64 {
        count = count
            .checked_mul(degree_bound + i)
            .map(|c| c / i)
            .filter(|&c| c <= MAX_CELLS)
            .ok_or(ToricError::BudgetExceeded)?;
    }
    let mut budget = MAX_CELLS;
    let mut images: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut u = vec![0u64; n];
    enumerate_monomials(s, &mut u, 0, degree_bound, &mut images, &mut budget)?;

    let mut keyed: Vec<(u64, Vec<u64>)> = images.into_iter().map(|v| (v.iter().sum(), v)).collect();
    keyed.sort();
    let mut fibers = Vec::new();
    for (_, v) in keyed {
        let mut members = Vec::new();
        let mut u = vec![0u64; n];
        enumerate_fiber(s, &v, 0, &mut u, &mut members, &mut budget)?;
        if members.len() > 1 {
            members.sort();
            fibers.push(Fiber { members });
        }
    }

    let mut moves: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    for fiber in &fibers {
        let comps = components(fiber, &moves);
        let root_of_first = comps[0];
        let mut joined: BTreeSet<usize> = BTreeSet::from([root_of_first]);
        for (i, &c) in comps.iter().enumerate() {
            if joined.insert(c) {
                moves.push(cancel(&fiber.members[0], &fiber.members[i]));
            }
        }
    }

    let mut i = moves.len();
    while i > 0 {
        i -= 1;
        let removed = moves.remove(i);
        let still = fibers
            .iter()
            .all(|f| components(f, &moves).iter().all(|&c| c == 0));
        if !still {
            moves.insert(i, removed);
        }
    }

    let mut out: Vec<Binomial> = moves.into_iter().map(|(a, b)| Binomial::new(a, b)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn enumerate_monomials(
    s: &AffineSemigroup,
    u: &mut Vec<u64>,
    i: usize,
    remaining: u64,
    images: &mut BTreeSet<Vec<u64>>,
    budget: &mut u64,
) -> Result<(), ToricError> {
    if i == u.len() {
        *budget = budget.checked_sub(1).ok_or(ToricError::BudgetExceeded)?;
        images.insert(image(s, u));
        return Ok(());
    }
    for c in 0..=remaining {
        u[i] = c;
        enumerate_monomials(s, u, i + 1, remaining - c, images, budget)?;
    }
    u[i] = 0;
    Ok(())
}

fn enumerate_fiber(
    s: &AffineSemigroup,
    rest: &[u64],
    i: usize,
    u: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    budget: &mut u64,
) -> Result<(), ToricError> {
    *budget = budget.checked_sub(1).ok_or(ToricError::BudgetExceeded)?;
    if i == u.len() {
        if rest.iter().all(|&x| x == 0) {
            out.push(u.clone());
        }
        return Ok(());
    }
    let g = &s.generators()[i];
    let max = g
        .iter()
        .zip(rest)
        .filter(|(&gi, _)| gi > 0)
        .map(|(&gi, &r)| r / gi)
        .min()
        .expect("generators are nonzero");
    for c in 0..=max {
        u[i] = c;
        let next: Vec<u64> = rest.iter().zip(g).map(|(&r, &gi)| r - c * gi).collect();
        enumerate_fiber(s, &next, i + 1, u, out, budget)?;
    }
    u[i] = 0;
    Ok(())
}

fn cancel(a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let m = x.min(y);
            (x - m, y - m)
        })
        .unzip()
}

/// Component label of each fiber member; labels are the least member index
/// of the component.
fn components(fiber: &Fiber, moves: &[(Vec<u64>, Vec<u64>)]) -> Vec<usize> {
    let index: BTreeMap<&[u64], usize> = fiber
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let mut parent: Vec<usize> = (0..fiber.members.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, u) in fiber.members.iter().enumerate() {
        for (from, to) in moves {
            if u.iter().zip(from).all(|(x, f)| x >= f) {
                let w: Vec<u64> = u
                    .iter()
                    .zip(from)
                    .zip(to)
                    .map(|((x, f), t)| x - f + t)
                    .collect();
                if let Some(&j) = index.get(w.as_slice()) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    let (lo, hi) = (ri.min(rj), ri.max(rj));
                    parent[hi] = lo;
                }
            }
        }
    }
    (0..parent.len()).map(|i| find(&mut parent, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wu() -> AffineSemigroup {
        AffineSemigroup::new(2, [[1, 0], [1, 1], [0, 2]]).unwrap()
    }

    #[test]
    fn kernels() {
        let k = lattice_kernel(&wu()).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].vector(), &[2, -2, 1]);
        assert_eq!(k[0].binomial(), Binomial::new(vec![0, 2, 0], vec![2, 0, 1]));

        let hyp = AffineSemigroup::new(2, [[1, 0], [3, 11], [0, 5]]).unwrap();
        let k = lattice_kernel(&hyp).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].vector(), &[15, -5, 11]);

        assert!(lattice_kernel(&AffineSemigroup::orthant(2)).unwrap().is_empty());
    }

    #[test]
    fn binomial_display() {
        let b = lattice_kernel(&wu()).unwrap()[0].binomial();
        assert_eq!(alloc::format!("{b}"), "z1^2*z3 - z2^2");
    }

    #[test]
    fn vanishing() {
        let s = wu();
        assert!(!verify_vanishing(&[Binomial::new(vec![1, 0, 0], vec![0, 1, 0])], &s).unwrap());
        let k: Vec<Binomial> = lattice_kernel(&s).unwrap().iter().map(|r| r.binomial()).collect();
        assert!(verify_vanishing(&k, &s).unwrap());
        assert_eq!(
            verify_vanishing(&[Binomial::new(vec![1, 0], vec![0, 1])], &s),
            Err(ToricError::IndexOutOfRange { expected: 3, found: 2 })
        );
    }

    #[test]
    fn fiber_moves() {
        let m = degree_bounded_generators(&wu(), 4).unwrap();
        assert_eq!(m, vec![Binomial::new(vec![2, 0, 1], vec![0, 2, 0])]);
        assert!(degree_bounded_generators(&AffineSemigroup::orthant(2), 5)
            .unwrap()
            .is_empty());
        // twisted cubic: three quadrics
        let cubic = AffineSemigroup::new(2, [[3, 0], [2, 1], [1, 2], [0, 3]]).unwrap();
        let m = degree_bounded_generators(&cubic, 4).unwrap();
        assert_eq!(m.len(), 3);
        assert!(verify_vanishing(&m, &cubic).unwrap());
    }

    #[test]
    fn budget() {
        let s = AffineSemigroup::numerical(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(degree_bounded_generators(&s, 40), Err(ToricError::BudgetExceeded));
    }
}
