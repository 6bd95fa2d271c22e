//! Lipschitz saturation of toric singularities, computed on their semigroups.
//!
//! Everything here is exact integer / cyclotomic arithmetic and depends only
//! on `core` and `alloc`. IO, JSON and the command line live in the `lipsat`
//! companion crate.
//!
//! * [`numsg`]: numerical semigroups, characteristic exponents and the
//!   saturation of a plane branch.
//! * [`affsg`]: affine semigroups in `ℕ^d`, membership, minimal generators,
//!   the complement of the convex hull and the multiplicity.
//! * [`lipsat`]: the saturated semigroup for curves, products of curves and
//!   the hypersurfaces `y^N - x^{αN} z^β`.
//! * [`arccert`]: cyclotomic arithmetic and arc certificates of
//!   non-membership in the integral closure of the diagonal ideal.
//! * [`torideal`]: binomials of the toric ideal.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod affsg;
pub mod arccert;
pub mod lipsat;
pub mod numsg;
pub mod torideal;

pub use affsg::{AffineSemigroup, AffsgError, HullComplement, MembershipTable};
pub use arccert::{
    Arc, ArcError, CyclotomicField, CyclotomicNumber, DiagonalIdeal, NonMembershipCertificate,
    Order, TPoly,
};
pub use lipsat::{HypersurfaceSpec, MonomialCurve, SaturationError, SaturationResult};
pub use numsg::{CharExponents, NumericalSemigroup, NumsgError};
pub use torideal::{Binomial, LatticeRelation, ToricError};
