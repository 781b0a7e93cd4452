//! Universal secondary invariants and the Cohen-Macaulay deficiency of
//! permutation (and signed-permutation) invariant rings over the integers.
//!
//! The pipeline is:
//!
//! 1. [`perm`] enumerates the group `G` and the ambient reflection group `Σ`.
//! 2. [`frame`] fixes coset representatives of `G` in `Σ`, the hyperplane
//!    orbits and the exponents of the `G`-discriminant `Δ(G)`.
//! 3. [`hilbert`] derives the degrees of the secondary invariants.
//! 4. [`secondary`] builds a universal set of secondaries with a greedy
//!    Smith-normal-form selection at an evaluation point.
//! 5. [`deficiency`] computes the deficiency `℧(G)` and the primes for
//!    which the invariant ring over `F_p` fails to be Cohen-Macaulay.
//! 6. [`modp`] independently checks good/bad verdicts by linear algebra
//!    over `F_p`.

pub mod analysis;
pub mod deficiency;
pub mod error;
pub mod frame;
pub mod hilbert;
pub mod linalg;
pub mod modp;
pub mod orbit;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod secondary;

pub use error::{Error, Result};
