//! Reduction of `ρ : ⊕_j ℤ[V]^Σ·θ_j → ℤ[V]^G` modulo a prime.
//!
//! In degree `d` the source is spanned by the products of `θ_j` with the
//! `Σ`-orbit sums of degree `d - a_j`, the target `F_p[V]^G_d` by the reduced
//! `G`-orbit sums. In characteristic 2 signs act trivially, so for a signed
//! group the target is spanned by the orbit sums of its unsigned image and
//! can be larger than the reduction of `ℤ[V]^G`. A prime is good when the
//! reduced map is bijective in every degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{AmbientFrame, AmbientKind};
use crate::hilbert::goebel_bound;
use crate::linalg::{is_prime, solve_rational, IntMatrix, ModpEchelon, PrimeField};
use crate::orbit::{render_orbit_sum, OrbitBasis};
use crate::perm::binomial;
use crate::poly::SparsePoly;
use crate::secondary::{module_span_at_degree, Secondary};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModPVerdict {
    pub prime: u64,
    pub is_good: bool,
    /// False when `Σ` does not reduce faithfully modulo `p` (`p = 2` for the
    /// hyperoctahedral ambient); the verdict is then not tied to `℧`.
    pub faithful: bool,
    /// Degrees `0..=degrees_checked` were examined.
    pub degrees_checked: u32,
    pub witness: Option<Witness>,
}

/// A `G`-orbit sum outside the image of `ρ ⊗ F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub degree: u32,
    pub orbit: String,
    pub image_rank: usize,
    pub dimension: usize,
}

/// Rank data of `ρ ⊗ F_p` in one degree.
#[derive(Clone, Debug)]
pub struct DegreeImage {
    /// Number of module generators `Z_Σ(κ)·θ_j`.
    pub sources: usize,
    pub dimension: usize,
    pub rank: usize,
    /// Index into the orbit basis of the first orbit sum not in the image.
    pub missing: Option<usize>,
}

fn check_prime(p: u64) -> Result<PrimeField> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    PrimeField::new(p)
}

fn check_secondaries(frame: &AmbientFrame, thetas: &[Secondary]) -> Result<()> {
    if thetas.len() != frame.index() {
        return Err(Error::InvalidInput(format!(
            "{} secondaries given, the index is {}",
            thetas.len(),
            frame.index()
        )));
    }
    Ok(())
}

fn span_columns(
    frame: &AmbientFrame,
    basis: &OrbitBasis,
    thetas: &[Secondary],
) -> Vec<Vec<BigInt>> {
    let refs: Vec<&Secondary> = thetas.iter().collect();
    module_span_at_degree(frame, basis, &refs)
}

/// Over `ℚ` the module generators form a basis of the invariants.
fn square_span(
    frame: &AmbientFrame,
    basis: &OrbitBasis,
    thetas: &[Secondary],
) -> Result<Vec<Vec<BigInt>>> {
    let cols = span_columns(frame, basis, thetas);
    if cols.len() != basis.dim() {
        return Err(Error::Invariant(format!(
            "degree {}: {} module generators for an invariant space of dimension {}",
            basis.degree(),
            cols.len(),
            basis.dim()
        )));
    }
    Ok(cols)
}

/// Orbit-sum basis of `F_p[V]^G_d`.
pub fn target_basis(frame: &AmbientFrame, p: u64, d: u32) -> Result<OrbitBasis> {
    let g = frame.subgroup();
    if p == 2 && g.is_signed() {
        Ok(OrbitBasis::new(&g.unsigned_image()?, d))
    } else {
        Ok(OrbitBasis::new(g, d))
    }
}

fn reduce_all(field: &PrimeField, v: &[BigInt]) -> Vec<u64> {
    v.iter().map(|x| field.reduce(x)).collect()
}

/// Image of `ρ ⊗ F_p` in degree `basis.degree()`.
pub fn image_modp(
    frame: &AmbientFrame,
    basis: &OrbitBasis,
    thetas: &[Secondary],
    p: u64,
) -> Result<DegreeImage> {
    let field = check_prime(p)?;
    let cols = span_columns(frame, basis, thetas);
    let n = basis.dim();
    let mut ech = ModpEchelon::new(field, n);
    for c in &cols {
        ech.insert(&reduce_all(&field, c));
    }
    let missing = (ech.rank() < n).then(|| {
        (0..n)
            .find(|&i| {
                let mut e = vec![0u64; n];
                e[i] = 1;
                !ech.contains(&e)
            })
            .expect("a unit vector lies outside a proper subspace")
    });
    Ok(DegreeImage {
        sources: cols.len(),
        dimension: n,
        rank: ech.rank(),
        missing,
    })
}

/// True when `ρ ⊗ F_p` is onto in degree `d`, with the first missing orbit.
pub fn rho_surjective(
    frame: &AmbientFrame,
    thetas: &[Secondary],
    p: u64,
    d: u32,
) -> Result<(bool, Option<Witness>)> {
    let (img, basis) = degree_image(frame, thetas, p, d)?;
    let witness = img.missing.map(|i| Witness {
        degree: d,
        orbit: render_orbit_sum(&basis.reps()[i]),
        image_rank: img.rank,
        dimension: img.dimension,
    });
    Ok((witness.is_none(), witness))
}

fn degree_image(
    frame: &AmbientFrame,
    thetas: &[Secondary],
    p: u64,
    d: u32,
) -> Result<(DegreeImage, OrbitBasis)> {
    check_prime(p)?;
    check_secondaries(frame, thetas)?;
    let basis = target_basis(frame, p, d)?;
    Ok((image_modp(frame, &basis, thetas, p)?, basis))
}

/// Degree up to which surjectivity is checked: the Göbel bound for
/// permutation groups, and its analogue in the squares `x_i²` plus one
/// parity per variable for signed groups.
pub fn verification_cap(frame: &AmbientFrame, thetas: &[Secondary]) -> u32 {
    let n = frame.rank();
    let base = match frame.kind() {
        AmbientKind::Hyperoctahedral => 2 * binomial(n, 2) + n as u64,
        _ => goebel_bound(n),
    };
    let top = thetas.iter().map(|t| t.degree as u64).max().unwrap_or(0);
    base.max(top) as u32
}

/// Whether `Σ` stays faithful modulo `p`; sign changes become trivial
/// modulo 2.
pub fn faithful_reduction(frame: &AmbientFrame, p: u64) -> bool {
    !(p == 2 && frame.kind() == AmbientKind::Hyperoctahedral)
}

/// `p` is good for `θ` when `ρ ⊗ F_p` is onto in every degree.
pub fn is_good_prime(frame: &AmbientFrame, thetas: &[Secondary], p: u64) -> Result<ModPVerdict> {
    is_good_prime_up_to(frame, thetas, p, verification_cap(frame, thetas))
}

pub fn is_good_prime_up_to(
    frame: &AmbientFrame,
    thetas: &[Secondary],
    p: u64,
    cap: u32,
) -> Result<ModPVerdict> {
    check_prime(p)?;
    check_secondaries(frame, thetas)?;
    for d in 0..=cap {
        let (img, basis) = degree_image(frame, thetas, p, d)?;
        // onto and one-to-one
        if img.rank < img.dimension || img.rank < img.sources {
            return Ok(ModPVerdict {
                prime: p,
                is_good: false,
                faithful: faithful_reduction(frame, p),
                degrees_checked: d,
                witness: img.missing.map(|i| Witness {
                    degree: d,
                    orbit: render_orbit_sum(&basis.reps()[i]),
                    image_rank: img.rank,
                    dimension: img.dimension,
                }),
            });
        }
    }
    Ok(ModPVerdict {
        prime: p,
        is_good: true,
        faithful: faithful_reduction(frame, p),
        degrees_checked: cap,
        witness: None,
    })
}

fn invariant_coordinates(
    frame: &AmbientFrame,
    f: &SparsePoly,
) -> Result<(OrbitBasis, Vec<BigInt>)> {
    let d = match f.degree() {
        Some(d) if f.is_homogeneous() => d,
        _ => {
            return Err(Error::InvalidInput(
                "membership needs a nonzero homogeneous polynomial".into(),
            ))
        }
    };
    let basis = OrbitBasis::new(frame.subgroup(), d);
    let coords = basis.coordinates(f);
    if &basis.combine(&coords) != f {
        return Err(Error::InvalidInput("polynomial is not G-invariant".into()));
    }
    Ok((basis, coords))
}

/// Whether the reduction of `f` lies in the image of `ρ ⊗ F_p`.
pub fn membership_modp(
    frame: &AmbientFrame,
    thetas: &[Secondary],
    f: &SparsePoly,
    p: u64,
) -> Result<bool> {
    let field = check_prime(p)?;
    check_secondaries(frame, thetas)?;
    if f.is_zero() {
        return Ok(true);
    }
    let (basis, _) = invariant_coordinates(frame, f)?;
    let target = target_basis(frame, p, basis.degree())?;
    let mut ech = ModpEchelon::new(field, target.dim());
    for c in span_columns(frame, &target, thetas) {
        ech.insert(&reduce_all(&field, &c));
    }
    Ok(ech.contains(&reduce_all(&field, &target.coordinates(f))))
}

/// Least `m > 0` with `m·f` in the image of `ρ` over `ℤ`; `f` lies in the
/// image exactly when this is 1.
pub fn integral_denominator(
    frame: &AmbientFrame,
    thetas: &[Secondary],
    f: &SparsePoly,
) -> Result<BigInt> {
    check_secondaries(frame, thetas)?;
    if f.is_zero() {
        return Ok(BigInt::one());
    }
    let (basis, coords) = invariant_coordinates(frame, f)?;
    let cols = square_span(frame, &basis, thetas)?;
    let a = IntMatrix::from_columns(basis.dim(), &cols);
    let x = solve_rational(&a, &coords).ok_or_else(|| {
        Error::Invariant(format!(
            "module generators of degree {} are linearly dependent",
            basis.degree()
        ))
    })?;
    Ok(x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom())))
}

/// `f ∈ ⊕_j ℤ[V]^Σ·θ_j`.
pub fn in_integral_module(
    frame: &AmbientFrame,
    thetas: &[Secondary],
    f: &SparsePoly,
) -> Result<bool> {
    Ok(integral_denominator(frame, thetas, f)?.is_one())
}

/// Fails unless the verdicts agree with the bad primes: `p` is good exactly
/// when it does not divide `℧`. Unfaithful reductions are skipped.
pub fn check_agreement(verdicts: &[ModPVerdict], deficiency: &BigInt) -> Result<()> {
    for v in verdicts.iter().filter(|v| v.faithful) {
        let divides = (deficiency % BigInt::from(v.prime)).is_zero();
        if v.is_good == divides {
            return Err(Error::Invariant(format!(
                "p = {}: oracle says {}, ℧ = {deficiency}",
                v.prime,
                if v.is_good { "good" } else { "bad" }
            )));
        }
    }
    Ok(())
}
