//! The matrix `M(θ) = [γ_i·θ_j]`, the deficiency `℧(θ)` (the absolute
//! content of `det M(θ)`) and the primes dividing it.

use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::AmbientFrame;
use crate::linalg::{fraction_free_determinant, is_prime, IntMatrix};
use crate::poly::{Monomial, SparsePoly};

/// Largest index for which `det M(θ)` is expanded symbolically.
pub const MAX_SYMBOLIC_INDEX: usize = 8;

/// Largest number of monomials of degree `deg Δ(G)` allowed in `det M(θ)`.
pub const MAX_SYMBOLIC_TERMS: u128 = 250_000;

/// Whether [`deficiency_symbolic`] accepts the frame: index at most
/// [`MAX_SYMBOLIC_INDEX`] and a determinant with at most
/// [`MAX_SYMBOLIC_TERMS`] possible monomials.
pub fn symbolic_feasible(frame: &AmbientFrame) -> bool {
    frame.index() <= MAX_SYMBOLIC_INDEX
        && monomial_count(frame.rank(), frame.discriminant_degree()) <= MAX_SYMBOLIC_TERMS
}

/// `C(d+n-1, n-1)`, saturating.
fn monomial_count(n: usize, d: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 1..n as u128 {
        c = c.saturating_mul(d as u128 + i) / i;
    }
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeficiencyMethod {
    Evaluated,
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficiencyReport {
    pub deficiency: BigInt,
    pub bad_primes: Vec<u64>,
    /// `s` in `det M(θ) = s·℧·Δ(G)`.
    pub det_sign: i8,
    pub method: DeficiencyMethod,
    /// True once `det M(θ) = ±℧·Δ(G)` has been confirmed as a polynomial
    /// identity (symbolic method only).
    pub identity_checked: bool,
}

/// `[γ_i·θ_j]` with polynomial entries; row 0 is `θ` itself.
pub fn build_matrix_symbolic(frame: &AmbientFrame, thetas: &[SparsePoly]) -> Vec<Vec<SparsePoly>> {
    frame
        .coset_reps()
        .iter()
        .map(|g| thetas.iter().map(|t| t.apply(g)).collect())
        .collect()
}

/// `[(γ_i·θ_j)(z)] = [θ_j(γ_i⁻¹·z)]`.
pub fn build_matrix_evaluated(
    frame: &AmbientFrame,
    thetas: &[SparsePoly],
    z: &[BigInt],
) -> IntMatrix {
    let rows = frame
        .pulled_back_points(z)
        .iter()
        .map(|w| thetas.iter().map(|t| t.evaluate(w)).collect())
        .collect();
    IntMatrix::from_rows(rows)
}

fn check_shape(frame: &AmbientFrame, thetas: &[SparsePoly]) -> Result<()> {
    if thetas.len() != frame.index() {
        return Err(Error::InvalidInput(format!(
            "{} secondaries given, the index is {}",
            thetas.len(),
            frame.index()
        )));
    }
    Ok(())
}

/// `℧(θ) = |det M(θ)(z) / Δ(G)(z)|`.
pub fn deficiency_evaluated(
    frame: &AmbientFrame,
    thetas: &[SparsePoly],
    z: &[BigInt],
) -> Result<DeficiencyReport> {
    check_shape(frame, thetas)?;
    if !frame.is_generic_point(z) {
        return Err(Error::InvalidInput(
            "evaluation point lies on a reflecting hyperplane".into(),
        ));
    }
    let det = fraction_free_determinant(&build_matrix_evaluated(frame, thetas, z));
    if det.is_zero() {
        return Err(Error::InvalidInput(
            "det M(θ) vanishes: the given invariants are not secondaries".into(),
        ));
    }
    let delta = frame.discriminant_at(z);
    let (q, r) = det.div_rem(&delta);
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "Δ(G)(z) = {delta} does not divide det M(θ)(z) = {det}"
        )));
    }
    let deficiency = q.abs();
    let bad_primes = bad_primes(&deficiency)?;
    Ok(DeficiencyReport {
        deficiency,
        bad_primes,
        det_sign: if q.is_negative() { -1 } else { 1 },
        method: DeficiencyMethod::Evaluated,
        identity_checked: false,
    })
}

/// Expands `det M(θ)`; its content is `℧(θ)` and its primitive part must be
/// `±Δ(G)`. Returns the report and the determinant.
pub fn deficiency_symbolic(
    frame: &AmbientFrame,
    thetas: &[SparsePoly],
) -> Result<(DeficiencyReport, SparsePoly)> {
    check_shape(frame, thetas)?;
    if !symbolic_feasible(frame) {
        return Err(Error::Unsupported(format!(
            "symbolic determinant limited to index {MAX_SYMBOLIC_INDEX} and {MAX_SYMBOLIC_TERMS} monomials, \
             got index {} and deg Δ(G) = {}",
            frame.index(),
            frame.discriminant_degree()
        )));
    }
    let det = symbolic_determinant(&build_matrix_symbolic(frame, thetas));
    if det.is_zero() {
        return Err(Error::InvalidInput(
            "det M(θ) vanishes: the given invariants are not secondaries".into(),
        ));
    }
    let content = det.content();
    let primitive = det.primitive_part();
    let delta = frame.discriminant_poly();
    let det_sign = if primitive == delta {
        1
    } else if primitive == -&delta {
        -1
    } else {
        return Err(Error::Invariant(format!(
            "primitive part of det M(θ) is not ±Δ(G): {primitive}"
        )));
    };
    let bad_primes = bad_primes(&content)?;
    Ok((
        DeficiencyReport {
            deficiency: content,
            bad_primes,
            det_sign,
            method: DeficiencyMethod::Symbolic,
            identity_checked: true,
        },
        det,
    ))
}

/// Determinant by Laplace expansion along successive rows, memoizing the
/// minors on the top rows by their column sets. Coefficients are kept in
/// `i128` until an overflow forces a restart over `BigInt`.
pub fn symbolic_determinant(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let l = m.len();
    assert!(l <= 16, "symbolic determinant too large");
    assert!(m.iter().all(|r| r.len() == l), "matrix must be square");
    if l == 0 {
        return SparsePoly::one(0);
    }
    let nvars = m[0][0].nvars();
    let small: Option<Vec<Vec<Terms<i128>>>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| {
                    p.terms()
                        .map(|(m, c)| c.to_i128().map(|c| (*m, c)))
                        .collect()
                })
                .collect()
        })
        .collect();
    if let Some(det) = small.and_then(|s| expand_minors(&s)) {
        return SparsePoly::from_terms(nvars, det.into_iter().map(|(m, c)| (m, BigInt::from(c))));
    }
    let big: Vec<Vec<Terms<BigInt>>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.terms().map(|(m, c)| (*m, c.clone())).collect())
                .collect()
        })
        .collect();
    let det = expand_minors(&big).expect("BigInt arithmetic does not overflow");
    SparsePoly::from_terms(nvars, det)
}

type Terms<C> = Vec<(Monomial, C)>;

trait Coefficient: Clone + Default {
    /// `self ± a·b`, `None` on overflow.
    fn mul_add(&mut self, a: &Self, b: &Self, negate: bool) -> Option<()>;
    fn vanishes(&self) -> bool;
}

impl Coefficient for i128 {
    fn mul_add(&mut self, a: &Self, b: &Self, negate: bool) -> Option<()> {
        let p = a.checked_mul(*b)?;
        *self = if negate {
            self.checked_sub(p)?
        } else {
            self.checked_add(p)?
        };
        Some(())
    }

    fn vanishes(&self) -> bool {
        *self == 0
    }
}

impl Coefficient for BigInt {
    fn mul_add(&mut self, a: &Self, b: &Self, negate: bool) -> Option<()> {
        if negate {
            *self -= a * b;
        } else {
            *self += a * b;
        }
        Some(())
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

fn expand_minors<C: Coefficient>(m: &[Vec<Terms<C>>]) -> Option<Terms<C>> {
    let l = m.len();
    let mut minors: HashMap<u32, Terms<C>> = (0..l).map(|j| (1u32 << j, m[0][j].clone())).collect();
    for (k, row) in m.iter().enumerate().skip(1) {
        let mut next: HashMap<u32, Terms<C>> = HashMap::new();
        for mask in 0u32..(1 << l) {
            if mask.count_ones() as usize != k + 1 {
                continue;
            }
            let mut acc: HashMap<Monomial, C> = HashMap::new();
            for (t, j) in (0..l).filter(|&j| mask & (1 << j) != 0).enumerate() {
                let sub = &minors[&(mask & !(1 << j))];
                // sign (-1)^{k+t} of the expansion along row k
                let negate = (k + t) % 2 == 1;
                for (ma, ca) in &row[j] {
                    for (mb, cb) in sub {
                        acc.entry(ma.mul(mb)).or_default().mul_add(ca, cb, negate)?;
                    }
                }
            }
            next.insert(
                mask,
                acc.into_iter().filter(|(_, c)| !c.vanishes()).collect(),
            );
        }
        minors = next;
    }
    minors.remove(&((1u32 << l) - 1))
}

/// Prime divisors of a positive deficiency.
pub fn bad_primes(deficiency: &BigInt) -> Result<Vec<u64>> {
    if deficiency.sign() != Sign::Plus {
        return Err(Error::Invariant(format!(
            "deficiency {deficiency} is not positive"
        )));
    }
    let mut rest = deficiency.clone();
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT && BigInt::from(p * p) <= rest {
        let bp = BigInt::from(p);
        if (&rest % &bp).is_zero() {
            primes.push(p);
            while (&rest % &bp).is_zero() {
                rest /= &bp;
            }
        }
        p += 1;
    }
    if !rest.is_one() {
        match rest.to_u64() {
            Some(r) if is_prime(r) => primes.push(r),
            _ => {
                return Err(Error::Unsupported(format!(
                    "cannot factor the cofactor {rest} of the deficiency"
                )))
            }
        }
    }
    Ok(primes)
}

/// Fails unless every bad prime divides `group_order`, as it must for a
/// universal set.
pub fn check_bad_primes_divide(bad: &[u64], group_order: u64) -> Result<()> {
    match bad.iter().find(|&&p| !group_order.is_multiple_of(p)) {
        Some(p) => Err(Error::Invariant(format!(
            "bad prime {p} does not divide |G| = {group_order}"
        ))),
        None => Ok(()),
    }
}

const TRIAL_LIMIT: u64 = 1 << 20;

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
