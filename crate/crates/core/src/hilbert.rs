//! Dimensions of homogeneous invariants and the degrees of secondary
//! invariants.
//!
//! For permutation groups the degree-`d` dimension is the number of monomial
//! orbits, counted by Burnside's lemma from the cycle types: an element with
//! cycle lengths `c_1, …, c_r` fixes as many degree-`d` monomials as the
//! coefficient of `λ^d` in `Π 1/(1-λ^{c_k})`. For signed groups the nonzero
//! signed orbit sums are enumerated directly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::AmbientFrame;
use crate::orbit::OrbitBasis;
use crate::perm::{binomial, Group};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `τ(d)`, the number of secondaries of degree `d` (only nonzero entries).
    pub tau: BTreeMap<u32, usize>,
    /// `a_1 ≤ ⋯ ≤ a_ℓ`.
    pub degrees: Vec<u32>,
    pub goebel_bound: u64,
    /// Bound `C(n,2)` on the degrees of secondaries for permutation groups.
    pub secondary_bound: u64,
}

impl HilbertData {
    pub fn tau(&self, d: u32) -> usize {
        self.tau.get(&d).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&a| a as u64).sum()
    }
}

/// `max(n, C(n,2))`.
pub fn goebel_bound(n: usize) -> u64 {
    (n as u64).max(binomial(n, 2))
}

pub fn secondary_degree_bound(n: usize) -> u64 {
    binomial(n, 2)
}

/// `dim (ℚ[V]^G)_d`.
pub fn invariant_dimension(group: &Group, d: u32) -> u64 {
    if group.is_signed() {
        invariant_dimension_direct(group, d)
    } else {
        burnside_series(group, d)[d as usize]
            .to_u64()
            .expect("dimension fits in u64")
    }
}

/// Number of monomial orbits of degree `d` with nonvanishing orbit sum.
pub fn invariant_dimension_direct(group: &Group, d: u32) -> u64 {
    OrbitBasis::new(group, d).dim() as u64
}

/// Coefficients `dim (ℚ[V]^G)_d` for `d = 0..=up_to`, averaged over the
/// cycle types of an unsigned group.
pub fn burnside_series(group: &Group, up_to: u32) -> Vec<BigInt> {
    cycle_index_series(group, up_to, false)
}

/// The same average with each cycle weighted by the product of its signs;
/// valid for signed groups as well.
pub fn signed_cycle_index_series(group: &Group, up_to: u32) -> Vec<BigInt> {
    cycle_index_series(group, up_to, true)
}

fn cycle_index_series(group: &Group, up_to: u32, signed: bool) -> Vec<BigInt> {
    let len = up_to as usize + 1;
    let mut classes: BTreeMap<Vec<(usize, bool)>, u64> = BTreeMap::new();
    for g in group.elements() {
        let mut ty = g.signed_cycles();
        if !signed {
            ty.iter_mut().for_each(|c| c.1 = true);
        }
        ty.sort_unstable();
        *classes.entry(ty).or_default() += 1;
    }
    let mut total = vec![BigInt::zero(); len];
    for (ty, count) in classes {
        let mut s = vec![BigInt::zero(); len];
        s[0] = BigInt::from(1);
        for (l, positive) in ty {
            // multiply by 1/(1 - ±λ^l)
            for d in l..len {
                let prev = s[d - l].clone();
                if positive {
                    s[d] += prev;
                } else {
                    s[d] -= prev;
                }
            }
        }
        for (t, v) in total.iter_mut().zip(s) {
            *t += v * count;
        }
    }
    let order = BigInt::from(group.order());
    total
        .into_iter()
        .map(|t| {
            let (q, r) = t.div_rem(&order);
            assert!(r.is_zero(), "cycle index average is not integral");
            q
        })
        .collect()
}

/// Numerator `Σ_j λ^{a_j}` of the Hilbert series of `ℚ[V]^G` over the
/// primary invariants of `Σ`.
pub fn secondary_degrees(frame: &AmbientFrame) -> Result<HilbertData> {
    let group = frame.subgroup();
    let n = frame.rank();
    let l = frame.index();
    let cap = frame.discriminant_degree();
    let cap = u32::try_from(cap)
        .ok()
        .filter(|&c| c <= u8::MAX as u32)
        .ok_or_else(|| Error::Unsupported(format!("deg Δ(G) = {cap} is too large")))?;

    let mut series: Vec<BigInt> = Vec::with_capacity(cap as usize + 1);
    let mut numerator: Vec<BigInt> = Vec::with_capacity(cap as usize + 1);
    let full = if group.is_signed() {
        None
    } else {
        Some(burnside_series(group, cap))
    };
    let mut found = 0usize;
    for d in 0..=cap {
        let h = match &full {
            Some(s) => s[d as usize].clone(),
            None => {
                // enumeration is costly; stop once all ℓ secondaries are placed
                if found == l {
                    break;
                }
                BigInt::from(invariant_dimension_direct(group, d))
            }
        };
        series.push(h);
        let c = numerator_coefficient(&series, frame.primary_degrees(), d as usize);
        if c.is_negative() {
            return Err(Error::Invariant(format!(
                "negative Hilbert numerator coefficient {c} in degree {d}"
            )));
        }
        found += c.to_usize().unwrap_or(usize::MAX);
        numerator.push(c);
    }

    let mut tau = BTreeMap::new();
    let mut degrees = Vec::with_capacity(l);
    for (d, c) in numerator.iter().enumerate() {
        let c = c.to_usize().unwrap_or(usize::MAX);
        if c > 0 {
            tau.insert(d as u32, c);
            degrees.extend(std::iter::repeat_n(d as u32, c));
        }
    }
    if degrees.len() != l || tau.get(&0) != Some(&1) {
        return Err(Error::Invariant(format!(
            "Hilbert numerator has {} terms, expected ℓ = {l}",
            degrees.len()
        )));
    }
    let data = HilbertData {
        tau,
        degrees,
        goebel_bound: goebel_bound(n),
        secondary_bound: secondary_degree_bound(n),
    };
    if data.degree_sum() != frame.discriminant_degree() {
        return Err(Error::Invariant(format!(
            "secondary degrees sum to {} but deg Δ(G) = {}",
            data.degree_sum(),
            frame.discriminant_degree()
        )));
    }
    Ok(data)
}

/// Coefficient of `λ^d` in `H(λ)·Π_i (1 - λ^{d_i})`.
fn numerator_coefficient(series: &[BigInt], primary: &[u32], d: usize) -> BigInt {
    // expand Π (1 - λ^{d_i}) up to degree d
    let mut poly = vec![BigInt::zero(); d + 1];
    poly[0] = BigInt::from(1);
    for &p in primary {
        let p = p as usize;
        for k in (p..=d).rev() {
            let prev = poly[k - p].clone();
            poly[k] -= prev;
        }
    }
    (0..=d).map(|k| &poly[k] * &series[d - k]).sum()
}
