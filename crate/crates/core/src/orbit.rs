//! Orbit sums and the orbit-sum bases of homogeneous invariants.
//!
//! For a signed group the orbit sum of `m` is `(1/|H|) Σ_{g∈G} g·m` where `H`
//! stabilizes `m` up to sign; it vanishes exactly when some element of `H`
//! sends `m` to `-m`. Every orbit is named by its graded-lex-maximal monomial,
//! and the orbit sum carries coefficient `+1` there.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::perm::Group;
use crate::poly::{Monomial, SparsePoly};

/// Orbit of `m` as `(monomial, negative)` pairs relative to `m`, or `None`
/// when the signed orbit sum cancels.
pub fn signed_orbit(group: &Group, m: &Monomial) -> Option<Vec<(Monomial, bool)>> {
    let mut seen: HashMap<Monomial, bool> = HashMap::new();
    for g in group.elements() {
        let (neg, image) = m.act(g);
        match seen.get(&image) {
            Some(&s) if s != neg => return None,
            Some(_) => {}
            None => {
                seen.insert(image, neg);
            }
        }
    }
    let mut orbit: Vec<(Monomial, bool)> = seen.into_iter().collect();
    orbit.sort_by(|a, b| b.0.cmp(&a.0));
    Some(orbit)
}

/// `Z(m)`; zero when the signed orbit sum cancels.
pub fn orbit_sum(group: &Group, m: &Monomial) -> SparsePoly {
    let n = group.rank();
    match signed_orbit(group, m) {
        None => SparsePoly::zero(n),
        Some(orbit) => SparsePoly::from_terms(
            n,
            orbit
                .into_iter()
                .map(|(u, neg)| (u, if neg { -BigInt::one() } else { BigInt::one() })),
        ),
    }
}

/// Graded-lex-maximal monomial in the orbit of `m`.
pub fn canonical_rep(group: &Group, m: &Monomial) -> Monomial {
    group
        .elements()
        .iter()
        .map(|g| m.act(g).1)
        .max()
        .unwrap_or(*m)
}

/// Renders an orbit sum by its representative, e.g. `Z(x1^3*x2)`.
pub fn render_orbit_sum(rep: &Monomial) -> String {
    format!("Z({})", rep.render())
}

/// The orbit-sum basis of degree-`d` invariants.
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    nvars: usize,
    degree: u32,
    reps: Vec<Monomial>,
    orbits: Vec<Vec<(Monomial, bool)>>,
    lookup: HashMap<Monomial, (usize, bool)>,
    cancelled: usize,
}

impl OrbitBasis {
    /// Representatives are listed in descending graded-lex order.
    pub fn new(group: &Group, degree: u32) -> Self {
        let n = group.rank();
        let mut reps = Vec::new();
        let mut orbits = Vec::new();
        let mut lookup = HashMap::new();
        let mut cancelled_members: HashMap<Monomial, ()> = HashMap::new();
        let mut cancelled = 0;
        for m in Monomial::all_of_degree(n, degree).into_iter().rev() {
            if lookup.contains_key(&m) || cancelled_members.contains_key(&m) {
                continue;
            }
            match signed_orbit(group, &m) {
                Some(orbit) => {
                    let idx = reps.len();
                    for &(u, neg) in &orbit {
                        lookup.insert(u, (idx, neg));
                    }
                    reps.push(m);
                    orbits.push(orbit);
                }
                None => {
                    cancelled += 1;
                    for g in group.elements() {
                        cancelled_members.insert(m.act(g).1, ());
                    }
                }
            }
        }
        OrbitBasis {
            nvars: n,
            degree,
            reps,
            orbits,
            lookup,
            cancelled,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Monomial] {
        &self.reps
    }

    /// Number of monomial orbits whose signed orbit sum vanishes.
    pub fn cancelled_orbits(&self) -> usize {
        self.cancelled
    }

    /// Basis index of the orbit containing `m` and the sign of `m` in it.
    pub fn locate(&self, m: &Monomial) -> Option<(usize, bool)> {
        self.lookup.get(m).copied()
    }

    pub fn index_of_rep(&self, rep: &Monomial) -> Option<usize> {
        match self.lookup.get(rep) {
            Some(&(i, false)) if self.reps[i] == *rep => Some(i),
            _ => None,
        }
    }

    pub fn orbit(&self, idx: usize) -> &[(Monomial, bool)] {
        &self.orbits[idx]
    }

    pub fn orbit_sum(&self, idx: usize) -> SparsePoly {
        SparsePoly::from_terms(
            self.nvars,
            self.orbits[idx]
                .iter()
                .map(|&(u, neg)| (u, if neg { -BigInt::one() } else { BigInt::one() })),
        )
    }

    /// Coordinates of an invariant in this basis: its coefficients at the
    /// representatives. Terms of other degrees are ignored.
    pub fn coordinates(&self, f: &SparsePoly) -> Vec<BigInt> {
        self.reps.iter().map(|r| f.coeff(r)).collect()
    }

    /// Reassembles `Σ c_i Z(rep_i)`.
    pub fn combine(&self, coords: &[BigInt]) -> SparsePoly {
        let mut p = SparsePoly::zero(self.nvars);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(u, neg) in &self.orbits[i] {
                p.add_term(u, if neg { -c.clone() } else { c.clone() });
            }
        }
        p
    }
}
