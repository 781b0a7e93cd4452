//! The ambient reflection group `Σ ⊇ G`: coset representatives, reflecting
//! hyperplanes, discriminant exponents and the `G`-discriminant `Δ(G)`.
//!
//! Every reflection of `S_n`, a Young subgroup or `B_n` has order two, so each
//! hyperplane stabilizer `C_P` is cyclic of order `c = 2` and the exponent of a
//! hyperplane orbit is `e = Σ_{i≥2} b_i(g_P)(i-1)` where `b_i` counts the
//! `i`-cycles of the reflection `g_P` on the cosets `Σ/G`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{binomial, cycle_type_on_set, Group, Permutation, SignedPermutation};
use crate::poly::{Monomial, SparsePoly};

/// Ambient group requested by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum AmbientChoice {
    /// Hyperoctahedral for signed groups, `S_n` for transitive ones, otherwise
    /// the Young subgroup of the orbit partition.
    #[default]
    Auto,
    Symmetric,
    Young,
    Hyperoctahedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmbientKind {
    Symmetric,
    Young,
    Hyperoctahedral,
}

impl fmt::Display for AmbientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmbientKind::Symmetric => "symmetric",
            AmbientKind::Young => "young",
            AmbientKind::Hyperoctahedral => "hyperoctahedral",
        })
    }
}

/// Shape of a reflecting hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HyperplaneKind {
    /// `x_i - x_j`, fixed by a transposition.
    Difference,
    /// `x_i + x_j`, fixed by `x_i ↦ -x_j, x_j ↦ -x_i`.
    Sum,
    /// `x_i`, fixed by the sign change of `x_i`.
    Coordinate,
}

impl fmt::Display for HyperplaneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HyperplaneKind::Difference => "x_i-x_j",
            HyperplaneKind::Sum => "x_i+x_j",
            HyperplaneKind::Coordinate => "x_i",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Hyperplane {
    /// Primitive integer linear form, first nonzero coefficient positive.
    pub form: Vec<i64>,
    /// Generator of the pointwise stabilizer.
    pub reflection: SignedPermutation,
    /// Cycle type of the reflection on the cosets `Σ/G`.
    pub coset_cycle_type: BTreeMap<usize, usize>,
}

impl Hyperplane {
    pub fn evaluate(&self, z: &[BigInt]) -> BigInt {
        self.form
            .iter()
            .zip(z)
            .fold(BigInt::zero(), |acc, (&c, v)| acc + BigInt::from(c) * v)
    }

    pub fn exponent(&self) -> u64 {
        self.coset_cycle_type
            .iter()
            .map(|(&len, &count)| (len as u64 - 1) * count as u64)
            .sum()
    }

    /// Number of `⟨g_P⟩`-orbits on the cosets, `dim W^{C_P}`.
    pub fn coset_orbits(&self) -> usize {
        self.coset_cycle_type.values().sum()
    }
}

/// Hyperplanes sharing a kind (and, for Young ambients, a block); the exponent
/// is common to all of them.
#[derive(Clone, Debug)]
pub struct HyperplaneOrbit {
    pub kind: HyperplaneKind,
    /// Block index for Young ambients.
    pub block: Option<usize>,
    pub hyperplanes: Vec<Hyperplane>,
    pub cyclic_order: usize,
    pub exponent: u64,
}

impl HyperplaneOrbit {
    pub fn label(&self) -> String {
        match self.block {
            Some(b) => format!("{}[block {}]", self.kind, b + 1),
            None => self.kind.to_string(),
        }
    }
}

/// `deg Δ(G)` next to `(ℓ/2)(|R(Σ)| - |R(G)|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaDegreeCheck {
    pub degree: u64,
    pub ambient_reflections: usize,
    pub subgroup_reflections: usize,
    pub index: usize,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct AmbientFrame {
    kind: AmbientKind,
    sigma: Group,
    subgroup: Group,
    blocks: Vec<Vec<usize>>,
    coset_reps: Vec<SignedPermutation>,
    coset_of: HashMap<SignedPermutation, usize>,
    hyperplane_orbits: Vec<HyperplaneOrbit>,
    primary_degrees: Vec<u32>,
}

pub fn build_frame(group: &Group, choice: AmbientChoice) -> Result<AmbientFrame> {
    let n = group.rank();
    let kind = match choice {
        AmbientChoice::Auto if group.is_signed() => AmbientKind::Hyperoctahedral,
        AmbientChoice::Auto if group.point_orbits().len() == 1 => AmbientKind::Symmetric,
        AmbientChoice::Auto | AmbientChoice::Young => AmbientKind::Young,
        AmbientChoice::Symmetric => AmbientKind::Symmetric,
        AmbientChoice::Hyperoctahedral => AmbientKind::Hyperoctahedral,
    };
    if group.is_signed() && kind != AmbientKind::Hyperoctahedral {
        return Err(Error::NotInAmbient(format!(
            "signed group does not embed in the {kind} ambient"
        )));
    }
    let (sigma, blocks) = match kind {
        AmbientKind::Symmetric => (Group::symmetric(n)?, vec![(0..n).collect()]),
        AmbientKind::Young => {
            let blocks = group.point_orbits();
            (Group::young(n, &blocks)?, blocks)
        }
        AmbientKind::Hyperoctahedral => (Group::hyperoctahedral(n)?, vec![(0..n).collect()]),
    };
    if let Some(g) = group.generators().iter().find(|g| !sigma.contains(g)) {
        return Err(Error::NotInAmbient(format!(
            "generator {g} lies outside {kind}"
        )));
    }

    // cosets γG listed by their lexicographically least element
    let mut coset_of = HashMap::with_capacity(sigma.order());
    let mut coset_reps = Vec::new();
    for x in sigma.elements() {
        if coset_of.contains_key(x) {
            continue;
        }
        let idx = coset_reps.len();
        for h in group.elements() {
            coset_of.insert(x.compose(h), idx);
        }
        coset_reps.push(x.clone());
    }
    if coset_reps.len() * group.order() != sigma.order() {
        return Err(Error::Invariant(
            "cosets do not partition the ambient group".into(),
        ));
    }

    let mut frame = AmbientFrame {
        kind,
        sigma,
        subgroup: group.clone(),
        blocks,
        coset_reps,
        coset_of,
        hyperplane_orbits: Vec::new(),
        primary_degrees: Vec::new(),
    };
    frame.primary_degrees = match kind {
        AmbientKind::Hyperoctahedral => (1..=n as u32).map(|i| 2 * i).collect(),
        _ => {
            let mut d: Vec<u32> = frame
                .blocks
                .iter()
                .flat_map(|b| 1..=b.len() as u32)
                .collect();
            d.sort_unstable();
            d
        }
    };
    frame.hyperplane_orbits = frame.enumerate_hyperplanes()?;
    Ok(frame)
}

impl AmbientFrame {
    fn enumerate_hyperplanes(&self) -> Result<Vec<HyperplaneOrbit>> {
        let n = self.rank();
        let mut groups: Vec<(
            HyperplaneKind,
            Option<usize>,
            Vec<(Vec<i64>, SignedPermutation)>,
        )> = Vec::new();
        let transposition = |i: usize, j: usize| -> Result<SignedPermutation> {
            Ok(Permutation::from_cycles(n, &[vec![i + 1, j + 1]])?.into())
        };
        match self.kind {
            AmbientKind::Symmetric | AmbientKind::Young => {
                for (b, block) in self.blocks.iter().enumerate() {
                    let mut planes = Vec::new();
                    for (a, &i) in block.iter().enumerate() {
                        for &j in &block[a + 1..] {
                            let mut form = vec![0; n];
                            form[i] = 1;
                            form[j] = -1;
                            planes.push((form, transposition(i, j)?));
                        }
                    }
                    if !planes.is_empty() {
                        let block = (self.kind == AmbientKind::Young).then_some(b);
                        groups.push((HyperplaneKind::Difference, block, planes));
                    }
                }
            }
            AmbientKind::Hyperoctahedral => {
                let mut diff = Vec::new();
                let mut sum = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        let mut form = vec![0; n];
                        form[i] = 1;
                        form[j] = -1;
                        diff.push((form.clone(), transposition(i, j)?));
                        form[j] = 1;
                        let mut neg = vec![false; n];
                        neg[i] = true;
                        neg[j] = true;
                        let perm = Permutation::from_cycles(n, &[vec![i + 1, j + 1]])?;
                        sum.push((form, SignedPermutation::new(perm, neg)?));
                    }
                }
                let coord: Vec<_> = (0..n)
                    .map(|i| {
                        let mut form = vec![0; n];
                        form[i] = 1;
                        let mut neg = vec![false; n];
                        neg[i] = true;
                        Ok((form, SignedPermutation::new(Permutation::identity(n), neg)?))
                    })
                    .collect::<Result<_>>()?;
                for (kind, planes) in [
                    (HyperplaneKind::Difference, diff),
                    (HyperplaneKind::Sum, sum),
                    (HyperplaneKind::Coordinate, coord),
                ] {
                    if !planes.is_empty() {
                        groups.push((kind, None, planes));
                    }
                }
            }
        }

        let mut out = Vec::new();
        for (kind, block, planes) in groups {
            let mut hyperplanes = Vec::with_capacity(planes.len());
            for (form, reflection) in planes {
                if !reflection.compose(&reflection).is_identity() || !reflection.is_reflection() {
                    return Err(Error::Invariant(format!(
                        "{reflection} is not an involutive reflection"
                    )));
                }
                let coset_cycle_type = cycle_type_on_set(&self.coset_action(&reflection))?;
                hyperplanes.push(Hyperplane {
                    form,
                    reflection,
                    coset_cycle_type,
                });
            }
            let exponent = hyperplanes[0].exponent();
            if hyperplanes.iter().any(|h| h.exponent() != exponent) {
                return Err(Error::Invariant(format!(
                    "discriminant exponent varies within the {kind} hyperplanes"
                )));
            }
            out.push(HyperplaneOrbit {
                kind,
                block,
                hyperplanes,
                cyclic_order: 2,
                exponent,
            });
        }
        Ok(out)
    }

    pub fn kind(&self) -> AmbientKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.subgroup.rank()
    }

    pub fn sigma(&self) -> &Group {
        &self.sigma
    }

    pub fn subgroup(&self) -> &Group {
        &self.subgroup
    }

    /// Blocks of the Young ambient (a single block otherwise), 0-based points.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `ℓ = [Σ:G]`.
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    /// `γ_1 = e, γ_2, …, γ_ℓ`.
    pub fn coset_reps(&self) -> &[SignedPermutation] {
        &self.coset_reps
    }

    /// Index of the coset `xG`.
    pub fn coset_index(&self, x: &SignedPermutation) -> Option<usize> {
        self.coset_of.get(x).copied()
    }

    /// Permutation of the cosets induced by left multiplication with `g ∈ Σ`.
    pub fn coset_action(&self, g: &SignedPermutation) -> Vec<usize> {
        self.coset_reps
            .iter()
            .map(|gamma| self.coset_of[&g.compose(gamma)])
            .collect()
    }

    pub fn hyperplane_orbits(&self) -> &[HyperplaneOrbit] {
        &self.hyperplane_orbits
    }

    /// Degrees of the algebra generators of the `Σ`-invariants.
    pub fn primary_degrees(&self) -> &[u32] {
        &self.primary_degrees
    }

    /// `e(G, 𝓑)` per hyperplane orbit label.
    pub fn discriminant_exponents(&self) -> Vec<(String, u64)> {
        self.hyperplane_orbits
            .iter()
            .map(|o| (o.label(), o.exponent))
            .collect()
    }

    /// `deg Δ(G) = Σ_P e(G,P)`.
    pub fn discriminant_degree(&self) -> u64 {
        self.hyperplane_orbits
            .iter()
            .map(|o| o.exponent * o.hyperplanes.len() as u64)
            .sum()
    }

    /// `Δ(G) = Π_P L_P^{e(G,P)}` expanded.
    pub fn discriminant_poly(&self) -> SparsePoly {
        let mut acc = SparsePoly::one(self.rank());
        for orbit in &self.hyperplane_orbits {
            if orbit.exponent == 0 {
                continue;
            }
            for h in &orbit.hyperplanes {
                acc = &acc * &SparsePoly::linear(&h.form).pow(orbit.exponent as u32);
            }
        }
        acc
    }

    /// `Δ(G)(z)` without expanding the product.
    pub fn discriminant_at(&self, z: &[BigInt]) -> BigInt {
        let mut acc = BigInt::one();
        for orbit in &self.hyperplane_orbits {
            for h in &orbit.hyperplanes {
                acc *= num_traits::pow(h.evaluate(z), orbit.exponent as usize);
            }
        }
        acc
    }

    /// Checks `deg Δ(G) = (ℓ/2)(|R(Σ)| - |R(G)|)`; a failure is an internal error.
    pub fn delta_degree_check(&self) -> Result<DeltaDegreeCheck> {
        let check = DeltaDegreeCheck {
            degree: self.discriminant_degree(),
            ambient_reflections: self.sigma.count_reflections(),
            subgroup_reflections: self.subgroup.count_reflections(),
            index: self.index(),
            holds: false,
        };
        let lhs = 2 * check.degree as i128;
        let rhs = check.index as i128
            * (check.ambient_reflections as i128 - check.subgroup_reflections as i128);
        let check = DeltaDegreeCheck {
            holds: lhs == rhs,
            ..check
        };
        if !check.holds {
            return Err(Error::Invariant(format!(
                "deg Δ(G) = {} but (ℓ/2)(|R(Σ)|-|R(G)|) = {}/2",
                check.degree, rhs
            )));
        }
        Ok(check)
    }

    /// `|R(G)|` from the coset action alone: `Σ_P (c·dim W^{C_P}/ℓ - 1)`.
    pub fn reflections_from_cosets(&self) -> Result<usize> {
        let l = self.index() as i64;
        let mut total: i64 = 0;
        for orbit in &self.hyperplane_orbits {
            for h in &orbit.hyperplanes {
                total += orbit.cyclic_order as i64 * h.coset_orbits() as i64 - l;
            }
        }
        if total % l != 0 || total < 0 {
            return Err(Error::Invariant(format!(
                "coset reflection count {total}/{l} is not a nonnegative integer"
            )));
        }
        Ok((total / l) as usize)
    }

    /// Total number of reflecting hyperplanes of `Σ`.
    pub fn hyperplane_count(&self) -> usize {
        self.hyperplane_orbits
            .iter()
            .map(|o| o.hyperplanes.len())
            .sum()
    }

    /// True when `z` lies on no reflecting hyperplane of `Σ`.
    pub fn is_generic_point(&self, z: &[BigInt]) -> bool {
        z.len() == self.rank()
            && self
                .hyperplane_orbits
                .iter()
                .flat_map(|o| &o.hyperplanes)
                .all(|h| !h.evaluate(z).is_zero())
    }

    /// The deterministic sequence of evaluation points `(1..n)`, `(1,2,4,…)`
    /// and the first `n` primes.
    pub fn default_points(&self) -> Vec<Vec<BigInt>> {
        default_points(self.rank())
    }

    /// `w_i = γ_i⁻¹·z`, so that `(γ_i·f)(z) = f(w_i)`.
    pub fn pulled_back_points(&self, z: &[BigInt]) -> Vec<Vec<BigInt>> {
        self.coset_reps
            .iter()
            .map(|g| g.pullback_point(z))
            .collect()
    }

    /// Canonical member of the `Σ`-orbit of `m`, or `None` when the
    /// `Σ`-orbit sum of `m` vanishes. Every nonzero `Σ`-orbit sum has all
    /// coefficients `+1`.
    pub fn sigma_orbit_key(&self, m: &Monomial) -> Option<Monomial> {
        let n = self.rank();
        let mut exps = m.exponents(n);
        match self.kind {
            AmbientKind::Hyperoctahedral => {
                if exps.iter().any(|e| e % 2 == 1) {
                    return None;
                }
                exps.sort_unstable_by(|a, b| b.cmp(a));
            }
            _ => {
                for block in &self.blocks {
                    let mut vals: Vec<u32> = block.iter().map(|&i| exps[i]).collect();
                    vals.sort_unstable_by(|a, b| b.cmp(a));
                    for (&i, v) in block.iter().zip(vals) {
                        exps[i] = v;
                    }
                }
            }
        }
        Some(Monomial::new(&exps))
    }

    /// Keys of the nonzero `Σ`-orbit sums of degree `d`, a `ℤ`-basis of
    /// `ℤ[V]^Σ_d`, in descending graded-lex order.
    pub fn sigma_orbit_keys(&self, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(self.rank(), d)
            .into_iter()
            .rev()
            .filter(|m| self.sigma_orbit_key(m).as_ref() == Some(m))
            .collect()
    }

    /// Unsigned frames: `|R(G)| = C(n,2)(1 - 2e/ℓ)` for a single block.
    pub fn unsigned_reflection_formula(&self) -> Option<i64> {
        if self.kind == AmbientKind::Hyperoctahedral || self.hyperplane_orbits.len() != 1 {
            return None;
        }
        let o = &self.hyperplane_orbits[0];
        let k = self.blocks.iter().map(|b| b.len()).max().unwrap_or(0);
        let l = self.index() as i64;
        Some(binomial(k, 2) as i64 * (l - 2 * o.exponent as i64) / l)
    }
}

pub fn default_points(n: usize) -> Vec<Vec<BigInt>> {
    let consecutive = (1..=n as i64).map(BigInt::from).collect();
    let powers = (0..n as u32).map(|i| BigInt::from(1i64 << i)).collect();
    let primes = first_primes(n).into_iter().map(BigInt::from).collect();
    vec![consecutive, powers, primes]
}

fn first_primes(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut k = 2u64;
    while out.len() < n {
        if crate::linalg::is_prime(k) {
            out.push(k);
        }
        k += 1;
    }
    out
}
