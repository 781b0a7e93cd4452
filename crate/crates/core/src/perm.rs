//! Permutations, signed permutations and finite groups of them.
//!
//! A signed permutation `g` acts on the variables by `g·x_i = s_i x_{π(i)}`
//! and on polynomials by substitution. Composition is written
//! `(g ∘ h)·f = g·(h·f)`. Indices are 0-based internally; parsing and
//! rendering use the 1-based cycle notation.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest rank for which `S_n` (and its subgroups) are enumerated.
pub const MAX_SYMMETRIC_RANK: usize = 8;
/// Largest rank for which the hyperoctahedral group `B_n` is enumerated.
pub const MAX_SIGNED_RANK: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a bijection on {n} points"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based cycles; `(1,2,3)` sends 1 to 2.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(Error::InvalidInput(format!(
                        "point {p} out of range 1..={n}"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::InvalidInput(format!(
                        "point {p} repeated in cycle product"
                    )));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles, each starting at its smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// Element of the hyperoctahedral group: a permutation with a sign per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    perm: Permutation,
    negated: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(perm: Permutation, negated: Vec<bool>) -> Result<Self> {
        if perm.rank() != negated.len() {
            return Err(Error::RankMismatch {
                expected: perm.rank(),
                found: negated.len(),
            });
        }
        Ok(SignedPermutation { perm, negated })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: Permutation::identity(n),
            negated: vec![false; n],
        }
    }

    /// From a 1-based signed image list: `[-2,1,3]` sends `x1 ↦ -x2`.
    pub fn from_signed_images(images: &[i64]) -> Result<Self> {
        let n = images.len();
        let mut targets = Vec::with_capacity(n);
        let mut negated = Vec::with_capacity(n);
        for &v in images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::InvalidInput(format!(
                    "signed image {v} out of range ±1..={n}"
                )));
            }
            targets.push(a - 1);
            negated.push(v < 0);
        }
        Ok(SignedPermutation {
            perm: Permutation::new(targets)?,
            negated,
        })
    }

    pub fn rank(&self) -> usize {
        self.perm.rank()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn negated(&self) -> &[bool] {
        &self.negated
    }

    pub fn is_unsigned(&self) -> bool {
        self.negated.iter().all(|&s| !s)
    }

    pub fn is_identity(&self) -> bool {
        self.is_unsigned() && self.perm.is_identity()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.rank();
        let mut images = Vec::with_capacity(n);
        let mut negated = Vec::with_capacity(n);
        for i in 0..n {
            let j = other.perm.images[i];
            images.push(self.perm.images[j]);
            negated.push(other.negated[i] ^ self.negated[j]);
        }
        SignedPermutation {
            perm: Permutation { images },
            negated,
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut images = vec![0; n];
        let mut negated = vec![false; n];
        for i in 0..n {
            let j = self.perm.images[i];
            images[j] = i;
            negated[j] = self.negated[i];
        }
        SignedPermutation {
            perm: Permutation { images },
            negated,
        }
    }

    /// Point `w` with `(g·f)(z) = f(w)` for every polynomial `f`; this is `g⁻¹·z`
    /// for the contragredient action on points.
    pub fn pullback_point<T>(&self, z: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T>,
    {
        (0..self.rank())
            .map(|i| {
                let v = z[self.perm.images[i]].clone();
                if self.negated[i] {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    /// Cycles of the underlying permutation, each tagged with whether the
    /// product of signs along it is `+1`.
    pub fn signed_cycles(&self) -> Vec<(usize, bool)> {
        self.perm
            .cycles()
            .into_iter()
            .map(|c| {
                let odd = c.iter().filter(|&&i| self.negated[i]).count() % 2 == 1;
                (c.len(), !odd)
            })
            .collect()
    }

    /// Dimension of the fixed subspace of the matrix representation.
    pub fn fixed_space_dim(&self) -> usize {
        self.signed_cycles().iter().filter(|(_, pos)| *pos).count()
    }

    /// Pointwise fixes a hyperplane.
    pub fn is_reflection(&self) -> bool {
        self.rank() - self.fixed_space_dim() == 1
    }

    /// Pointwise fixes a codimension-two subspace.
    pub fn is_bireflection(&self) -> bool {
        self.rank() - self.fixed_space_dim() == 2
    }
}

impl From<Permutation> for SignedPermutation {
    fn from(perm: Permutation) -> Self {
        let n = perm.rank();
        SignedPermutation {
            perm,
            negated: vec![false; n],
        }
    }
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.negated
            .cmp(&other.negated)
            .then_with(|| self.perm.images.cmp(&other.perm.images))
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unsigned() {
            return write!(f, "{}", self.perm);
        }
        let body: Vec<String> = (0..self.rank())
            .map(|i| {
                let v = self.perm.images[i] as i64 + 1;
                if self.negated[i] { -v } else { v }.to_string()
            })
            .collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// A finite group of (signed) permutations, stored by full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    n: usize,
    generators: Vec<SignedPermutation>,
    elements: Vec<SignedPermutation>,
    signed: bool,
}

/// Closure of `gens` under composition, elements sorted by `(signs, images)`.
pub fn group_from_generators(n: usize, gens: &[SignedPermutation]) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidInput("rank must be positive".into()));
    }
    for g in gens {
        if g.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: g.rank(),
            });
        }
    }
    let signed = gens.iter().any(|g| !g.is_unsigned());
    if signed && n > MAX_SIGNED_RANK {
        return Err(Error::Unsupported(format!(
            "signed groups are enumerated up to rank {MAX_SIGNED_RANK}, got {n}"
        )));
    }
    if !signed && n > MAX_SYMMETRIC_RANK {
        return Err(Error::Unsupported(format!(
            "permutation groups are enumerated up to rank {MAX_SYMMETRIC_RANK}, got {n}"
        )));
    }
    let gens: Vec<SignedPermutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let id = SignedPermutation::identity(n);
    let mut seen: HashSet<SignedPermutation> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = g.compose(x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<SignedPermutation> = seen.into_iter().collect();
    elements.sort();
    Ok(Group {
        n,
        generators: gens,
        elements,
        signed,
    })
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i as u64 + 1);
    }
    acc
}

impl Group {
    pub fn symmetric(n: usize) -> Result<Group> {
        Group::young(n, &[(0..n).collect()])
    }

    pub fn alternating(n: usize) -> Result<Group> {
        let gens: Result<Vec<SignedPermutation>> = (3..=n)
            .map(|k| Ok(Permutation::from_cycles(n, &[vec![1, 2, k]])?.into()))
            .collect();
        group_from_generators(n, &gens?)
    }

    /// `S_{k_1} × ⋯ × S_{k_t}` stabilizing the given blocks (0-based points).
    pub fn young(n: usize, blocks: &[Vec<usize>]) -> Result<Group> {
        let mut gens = Vec::new();
        for block in blocks {
            for w in block.windows(2) {
                gens.push(Permutation::from_cycles(n, &[vec![w[0] + 1, w[1] + 1]])?.into());
            }
        }
        group_from_generators(n, &gens)
    }

    /// `B_n = G(2,1,n)`, all signed permutations.
    pub fn hyperoctahedral(n: usize) -> Result<Group> {
        let mut gens: Vec<SignedPermutation> = Vec::new();
        for i in 1..n {
            gens.push(Permutation::from_cycles(n, &[vec![i, i + 1]])?.into());
        }
        let mut flip = vec![false; n];
        flip[0] = true;
        gens.push(SignedPermutation::new(Permutation::identity(n), flip)?);
        group_from_generators(n, &gens)
    }

    /// `G(2,2,n)`: signed permutations with an even number of sign changes.
    pub fn even_signed(n: usize) -> Result<Group> {
        let mut gens: Vec<SignedPermutation> = Vec::new();
        for i in 1..n {
            gens.push(Permutation::from_cycles(n, &[vec![i, i + 1]])?.into());
        }
        if n >= 2 {
            let mut flip = vec![false; n];
            flip[0] = true;
            flip[1] = true;
            gens.push(SignedPermutation::new(Permutation::identity(n), flip)?);
        }
        let g = group_from_generators(n, &gens)?;
        Ok(g.with_signed_flag(true))
    }

    fn with_signed_flag(mut self, signed: bool) -> Group {
        self.signed = signed;
        self
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    /// Elements in canonical `(signs, images)` order; the identity is first.
    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn contains(&self, g: &SignedPermutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.n == other.n && self.elements.iter().all(|g| other.contains(g))
    }

    /// `n!` for permutation groups, `2^n n!` for signed ones.
    pub fn ambient_order(&self) -> u64 {
        let f = factorial(self.n);
        if self.signed {
            f << self.n
        } else {
            f
        }
    }

    /// Number of reflections: transpositions, signed transpositions and
    /// single sign changes.
    pub fn count_reflections(&self) -> usize {
        self.elements.iter().filter(|g| g.is_reflection()).count()
    }

    /// Orbits of the underlying permutation action on `{0..n}`, each sorted,
    /// listed by smallest point.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = self
                .elements
                .iter()
                .map(|g| g.perm().image(start))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            orbit.sort_unstable();
            for &p in &orbit {
                seen[p] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Image in `S_n` after forgetting signs (the action modulo 2).
    pub fn unsigned_image(&self) -> Result<Group> {
        let gens: Vec<SignedPermutation> = self
            .generators
            .iter()
            .map(|g| SignedPermutation::from(g.perm().clone()))
            .collect();
        group_from_generators(self.n, &gens)
    }

    /// True when generated (as a group) by its reflections and bi-reflections.
    pub fn generated_by_bireflections(&self) -> Result<bool> {
        let gens: Vec<SignedPermutation> = self
            .elements
            .iter()
            .filter(|g| g.is_reflection() || g.is_bireflection())
            .cloned()
            .collect();
        Ok(group_from_generators(self.n, &gens)?.order() == self.order())
    }
}

/// Cycle type `i ↦ b_i` of a permutation of `{0..m}` given as an image table.
pub fn cycle_type_on_set(action: &[usize]) -> Result<BTreeMap<usize, usize>> {
    let m = action.len();
    let mut hit = vec![false; m];
    for &j in action {
        if j >= m || hit[j] {
            return Err(Error::InvalidInput(
                "action is not a permutation of the set".into(),
            ));
        }
        hit[j] = true;
    }
    let mut seen = vec![false; m];
    let mut out = BTreeMap::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = action[i];
            len += 1;
        }
        *out.entry(len).or_insert(0) += 1;
    }
    Ok(out)
}
