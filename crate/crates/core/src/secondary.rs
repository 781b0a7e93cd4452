//! Greedy construction of universal secondary invariants.
//!
//! Secondaries are chosen degree by degree. In degree `d`, among the integer
//! combinations of the orbit sums `ψ_s` the one that keeps the gcd `μ` of the
//! maximal minors of `A = [θ_j(w_i)]` smallest is read off a Smith normal
//! form. Here `w_i = γ_i⁻¹·z` for a point `z` off every reflecting
//! hyperplane, so column `j` of `A` lists the values of `γ_i·θ_j` at `z`.
//!
//! By default every orbit sum of degree `d` is a candidate. Restricting to a
//! complement of the module span ([`CandidatePool::Complement`]) only
//! reaches the integer combinations of that complement, which can miss the
//! optimum: an integer invariant may be congruent to a non-integral
//! combination of the complement modulo `⊕_j ℚ[V]^Σ θ_j`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::frame::AmbientFrame;
use crate::hilbert::HilbertData;
use crate::linalg::{
    fraction_free_determinant, smith_normal_form, EchelonBasis, IntMatrix, ModpEchelon, PrimeField,
};
use crate::orbit::{render_orbit_sum, OrbitBasis};
use crate::perm::Group;
use crate::poly::{Monomial, SparsePoly};

/// `2^61 - 1`; complements are first located modulo this prime.
const ELIMINATION_PRIME: u64 = (1 << 61) - 1;

/// A homogeneous invariant stored both as an integer combination of orbit
/// sums and as an expanded polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Secondary {
    pub degree: u32,
    /// Orbit representatives with nonzero coefficients, in descending order.
    pub combination: Vec<(Monomial, BigInt)>,
    pub poly: SparsePoly,
}

impl Secondary {
    pub fn one(n: usize) -> Self {
        Secondary {
            degree: 0,
            combination: vec![(Monomial::one(), BigInt::one())],
            poly: SparsePoly::one(n),
        }
    }

    /// `Σ c_i Z(rep_i)` in the given orbit basis.
    pub fn from_coordinates(basis: &OrbitBasis, coords: &[BigInt]) -> Self {
        let combination = basis
            .reps()
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Secondary {
            degree: basis.degree(),
            combination,
            poly: basis.combine(coords),
        }
    }

    pub fn orbit_sum(group: &Group, m: &Monomial) -> Result<Self> {
        let basis = OrbitBasis::new(group, m.degree());
        let (idx, neg) = basis
            .locate(m)
            .ok_or_else(|| Error::InvalidInput(format!("orbit sum of {} vanishes", m.render())))?;
        let mut coords = vec![BigInt::zero(); basis.dim()];
        coords[idx] = if neg { -BigInt::one() } else { BigInt::one() };
        Ok(Self::from_coordinates(&basis, &coords))
    }

    /// Wraps a homogeneous `G`-invariant polynomial.
    pub fn from_poly(group: &Group, poly: &SparsePoly) -> Result<Self> {
        let degree = poly
            .degree()
            .ok_or_else(|| Error::InvalidInput("zero polynomial is not a secondary".into()))?;
        if !poly.is_homogeneous() {
            return Err(Error::InvalidInput(format!("{poly} is not homogeneous")));
        }
        let basis = OrbitBasis::new(group, degree);
        let coords = basis.coordinates(poly);
        if basis.combine(&coords) != *poly {
            return Err(Error::InvalidInput(format!("{poly} is not G-invariant")));
        }
        Ok(Self::from_coordinates(&basis, &coords))
    }

    /// E.g. `Z(x1^2*x2) - 2*Z(x1*x2*x3)`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, (m, c)) in self.combination.iter().enumerate() {
            let z = if m.degree() == 0 {
                "1".to_string()
            } else {
                render_orbit_sum(m)
            };
            let a = c.abs();
            let sep = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            out.push_str(sep);
            if a.is_one() {
                out.push_str(&z);
            } else {
                out.push_str(&format!("{a}*{z}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// A complete set `θ_1, …, θ_ℓ` with its evaluated matrix.
#[derive(Clone, Debug)]
pub struct SecondarySet {
    pub thetas: Vec<Secondary>,
    pub point: Vec<BigInt>,
    /// Position of `point` in the default point sequence, if taken from it.
    pub point_index: Option<usize>,
    /// `[θ_j(w_i)]`, square of size `ℓ`.
    pub matrix: IntMatrix,
    /// `|det matrix|`.
    pub mu: BigInt,
}

impl SecondarySet {
    pub fn degrees(&self) -> Vec<u32> {
        self.thetas.iter().map(|t| t.degree).collect()
    }

    pub fn polys(&self) -> Vec<SparsePoly> {
        self.thetas.iter().map(|t| t.poly.clone()).collect()
    }
}

/// Coordinates, in the orbit basis of degree `d`, of every product
/// `Z_Σ(κ)·θ_j` with `Z_Σ(κ)` a nonzero `Σ`-orbit sum of degree `d - a_j`.
///
/// Each column is read off at the orbit representatives: the coefficient of
/// `r` in `Z_Σ(κ)·θ` collects `θ_u` over the terms `u | r` with `r/u` in the
/// `Σ`-orbit `κ`. Thetas of degree above `d` contribute nothing.
pub fn module_span_at_degree(
    frame: &AmbientFrame,
    basis: &OrbitBasis,
    thetas: &[&Secondary],
) -> Vec<Vec<BigInt>> {
    let d = basis.degree();
    let mut keys_by_degree: HashMap<u32, HashMap<Monomial, usize>> = HashMap::new();
    let mut columns = Vec::new();
    for theta in thetas.iter().filter(|t| t.degree <= d) {
        let e = d - theta.degree;
        let keys = keys_by_degree.entry(e).or_insert_with(|| {
            frame
                .sigma_orbit_keys(e)
                .into_iter()
                .enumerate()
                .map(|(i, k)| (k, i))
                .collect()
        });
        let mut block = vec![vec![BigInt::zero(); basis.dim()]; keys.len()];
        for (i, r) in basis.reps().iter().enumerate() {
            for (u, c) in theta.poly.terms() {
                let Some(q) = r.div(u) else { continue };
                let Some(key) = frame.sigma_orbit_key(&q) else {
                    continue;
                };
                block[keys[&key]][i] += c;
            }
        }
        columns.extend(block);
    }
    columns
}

/// Echelon data of a span with pivots at the last nonzero coordinate; the
/// non-pivot coordinates are then the lexicographically first complement.
#[derive(Clone, Debug)]
enum ReverseEchelon {
    Modular(ModpEchelon),
    Exact(EchelonBasis),
}

impl ReverseEchelon {
    /// Eliminates `vectors`, first modulo a large prime and exactly when the
    /// modular rank falls short of `expected_rank`.
    fn build(len: usize, vectors: &[Vec<BigInt>], expected_rank: usize) -> Result<Self> {
        let field = PrimeField::new(ELIMINATION_PRIME)?;
        let mut ech = ModpEchelon::new(field, len);
        for v in vectors {
            if ech.rank() == expected_rank {
                break;
            }
            let r: Vec<u64> = v.iter().rev().map(|x| field.reduce(x)).collect();
            ech.insert(&r);
        }
        if ech.rank() == expected_rank {
            return Ok(ReverseEchelon::Modular(ech));
        }
        let mut exact = EchelonBasis::new(len);
        for v in vectors {
            if exact.rank() == expected_rank {
                break;
            }
            let r: Vec<BigInt> = v.iter().rev().cloned().collect();
            exact.insert(&r);
        }
        if exact.rank() < expected_rank {
            return Err(Error::RankDeficient {
                rank: exact.rank(),
                target: expected_rank,
            });
        }
        Ok(ReverseEchelon::Exact(exact))
    }

    fn rank(&self) -> usize {
        match self {
            ReverseEchelon::Modular(e) => e.rank(),
            ReverseEchelon::Exact(e) => e.rank(),
        }
    }

    fn insert(&mut self, v: &[BigInt]) -> bool {
        match self {
            ReverseEchelon::Modular(e) => {
                let f = PrimeField::new(ELIMINATION_PRIME).expect("valid prime");
                let r: Vec<u64> = v.iter().rev().map(|x| f.reduce(x)).collect();
                e.insert(&r)
            }
            ReverseEchelon::Exact(e) => {
                let r: Vec<BigInt> = v.iter().rev().cloned().collect();
                e.insert(&r)
            }
        }
    }

    fn complement(&self, len: usize) -> Vec<usize> {
        let pivots: Vec<usize> = match self {
            ReverseEchelon::Modular(e) => e.pivots(),
            ReverseEchelon::Exact(e) => e.pivots(),
        };
        let taken: std::collections::HashSet<usize> =
            pivots.into_iter().map(|p| len - 1 - p).collect();
        (0..len).filter(|i| !taken.contains(i)).collect()
    }
}

/// Indices of orbit sums of degree `basis.degree()` whose classes form a
/// basis of the quotient by the module spanned by `thetas`, chosen as the
/// leftmost complement in the descending order of representatives.
pub fn candidate_complement(
    frame: &AmbientFrame,
    basis: &OrbitBasis,
    thetas: &[&Secondary],
    missing: usize,
) -> Result<Vec<usize>> {
    let span = module_span_at_degree(frame, basis, thetas);
    let expected = basis
        .dim()
        .checked_sub(missing)
        .ok_or_else(|| Error::Invariant("more secondaries missing than invariants".into()))?;
    let ech = ReverseEchelon::build(basis.dim(), &span, expected)?;
    if ech.rank() != expected {
        return Err(Error::Invariant(format!(
            "module span in degree {} has rank {}, expected {expected}",
            basis.degree(),
            ech.rank()
        )));
    }
    Ok(ech.complement(basis.dim()))
}

/// Orbit sums offered to the Smith-form step in each degree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CandidatePool {
    /// Every orbit sum of the degree, a `ℤ`-basis of `ℤ[V]^G_d`.
    #[default]
    FullBasis,
    /// Only the leftmost complement of the module span.
    Complement,
}

/// Result of one greedy extension step.
#[derive(Clone, Debug)]
pub struct Extension {
    /// Integer combination of the candidates.
    pub coefficients: Vec<BigInt>,
    /// gcd of the entries of `V`; `μ` is multiplied by this factor.
    pub gain: BigInt,
}

/// Chooses `q` so that `θ = Σ q_s ψ_s` minimizes `μ([A | θ(w)])`.
///
/// `a` is `ℓ × k` of rank `k`, `psi` is `ℓ × r` holding `ψ_s(w_i)`. With
/// `P·A·Q = D`, `V` is the bottom `ℓ-k` rows of `P·Ψ` and `q` is the first
/// column of `Q_0` where `P_0·V·Q_0` is the Smith form of `V`.
pub fn extend_secondaries(a: &IntMatrix, psi: &IntMatrix) -> Result<Extension> {
    let l = psi.rows();
    let k = a.cols();
    let transformed = if k == 0 {
        psi.clone()
    } else {
        let snf = smith_normal_form(a);
        if snf.rank() != k {
            return Err(Error::Invariant(
                "evaluated matrix lost full column rank".into(),
            ));
        }
        snf.p.mul(psi)
    };
    let rows: Vec<usize> = (k..l).collect();
    let cols: Vec<usize> = (0..psi.cols()).collect();
    let v = transformed.select(&rows, &cols);
    if v.is_zero() {
        return Err(Error::DegeneratePoint);
    }
    let snf_v = smith_normal_form(&v);
    Ok(Extension {
        coefficients: snf_v.q.column(0),
        gain: snf_v.divisors[0].clone(),
    })
}

/// Runs the greedy construction at the first usable point.
pub fn universal_secondaries(
    frame: &AmbientFrame,
    hilbert: &HilbertData,
    point: Option<&[BigInt]>,
) -> Result<SecondarySet> {
    complete_secondaries(frame, hilbert, &[], point)
}

/// Greedy construction that places `forced` secondaries in their degrees
/// before filling the remaining slots.
pub fn complete_secondaries(
    frame: &AmbientFrame,
    hilbert: &HilbertData,
    forced: &[Secondary],
    point: Option<&[BigInt]>,
) -> Result<SecondarySet> {
    complete_secondaries_with_pool(frame, hilbert, forced, point, CandidatePool::default())
}

pub fn complete_secondaries_with_pool(
    frame: &AmbientFrame,
    hilbert: &HilbertData,
    forced: &[Secondary],
    point: Option<&[BigInt]>,
    pool: CandidatePool,
) -> Result<SecondarySet> {
    let mut per_degree: BTreeMap<u32, usize> = BTreeMap::new();
    for f in forced {
        *per_degree.entry(f.degree).or_default() += 1;
    }
    for (&d, &c) in &per_degree {
        if c > hilbert.tau(d) {
            return Err(Error::InvalidInput(format!(
                "{c} forced secondaries in degree {d}, only {} exist",
                hilbert.tau(d)
            )));
        }
    }
    let candidates: Vec<(Option<usize>, Vec<BigInt>)> = match point {
        Some(z) => {
            if !frame.is_generic_point(z) {
                return Err(Error::InvalidInput(
                    "evaluation point lies on a reflecting hyperplane".into(),
                ));
            }
            vec![(None, z.to_vec())]
        }
        None => frame
            .default_points()
            .into_iter()
            .enumerate()
            .filter(|(_, z)| frame.is_generic_point(z))
            .map(|(i, z)| (Some(i), z))
            .collect(),
    };
    let mut builder = Builder::new(frame, hilbert);
    builder.pool = pool;
    for (index, z) in candidates {
        match builder.run(&z, forced) {
            Ok((thetas, matrix)) => {
                let mu = fraction_free_determinant(&matrix).abs();
                return Ok(SecondarySet {
                    thetas,
                    point: z,
                    point_index: index,
                    matrix,
                    mu,
                });
            }
            Err(Error::DegeneratePoint) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::DegeneratePoint)
}

struct Builder<'a> {
    frame: &'a AmbientFrame,
    hilbert: &'a HilbertData,
    pool: CandidatePool,
    bases: HashMap<u32, OrbitBasis>,
}

impl<'a> Builder<'a> {
    fn new(frame: &'a AmbientFrame, hilbert: &'a HilbertData) -> Self {
        Builder {
            frame,
            hilbert,
            pool: CandidatePool::FullBasis,
            bases: HashMap::new(),
        }
    }

    fn basis(&mut self, d: u32) -> &OrbitBasis {
        let group = self.frame.subgroup();
        self.bases
            .entry(d)
            .or_insert_with(|| OrbitBasis::new(group, d))
    }

    fn run(&mut self, z: &[BigInt], forced: &[Secondary]) -> Result<(Vec<Secondary>, IntMatrix)> {
        let frame = self.frame;
        let l = frame.index();
        let points = frame.pulled_back_points(z);
        let mut thetas: Vec<Secondary> = Vec::with_capacity(l);
        let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(l);
        let mut mu = BigInt::one();

        for d in 0..=self.hilbert.max_degree() {
            let tau = self.hilbert.tau(d);
            if tau == 0 {
                continue;
            }
            for f in forced.iter().filter(|f| f.degree == d) {
                columns.push(points.iter().map(|w| f.poly.evaluate(w)).collect());
                thetas.push(f.clone());
            }
            let fixed = thetas.iter().filter(|t| t.degree == d).count();
            if fixed > 0 {
                let a = IntMatrix::from_columns(l, &columns);
                let snf = smith_normal_form(&a);
                if snf.rank() != columns.len() {
                    return Err(Error::DegeneratePoint);
                }
                mu = snf.divisors.iter().product();
            }
            if fixed == tau {
                continue;
            }

            self.basis(d);
            let basis = &self.bases[&d];
            let lower: Vec<&Secondary> = thetas.iter().filter(|t| t.degree < d).collect();
            let span = module_span_at_degree(frame, basis, &lower);
            let mut base = ReverseEchelon::build(basis.dim(), &span, basis.dim() - tau)?;
            if base.rank() != basis.dim() - tau {
                return Err(Error::Invariant(format!(
                    "module span in degree {d} has rank {}, expected {}",
                    base.rank(),
                    basis.dim() - tau
                )));
            }
            for t in thetas.iter().filter(|t| t.degree == d) {
                if !base.insert(&basis.coordinates(&t.poly)) {
                    return Err(Error::InvalidInput(format!(
                        "forced secondary {} is dependent in degree {d}",
                        t.render()
                    )));
                }
            }

            for _ in fixed..tau {
                let pool: Vec<usize> = match self.pool {
                    CandidatePool::Complement => base.complement(basis.dim()),
                    CandidatePool::FullBasis => (0..basis.dim()).collect(),
                };
                let values: Vec<Vec<BigInt>> = pool
                    .iter()
                    .map(|&s| {
                        let psi = basis.orbit_sum(s);
                        points.iter().map(|w| psi.evaluate(w)).collect()
                    })
                    .collect();
                let a = IntMatrix::from_columns(l, &columns);
                let ext = extend_secondaries(&a, &IntMatrix::from_columns(l, &values))?;

                let mut q = ext.coefficients;
                if q.iter()
                    .find(|c| !c.is_zero())
                    .is_some_and(|c| c.is_negative())
                {
                    q.iter_mut().for_each(|c| *c = -&*c);
                }
                let mut coords = vec![BigInt::zero(); basis.dim()];
                for (&s, c) in pool.iter().zip(&q) {
                    coords[s] = c.clone();
                }
                let theta = Secondary::from_coordinates(basis, &coords);
                let column: Vec<BigInt> = (0..l)
                    .map(|i| values.iter().zip(&q).map(|(v, c)| &v[i] * c).sum())
                    .collect();
                columns.push(column);

                let snf = smith_normal_form(&IntMatrix::from_columns(l, &columns));
                let next: BigInt = snf.divisors.iter().product();
                if next != &mu * &ext.gain {
                    return Err(Error::Invariant(format!(
                        "μ grew to {next}, expected {} · {}",
                        mu, ext.gain
                    )));
                }
                mu = next;
                base.insert(&coords);
                thetas.push(theta);
            }
        }
        if thetas.len() != l {
            return Err(Error::Invariant(format!(
                "built {} secondaries, expected ℓ = {l}",
                thetas.len()
            )));
        }
        Ok((thetas, IntMatrix::from_columns(l, &columns)))
    }
}

/// `det T` for two sequences of degree-`d` invariants with the same number
/// of members: the determinant of the change of basis between their classes
/// modulo the module spanned by `lower` (secondaries of degree below `d`).
/// Returns `None` when `reference` does not span the quotient.
///
/// For secondary sets that differ only in degree `d`, the deficiencies
/// satisfy `℧(alternative) = ℧(reference)·|det T|`.
pub fn degree_transition_determinant(
    frame: &AmbientFrame,
    basis: &OrbitBasis,
    lower: &[&Secondary],
    reference: &[Vec<BigInt>],
    alternative: &[Vec<BigInt>],
) -> Result<Option<BigRational>> {
    let n = basis.dim();
    let span = module_span_at_degree(frame, basis, lower);
    // reduced row echelon over ℚ, pivots at last nonzero coordinates
    let mut rows: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for v in &span {
        let mut r: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
        reduce_rational(&rows, &mut r);
        if let Some(p) = (0..n).rev().find(|&j| !r[j].is_zero()) {
            let inv = r[p].recip();
            r.iter_mut().for_each(|x| *x *= &inv);
            for (_, row) in rows.iter_mut() {
                if !row[p].is_zero() {
                    let f = row[p].clone();
                    for j in 0..n {
                        let t = &r[j] * &f;
                        row[j] -= t;
                    }
                }
            }
            rows.push((p, r));
        }
    }
    let pivots: std::collections::HashSet<usize> = rows.iter().map(|(p, _)| *p).collect();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    if reference.len() != free.len() || alternative.len() != free.len() {
        return Err(Error::InvalidInput(format!(
            "quotient has dimension {}, got {} and {} invariants",
            free.len(),
            reference.len(),
            alternative.len()
        )));
    }
    let class = |v: &Vec<BigInt>| -> Vec<BigRational> {
        let mut r: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
        reduce_rational(&rows, &mut r);
        free.iter().map(|&j| r[j].clone()).collect()
    };
    let det_ref = rational_determinant(reference.iter().map(class).collect());
    if det_ref.is_zero() {
        return Ok(None);
    }
    let det_alt = rational_determinant(alternative.iter().map(class).collect());
    Ok(Some(det_alt / det_ref))
}

fn reduce_rational(rows: &[(usize, Vec<BigRational>)], v: &mut [BigRational]) {
    for (p, row) in rows {
        if v[*p].is_zero() {
            continue;
        }
        let f = v[*p].clone();
        for (x, y) in v.iter_mut().zip(row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

fn rational_determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= &m[k][k];
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let t = &m[k][j] * &f;
                m[i][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{build_frame, AmbientChoice};
    use crate::hilbert::secondary_degrees;
    use crate::perm::{group_from_generators, Permutation, SignedPermutation};

    fn cyc(n: usize, cycles: &[&[usize]]) -> SignedPermutation {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap().into()
    }

    fn frame_of(g: &Group) -> AmbientFrame {
        build_frame(g, AmbientChoice::Auto).unwrap()
    }

    #[test]
    fn span_dimensions_for_a3() {
        let a3 = Group::alternating(3).unwrap();
        let f = frame_of(&a3);
        let one = Secondary::one(3);
        let b1 = OrbitBasis::new(&a3, 1);
        let span = module_span_at_degree(&f, &b1, &[&one]);
        assert_eq!(span.len(), 1);
        let b3 = OrbitBasis::new(&a3, 3);
        let span = module_span_at_degree(&f, &b3, &[&one]);
        let mut e = EchelonBasis::new(4);
        span.iter().for_each(|v| {
            e.insert(v);
        });
        assert_eq!(e.rank(), 3);
        let psi = Secondary::orbit_sum(&a3, &Monomial::new(&[2, 1, 0])).unwrap();
        let span = module_span_at_degree(&f, &b3, &[&one, &psi]);
        span.iter().for_each(|v| {
            e.insert(v);
        });
        assert_eq!(e.rank(), 4);
    }

    #[test]
    fn a3_complement_is_x1_squared_x2() {
        let a3 = Group::alternating(3).unwrap();
        let f = frame_of(&a3);
        let b3 = OrbitBasis::new(&a3, 3);
        let one = Secondary::one(3);
        let pool = candidate_complement(&f, &b3, &[&one], 1).unwrap();
        assert_eq!(pool.len(), 1);
        assert_eq!(b3.reps()[pool[0]], Monomial::new(&[2, 1, 0]));
    }

    #[test]
    fn gcd_gain() {
        let a = IntMatrix::from_i64(&[&[1], &[1]]);
        let psi = IntMatrix::from_i64(&[&[0], &[4]]);
        let ext = extend_secondaries(&a, &psi).unwrap();
        assert_eq!(ext.gain, BigInt::from(4));
        let psi = IntMatrix::from_i64(&[&[1, 2], &[5, 8]]);
        let ext = extend_secondaries(&a, &psi).unwrap();
        assert_eq!(ext.gain, BigInt::from(2));
        let psi = IntMatrix::from_i64(&[&[3], &[3]]);
        assert!(matches!(
            extend_secondaries(&a, &psi),
            Err(Error::DegeneratePoint)
        ));
    }

    #[test]
    fn alternating_groups_are_universal_with_unit_mu() {
        for n in 3..=4 {
            let g = Group::alternating(n).unwrap();
            let f = frame_of(&g);
            let h = secondary_degrees(&f).unwrap();
            let s = universal_secondaries(&f, &h, None).unwrap();
            assert_eq!(s.degrees(), vec![0, (n * (n - 1) / 2) as u32]);
            let delta = f.discriminant_at(&s.point);
            assert_eq!(&s.mu % &delta, BigInt::zero());
            assert_eq!(&s.mu / delta.abs(), BigInt::one());
        }
    }

    #[test]
    fn symmetric_group_has_single_secondary() {
        let g = Group::symmetric(4).unwrap();
        let f = frame_of(&g);
        let h = secondary_degrees(&f).unwrap();
        let s = universal_secondaries(&f, &h, None).unwrap();
        assert_eq!(s.thetas, vec![Secondary::one(4)]);
        assert_eq!(s.mu, BigInt::one());
    }

    #[test]
    fn forced_discriminant() {
        let g = Group::alternating(3).unwrap();
        let f = frame_of(&g);
        let h = secondary_degrees(&f).unwrap();
        let disc = Secondary::from_poly(&g, &crate::poly::discriminant(3)).unwrap();
        let s = complete_secondaries(&f, &h, &[disc], None).unwrap();
        let delta = f.discriminant_at(&s.point).abs();
        assert_eq!(&s.mu / delta, BigInt::from(2));
    }

    #[test]
    fn rejects_non_invariant() {
        let g = Group::alternating(3).unwrap();
        let p = SparsePoly::var(3, 0);
        assert!(Secondary::from_poly(&g, &p).is_err());
    }

    #[test]
    fn render_combination() {
        let g = group_from_generators(3, &[cyc(3, &[&[1, 2, 3]])]).unwrap();
        let b = OrbitBasis::new(&g, 3);
        let mut c = vec![BigInt::zero(); b.dim()];
        c[1] = BigInt::from(1);
        c[2] = BigInt::from(-2);
        let s = Secondary::from_coordinates(&b, &c);
        assert_eq!(s.render(), "Z(x1^2*x2) - 2*Z(x1^2*x3)");
    }

    #[test]
    fn transition_determinant_of_scaled_class() {
        let g = Group::alternating(3).unwrap();
        let f = frame_of(&g);
        let b = OrbitBasis::new(&g, 3);
        let one = Secondary::one(3);
        let psi = Secondary::orbit_sum(&g, &Monomial::new(&[2, 1, 0])).unwrap();
        let disc = crate::poly::discriminant(3);
        let t = degree_transition_determinant(
            &f,
            &b,
            &[&one],
            &[b.coordinates(&psi.poly)],
            &[b.coordinates(&disc)],
        )
        .unwrap()
        .unwrap();
        assert_eq!(t.abs(), BigRational::from_integer(BigInt::from(2)));
    }
}
