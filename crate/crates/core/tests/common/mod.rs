//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles only use the polynomial and permutation primitives of the crate.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use cmdeficiency::perm::{group_from_generators, Group, Permutation, SignedPermutation};
use cmdeficiency::poly::{elementary_symmetric, Monomial, SparsePoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const ORDER_20: &str = "n=5; gens=(1,5,4,2,3);(2,3,4,5)";
pub const ORDER_36: &str = "n=6; gens=(2,3,6);(1,3,4,6)(2,5);(1,4)(3,6);(1,5,4)(2,3,6)";
pub const YOUNG_ALT_5: &str = "n=5; gens=(1,2)(4,5);(1,2,3)";
pub const EVEN_SIGNED_5: &str = "n=5; gens=[-1,-2,3,4,5];(1,2);(1,2,3,4,5)";

pub fn alternating(n: usize) -> String {
    match n {
        3 => "n=3; gens=(1,2,3)".into(),
        4 => "n=4; gens=(1,2,3);(2,3,4)".into(),
        5 => "n=5; gens=(1,2,3);(2,3,4);(3,4,5)".into(),
        _ => panic!("no fixture for A_{n}"),
    }
}

/// Groups with index at most 8 in their default ambient.
pub const SMALL_INDEX_GROUPS: &[&str] = &[
    "n=3; gens=(1,2,3)",
    "n=4; gens=(1,2,3);(2,3,4)",
    "n=5; gens=(1,2,3);(2,3,4);(3,4,5)",
    "n=4; gens=(1,2,3,4)",
    "n=4; gens=(1,2,3,4);(1,3)",
    "n=4; gens=(1,2)(3,4);(1,3)(2,4)",
    "n=4; gens=(1,2,3)",
    "n=4; gens=(1,2)(3,4)",
    "n=5; gens=(1,5,4,2,3);(2,3,4,5)",
    "n=5; gens=(1,2)(4,5);(1,2,3)",
    "n=6; gens=(1,2,3);(2,3,4,5,6)",
    "n=3; gens=[-1,-2,3];(1,2);(1,2,3)",
    "n=4; gens=[-1,-2,3,4];(1,2);(1,2,3,4)",
    "n=5; gens=[-1,-2,3,4,5];(1,2);(1,2,3,4,5)",
    "n=2; gens=[2,-1]",
    "n=3; gens=[-1,2,3];[2,1,3]",
];

pub fn cycles(n: usize, cs: &[&[usize]]) -> SignedPermutation {
    let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(n, &cs).unwrap().into()
}

pub fn order20_group() -> Group {
    group_from_generators(
        5,
        &[cycles(5, &[&[1, 5, 4, 2, 3]]), cycles(5, &[&[2, 3, 4, 5]])],
    )
    .unwrap()
}

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e)
}

/// `Σ_{g∈G} g·m` divided by the stabilizer size, computed from the group
/// elements directly.
pub fn brute_orbit_sum(g: &Group, m: &Monomial) -> SparsePoly {
    let n = g.rank();
    let single = SparsePoly::monomial(n, *m, 1);
    let mut total = SparsePoly::zero(n);
    for x in g.elements() {
        total = &total + &single.apply(x);
    }
    // every orbit monomial appears |Stab| times up to sign
    let stab = g
        .elements()
        .iter()
        .filter(|x| single.apply(x) == single)
        .count();
    total
        .exact_div(&BigInt::from(stab))
        .unwrap_or_else(|| total.clone())
}

/// Number of monomial orbits of degree `d` with nonvanishing signed orbit sum.
pub fn brute_invariant_dimension(g: &Group, d: u32) -> usize {
    let n = g.rank();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut count = 0;
    for m in Monomial::all_of_degree(n, d) {
        if seen.contains(&m) {
            continue;
        }
        let single = SparsePoly::monomial(n, m, 1);
        let mut total = SparsePoly::zero(n);
        for x in g.elements() {
            let img = single.apply(x);
            let (im, _) = img.terms().next().unwrap();
            seen.insert(*im);
            total = &total + &img;
        }
        if !total.is_zero() {
            count += 1;
        }
    }
    count
}

/// Determinant by Gaussian elimination over `ℚ`.
pub fn rational_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k].clone();
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Left cosets `xG` of `G` in `S_n` as sets of image vectors.
fn left_cosets(g: &Group) -> Vec<BTreeSet<Vec<usize>>> {
    let n = g.rank();
    let mut all: Vec<Vec<usize>> = Vec::new();
    permutations(n, &mut Vec::new(), &mut all);
    let mut assigned: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut cosets = Vec::new();
    for x in all {
        if assigned.contains(&x) {
            continue;
        }
        let xs: SignedPermutation = Permutation::new(x.clone()).unwrap().into();
        let coset: BTreeSet<Vec<usize>> = g
            .elements()
            .iter()
            .map(|h| xs.compose(h).perm().images().to_vec())
            .collect();
        assigned.extend(coset.iter().cloned());
        cosets.push(coset);
    }
    cosets
}

fn permutations(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for i in 0..n {
        if !cur.contains(&i) {
            cur.push(i);
            permutations(n, cur, out);
            cur.pop();
        }
    }
}

/// `e(G, x_i - x_j)` for `G ≤ S_n`: `Σ (len-1)` over the cycles of the
/// transposition `(i j)` acting on the left cosets.
pub fn brute_difference_exponents(g: &Group) -> BTreeMap<(usize, usize), u64> {
    let n = g.rank();
    let cosets = left_cosets(g);
    let index_of = |p: &Vec<usize>| cosets.iter().position(|c| c.contains(p)).unwrap();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(i, j);
            let ts: SignedPermutation = Permutation::new(t).unwrap().into();
            let action: Vec<usize> = cosets
                .iter()
                .map(|c| {
                    let x: SignedPermutation = Permutation::new(c.iter().next().unwrap().clone())
                        .unwrap()
                        .into();
                    index_of(&ts.compose(&x).perm().images().to_vec())
                })
                .collect();
            let mut seen = vec![false; action.len()];
            let mut e = 0u64;
            for s in 0..action.len() {
                if seen[s] {
                    continue;
                }
                let mut len = 0;
                let mut c = s;
                while !seen[c] {
                    seen[c] = true;
                    c = action[c];
                    len += 1;
                }
                e += len - 1;
            }
            out.insert((i, j), e);
        }
    }
    out
}

/// `Δ(G)(z)` from brute-force exponents.
pub fn brute_delta_at(g: &Group, z: &[BigInt]) -> BigInt {
    brute_difference_exponents(g)
        .into_iter()
        .map(|((i, j), e)| num_traits::pow(&z[i] - &z[j], e as usize))
        .product()
}

/// `M(θ)(z)` with rows indexed by left coset representatives of `G` in `S_n`.
pub fn brute_matrix_at(g: &Group, thetas: &[SparsePoly], z: &[BigInt]) -> Vec<Vec<BigInt>> {
    left_cosets(g)
        .iter()
        .map(|c| {
            let x: SignedPermutation = Permutation::new(c.iter().next().unwrap().clone())
                .unwrap()
                .into();
            thetas.iter().map(|t| t.apply(&x).evaluate(z)).collect()
        })
        .collect()
}

/// `|det M(θ)(z) / Δ(G)(z)|` for `G ≤ S_n`, all from brute force.
pub fn brute_deficiency(g: &Group, thetas: &[SparsePoly], z: &[BigInt]) -> BigInt {
    let det = rational_det(&brute_matrix_at(g, thetas, z));
    let delta = brute_delta_at(g, z);
    assert!((&det % &delta).is_zero(), "Δ(z) does not divide det M(z)");
    (det / delta).abs()
}

/// Rank over `F_p` of `{e^α·θ_j}` in degree `d`, read at the orbit
/// representatives (largest monomial of each orbit); returns
/// `(rank, dim (F_p[V]^G)_d, the reps outside the span)`.
pub fn brute_primary_span_rank(
    g: &Group,
    thetas: &[SparsePoly],
    p: u64,
    d: u32,
) -> (usize, usize, Vec<Monomial>) {
    let n = g.rank();
    let reps = orbit_reps(g, d);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for t in thetas {
        let a = t.degree().unwrap();
        if a > d {
            continue;
        }
        for alpha in partitions_by_degrees(n, d - a) {
            let mut prod = t.clone();
            for (k, &c) in alpha.iter().enumerate() {
                prod = &prod * &elementary_symmetric(n, k + 1, false).pow(c);
            }
            rows.push(reps.iter().map(|r| modp(&prod.coeff(r), p)).collect());
        }
    }
    let (rank, pivots) = rank_modp(rows, reps.len(), p);
    let missing = (0..reps.len())
        .filter(|i| !pivots.contains(i))
        .map(|i| reps[i])
        .collect();
    (rank, reps.len(), missing)
}

/// Whether `f` reduces into the `F_p`-span of the products `e^α·θ_j`.
pub fn brute_in_span_modp(g: &Group, thetas: &[SparsePoly], f: &SparsePoly, p: u64) -> bool {
    let d = f.degree().unwrap();
    let reps = orbit_reps(g, d);
    let mut rows: Vec<Vec<u64>> = brute_products(g.rank(), thetas, d)
        .iter()
        .map(|q| reps.iter().map(|r| modp(&q.coeff(r), p)).collect())
        .collect();
    let (before, _) = rank_modp(rows.clone(), reps.len(), p);
    rows.push(reps.iter().map(|r| modp(&f.coeff(r), p)).collect());
    let (after, _) = rank_modp(rows, reps.len(), p);
    before == after
}

fn modp(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = if r.is_negative() {
        r + BigInt::from(p)
    } else {
        r
    };
    r.try_into().unwrap()
}

/// Largest monomial of each monomial orbit of degree `d` (unsigned groups).
pub fn orbit_reps(g: &Group, d: u32) -> Vec<Monomial> {
    let n = g.rank();
    let mut reps: BTreeSet<Monomial> = BTreeSet::new();
    for m in Monomial::all_of_degree(n, d) {
        let single = SparsePoly::monomial(n, m, 1);
        let best = g
            .elements()
            .iter()
            .map(|x| *single.apply(x).terms().next().unwrap().0)
            .max()
            .unwrap();
        reps.insert(best);
    }
    reps.into_iter().rev().collect()
}

/// Exponent vectors `α` with `Σ (k+1)·α_k = d`.
fn partitions_by_degrees(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = k as u32 + 1;
        for c in 0..=left / w {
            cur.push(c);
            rec(k + 1, n, left - c * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// Row reduction modulo `p`; returns the rank and the pivot columns with
/// pivots taken at the first nonzero entry.
fn rank_modp(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> (usize, Vec<usize>) {
    let inv = |a: u64| -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(i) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, i);
        let iv = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * iv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for j in 0..cols {
                    rows[r][j] = (rows[r][j] + p * p - f * rows[rank][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (rank, pivots)
}

/// Reads back `"Z(x1^2*x2)"` style orbit-sum names as their representative.
pub fn parse_orbit_name(name: &str, n: usize) -> Monomial {
    let body = name.trim_start_matches("Z(").trim_end_matches(')');
    let mut exps = vec![0u32; n];
    for factor in body.split('*') {
        let (var, e) = factor.split_once('^').unwrap_or((factor, "1"));
        let i: usize = var.trim_start_matches('x').parse().unwrap();
        exps[i - 1] = e.parse().unwrap();
    }
    Monomial::new(&exps)
}

pub fn count_by_degree(degrees: &[u32]) -> HashMap<u32, usize> {
    let mut m = HashMap::new();
    for &d in degrees {
        *m.entry(d).or_default() += 1;
    }
    m
}

/// Products `e^α·θ_j` of degree `d`, with `e_k` the elementary symmetric
/// polynomials.
pub fn brute_products(n: usize, thetas: &[SparsePoly], d: u32) -> Vec<SparsePoly> {
    let mut out = Vec::new();
    for t in thetas {
        let a = t.degree().unwrap();
        if a > d {
            continue;
        }
        for alpha in partitions_by_degrees(n, d - a) {
            let mut prod = t.clone();
            for (k, &c) in alpha.iter().enumerate() {
                if c > 0 {
                    prod = &prod * &elementary_symmetric(n, k + 1, false).pow(c);
                }
            }
            out.push(prod);
        }
    }
    out
}

/// Solves `Σ c_k cols[k] = rhs` over `ℚ`; `None` when inconsistent.
pub fn rational_solve(cols: &[Vec<BigInt>], rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    let k = cols.len();
    let m = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = cols
                .iter()
                .map(|c| BigRational::from_integer(c[i].clone()))
                .collect();
            row.push(BigRational::from_integer(rhs[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=k {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = a[i][k].clone();
    }
    Some(sol)
}

/// Smallest `c > 0` with `c·f` in `⊕ ℤ[e]·θ_j`, from an explicit solve
/// against the expanded products; `None` when `f` is outside the ℚ-span.
pub fn brute_membership_denominator(
    g: &Group,
    thetas: &[SparsePoly],
    f: &SparsePoly,
) -> Option<BigInt> {
    let d = f.degree().unwrap();
    let reps = orbit_reps(g, d);
    let cols: Vec<Vec<BigInt>> = brute_products(g.rank(), thetas, d)
        .iter()
        .map(|p| reps.iter().map(|r| p.coeff(r)).collect())
        .collect();
    let rhs: Vec<BigInt> = reps.iter().map(|r| f.coeff(r)).collect();
    let sol = rational_solve(&cols, &rhs)?;
    Some(sol.iter().fold(BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    }))
}

/// Reduced row echelon form over `ℚ`, pivots at the first nonzero entry.
pub fn rational_rref(rows: &[Vec<BigInt>]) -> Vec<(usize, Vec<BigRational>)> {
    let mut out: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for v in rows {
        let mut r: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
        for (p, row) in &out {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = r[p].recip();
        r.iter_mut().for_each(|x| *x *= &inv);
        for (_, row) in out.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        out.push((p, r));
    }
    out
}

pub fn rational_reduce(rref: &[(usize, Vec<BigRational>)], v: &[BigInt]) -> Vec<BigRational> {
    let mut r: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
    for (p, row) in rref {
        if !r[*p].is_zero() {
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
    }
    r
}

/// Number of reflections, counted as elements whose matrix minus the
/// identity has rank one.
pub fn brute_reflection_count(g: &Group) -> usize {
    let n = g.rank();
    g.elements()
        .iter()
        .filter(|x| {
            let mut rows = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                let j = x.perm().image(i);
                rows[j][i] += if x.negated()[i] { -1 } else { 1 };
                rows[i][i] -= 1;
            }
            rational_rref(&rows).len() == 1
        })
        .count()
}
