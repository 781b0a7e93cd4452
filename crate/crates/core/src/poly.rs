//! Sparse multivariate polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::perm::{SignedPermutation, MAX_SYMMETRIC_RANK};

/// Exponent vector over at most [`MAX_SYMMETRIC_RANK`] variables.
///
/// Ordered graded-lexicographically: by total degree, then by the exponent
/// of `x1`, then `x2`, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u8; MAX_SYMMETRIC_RANK],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_SYMMETRIC_RANK, "too many variables");
        let mut m = Monomial::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).expect("exponent exceeds 255");
        }
        m
    }

    /// The variable `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(m)
    }

    /// Image under `g`, with the sign picked up from negated variables.
    pub fn act(&self, g: &SignedPermutation) -> (bool, Monomial) {
        let mut out = Monomial::default();
        let mut negative = false;
        for i in 0..g.rank() {
            let e = self.exps[i];
            out.exps[g.perm().image(i)] = e;
            if g.negated()[i] && e % 2 == 1 {
                negative = !negative;
            }
        }
        (negative, out)
    }

    pub fn evaluate(&self, z: &[BigInt]) -> BigInt {
        let mut acc = BigInt::one();
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                acc *= num_traits::pow(z[i].clone(), e as usize);
            }
        }
        acc
    }

    /// All monomials of total degree `d` in `n` variables, ascending.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, n: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if i + 1 == n {
                cur.exps[i] = left as u8;
                out.push(*cur);
                cur.exps[i] = 0;
                return;
            }
            for e in 0..=left {
                cur.exps[i] = e as u8;
                rec(i + 1, n, left - e, cur, out);
            }
            cur.exps[i] = 0;
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        assert!(d <= u8::MAX as u32, "degree exceeds 255");
        rec(0, n, d, &mut Monomial::default(), &mut out);
        out.sort();
        out
    }

    /// Renders as `x1^2*x3`, or `1` for the empty monomial.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        SparsePoly::monomial(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        SparsePoly::monomial(nvars, Monomial::var(i), 1)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term(m, c.into());
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = SparsePoly::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), BigInt::from(c));
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, m: &Monomial) -> Option<&BigInt> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest monomial in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `g·f`, substituting `x_i ↦ s_i x_{π(i)}`.
    pub fn apply(&self, g: &SignedPermutation) -> SparsePoly {
        assert_eq!(g.rank(), self.nvars, "rank mismatch");
        let mut out = SparsePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let (neg, image) = m.act(g);
            out.terms.insert(image, if neg { -c } else { c.clone() });
        }
        out
    }

    pub fn evaluate(&self, z: &[BigInt]) -> BigInt {
        assert_eq!(z.len(), self.nvars, "point has wrong dimension");
        // powers[i][e] = z_i^e
        let maxdeg = self.degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<BigInt>> = z
            .iter()
            .map(|zi| {
                let mut v = Vec::with_capacity(maxdeg + 1);
                v.push(BigInt::one());
                for e in 1..=maxdeg {
                    let next = &v[e - 1] * zi;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exponent(i) as usize;
                if e > 0 {
                    t *= &pw[e];
                }
            }
            acc += t;
        }
        acc
    }

    /// gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, keeping the sign of the coefficients.
    pub fn primitive_part(&self) -> SparsePoly {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v / &c)).collect(),
        }
    }

    /// Divides every coefficient exactly by `c`; `None` if some division is inexact.
    pub fn exact_div(&self, c: &BigInt) -> Option<SparsePoly> {
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*m, q);
        }
        Some(SparsePoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render();
            if m.degree() == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a SparsePoly> for &'a SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars, "rank mismatch");
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        SparsePoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// `e_k(x_1..x_n)`, or `e_k(x_1²..x_n²)` when `squared`.
pub fn elementary_symmetric(n: usize, k: usize, squared: bool) -> SparsePoly {
    assert!(k <= n, "k must not exceed n");
    let power = if squared { 2 } else { 1 };
    let mut p = SparsePoly::zero(n);
    fn rec(start: usize, n: usize, left: usize, power: u32, cur: &mut [u32], p: &mut SparsePoly) {
        if left == 0 {
            p.add_term(Monomial::new(cur), BigInt::one());
            return;
        }
        for i in start..=(n - left) {
            cur[i] = power;
            rec(i + 1, n, left - 1, power, cur, p);
            cur[i] = 0;
        }
    }
    rec(0, n, k, power, &mut vec![0; n], &mut p);
    p
}

/// Vandermonde product `Π_{i<j} (x_i - x_j)`.
pub fn discriminant(n: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut c = vec![0; n];
            c[i] = 1;
            c[j] = -1;
            acc = &acc * &SparsePoly::linear(&c);
        }
    }
    acc
}
