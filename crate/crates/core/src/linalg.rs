//! Exact linear algebra over the integers, the rationals and `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column has wrong length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Sub-matrix of the listed rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Appends a column on the right.
    pub fn push_column(&self, col: &[BigInt]) -> IntMatrix {
        assert_eq!(col.len(), self.rows, "column has wrong length");
        let mut m = IntMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            m[(i, self.cols)] = col[i].clone();
        }
        m
    }

    /// gcd of all entries (zero for the zero matrix).
    pub fn entry_gcd(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[source * self.cols + j] * factor;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + source] * factor;
            self.data[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `P·A·Q = D` with `P`, `Q` unimodular and `D` diagonal.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub d: IntMatrix,
    /// Nonnegative diagonal entries `m_1 | m_2 | ⋯`, one per `min(rows, cols)`.
    pub divisors: Vec<BigInt>,
}

impl SnfResult {
    /// Number of nonzero elementary divisors.
    pub fn rank(&self) -> usize {
        self.divisors.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with transforms.
///
/// Pivots are nonzero entries of minimal absolute value (ties: smallest row,
/// then smallest column).
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut p = IntMatrix::identity(r);
    let mut q = IntMatrix::identity(c);
    let steps = r.min(c);

    for t in 0..steps {
        let Some((pi, pj)) = min_abs_entry(&d, t..r, t..c) else {
            break;
        };
        d.swap_rows(t, pi);
        p.swap_rows(t, pi);
        d.swap_cols(t, pj);
        q.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            // clear column t below the pivot
            for i in (t + 1)..r {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let f = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &f);
                p.add_row_multiple(i, t, &f);
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in (t + 1)..c {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let f = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &f);
                q.add_col_multiple(j, t, &f);
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a remainder smaller than the pivot survived: move it to (t,t)
                let col = min_abs_entry(&d, t..r, t..(t + 1)).unwrap();
                let row = min_abs_entry(&d, t..(t + 1), t..c).unwrap();
                let (bi, bj) = if d[col].abs() <= d[row].abs() {
                    col
                } else {
                    row
                };
                d.swap_rows(t, bi);
                p.swap_rows(t, bi);
                d.swap_cols(t, bj);
                q.swap_cols(t, bj);
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let mut offender = None;
            'scan: for i in (t + 1)..r {
                for j in (t + 1)..c {
                    if !d[(i, j)].is_multiple_of(&d[(t, t)]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    p.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
    }

    let divisors = (0..steps).map(|i| d[(i, i)].clone()).collect();
    SnfResult { p, q, d, divisors }
}

/// Position of the nonzero entry of minimal absolute value in a block.
fn min_abs_entry(
    m: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &m[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                Some(b) if m[b].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn fraction_free_determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match ((k + 1)..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    let det = m[(n - 1, n - 1)].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Product of the elementary divisors, i.e. the gcd of all maximal minors.
/// Requires `rows >= cols`; zero when the columns are dependent.
pub fn minor_gcd(a: &IntMatrix) -> BigInt {
    assert!(a.rows >= a.cols, "minor_gcd needs rows >= cols");
    if a.cols <= 3 {
        return minor_gcd_enumerated(a);
    }
    let snf = smith_normal_form(a);
    snf.divisors.iter().fold(BigInt::one(), |acc, d| acc * d)
}

/// gcd of all maximal minors by direct enumeration of row subsets.
pub fn minor_gcd_enumerated(a: &IntMatrix) -> BigInt {
    assert!(a.rows >= a.cols, "minor_gcd needs rows >= cols");
    let k = a.cols;
    let cols: Vec<usize> = (0..k).collect();
    let mut g = BigInt::zero();
    for_each_subset(a.rows, k, &mut |rows| {
        let det = fraction_free_determinant(&a.select(rows, &cols));
        g = g.gcd(&det);
    });
    g
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Incremental row-echelon basis of a subspace of `Q^len`, stored with
/// primitive integer rows.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    len: usize,
    // sorted by pivot column; each row is zero before its pivot
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Reduces `v` against the basis; the result vanishes at every pivot.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.len, "vector has wrong length");
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = &row[*pivot];
            let g = a.gcd(&v[*pivot]);
            let fa = a / &g;
            let fv = &v[*pivot] / &g;
            for j in 0..self.len {
                if row[j].is_zero() {
                    if !fa.is_one() && !v[j].is_zero() {
                        v[j] *= &fa;
                    }
                    continue;
                }
                let nv = &v[j] * &fa - &row[j] * &fv;
                v[j] = nv;
            }
            make_primitive(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[BigInt]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, r));
                true
            }
        }
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

/// Leftmost-pivot column selection: the lexicographically first set of
/// columns forming a basis of the column space.
pub fn rational_column_select(a: &[Vec<BigRational>], target_rank: usize) -> Result<Vec<usize>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut basis = EchelonBasis::new(rows);
    let mut chosen = Vec::new();
    for j in 0..cols {
        let lcm = (0..rows).fold(BigInt::one(), |l, i| l.lcm(a[i][j].denom()));
        let col: Vec<BigInt> = (0..rows)
            .map(|i| a[i][j].numer() * (&lcm / a[i][j].denom()))
            .collect();
        if basis.insert(&col) {
            chosen.push(j);
        }
    }
    if chosen.len() < target_rank {
        return Err(Error::RankDeficient {
            rank: chosen.len(),
            target: target_rank,
        });
    }
    Ok(chosen)
}

/// Solves the square nonsingular system `A x = b` over the rationals.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.rows;
    assert_eq!(a.cols, n, "solve_rational needs a square matrix");
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a
                .row(i)
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect();
            row.push(BigRational::from_integer(b[i].clone()));
            row
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, piv);
        let inv = m[k][k].recip();
        for j in k..=n {
            let v = &m[k][j] * &inv;
            m[k][j] = v;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            for j in k..=n {
                let v = &m[k][j] * &f;
                m[i][j] -= v;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Residue arithmetic modulo a prime below `2^61`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1u64 << 61)).contains(&p) {
            return Err(Error::InvalidInput(format!("prime {p} outside 2..2^61")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = v.mod_floor(&m);
        r.try_into().expect("residue fits in u64")
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

/// Incremental echelon basis over `F_p`.
#[derive(Clone, Debug)]
pub struct ModpEchelon {
    field: PrimeField,
    len: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModpEchelon {
    pub fn new(field: PrimeField, len: usize) -> Self {
        ModpEchelon {
            field,
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.len, "vector has wrong length");
        let f = self.field;
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            // rows are normalized to a unit pivot
            for j in *pivot..self.len {
                if row[j] != 0 {
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
                }
            }
        }
        v
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut r = self.reduce(v);
        match r.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                let inv = self.field.inv(r[p]);
                for x in r.iter_mut() {
                    *x = self.field.mul(*x, inv);
                }
                let at = self.rows.partition_point(|(q, _)| *q < p);
                self.rows.insert(at, (p, r));
                true
            }
        }
    }
}

/// Deterministic primality for `u64` by trial division up to `sqrt(n)` for
/// small inputs and Miller-Rabin with a fixed base set otherwise.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn cofactor_det(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = cofactor_det(&m.select(&rows, &cols));
            let term = &m[(0, j)] * minor;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.p.mul(a).mul(&s.q), s.d);
        assert!(fraction_free_determinant(&s.p).abs().is_one());
        assert!(fraction_free_determinant(&s.q).abs().is_one());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in s.divisors.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    #[test]
    fn snf_examples() {
        let s = check_snf(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.divisors, vec![big(2), big(4)]);
        let s = check_snf(&IntMatrix::identity(4));
        assert!(s.divisors.iter().all(|d| d.is_one()));
        let s = check_snf(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.divisors, vec![big(1), big(6)]);
        let s = check_snf(&IntMatrix::zeros(2, 3));
        assert!(s.divisors.iter().all(|d| d.is_zero()));
    }

    #[test]
    fn snf_rectangular() {
        let a = IntMatrix::from_i64(&[&[1, 2], &[3, 4], &[5, 6]]);
        let s = check_snf(&a);
        assert_eq!(s.divisors, vec![big(1), big(2)]);
        let s = check_snf(&a.transpose());
        assert_eq!(s.divisors, vec![big(1), big(2)]);
    }

    #[test]
    fn minor_gcds() {
        assert_eq!(minor_gcd(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]])), big(8));
        assert_eq!(minor_gcd(&IntMatrix::from_i64(&[&[1], &[0], &[0]])), big(1));
        assert_eq!(minor_gcd(&IntMatrix::from_i64(&[&[2], &[4], &[6]])), big(2));
        assert_eq!(
            minor_gcd(&IntMatrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]])),
            big(0)
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(
            fraction_free_determinant(&IntMatrix::from_i64(&[&[1, 2], &[3, 4]])),
            big(-2)
        );
        assert_eq!(fraction_free_determinant(&IntMatrix::identity(5)), big(1));
        let a = IntMatrix::from_i64(&[&[0, 1, 2], &[0, 3, 4], &[5, 6, 7]]);
        assert_eq!(fraction_free_determinant(&a), cofactor_det(&a));
    }

    #[test]
    fn column_selection() {
        let r = |v: i64| BigRational::from_integer(big(v));
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(rational_column_select(&a, 1).unwrap(), vec![0]);
        let id: Vec<Vec<BigRational>> = (0..3)
            .map(|i| (0..3).map(|j| r((i == j) as i64)).collect())
            .collect();
        assert_eq!(rational_column_select(&id, 3).unwrap(), vec![0, 1, 2]);
        let b = vec![vec![r(1), r(1), r(0)], vec![r(0), r(1), r(1)]];
        assert_eq!(rational_column_select(&b, 2).unwrap(), vec![0, 1]);
        assert!(matches!(
            rational_column_select(&a, 2),
            Err(Error::RankDeficient { rank: 1, target: 2 })
        ));
        let half = BigRational::new(big(1), big(2));
        let c = vec![vec![half.clone(), r(1)], vec![r(1), r(2)]];
        assert_eq!(rational_column_select(&c, 1).unwrap(), vec![0]);
    }

    #[test]
    fn rational_solve() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        let x = solve_rational(&a, &[big(1), big(2)]).unwrap();
        assert_eq!(x[0], BigRational::new(big(1), big(2)));
        assert_eq!(x[1], BigRational::new(big(1), big(2)));
        assert!(
            solve_rational(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]]), &[big(0), big(0)]).is_none()
        );
    }

    #[test]
    fn modp_echelon_rank() {
        let f = PrimeField::new(2).unwrap();
        let mut e = ModpEchelon::new(f, 2);
        assert!(e.insert(&[1, 1]));
        assert!(!e.insert(&[1, 1]));
        assert!(e.insert(&[0, 1]));
        assert_eq!(e.rank(), 2);
        assert!(PrimeField::new(4).is_err());
        assert_eq!(PrimeField::new(7).unwrap().inv(3), 5);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
            proptest::collection::vec(-9i64..=9, rows * cols).prop_map(move |v| {
                IntMatrix::from_rows(
                    v.chunks(cols)
                        .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                        .collect(),
                )
            })
        }

        proptest! {
            #[test]
            fn snf_round_trip(a in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
                check_snf(&a);
            }

            #[test]
            fn bareiss_matches_cofactor(a in matrix(4, 4)) {
                prop_assert_eq!(fraction_free_determinant(&a), cofactor_det(&a));
            }

            #[test]
            fn determinant_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
                let lhs = fraction_free_determinant(&a.mul(&b));
                prop_assert_eq!(lhs, fraction_free_determinant(&a) * fraction_free_determinant(&b));
            }

            #[test]
            fn minor_gcd_routes_agree(a in matrix(6, 4)) {
                let via_snf = {
                    let s = smith_normal_form(&a);
                    s.divisors.iter().fold(BigInt::one(), |acc, d| acc * d)
                };
                prop_assert_eq!(via_snf, minor_gcd_enumerated(&a));
            }

            #[test]
            fn divisors_invariant_under_row_permutation(a in matrix(4, 3)) {
                let flipped = a.select(&[3, 1, 0, 2], &[2, 0, 1]);
                prop_assert_eq!(smith_normal_form(&a).divisors, smith_normal_form(&flipped).divisors);
                let sq = a.select(&[0, 1, 2], &[0, 1, 2]);
                let sq_flip = a.select(&[1, 0, 2], &[0, 1, 2]);
                prop_assert_eq!(fraction_free_determinant(&sq), -fraction_free_determinant(&sq_flip));
            }

            #[test]
            fn echelon_rank_matches_snf(a in matrix(5, 4)) {
                let mut e = EchelonBasis::new(4);
                for i in 0..5 {
                    e.insert(a.row(i));
                }
                prop_assert_eq!(e.rank(), smith_normal_form(&a).rank());
            }
        }
    }
}
