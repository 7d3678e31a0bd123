//! Smith normal form over the integers.
//!
//! Small matrices (at most [`CERTIFICATE_MAX_COLS`] columns) are reduced
//! densely while tracking unimodular `U`, `V` and their inverses, and the
//! identity `U·M·V = D` is checked exactly. Larger matrices are first
//! shrunk by sparse elimination on unit pivots (Markowitz order), then the
//! residual is reduced densely; the result is cross-checked against ranks
//! modulo several primes. Arithmetic runs in checked `i64` and restarts in
//! `BigInt` on overflow.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntegerMatrix;

/// Matrices with at most this many columns get a full certificate.
pub const CERTIFICATE_MAX_COLS: usize = 200;

/// Primes used for rank spot checks.
pub const SPOT_CHECK_PRIMES: [u64; 3] = [2, 3, 2_147_483_647];

#[derive(Debug)]
struct Overflow;

trait Entry: Clone + Debug {
    fn nil() -> Self;
    fn unit() -> Self;
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Result<Self, Overflow>;
    fn abs_lt(&self, other: &Self) -> bool;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow>;
    fn add(&self, other: &Self) -> Result<Self, Overflow>;
    fn div_floor(&self, other: &Self) -> Self;
    fn divides(&self, other: &Self) -> bool;
}

impl Entry for i64 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*b)
            .and_then(|p| self.checked_sub(p))
            .ok_or(Overflow)
    }
    fn add(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_add(*other).ok_or(Overflow)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn divides(&self, other: &Self) -> bool {
        if *self == 0 {
            *other == 0
        } else {
            other % self == 0
        }
    }
}

impl Entry for BigInt {
    fn nil() -> Self {
        BigInt::zero()
    }
    fn unit() -> Self {
        BigInt::one()
    }
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(self - q * b)
    }
    fn add(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self + other)
    }
    fn div_floor(&self, other: &Self) -> Self {
        Integer::div_floor(self, other)
    }
    fn divides(&self, other: &Self) -> bool {
        if Zero::is_zero(self) {
            Zero::is_zero(other)
        } else {
            Zero::is_zero(&(other % self))
        }
    }
}

/// Evidence that the factors are correct.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// Unimodular transforms with `U·M·V = D`.
    Unimodular {
        u: IntegerMatrix,
        u_inv: IntegerMatrix,
        v: IntegerMatrix,
        v_inv: IntegerMatrix,
    },
    /// Rank of `M` modulo each listed prime.
    RankModP(Vec<(u64, usize)>),
}

/// Invariant factors of a matrix with the evidence that produced them.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub factors: Vec<BigInt>,
    pub certificate: Certificate,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn has_unimodular_certificate(&self) -> bool {
        matches!(self.certificate, Certificate::Unimodular { .. })
    }

    /// The diagonal matrix `D`.
    pub fn diagonal(&self) -> IntegerMatrix {
        IntegerMatrix::from_triplets(
            self.rows,
            self.cols,
            self.factors.iter().enumerate().map(|(i, d)| (i, i, d.clone())),
        )
    }

    pub fn divisibility_chain_holds(&self) -> bool {
        self.factors.iter().all(|d| d.is_positive())
            && self.factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }

    /// Re-checks the certificate against `m` exactly.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        if !self.divisibility_chain_holds() || m.rows() != self.rows || m.cols() != self.cols {
            return false;
        }
        match &self.certificate {
            Certificate::Unimodular { u, u_inv, v, v_inv } => {
                u.mul(m).mul(v) == self.diagonal()
                    && u.mul(u_inv) == IntegerMatrix::identity(self.rows)
                    && v.mul(v_inv) == IntegerMatrix::identity(self.cols)
            }
            Certificate::RankModP(checks) => checks.iter().all(|&(p, r)| {
                let expect = self.factors.iter().filter(|d| !(*d % p).is_zero()).count();
                r == expect && rank_mod_p(m, p) == r
            }),
        }
    }
}

/// Smith normal form, with a unimodular certificate when the matrix has at
/// most [`CERTIFICATE_MAX_COLS`] columns.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    smith_normal_form_with(m, CERTIFICATE_MAX_COLS)
}

pub fn smith_normal_form_with(m: &IntegerMatrix, certificate_max_cols: usize) -> SmithForm {
    if m.cols() <= certificate_max_cols {
        match dense_certified::<i64>(m) {
            Ok(s) => s,
            Err(Overflow) => dense_certified::<BigInt>(m).expect("BigInt cannot overflow"),
        }
    } else {
        let factors = match sparse_factors::<i64>(m) {
            Ok(f) => f,
            Err(Overflow) => sparse_factors::<BigInt>(m).expect("BigInt cannot overflow"),
        };
        let checks = SPOT_CHECK_PRIMES
            .iter()
            .map(|&p| (p, rank_mod_p(m, p)))
            .collect();
        SmithForm {
            rows: m.rows(),
            cols: m.cols(),
            factors,
            certificate: Certificate::RankModP(checks),
        }
    }
}

/// Invariant factors only, by sparse elimination (no certificate).
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    match sparse_factors::<i64>(m) {
        Ok(f) => f,
        Err(Overflow) => sparse_factors::<BigInt>(m).expect("BigInt cannot overflow"),
    }
}

fn to_dense<T: Entry>(m: &IntegerMatrix) -> Result<Vec<Vec<T>>, Overflow> {
    let mut a = vec![vec![T::nil(); m.cols()]; m.rows()];
    for (r, c, v) in m.triplets() {
        a[r][c] = T::from_big(v).ok_or(Overflow)?;
    }
    Ok(a)
}

fn identity<T: Entry>(n: usize) -> Vec<Vec<T>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::unit() } else { T::nil() }).collect())
        .collect()
}

fn dense_to_matrix<T: Entry>(a: &[Vec<T>], rows: usize, cols: usize) -> IntegerMatrix {
    IntegerMatrix::from_triplets(
        rows,
        cols,
        a.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_nil())
                .map(move |(j, v)| (i, j, v.to_big()))
        }),
    )
}

/// Dense reduction state; transforms are tracked when present.
struct Dense<T> {
    a: Vec<Vec<T>>,
    rows: usize,
    cols: usize,
    u: Option<(Vec<Vec<T>>, Vec<Vec<T>>)>,
    v: Option<(Vec<Vec<T>>, Vec<Vec<T>>)>,
}

impl<T: Entry> Dense<T> {
    fn new(a: Vec<Vec<T>>, rows: usize, cols: usize, track: bool) -> Self {
        let (u, v) = if track {
            (
                Some((identity(rows), identity(rows))),
                Some((identity(cols), identity(cols))),
            )
        } else {
            (None, None)
        };
        Dense { a, rows, cols, u, v }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some((u, ui)) = &mut self.u {
            u.swap(i, j);
            for row in ui.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some((v, vi)) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
            vi.swap(i, j);
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &T) -> Result<(), Overflow> {
        for j in 0..self.cols {
            if !self.a[t][j].is_nil() {
                self.a[i][j] = self.a[i][j].sub_mul(q, &self.a[t][j])?;
            }
        }
        if let Some((u, ui)) = &mut self.u {
            for j in 0..self.rows {
                if !u[t][j].is_nil() {
                    u[i][j] = u[i][j].sub_mul(q, &u[t][j])?;
                }
            }
            // col_t += q * col_i
            let mq = q.neg()?;
            for row in ui.iter_mut() {
                if !row[i].is_nil() {
                    row[t] = row[t].sub_mul(&mq, &row[i])?;
                }
            }
        }
        Ok(())
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &T) -> Result<(), Overflow> {
        for row in self.a.iter_mut() {
            if !row[t].is_nil() {
                row[j] = row[j].sub_mul(q, &row[t])?;
            }
        }
        if let Some((v, vi)) = &mut self.v {
            for row in v.iter_mut() {
                if !row[t].is_nil() {
                    row[j] = row[j].sub_mul(q, &row[t])?;
                }
            }
            // row_t += q * row_j
            let mq = q.neg()?;
            for k in 0..self.cols {
                if !vi[j][k].is_nil() {
                    vi[t][k] = vi[t][k].sub_mul(&mq, &vi[j][k])?;
                }
            }
        }
        Ok(())
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            if !self.a[i][j].is_nil() {
                self.a[t][j] = self.a[t][j].add(&self.a[i][j])?;
            }
        }
        if let Some((u, ui)) = &mut self.u {
            for j in 0..self.rows {
                if !u[i][j].is_nil() {
                    u[t][j] = u[t][j].add(&u[i][j])?;
                }
            }
            // col_i -= col_t
            for row in ui.iter_mut() {
                if !row[t].is_nil() {
                    row[i] = row[i].sub_mul(&T::unit(), &row[t])?;
                }
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, t: usize) -> Result<(), Overflow> {
        for j in 0..self.cols {
            self.a[t][j] = self.a[t][j].neg()?;
        }
        if let Some((u, ui)) = &mut self.u {
            for j in 0..self.rows {
                u[t][j] = u[t][j].neg()?;
            }
            for row in ui.iter_mut() {
                row[t] = row[t].neg()?;
            }
        }
        Ok(())
    }

    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_nil() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !x.abs_lt(&self.a[bi][bj]) => {}
                    _ => {
                        if x.is_unit() {
                            return Some((i, j));
                        }
                        best = Some((i, j));
                    }
                }
            }
        }
        best
    }

    fn reduce(&mut self) -> Result<Vec<T>, Overflow> {
        let mut diag = Vec::new();
        let lim = self.rows.min(self.cols);
        for t in 0..lim {
            let Some((pi, pj)) = self.smallest_from(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            'pivot: loop {
                for i in t + 1..self.rows {
                    if self.a[i][t].is_nil() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&self.a[t][t]);
                    self.row_sub(i, t, &q)?;
                    if !self.a[i][t].is_nil() {
                        self.swap_rows(t, i);
                        continue 'pivot;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_nil() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&self.a[t][t]);
                    self.col_sub(j, t, &q)?;
                    if !self.a[t][j].is_nil() {
                        self.swap_cols(t, j);
                        continue 'pivot;
                    }
                }
                if (t + 1..self.rows).any(|i| !self.a[i][t].is_nil()) {
                    continue 'pivot;
                }
                let p = self.a[t][t].clone();
                if !p.is_unit() {
                    let bad = (t + 1..self.rows)
                        .find(|&i| (t + 1..self.cols).any(|j| !p.divides(&self.a[i][j])));
                    if let Some(i) = bad {
                        self.row_add(t, i)?;
                        continue 'pivot;
                    }
                }
                break;
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t)?;
            }
            diag.push(self.a[t][t].clone());
        }
        Ok(diag)
    }
}

fn dense_certified<T: Entry>(m: &IntegerMatrix) -> Result<SmithForm, Overflow> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = Dense::new(to_dense::<T>(m)?, rows, cols, true);
    let diag = d.reduce()?;
    let (u, u_inv) = d.u.take().expect("tracked");
    let (v, v_inv) = d.v.take().expect("tracked");
    Ok(SmithForm {
        rows,
        cols,
        factors: diag.iter().map(Entry::to_big).collect(),
        certificate: Certificate::Unimodular {
            u: dense_to_matrix(&u, rows, rows),
            u_inv: dense_to_matrix(&u_inv, rows, rows),
            v: dense_to_matrix(&v, cols, cols),
            v_inv: dense_to_matrix(&v_inv, cols, cols),
        },
    })
}

/// Unit-pivot sparse elimination followed by dense reduction of the rest.
fn sparse_factors<T: Entry>(m: &IntegerMatrix) -> Result<Vec<BigInt>, Overflow> {
    let mut rows: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); m.rows()];
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (r, c, v) in m.triplets() {
        rows[r].insert(c, T::from_big(v).ok_or(Overflow)?);
        cols[c].insert(r);
    }
    let mut units = 0usize;
    loop {
        // Markowitz choice among unit entries.
        let mut best: Option<(usize, usize, usize)> = None;
        'search: for (c, col) in cols.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            for &r in col {
                if rows[r][&c].is_unit() {
                    let cost = (col.len() - 1) * (rows[r].len() - 1);
                    if best.map_or(true, |b| cost < b.2) {
                        best = Some((r, c, cost));
                        if cost == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((p, q, _)) = best else {
            break;
        };
        let pivot_row = std::mem::take(&mut rows[p]);
        let u = pivot_row[&q].clone();
        let others: Vec<usize> = cols[q].iter().copied().filter(|&r| r != p).collect();
        for r in others {
            // row_r -= (a_rq / u) * row_p, and 1/u = u for a unit.
            let f = T::nil().sub_mul(&rows[r][&q], &u)?.neg()?;
            for (&j, v) in &pivot_row {
                let cur = rows[r].get(&j).cloned().unwrap_or_else(T::nil);
                let new = cur.sub_mul(&f, v)?;
                if new.is_nil() {
                    rows[r].remove(&j);
                    cols[j].remove(&r);
                } else {
                    rows[r].insert(j, new);
                    cols[j].insert(r);
                }
            }
        }
        for &j in pivot_row.keys() {
            cols[j].remove(&p);
        }
        debug_assert!(cols[q].is_empty());
        units += 1;
    }

    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&c| !cols[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> =
        live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut a = vec![vec![T::nil(); live_cols.len()]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[r] {
            a[i][col_pos[c]] = v.clone();
        }
    }
    let mut d = Dense::new(a, live_rows.len(), live_cols.len(), false);
    let rest = d.reduce()?;
    let mut factors = vec![BigInt::one(); units];
    factors.extend(rest.iter().map(Entry::to_big));
    factors.sort();
    Ok(factors)
}

/// Rank over the field with `p` elements, by sparse row echelon reduction.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    assert!(p >= 2);
    let pb = BigInt::from(p);
    let mut rows: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); m.rows()];
    for (r, c, v) in m.triplets() {
        let x = v.mod_floor(&pb).to_u64().expect("reduced mod p");
        if x != 0 {
            rows[r].insert(c, x);
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        // Fermat; p is prime.
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for mut row in rows {
        while let Some((&c, &x)) = row.iter().next() {
            match pivots.get(&c) {
                Some(prow) => {
                    for (&j, &y) in prow {
                        let cur = row.get(&j).copied().unwrap_or(0);
                        let new = (cur + p - mul(x, y)) % p;
                        if new == 0 {
                            row.remove(&j);
                        } else {
                            row.insert(j, new);
                        }
                    }
                }
                None => {
                    let xi = inv(x);
                    for v in row.values_mut() {
                        *v = mul(*v, xi);
                    }
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Oracle: the k-th determinantal divisor is the gcd of all k×k minors;
    /// factors are successive quotients.
    fn determinantal_factors(a: &[Vec<i64>]) -> Vec<BigInt> {
        let r = a.len();
        let c = a.first().map_or(0, Vec::len);
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            let n = m.len();
            if n == 0 {
                return BigInt::one();
            }
            let mut total = BigInt::zero();
            for j in 0..n {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut divisors = vec![BigInt::one()];
        for k in 1..=r.min(c) {
            let mut g = BigInt::zero();
            for rs in subsets(r, k) {
                for cs in subsets(c, k) {
                    let m: Vec<Vec<BigInt>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| BigInt::from(a[i][j])).collect())
                        .collect();
                    g = g.gcd(&det(&m));
                }
            }
            if g.is_zero() {
                break;
            }
            divisors.push(g);
        }
        divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
    }

    #[test]
    fn small_examples() {
        let id = IntegerMatrix::identity(3);
        let s = smith_normal_form(&id);
        assert_eq!(s.factors, vec![BigInt::one(); 3]);
        assert!(s.verify(&id));

        let m = IntegerMatrix::from_dense(&[vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.factors, vec![BigInt::from(2), BigInt::from(4)]);
        assert!(s.verify(&m));

        let z = IntegerMatrix::zeros(3, 2);
        let s = smith_normal_form(&z);
        assert!(s.factors.is_empty());
        assert!(s.verify(&z));
    }

    #[test]
    fn random_matrices_match_determinantal_divisors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let r = rng.gen_range(1..5);
            let c = rng.gen_range(1..5);
            let a: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect())
                .collect();
            let m = IntegerMatrix::from_dense(&a);
            let expect = determinantal_factors(&a);
            let dense = smith_normal_form(&m);
            assert!(dense.verify(&m), "{a:?}");
            assert_eq!(dense.factors, expect, "{a:?}");
            let sparse = smith_normal_form_with(&m, 0);
            assert_eq!(sparse.factors, expect, "{a:?}");
            assert!(sparse.verify(&m));
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let m = IntegerMatrix::from_dense(&[vec![big, big - 1], vec![big - 1, big - 2]]);
        let s = smith_normal_form(&m);
        assert!(s.verify(&m));
        assert_eq!(s.factors, vec![BigInt::one(), BigInt::one()]);
        let t = smith_normal_form_with(&m, 0);
        assert_eq!(t.factors, s.factors);
    }

    #[test]
    fn rank_mod_small_primes() {
        let m = IntegerMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }
}
