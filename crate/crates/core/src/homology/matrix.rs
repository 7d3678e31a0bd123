//! Sparse integer matrices with arbitrary-precision entries.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A sparse matrix keyed by `(row, col)`; zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Builds from triplets, summing repeated positions.
    pub fn from_triplets<T: Into<BigInt>>(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, v.into());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nr,
            nc,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(move |(j, v)| (i, j, *v))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: BigInt) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        IntegerMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Exact product; panics on a shape mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                *acc.entry((i, j)).or_default() += a * b;
            }
        }
        out.entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out
    }

    /// Largest absolute entry fitting in `i64`, or `None`.
    pub fn max_abs_i64(&self) -> Option<i64> {
        self.entries
            .values()
            .map(|v| v.to_i64().and_then(|x| x.checked_abs()))
            .try_fold(0i64, |m, x| x.map(|x| m.max(x)))
    }

    /// Columns as sorted `(row, value)` lists.
    pub fn columns(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (&(r, c), v) in &self.entries {
            cols[c].push((r, v.clone()));
        }
        cols
    }

    /// Plain-text triplets: a `rows cols` header, then `row col value` lines.
    pub fn to_triplet_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            let _ = writeln!(s, "{r} {c} {v}");
        }
        s
    }

    pub fn from_triplet_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing matrix header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("header {header:?}: {e}")))?;
        if dims.len() != 2 {
            return Err(Error::Parse(format!("header {header:?} must be `rows cols`")));
        }
        let mut m = IntegerMatrix::zeros(dims[0], dims[1]);
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("line {line:?} must be `row col value`")));
            }
            let r: usize = parts[0].parse().map_err(|e| Error::Parse(format!("{line:?}: {e}")))?;
            let c: usize = parts[1].parse().map_err(|e| Error::Parse(format!("{line:?}: {e}")))?;
            let v: BigInt = parts[2].parse().map_err(|e| Error::Parse(format!("{line:?}: {e}")))?;
            if r >= m.rows || c >= m.cols {
                return Err(Error::Parse(format!("entry ({r},{c}) out of range")));
            }
            if m.entries.contains_key(&(r, c)) {
                return Err(Error::Parse(format!("duplicate entry ({r},{c})")));
            }
            m.set(r, c, v);
        }
        Ok(m)
    }
}
