//! Ranks over the two-element field with packed bit rows.

use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntegerMatrix;

/// Rank of `m` reduced mod 2.
pub fn rank_mod2(m: &IntegerMatrix) -> usize {
    let words = m.cols().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows()];
    for (r, c, v) in m.triplets() {
        if !v.is_even() && !v.is_zero() {
            rows[r][c / 64] |= 1 << (c % 64);
        }
    }
    let mut rank = 0;
    for col in 0..m.cols() {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}
