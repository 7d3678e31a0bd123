//! Closed forms for the genus sequence.

use crate::error::{Error, Result};

/// `b_n = (n - 4)·2^(n-3) + 1` for `n >= 4`, with `b_3 = 0`.
pub fn b_n_formula(n: usize) -> Result<u64> {
    match n {
        3 => Ok(0),
        4..=60 => Ok((n as u64 - 4) * (1u64 << (n - 3)) + 1),
        _ => Err(Error::InvalidSize {
            n,
            reason: "b_n is defined here for 3 <= n <= 60",
        }),
    }
}

/// Checks `b_n = 2·b_(n-1) + 2^(n-3) - 1` against the closed form for
/// `4 <= n <= limit`, starting from `b_3 = 0`.
pub fn b_n_recurrence_check(limit: usize) -> bool {
    let mut prev = 0u64;
    for n in 4..=limit.min(60) {
        let next = 2 * prev + (1u64 << (n - 3)) - 1;
        match b_n_formula(n) {
            Ok(b) if b == next => prev = next,
            _ => return false,
        }
    }
    limit <= 60
}

/// Euler characteristic of the surface covering the n-gon with all edges as
/// mirrors: `n·2^(n-2) - n·2^(n-1) + 2^n`.
pub fn polygon_cover_euler(n: usize) -> Result<i64> {
    if !(3..=60).contains(&n) {
        return Err(Error::InvalidSize {
            n,
            reason: "polygon covers are evaluated for 3 <= n <= 60",
        });
    }
    let n64 = n as i128;
    let chi = n64 * (1i128 << (n - 2)) - n64 * (1i128 << (n - 1)) + (1i128 << n);
    i64::try_from(chi).map_err(|_| Error::InvalidSize {
        n,
        reason: "Euler characteristic exceeds i64",
    })
}

/// Genus of that surface, from `2 - 2g = χ`.
pub fn surface_genus_formula(n: usize) -> Result<u64> {
    let chi = polygon_cover_euler(n)?;
    Ok(((2 - chi) / 2) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_terms() {
        let got: Vec<u64> = (4..=8).map(|n| b_n_formula(n).unwrap()).collect();
        assert_eq!(got, vec![1, 5, 17, 49, 129]);
        assert_eq!(b_n_formula(3).unwrap(), 0);
        assert!(b_n_formula(2).is_err());
    }

    #[test]
    fn recurrence_and_genus() {
        assert!(b_n_recurrence_check(24));
        assert_eq!(polygon_cover_euler(5).unwrap(), -8);
        assert_eq!(surface_genus_formula(3).unwrap(), 0);
        for n in 4..=24 {
            assert_eq!(surface_genus_formula(n).unwrap(), b_n_formula(n).unwrap());
        }
    }
}
