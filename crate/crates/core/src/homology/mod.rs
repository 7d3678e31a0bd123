//! Integral homology of finite chain complexes.

mod formulas;
mod matrix;
mod mod2;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

pub use formulas::{b_n_formula, b_n_recurrence_check, polygon_cover_euler, surface_genus_formula};
pub use matrix::IntegerMatrix;
pub use mod2::rank_mod2;
pub use snf::{
    invariant_factors, rank_mod_p, smith_normal_form, smith_normal_form_with, Certificate,
    SmithForm, CERTIFICATE_MAX_COLS, SPOT_CHECK_PRIMES,
};

/// `C_top -> ... -> C_0` with `boundaries[k - 1] = ∂_k : C_k -> C_(k-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplex {
    /// Checks shapes only; see [`ChainComplex::check_dd_zero`].
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntegerMatrix>) -> Result<Self> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(Error::ChainComplexInvalid(boundaries.len()));
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows() != dims[i] || b.cols() != dims[i + 1] {
                return Err(Error::ChainComplexInvalid(i + 1));
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `∂_k` for `1 <= k <= top`.
    pub fn boundary(&self, k: usize) -> Option<&IntegerMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn boundaries(&self) -> &[IntegerMatrix] {
        &self.boundaries
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// The lowest `k` with `∂_k ∘ ∂_(k+1) != 0`.
    pub fn first_dd_failure(&self) -> Option<usize> {
        self.boundaries
            .windows(2)
            .position(|w| !w[0].mul(&w[1]).is_zero())
            .map(|i| i + 1)
    }

    pub fn check_dd_zero(&self) -> bool {
        self.first_dd_failure().is_none()
    }
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_bigints")]
    pub torsion: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology groups together with the Smith forms of every boundary map.
#[derive(Clone, Debug)]
pub struct HomologyComputation {
    pub groups: Vec<HomologyGroup>,
    pub forms: Vec<SmithForm>,
}

/// `H_k = ker ∂_k / im ∂_(k+1)` for every degree.
pub fn homology(cc: &ChainComplex) -> Result<Vec<HomologyGroup>> {
    Ok(homology_with_forms(cc)?.groups)
}

pub fn homology_with_forms(cc: &ChainComplex) -> Result<HomologyComputation> {
    if let Some(k) = cc.first_dd_failure() {
        return Err(Error::ChainComplexInvalid(k));
    }
    let forms: Vec<SmithForm> = cc.boundaries.iter().map(smith_normal_form).collect();
    let rank = |k: usize| -> usize {
        k.checked_sub(1)
            .and_then(|i| forms.get(i))
            .map_or(0, SmithForm::rank)
    };
    let groups = (0..cc.dims.len())
        .map(|k| {
            let free = cc.dims[k] - rank(k) - rank(k + 1);
            let torsion = forms
                .get(k)
                .map(|f| f.factors.iter().filter(|d| !d.is_one()).cloned().collect())
                .unwrap_or_default();
            HomologyGroup {
                free_rank: free,
                torsion,
            }
        })
        .collect();
    Ok(HomologyComputation { groups, forms })
}

/// Betti numbers over the two-element field.
pub fn betti_mod2(cc: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = cc.boundaries.iter().map(rank_mod2).collect();
    let rank = |k: usize| k.checked_sub(1).and_then(|i| ranks.get(i)).copied().unwrap_or(0);
    (0..cc.dims.len())
        .map(|k| cc.dims[k] - rank(k) - rank(k + 1))
        .collect()
}

pub fn betti_numbers(groups: &[HomologyGroup]) -> Vec<usize> {
    groups.iter().map(|g| g.free_rank).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The boundary of a triangle: a circle.
    fn circle() -> ChainComplex {
        let d1 = IntegerMatrix::from_dense(&[vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]);
        ChainComplex::new(vec![3, 3], vec![d1]).unwrap()
    }

    #[test]
    fn circle_homology() {
        let h = homology(&circle()).unwrap();
        assert_eq!(betti_numbers(&h), vec![1, 1]);
        assert_eq!(betti_mod2(&circle()), vec![1, 1]);
    }

    #[test]
    fn projective_plane_cell_structure() {
        // One cell in each degree, ∂_2 = 2, ∂_1 = 0.
        let d1 = IntegerMatrix::zeros(1, 1);
        let d2 = IntegerMatrix::from_dense(&[vec![2]]);
        let cc = ChainComplex::new(vec![1, 1, 1], vec![d1, d2]).unwrap();
        let h = homology(&cc).unwrap();
        assert_eq!(h[0], HomologyGroup::free(1));
        assert_eq!(h[1].torsion, vec![BigInt::from(2)]);
        assert_eq!(h[1].to_string(), "Z/2");
        assert_eq!(h[2].to_string(), "0");
        assert_eq!(betti_mod2(&cc), vec![1, 1, 1]);
    }

    #[test]
    fn bad_complexes() {
        assert!(ChainComplex::new(vec![2, 2], vec![IntegerMatrix::zeros(2, 3)]).is_err());
        let d1 = IntegerMatrix::from_dense(&[vec![1]]);
        let d2 = IntegerMatrix::from_dense(&[vec![1]]);
        let cc = ChainComplex::new(vec![1, 1, 1], vec![d1, d2]).unwrap();
        assert!(!cc.check_dd_zero());
        assert_eq!(homology(&cc).unwrap_err(), Error::ChainComplexInvalid(1));
    }
}
