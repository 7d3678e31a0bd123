//! Linear relations satisfied by the support-line coordinates of a regular
//! polygon and of the pyramid over it, and a numerical check that sampled
//! points (and their square-root lifts) satisfy them.
//!
//! Edge `j` of the regular n-gon has outward normal at angle `-2πj/n`, so
//! edges run clockwise like basis edges elsewhere in the crate. The apothem
//! is 1.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance used by the acceptance checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `matrix · r = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    pub matrix: DMatrix<f64>,
    pub rhs: DVector<f64>,
}

impl LinearSystem {
    pub fn num_equations(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn num_variables(&self) -> usize {
        self.matrix.ncols()
    }

    /// Largest absolute equation residual at `r`.
    pub fn residual(&self, r: &[f64]) -> f64 {
        let v = DVector::from_column_slice(r);
        (&self.matrix * v - &self.rhs).amax()
    }

    /// Residual with every variable replaced by the square of `x`.
    pub fn quadric_residual(&self, x: &[f64]) -> f64 {
        let sq: Vec<f64> = x.iter().map(|v| v * v).collect();
        self.residual(&sq)
    }

    pub fn rank(&self) -> usize {
        self.matrix.clone().svd(false, false).rank(1e-10)
    }

    /// One row per equation: coefficients, then `| rhs`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.num_equations() {
            let row: Vec<String> = self.matrix.row(i).iter().map(|v| format!("{v:.12}")).collect();
            s.push_str(&row.join(" "));
            s.push_str(&format!(" | {:.12}\n", self.rhs[i]));
        }
        s
    }
}

/// `r = linear · p + constant`, one row per coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap {
    pub linear: DMatrix<f64>,
    pub constant: DVector<f64>,
}

impl AffineMap {
    pub fn domain_dim(&self) -> usize {
        self.linear.ncols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.linear.nrows()
    }

    pub fn apply(&self, p: &[f64]) -> Vec<f64> {
        let v = &self.linear * DVector::from_column_slice(p) + &self.constant;
        v.iter().copied().collect()
    }

    /// Column sums of the linear part and the sum of the constants.
    pub fn coordinate_sum_defect(&self) -> f64 {
        let lin = (0..self.domain_dim())
            .map(|c| self.linear.column(c).sum().abs())
            .fold(0.0, f64::max);
        lin.max((self.constant.sum() - 1.0).abs())
    }
}

fn normal_angle(j: usize, n: usize) -> f64 {
    -2.0 * PI * j as f64 / n as f64
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidSize {
            n,
            reason: "polygon needs at least 3 sides",
        });
    }
    Ok(())
}

/// Φ_n: coordinates `(1 - cos θ_j x - sin θ_j y) / n`, non-negative exactly
/// on the polygon and summing to 1.
pub fn polygon_support_lines(n: usize) -> Result<AffineMap> {
    check_n(n, 3)?;
    let scale = 1.0 / n as f64;
    let linear = DMatrix::from_fn(n, 2, |j, c| {
        let t = normal_angle(j, n);
        -scale * if c == 0 { t.cos() } else { t.sin() }
    });
    Ok(AffineMap {
        linear,
        constant: DVector::from_element(n, scale),
    })
}

fn relation_rows(n: usize, vars: usize) -> Vec<Vec<f64>> {
    let tau = (2.0 * PI / n as f64).cos();
    let k = 2.0 * tau + 1.0;
    (0..n.saturating_sub(3))
        .map(|i| {
            let mut row = vec![0.0; vars];
            row[i] += 1.0;
            row[i + 3] -= 1.0;
            row[i + 2] += k;
            row[i + 1] -= k;
            row
        })
        .collect()
}

fn system_from(rows: Vec<Vec<f64>>, vars: usize) -> LinearSystem {
    let m = rows.len();
    let matrix = DMatrix::from_fn(m, vars, |i, j| rows[i][j]);
    let mut rhs = DVector::zeros(m);
    rhs[0] = 1.0;
    LinearSystem { matrix, rhs }
}

/// The sum equation followed by `r_i - r_(i+3) + (2τ+1)(r_(i+2) - r_(i+1)) = 0`
/// for `i = 1 .. n-3` (rows use 0-based indices), `τ = cos(2π/n)`.
pub fn polygon_system(n: usize) -> Result<LinearSystem> {
    check_n(n, 3)?;
    let mut rows = vec![vec![1.0; n]];
    rows.extend(relation_rows(n, n));
    Ok(system_from(rows, n))
}

/// The pyramid over the polygon with apex `(0, 0, 1)`: Ψ_n and its system
/// in `n + 1` variables, the last being the basis coordinate `z`.
pub fn pyramid_system(n: usize) -> Result<(LinearSystem, AffineMap)> {
    check_n(n, 3)?;
    let phi = polygon_support_lines(n)?;
    let mut linear = DMatrix::zeros(n + 1, 3);
    let mut constant = DVector::zeros(n + 1);
    for j in 0..n {
        linear[(j, 0)] = phi.linear[(j, 0)];
        linear[(j, 1)] = phi.linear[(j, 1)];
        linear[(j, 2)] = -phi.constant[j];
        constant[j] = phi.constant[j];
    }
    linear[(n, 2)] = 1.0;
    let mut rows = vec![vec![1.0; n + 1]];
    rows.extend(relation_rows(n, n + 1));
    Ok((system_from(rows, n + 1), AffineMap { linear, constant }))
}

/// Uniform point of the polygon, scaled by `s`.
fn sample_polygon(n: usize, s: f64, rng: &mut impl Rng) -> [f64; 2] {
    let half = PI / n as f64;
    let radius = 1.0 / half.cos();
    let j = rng.gen_range(0..n);
    let a0 = normal_angle(j, n) + half;
    let a1 = normal_angle(j, n) - half;
    let (v0, v1) = (
        [radius * a0.cos(), radius * a0.sin()],
        [radius * a1.cos(), radius * a1.sin()],
    );
    let (mut u, mut w) = (rng.gen::<f64>(), rng.gen::<f64>());
    if u + w > 1.0 {
        u = 1.0 - u;
        w = 1.0 - w;
    }
    [s * (u * v0[0] + w * v1[0]), s * (u * v0[1] + w * v1[1])]
}

/// Vertex `j` of the polygon, between edges `j` and `j + 1`.
pub fn polygon_vertex(n: usize, j: usize) -> [f64; 2] {
    let half = PI / n as f64;
    let a = normal_angle(j, n) - half;
    let radius = 1.0 / half.cos();
    [radius * a.cos(), radius * a.sin()]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingCheck {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Largest residual of the linear system on the images.
    pub linear_residual: f64,
    /// Largest residual of the quadric system on random-sign lifts.
    pub quadric_residual: f64,
    /// Smallest coordinate seen; non-negative up to rounding.
    pub min_coordinate: f64,
    /// Largest deviation of the coordinate sum from 1.
    pub sum_defect: f64,
}

impl EmbeddingCheck {
    pub fn max_residual(&self) -> f64 {
        self.linear_residual.max(self.quadric_residual)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual() < tol && self.min_coordinate > -tol && self.sum_defect < tol
    }
}

fn check_points(
    n: usize,
    seed: u64,
    system: &LinearSystem,
    map: &AffineMap,
    points: &[Vec<f64>],
    rng: &mut ChaCha8Rng,
) -> EmbeddingCheck {
    let mut out = EmbeddingCheck {
        n,
        samples: points.len(),
        seed,
        linear_residual: 0.0,
        quadric_residual: 0.0,
        min_coordinate: f64::INFINITY,
        sum_defect: 0.0,
    };
    for p in points {
        let r = map.apply(p);
        out.linear_residual = out.linear_residual.max(system.residual(&r));
        let x: Vec<f64> = r
            .iter()
            .map(|&v| {
                let s = v.max(0.0).sqrt();
                if rng.gen::<bool>() {
                    s
                } else {
                    -s
                }
            })
            .collect();
        out.quadric_residual = out.quadric_residual.max(system.quadric_residual(&x));
        out.min_coordinate = r.iter().copied().fold(out.min_coordinate, f64::min);
        out.sum_defect = out.sum_defect.max((r.iter().sum::<f64>() - 1.0).abs());
    }
    out
}

/// Samples the polygon uniformly and checks the system on Φ_n of each
/// sample and on random-sign square-root lifts. Every vertex is included.
pub fn verify_embedding(n: usize, samples: usize, seed: u64) -> Result<EmbeddingCheck> {
    let map = polygon_support_lines(n)?;
    verify_embedding_with(n, &map, samples, seed)
}

/// As [`verify_embedding`] with a caller-supplied map, e.g. a perturbed one.
pub fn verify_embedding_with(n: usize, map: &AffineMap, samples: usize, seed: u64) -> Result<EmbeddingCheck> {
    let system = polygon_system(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<f64>> = (0..samples)
        .map(|_| sample_polygon(n, 1.0, &mut rng).to_vec())
        .collect();
    points.extend((0..n).map(|j| polygon_vertex(n, j).to_vec()));
    Ok(check_points(n, seed, &system, map, &points, &mut rng))
}

/// The pyramid analogue: `z = 1 - U^(1/3)` makes the height marginal
/// uniform over the solid, then `(x, y)` is uniform in the scaled polygon.
pub fn verify_pyramid_embedding(n: usize, samples: usize, seed: u64) -> Result<EmbeddingCheck> {
    let (system, map) = pyramid_system(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<f64>> = (0..samples)
        .map(|_| {
            let z = 1.0 - rng.gen::<f64>().cbrt();
            let [x, y] = sample_polygon(n, 1.0 - z, &mut rng);
            vec![x, y, z]
        })
        .collect();
    points.push(vec![0.0, 0.0, 1.0]);
    Ok(check_points(n, seed, &system, &map, &points, &mut rng))
}

/// `map` with every coefficient moved by up to `eps`.
pub fn perturbed(map: &AffineMap, eps: f64, seed: u64) -> AffineMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = map.clone();
    for v in out.linear.iter_mut().chain(out.constant.iter_mut()) {
        *v += rng.gen_range(-eps..=eps);
    }
    out
}

/// Residual statistics for each `n`, all with the same seed.
pub fn residual_table(ns: impl IntoIterator<Item = usize>, samples: usize, seed: u64) -> Result<Vec<EmbeddingCheck>> {
    ns.into_iter().map(|n| verify_embedding(n, samples, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_and_vertices() {
        for n in 3..=12 {
            let phi = polygon_support_lines(n).unwrap();
            let c = phi.apply(&[0.0, 0.0]);
            assert!(c.iter().all(|v| (v - 1.0 / n as f64).abs() < 1e-15));
            assert!(phi.coordinate_sum_defect() < 1e-12);
        }
        let phi = polygon_support_lines(4).unwrap();
        let r = phi.apply(&polygon_vertex(4, 0));
        assert_eq!(r.iter().filter(|v| v.abs() < 1e-12).count(), 2);
        // Vertex 0 lies on edges 0 and 1.
        assert!(r[0].abs() < 1e-12 && r[1].abs() < 1e-12);
    }

    #[test]
    fn coefficients() {
        let s4 = polygon_system(4).unwrap();
        assert_eq!(s4.num_equations(), 2);
        let row: Vec<f64> = s4.matrix.row(1).iter().copied().collect();
        let want = [1.0, -1.0, 1.0, -1.0];
        assert!(row.iter().zip(want).all(|(a, b)| (a - b).abs() < 1e-12));
        let s6 = polygon_system(6).unwrap();
        assert!((s6.matrix[(1, 2)] - 2.0).abs() < 1e-12);
        let s5 = polygon_system(5).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert_eq!(s5.num_equations(), 3);
        assert!((s5.matrix[(1, 2)] - golden).abs() < 1e-12);
        assert_eq!(polygon_system(3).unwrap().num_equations(), 1);
        assert!(polygon_system(2).is_err());
        for n in 3..=12 {
            assert_eq!(polygon_system(n).unwrap().rank(), n - 2);
        }
    }

    #[test]
    fn interior_samples_are_positive() {
        let c = verify_embedding(5, 100, 7).unwrap();
        assert!(c.passes(DEFAULT_TOLERANCE));
        let phi = polygon_support_lines(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let p = sample_polygon(5, 0.999, &mut rng);
            assert!(phi.apply(&p).iter().all(|&v| v > 0.0));
        }
    }

    #[test]
    fn pyramid_map() {
        let (sys, psi) = pyramid_system(5).unwrap();
        let apex = psi.apply(&[0.0, 0.0, 1.0]);
        assert!(apex[..5].iter().all(|v| v.abs() < 1e-15) && (apex[5] - 1.0).abs() < 1e-15);
        let phi = polygon_support_lines(5).unwrap();
        let a = psi.apply(&[0.3, -0.2, 0.0]);
        let b = phi.apply(&[0.3, -0.2]);
        assert!(a[..5].iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-15) && a[5] == 0.0);
        assert_eq!(sys.num_variables(), 6);
        assert!(verify_pyramid_embedding(5, 100, 3).unwrap().passes(DEFAULT_TOLERANCE));
    }

    #[test]
    fn perturbation_is_detected() {
        let phi = polygon_support_lines(6).unwrap();
        let bad = perturbed(&phi, 1e-3, 9);
        let c = verify_embedding_with(6, &bad, 100, 1).unwrap();
        assert!(c.max_residual() > DEFAULT_TOLERANCE);
    }
}
