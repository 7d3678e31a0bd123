//! Standard families of polyhedra.

use super::CombinatorialPolyhedron;
use crate::error::{Error, Result};

/// The pyramid over an n-gon: basis vertices `0..n`, apex `n`.
/// Face 0 is the basis; face `i + 1` is the triangle on basis edge `(i, i+1)`.
pub fn n_pyramid(n: usize) -> Result<CombinatorialPolyhedron> {
    if n < 3 {
        return Err(Error::InvalidSize {
            n,
            reason: "a pyramid needs at least 3 basis vertices",
        });
    }
    let mut faces = vec![(0..n).rev().collect::<Vec<_>>()];
    for i in 0..n {
        faces.push(vec![i, (i + 1) % n, n]);
    }
    Ok(CombinatorialPolyhedron::new((0..=n).collect(), faces))
}

pub fn tetrahedron() -> CombinatorialPolyhedron {
    n_pyramid(3).expect("n = 3 is valid")
}

/// The prism over an n-gon, `n >= 3`. Top vertices `0..n`, bottom `n..2n`.
/// Faces: top, bottom, then the quadrilateral on top edge `(i, i+1)`.
pub fn prism(n: usize) -> CombinatorialPolyhedron {
    assert!(n >= 3, "prism needs n >= 3");
    let t = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (0..n).rev().map(b).collect()];
    for i in 0..n {
        faces.push(vec![t(i + 1), t(i), b(i), b(i + 1)]);
    }
    CombinatorialPolyhedron::new((0..2 * n).collect(), faces)
}

pub fn cube() -> CombinatorialPolyhedron {
    prism(4)
}

/// The n-book: the n-prism with one vertical face collapsed to an edge.
/// The bottom face (index 1) becomes the basis; the top face and the
/// quadrilateral opposite the spine are the two other basis neighbours of
/// the spine.
pub fn n_book_polyhedron(n: usize) -> Result<CombinatorialPolyhedron> {
    if n < 4 {
        return Err(Error::InvalidSize {
            n,
            reason: "an n-book needs n >= 4",
        });
    }
    // Collapse the vertical edges of face 2 (on top edge (0, 1)) by
    // contracting face 2 along its bottom edge: merge b0 into t0 and b1 into t1.
    let p = prism(n);
    let map = |v: usize| -> usize {
        if v == n {
            0
        } else if v == n + 1 {
            1
        } else {
            v
        }
    };
    let mut faces = Vec::new();
    for (fi, face) in p.faces().iter().enumerate() {
        if fi == 2 {
            continue;
        }
        let mapped: Vec<usize> = face.iter().map(|&v| map(v)).collect();
        faces.push(super::dedup_cyclic(mapped));
    }
    Ok(CombinatorialPolyhedron::from_faces(faces))
}

/// The trapezohedron with `2n` kite faces (`n >= 3`): poles `N = 0`, `S = 1`,
/// upper ring `u_i = 2 + i`, lower ring `w_i = 2 + n + i`.
pub fn trapezohedron_polyhedron(n: usize) -> Result<CombinatorialPolyhedron> {
    if n < 3 {
        return Err(Error::InvalidSize {
            n,
            reason: "a trapezohedron needs n >= 3",
        });
    }
    let u = |i: usize| 2 + i % n;
    let w = |i: usize| 2 + n + i % n;
    let mut faces = Vec::with_capacity(2 * n);
    for i in 0..n {
        faces.push(vec![0, u(i), w(i), u(i + 1)]);
        faces.push(vec![1, w(i + 1), u(i + 1), w(i)]);
    }
    Ok(CombinatorialPolyhedron::from_faces(faces))
}
