//! Canonical codes for oriented maps.
//!
//! A breadth-first traversal of the rotation system from a chosen dart
//! numbers the vertices deterministically; the minimum code over all darts
//! (and over both rotation directions when reflections are allowed) is an
//! isomorphism invariant that also determines the map.

use std::collections::VecDeque;

use super::{CombinatorialPolyhedron, VertexId};

pub(crate) fn canonical_code(p: &CombinatorialPolyhedron, allow_reflection: bool) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mirrors: &[bool] = if allow_reflection { &[false, true] } else { &[false] };
    for &mirror in mirrors {
        for e in p.edges() {
            for (s, t) in [(e.0, e.1), (e.1, e.0)] {
                if let Some(code) = code_from(p, s, t, mirror, best.as_deref()) {
                    best = Some(code);
                }
            }
        }
    }
    let mut out = vec![p.num_vertices(), p.num_edges(), p.num_faces()];
    out.extend(best.unwrap_or_default());
    out
}

/// Traversal code rooted at dart `s -> t`. Returns `None` as soon as the code
/// is known to exceed `bound`.
fn code_from(
    p: &CombinatorialPolyhedron,
    s: VertexId,
    t: VertexId,
    mirror: bool,
    bound: Option<&[usize]>,
) -> Option<Vec<usize>> {
    let nv = p.num_vertices();
    let mut label = vec![0usize; nv];
    let mut next = 1;
    let mut queue = VecDeque::new();
    let si = p.vertex_index(s)?;
    label[si] = next;
    next += 1;
    queue.push_back((s, t));
    let mut code = Vec::with_capacity(2 * p.num_edges() + nv);
    let mut tight = bound.is_some();

    let emit = |code: &mut Vec<usize>, x: usize, tight: &mut bool| -> bool {
        if *tight {
            let b = bound.unwrap();
            let i = code.len();
            match b.get(i) {
                Some(&bi) if x > bi => return false,
                Some(&bi) if x < bi => *tight = false,
                _ => {}
            }
        }
        code.push(x);
        true
    };

    while let Some((x, r)) = queue.pop_front() {
        let mut y = r;
        loop {
            let yi = p.vertex_index(y)?;
            if label[yi] == 0 {
                label[yi] = next;
                next += 1;
                queue.push_back((y, x));
            }
            if !emit(&mut code, label[yi], &mut tight) {
                return None;
            }
            y = if mirror { p.rotate_back(x, y)? } else { p.rotate(x, y)? };
            if y == r {
                break;
            }
        }
        if !emit(&mut code, 0, &mut tight) {
            return None;
        }
    }
    if tight {
        // Equal to the bound: no improvement.
        return None;
    }
    Some(code)
}
