//! Pyramitoids: polyhedra with a face (the basis) adjacent to every other face.
//!
//! Lateral faces are indexed by the basis edge they contain. With the basis
//! cycle `B_0 .. B_{n-1}` taken in its stored (outward counterclockwise)
//! order, basis edge `k` is `(B_k, B_{k+1})` and lateral face `k` is the face
//! across it. Seen from the dome this order is clockwise. Position `i` of a
//! basis *vertex* means `B_{i+1}`, the vertex between lateral faces `i` and
//! `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{n_book_polyhedron, CombinatorialPolyhedron, Edge, VertexId};

/// Faces of `poly` that can serve as a pyramitoid basis.
pub fn find_bases(poly: &CombinatorialPolyhedron) -> Vec<usize> {
    (0..poly.num_faces())
        .filter(|&f| is_basis(poly, f))
        .collect()
}

fn is_basis(poly: &CombinatorialPolyhedron, f: usize) -> bool {
    if f >= poly.num_faces() || poly.face(f).len() + 1 != poly.num_faces() {
        return false;
    }
    let mut across = BTreeSet::new();
    for (a, b) in poly.face_darts(f) {
        match poly.face_of_dart(b, a) {
            Some(g) if g != f => {
                across.insert(g);
            }
            _ => return false,
        }
    }
    across.len() + 1 == poly.num_faces()
}

/// A polyhedron with a chosen basis and its derived trees.
#[derive(Clone, Debug)]
pub struct Pyramitoid {
    poly: CombinatorialPolyhedron,
    basis: usize,
    basis_cycle: Vec<VertexId>,
    lateral: Vec<usize>,
    essential: Vec<Edge>,
    leaves: Vec<Edge>,
    core: Vec<Edge>,
    core_vertices: Vec<VertexId>,
}

/// Builds the pyramitoid with the given basis, anchored at the first edge of
/// the basis face's stored cycle.
pub fn as_pyramitoid(poly: &CombinatorialPolyhedron, basis: usize) -> Result<Pyramitoid> {
    Pyramitoid::anchored(poly.clone(), basis, None)
}

impl Pyramitoid {
    /// Builds the pyramitoid with lateral face 0 equal to `anchor` (a face
    /// index), or the stored cycle start when `anchor` is `None`.
    pub fn anchored(
        poly: CombinatorialPolyhedron,
        basis: usize,
        anchor: Option<usize>,
    ) -> Result<Self> {
        poly.ensure_valid()?;
        if !is_basis(&poly, basis) {
            return Err(Error::NotABasis(basis));
        }
        let mut cycle = poly.face(basis).to_vec();
        let n = cycle.len();
        let lateral_at = |c: &[VertexId], k: usize| {
            poly.face_of_dart(c[(k + 1) % n], c[k])
                .expect("valid polyhedron has both darts")
        };
        if let Some(a) = anchor {
            let shift = (0..n)
                .find(|&k| lateral_at(&cycle, k) == a)
                .ok_or(Error::UnknownFace(a))?;
            cycle.rotate_left(shift);
        }
        let lateral: Vec<usize> = (0..n).map(|k| lateral_at(&cycle, k)).collect();

        let basis_edges: BTreeSet<Edge> = poly.face_edges(basis).into_iter().collect();
        let essential: Vec<Edge> = poly
            .edges()
            .iter()
            .copied()
            .filter(|e| !basis_edges.contains(e))
            .collect();
        let mut degree = std::collections::HashMap::new();
        for e in &essential {
            *degree.entry(e.0).or_insert(0usize) += 1;
            *degree.entry(e.1).or_insert(0usize) += 1;
        }
        let (leaves, core): (Vec<Edge>, Vec<Edge>) = essential
            .iter()
            .partition(|e| degree[&e.0] == 1 || degree[&e.1] == 1);
        let on_basis: BTreeSet<VertexId> = cycle.iter().copied().collect();
        let core_vertices = poly
            .vertices()
            .iter()
            .copied()
            .filter(|v| !on_basis.contains(v))
            .collect();
        Ok(Pyramitoid {
            poly,
            basis,
            basis_cycle: cycle,
            lateral,
            essential,
            leaves,
            core,
            core_vertices,
        })
    }

    /// Number of basis sides.
    pub fn n(&self) -> usize {
        self.basis_cycle.len()
    }

    pub fn poly(&self) -> &CombinatorialPolyhedron {
        &self.poly
    }

    pub fn into_poly(self) -> CombinatorialPolyhedron {
        self.poly
    }

    pub fn basis(&self) -> usize {
        self.basis
    }

    pub fn basis_cycle(&self) -> &[VertexId] {
        &self.basis_cycle
    }

    /// Basis edge `k` as a directed pair `(B_k, B_{k+1})`.
    pub fn basis_edge(&self, k: usize) -> (VertexId, VertexId) {
        let n = self.n();
        (self.basis_cycle[k % n], self.basis_cycle[(k + 1) % n])
    }

    /// Face indices of the lateral faces in basis-edge order.
    pub fn lateral_faces(&self) -> &[usize] {
        &self.lateral
    }

    /// Lateral position of face `f`, if it is lateral.
    pub fn position_of_face(&self, f: usize) -> Option<usize> {
        self.lateral.iter().position(|&g| g == f)
    }

    pub fn essential_tree(&self) -> &[Edge] {
        &self.essential
    }

    pub fn leaves(&self) -> &[Edge] {
        &self.leaves
    }

    pub fn core_tree(&self) -> &[Edge] {
        &self.core
    }

    pub fn core_vertices(&self) -> &[VertexId] {
        &self.core_vertices
    }

    pub fn is_simple(&self) -> bool {
        self.poly.is_simple()
    }

    fn ensure_simple(&self) -> Result<()> {
        match self.poly.first_non_simple_vertex() {
            None => Ok(()),
            Some((v, k)) => Err(Error::NotSimple(v, k)),
        }
    }

    /// The pair of lateral positions `(a, b)`, `a < b`, whose faces meet
    /// along a non-basis edge.
    pub fn edge_positions(&self, e: Edge) -> Option<(usize, usize)> {
        let faces = self.poly.edge_faces(e);
        if faces.len() != 2 {
            return None;
        }
        let a = self.position_of_face(faces[0].0)?;
        let b = self.position_of_face(faces[1].0)?;
        Some((a.min(b), a.max(b)))
    }

    /// Number of tree edges at each core vertex, in `core_vertices` order.
    pub fn core_valences(&self) -> Vec<usize> {
        self.core_vertices
            .iter()
            .map(|&v| self.core.iter().filter(|e| e.contains(v)).count())
            .collect()
    }

    /// Cyclic label: lateral face `k` has `b_k + 3` sides.
    pub fn label(&self) -> Result<Label> {
        self.ensure_simple()?;
        Ok(Label(
            self.lateral
                .iter()
                .map(|&f| self.poly.face(f).len() - 3)
                .collect(),
        ))
    }

    /// Cuts off basis vertex `B_{i+1}`, inserting a triangular lateral face
    /// after position `i`. Lateral face 0 stays the anchor.
    pub fn truncate_vertex(&self, i: usize) -> Result<Pyramitoid> {
        let n = self.n();
        if i >= n {
            return Err(Error::InvalidVertex { position: i, n });
        }
        let v = self.basis_cycle[(i + 1) % n];
        let t = self.poly.truncate_vertex(v)?;
        Pyramitoid::anchored(t.poly, self.basis, Some(self.lateral[0]))
    }

    /// Shrinks triangular lateral face `i` to a point.
    pub fn contract_triangle(&self, i: usize) -> Result<Pyramitoid> {
        let n = self.n();
        if i >= n {
            return Err(Error::InvalidVertex { position: i, n });
        }
        if n < 4 {
            return Err(Error::InvalidSize {
                n,
                reason: "contraction needs a basis with at least 4 sides",
            });
        }
        let f = self.lateral[i];
        if self.poly.face(f).len() != 3 {
            return Err(Error::NotATriangle(i));
        }
        for j in [(i + n - 1) % n, (i + 1) % n] {
            if self.poly.face(self.lateral[j]).len() < 4 {
                return Err(Error::NeighborUnderflow(i));
            }
        }
        let c = self.poly.contract_face(f)?;
        let anchor = if i == 0 { self.lateral[1] } else { self.lateral[0] };
        let basis = c.face_map[self.basis].expect("basis survives");
        let anchor = c.face_map[anchor].expect("anchor survives");
        Pyramitoid::anchored(c.poly, basis, Some(anchor))
    }
}

/// The n-book with the bottom of the collapsed prism as basis.
pub fn n_book(n: usize) -> Result<Pyramitoid> {
    let poly = n_book_polyhedron(n)?;
    as_pyramitoid(&poly, 1)
}

/// One contraction on the way down to the tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub position: usize,
    pub before: Label,
    pub after: Label,
    /// `after` equals the label rewrite predicted for a contraction.
    pub contraction_rule_holds: bool,
    /// Some truncation of `after` gives back `before` up to rotation.
    pub truncation_rule_holds: bool,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub steps: Vec<ReductionStep>,
    /// The 3-pyramitoid reached.
    pub end: Pyramitoid,
}

impl Reduction {
    pub fn rules_hold(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.contraction_rule_holds && s.truncation_rule_holds)
    }
}

/// Contracts the first contractible triangle until the basis is a triangle.
/// Fails if a simple pyramitoid with `n > 3` has no contractible triangle.
pub fn reduce_to_tetrahedron(pyr: &Pyramitoid) -> Result<Reduction> {
    let mut cur = pyr.clone();
    let mut steps = Vec::new();
    while cur.n() > 3 {
        let before = cur.label()?;
        let i = (0..cur.n())
            .find(|&i| before.contracted(i).is_some())
            .ok_or(Error::NotATriangle(0))?;
        let next = cur.contract_triangle(i)?;
        let after = next.label()?;
        steps.push(ReductionStep {
            position: i,
            contraction_rule_holds: before.contracted(i).as_ref() == Some(&after),
            truncation_rule_holds: (0..after.len())
                .any(|j| after.truncated(j).is_some_and(|t| t.cyclic_eq(&before))),
            before,
            after,
        });
        cur = next;
    }
    Ok(Reduction { steps, end: cur })
}

/// A cyclic sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label(pub Vec<usize>);

impl Label {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn rotated(&self, k: usize) -> Label {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Label(v)
    }

    /// Lexicographically minimal rotation.
    pub fn canonical(&self) -> Label {
        (0..self.len().max(1))
            .map(|k| self.rotated(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Minimal rotation of either direction.
    pub fn dihedral_canonical(&self) -> Label {
        let rev = Label(self.0.iter().rev().copied().collect());
        self.canonical().min(rev.canonical())
    }

    pub fn cyclic_eq(&self, other: &Label) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// Label after truncating the basis vertex between positions `i` and `i+1`.
    pub fn truncated(&self, i: usize) -> Option<Label> {
        let n = self.len();
        if i >= n {
            return None;
        }
        let mut v = self.0.clone();
        v[i] += 1;
        v[(i + 1) % n] += 1;
        v.insert(i + 1, 0);
        Some(Label(v))
    }

    /// Label after contracting the triangle at position `i`.
    pub fn contracted(&self, i: usize) -> Option<Label> {
        let n = self.len();
        if i >= n || n < 4 || self.0[i] != 0 {
            return None;
        }
        let (p, q) = ((i + n - 1) % n, (i + 1) % n);
        if self.0[p] == 0 || self.0[q] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[p] -= 1;
        v[q] -= 1;
        v.remove(i);
        Some(Label(v))
    }

    /// Necessary conditions on the label of a simple n-pyramitoid.
    pub fn validate(&self, n: usize) -> bool {
        validate_label(self, n)
    }
}

/// Checks the four necessary label conditions for a simple n-pyramitoid.
pub fn validate_label(label: &Label, n: usize) -> bool {
    if n < 3 || label.len() != n {
        return false;
    }
    let b = label.entries();
    if b.iter().any(|&x| x > n - 3) {
        return false;
    }
    if b.iter().filter(|&&x| x == 0).count() < 2 {
        return false;
    }
    if n != 3 && (0..n).any(|i| b[i] == 0 && b[(i + 1) % n] == 0) {
        return false;
    }
    b.iter().sum::<usize>() == 2 * (n - 3)
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        if self.0.iter().all(|&x| x < 10) {
            write!(f, "({})", parts.concat())
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Err(Error::Parse(format!("empty label {s:?}")));
        }
        let entries: std::result::Result<Vec<usize>, _> = if inner.contains(',') {
            inner.split(',').map(|t| t.trim().parse::<usize>()).collect()
        } else {
            inner
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_string().parse::<usize>())
                .collect()
        };
        entries
            .map(Label)
            .map_err(|e| Error::Parse(format!("label {s:?}: {e}")))
    }
}
