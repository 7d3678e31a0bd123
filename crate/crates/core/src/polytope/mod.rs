//! Combinatorial polyhedra: oriented face lists over a 2-sphere.
//!
//! A [`CombinatorialPolyhedron`] stores vertex ids and faces as cyclic vertex
//! sequences. Edges are derived. All face cycles are expected to be
//! counterclockwise as seen from outside, so the two faces on an edge traverse
//! it in opposite directions. Nothing is checked at construction time;
//! [`CombinatorialPolyhedron::validate`] reports every violated invariant.

mod builders;
mod iso;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use builders::{cube, n_book_polyhedron, n_pyramid, prism, tetrahedron, trapezohedron_polyhedron};

pub type VertexId = usize;

/// An undirected edge, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A violated polyhedron invariant, with the offending cell ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Diagnostic {
    DuplicateVertex(VertexId),
    ShortFace { face: usize, len: usize },
    UnknownVertex { face: usize, vertex: VertexId },
    RepeatedVertexInFace { face: usize, vertex: VertexId },
    EdgeFaceMismatch { edge: Edge, faces: Vec<usize> },
    InconsistentOrientation { edge: Edge, faces: Vec<usize> },
    IsolatedVertex(VertexId),
    LowValence { vertex: VertexId, valence: usize },
    NonManifoldVertex(VertexId),
    FacesShareMultipleEdges { faces: (usize, usize), edges: Vec<Edge> },
    Disconnected { components: usize },
    EulerCharacteristic { v: usize, e: usize, f: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DuplicateVertex(v) => write!(f, "vertex id {v} listed twice"),
            Diagnostic::ShortFace { face, len } => {
                write!(f, "face {face} has {len} vertices (need at least 3)")
            }
            Diagnostic::UnknownVertex { face, vertex } => {
                write!(f, "face {face} uses undeclared vertex {vertex}")
            }
            Diagnostic::RepeatedVertexInFace { face, vertex } => {
                write!(f, "face {face} visits vertex {vertex} more than once")
            }
            Diagnostic::EdgeFaceMismatch { edge, faces } => write!(
                f,
                "face/edge mismatch: edge {edge} lies in {} face(s) {faces:?}",
                faces.len()
            ),
            Diagnostic::InconsistentOrientation { edge, faces } => write!(
                f,
                "faces {faces:?} traverse edge {edge} in the same direction"
            ),
            Diagnostic::IsolatedVertex(v) => write!(f, "vertex {v} lies in no face"),
            Diagnostic::LowValence { vertex, valence } => {
                write!(f, "vertex {vertex} has valence {valence} (need at least 3)")
            }
            Diagnostic::NonManifoldVertex(v) => {
                write!(f, "faces around vertex {v} do not form a single cycle")
            }
            Diagnostic::FacesShareMultipleEdges { faces, edges } => write!(
                f,
                "faces {} and {} share {} edges",
                faces.0,
                faces.1,
                edges.len()
            ),
            Diagnostic::Disconnected { components } => {
                write!(f, "incidence graph has {components} components")
            }
            Diagnostic::EulerCharacteristic { v, e, f: nf } => write!(
                f,
                "V - E + F = {} - {} + {} = {} (expected 2)",
                v,
                e,
                nf,
                *v as i64 - *e as i64 + *nf as i64
            ),
        }
    }
}

#[derive(Clone, Debug, Default)]
struct Incidence {
    vertex_index: HashMap<VertexId, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    /// Per edge: (face, traverses low -> high).
    edge_faces: Vec<Vec<(usize, bool)>>,
    /// Directed edge -> face traversing it.
    dart_face: HashMap<(VertexId, VertexId), usize>,
    neighbors: Vec<BTreeSet<VertexId>>,
}

impl Incidence {
    fn build(vertices: &[VertexId], faces: &[Vec<VertexId>]) -> Self {
        let mut vertex_index = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            vertex_index.entry(v).or_insert(i);
        }
        let mut per_edge: BTreeMap<Edge, Vec<(usize, bool)>> = BTreeMap::new();
        let mut dart_face = HashMap::new();
        let mut neighbors = vec![BTreeSet::new(); vertices.len()];
        for (fi, face) in faces.iter().enumerate() {
            let k = face.len();
            if k < 2 {
                continue;
            }
            for i in 0..k {
                let a = face[i];
                let b = face[(i + 1) % k];
                if a == b {
                    continue;
                }
                per_edge.entry(Edge::new(a, b)).or_default().push((fi, a < b));
                dart_face.insert((a, b), fi);
                if let (Some(&ia), Some(&ib)) = (vertex_index.get(&a), vertex_index.get(&b)) {
                    neighbors[ia].insert(b);
                    neighbors[ib].insert(a);
                }
            }
        }
        let edges: Vec<Edge> = per_edge.keys().copied().collect();
        let edge_index = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let edge_faces = per_edge.into_values().collect();
        Incidence {
            vertex_index,
            edges,
            edge_index,
            edge_faces,
            dart_face,
            neighbors,
        }
    }
}

/// A polyhedron given by its faces as cyclic vertex sequences.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(from = "PolyhedronJson", into = "PolyhedronJson")]
pub struct CombinatorialPolyhedron {
    vertices: Vec<VertexId>,
    faces: Vec<Vec<VertexId>>,
    inc: Incidence,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct PolyhedronJson {
    vertices: Vec<VertexId>,
    faces: Vec<Vec<VertexId>>,
}

impl From<PolyhedronJson> for CombinatorialPolyhedron {
    fn from(raw: PolyhedronJson) -> Self {
        CombinatorialPolyhedron::new(raw.vertices, raw.faces)
    }
}

impl From<CombinatorialPolyhedron> for PolyhedronJson {
    fn from(p: CombinatorialPolyhedron) -> Self {
        PolyhedronJson {
            vertices: p.vertices,
            faces: p.faces,
        }
    }
}

impl PartialEq for CombinatorialPolyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.faces == other.faces
    }
}

impl Eq for CombinatorialPolyhedron {}

impl CombinatorialPolyhedron {
    pub fn new(vertices: Vec<VertexId>, faces: Vec<Vec<VertexId>>) -> Self {
        let inc = Incidence::build(&vertices, &faces);
        CombinatorialPolyhedron {
            vertices,
            faces,
            inc,
        }
    }

    /// Builds a polyhedron whose vertex list is every id used by a face, sorted.
    pub fn from_faces(faces: Vec<Vec<VertexId>>) -> Self {
        let vertices: BTreeSet<VertexId> = faces.iter().flatten().copied().collect();
        Self::new(vertices.into_iter().collect(), faces)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polyhedron serializes")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &[VertexId] {
        &self.faces[f]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.inc.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.inc.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.vertices.iter().copied().max()
    }

    /// Position of `v` in the vertex list.
    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.inc.vertex_index.get(&v).copied()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.inc.edge_index.get(&e).copied()
    }

    /// Faces containing `e`, each with a flag telling whether the face
    /// traverses the edge from its smaller to its larger endpoint.
    pub fn edge_faces(&self, e: Edge) -> &[(usize, bool)] {
        match self.inc.edge_index.get(&e) {
            Some(&i) => &self.inc.edge_faces[i],
            None => &[],
        }
    }

    /// The face traversing `a -> b`, if any.
    pub fn face_of_dart(&self, a: VertexId, b: VertexId) -> Option<usize> {
        self.inc.dart_face.get(&(a, b)).copied()
    }

    /// Directed edges of face `f` in cyclic order.
    pub fn face_darts(&self, f: usize) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let face = &self.faces[f];
        let k = face.len();
        (0..k).map(move |i| (face[i], face[(i + 1) % k]))
    }

    pub fn face_edges(&self, f: usize) -> Vec<Edge> {
        self.face_darts(f).map(|(a, b)| Edge::new(a, b)).collect()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        match self.vertex_index(v) {
            Some(i) => self.inc.neighbors[i].iter().copied().collect(),
            None => Vec::new(),
        }
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.vertex_index(v)
            .map(|i| self.inc.neighbors[i].len())
            .unwrap_or(0)
    }

    /// Faces containing vertex `v`, in increasing index order.
    pub fn faces_of_vertex(&self, v: VertexId) -> Vec<usize> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, face)| face.contains(&v))
            .map(|(i, _)| i)
            .collect()
    }

    /// True when the two faces share an edge.
    pub fn faces_adjacent(&self, f: usize, g: usize) -> bool {
        self.face_darts(f)
            .any(|(a, b)| self.face_of_dart(b, a) == Some(g))
    }

    /// The neighbour of `x` following `y` in the rotation around `x`
    /// (the rotation induced by the face orientation).
    pub(crate) fn rotate(&self, x: VertexId, y: VertexId) -> Option<VertexId> {
        let f = self.face_of_dart(y, x)?;
        let face = &self.faces[f];
        let pos = face.iter().position(|&v| v == x)?;
        Some(face[(pos + 1) % face.len()])
    }

    /// Inverse of [`Self::rotate`].
    pub(crate) fn rotate_back(&self, x: VertexId, y: VertexId) -> Option<VertexId> {
        let f = self.face_of_dart(x, y)?;
        let face = &self.faces[f];
        let pos = face.iter().position(|&v| v == x)?;
        Some(face[(pos + face.len() - 1) % face.len()])
    }

    /// Every vertex has exactly three edges.
    pub fn is_simple(&self) -> bool {
        self.vertices.iter().all(|&v| self.valence(v) == 3)
    }

    /// A vertex of valence other than 3, if one exists.
    pub fn first_non_simple_vertex(&self) -> Option<(VertexId, usize)> {
        self.vertices
            .iter()
            .map(|&v| (v, self.valence(v)))
            .find(|&(_, k)| k != 3)
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut diags = Vec::new();

        let mut seen = BTreeSet::new();
        for &v in &self.vertices {
            if !seen.insert(v) {
                diags.push(Diagnostic::DuplicateVertex(v));
            }
        }
        for (fi, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                diags.push(Diagnostic::ShortFace {
                    face: fi,
                    len: face.len(),
                });
            }
            let mut in_face = BTreeSet::new();
            for &v in face {
                if !seen.contains(&v) {
                    diags.push(Diagnostic::UnknownVertex { face: fi, vertex: v });
                }
                if !in_face.insert(v) {
                    diags.push(Diagnostic::RepeatedVertexInFace { face: fi, vertex: v });
                }
            }
        }

        let mut edges_ok = true;
        for (e, faces) in self.inc.edges.iter().zip(&self.inc.edge_faces) {
            let ids: Vec<usize> = faces.iter().map(|&(f, _)| f).collect();
            if faces.len() != 2 {
                edges_ok = false;
                diags.push(Diagnostic::EdgeFaceMismatch { edge: *e, faces: ids });
            } else if faces[0].1 == faces[1].1 {
                edges_ok = false;
                diags.push(Diagnostic::InconsistentOrientation { edge: *e, faces: ids });
            }
        }

        let used: BTreeSet<VertexId> = self.faces.iter().flatten().copied().collect();
        for &v in &self.vertices {
            if !used.contains(&v) {
                diags.push(Diagnostic::IsolatedVertex(v));
                continue;
            }
            let k = self.valence(v);
            if k < 3 {
                diags.push(Diagnostic::LowValence { vertex: v, valence: k });
            }
            if edges_ok && !self.vertex_link_is_cycle(v) {
                diags.push(Diagnostic::NonManifoldVertex(v));
            }
        }

        if edges_ok {
            let mut shared: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
            for (e, faces) in self.inc.edges.iter().zip(&self.inc.edge_faces) {
                let (a, b) = (faces[0].0, faces[1].0);
                shared.entry((a.min(b), a.max(b))).or_default().push(*e);
            }
            for (faces, edges) in shared {
                if edges.len() > 1 {
                    diags.push(Diagnostic::FacesShareMultipleEdges { faces, edges });
                }
            }
        }

        let components = self.count_components();
        if components > 1 {
            diags.push(Diagnostic::Disconnected { components });
        }

        if self.euler_characteristic() != 2 {
            diags.push(Diagnostic::EulerCharacteristic {
                v: self.num_vertices(),
                e: self.num_edges(),
                f: self.num_faces(),
            });
        }
        diags
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let diags = self.validate();
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPolyhedron(diags))
        }
    }

    fn vertex_link_is_cycle(&self, v: VertexId) -> bool {
        let nbrs = self.neighbors(v);
        let Some(&start) = nbrs.first() else {
            return false;
        };
        let mut y = start;
        let mut count = 0;
        loop {
            match self.rotate(v, y) {
                Some(z) => y = z,
                None => return false,
            }
            count += 1;
            if y == start || count > nbrs.len() {
                break;
            }
        }
        y == start && count == nbrs.len()
    }

    fn count_components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for e in &self.inc.edges {
            if let (Some(a), Some(b)) = (self.vertex_index(e.0), self.vertex_index(e.1)) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// The mirror image: every face cycle reversed.
    pub fn reversed(&self) -> Self {
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().rev().copied().collect())
            .collect();
        Self::new(self.vertices.clone(), faces)
    }

    /// Renames vertices to `0..V` in vertex-list order.
    pub fn relabeled(&self) -> (Self, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<VertexId, VertexId> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().map(|v| map[v]).collect())
            .collect();
        (Self::new((0..self.vertices.len()).collect(), faces), map)
    }

    /// Cuts off vertex `v`. Each face through `v` has `v` replaced by two new
    /// vertices on its two edges at `v`; a new face is appended last.
    ///
    /// Returns the new polyhedron, the index of the new face, and the new
    /// vertex created on each edge `(v, w)` keyed by `w`.
    pub fn truncate_vertex(&self, v: VertexId) -> Result<Truncation> {
        self.ensure_valid()?;
        let nbrs = self.neighbors(v);
        if nbrs.is_empty() {
            return Err(Error::InvalidVertex {
                position: v,
                n: self.num_vertices(),
            });
        }
        let mut next_id = self.max_vertex_id().unwrap_or(0) + 1;
        let mut cut: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for &w in &nbrs {
            cut.insert(w, next_id);
            next_id += 1;
        }
        let mut faces: Vec<Vec<VertexId>> = Vec::with_capacity(self.faces.len() + 1);
        let mut new_face_darts: HashMap<VertexId, VertexId> = HashMap::new();
        for face in &self.faces {
            let k = face.len();
            let mut out = Vec::with_capacity(k + 1);
            for i in 0..k {
                if face[i] == v {
                    let prev = face[(i + k - 1) % k];
                    let next = face[(i + 1) % k];
                    let (a, b) = (cut[&prev], cut[&next]);
                    out.push(a);
                    out.push(b);
                    // The new face traverses b -> a.
                    new_face_darts.insert(b, a);
                } else {
                    out.push(face[i]);
                }
            }
            faces.push(out);
        }
        let start = cut[&nbrs[0]];
        let mut cycle = vec![start];
        let mut cur = new_face_darts[&start];
        while cur != start {
            cycle.push(cur);
            cur = new_face_darts[&cur];
        }
        faces.push(cycle);
        let mut vertices: Vec<VertexId> = self.vertices.iter().copied().filter(|&x| x != v).collect();
        vertices.extend(cut.values().copied());
        let poly = Self::new(vertices, faces);
        Ok(Truncation {
            new_face: poly.num_faces() - 1,
            poly,
            cut,
        })
    }

    /// Shrinks face `f` to a single new vertex, removing the face.
    pub fn contract_face(&self, f: usize) -> Result<Contraction> {
        self.ensure_valid()?;
        if f >= self.faces.len() {
            return Err(Error::UnknownFace(f));
        }
        let merged = self.max_vertex_id().unwrap_or(0) + 1;
        let doomed: BTreeSet<VertexId> = self.faces[f].iter().copied().collect();
        let mut faces = Vec::with_capacity(self.faces.len() - 1);
        let mut face_map = vec![None; self.faces.len()];
        for (gi, face) in self.faces.iter().enumerate() {
            if gi == f {
                continue;
            }
            let mapped: Vec<VertexId> = face
                .iter()
                .map(|v| if doomed.contains(v) { merged } else { *v })
                .collect();
            let out = dedup_cyclic(mapped);
            face_map[gi] = Some(faces.len());
            faces.push(out);
        }
        let mut vertices: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !doomed.contains(v))
            .collect();
        vertices.push(merged);
        let poly = Self::new(vertices, faces);
        Ok(Contraction {
            poly,
            merged_vertex: merged,
            face_map,
        })
    }

    /// Canonical code of the oriented map; equal codes mean isomorphic
    /// polyhedra. With `allow_reflection` mirror images get the same code.
    pub fn canonical_code(&self, allow_reflection: bool) -> Vec<usize> {
        iso::canonical_code(self, allow_reflection)
    }

    pub fn is_isomorphic(&self, other: &Self, allow_reflection: bool) -> bool {
        self.num_vertices() == other.num_vertices()
            && self.num_edges() == other.num_edges()
            && self.num_faces() == other.num_faces()
            && self.canonical_code(allow_reflection) == other.canonical_code(allow_reflection)
    }

    /// Multiset of face sizes, sorted.
    pub fn face_vector(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.faces.iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }
}

/// Removes cyclically consecutive duplicates.
pub(crate) fn dedup_cyclic(mut seq: Vec<VertexId>) -> Vec<VertexId> {
    seq.dedup();
    while seq.len() > 1 && seq.first() == seq.last() {
        seq.pop();
    }
    seq
}

/// Result of [`CombinatorialPolyhedron::truncate_vertex`].
#[derive(Clone, Debug)]
pub struct Truncation {
    pub poly: CombinatorialPolyhedron,
    pub new_face: usize,
    pub cut: BTreeMap<VertexId, VertexId>,
}

/// Result of [`CombinatorialPolyhedron::contract_face`].
#[derive(Clone, Debug)]
pub struct Contraction {
    pub poly: CombinatorialPolyhedron,
    pub merged_vertex: VertexId,
    pub face_map: Vec<Option<usize>>,
}
