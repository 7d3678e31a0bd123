//! Bipyramitoids: two pyramitoids glued along their bases, and the
//! Heegaard splittings of their small covers.
//!
//! With `flip = false` and offset `o`, north basis vertex `B_k` meets south
//! basis vertex `C_(o-k)`, so north basis edge `k` meets south basis edge
//! `o - k - 1`. With `flip = true` the south half is mirrored first and
//! `B_k` meets `C_(o+k)`. Glued face `k` is north lateral face `k` joined to
//! its partner across basis edge `k`; generator `k` of `(Z/2)^n` is the
//! reflection in that face on both sides.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::coxeter::{bipyramitoid_pi1_presentation, GroupPresentation};
use crate::enumeration::{code_of, pyramitoid_from_triangulation, Code, Triangulation};
use crate::error::{Error, Result};
use crate::homology::{
    homology, invariant_factors, ChainComplex, HomologyGroup, IntegerMatrix,
};
use crate::polytope::{trapezohedron_polyhedron, CombinatorialPolyhedron, Edge, VertexId};
use crate::pyramitoid::Pyramitoid;
use crate::small_cover::{
    boundary_subcomplex, dome_cover, full_cover, lift_arcs, small_cover_complex, BaseComplex,
    LiftedCurve, SmallCoverComplex,
};

/// How the south basis is laid against the north basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub offset: usize,
    pub flip: bool,
}

impl Matching {
    /// South basis vertex index met by north basis vertex `k`.
    pub fn south_vertex(&self, k: usize, n: usize) -> usize {
        if self.flip {
            (self.offset + k) % n
        } else {
            (self.offset % n + n - k % n) % n
        }
    }

    /// South basis edge met by north basis edge `k`.
    pub fn south_edge(&self, k: usize, n: usize) -> usize {
        if self.flip {
            (self.offset + k) % n
        } else {
            (self.offset % n + 2 * n - k % n - 1) % n
        }
    }
}

/// Two pyramitoids glued along their bases.
#[derive(Clone, Debug)]
pub struct Bipyramitoid {
    pub north: Pyramitoid,
    pub south: Pyramitoid,
    pub matching: Matching,
    /// Glued polyhedron; face `k` contains north lateral face `k`.
    pub glued: CombinatorialPolyhedron,
    /// Edges of `glued` crossed by the equator, in order; edge `k` passes
    /// through the former basis vertex `B_k`.
    pub equator: Vec<Edge>,
    /// South lateral position glued to north lateral `k`.
    pub south_positions: Vec<usize>,
}

impl Bipyramitoid {
    pub fn n(&self) -> usize {
        self.north.n()
    }

    /// The south code with arcs renamed to north edge indices.
    pub fn south_code_in_common_indexing(&self) -> Result<Code> {
        let sc = code_of(&self.south)?;
        let inv: BTreeMap<usize, usize> = self
            .south_positions
            .iter()
            .enumerate()
            .map(|(k, &s)| (s, k))
            .collect();
        Code::new(sc.n, sc.arcs.iter().map(|&(a, b)| (inv[&a], inv[&b])))
    }

    pub fn pi1_presentation(&self) -> Result<GroupPresentation> {
        let nc = code_of(&self.north)?;
        let sc = self.south_code_in_common_indexing()?;
        bipyramitoid_pi1_presentation(&nc, &sc)
    }

    /// The south half as used in the gluing (mirrored when flipped).
    fn south_poly(&self) -> CombinatorialPolyhedron {
        if self.matching.flip {
            self.south.poly().reversed()
        } else {
            self.south.poly().clone()
        }
    }
}

fn sole_leaf_neighbor(pyr: &Pyramitoid, poly: &CombinatorialPolyhedron, b: VertexId) -> Result<VertexId> {
    let basis: BTreeSet<VertexId> = pyr.basis_cycle().iter().copied().collect();
    let others: Vec<VertexId> = poly
        .neighbors(b)
        .into_iter()
        .filter(|v| !basis.contains(v))
        .collect();
    match others.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::GluingInvalid(format!(
            "basis vertex {b} has {} non-basis neighbours",
            others.len()
        ))),
    }
}

fn rotate_to(face: &[VertexId], start: VertexId) -> Vec<VertexId> {
    let p = face.iter().position(|&v| v == start).expect("vertex on face");
    let mut out = face.to_vec();
    out.rotate_left(p);
    out
}

/// Glues `south` under `north` along their bases.
pub fn glue_bipyramitoid(north: &Pyramitoid, south: &Pyramitoid, matching: Matching) -> Result<Bipyramitoid> {
    let n = north.n();
    if south.n() != n {
        return Err(Error::BasisMismatch {
            north: n,
            south: south.n(),
        });
    }
    let npoly = north.poly();
    let spoly = if matching.flip {
        south.poly().reversed()
    } else {
        south.poly().clone()
    };
    let b = north.basis_cycle();
    let c = south.basis_cycle();
    let phi = |k: usize| c[matching.south_vertex(k, n)];
    let shift = npoly.max_vertex_id().unwrap_or(0) + 1;
    let to_b: BTreeMap<VertexId, VertexId> = (0..n).map(|k| (phi(k), b[k])).collect();
    let map_s = |v: VertexId| to_b.get(&v).copied().unwrap_or(v + shift);
    let on_basis: BTreeSet<VertexId> = b.iter().copied().collect();

    let mut faces = Vec::with_capacity(n);
    let mut south_positions = Vec::with_capacity(n);
    for k in 0..n {
        let (bk, bk1) = (b[k], b[(k + 1) % n]);
        let nf = rotate_to(npoly.face(north.lateral_faces()[k]), bk);
        let sf_idx = spoly
            .face_of_dart(phi(k), phi((k + 1) % n))
            .ok_or_else(|| Error::GluingInvalid(format!("no south face on edge {k}")))?;
        south_positions.push(
            south
                .position_of_face(sf_idx)
                .ok_or_else(|| Error::GluingInvalid(format!("south face {sf_idx} is not lateral")))?,
        );
        let sf: Vec<VertexId> = spoly.face(sf_idx).iter().map(|&v| map_s(v)).collect();
        let sf = rotate_to(&sf, bk1);
        debug_assert_eq!(nf.last(), Some(&bk1));
        debug_assert_eq!(sf.last(), Some(&bk));
        let mut merged: Vec<VertexId> = nf.clone();
        merged.extend_from_slice(&sf[1..sf.len() - 1]);
        merged.retain(|v| !on_basis.contains(v));
        if merged.len() < 3 {
            return Err(Error::GluingInvalid(format!(
                "faces meeting across basis edge {k} are both triangles"
            )));
        }
        faces.push(merged);
    }

    let mut equator = Vec::with_capacity(n);
    for k in 0..n {
        let x = sole_leaf_neighbor(north, npoly, b[k])?;
        let y = map_s(sole_leaf_neighbor(south, &spoly, phi(k))?);
        equator.push(Edge::new(x, y));
    }

    let mut vertices: Vec<VertexId> = npoly
        .vertices()
        .iter()
        .copied()
        .filter(|v| !on_basis.contains(v))
        .collect();
    let south_basis: BTreeSet<VertexId> = c.iter().copied().collect();
    vertices.extend(
        spoly
            .vertices()
            .iter()
            .copied()
            .filter(|v| !south_basis.contains(v))
            .map(|v| v + shift),
    );
    let glued = CombinatorialPolyhedron::new(vertices, faces);
    let diags = glued.validate();
    if !diags.is_empty() {
        let msgs: Vec<String> = diags.iter().map(ToString::to_string).collect();
        return Err(Error::GluingInvalid(msgs.join("; ")));
    }
    Ok(Bipyramitoid {
        north: north.clone(),
        south: south.clone(),
        matching,
        glued,
        equator,
        south_positions,
    })
}

/// Cuts `poly` along the closed curve crossing the listed edges in order.
///
/// The north half's basis is `[P_0 .. P_(n-1)]` with `P_i` on equator edge
/// `i`, and its lateral face `i` is the piece of the face shared by equator
/// edges `i` and `i+1`. The south half is anchored so that gluing back with
/// offset 0 restores `poly`.
pub fn split_bipyramitoid(poly: &CombinatorialPolyhedron, equator: &[Edge]) -> Result<(Pyramitoid, Pyramitoid)> {
    poly.ensure_valid()?;
    let n = equator.len();
    if n < 3 {
        return Err(Error::EquatorInvalid(format!("{n} crossings; need at least 3")));
    }
    if n != poly.num_faces() {
        return Err(Error::EquatorInvalid(format!(
            "{n} crossings but {} faces; every face must be crossed once",
            poly.num_faces()
        )));
    }
    for e in equator {
        if poly.edge_index(*e).is_none() {
            return Err(Error::EquatorInvalid(format!("{e} is not an edge")));
        }
    }
    let mut crossed = Vec::with_capacity(n);
    for i in 0..n {
        let (e, f) = (equator[i], equator[(i + 1) % n]);
        let fe: BTreeSet<usize> = poly.edge_faces(e).iter().map(|x| x.0).collect();
        let ff: BTreeSet<usize> = poly.edge_faces(f).iter().map(|x| x.0).collect();
        let common: Vec<usize> = fe.intersection(&ff).copied().collect();
        if common.len() != 1 {
            return Err(Error::EquatorInvalid(format!(
                "crossings {e} and {f} share {} faces",
                common.len()
            )));
        }
        crossed.push(common[0]);
    }
    let distinct: BTreeSet<usize> = crossed.iter().copied().collect();
    if distinct.len() != n {
        let missed: Vec<usize> = (0..n).filter(|f| !distinct.contains(f)).collect();
        return Err(Error::EquatorInvalid(format!(
            "faces {missed:?} are missed and others crossed twice"
        )));
    }

    let base = poly.max_vertex_id().unwrap_or(0) + 1;
    let p = |i: usize| base + i % n;
    let mut north_faces = Vec::with_capacity(n + 1);
    let mut south_faces = Vec::with_capacity(n + 1);
    let mut north_vs = BTreeSet::new();
    let mut south_vs = BTreeSet::new();
    for i in 0..n {
        let face = poly.face(crossed[i]);
        let k = face.len();
        let pos = |e: Edge| {
            (0..k)
                .find(|&a| Edge::new(face[a], face[(a + 1) % k]) == e)
                .expect("edge on face")
        };
        let (a, b) = (pos(equator[i]), pos(equator[(i + 1) % n]));
        let mut piece_a = vec![p(i)];
        let mut j = (a + 1) % k;
        loop {
            piece_a.push(face[j]);
            north_vs.insert(face[j]);
            if j == b {
                break;
            }
            j = (j + 1) % k;
        }
        piece_a.push(p(i + 1));
        let mut piece_b = vec![p(i + 1)];
        let mut j = (b + 1) % k;
        loop {
            piece_b.push(face[j]);
            south_vs.insert(face[j]);
            if j == a {
                break;
            }
            j = (j + 1) % k;
        }
        piece_b.push(p(i));
        north_faces.push(piece_a);
        south_faces.push(piece_b);
    }
    if let Some(v) = north_vs.intersection(&south_vs).next() {
        return Err(Error::EquatorInvalid(format!(
            "vertex {v} lies on both sides of the equator"
        )));
    }
    north_faces.push((0..n).map(p).collect());
    let mut sb = vec![p(0)];
    sb.extend((1..n).rev().map(p));
    south_faces.push(sb);
    let wrap = |e: Error| match e {
        Error::EquatorInvalid(_) => e,
        other => Error::EquatorInvalid(other.to_string()),
    };
    let north = Pyramitoid::anchored(CombinatorialPolyhedron::from_faces(north_faces), n, Some(0))
        .map_err(wrap)?;
    let south = Pyramitoid::anchored(CombinatorialPolyhedron::from_faces(south_faces), n, None)
        .map_err(wrap)?;
    Ok((north, south))
}

/// Splits along `equator` and glues back with offset 0.
pub fn bipyramitoid_from_equator(poly: &CombinatorialPolyhedron, equator: &[Edge]) -> Result<Bipyramitoid> {
    let (n, s) = split_bipyramitoid(poly, equator)?;
    glue_bipyramitoid(&n, &s, Matching::default())
}

/// Zigzag equator of the trapezohedron built by [`trapezohedron_polyhedron`].
pub fn trapezohedron_equator(n: usize) -> Vec<Edge> {
    let u = |i: usize| 2 + i % n;
    let w = |i: usize| 2 + n + i % n;
    (0..n)
        .flat_map(|i| [Edge::new(u(i), w(i)), Edge::new(w(i), u(i + 1))])
        .collect()
}

/// The trapezohedron with `2n` kites as two `2n`-pyramitoids.
pub fn trapezohedron(n: usize) -> Result<Bipyramitoid> {
    let poly = trapezohedron_polyhedron(n)?;
    bipyramitoid_from_equator(&poly, &trapezohedron_equator(n))
}

/// The `2n`-code made of the ears cutting off even corners and the inner
/// diagonals `(2a+1, 2b+1)` from a triangulation of the n-gon.
pub fn trapezohedron_code(inner: &Triangulation) -> Result<Code> {
    let n = inner.n();
    let m = 2 * n;
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| ((2 * i + m - 1) % m, 2 * i + 1)).collect();
    arcs.extend(inner.diagonals().iter().map(|&(a, b)| (2 * a + 1, 2 * b + 1)));
    Code::new(m, arcs)
}

fn alternation_parity(code: &Code) -> Result<usize> {
    let label = code.triangulation().label();
    let zeros: Vec<usize> = (0..code.n).filter(|&i| label.0[i] == 0).collect();
    let half = code.n / 2;
    for parity in 0..2 {
        if zeros.len() == half && zeros.iter().all(|z| z % 2 == parity) {
            return Ok(parity);
        }
    }
    Err(Error::CodeAlternation(format!(
        "triangles at positions {zeros:?} of label {label}"
    )))
}

/// Replaces both apices of the `2n`-trapezohedron by the trees of the given
/// `2n`-codes; each triangle is glued against a non-triangle.
pub fn smooth_trapezohedron(n: usize, north_code: &Code, south_code: &Code) -> Result<Bipyramitoid> {
    let m = 2 * n;
    for c in [north_code, south_code] {
        if c.n != m {
            return Err(Error::CodeMismatch {
                code: c.n,
                pyramitoid: m,
            });
        }
    }
    alternation_parity(north_code)?;
    alternation_parity(south_code)?;
    let north = pyramitoid_from_triangulation(&north_code.triangulation())?;
    let south = pyramitoid_from_triangulation(&south_code.triangulation())?;
    let ln = north.label()?;
    let ls = south.label()?;
    let offset = (0..m)
        .find(|&o| {
            let mt = Matching { offset: o, flip: false };
            (0..m).all(|k| (ln.0[k] == 0) != (ls.0[mt.south_edge(k, m)] == 0))
        })
        .ok_or_else(|| Error::CodeAlternation("no offset alternates the triangles".into()))?;
    glue_bipyramitoid(&north, &south, Matching { offset, flip: false })
}

/// Homology of the small cover computed directly and by gluing two dome
/// covers along their boundary surfaces.
#[derive(Clone, Debug, Serialize)]
pub struct TwoWays {
    pub direct: Vec<HomologyGroup>,
    pub glued: Vec<HomologyGroup>,
    pub agree: bool,
}

/// The complex of the two dome covers glued along the basis cells.
pub fn glued_dome_complex(b: &Bipyramitoid) -> Result<ChainComplex> {
    let n = b.n();
    let npoly = b.north.poly();
    let spoly = b.south_poly();
    let nbase = BaseComplex::from_polyhedron(npoly)?;
    let sbase = BaseComplex::from_polyhedron(&spoly)?;
    let ncx = small_cover_complex(&nbase, b.north.lateral_faces())?;
    let smirrors: Vec<usize> = b
        .south_positions
        .iter()
        .map(|&s| b.south.lateral_faces()[s])
        .collect();
    let scx = small_cover_complex(&sbase, &smirrors)?;

    // South basis cells -> (north base cell, sign), per dimension.
    let c = b.south.basis_cycle();
    let bcyc = b.north.basis_cycle();
    let mut ident: Vec<BTreeMap<usize, (usize, i64)>> = vec![BTreeMap::new(); 3];
    let mut s_to_n = BTreeMap::new();
    for k in 0..n {
        let sv = c[b.matching.south_vertex(k, n)];
        s_to_n.insert(sv, bcyc[k]);
        ident[0].insert(
            spoly.vertex_index(sv).expect("valid"),
            (npoly.vertex_index(bcyc[k]).expect("valid"), 1),
        );
    }
    for k in 0..n {
        let (x, y) = (bcyc[k], bcyc[(k + 1) % n]);
        let ne = npoly.edge_index(Edge::new(x, y)).expect("valid");
        let (sx, sy) = (
            c[b.matching.south_vertex(k, n)],
            c[b.matching.south_vertex(k + 1, n)],
        );
        let se = Edge::new(sx, sy);
        let si = spoly.edge_index(se).expect("valid");
        // Edges are oriented low id -> high id on each side.
        let north_low_first = x < y;
        let south_from = s_to_n[&se.0];
        let sign = if (south_from == x) == north_low_first { 1 } else { -1 };
        ident[1].insert(si, (ne, sign));
    }
    // Both basis faces are oriented by their cycles; the identification
    // reverses orientation.
    let nb = b.north.basis();
    let sb = b.south.basis();
    let sface = spoly.face(sb);
    let pos = sface.iter().position(|&v| v == c[b.matching.south_vertex(0, n)]).unwrap();
    let next = sface[(pos + 1) % sface.len()];
    let face_sign = if s_to_n[&next] == bcyc[1 % n] { 1 } else { -1 };
    ident[2].insert(sb, (nb, face_sign));

    let ncounts = ncx.cell_counts();
    let mut dims = ncounts.clone();
    // South cell index -> (glued index, sign).
    let mut smap: Vec<Vec<(usize, i64)>> = Vec::with_capacity(4);
    for d in 0..=3 {
        let mut map = Vec::with_capacity(scx.cells(d).len());
        for &(cell, g) in scx.cells(d) {
            if let Some(&(ncell, sign)) = ident.get(d).and_then(|m| m.get(&cell)) {
                let idx = ncx.cell_index(d, ncell, g).expect("basis cell lifted on both sides");
                map.push((idx, sign));
            } else {
                map.push((dims[d], 1));
                dims[d] += 1;
            }
        }
        smap.push(map);
    }
    let mut boundaries = Vec::with_capacity(3);
    for d in 1..=3 {
        let nbd = ncx.boundary(d).expect("3-dimensional");
        let sbd = scx.boundary(d).expect("3-dimensional");
        let mut trip: Vec<(usize, usize, num_bigint::BigInt)> = nbd
            .triplets()
            .map(|(r, c, v)| (r, c, v.clone()))
            .collect();
        for (r, col, v) in sbd.triplets() {
            let (gc, csign) = smap[d][col];
            if gc < ncounts[d] {
                // Identified with a north cell already present.
                continue;
            }
            debug_assert_eq!(csign, 1);
            let (gr, rsign) = smap[d - 1][r];
            trip.push((gr, gc, v * rsign));
        }
        boundaries.push(IntegerMatrix::from_triplets(dims[d - 1], dims[d], trip));
    }
    let cc = ChainComplex::new(dims, boundaries)?;
    if let Some(k) = cc.first_dd_failure() {
        return Err(Error::ChainComplexInvalid(k));
    }
    Ok(cc)
}

pub fn z_homology_two_ways(b: &Bipyramitoid) -> Result<TwoWays> {
    for half in [&b.north, &b.south] {
        if let Some((v, k)) = half.poly().first_non_simple_vertex() {
            return Err(Error::NotSimple(v, k));
        }
    }
    let direct = homology(&full_cover(&b.glued)?.chain_complex())?;
    let glued = homology(&glued_dome_complex(b)?)?;
    let agree = direct == glued;
    Ok(TwoWays {
        direct,
        glued,
        agree,
    })
}

/// Meridian systems of both handlebodies on the common surface.
#[derive(Clone, Debug)]
pub struct HeegaardData {
    pub genus: usize,
    pub north_meridians: Vec<LiftedCurve>,
    pub south_meridians: Vec<LiftedCurve>,
    /// `intersection[i][j]`: crossings of north curve `i` with south curve `j`.
    pub intersection: Vec<Vec<u32>>,
    /// Rank of the span of each meridian system in `H_1` of the surface.
    pub north_rank: usize,
    pub south_rank: usize,
    /// `H_1` of the surface modulo both meridian systems.
    pub diagram_h1: HomologyGroup,
}

impl HeegaardData {
    pub fn to_json_value(&self) -> serde_json::Value {
        let curves = |cs: &[LiftedCurve]| -> Vec<serde_json::Value> {
            cs.iter()
                .map(|c| {
                    serde_json::json!({
                        "arc": [c.arc.0, c.arc.1],
                        "copies": c.copies,
                        "crossings": c.crossings,
                        "edges": c.chain,
                    })
                })
                .collect()
        };
        serde_json::json!({
            "genus": self.genus,
            "north_meridians": curves(&self.north_meridians),
            "south_meridians": curves(&self.south_meridians),
            "intersection": self.intersection,
            "north_rank": self.north_rank,
            "south_rank": self.south_rank,
            "diagram_h1": self.diagram_h1,
        })
    }
}

/// Position of an arc endpoint on the basis boundary after push-off:
/// north endpoints sit before south endpoints on each edge.
fn endpoint(edge: usize, south: bool) -> usize {
    3 * edge + if south { 2 } else { 1 }
}

fn chords_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: usize| a0 < x && x < a1;
    inside(b.0) != inside(b.1)
}

fn rank_of(rows: usize, cols: Vec<Vec<(usize, i64)>>) -> usize {
    let m = IntegerMatrix::from_triplets(
        rows,
        cols.len(),
        cols.iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |&(i, v)| (i, j, v))),
    );
    invariant_factors(&m).len()
}

fn matrix_columns(m: &IntegerMatrix) -> Vec<Vec<(usize, i64)>> {
    let mut cols = vec![Vec::new(); m.cols()];
    for (r, c, v) in m.triplets() {
        cols[c].push((r, v.to_string().parse::<i64>().expect("small entries")));
    }
    cols
}

pub fn heegaard_data(b: &Bipyramitoid) -> Result<HeegaardData> {
    for half in [&b.north, &b.south] {
        if let Some((v, k)) = half.poly().first_non_simple_vertex() {
            return Err(Error::NotSimple(v, k));
        }
    }
    let north = &b.north;
    let cx = dome_cover(north)?;
    let base = BaseComplex::from_polyhedron(north.poly())?;
    let surface = boundary_subcomplex(&cx, &base)?;
    let chi = surface.euler_characteristic();
    let genus = ((2 - chi) / 2) as usize;
    let ncode = code_of(north)?;
    let scode = b.south_code_in_common_indexing()?;
    let north_meridians = lift_arcs(&surface, north, &ncode)?;
    let south_meridians = lift_arcs(&surface, north, &scode)?;

    let mut intersection = vec![vec![0u32; south_meridians.len()]; north_meridians.len()];
    for (i, a) in north_meridians.iter().enumerate() {
        let ca: BTreeSet<u32> = a.copies.iter().copied().collect();
        let pa = (endpoint(a.arc.0, false), endpoint(a.arc.1, false));
        for (j, s) in south_meridians.iter().enumerate() {
            let pb = (endpoint(s.arc.0, true), endpoint(s.arc.1, true));
            if !chords_cross(pa, pb) {
                continue;
            }
            intersection[i][j] = s.copies.iter().filter(|g| ca.contains(g)).count() as u32;
        }
    }

    let nedges = surface.cell_counts()[1];
    let d2 = surface.boundary(2).expect("surface");
    let d2_cols = matrix_columns(d2);
    let base_rank = rank_of(nedges, d2_cols.clone());
    let with = |curves: &[LiftedCurve]| {
        let mut cols = d2_cols.clone();
        cols.extend(curves.iter().map(|c| c.chain.clone()));
        rank_of(nedges, cols) - base_rank
    };
    let north_rank = with(&north_meridians);
    let south_rank = with(&south_meridians);

    let mut cols = d2_cols;
    cols.extend(north_meridians.iter().map(|c| c.chain.clone()));
    cols.extend(south_meridians.iter().map(|c| c.chain.clone()));
    let ncols = cols.len();
    let extended = IntegerMatrix::from_triplets(
        nedges,
        ncols,
        cols.iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |&(i, v)| (i, j, v))),
    );
    let d1 = surface.boundary(1).expect("surface").clone();
    let counts = surface.cell_counts();
    let cc = ChainComplex::new(vec![counts[0], counts[1], ncols], vec![d1, extended])?;
    let diagram_h1 = homology(&cc)?.swap_remove(1);

    Ok(HeegaardData {
        genus,
        north_meridians,
        south_meridians,
        intersection,
        north_rank,
        south_rank,
        diagram_h1,
    })
}

/// For each meridian of `pyr`'s code: (non-trivial on the surface, bounds
/// in the handlebody).
pub fn meridian_classes(pyr: &Pyramitoid) -> Result<Vec<(bool, bool)>> {
    let cx = dome_cover(pyr)?;
    let base = BaseComplex::from_polyhedron(pyr.poly())?;
    let surface = boundary_subcomplex(&cx, &base)?;
    let curves = lift_arcs(&surface, pyr, &code_of(pyr)?)?;
    let s_edges = surface.cell_counts()[1];
    let h_edges = cx.cell_counts()[1];
    let s_cols = matrix_columns(surface.boundary(2).expect("surface"));
    let h_cols = matrix_columns(cx.boundary(2).expect("solid"));
    let s_rank = rank_of(s_edges, s_cols.clone());
    let h_rank = rank_of(h_edges, h_cols.clone());
    curves
        .iter()
        .map(|c| {
            let (mut sc, mut hc) = (s_cols.clone(), h_cols.clone());
            sc.push(c.chain.clone());
            let lifted: Vec<(usize, i64)> = c
                .chain
                .iter()
                .map(|&(i, v)| {
                    let (cell, g) = surface.cells(1)[i];
                    (cx.cell_index(1, cell, g).expect("surface cell in cover"), v)
                })
                .collect();
            hc.push(lifted);
            Ok((rank_of(s_edges, sc) > s_rank, rank_of(h_edges, hc) == h_rank))
        })
        .collect()
}

/// Dome cover, its boundary surface, and the base complex, for reuse.
pub fn dome_cover_with_surface(pyr: &Pyramitoid) -> Result<(SmallCoverComplex, SmallCoverComplex)> {
    let cx = dome_cover(pyr)?;
    let base = BaseComplex::from_polyhedron(pyr.poly())?;
    let surface = boundary_subcomplex(&cx, &base)?;
    Ok((cx, surface))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::betti_numbers;
    use crate::polytope::{cube, prism, tetrahedron};

    fn tetra_equator() -> Vec<Edge> {
        // Four edges avoiding the pair (0,1) and (2,3).
        vec![Edge(0, 2), Edge(1, 2), Edge(1, 3), Edge(0, 3)]
    }

    #[test]
    fn tetrahedron_splits_into_prisms_and_glues_back() {
        let t = tetrahedron();
        let (n, s) = split_bipyramitoid(&t, &tetra_equator()).unwrap();
        assert_eq!(n.n(), 4);
        assert!(n.label().unwrap().cyclic_eq(&"0101".parse().unwrap()));
        assert!(s.label().unwrap().cyclic_eq(&"0101".parse().unwrap()));
        let b = glue_bipyramitoid(&n, &s, Matching::default()).unwrap();
        assert!(b.glued.is_isomorphic(&t, false));
        assert_eq!(b.glued.num_faces(), 4);
    }

    #[test]
    fn bad_equators() {
        let p = prism(3);
        let err = split_bipyramitoid(&p, &[Edge(0, 1), Edge(1, 2), Edge(0, 2)]).unwrap_err();
        assert!(matches!(err, Error::EquatorInvalid(_)));
        let t = tetrahedron();
        let err = split_bipyramitoid(&t, &[Edge(0, 2), Edge(0, 2), Edge(1, 3), Edge(0, 3)]).unwrap_err();
        assert!(matches!(err, Error::EquatorInvalid(_)));
    }

    #[test]
    fn triangle_on_triangle_is_rejected() {
        let t = tetrahedron();
        let (n, s) = split_bipyramitoid(&t, &tetra_equator()).unwrap();
        let bad = (0..4)
            .map(|o| glue_bipyramitoid(&n, &s, Matching { offset: o, flip: false }))
            .filter(|r| matches!(r, Err(Error::GluingInvalid(_))))
            .count();
        assert!(bad > 0);
    }

    #[test]
    fn cube_split_and_two_ways() {
        let c = cube();
        // A hexagon around the cube avoiding two opposite vertices.
        let eq = hexagon_equator(&c);
        let b = bipyramitoid_from_equator(&c, &eq).unwrap();
        assert!(b.glued.is_isomorphic(&c, false));
        assert!(b.north.label().unwrap().cyclic_eq(&"020202".parse().unwrap()));
        let tw = z_homology_two_ways(&b).unwrap();
        assert!(tw.agree);
        assert_eq!(betti_numbers(&tw.direct), vec![1, 3, 3, 1]);
    }

    fn hexagon_equator(c: &CombinatorialPolyhedron) -> Vec<Edge> {
        // Edges not touching vertex 0 or its antipode, in cyclic order.
        let far = (0..8)
            .find(|&v| v != 0 && c.neighbors(0).iter().all(|w| !c.neighbors(v).contains(w)) && !c.neighbors(0).contains(&v))
            .unwrap();
        let mut pool: Vec<Edge> = c
            .edges()
            .iter()
            .copied()
            .filter(|e| !e.contains(0) && !e.contains(far))
            .collect();
        let mut out = vec![pool.remove(0)];
        while !pool.is_empty() {
            let last = *out.last().unwrap();
            let lf: BTreeSet<usize> = c.edge_faces(last).iter().map(|x| x.0).collect();
            let used: BTreeSet<usize> = out
                .windows(2)
                .flat_map(|w| {
                    let a: BTreeSet<usize> = c.edge_faces(w[0]).iter().map(|x| x.0).collect();
                    let b: BTreeSet<usize> = c.edge_faces(w[1]).iter().map(|x| x.0).collect();
                    a.intersection(&b).copied().collect::<Vec<_>>()
                })
                .collect();
            let i = pool
                .iter()
                .position(|e| {
                    c.edge_faces(*e)
                        .iter()
                        .any(|x| lf.contains(&x.0) && !used.contains(&x.0))
                })
                .unwrap();
            out.push(pool.remove(i));
        }
        out
    }

    #[test]
    fn tetrahedron_heegaard_data() {
        let t = tetrahedron();
        let b = bipyramitoid_from_equator(&t, &tetra_equator()).unwrap();
        let h = heegaard_data(&b).unwrap();
        assert_eq!(h.genus, 1);
        assert_eq!(h.north_meridians.len(), 4);
        assert_eq!((h.north_rank, h.south_rank), (1, 1));
        assert!(h.intersection.iter().flatten().all(|&x| x == 1));
        assert_eq!(h.diagram_h1, HomologyGroup::free(0));
        let tw = z_homology_two_ways(&b).unwrap();
        assert!(tw.agree);
        assert_eq!(betti_numbers(&tw.direct), vec![1, 0, 0, 1]);
        let p = b.pi1_presentation().unwrap();
        assert_eq!(p.commutator_count(), 6);
    }

    #[test]
    fn trapezohedra() {
        let t3 = trapezohedron(3).unwrap();
        assert!(t3.glued.is_isomorphic(&cube(), false));
        let t4 = trapezohedron(4).unwrap();
        assert_eq!(t4.glued.num_faces(), 8);
        assert!(!t4.glued.is_simple());
        let sq0 = Triangulation::new(4, [(0, 2)]).unwrap();
        let sq1 = Triangulation::new(4, [(1, 3)]).unwrap();
        let codes = [trapezohedron_code(&sq0).unwrap(), trapezohedron_code(&sq1).unwrap()];
        let mut shapes = Vec::new();
        for a in &codes {
            for c in &codes {
                let s = smooth_trapezohedron(4, a, c).unwrap();
                assert!(s.glued.is_simple());
                assert_eq!(s.glued.face_vector(), vec![4, 4, 4, 4, 5, 5, 5, 5]);
                shapes.push(s.glued);
            }
        }
        for s in &shapes[1..] {
            assert!(s.is_isomorphic(&shapes[0], true));
        }
        let fan = Code::new(8, [(0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
        assert!(matches!(
            smooth_trapezohedron(4, &fan, &codes[0]),
            Err(Error::CodeAlternation(_))
        ));
    }

    #[test]
    fn meridians_bound_in_handlebody_only() {
        let t = Triangulation::new(5, [(0, 2), (0, 3)]).unwrap();
        let y = pyramitoid_from_triangulation(&t).unwrap();
        let classes = meridian_classes(&y).unwrap();
        assert_eq!(classes.len(), 16);
        assert!(classes.iter().all(|&(on_f, bounds)| on_f && bounds));
    }

    #[test]
    fn flipped_gluing_of_prisms() {
        let t = Triangulation::new(5, [(0, 2), (0, 3)]).unwrap();
        let y = pyramitoid_from_triangulation(&t).unwrap();
        let ok = (0..5)
            .filter_map(|o| glue_bipyramitoid(&y, &y, Matching { offset: o, flip: true }).ok())
            .collect::<Vec<_>>();
        assert!(!ok.is_empty());
        for b in &ok {
            let tw = z_homology_two_ways(b).unwrap();
            assert!(tw.agree, "{:?}", b.matching);
        }
    }
}
