//! Small covers as regular cell complexes.
//!
//! A base cell `c` together with a mask `g` in `(Z/2)^m` names the cell
//! `g·c`; two masks name the same cell when they differ by reflections whose
//! mirrors contain `c`, so the canonical mask has those bits cleared. Each
//! lifted cell carries the orientation transported from its base cell, which
//! makes lifted incidence numbers equal to base incidence numbers:
//! `∂(c, g) = Σ [c:d]·(d, g with the bits of d's mirrors cleared)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::coxeter::Graph;
use crate::enumeration::Code;
use crate::error::{Error, Result};
use crate::homology::{ChainComplex, IntegerMatrix};
use crate::polytope::CombinatorialPolyhedron;
use crate::pyramitoid::Pyramitoid;

/// Largest supported number of mirrors.
pub const MAX_MIRRORS: usize = 14;

/// An oriented regular cell structure on a polytope or polygon, with the
/// set of facets containing each cell.
#[derive(Clone, Debug)]
pub struct BaseComplex {
    /// Per dimension: for each cell, its signed boundary in dimension - 1.
    boundary: Vec<Vec<Vec<(usize, i8)>>>,
    /// Per dimension: for each cell, the bitset of facets containing it.
    containing: Vec<Vec<u64>>,
    facets: usize,
}

impl BaseComplex {
    /// Vertices, edges (oriented low id to high id), faces (oriented by their
    /// cycles), and the solid, whose boundary is the sum of all faces.
    pub fn from_polyhedron(poly: &CombinatorialPolyhedron) -> Result<Self> {
        poly.ensure_valid()?;
        let nf = poly.num_faces();
        if nf > 64 {
            return Err(Error::TooManyMirrors(nf, 64));
        }
        let verts = poly.vertices();
        let edges = poly.edges();
        let mut vertex_faces = vec![0u64; verts.len()];
        for (f, face) in poly.faces().iter().enumerate() {
            for &v in face {
                vertex_faces[poly.vertex_index(v).expect("valid")] |= 1 << f;
            }
        }
        let edge_bd: Vec<Vec<(usize, i8)>> = edges
            .iter()
            .map(|e| {
                vec![
                    (poly.vertex_index(e.0).expect("valid"), -1),
                    (poly.vertex_index(e.1).expect("valid"), 1),
                ]
            })
            .collect();
        let edge_faces: Vec<u64> = edges
            .iter()
            .map(|&e| poly.edge_faces(e).iter().fold(0u64, |m, &(f, _)| m | 1 << f))
            .collect();
        let face_bd: Vec<Vec<(usize, i8)>> = (0..nf)
            .map(|f| {
                poly.face_darts(f)
                    .map(|(a, b)| {
                        let e = poly.edge_index(crate::polytope::Edge::new(a, b)).expect("valid");
                        (e, if a < b { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        let solid_bd = vec![(0..nf).map(|f| (f, 1)).collect()];
        Ok(BaseComplex {
            boundary: vec![vec![Vec::new(); verts.len()], edge_bd, face_bd, solid_bd],
            containing: vec![
                vertex_faces,
                edge_faces,
                (0..nf).map(|f| 1u64 << f).collect(),
                vec![0],
            ],
            facets: nf,
        })
    }

    /// The n-gon with vertices `0..n`, edge `k = (k, k+1)` and one 2-cell.
    /// Facets are the edges.
    pub fn polygon(n: usize) -> Result<Self> {
        if !(3..=64).contains(&n) {
            return Err(Error::InvalidSize {
                n,
                reason: "polygon bases need 3 <= n <= 64",
            });
        }
        let edge_bd = (0..n).map(|k| vec![(k, -1), ((k + 1) % n, 1)]).collect();
        let face_bd = vec![(0..n).map(|k| (k, 1)).collect()];
        let vert = (0..n).map(|k| 1u64 << k | 1u64 << ((k + n - 1) % n)).collect();
        Ok(BaseComplex {
            boundary: vec![vec![Vec::new(); n], edge_bd, face_bd],
            containing: vec![vert, (0..n).map(|k| 1u64 << k).collect(), vec![0]],
            facets: n,
        })
    }

    pub fn dim(&self) -> usize {
        self.boundary.len() - 1
    }

    pub fn num_cells(&self, d: usize) -> usize {
        self.boundary[d].len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets
    }

    /// Facets containing cell `c` of dimension `d`, as a bitset.
    pub fn containing(&self, d: usize, c: usize) -> u64 {
        self.containing[d][c]
    }

    pub fn cell_boundary(&self, d: usize, c: usize) -> &[(usize, i8)] {
        &self.boundary[d][c]
    }
}

/// The cell complex of a small cover, or of a subcomplex of one.
#[derive(Clone, Debug)]
pub struct SmallCoverComplex {
    mirrors: Vec<usize>,
    /// Per dimension: lifted cells as (base cell, canonical mask).
    cells: Vec<Vec<(usize, u32)>>,
    /// Per dimension: base cell -> (offset of its first lift, mirror bits).
    layout: Vec<BTreeMap<usize, (usize, u32)>>,
    boundaries: Vec<IntegerMatrix>,
}

/// Packs the bits of `g` outside `s` into a dense index.
fn compress(g: u32, s: u32, m: usize) -> usize {
    let mut out = 0usize;
    let mut j = 0;
    for i in 0..m {
        if s >> i & 1 == 0 {
            out |= ((g >> i & 1) as usize) << j;
            j += 1;
        }
    }
    out
}

/// Inverse of [`compress`].
fn expand(x: usize, s: u32, m: usize) -> u32 {
    let mut g = 0u32;
    let mut j = 0;
    for i in 0..m {
        if s >> i & 1 == 0 {
            g |= ((x >> j & 1) as u32) << i;
            j += 1;
        }
    }
    g
}

impl SmallCoverComplex {
    /// Lifts the base cells listed per dimension (`None` = all cells).
    fn build(base: &BaseComplex, mirrors: &[usize], include: Option<Vec<Vec<usize>>>) -> Result<Self> {
        let m = mirrors.len();
        if m > MAX_MIRRORS {
            return Err(Error::TooManyMirrors(m, MAX_MIRRORS));
        }
        for &f in mirrors {
            if f >= base.num_facets() {
                return Err(Error::UnknownFace(f));
            }
        }
        let mirror_bits = |d: usize, c: usize| -> u32 {
            let s = base.containing(d, c);
            mirrors
                .iter()
                .enumerate()
                .filter(|(_, &f)| s >> f & 1 == 1)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        };
        let include = include.unwrap_or_else(|| {
            (0..=base.dim())
                .map(|d| (0..base.num_cells(d)).collect())
                .collect()
        });
        let mut cells = Vec::with_capacity(include.len());
        let mut layout = Vec::with_capacity(include.len());
        for (d, list) in include.iter().enumerate() {
            let mut lay = BTreeMap::new();
            let mut cs = Vec::new();
            for &c in list {
                let s = mirror_bits(d, c);
                lay.insert(c, (cs.len(), s));
                let free = m - s.count_ones() as usize;
                for x in 0..1usize << free {
                    cs.push((c, expand(x, s, m)));
                }
            }
            cells.push(cs);
            layout.push(lay);
        }
        let mut boundaries = Vec::new();
        for d in 1..cells.len() {
            let mut trip = Vec::new();
            for (col, &(c, g)) in cells[d].iter().enumerate() {
                for &(b, sign) in base.cell_boundary(d, c) {
                    let &(off, s) = layout[d - 1].get(&b).ok_or_else(|| {
                        Error::GluingInvalid(format!("boundary cell {b} of dim {} missing", d - 1))
                    })?;
                    let row = off + compress(g & !s, s, m);
                    trip.push((row, col, sign as i64));
                }
            }
            boundaries.push(IntegerMatrix::from_triplets(
                cells[d - 1].len(),
                cells[d].len(),
                trip,
            ));
        }
        Ok(SmallCoverComplex {
            mirrors: mirrors.to_vec(),
            cells,
            layout,
            boundaries,
        })
    }

    pub fn mirrors(&self) -> &[usize] {
        &self.mirrors
    }

    pub fn dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn cells(&self, d: usize) -> &[(usize, u32)] {
        &self.cells[d]
    }

    /// Index of the lift of base cell `c` named by any mask in its coset.
    pub fn cell_index(&self, d: usize, c: usize, g: u32) -> Option<usize> {
        let &(off, s) = self.layout.get(d)?.get(&c)?;
        Some(off + compress(g & !s, s, self.mirrors.len()))
    }

    /// Mirror bits of base cell `c` in dimension `d`, if lifted here.
    pub fn stabilizer_bits(&self, d: usize, c: usize) -> Option<u32> {
        self.layout.get(d)?.get(&c).map(|&(_, s)| s)
    }

    pub fn boundary(&self, k: usize) -> Option<&IntegerMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn chain_complex(&self) -> ChainComplex {
        ChainComplex::new(self.cell_counts(), self.boundaries.clone())
            .expect("shapes are consistent by construction")
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Cell counts predicted by `Σ_c 2^(m - k(c))`.
    pub fn predicted_counts(&self) -> Vec<usize> {
        let m = self.mirrors.len();
        self.layout
            .iter()
            .map(|lay| {
                lay.values()
                    .map(|&(_, s)| 1usize << (m - s.count_ones() as usize))
                    .sum()
            })
            .collect()
    }

    /// Cell tables and boundary triplets as plain text.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "mirrors {:?}", self.mirrors);
        for (d, cells) in self.cells.iter().enumerate() {
            let _ = writeln!(s, "cells {d} {}", cells.len());
            for (i, (c, g)) in cells.iter().enumerate() {
                let _ = writeln!(s, "{i} {c} {g:#b}");
            }
        }
        for (i, b) in self.boundaries.iter().enumerate() {
            let _ = writeln!(s, "boundary {}", i + 1);
            s.push_str(&b.to_triplet_text());
        }
        s
    }
}

/// The small cover of `base` with the given facets as mirrors.
pub fn small_cover_complex(base: &BaseComplex, mirrors: &[usize]) -> Result<SmallCoverComplex> {
    SmallCoverComplex::build(base, mirrors, None)
}

/// All faces of `poly` as mirrors.
pub fn full_cover(poly: &CombinatorialPolyhedron) -> Result<SmallCoverComplex> {
    let base = BaseComplex::from_polyhedron(poly)?;
    let mirrors: Vec<usize> = (0..poly.num_faces()).collect();
    small_cover_complex(&base, &mirrors)
}

/// The lateral faces as mirrors, bit `k` for lateral face `k`.
pub fn dome_cover(pyr: &Pyramitoid) -> Result<SmallCoverComplex> {
    let base = BaseComplex::from_polyhedron(pyr.poly())?;
    small_cover_complex(&base, pyr.lateral_faces())
}

/// Cells lying over the non-mirror facets, without the top cell.
pub fn boundary_subcomplex(cx: &SmallCoverComplex, base: &BaseComplex) -> Result<SmallCoverComplex> {
    let mirror_set: u64 = cx.mirrors.iter().fold(0u64, |a, &f| a | 1 << f);
    let free: u64 = (0..base.num_facets())
        .filter(|f| mirror_set >> f & 1 == 0)
        .fold(0u64, |a, f| a | 1 << f);
    let include: Vec<Vec<usize>> = (0..base.dim())
        .map(|d| {
            (0..base.num_cells(d))
                .filter(|&c| base.containing(d, c) & free != 0)
                .collect()
        })
        .collect();
    SmallCoverComplex::build(base, &cx.mirrors, Some(include))
}

pub fn check_dd_zero(cx: &SmallCoverComplex) -> bool {
    cx.chain_complex().check_dd_zero()
}

/// Preimage of the core tree in a dome cover of `pyr`.
pub fn core_graph(cx: &SmallCoverComplex, pyr: &Pyramitoid) -> Result<Graph> {
    let poly = pyr.poly();
    let mut vertex_ids = Vec::new();
    let mut labels = Vec::new();
    let mut index = BTreeMap::new();
    for &v in pyr.core_vertices() {
        let c = poly.vertex_index(v).expect("valid");
        let s = cx.stabilizer_bits(0, c).ok_or(Error::UnknownFace(c))?;
        for x in 0..1usize << (cx.mirrors.len() - s.count_ones() as usize) {
            let g = expand(x, s, cx.mirrors.len());
            index.insert((c, g), labels.len());
            labels.push(format!("v{v}:{g}"));
            vertex_ids.push((c, g));
        }
    }
    let mut graph = Graph::new(labels);
    for &e in pyr.core_tree() {
        let ci = poly.edge_index(e).expect("valid");
        let s = cx.stabilizer_bits(1, ci).ok_or(Error::UnknownFace(ci))?;
        let (a, b) = (poly.vertex_index(e.0).expect("valid"), poly.vertex_index(e.1).expect("valid"));
        let (sa, sb) = (cx.stabilizer_bits(0, a).unwrap(), cx.stabilizer_bits(0, b).unwrap());
        for x in 0..1usize << (cx.mirrors.len() - s.count_ones() as usize) {
            let g = expand(x, s, cx.mirrors.len());
            let u = index[&(a, g & !sa)];
            let w = index[&(b, g & !sb)];
            graph.add_edge(u, w);
        }
    }
    Ok(graph)
}

/// A lift of one code arc: the circle through the four basis copies
/// `g, g+e_j, g+e_j+e_k, g+e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedCurve {
    pub arc_index: usize,
    pub arc: (usize, usize),
    /// Basis copies in the order the circle visits them.
    pub copies: [u32; 4],
    /// Surface edges crossed, one per arc copy, in visiting order.
    pub crossings: [usize; 4],
    /// A cellular 1-cycle on the surface homologous to the circle.
    pub chain: Vec<(usize, i64)>,
}

impl LiftedCurve {
    pub fn chain_vector(&self, len: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        for &(i, c) in &self.chain {
            v[i] += c;
        }
        v
    }
}

/// Lifts every arc of `code` to its `2^(n-2)` circles on the boundary
/// surface of the dome cover of `pyr`.
pub fn lift_arcs(surface: &SmallCoverComplex, pyr: &Pyramitoid, code: &Code) -> Result<Vec<LiftedCurve>> {
    let n = pyr.n();
    if code.n != n {
        return Err(Error::CodeMismatch {
            code: code.n,
            pyramitoid: n,
        });
    }
    if surface.mirrors.len() != n || surface.dim() != 2 {
        return Err(Error::InvalidCode("surface is not a dome cover boundary".into()));
    }
    let poly = pyr.poly();
    let basis_edge = |k: usize| -> usize {
        let (a, b) = pyr.basis_edge(k);
        poly.edge_index(crate::polytope::Edge::new(a, b)).expect("valid")
    };
    let basis_edge_sign = |k: usize| -> i64 {
        let (a, b) = pyr.basis_edge(k);
        if a < b {
            1
        } else {
            -1
        }
    };
    let mut out = Vec::new();
    for (ai, &(j, k)) in code.arcs.iter().enumerate() {
        let (ej, ek) = (1u32 << j, 1u32 << k);
        let span = ej | ek;
        let full = 1u32 << n;
        for g in 0..full {
            if g & span != 0 {
                continue;
            }
            let copies = [g, g | ej, g | ej | ek, g | ek];
            let edge = |idx: usize, h: u32| -> usize {
                surface.cell_index(1, basis_edge(idx), h).expect("basis edges lie on the surface")
            };
            let crossings = [edge(j, g), edge(k, g | ej), edge(j, g | ej | ek), edge(k, g | ek)];
            let mut chain: BTreeMap<usize, i64> = BTreeMap::new();
            for (h, sign) in [(g, 1i64), (g | ek, -1), (g | ej | ek, 1), (g | ej, -1)] {
                for i in j + 1..k {
                    *chain.entry(edge(i, h)).or_default() += sign * basis_edge_sign(i);
                }
            }
            out.push(LiftedCurve {
                arc_index: ai,
                arc: (j, k),
                copies,
                crossings,
                chain: chain.into_iter().filter(|&(_, c)| c != 0).collect(),
            });
        }
    }
    Ok(out)
}
