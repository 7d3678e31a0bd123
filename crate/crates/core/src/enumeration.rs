//! Triangulations of the n-gon and the simple n-pyramitoids they encode.
//!
//! Vertex `i` of the polygon stands for lateral face `i` of the pyramitoid,
//! a diagonal `(a, b)` for the core edge shared by lateral faces `a` and
//! `b`, and a triangle for a core vertex. The same diagonals, read as chords
//! joining basis edges, form the code.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::CombinatorialPolyhedron;
use crate::pyramitoid::{Label, Pyramitoid};

/// Largest n accepted by the enumerators by default.
pub const ENUMERATION_CAP: usize = 14;

/// Number of triangulations of the convex n-gon.
pub fn catalan_count(n: usize) -> BigUint {
    if n < 3 {
        return BigUint::one();
    }
    let mut num = BigUint::one();
    for k in n..=(2 * n - 4) {
        num *= k;
    }
    let mut den = BigUint::one();
    for k in 2..=(n - 2) {
        den *= k;
    }
    num / den
}

/// A chord `(a, b)` with `a < b`.
pub type Diagonal = (usize, usize);

fn crosses(d: Diagonal, e: Diagonal) -> bool {
    let (a, b) = d;
    let (c, f) = e;
    (a < c && c < b && b < f) || (c < a && a < f && f < b)
}

fn normalize(a: usize, b: usize) -> Diagonal {
    (a.min(b), a.max(b))
}

fn is_side(n: usize, d: Diagonal) -> bool {
    d.1 - d.0 == 1 || (d.0 == 0 && d.1 == n - 1)
}

fn check_chords(n: usize, chords: &[Diagonal], what: &str) -> std::result::Result<(), String> {
    if n < 3 {
        return Err(format!("polygon size {n} < 3"));
    }
    if chords.len() != n - 3 {
        return Err(format!("expected {} {what}s, found {}", n - 3, chords.len()));
    }
    let mut seen = BTreeSet::new();
    for &(a, b) in chords {
        if a >= b || b >= n {
            return Err(format!("{what} ({a},{b}) is not a pair a < b < {n}"));
        }
        if is_side(n, (a, b)) {
            return Err(format!("{what} ({a},{b}) joins adjacent positions"));
        }
        if !seen.insert((a, b)) {
            return Err(format!("{what} ({a},{b}) repeated"));
        }
    }
    for (i, &d) in chords.iter().enumerate() {
        for &e in &chords[i + 1..] {
            if crosses(d, e) {
                return Err(format!("{what}s {d:?} and {e:?} cross"));
            }
        }
    }
    Ok(())
}

/// A maximal set of non-crossing diagonals of the convex n-gon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let mut diagonals: Vec<Diagonal> = diagonals
            .into_iter()
            .map(|(a, b)| normalize(a, b))
            .collect();
        diagonals.sort_unstable();
        check_chords(n, &diagonals, "diagonal").map_err(Error::InvalidTriangulation)?;
        Ok(Triangulation { n, diagonals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Number of diagonals at each polygon vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.diagonals {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Label of the corresponding pyramitoid.
    pub fn label(&self) -> Label {
        Label(self.degrees())
    }

    /// Neighbours of `i` (sides and diagonals) ordered from `i - 1` around to
    /// `i + 1`.
    pub fn fan(&self, i: usize) -> Vec<usize> {
        let n = self.n;
        let mut nb: Vec<usize> = vec![(i + n - 1) % n, (i + 1) % n];
        for &(a, b) in &self.diagonals {
            if a == i {
                nb.push(b);
            } else if b == i {
                nb.push(a);
            }
        }
        nb.sort_by_key(|&j| (i + n - j) % n);
        nb
    }

    /// Triangles as sorted vertex triples, sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = BTreeSet::new();
        for i in 0..self.n {
            let fan = self.fan(i);
            for w in fan.windows(2) {
                let mut t = [i, w[0], w[1]];
                t.sort_unstable();
                out.insert(t);
            }
        }
        out.into_iter().collect()
    }

    /// Rotation by `r` steps: vertex `a` goes to `a + r`.
    pub fn rotated(&self, r: usize) -> Triangulation {
        let n = self.n;
        let mut d: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|&(a, b)| normalize((a + r) % n, (b + r) % n))
            .collect();
        d.sort_unstable();
        Triangulation { n, diagonals: d }
    }

    /// Reflection `a -> -a`.
    pub fn reflected(&self) -> Triangulation {
        let n = self.n;
        let mut d: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|&(a, b)| normalize((n - a) % n, (n - b) % n))
            .collect();
        d.sort_unstable();
        Triangulation { n, diagonals: d }
    }

    /// Least rotation (and reflection, if `dihedral`) of the diagonal list.
    pub fn canonical(&self, dihedral: bool) -> Triangulation {
        let mut best = self.clone();
        let refl = self.reflected();
        for r in 0..self.n {
            let c = self.rotated(r);
            if c < best {
                best = c;
            }
            if dihedral {
                let c = refl.rotated(r);
                if c < best {
                    best = c;
                }
            }
        }
        best
    }

    /// Number of rotations fixing this triangulation.
    pub fn rotation_stabilizer(&self) -> usize {
        (0..self.n).filter(|&r| self.rotated(r) == *self).count()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .diagonals
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// All triangulations of the n-gon, sorted, for `3 <= n <= ENUMERATION_CAP`.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    enumerate_triangulations_with_cap(n, ENUMERATION_CAP)
}

pub fn enumerate_triangulations_with_cap(n: usize, cap: usize) -> Result<Vec<Triangulation>> {
    if n < 3 {
        return Err(Error::InvalidSize {
            n,
            reason: "a polygon needs at least 3 vertices",
        });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut memo = BTreeMap::new();
    let mut out: Vec<Triangulation> = sub_triangulations(0, n - 1, &mut memo)
        .into_iter()
        .map(|mut d| {
            d.sort_unstable();
            Triangulation { n, diagonals: d }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Diagonal sets triangulating the sub-polygon `lo, lo+1, ..., hi` closed by
/// the chord `(lo, hi)`.
fn sub_triangulations(
    lo: usize,
    hi: usize,
    memo: &mut BTreeMap<(usize, usize), Vec<Vec<Diagonal>>>,
) -> Vec<Vec<Diagonal>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&(lo, hi)) {
        return v.clone();
    }
    let mut out = Vec::new();
    for m in lo + 1..hi {
        let left = sub_triangulations(lo, m, memo);
        let right = sub_triangulations(m, hi, memo);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                if m - lo > 1 {
                    d.push((lo, m));
                }
                if hi - m > 1 {
                    d.push((m, hi));
                }
                out.push(d);
            }
        }
    }
    memo.insert((lo, hi), out.clone());
    out
}

/// Rotation (or dihedral) classes of triangulations.
#[derive(Clone, Debug, Serialize)]
pub struct ClassCensus {
    pub n: usize,
    pub dihedral: bool,
    pub total: usize,
    /// Canonical representative and orbit size, sorted by representative.
    pub classes: Vec<(Triangulation, usize)>,
}

impl ClassCensus {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Orbit sizes, largest first.
    pub fn orbit_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes.iter().map(|c| c.1).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

pub fn rotation_classes(n: usize, dihedral: bool) -> Result<ClassCensus> {
    let all = enumerate_triangulations(n)?;
    let mut orbits: BTreeMap<Triangulation, usize> = BTreeMap::new();
    for t in &all {
        *orbits.entry(t.canonical(dihedral)).or_default() += 1;
    }
    Ok(ClassCensus {
        n,
        dihedral,
        total: all.len(),
        classes: orbits.into_iter().collect(),
    })
}

/// N_n: triangulations of the n-gon up to rotation.
pub fn count_rotation_classes(n: usize) -> Result<usize> {
    Ok(rotation_classes(n, false)?.count())
}

/// Orbit count by Burnside's lemma, independent of canonicalization.
pub fn burnside_rotation_count(n: usize) -> Result<usize> {
    let all = enumerate_triangulations(n)?;
    let set: BTreeSet<&Triangulation> = all.iter().collect();
    let mut fixed = 0usize;
    for r in 0..n {
        fixed += all.iter().filter(|t| t.rotated(r) == **t).count();
    }
    debug_assert_eq!(set.len(), all.len());
    Ok(fixed / n)
}

/// The simple pyramitoid whose core tree is dual to `t`.
///
/// Basis vertices get ids `0..n`, core vertices `n..2n-2` (one per triangle
/// in [`Triangulation::triangles`] order). Face `i < n` is lateral face `i`;
/// face `n` is the basis.
pub fn pyramitoid_from_triangulation(t: &Triangulation) -> Result<Pyramitoid> {
    let n = t.n();
    let triangles = t.triangles();
    let index: BTreeMap<[usize; 3], usize> = triangles
        .iter()
        .enumerate()
        .map(|(i, tr)| (*tr, n + i))
        .collect();
    let core_of = |a: usize, b: usize, c: usize| {
        let mut k = [a, b, c];
        k.sort_unstable();
        index[&k]
    };
    let mut faces = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut face = vec![(i + 1) % n, i];
        let fan = t.fan(i);
        for w in fan.windows(2) {
            face.push(core_of(i, w[0], w[1]));
        }
        faces.push(face);
    }
    faces.push((0..n).collect());
    let poly = CombinatorialPolyhedron::new((0..2 * n - 2).collect(), faces);
    Pyramitoid::anchored(poly, n, Some(0))
}

/// Diagonals read off the core tree, with lateral positions as vertices.
pub fn triangulation_of(pyr: &Pyramitoid) -> Result<Triangulation> {
    if let Some((v, k)) = pyr.poly().first_non_simple_vertex() {
        return Err(Error::NotSimple(v, k));
    }
    let diagonals: Vec<Diagonal> = pyr
        .core_tree()
        .iter()
        .map(|&e| {
            pyr.edge_positions(e)
                .ok_or_else(|| Error::InvalidTriangulation(format!("core edge {e} not lateral")))
        })
        .collect::<Result<_>>()?;
    Triangulation::new(pyr.n(), diagonals)
}

/// Non-crossing arcs joining non-consecutive basis edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Code {
    pub n: usize,
    pub arcs: Vec<Diagonal>,
}

impl Code {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let mut arcs: Vec<Diagonal> = arcs.into_iter().map(|(a, b)| normalize(a, b)).collect();
        arcs.sort_unstable();
        check_chords(n, &arcs, "arc").map_err(Error::InvalidCode)?;
        Ok(Code { n, arcs })
    }

    pub fn triangulation(&self) -> Triangulation {
        Triangulation {
            n: self.n,
            diagonals: self.arcs.clone(),
        }
    }

    /// Whether arcs `i` and `j` cross as chords.
    pub fn arcs_cross(&self, i: usize, j: usize) -> bool {
        crosses(self.arcs[i], self.arcs[j])
    }
}

impl From<&Triangulation> for Code {
    fn from(t: &Triangulation) -> Self {
        Code {
            n: t.n,
            arcs: t.diagonals.clone(),
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}:[{}]", self.n, parts.join(" "))
    }
}

pub fn code_of(pyr: &Pyramitoid) -> Result<Code> {
    Ok(Code::from(&triangulation_of(pyr)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CellType {
    I,
    II,
    III,
}

impl CellType {
    fn from_valence(v: usize) -> Option<Self> {
        match v {
            1 => Some(CellType::I),
            2 => Some(CellType::II),
            3 => Some(CellType::III),
            _ => None,
        }
    }
}

/// A region of the basis cut out by the code, with its type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeCell {
    /// Lateral positions whose basis edges bound the cell.
    pub triangle: [usize; 3],
    pub kind: CellType,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellTypeStats {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
}

/// Cells of the code and their type census. Requires `n >= 4`.
pub fn code_cells(pyr: &Pyramitoid) -> Result<(Vec<CodeCell>, CellTypeStats)> {
    let t = triangulation_of(pyr)?;
    triangulation_cells(&t)
}

pub fn triangulation_cells(t: &Triangulation) -> Result<(Vec<CodeCell>, CellTypeStats)> {
    if t.n() < 4 {
        return Err(Error::InvalidSize {
            n: t.n(),
            reason: "code cells need n >= 4",
        });
    }
    let diag: BTreeSet<Diagonal> = t.diagonals().iter().copied().collect();
    let mut stats = CellTypeStats::default();
    let mut cells = Vec::new();
    for tr in t.triangles() {
        let sides = [(tr[0], tr[1]), (tr[1], tr[2]), (tr[0], tr[2])];
        let v = sides.iter().filter(|s| diag.contains(s)).count();
        let kind = CellType::from_valence(v).expect("n >= 4 triangles touch a diagonal");
        match kind {
            CellType::I => stats.m1 += 1,
            CellType::II => stats.m2 += 1,
            CellType::III => stats.m3 += 1,
        }
        cells.push(CodeCell { triangle: tr, kind });
    }
    Ok((cells, stats))
}

/// Ball and meridian counts of the code-cell decomposition of the dome cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BallCounts {
    pub balls_full: u64,
    /// Defined for `n > 4`.
    pub balls_reduced: Option<u64>,
    /// Defined for `n > 4`.
    pub meridians_reduced: Option<u64>,
}

pub fn ball_decomposition_counts(pyr: &Pyramitoid) -> Result<BallCounts> {
    let (_, stats) = code_cells(pyr)?;
    Ok(ball_counts(pyr.n(), stats.m1))
}

pub fn ball_counts(n: usize, m1: usize) -> BallCounts {
    let p = 1u64 << (n - 3);
    let n64 = n as u64;
    let m1 = m1 as u64;
    let reduced = n > 4;
    BallCounts {
        balls_full: (n64 - 2) * p,
        balls_reduced: reduced.then(|| (n64 - 2 - m1) * p),
        meridians_reduced: reduced.then(|| (2 * n64 - 6 - m1) * p),
    }
}

/// One simple pyramitoid per rotation class, in class order.
pub fn smoothing_options(n: usize) -> Result<Vec<Pyramitoid>> {
    if n < 4 {
        return Err(Error::InvalidSize {
            n,
            reason: "smoothings need valence n >= 4",
        });
    }
    rotation_classes(n, false)?
        .classes
        .iter()
        .map(|(t, _)| pyramitoid_from_triangulation(t))
        .collect()
}

/// Whether some simple pyramitoid has this label up to rotation.
pub fn label_realizability(label: &Label) -> Result<bool> {
    let n = label.len();
    if n == 3 {
        return Ok(label.entries() == [0, 0, 0]);
    }
    let target = label.canonical();
    Ok(enumerate_triangulations(n)?
        .iter()
        .any(|t| t.label().canonical() == target))
}

/// CSV with one row per n: `n,catalan,classes,orbit_profile`.
pub fn census_csv(ns: impl IntoIterator<Item = usize>, dihedral: bool) -> Result<String> {
    let mut out = String::from("n,catalan,classes,orbit_profile\n");
    for n in ns {
        let c = rotation_classes(n, dihedral)?;
        let profile: Vec<String> = c.orbit_profile().iter().map(|x| x.to_string()).collect();
        out.push_str(&format!(
            "{},{},{},{}\n",
            n,
            catalan_count(n),
            c.count(),
            profile.join(" ")
        ));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub n: usize,
    pub label: String,
    pub canonical_label: String,
    pub orbit_size: usize,
    pub diagonals: Vec<Diagonal>,
    pub code: Vec<Diagonal>,
    pub cell_types: CellTypeStats,
}

/// JSON-ready records for each class representative.
pub fn class_records(census: &ClassCensus) -> Result<Vec<ClassRecord>> {
    census
        .classes
        .iter()
        .map(|(t, size)| {
            let stats = if t.n() >= 4 {
                triangulation_cells(t)?.1
            } else {
                CellTypeStats::default()
            };
            Ok(ClassRecord {
                n: t.n(),
                label: t.label().to_string(),
                canonical_label: t.label().canonical().to_string(),
                orbit_size: *size,
                diagonals: t.diagonals().to_vec(),
                code: t.diagonals().to_vec(),
                cell_types: stats,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::prism;
    use crate::pyramitoid::as_pyramitoid;

    /// Independent oracle: all non-crossing subsets of size n-3.
    fn brute_force(n: usize) -> BTreeSet<Vec<Diagonal>> {
        let diags: Vec<Diagonal> = (0..n)
            .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
            .filter(|&d| !is_side(n, d))
            .collect();
        let mut out = BTreeSet::new();
        fn rec(
            diags: &[Diagonal],
            start: usize,
            need: usize,
            cur: &mut Vec<Diagonal>,
            out: &mut BTreeSet<Vec<Diagonal>>,
        ) {
            if need == 0 {
                out.insert(cur.clone());
                return;
            }
            for i in start..diags.len() {
                if cur.iter().all(|&c| !crosses(c, diags[i])) {
                    cur.push(diags[i]);
                    rec(diags, i + 1, need - 1, cur, out);
                    cur.pop();
                }
            }
        }
        rec(&diags, 0, n - 3, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 3..=9 {
            let got: BTreeSet<Vec<Diagonal>> = enumerate_triangulations(n)
                .unwrap()
                .into_iter()
                .map(|t| t.diagonals)
                .collect();
            assert_eq!(got, brute_force(n), "n = {n}");
        }
    }

    #[test]
    fn catalan_values() {
        let expect = [1u32, 2, 5, 14, 42, 132, 429, 1430];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(catalan_count(i + 3), BigUint::from(c));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_triangulations(15).unwrap_err(),
            Error::CapExceeded { n: 15, cap: 14 }
        );
        assert!(enumerate_triangulations_with_cap(15, 12).is_err());
    }

    #[test]
    fn class_counts_and_burnside() {
        let expect = [(4, 1), (5, 1), (6, 4), (7, 6), (8, 19)];
        for (n, k) in expect {
            assert_eq!(count_rotation_classes(n).unwrap(), k);
            assert_eq!(burnside_rotation_count(n).unwrap(), k);
        }
        let c6 = rotation_classes(6, false).unwrap();
        assert_eq!(c6.orbit_profile(), vec![6, 3, 3, 2]);
        for n in 4..=9 {
            let c = rotation_classes(n, false).unwrap();
            let sum: usize = c
                .classes
                .iter()
                .map(|(t, _)| n / t.rotation_stabilizer())
                .sum();
            assert_eq!(sum, c.total);
        }
    }

    #[test]
    fn dihedral_classes_merge_mirrors() {
        // The two chiral zigzags of the hexagon merge.
        assert_eq!(rotation_classes(6, true).unwrap().count(), 3);
    }

    #[test]
    fn prism_from_one_diagonal() {
        let t = Triangulation::new(4, [(0, 2)]).unwrap();
        let y = pyramitoid_from_triangulation(&t).unwrap();
        assert!(y.poly().is_isomorphic(&prism(3), true));
        assert_eq!(triangulation_of(&y).unwrap(), t);
    }

    #[test]
    fn pentagon_fan_and_hexagon_fan() {
        let t = Triangulation::new(5, [(0, 2), (0, 3)]).unwrap();
        let y = pyramitoid_from_triangulation(&t).unwrap();
        assert!(y.label().unwrap().cyclic_eq(&"01102".parse().unwrap()));
        let t = Triangulation::new(6, [(0, 2), (0, 3), (0, 4)]).unwrap();
        let y = pyramitoid_from_triangulation(&t).unwrap();
        assert!(y.label().unwrap().cyclic_eq(&"011103".parse().unwrap()));
    }

    #[test]
    fn round_trip_all_small() {
        for n in 3..=8 {
            for t in enumerate_triangulations(n).unwrap() {
                let y = pyramitoid_from_triangulation(&t).unwrap();
                assert!(y.is_simple());
                assert_eq!(y.poly().num_vertices(), 2 * (n - 1));
                assert_eq!(y.poly().num_edges(), 3 * (n - 1));
                assert_eq!(y.core_tree().len(), n - 3);
                assert_eq!(y.label().unwrap(), t.label());
                assert_eq!(triangulation_of(&y).unwrap(), t);
            }
        }
    }

    #[test]
    fn cell_types_follow_core_valences() {
        for n in 4..=8 {
            for t in enumerate_triangulations(n).unwrap() {
                let y = pyramitoid_from_triangulation(&t).unwrap();
                let (cells, s) = code_cells(&y).unwrap();
                assert_eq!(cells.len(), n - 2);
                let mut from_tree = [0usize; 4];
                for v in y.core_valences() {
                    from_tree[v] += 1;
                }
                assert_eq!([s.m1, s.m2, s.m3], [from_tree[1], from_tree[2], from_tree[3]]);
                assert_eq!(s.m2 + 2 * s.m1, n);
                assert_eq!(s.m3 + 2, s.m1);
            }
        }
    }

    #[test]
    fn ball_count_examples() {
        assert_eq!(
            ball_counts(5, 2),
            BallCounts {
                balls_full: 12,
                balls_reduced: Some(4),
                meridians_reduced: Some(8)
            }
        );
        let c = ball_counts(6, 3);
        assert_eq!((c.balls_full, c.balls_reduced, c.meridians_reduced), (32, Some(8), Some(24)));
        assert_eq!(ball_counts(4, 2).balls_reduced, None);
        assert_eq!(ball_counts(4, 2).balls_full, 4);
    }

    #[test]
    fn realizability() {
        assert!(label_realizability(&"0101".parse().unwrap()).unwrap());
        // Passes the label conditions yet contains (0,1,0).
        let l: Label = "010302".parse().unwrap();
        assert!(crate::pyramitoid::validate_label(&l, 6));
        assert!(!label_realizability(&l).unwrap());
    }

    #[test]
    fn codes_reject_bad_arcs() {
        assert!(Code::new(5, [(0, 1), (0, 3)]).is_err());
        assert!(Code::new(6, [(0, 3), (1, 4), (0, 2)]).is_err());
        assert!(Code::new(6, [(0, 3), (0, 2), (3, 5)]).is_ok());
        let y = as_pyramitoid(&prism(3), 2).unwrap();
        let c = code_of(&y).unwrap();
        assert_eq!(c.arcs.len(), 1);
        let (a, b) = c.arcs[0];
        assert_eq!(b - a, 2);
    }
}
