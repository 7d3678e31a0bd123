//! Defining graphs, their Coxeter-graph companions, and group presentations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::enumeration::Code;
use crate::error::{Error, Result};
use crate::polytope::CombinatorialPolyhedron;

/// Edge weight. Right-angled defining graphs carry no weights (all 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Finite(u32),
    Infinity,
}

impl Weight {
    /// `None` encodes infinity.
    pub fn as_option(self) -> Option<u32> {
        match self {
            Weight::Finite(w) => Some(w),
            Weight::Infinity => None,
        }
    }
}

/// A finite simplicial graph with string vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    weights: BTreeMap<(usize, usize), Weight>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        Graph {
            labels,
            edges: BTreeSet::new(),
            weights: BTreeMap::new(),
        }
    }

    /// Adds an unweighted edge. Loops are ignored; repeated edges collapse.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.labels.len() && b < self.labels.len());
        if a != b {
            self.edges.insert(key(a, b));
        }
    }

    pub fn add_weighted_edge(&mut self, a: usize, b: usize, w: Weight) {
        self.add_edge(a, b);
        if a != b {
            self.weights.insert(key(a, b), w);
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&key(a, b))
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<Weight> {
        self.weights.get(&key(a, b)).copied()
    }

    /// True when no edge carries a weight other than 2.
    pub fn is_right_angled(&self) -> bool {
        self.weights.values().all(|w| *w == Weight::Finite(2))
    }

    pub fn num_components(&self) -> usize {
        let n = self.labels.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = n;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    /// Rank of the cycle space: `E - V + components`.
    pub fn first_betti(&self) -> usize {
        self.num_edges() + self.num_components() - self.num_vertices()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for l in &self.labels {
            s.push_str(&format!("  \"{l}\";\n"));
        }
        for &(a, b) in &self.edges {
            let attr = match self.weights.get(&(a, b)) {
                Some(Weight::Finite(w)) => format!(" [label=\"{w}\"]"),
                _ => String::new(),
            };
            s.push_str(&format!(
                "  \"{}\" -- \"{}\"{};\n",
                self.labels[a], self.labels[b], attr
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct E<'a> {
            a: &'a str,
            b: &'a str,
            weight: Option<u32>,
        }
        let edges: Vec<E> = self
            .edges
            .iter()
            .map(|&(a, b)| E {
                a: &self.labels[a],
                b: &self.labels[b],
                weight: self.weights.get(&(a, b)).and_then(|w| w.as_option()),
            })
            .collect();
        serde_json::json!({ "vertices": self.labels, "edges": edges })
    }
}

/// One vertex `x{f}` per mirror face; an edge when two mirrors share an edge.
pub fn defining_graph(poly: &CombinatorialPolyhedron, mirror_faces: &[usize]) -> Result<Graph> {
    for &f in mirror_faces {
        if f >= poly.num_faces() {
            return Err(Error::UnknownFace(f));
        }
    }
    let mut g = Graph::new(mirror_faces.iter().map(|f| format!("x{f}")).collect());
    for (i, &f) in mirror_faces.iter().enumerate() {
        for (j, &h) in mirror_faces.iter().enumerate().skip(i + 1) {
            if poly.faces_adjacent(f, h) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Edges of weight above 2 plus every non-adjacent pair with weight infinity.
pub fn coxeter_graph(g: &Graph) -> Graph {
    let mut c = Graph::new(g.labels.clone());
    let n = g.num_vertices();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                if let Some(w @ Weight::Finite(k)) = g.weight(a, b) {
                    if k > 2 {
                        c.add_weighted_edge(a, b, w);
                    }
                }
                if g.weight(a, b) == Some(Weight::Infinity) {
                    c.add_weighted_edge(a, b, Weight::Infinity);
                }
            } else {
                c.add_weighted_edge(a, b, Weight::Infinity);
            }
        }
    }
    c
}

/// The cycle graph on mirrors `g0 .. g{n-1}` of the n-gon's edges.
pub fn polygon_graph(n: usize) -> Graph {
    let mut g = Graph::new((0..n).map(|i| format!("g{i}")).collect());
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

/// The n-gon with edge `n-1` not a mirror: a path on `g0 .. g{n-2}`.
pub fn polygon_graph_one_free(n: usize) -> Graph {
    let mut g = Graph::new((0..n - 1).map(|i| format!("g{i}")).collect());
    for i in 0..n.saturating_sub(2) {
        g.add_edge(i, i + 1);
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Power { generator: usize, exponent: u32 },
    Commutator(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PresentationKind {
    RightAngledCoxeter,
    SurfaceKernelQuotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    pub kind: PresentationKind,
    /// Image of each generator in `(Z/2)^k`, as a basis index.
    pub rho: Option<Vec<usize>>,
}

impl GroupPresentation {
    pub fn uses_declared_generators(&self) -> bool {
        let k = self.generators.len();
        self.relations.iter().all(|r| match *r {
            Relation::Power { generator, .. } => generator < k,
            Relation::Commutator(a, b) => a < k && b < k,
        })
    }

    pub fn commutator_count(&self) -> usize {
        self.relations
            .iter()
            .filter(|r| matches!(r, Relation::Commutator(..)))
            .count()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators {}", self.generators.join(" "))?;
        for r in &self.relations {
            match *r {
                Relation::Power {
                    generator,
                    exponent,
                } => writeln!(f, "{}^{}", self.generators[generator], exponent)?,
                Relation::Commutator(a, b) => {
                    writeln!(f, "[{},{}]", self.generators[a], self.generators[b])?
                }
            }
        }
        if let Some(rho) = &self.rho {
            for (g, e) in self.generators.iter().zip(rho) {
                writeln!(f, "rho {g} -> e{e}")?;
            }
        }
        Ok(())
    }
}

/// Involutions for every vertex and commutators for every edge.
pub fn racg_presentation(g: &Graph) -> GroupPresentation {
    let mut relations: Vec<Relation> = (0..g.num_vertices())
        .map(|i| Relation::Power {
            generator: i,
            exponent: 2,
        })
        .collect();
    relations.extend(g.edges().map(|(a, b)| Relation::Commutator(a, b)));
    GroupPresentation {
        generators: g.labels.clone(),
        relations,
        kind: PresentationKind::RightAngledCoxeter,
        rho: None,
    }
}

/// The polygon-cycle presentation on `g0 .. g{n-1}` with one extra
/// commutator per arc of each code, listed north first. Both codes must use
/// the same edge indexing.
pub fn bipyramitoid_pi1_presentation(north: &Code, south: &Code) -> Result<GroupPresentation> {
    if north.n != south.n {
        return Err(Error::BasisMismatch {
            north: north.n,
            south: south.n,
        });
    }
    let mut p = racg_presentation(&polygon_graph(north.n));
    for &(a, b) in north.arcs.iter().chain(&south.arcs) {
        p.relations.push(Relation::Commutator(a, b));
    }
    p.kind = PresentationKind::SurfaceKernelQuotient;
    p.rho = Some((0..north.n).collect());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{pyramitoid_from_triangulation, Triangulation};
    use crate::polytope::{cube, tetrahedron};

    #[test]
    fn tetrahedron_gives_k4_and_empty_coxeter_graph() {
        let t = tetrahedron();
        let g = defining_graph(&t, &[0, 1, 2, 3]).unwrap();
        assert_eq!(g.num_edges(), 6);
        assert_eq!(coxeter_graph(&g).num_edges(), 0);
    }

    #[test]
    fn cube_gives_octahedron() {
        let g = defining_graph(&cube(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(g.num_edges(), 12);
        let c = coxeter_graph(&g);
        assert_eq!(c.num_edges(), 3);
        assert!(c.edges().all(|(a, b)| c.weight(a, b) == Some(Weight::Infinity)));
    }

    #[test]
    fn square_cycle_complement_is_the_diagonals() {
        let c = coxeter_graph(&polygon_graph(4));
        let e: Vec<_> = c.edges().collect();
        assert_eq!(e, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn dome_graph_has_cycle_plus_diagonals() {
        let t = Triangulation::new(5, [(0, 2), (0, 3)]).unwrap();
        let y = pyramitoid_from_triangulation(&t).unwrap();
        let g = defining_graph(y.poly(), y.lateral_faces()).unwrap();
        assert_eq!(g.num_edges(), 7);
        assert_eq!(coxeter_graph(&g).num_edges(), 3);
        for &(a, b) in t.diagonals() {
            assert!(g.has_edge(a, b));
        }
    }

    #[test]
    fn presentations() {
        let mut two = Graph::new(vec!["a".into(), "b".into()]);
        let p = racg_presentation(&two);
        assert_eq!(p.relations.len(), 2);
        two.add_edge(0, 1);
        assert_eq!(racg_presentation(&two).relations.len(), 3);
        let p5 = racg_presentation(&polygon_graph(5));
        assert_eq!(p5.commutator_count(), 5);
        assert_eq!(p5.to_string().lines().nth(1), Some("g0^2"));
        assert!(p5.to_string().contains("[g0,g1]"));
        assert_eq!(racg_presentation(&polygon_graph_one_free(2)).relations.len(), 1);
    }

    #[test]
    fn pi1_presentation_counts() {
        let n = Code::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        let s = Code::new(6, [(1, 3), (3, 5), (1, 5)]).unwrap();
        let p = bipyramitoid_pi1_presentation(&n, &s).unwrap();
        assert_eq!(p.commutator_count(), 12);
        assert!(p.uses_declared_generators());
        let bad = Code::new(5, [(0, 2), (0, 3)]).unwrap();
        assert!(bipyramitoid_pi1_presentation(&n, &bad).is_err());
    }

    #[test]
    fn dot_and_json() {
        let c = coxeter_graph(&polygon_graph(4));
        let dot = c.to_dot("C");
        assert!(dot.contains("\"g0\" -- \"g2\";"));
        let j = c.to_json_value();
        assert!(j["edges"][0]["weight"].is_null());
    }
}
