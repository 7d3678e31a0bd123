//! Named polyhedra used by the tests and the command line, with a JSON form
//! that may also carry a basis face and an equator.

use serde::{Deserialize, Serialize};

use crate::enumeration::{pyramitoid_from_triangulation, Triangulation};
use crate::error::{Error, Result};
use crate::polytope::{
    cube, n_book_polyhedron, n_pyramid, prism, tetrahedron, CombinatorialPolyhedron, Edge, VertexId,
};
use crate::pyramitoid::{as_pyramitoid, find_bases, Pyramitoid};
use crate::surgery::{
    bipyramitoid_from_equator, glue_bipyramitoid, smooth_trapezohedron, trapezohedron,
    trapezohedron_code, Bipyramitoid, Matching,
};

pub const BUILTIN_NAMES: [&str; 14] = [
    "tetrahedron",
    "prism",
    "cube",
    "book4",
    "book5",
    "book6",
    "pyramid4",
    "pyramid5",
    "pyramid6",
    "y5",
    "y6",
    "y7",
    "gyrobipentaprism",
    "trapezohedron4",
];

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub polyhedron: CombinatorialPolyhedron,
    pub basis: Option<usize>,
    pub equator: Option<Vec<Edge>>,
}

#[derive(Serialize, Deserialize)]
struct FixtureJson {
    name: String,
    vertices: Vec<VertexId>,
    faces: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    equator: Option<Vec<Edge>>,
}

impl Fixture {
    /// Parses and validates; a listed basis must be a basis and a listed
    /// equator must split the polyhedron.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: FixtureJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let polyhedron = CombinatorialPolyhedron::new(raw.vertices, raw.faces);
        polyhedron.ensure_valid()?;
        let fx = Fixture {
            name: raw.name,
            polyhedron,
            basis: raw.basis,
            equator: raw.equator,
        };
        if let Some(b) = fx.basis {
            as_pyramitoid(&fx.polyhedron, b)?;
        }
        if fx.equator.is_some() {
            fx.bipyramitoid()?;
        }
        Ok(fx)
    }

    pub fn to_json(&self) -> String {
        let raw = FixtureJson {
            name: self.name.clone(),
            vertices: self.polyhedron.vertices().to_vec(),
            faces: self.polyhedron.faces().to_vec(),
            basis: self.basis,
            equator: self.equator.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("plain data") + "\n"
    }

    /// The listed basis, else the first face that is one.
    pub fn pyramitoid(&self) -> Result<Pyramitoid> {
        let b = match self.basis {
            Some(b) => b,
            None => *find_bases(&self.polyhedron)
                .first()
                .ok_or(Error::NotABasis(0))?,
        };
        as_pyramitoid(&self.polyhedron, b)
    }

    pub fn bipyramitoid(&self) -> Result<Bipyramitoid> {
        let eq = self
            .equator
            .as_ref()
            .ok_or_else(|| Error::EquatorInvalid(format!("fixture {} has no equator", self.name)))?;
        bipyramitoid_from_equator(&self.polyhedron, eq)
    }
}

fn plain(name: &str, poly: CombinatorialPolyhedron, basis: Option<usize>) -> Fixture {
    Fixture {
        name: name.to_string(),
        polyhedron: poly,
        basis,
        equator: None,
    }
}

fn from_bipyramitoid(name: &str, b: &Bipyramitoid) -> Fixture {
    let (poly, map) = b.glued.relabeled();
    let equator = b.equator.iter().map(|e| Edge::new(map[&e.0], map[&e.1])).collect();
    let basis = find_bases(&poly).first().copied();
    Fixture {
        name: name.to_string(),
        polyhedron: poly,
        basis,
        equator: Some(equator),
    }
}

fn from_label_triangulation(name: &str, n: usize, diagonals: &[(usize, usize)]) -> Result<Fixture> {
    let y = pyramitoid_from_triangulation(&Triangulation::new(n, diagonals.iter().copied())?)?;
    let (poly, _) = y.poly().relabeled();
    Ok(plain(name, poly, Some(y.basis())))
}

/// First offset whose gluing is isomorphic to `target`.
fn glue_into(target: &CombinatorialPolyhedron, north: &Pyramitoid, south: &Pyramitoid) -> Result<Bipyramitoid> {
    (0..north.n())
        .filter_map(|o| glue_bipyramitoid(north, south, Matching { offset: o, flip: false }).ok())
        .find(|b| b.glued.is_isomorphic(target, false))
        .ok_or_else(|| Error::GluingInvalid("no offset reproduces the target".into()))
}

pub fn builtin(name: &str) -> Result<Fixture> {
    let y = |n: usize, d: &[(usize, usize)]| -> Result<Pyramitoid> {
        pyramitoid_from_triangulation(&Triangulation::new(n, d.iter().copied())?)
    };
    Ok(match name {
        "tetrahedron" => Fixture {
            name: name.into(),
            polyhedron: tetrahedron(),
            basis: Some(0),
            equator: Some(vec![Edge(0, 2), Edge(1, 2), Edge(1, 3), Edge(0, 3)]),
        },
        "prism" => {
            let y5 = y(5, &[(0, 2), (0, 3)])?;
            from_bipyramitoid(name, &glue_into(&prism(3), &y5, &y5)?)
        }
        "cube" => {
            let y6 = y(6, &[(0, 2), (2, 4), (0, 4)])?;
            let mut f = from_bipyramitoid(name, &glue_into(&cube(), &y6, &y6)?);
            f.basis = None;
            f
        }
        "book4" | "book5" | "book6" => {
            let n = name[4..].parse().expect("digit");
            plain(name, n_book_polyhedron(n)?, Some(1))
        }
        "pyramid4" | "pyramid5" | "pyramid6" => {
            let n = name[7..].parse().expect("digit");
            plain(name, n_pyramid(n)?, Some(0))
        }
        "y5" => from_label_triangulation(name, 5, &[(0, 2), (0, 3)])?,
        "y6" => from_label_triangulation(name, 6, &[(0, 2), (2, 4), (0, 4)])?,
        "y7" => from_label_triangulation(name, 7, &[(0, 2), (2, 5), (3, 5), (0, 5)])?,
        "gyrobipentaprism" => {
            let code = trapezohedron_code(&Triangulation::new(4, [(0, 2)])?)?;
            from_bipyramitoid(name, &smooth_trapezohedron(4, &code, &code)?)
        }
        "trapezohedron4" => from_bipyramitoid(name, &trapezohedron(4)?),
        other => return Err(Error::Parse(format!("unknown fixture {other:?}"))),
    })
}

pub fn builtin_fixtures() -> Result<Vec<Fixture>> {
    BUILTIN_NAMES.iter().map(|n| builtin(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_round_trip_through_json() {
        for f in builtin_fixtures().unwrap() {
            let back = Fixture::from_json(&f.to_json()).unwrap();
            assert_eq!(back.polyhedron, f.polyhedron, "{}", f.name);
            assert_eq!(back.equator, f.equator);
        }
    }

    #[test]
    fn labels_of_named_pyramitoids() {
        let lab = |n: &str| builtin(n).unwrap().pyramitoid().unwrap().label().unwrap().to_string();
        assert_eq!(lab("y5"), "(20110)");
        assert_eq!(lab("y6"), "(202020)");
        assert_eq!(lab("y7"), "(2021030)");
        let book = builtin("book5").unwrap().pyramitoid().unwrap().label().unwrap();
        assert!(book.cyclic_eq(&"01102".parse().unwrap()));
    }

    #[test]
    fn bad_fixture_is_rejected() {
        let text = r#"{"name":"bad","vertices":[0,1,2],"faces":[[0,1,2],[0,2,1]]}"#;
        assert!(Fixture::from_json(text).is_err());
        let text = r#"{"name":"t","vertices":[0,1,2,3],"faces":[[0,1,2],[0,3,1],[1,3,2],[2,3,0]],"equator":[[0,1],[0,1],[2,3],[2,3]]}"#;
        assert!(matches!(Fixture::from_json(text), Err(Error::EquatorInvalid(_))));
    }
}
