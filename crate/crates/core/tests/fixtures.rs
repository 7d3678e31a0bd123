use std::path::PathBuf;

use covers_core::fixtures::{builtin, builtin_fixtures, Fixture, BUILTIN_NAMES};
use covers_core::polytope::{cube, n_book_polyhedron, n_pyramid, prism, tetrahedron};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn load(name: &str) -> Fixture {
    let path = dir().join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    Fixture::from_json(&text).unwrap()
}

#[test]
#[ignore = "rewrites the fixture files"]
fn regenerate() {
    std::fs::create_dir_all(dir()).unwrap();
    for f in builtin_fixtures().unwrap() {
        std::fs::write(dir().join(format!("{}.json", f.name)), f.to_json()).unwrap();
    }
}

#[test]
fn files_match_builtins() {
    for name in BUILTIN_NAMES {
        let disk = load(name);
        let built = builtin(name).unwrap();
        assert_eq!(disk.polyhedron, built.polyhedron, "{name}");
        assert_eq!(disk.equator, built.equator, "{name}");
        assert_eq!(disk.basis, built.basis, "{name}");
    }
}

#[test]
fn files_are_the_named_solids() {
    assert!(load("tetrahedron").polyhedron.is_isomorphic(&tetrahedron(), false));
    assert!(load("prism").polyhedron.is_isomorphic(&prism(3), false));
    assert!(load("cube").polyhedron.is_isomorphic(&cube(), false));
    for n in 4..=6 {
        let book = load(&format!("book{n}")).polyhedron;
        assert!(book.is_isomorphic(&n_book_polyhedron(n).unwrap(), false));
        let pyr = load(&format!("pyramid{n}")).polyhedron;
        assert!(pyr.is_isomorphic(&n_pyramid(n).unwrap(), false));
    }
    let g = load("gyrobipentaprism").polyhedron;
    assert_eq!(g.num_faces(), 8);
    assert!(g.is_simple());
    let t = load("trapezohedron4").polyhedron;
    assert_eq!(t.face_vector(), vec![4; 8]);
}

#[test]
fn equators_split_and_reglue() {
    for name in ["tetrahedron", "prism", "cube", "gyrobipentaprism", "trapezohedron4"] {
        let f = load(name);
        let b = f.bipyramitoid().unwrap();
        assert!(b.glued.is_isomorphic(&f.polyhedron, false), "{name}");
        assert_eq!(b.glued.num_faces(), b.n());
    }
}
