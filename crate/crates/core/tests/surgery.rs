use covers_core::enumeration::{code_of, Triangulation};
use covers_core::homology::{b_n_formula, betti_numbers, HomologyGroup};
use covers_core::polytope::{prism, Edge};
use covers_core::surgery::{
    bipyramitoid_from_equator, glue_bipyramitoid, heegaard_data, smooth_trapezohedron,
    split_bipyramitoid, trapezohedron_code, z_homology_two_ways, Matching,
};

fn prism_equator() -> Vec<Edge> {
    let p = prism(3);
    // Crosses both triangles and all three quads: two top edges, two bottom.
    let mut found = None;
    for a in p.edges() {
        for b in p.edges() {
            for c in p.edges() {
                for d in p.edges() {
                    for e in p.edges() {
                        let eq = vec![*a, *b, *c, *d, *e];
                        if split_bipyramitoid(&p, &eq).is_ok() {
                            found = Some(eq);
                        }
                    }
                }
            }
        }
    }
    found.expect("prism has an equator")
}

#[test]
fn prism_is_two_y5() {
    let p = prism(3);
    let eq = prism_equator();
    let b = bipyramitoid_from_equator(&p, &eq).unwrap();
    assert!(b.glued.is_isomorphic(&p, false));
    let l = b.north.label().unwrap();
    assert!(l.cyclic_eq(&"01102".parse().unwrap()), "{l}");
    let tw = z_homology_two_ways(&b).unwrap();
    assert!(tw.agree);
    assert_eq!(betti_numbers(&tw.direct), vec![1, 1, 1, 1]);
    assert!(tw.direct.iter().all(HomologyGroup::is_torsion_free));
    let h = heegaard_data(&b).unwrap();
    assert_eq!(h.genus, 5);
    assert_eq!(h.north_meridians.len(), 16);
    assert_eq!((h.north_rank, h.south_rank), (5, 5));
    assert_eq!(h.diagram_h1, tw.direct[1]);
    // Re-splitting the glued polyhedron gives back the same labels.
    let (n2, s2) = split_bipyramitoid(&b.glued, &b.equator).unwrap();
    assert!(n2.label().unwrap().cyclic_eq(&b.north.label().unwrap()));
    assert!(s2.label().unwrap().cyclic_eq(&b.south.label().unwrap()));
}

#[test]
fn gyrobipentaprism_two_ways_and_genus() {
    let sq = Triangulation::new(4, [(0, 2)]).unwrap();
    let code = trapezohedron_code(&sq).unwrap();
    let b = smooth_trapezohedron(4, &code, &code).unwrap();
    let tw = z_homology_two_ways(&b).unwrap();
    assert!(tw.agree);
    let h = heegaard_data(&b).unwrap();
    assert_eq!(h.genus as u64, b_n_formula(8).unwrap());
    assert_eq!(h.genus, 129);
    assert_eq!(h.north_meridians.len(), 5 * 64);
    assert_eq!((h.north_rank, h.south_rank), (129, 129));
    assert_eq!(h.diagram_h1, tw.direct[1]);
}

#[test]
fn mismatched_sizes_are_rejected() {
    let t4 = Triangulation::new(4, [(0, 2)]).unwrap();
    let t5 = Triangulation::new(5, [(0, 2), (0, 3)]).unwrap();
    let a = covers_core::enumeration::pyramitoid_from_triangulation(&t4).unwrap();
    let b = covers_core::enumeration::pyramitoid_from_triangulation(&t5).unwrap();
    assert!(matches!(
        glue_bipyramitoid(&a, &b, Matching::default()),
        Err(covers_core::Error::BasisMismatch { north: 4, south: 5 })
    ));
    assert_eq!(code_of(&a).unwrap().arcs.len(), 1);
}
