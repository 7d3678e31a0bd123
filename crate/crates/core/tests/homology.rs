use num_bigint::BigInt;

use covers_core::homology::{
    betti_mod2, homology, homology_with_forms, polygon_cover_euler, surface_genus_formula,
    ChainComplex, HomologyGroup, IntegerMatrix,
};
use covers_core::small_cover::{small_cover_complex, BaseComplex};
use covers_core::Error;

fn cc(dims: Vec<usize>, mats: Vec<Vec<Vec<i64>>>) -> ChainComplex {
    ChainComplex::new(dims, mats.iter().map(|m| IntegerMatrix::from_dense(m)).collect()).unwrap()
}

#[test]
fn projective_plane() {
    let h = homology(&cc(vec![1, 1, 1], vec![vec![vec![0]], vec![vec![2]]])).unwrap();
    assert_eq!(h[0], HomologyGroup::free(1));
    assert_eq!(h[1].to_string(), "Z/2");
    assert_eq!(h[2].to_string(), "0");
}

#[test]
fn klein_bottle() {
    let h = homology(&cc(vec![1, 2, 1], vec![vec![vec![0, 0]], vec![vec![2], vec![0]]])).unwrap();
    assert_eq!(h[1].to_string(), "Z + Z/2");
    assert_eq!(h[2], HomologyGroup::free(0));
    let m2 = betti_mod2(&cc(vec![1, 2, 1], vec![vec![vec![0, 0]], vec![vec![2], vec![0]]]));
    assert_eq!(m2, vec![1, 2, 1]);
}

#[test]
fn torsion_combines_to_invariant_factors() {
    let h = homology(&cc(vec![2, 2], vec![vec![vec![2, 0], vec![0, 3]]])).unwrap();
    assert_eq!(h[0].torsion, vec![BigInt::from(6)]);
    assert_eq!(h[0].free_rank, 0);
}

#[test]
fn entries_beyond_machine_words() {
    let big = BigInt::from(2).pow(70);
    let m = IntegerMatrix::from_triplets(1, 1, [(0, 0, big.clone())]);
    let c = ChainComplex::new(vec![1, 1], vec![m]).unwrap();
    let h = homology_with_forms(&c).unwrap();
    assert_eq!(h.groups[0].torsion, vec![big]);
}

#[test]
fn invalid_complex_is_reported() {
    let bad = cc(vec![1, 1, 1], vec![vec![vec![1]], vec![vec![1]]]);
    assert!(matches!(homology(&bad), Err(Error::ChainComplexInvalid(_))));
    assert!(ChainComplex::new(vec![2, 1], vec![IntegerMatrix::zeros(1, 1)]).is_err());
}

#[test]
fn polygon_covers_are_closed_surfaces() {
    for n in 3..=8 {
        let base = BaseComplex::polygon(n).unwrap();
        let cx = small_cover_complex(&base, &(0..n).collect::<Vec<_>>()).unwrap();
        assert_eq!(cx.euler_characteristic(), polygon_cover_euler(n).unwrap());
        let h = homology(&cx.chain_complex()).unwrap();
        let genus = surface_genus_formula(n).unwrap() as usize;
        assert_eq!(h[1], HomologyGroup::free(2 * genus), "n={n}");
        assert_eq!(h[2], HomologyGroup::free(1));
    }
}

#[test]
fn polygon_with_one_free_edge_has_boundary() {
    let base = BaseComplex::polygon(5).unwrap();
    let cx = small_cover_complex(&base, &[0, 1, 2, 3]).unwrap();
    let h = homology(&cx.chain_complex()).unwrap();
    assert_eq!(h[2], HomologyGroup::free(0));
    assert_eq!(h[0], HomologyGroup::free(1));
}
