use covers_core::enumeration::{
    burnside_rotation_count, catalan_count, census_csv, class_records, code_of,
    count_rotation_classes, enumerate_triangulations, enumerate_triangulations_with_cap,
    label_realizability, rotation_classes, smoothing_options, Code, ENUMERATION_CAP,
};
use covers_core::pyramitoid::{find_bases, Label};
use covers_core::Error;

// Rotation classes and dihedral classes of polygon triangulations, n = 4..12,
// as tabulated in the integer-sequence literature.
const ROTATION: [usize; 9] = [1, 1, 4, 6, 19, 49, 150, 442, 1424];
const DIHEDRAL: [usize; 9] = [1, 1, 3, 4, 12, 27, 82, 228, 733];

#[test]
fn class_counts_match_published_sequences() {
    for (i, n) in (4..=12).enumerate() {
        assert_eq!(count_rotation_classes(n).unwrap(), ROTATION[i], "n={n}");
        assert_eq!(burnside_rotation_count(n).unwrap(), ROTATION[i], "n={n}");
        assert_eq!(rotation_classes(n, true).unwrap().count(), DIHEDRAL[i], "n={n}");
    }
}

#[test]
fn orbit_sizes_sum_to_catalan() {
    for n in 4..=11 {
        let c = rotation_classes(n, false).unwrap();
        let total: usize = c.orbit_profile().iter().sum();
        assert_eq!(num_bigint::BigUint::from(total), catalan_count(n));
        assert!(c.orbit_profile().iter().all(|s| n % s == 0));
    }
}

#[test]
fn cap_is_enforced() {
    assert!(matches!(
        enumerate_triangulations(ENUMERATION_CAP + 1),
        Err(Error::CapExceeded { .. })
    ));
    assert!(enumerate_triangulations_with_cap(8, 7).is_err());
    assert!(enumerate_triangulations(2).is_err());
}

#[test]
fn census_csv_rows() {
    let csv = census_csv([5, 6], false).unwrap();
    assert_eq!(csv, "n,catalan,classes,orbit_profile\n5,5,1,5\n6,14,4,6 3 3 2\n");
}

#[test]
fn records_carry_labels_and_codes() {
    let recs = class_records(&rotation_classes(6, false).unwrap()).unwrap();
    assert_eq!(recs.len(), 4);
    for r in &recs {
        assert_eq!(r.code.len(), 3);
        let l: Label = r.label.parse().unwrap();
        assert_eq!(l.entries().iter().sum::<usize>(), 6);
        assert_eq!(r.cell_types.m2 + 2 * r.cell_types.m1, 6);
    }
}

#[test]
fn non_book_pyramitoid_has_unique_basis() {
    for y in smoothing_options(6).unwrap() {
        let label = y.label().unwrap();
        let bases = find_bases(y.poly()).len();
        if label.cyclic_eq(&"020202".parse().unwrap()) {
            assert_eq!(bases, 1);
        }
        assert!(bases >= 1);
    }
}

#[test]
fn realizability_of_labels() {
    assert!(label_realizability(&"01102".parse().unwrap()).unwrap());
    assert!(label_realizability(&"020202".parse().unwrap()).unwrap());
    assert!(!label_realizability(&"010302".parse().unwrap()).unwrap());
}

#[test]
fn codes_reject_crossings() {
    assert!(Code::new(6, [(0, 3), (1, 4), (2, 5)]).is_err());
    let y = &smoothing_options(7).unwrap()[0];
    assert_eq!(code_of(y).unwrap().arcs.len(), 4);
}
