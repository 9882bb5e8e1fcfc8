use latgb_core::canonical::{canonical_form, is_isomorphic};
use latgb_core::enumerate::{class_counts, enumerate_lattices, Strategy};

#[test]
fn class_counts_through_eight() {
    let lattices = enumerate_lattices(8, Strategy::GrowByTop).unwrap();
    assert_eq!(class_counts(&lattices, 8), vec![1, 1, 1, 2, 5, 15, 53, 222]);
}

#[test]
fn representatives_are_valid_and_pairwise_distinct() {
    let lattices = enumerate_lattices(6, Strategy::FilterPosets).unwrap();
    for (i, a) in lattices.iter().enumerate() {
        assert_eq!(canonical_form(a).to_lattice(), *a);
        assert!(a.leq(a.bottom(), a.top()));
        for b in &lattices[i + 1..] {
            assert!(!is_isomorphic(a, b));
        }
    }
}
