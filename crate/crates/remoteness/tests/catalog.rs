//! Catalog-wide invariants that go beyond the table itself.

use remoteness::catalog::{load_catalog, NoteTag};
use remoteness_core::group::{restrict_fixed, transitive_remoteness};
use remoteness_core::metric::permutation_covering_radius;

#[test]
fn remoteness_is_n_minus_one_or_n() {
    for e in load_catalog().unwrap() {
        let r = transitive_remoteness(&e.group).unwrap().remoteness;
        assert!(r + 1 == e.degree || r == e.degree, "{}", e.label());
        if e.note == NoteTag::OddOrder || e.expected_order % 2 == 1 {
            assert_eq!(r + 1, e.degree, "{}", e.label());
        }
        assert_eq!(e.in_table, r + 1 == e.degree, "{}", e.label());
    }
}

/// When a transitive group has remoteness n - 1, the stabilizer of a point, acting
/// on the other n - 1 points, has the largest possible covering radius there.
#[test]
fn stabilizers_of_remote_groups_have_maximal_covering_radius() {
    let mut checked = 0;
    for e in load_catalog().unwrap().into_iter().filter(|e| e.degree <= 7 && e.in_table) {
        let stab = e.group.stabilizer(0).unwrap();
        let elements = stab.elements().unwrap();
        let restricted = restrict_fixed(&elements, Some(&[0])).unwrap();
        assert_eq!(restricted.degree, e.degree - 1);
        let cr = permutation_covering_radius(&restricted.code).unwrap();
        assert_eq!(cr, e.degree - 1, "{}", e.label());
        checked += 1;
    }
    assert_eq!(checked, 7);
}

#[test]
fn generators_are_shipped_in_cycle_notation_that_round_trips() {
    for e in load_catalog().unwrap() {
        for g in &e.generators {
            let back = remoteness_core::Permutation::parse(&g.cycle_notation(), Some(e.degree)).unwrap();
            assert_eq!(&back, g, "{}", e.label());
        }
    }
}
