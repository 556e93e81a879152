//! Law suite for the two presentations and their conversions, on seeded
//! random elements.

use awcalc::props;

#[test]
fn el_group_laws() {
    assert!(props::el_stack_associative(1, 8));
    assert!(props::el_r_inverse(8));
    assert!(props::el_adjoint_involution(2, 8));
    assert!(props::el_adjoint_antihomomorphism(3, 8));
    assert!(props::el_antipode_involution(4, 8));
}

#[test]
fn el_yang_baxter_to_degree_5() {
    assert!(props::el_yang_baxter(5));
}

#[test]
fn el_strand_surgery_laws() {
    assert!(props::el_double_homomorphism(5, 6));
    assert!(props::el_deletes_commute(6, 7));
    assert!(props::el_double_then_delete_is_rename(7, 7));
}

#[test]
fn es_products() {
    assert!(props::es_hash_associative(8, 8));
    assert!(props::es_stack_associative(9, 6));
    assert!(props::es_r_inverse(8));
}

#[test]
fn es_action_laws() {
    assert!(props::es_haction(10, 6));
    assert!(props::es_action_by_trivial_head_is_identity(11, 8));
}

#[test]
fn es_stitching_laws() {
    assert!(props::es_stitch_meta_associative(12, 6));
    assert!(props::es_tail_merge_meta_laws(13, 8));
}

#[test]
fn es_involutions() {
    assert!(props::es_head_adjoint_involution(14, 8));
    assert!(props::es_adjoint_strand_involution(15, 6));
    assert!(props::es_antipode_strand_involution(16, 6));
}

#[test]
fn conversions() {
    assert!(props::conversion_round_trip(17, 6));
    assert!(props::conversion_fixes_wheels(18, 8));
}

#[test]
fn cross_presentation() {
    assert!(props::cross_presentation_consistency(19, 5));
}
