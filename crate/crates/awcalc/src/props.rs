//! Named law checks over seeded random elements. These back both the test
//! suites and the command-line selftest: each function verifies one
//! algebraic law through the given degree and returns whether it held.

use crate::convert::{el_to_es, es_to_el};
use crate::el;
use crate::es;
use scalars::Rational;

type ElQ = el::El<Rational>;
type EsQ = es::Es<Rational>;

pub fn el_stack_associative(seed: u64, max_degree: u32) -> bool {
    let a = ElQ::random(&["x", "y"], seed);
    let b = ElQ::random(&["x", "y"], seed + 1);
    let c = ElQ::random(&["x", "y"], seed + 2);
    let lhs = el::stack(&el::stack(&a, &b), &c);
    let rhs = el::stack(&a, &el::stack(&b, &c));
    lhs.eq_through(&rhs, max_degree)
}

pub fn el_r_inverse(max_degree: u32) -> bool {
    let p: ElQ = el::r_plus("a", "b");
    let m: ElQ = el::r_minus("a", "b");
    el::stack(&p, &m).is_unit_through(max_degree)
}

/// The Reidemeister-3 braid relation on three strands.
pub fn el_yang_baxter(max_degree: u32) -> bool {
    let r12: ElQ = el::extend(&el::r_plus("1", "2"), &["3"]);
    let r13: ElQ = el::extend(&el::r_plus("1", "3"), &["2"]);
    let r23: ElQ = el::extend(&el::r_plus("2", "3"), &["1"]);
    let lhs = el::stack(&el::stack(&r12, &r13), &r23);
    let rhs = el::stack(&el::stack(&r23, &r13), &r12);
    lhs.eq_through(&rhs, max_degree)
}

pub fn el_adjoint_involution(seed: u64, max_degree: u32) -> bool {
    let e = ElQ::random(&["x", "y"], seed);
    el::adjoint_all(&el::adjoint_all(&e)).eq_through(&e, max_degree)
}

pub fn el_adjoint_antihomomorphism(seed: u64, max_degree: u32) -> bool {
    let a = ElQ::random(&["x", "y"], seed);
    let b = ElQ::random(&["x", "y"], seed + 7);
    let lhs = el::adjoint_all(&el::stack(&a, &b));
    let rhs = el::stack(&el::adjoint_all(&b), &el::adjoint_all(&a));
    lhs.eq_through(&rhs, max_degree)
}

pub fn el_antipode_involution(seed: u64, max_degree: u32) -> bool {
    let e = ElQ::random(&["x", "y"], seed);
    el::antipode_all(&el::antipode_all(&e)).eq_through(&e, max_degree)
}

/// Doubling is a homomorphism for the stacking product.
pub fn el_double_homomorphism(seed: u64, max_degree: u32) -> bool {
    let a = ElQ::random(&["x", "y"], seed);
    let b = ElQ::random(&["x", "y"], seed + 3);
    let d = |e: &ElQ| el::double(e, "y", "u", "v").unwrap();
    d(&el::stack(&a, &b)).eq_through(&el::stack(&d(&a), &d(&b)), max_degree)
}

pub fn el_deletes_commute(seed: u64, max_degree: u32) -> bool {
    let e = ElQ::random(&["x", "y", "z"], seed);
    let a = el::delete(&el::delete(&e, "x").unwrap(), "z").unwrap();
    let b = el::delete(&el::delete(&e, "z").unwrap(), "x").unwrap();
    a.eq_through(&b, max_degree)
}

/// Double then delete one daughter recovers a rename.
pub fn el_double_then_delete_is_rename(seed: u64, max_degree: u32) -> bool {
    let e = ElQ::random(&["x", "y"], seed);
    let d = el::double(&e, "y", "u", "v").unwrap();
    let del = el::delete(&d, "v").unwrap();
    let ren = el::rename(&e, "y", "u").unwrap();
    del.eq_through(&ren, max_degree)
}

pub fn es_hash_associative(seed: u64, max_degree: u32) -> bool {
    let a = EsQ::random(&["x", "y"], seed);
    let b = EsQ::random(&["x", "y"], seed + 1);
    let c = EsQ::random(&["x", "y"], seed + 2);
    es::hash(&es::hash(&a, &b), &c).eq_through(&es::hash(&a, &es::hash(&b, &c)), max_degree)
}

pub fn es_stack_associative(seed: u64, max_degree: u32) -> bool {
    let a = EsQ::random(&["x", "y"], seed);
    let b = EsQ::random(&["x", "y"], seed + 1);
    let c = EsQ::random(&["x", "y"], seed + 2);
    es::stack(&es::stack(&a, &b), &c).eq_through(&es::stack(&a, &es::stack(&b, &c)), max_degree)
}

pub fn es_r_inverse(max_degree: u32) -> bool {
    let p: EsQ = es::r_plus("a", "b");
    let m: EsQ = es::r_minus("a", "b");
    es::stack(&p, &m).is_unit_through(max_degree)
}

/// Stitching head x then y onto u equals acting by x, then y, then
/// stitching the heads.
pub fn es_haction(seed: u64, max_degree: u32) -> bool {
    let e = EsQ::random(&["u", "x", "y"], seed);
    let lhs = es::tail_head_action(&es::head_mul(&e, "x", "y", "z").unwrap(), "u", "z").unwrap();
    let rhs = es::head_mul(
        &es::tail_head_action(&es::tail_head_action(&e, "u", "x").unwrap(), "u", "y").unwrap(),
        "x",
        "y",
        "z",
    )
    .unwrap();
    lhs.eq_through(&rhs, max_degree)
}

pub fn es_stitch_meta_associative(seed: u64, max_degree: u32) -> bool {
    let e = EsQ::random(&["a", "b", "c"], seed);
    let lhs = es::stitch(&es::stitch(&e, "a", "b", "a").unwrap(), "a", "c", "a").unwrap();
    let rhs = es::stitch(&es::stitch(&e, "b", "c", "b").unwrap(), "a", "b", "a").unwrap();
    lhs.eq_through(&rhs, max_degree)
}

pub fn es_tail_merge_meta_laws(seed: u64, max_degree: u32) -> bool {
    let e = EsQ::random(&["x", "u", "v"], seed);
    // merging is commutative in its sources
    let ab = es::tail_mul(&e, "u", "v", "w").unwrap();
    let ba = es::tail_mul(&e, "v", "u", "w").unwrap();
    if !ab.eq_through(&ba, max_degree) {
        return false;
    }
    // doubling then deleting one daughter is a rename
    let d = es::tail_double(&e, "u", "p", "q").unwrap();
    let del = es::delete_tail(&d, "q").unwrap();
    let ren = es::tail_rename(&e, "u", "p").unwrap();
    del.eq_through(&ren, max_degree)
}

pub fn es_head_adjoint_involution(seed: u64, max_degree: u32) -> bool {
    let e = EsQ::random(&["x", "y"], seed);
    es::head_adjoint(&es::head_adjoint(&e, "x").unwrap(), "x")
        .unwrap()
        .eq_through(&e, max_degree)
}

pub fn es_adjoint_strand_involution(seed: u64, max_degree: u32) -> bool {
    let e = EsQ::random(&["x", "y"], seed);
    es::adjoint_strand(&es::adjoint_strand(&e, "x").unwrap(), "x")
        .unwrap()
        .eq_through(&e, max_degree)
}

pub fn es_antipode_strand_involution(seed: u64, max_degree: u32) -> bool {
    let e = EsQ::random(&["x", "y"], seed);
    es::antipode_strand(&es::antipode_strand(&e, "x").unwrap(), "x")
        .unwrap()
        .eq_through(&e, max_degree)
}

pub fn es_action_by_trivial_head_is_identity(seed: u64, max_degree: u32) -> bool {
    let base = EsQ::random(&["u", "v"], seed);
    let e = es::union(&base, &EsQ::unit(&["x"])).unwrap();
    // the x strand has λ_x = 0 after extension by a unit
    let probe = es::extend(&e, &[]);
    es::tail_head_action(&probe, "u", "x")
        .unwrap()
        .eq_through(&probe, max_degree)
}

pub fn conversion_round_trip(seed: u64, max_degree: u32) -> bool {
    let e = ElQ::random(&["x", "y"], seed);
    let back = es_to_el(&el_to_es(&e));
    if !back.eq_through(&e, max_degree) {
        return false;
    }
    let f = EsQ::random(&["x", "y"], seed + 5);
    let forth = el_to_es(&es_to_el(&f));
    forth.eq_through(&f, max_degree)
}

/// Wheels-only elements convert identically in both directions.
pub fn conversion_fixes_wheels(seed: u64, max_degree: u32) -> bool {
    let ab = freelie::Alphabet::new(["x", "y"]);
    let omega = freelie::CwSeries::<Rational>::random(ab, seed);
    let e = el::from_wheels(omega.clone());
    let s = el_to_es(&e);
    s.omega().eq_through(&omega, max_degree).iter().all(|&t| t)
        && s.head("x").unwrap().is_zero_through(max_degree)
}

/// Every one-set operation commutes with the change of presentation.
pub fn cross_presentation_consistency(seed: u64, max_degree: u32) -> bool {
    let a = ElQ::random(&["x", "y"], seed);
    let b = ElQ::random(&["x", "y"], seed + 1);
    // stacking
    let lhs = el_to_es(&el::stack(&a, &b));
    let rhs = es::stack(&el_to_es(&a), &el_to_es(&b));
    if !lhs.eq_through(&rhs, max_degree) {
        return false;
    }
    // deletion
    let e3 = ElQ::random(&["x", "y", "z"], seed + 2);
    let lhs = el_to_es(&el::delete(&e3, "z").unwrap());
    let rhs = es::delete_strand(&el_to_es(&e3), "z").unwrap();
    if !lhs.eq_through(&rhs, max_degree) {
        return false;
    }
    // doubling
    let lhs = el_to_es(&el::double(&a, "y", "u", "v").unwrap());
    let rhs = es::double_strand(&el_to_es(&a), "y", "u", "v").unwrap();
    if !lhs.eq_through(&rhs, max_degree) {
        return false;
    }
    // renaming
    let lhs = el_to_es(&el::rename(&a, "y", "w").unwrap());
    let rhs = es::rename_strand(&el_to_es(&a), "y", "w").unwrap();
    if !lhs.eq_through(&rhs, max_degree) {
        return false;
    }
    // all-strand adjoint
    let lhs = el_to_es(&el::adjoint_all(&a));
    let rhs = es::adjoint_all(&el_to_es(&a));
    if !lhs.eq_through(&rhs, max_degree) {
        return false;
    }
    // all-strand antipode
    let lhs = el_to_es(&el::antipode_all(&a));
    let rhs = es::antipode_all(&el_to_es(&a));
    lhs.eq_through(&rhs, max_degree)
}

/// One line per law, with the degree each ran at; used by the selftest.
pub fn run_all(max_degree: u32) -> Vec<(&'static str, bool)> {
    let d = max_degree;
    let dlow = d.min(6);
    vec![
        ("el stack associativity", el_stack_associative(101, d)),
        ("el crossing inverse", el_r_inverse(d)),
        ("el yang-baxter", el_yang_baxter(d.min(5))),
        ("el adjoint involution", el_adjoint_involution(103, d)),
        (
            "el adjoint anti-homomorphism",
            el_adjoint_antihomomorphism(104, d),
        ),
        ("el antipode involution", el_antipode_involution(105, d)),
        ("el double homomorphism", el_double_homomorphism(106, dlow)),
        ("el deletes commute", el_deletes_commute(107, d)),
        (
            "el double+delete = rename",
            el_double_then_delete_is_rename(108, d),
        ),
        ("es hash associativity", es_hash_associative(109, d)),
        ("es stack associativity", es_stack_associative(110, dlow)),
        ("es crossing inverse", es_r_inverse(d)),
        ("es head action law", es_haction(111, dlow)),
        (
            "es stitch meta-associativity",
            es_stitch_meta_associative(112, dlow),
        ),
        ("es tail merge laws", es_tail_merge_meta_laws(113, d)),
        (
            "es head adjoint involution",
            es_head_adjoint_involution(114, d),
        ),
        (
            "es strand adjoint involution",
            es_adjoint_strand_involution(115, dlow),
        ),
        (
            "es strand antipode involution",
            es_antipode_strand_involution(116, dlow),
        ),
        (
            "es trivial head acts trivially",
            es_action_by_trivial_head_is_identity(117, d),
        ),
        ("presentation round trip", conversion_round_trip(118, dlow)),
        ("conversion fixes wheels", conversion_fixes_wheels(119, d)),
        (
            "cross-presentation consistency",
            cross_presentation_consistency(120, dlow),
        ),
    ]
}
