use awcalc::convert::{el_to_es, es_to_el};
use awcalc::{el, es};
use scalars::Rational;

fn main() {
    let d = 5u32;
    let a = el::El::<Rational>::random(&["x", "y"], 19);
    let b = el::El::<Rational>::random(&["x", "y"], 20);
    let checks: Vec<(&str, bool)> = vec![
        ("stack", {
            let lhs = el_to_es(&el::stack(&a, &b));
            let rhs = es::stack(&el_to_es(&a), &el_to_es(&b));
            lhs.eq_through(&rhs, d)
        }),
        ("delete", {
            let e3 = el::El::<Rational>::random(&["x", "y", "z"], 21);
            let lhs = el_to_es(&el::delete(&e3, "z").unwrap());
            let rhs = es::delete_strand(&el_to_es(&e3), "z").unwrap();
            lhs.eq_through(&rhs, d)
        }),
        ("double", {
            let lhs = el_to_es(&el::double(&a, "y", "u", "v").unwrap());
            let rhs = es::double_strand(&el_to_es(&a), "y", "u", "v").unwrap();
            lhs.eq_through(&rhs, d)
        }),
        ("rename", {
            let lhs = el_to_es(&el::rename(&a, "y", "w").unwrap());
            let rhs = es::rename_strand(&el_to_es(&a), "y", "w").unwrap();
            lhs.eq_through(&rhs, d)
        }),
        ("adjoint", {
            let lhs = el_to_es(&el::adjoint_all(&a));
            let rhs = es::adjoint_all(&el_to_es(&a));
            lhs.eq_through(&rhs, d)
        }),
        ("antipode", {
            let lhs = el_to_es(&el::antipode_all(&a));
            let rhs = es::antipode_all(&el_to_es(&a));
            lhs.eq_through(&rhs, d)
        }),
        ("roundtrip sanity", {
            es_to_el(&el_to_es(&a)).eq_through(&a, d)
        }),
    ];
    for (name, ok) in checks {
        println!("{name}: {}", if ok { "ok" } else { "MISMATCH" });
    }
}
