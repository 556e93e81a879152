use awcalc::convert::el_to_es;
use awcalc::json::es_pretty;
use awcalc::{el, es};
use freelie::lie::LieSeries;
use freelie::tangent::TangentMap;
use freelie::{Alphabet, CwSeries};
use scalars::Rational;

fn main() {
    let ab = Alphabet::new(["x", "y"]);
    let x = LieSeries::<Rational>::generator(ab.clone(), "x");
    let y = LieSeries::<Rational>::generator(ab.clone(), "y");
    let lam = TangentMap::new(ab.clone(), vec![("x".into(), y.clone()), ("y".into(), x.clone())]);
    let e = el::El::new(lam, CwSeries::zero(ab.clone()));
    let lhs = el_to_es(&el::adjoint_all(&e));
    let rhs = es::adjoint_all(&el_to_es(&e));
    println!("lhs (el formula then convert):\n{}", es_pretty(&lhs.force(4), 4));
    println!("rhs (es per-strand composites):\n{}", es_pretty(&rhs.force(4), 4));
    // also try opposite composite order inside dA^a: tha first, then hA
    let s = el_to_es(&e);
    let alt = {
        let mut acc = s.clone();
        for l in es::strand_labels(&s) {
            let t = es::tail_head_action(&acc, &l, &l).unwrap();
            acc = es::head_adjoint(&t, &l).unwrap();
        }
        acc
    };
    println!("alt (tha then hA):\n{}", es_pretty(&alt.force(4), 4));
}
