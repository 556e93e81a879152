//! JSON and pretty forms for elements in either presentation.

use crate::el::El;
use crate::es::Es;
use freelie::fmt::{cw_json, cw_pretty, lie_json, lie_pretty};
use scalars::Coeff;
use serde_json::{json, Map, Value};

pub fn el_json<C: Coeff>(e: &El<C>, max_degree: u32) -> Value {
    let ab = e.strands();
    let mut lambda = Map::new();
    for l in ab.letters() {
        lambda.insert(
            ab.name(l).to_owned(),
            lie_json(e.lambda.image(l), max_degree),
        );
    }
    json!({
        "kind": "El",
        "heads": ab.names(),
        "tails": ab.names(),
        "lambda": lambda,
        "omega": cw_json(&e.omega, max_degree),
    })
}

pub fn es_json<C: Coeff>(e: &Es<C>, max_degree: u32) -> Value {
    let mut lambda = Map::new();
    for h in e.heads() {
        lambda.insert(
            h.to_owned(),
            lie_json(e.head(h).expect("head exists"), max_degree),
        );
    }
    json!({
        "kind": "Es",
        "heads": e.heads(),
        "tails": e.tails().names(),
        "lambda": lambda,
        "omega": cw_json(e.omega(), max_degree),
    })
}

pub fn el_pretty<C: Coeff>(e: &El<C>, max_degree: u32) -> String {
    let ab = e.strands();
    let mut out = String::new();
    for l in ab.letters() {
        out.push_str(&format!(
            "{} -> {}\n",
            ab.name(l),
            lie_pretty(e.lambda.image(l), max_degree)
        ));
    }
    out.push_str(&format!("wheels: {}\n", cw_pretty(&e.omega, max_degree)));
    out
}

pub fn es_pretty<C: Coeff>(e: &Es<C>, max_degree: u32) -> String {
    let mut out = String::new();
    for h in e.heads() {
        out.push_str(&format!(
            "{} -> {}\n",
            h,
            lie_pretty(e.head(h).expect("head exists"), max_degree)
        ));
    }
    out.push_str(&format!("wheels: {}\n", cw_pretty(e.omega(), max_degree)));
    out
}
