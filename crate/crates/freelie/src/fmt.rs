//! Pretty printing and JSON serialization.
//!
//! Lie series print in top-bracket notation, one bracket pair per standard
//! factorization step: `x + y + [xy]/2 + [x[xy]]/12`. Wheels print with an
//! arch: `-⌒(xy)/48`. JSON keys are plain word strings.

use crate::alphabet::Alphabet;
use crate::cyclic::CwSeries;
use crate::lie::{BracketTree, LieSeries};
use crate::lyndon::std_factorization;
use scalars::{Coeff, Rational};
use serde_json::{json, Map, Value};

/// Top-bracket rendering of the standard bracketing of a Lyndon word.
pub fn bracket_string(alphabet: &Alphabet, w: &[u16]) -> String {
    if w.len() == 1 {
        alphabet.name(w[0]).to_owned()
    } else {
        let (u, v) = std_factorization(w);
        format!(
            "[{}{}]",
            bracket_string(alphabet, &u),
            bracket_string(alphabet, &v)
        )
    }
}

fn push_term(out: &mut String, coeff: &Rational, body: &str) {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let num = mag.numer().to_string();
    let den = mag.denom().to_string();
    if num != "1" {
        out.push_str(&num);
    }
    out.push_str(body);
    if den != "1" {
        out.push('/');
        out.push_str(&den);
    }
}

fn generic_coeff_term<C: Coeff>(out: &mut String, coeff: &C, body: &str) {
    match coeff.try_rat() {
        Some(r) => push_term(out, &r, body),
        None => {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({})", coeff));
            out.push_str(body);
        }
    }
}

/// Pretty form of a Lie series through the given degree.
pub fn lie_pretty<C: Coeff>(f: &LieSeries<C>, max_degree: u32) -> String {
    let mut out = String::new();
    for d in 1..=max_degree {
        for (w, c) in f.part(d).iter() {
            generic_coeff_term(&mut out, c, &bracket_string(f.alphabet(), w));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn cw_pretty<C: Coeff>(f: &CwSeries<C>, max_degree: u32) -> String {
    let mut out = String::new();
    for d in 1..=max_degree {
        for (w, c) in f.part(d).iter() {
            let body = format!("⌒({})", f.alphabet().word_string(w.letters()));
            generic_coeff_term(&mut out, c, &body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// JSON form: {"alphabet": [...], "parts": {"2": {"xy": "-1/24"}}}.
pub fn lie_json<C: Coeff>(f: &LieSeries<C>, max_degree: u32) -> Value {
    let mut parts = Map::new();
    for d in 1..=max_degree {
        let part = f.part(d);
        if part.is_empty() {
            continue;
        }
        let mut m = Map::new();
        for (w, c) in part.iter() {
            m.insert(f.alphabet().word_string(w), json!(c.to_string()));
        }
        parts.insert(d.to_string(), Value::Object(m));
    }
    json!({
        "alphabet": f.alphabet().names(),
        "parts": parts,
    })
}

pub fn cw_json<C: Coeff>(f: &CwSeries<C>, max_degree: u32) -> Value {
    let mut parts = Map::new();
    for d in 1..=max_degree {
        let part = f.part(d);
        if part.is_empty() {
            continue;
        }
        let mut m = Map::new();
        for (w, c) in part.iter() {
            m.insert(f.alphabet().word_string(w.letters()), json!(c.to_string()));
        }
        parts.insert(d.to_string(), Value::Object(m));
    }
    json!({
        "alphabet": f.alphabet().names(),
        "parts": parts,
    })
}

/// Parses JSON produced by `lie_json` back into an explicit series.
pub fn lie_from_json(v: &Value) -> Option<LieSeries<Rational>> {
    let alphabet = Alphabet::new(
        v.get("alphabet")?
            .as_array()?
            .iter()
            .map(|s| s.as_str().unwrap_or_default().to_owned()),
    );
    let mut parts = std::collections::BTreeMap::new();
    for (d, m) in v.get("parts")?.as_object()? {
        let d: u32 = d.parse().ok()?;
        let mut part = std::collections::BTreeMap::new();
        for (ws, cs) in m.as_object()? {
            let w = alphabet.parse_word(ws)?;
            let c: Rational = cs.as_str()?.parse().ok()?;
            part.insert(w, c);
        }
        parts.insert(d, part);
    }
    Some(LieSeries::from_series(
        alphabet,
        crate::series::Series::from_parts(parts),
    ))
}

/// Parses a top-bracket expression such as `[x[xy]]` over single-character
/// generators into a formal bracket tree.
pub fn parse_bracket_tree(s: &str) -> Option<BracketTree> {
    let chars: Vec<char> = s.chars().collect();
    let (tree, rest) = parse_expr(&chars)?;
    if rest != chars.len() {
        return None;
    }
    Some(tree)
}

fn parse_expr(chars: &[char]) -> Option<(BracketTree, usize)> {
    let mut pos = 0;
    let mut items: Vec<BracketTree> = Vec::new();
    while pos < chars.len() {
        match chars[pos] {
            '[' => {
                let mut depth = 1;
                let mut end = pos + 1;
                while end < chars.len() && depth > 0 {
                    match chars[end] {
                        '[' => depth += 1,
                        ']' => depth -= 1,
                        _ => {}
                    }
                    end += 1;
                }
                if depth != 0 {
                    return None;
                }
                let inner: Vec<char> = chars[pos + 1..end - 1].to_vec();
                let (tree, used) = parse_expr(&inner)?;
                if used != inner.len() {
                    return None;
                }
                items.push(tree);
                pos = end;
            }
            ']' => return None,
            ch => {
                items.push(BracketTree::gen(&ch.to_string()));
                pos += 1;
            }
        }
    }
    // A sequence of items inside one bracket level associates as the
    // iterated bracket of exactly two factors; top-bracket notation always
    // has exactly two items per bracket pair, or one bare generator.
    match items.len() {
        1 => Some((items.pop().unwrap(), pos)),
        2 => {
            let b = items.pop().unwrap();
            let a = items.pop().unwrap();
            Some((BracketTree::br(a, b), pos))
        }
        _ => {
            // Left-associate longer runs like `xy z` inside one level.
            let mut it = items.into_iter();
            let mut acc = it.next()?;
            for next in it {
                acc = BracketTree::br(acc, next);
            }
            Some((acc, pos))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::word_of;

    #[test]
    fn bracket_rendering() {
        let ab = Alphabet::new(["x", "y"]);
        assert_eq!(bracket_string(&ab, &[0, 1]), "[xy]");
        assert_eq!(bracket_string(&ab, &[0, 0, 1]), "[x[xy]]");
        assert_eq!(bracket_string(&ab, &[0, 1, 1]), "[[xy]y]");
        let _ = word_of(&[0]);
    }

    #[test]
    fn pretty_bch_matches_the_classical_display() {
        let ab = Alphabet::new(["x", "y"]);
        let x = LieSeries::<Rational>::generator(ab.clone(), "x");
        let y = LieSeries::<Rational>::generator(ab.clone(), "y");
        let z = x.bch(&y);
        assert_eq!(
            lie_pretty(&z, 3),
            "x + y + [xy]/2 + [x[xy]]/12 + [[xy]y]/12"
        );
    }

    #[test]
    fn parse_round_trip() {
        let ab = Alphabet::new(["x", "y"]);
        for s in ["[xy]", "[x[xy]]", "[[xy]y]", "[x[[xy]y]]"] {
            let t = parse_bracket_tree(s).unwrap();
            let series: LieSeries<Rational> = t.to_basis(&ab);
            // the parse of a basis rendering is the basis element
            let mut total = 0;
            for d in 1..=6 {
                total += series.part(d).len();
            }
            assert_eq!(total, 1, "{s} should be a single basis element");
        }
    }

    #[test]
    fn json_round_trip() {
        let ab = Alphabet::new(["x", "y"]);
        let f = LieSeries::<Rational>::random(ab, 3);
        let v = lie_json(&f, 5);
        let back = lie_from_json(&v).unwrap();
        assert!(back.sub(&f).is_zero_through(5));
    }
}
