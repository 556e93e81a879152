//! Alphabet manipulation for series: embeddings into larger alphabets,
//! letter renamings, and linear letter substitutions, on both Lie series
//! and wheels. Order-preserving relabelings act directly on basis words;
//! anything else goes through the word level or the morphism machinery.

use freelie::alphabet::{Alphabet, Letter};
use freelie::cyclic::{cw_substitute, CwSeries, CycWord};
use freelie::fa::fa_part_to_lie;
use freelie::lie::{LieMorphism, LieSeries};
use freelie::series::{PartMap, Series};
use freelie::Word;
use scalars::Coeff;

fn is_order_preserving(table: &[Letter]) -> bool {
    table.windows(2).all(|p| p[0] < p[1])
}

/// Relabels generators along `table` (source letter -> target letter).
/// The table must be injective.
pub fn lie_relabel<C: Coeff>(
    f: &LieSeries<C>,
    target: Alphabet,
    table: Vec<Letter>,
) -> LieSeries<C> {
    assert_eq!(table.len(), f.alphabet().len());
    if is_order_preserving(&table) {
        // Lyndon structure is preserved; remap keys directly.
        let s = f.series().clone();
        return LieSeries::from_series(
            target,
            Series::new(move |d| {
                s.part(d)
                    .iter()
                    .map(|(w, c)| {
                        (
                            w.iter().map(|&l| table[l as usize]).collect::<Word>(),
                            c.clone(),
                        )
                    })
                    .collect()
            }),
        );
    }
    // Go through the word level and re-reduce.
    let fa = f.fa();
    LieSeries::from_series(
        target,
        Series::new(move |d| {
            let mut out = PartMap::new();
            for (w, c) in fa.part(d).iter() {
                let nw: Word = w.iter().map(|&l| table[l as usize]).collect();
                freelie::series::add_to(&mut out, nw, c.clone());
            }
            fa_part_to_lie(&out)
        }),
    )
}

/// Embeds a series into a superset alphabet (by names).
pub fn lie_embed<C: Coeff>(f: &LieSeries<C>, target: &Alphabet) -> LieSeries<C> {
    if f.alphabet() == target {
        return f.clone();
    }
    let table = f.alphabet().embedding(target);
    lie_relabel(f, target.clone(), table)
}

/// Relabels cyclic words; rotation canonicalization is redone in the
/// target alphabet, so any injective table works.
pub fn cw_relabel<C: Coeff>(
    f: &CwSeries<C>,
    target: Alphabet,
    table: Vec<Letter>,
) -> CwSeries<C> {
    assert_eq!(table.len(), f.alphabet().len());
    let s = f.series().clone();
    CwSeries::from_series(
        target,
        Series::new(move |d| {
            let mut out = PartMap::new();
            for (w, c) in s.part(d).iter() {
                let nw: Word = w.letters().iter().map(|&l| table[l as usize]).collect();
                freelie::series::add_to(&mut out, CycWord::canonical(&nw), c.clone());
            }
            out
        }),
    )
}

pub fn cw_embed<C: Coeff>(f: &CwSeries<C>, target: &Alphabet) -> CwSeries<C> {
    if f.alphabet() == target {
        return f.clone();
    }
    let table = f.alphabet().embedding(target);
    cw_relabel(f, target.clone(), table)
}

/// A linear letter substitution: each source letter maps to a (possibly
/// empty) linear combination already expressed in the target alphabet.
/// Covers deletion (empty image), sign flips, renames, merges and
/// doublings uniformly.
pub struct LinearSub<C: Coeff> {
    pub source: Alphabet,
    pub target: Alphabet,
    /// images[l] = list of (target letter, coefficient)
    pub images: Vec<Vec<(Letter, C)>>,
}

impl<C: Coeff> LinearSub<C> {
    /// Builds from named images.
    pub fn new(source: Alphabet, target: Alphabet, map: Vec<(String, Vec<(String, C)>)>) -> Self {
        let mut images: Vec<Option<Vec<(Letter, C)>>> = vec![None; source.len()];
        for (name, img) in map {
            let l = source
                .letter(&name)
                .unwrap_or_else(|| panic!("unknown source letter {name:?}"));
            let img = img
                .into_iter()
                .map(|(n, c)| {
                    (
                        target
                            .letter(&n)
                            .unwrap_or_else(|| panic!("unknown target letter {n:?}")),
                        c,
                    )
                })
                .collect();
            images[l as usize] = Some(img);
        }
        LinearSub {
            source,
            target,
            images: images
                .into_iter()
                .map(|o| o.expect("substitution must cover every source letter"))
                .collect(),
        }
    }

    pub fn as_morphism(&self) -> LieMorphism<C> {
        let images = self
            .source
            .letters()
            .map(|l| {
                let mut acc = LieSeries::zero(self.target.clone());
                for (tl, c) in &self.images[l as usize] {
                    let gen = LieSeries::generator(self.target.clone(), self.target.name(*tl));
                    acc = acc.add(&gen.scale(c));
                }
                (self.source.name(l).to_owned(), acc)
            })
            .collect();
        LieMorphism::new(self.source.clone(), self.target.clone(), images)
    }

    pub fn apply_lie(&self, f: &LieSeries<C>) -> LieSeries<C> {
        assert_eq!(f.alphabet(), &self.source);
        self.as_morphism().apply(f)
    }

    pub fn apply_cw(&self, f: &CwSeries<C>) -> CwSeries<C> {
        assert_eq!(f.alphabet(), &self.source);
        let images = self
            .source
            .letters()
            .map(|l| {
                let mut acc = LieSeries::zero(self.target.clone());
                for (tl, c) in &self.images[l as usize] {
                    let gen = LieSeries::generator(self.target.clone(), self.target.name(*tl));
                    acc = acc.add(&gen.scale(c));
                }
                acc
            })
            .collect();
        cw_substitute(f, images, self.target.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalars::Rational;

    #[test]
    fn non_monotone_relabel_rebuilds_basis() {
        // Rename x->z over {x,y}: [x,y] becomes [z,y] = -[y,z].
        let ab = Alphabet::new(["x", "y"]);
        let target = Alphabet::new(["y", "z"]);
        let x = LieSeries::<Rational>::generator(ab.clone(), "x");
        let y = LieSeries::<Rational>::generator(ab.clone(), "y");
        let b = x.bracket(&y);
        // table: x (letter 0) -> z (letter 1 in target), y (1) -> y (0)
        let out = lie_relabel(&b, target, vec![1, 0]);
        assert_eq!(out.coeff_of("yz"), -Rational::one());
    }

    #[test]
    fn substitution_doubling() {
        // y -> y + z on (xy): yields (xy) + (xz) wheels.
        let ab = Alphabet::new(["x", "y"]);
        let target = Alphabet::new(["x", "y", "z"]);
        let omega = CwSeries::<Rational>::wheel(ab.clone(), "xy");
        let sub = LinearSub::new(
            ab,
            target,
            vec![
                ("x".into(), vec![("x".into(), Rational::one())]),
                (
                    "y".into(),
                    vec![
                        ("y".into(), Rational::one()),
                        ("z".into(), Rational::one()),
                    ],
                ),
            ],
        );
        let out = sub.apply_cw(&omega);
        assert_eq!(out.coeff_of("xy"), Rational::one());
        assert_eq!(out.coeff_of("xz"), Rational::one());
        assert_eq!(out.coeff_of("yz"), Rational::zero());
    }
}
