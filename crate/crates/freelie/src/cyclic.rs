//! Cyclic words ("wheels") and graded series of them. A cyclic word is a
//! nonempty word up to rotation, stored in its canonical rotation (the
//! lexicographically least one); the empty cyclic word is excluded
//! throughout.

use crate::alphabet::{Alphabet, Letter, Word};
use crate::fa::fa_mul;
use crate::lie::LieSeries;
use crate::series::{add_to, PartMap, Series};
use scalars::{Coeff, Rational};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycWord(Word);

impl CycWord {
    /// Canonical representative: the least of all rotations.
    pub fn canonical(w: &[Letter]) -> CycWord {
        assert!(!w.is_empty(), "the empty cyclic word is excluded");
        let n = w.len();
        let mut best: Option<Word> = None;
        for r in 0..n {
            let rotated: Word = w[r..].iter().chain(w[..r].iter()).copied().collect();
            if best.as_ref().map_or(true, |b| rotated < *b) {
                best = Some(rotated);
            }
        }
        CycWord(best.unwrap())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub struct CwSeries<C: Coeff> {
    inner: Arc<CwInner<C>>,
}

struct CwInner<C: Coeff> {
    alphabet: Alphabet,
    s: Series<CycWord, C>,
}

impl<C: Coeff> Clone for CwSeries<C> {
    fn clone(&self) -> Self {
        CwSeries {
            inner: self.inner.clone(),
        }
    }
}

impl<C: Coeff> CwSeries<C> {
    pub fn from_series(alphabet: Alphabet, s: Series<CycWord, C>) -> Self {
        CwSeries {
            inner: Arc::new(CwInner { alphabet, s }),
        }
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        CwSeries::from_series(alphabet, Series::zero())
    }

    /// A single wheel with coefficient one, e.g. `wheel(ab, "xy")`.
    pub fn wheel(alphabet: Alphabet, word: &str) -> Self {
        let w = alphabet
            .parse_word(word)
            .unwrap_or_else(|| panic!("bad cyclic word {word:?}"));
        let cw = CycWord::canonical(&w);
        CwSeries::from_series(
            alphabet,
            Series::single(w.len() as u32, cw, C::one()),
        )
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn series(&self) -> &Series<CycWord, C> {
        &self.inner.s
    }

    pub fn part(&self, d: u32) -> crate::series::Part<CycWord, C> {
        self.inner.s.part(d)
    }

    pub fn coeff(&self, d: u32, w: &CycWord) -> C {
        self.inner.s.coeff(d, w)
    }

    pub fn coeff_of(&self, word: &str) -> C {
        match self.alphabet().parse_word(word) {
            Some(w) if !w.is_empty() => {
                self.coeff(w.len() as u32, &CycWord::canonical(&w))
            }
            _ => C::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_alphabet(other);
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.add(&other.inner.s))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_alphabet(other);
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.sub(&other.inner.s))
    }

    pub fn neg(&self) -> Self {
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.neg())
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.scale_rat(r))
    }

    pub fn scale(&self, c: &C) -> Self {
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.scale(c))
    }

    pub fn degree_scale(&self, h: &Rational) -> Self {
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.degree_scale(h))
    }

    pub fn euler(&self) -> Self {
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.euler())
    }

    pub fn eq_through(&self, other: &Self, max_degree: u32) -> Vec<bool> {
        self.check_alphabet(other);
        self.inner.s.eq_through(&other.inner.s, max_degree)
    }

    pub fn is_zero_through(&self, max_degree: u32) -> bool {
        self.inner.s.is_zero_through(max_degree)
    }

    pub fn force(&self, max_degree: u32) -> Self {
        CwSeries::from_series(self.alphabet().clone(), self.inner.s.force(max_degree))
    }

    fn check_alphabet(&self, other: &Self) {
        assert_eq!(self.alphabet(), other.alphabet(), "alphabet mismatch");
    }

    /// Deterministic pseudo-random wheels, one coefficient in [-2,2] per
    /// canonical cyclic word.
    pub fn random(alphabet: Alphabet, seed: u64) -> Self {
        let k = alphabet.len();
        CwSeries::from_series(
            alphabet,
            Series::new(move |d| {
                let mut out = PartMap::new();
                if d == 0 || k == 0 {
                    return out;
                }
                // Enumerate canonical cyclic words by filtering all words.
                let mut w: Word = Word::from_elem(0, d as usize);
                loop {
                    let cw = CycWord::canonical(&w);
                    if *cw.letters() == *w {
                        let c = crate::random::coeff_for(seed ^ 0xC1C1C1, d, &w);
                        if c != 0 {
                            out.insert(cw, C::from_rat(Rational::from_int(c)));
                        }
                    }
                    // next word in base-k
                    let mut i = w.len();
                    loop {
                        if i == 0 {
                            return out;
                        }
                        i -= 1;
                        if (w[i] as usize) < k - 1 {
                            w[i] += 1;
                            for j in i + 1..w.len() {
                                w[j] = 0;
                            }
                            break;
                        }
                    }
                }
            }),
        )
    }
}

/// Folds a homogeneous word part into cyclic words.
pub fn cyclize_part<C: Coeff>(part: &PartMap<Word, C>) -> PartMap<CycWord, C> {
    let mut out = PartMap::new();
    for (w, c) in part {
        if w.is_empty() {
            continue;
        }
        add_to(&mut out, CycWord::canonical(w), c.clone());
    }
    out
}

/// The closure map sending a product of Lie elements to cyclic words:
/// brackets expand as commutators, the resulting long words close up into
/// wheels. Invariant under cyclic rotation of the factor list.
pub fn cw_from_lie_word<C: Coeff>(factors: &[LieSeries<C>]) -> CwSeries<C> {
    assert!(!factors.is_empty());
    let alphabet = factors[0].alphabet().clone();
    for f in factors {
        assert_eq!(f.alphabet(), &alphabet, "alphabet mismatch");
    }
    let mut prod = factors[0].fa();
    for f in &factors[1..] {
        prod = fa_mul(&prod, &f.fa());
    }
    CwSeries::from_series(
        alphabet,
        Series::new(move |d| cyclize_part(&prod.part(d))),
    )
}

/// Substitutes each letter by the word-level expansion of its image and
/// closes back up. This is how algebra endomorphisms (and linear
/// substitutions) act on wheels; it is well defined because rotating the
/// representative only rotates the block product.
pub fn cw_substitute<C: Coeff>(
    omega: &CwSeries<C>,
    images: Vec<LieSeries<C>>,
    target: Alphabet,
) -> CwSeries<C> {
    assert_eq!(images.len(), omega.alphabet().len(), "need one image per letter");
    for img in &images {
        assert_eq!(img.alphabet(), &target);
    }
    let omega = omega.clone();
    let cache: Mutex<HashMap<CycWord, Series<Word, C>>> = Mutex::new(HashMap::new());
    CwSeries::from_series(
        target,
        Series::new(move |d| {
            let mut out = PartMap::new();
            for k in 1..=d {
                let part = omega.part(k);
                for (cw, c) in part.iter() {
                    let prod = {
                        let mut cache = cache.lock().unwrap();
                        cache
                            .entry(cw.clone())
                            .or_insert_with(|| {
                                let mut prod: Option<Series<Word, C>> = None;
                                for &l in cw.letters() {
                                    let img = images[l as usize].fa();
                                    prod = Some(match prod {
                                        None => img,
                                        Some(p) => fa_mul(&p, &img),
                                    });
                                }
                                prod.unwrap()
                            })
                            .clone()
                    };
                    for (w, pc) in cyclize_part(&prod.part(d)) {
                        add_to(&mut out, w, pc.mul(c));
                    }
                }
            }
            out
        }),
    )
}

/// A derivation acting on wheels: each letter position is replaced in turn
/// by the word-level expansion of the letter's derivative.
pub fn cw_derive<C: Coeff>(
    omega: &CwSeries<C>,
    derivative_of_letter: Vec<LieSeries<C>>,
) -> CwSeries<C> {
    let alphabet = omega.alphabet().clone();
    assert_eq!(derivative_of_letter.len(), alphabet.len());
    for img in &derivative_of_letter {
        assert_eq!(img.alphabet(), &alphabet);
    }
    let omega = omega.clone();
    CwSeries::from_series(
        alphabet,
        Series::new(move |d| {
            let mut out = PartMap::new();
            for k in 1..=d {
                let part = omega.part(k);
                for (cw, c) in part.iter() {
                    let letters = cw.letters();
                    for i in 0..letters.len() {
                        let df = derivative_of_letter[letters[i] as usize].fa();
                        // degree of the replacement block
                        let block = d - (k - 1);
                        for (w, pc) in df.part(block).iter() {
                            let mut full = Word::from_slice(&letters[..i]);
                            full.extend_from_slice(w);
                            full.extend_from_slice(&letters[i + 1..]);
                            add_to(&mut out, CycWord::canonical(&full), pc.mul(c));
                        }
                    }
                }
            }
            out
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rotation() {
        // yxy -> xyy
        let cw = CycWord::canonical(&[1, 0, 1]);
        assert_eq!(cw.letters(), &[0, 1, 1]);
        // all rotations agree
        for rot in [[0u16, 1, 1], [1, 1, 0], [1, 0, 1]] {
            assert_eq!(CycWord::canonical(&rot), cw);
        }
    }

    #[test]
    fn closure_of_a_bracket_word() {
        // w(u[v,w]) = (uvw) - (uwv) over {u,v,w}
        let ab = Alphabet::new(["u", "v", "w"]);
        let u = LieSeries::<Rational>::generator(ab.clone(), "u");
        let v = LieSeries::<Rational>::generator(ab.clone(), "v");
        let w = LieSeries::<Rational>::generator(ab.clone(), "w");
        let omega = cw_from_lie_word(&[u.clone(), v.bracket(&w)]);
        assert_eq!(omega.coeff_of("uvw"), Rational::one());
        assert_eq!(omega.coeff_of("uwv"), -Rational::one());
        // w(u) = (u); w([u,u] v) = 0
        let single = cw_from_lie_word(&[u.clone()]);
        assert_eq!(single.coeff_of("u"), Rational::one());
        let zero = cw_from_lie_word(&[u.bracket(&u), v]);
        assert!(zero.is_zero_through(6));
    }

    #[test]
    fn substitution_is_rotation_invariant() {
        let ab = Alphabet::new(["x", "y"]);
        let x = LieSeries::<Rational>::generator(ab.clone(), "x");
        let y = LieSeries::<Rational>::generator(ab.clone(), "y");
        // y -> y + x: (xy) -> (xy) + (xx)
        let omega = CwSeries::<Rational>::wheel(ab.clone(), "xy");
        let out = cw_substitute(&omega, vec![x.clone(), y.add(&x)], ab.clone());
        assert_eq!(out.coeff_of("xy"), Rational::one());
        assert_eq!(out.coeff_of("xx"), Rational::one());
    }
}
