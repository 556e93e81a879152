//! The degree-completed free Lie algebra on a generator alphabet, with
//! per-degree coefficients on the Lyndon basis. A series is lazy: parts are
//! produced on demand and memoized, so elements extend indefinitely.

use crate::alphabet::{Alphabet, Letter, Word};
use crate::fa::{fa_exp, fa_log, fa_mul, fa_part_to_lie, lie_part_to_fa};
use crate::lyndon::{lyndon_words, std_factorization};
use crate::random::coeff_for;
use crate::series::{add_to, PartMap, Series};
use once_cell::sync::{Lazy, OnceCell};
use scalars::{Coeff, Rational};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct LieSeries<C: Coeff> {
    inner: Arc<LieInner<C>>,
}

struct LieInner<C: Coeff> {
    alphabet: Alphabet,
    s: Series<Word, C>,
    fa: OnceCell<Series<Word, C>>,
}

impl<C: Coeff> Clone for LieSeries<C> {
    fn clone(&self) -> Self {
        LieSeries {
            inner: self.inner.clone(),
        }
    }
}

impl<C: Coeff> LieSeries<C> {
    pub fn from_series(alphabet: Alphabet, s: Series<Word, C>) -> Self {
        LieSeries {
            inner: Arc::new(LieInner {
                alphabet,
                s,
                fa: OnceCell::new(),
            }),
        }
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        LieSeries::from_series(alphabet, Series::zero())
    }

    pub fn generator(alphabet: Alphabet, name: &str) -> Self {
        let l = alphabet
            .letter(name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"));
        let mut w = Word::new();
        w.push(l);
        LieSeries::from_series(alphabet, Series::single(1, w, C::one()))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn series(&self) -> &Series<Word, C> {
        &self.inner.s
    }

    pub fn part(&self, d: u32) -> crate::series::Part<Word, C> {
        self.inner.s.part(d)
    }

    pub fn coeff(&self, d: u32, w: &Word) -> C {
        self.inner.s.coeff(d, w)
    }

    /// The coefficient of the Lyndon word given by name string.
    pub fn coeff_of(&self, word: &str) -> C {
        match self.alphabet().parse_word(word) {
            Some(w) => self.coeff(w.len() as u32, &w),
            None => C::zero(),
        }
    }

    /// Word-level (free associative) image, cached per series.
    pub fn fa(&self) -> Series<Word, C> {
        self.inner
            .fa
            .get_or_init(|| {
                let s = self.inner.s.clone();
                Series::new(move |d| lie_part_to_fa(&s.part(d)))
            })
            .clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_alphabet(other);
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.add(&other.inner.s))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_alphabet(other);
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.sub(&other.inner.s))
    }

    pub fn neg(&self) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.neg())
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.scale_rat(r))
    }

    pub fn scale(&self, c: &C) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.scale(c))
    }

    pub fn degree_scale(&self, h: &Rational) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.degree_scale(h))
    }

    pub fn euler(&self) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.euler())
    }

    pub fn eq_through(&self, other: &Self, max_degree: u32) -> Vec<bool> {
        self.check_alphabet(other);
        self.inner.s.eq_through(&other.inner.s, max_degree)
    }

    pub fn is_zero_through(&self, max_degree: u32) -> bool {
        self.inner.s.is_zero_through(max_degree)
    }

    /// Restrict to degrees where `keep` holds.
    pub fn filter_degrees(&self, keep: impl Fn(u32) -> bool + Send + Sync + 'static) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.filter_degrees(keep))
    }

    pub fn force(&self, max_degree: u32) -> Self {
        LieSeries::from_series(self.alphabet().clone(), self.inner.s.force(max_degree))
    }

    fn check_alphabet(&self, other: &Self) {
        assert_eq!(
            self.alphabet(),
            other.alphabet(),
            "alphabet mismatch between series"
        );
    }

    /// Lie bracket, computed word-level and reduced to the basis.
    pub fn bracket(&self, other: &Self) -> Self {
        self.check_alphabet(other);
        let fa = self.fa();
        let fb = other.fa();
        let ab = fa_mul(&fa, &fb);
        let ba = fa_mul(&fb, &fa);
        let comm = ab.sub(&ba);
        LieSeries::from_series(
            self.alphabet().clone(),
            Series::new(move |d| fa_part_to_lie(&comm.part(d))),
        )
    }

    /// log(e^self e^other), via the word-level exponentials.
    pub fn bch(&self, other: &Self) -> Self {
        self.check_alphabet(other);
        let prod = fa_mul(&fa_exp(&self.fa()), &fa_exp(&other.fa()));
        let log = fa_log(&prod);
        LieSeries::from_series(
            self.alphabet().clone(),
            Series::new(move |d| fa_part_to_lie(&log.part(d))),
        )
    }

    /// Deterministic pseudo-random series: per (seed, degree, word) the
    /// coefficient is an integer in [-2, 2], drawn from a splitmix64 hash.
    /// Supported in every degree >= 1.
    pub fn random(alphabet: Alphabet, seed: u64) -> Self {
        let k = alphabet.len();
        LieSeries::from_series(
            alphabet.clone(),
            Series::new(move |d| {
                let mut out = PartMap::new();
                if d == 0 {
                    return out;
                }
                for w in lyndon_words(k, d as usize) {
                    let c = coeff_for(seed, d, &w);
                    if c != 0 {
                        out.insert(w, C::from_rat(Rational::from_int(c)));
                    }
                }
                out
            }),
        )
    }
}

/// A formal bracket expression over named generators, the input form of
/// basis normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Gen(String),
    Br(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn gen(name: &str) -> Self {
        BracketTree::Gen(name.to_owned())
    }

    pub fn br(a: BracketTree, b: BracketTree) -> Self {
        BracketTree::Br(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> u32 {
        match self {
            BracketTree::Gen(_) => 1,
            BracketTree::Br(a, b) => a.degree() + b.degree(),
        }
    }

    fn expand_fa<C: Coeff>(&self, alphabet: &Alphabet) -> crate::fa::FaPart<C> {
        match self {
            BracketTree::Gen(name) => {
                let l = alphabet
                    .letter(name)
                    .unwrap_or_else(|| panic!("unknown generator {name:?}"));
                let mut part = PartMap::new();
                let mut w = Word::new();
                w.push(l);
                part.insert(w, C::one());
                part
            }
            BracketTree::Br(a, b) => {
                let fa = a.expand_fa::<C>(alphabet);
                let fb = b.expand_fa::<C>(alphabet);
                let mut out = crate::fa::fa_mul_part(&fa, &fb);
                for (k, c) in crate::fa::fa_mul_part(&fb, &fa) {
                    add_to(&mut out, k, c.neg());
                }
                out
            }
        }
    }

    /// Normalizes the expression into the Lyndon basis. The result equals
    /// the input modulo antisymmetry and Jacobi; basis brackets map to
    /// themselves.
    pub fn to_basis<C: Coeff>(&self, alphabet: &Alphabet) -> LieSeries<C> {
        let degree = self.degree();
        let part = fa_part_to_lie(&self.expand_fa::<C>(alphabet));
        let mut parts = std::collections::BTreeMap::new();
        parts.insert(degree, part);
        LieSeries::from_series(alphabet.clone(), Series::from_parts(parts))
    }
}

/// The standard bracketing of a Lyndon word as a bracket tree.
pub fn standard_bracketing(alphabet: &Alphabet, w: &[Letter]) -> BracketTree {
    if w.len() == 1 {
        BracketTree::gen(alphabet.name(w[0]))
    } else {
        let (u, v) = std_factorization(w);
        BracketTree::br(
            standard_bracketing(alphabet, &u),
            standard_bracketing(alphabet, &v),
        )
    }
}

/// A map of generators to series in a (possibly different) alphabet,
/// extended as a Lie morphism. Images of basis words are cached.
pub struct LieMorphism<C: Coeff> {
    inner: Arc<MorphismInner<C>>,
}

struct MorphismInner<C: Coeff> {
    source: Alphabet,
    target: Alphabet,
    images: Vec<LieSeries<C>>,
    word_cache: Mutex<HashMap<Word, LieSeries<C>>>,
}

impl<C: Coeff> Clone for LieMorphism<C> {
    fn clone(&self) -> Self {
        LieMorphism {
            inner: self.inner.clone(),
        }
    }
}

impl<C: Coeff> LieMorphism<C> {
    /// Builds a morphism from named generator images. Every source
    /// generator must be covered.
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<(String, LieSeries<C>)>) -> Self {
        let mut by_letter: Vec<Option<LieSeries<C>>> = vec![None; source.len()];
        for (name, img) in images {
            let l = source
                .letter(&name)
                .unwrap_or_else(|| panic!("image given for unknown generator {name:?}"));
            assert_eq!(img.alphabet(), &target, "image in wrong alphabet");
            by_letter[l as usize] = Some(img);
        }
        let images = by_letter
            .into_iter()
            .enumerate()
            .map(|(l, img)| {
                img.unwrap_or_else(|| panic!("no image for generator {:?}", source.name(l as Letter)))
            })
            .collect();
        LieMorphism {
            inner: Arc::new(MorphismInner {
                source,
                target,
                images,
                word_cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn source(&self) -> &Alphabet {
        &self.inner.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.inner.target
    }

    pub fn image_of_letter(&self, l: Letter) -> LieSeries<C> {
        self.inner.images[l as usize].clone()
    }

    /// Image of the basis bracket of a Lyndon word.
    pub fn image_of_word(&self, w: &Word) -> LieSeries<C> {
        if let Some(s) = self.inner.word_cache.lock().unwrap().get(w) {
            return s.clone();
        }
        let img = if w.len() == 1 {
            self.image_of_letter(w[0])
        } else {
            let (u, v) = std_factorization(w);
            self.image_of_word(&u).bracket(&self.image_of_word(&v))
        };
        self.inner
            .word_cache
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert(img)
            .clone()
    }

    /// The unique Lie-morphism extension applied to a series.
    pub fn apply(&self, f: &LieSeries<C>) -> LieSeries<C> {
        assert_eq!(f.alphabet(), self.source(), "series not over source alphabet");
        let m = self.clone();
        let f = f.clone();
        LieSeries::from_series(
            self.target().clone(),
            Series::new(move |d| {
                let mut out = PartMap::new();
                for k in 1..=d {
                    for (w, c) in f.part(k).iter() {
                        let img = m.image_of_word(w);
                        for (kw, kc) in img.part(d).iter() {
                            add_to(&mut out, kw.clone(), kc.mul(c));
                        }
                    }
                }
                out
            }),
        )
    }

    /// image(basis word) - basis word, in the common alphabet. Only
    /// meaningful for endomorphisms whose images start with the identity.
    fn image_minus_id(&self, w: &Word) -> LieSeries<C> {
        let id_part = LieSeries::from_series(
            self.target().clone(),
            Series::single(w.len() as u32, w.clone(), C::one()),
        );
        self.image_of_word(w).sub(&id_part)
    }

    /// Inverse of a unipotent endomorphism (every image is the generator
    /// plus higher-degree terms), computed degree by degree.
    pub fn inverse_apply(&self, f: &LieSeries<C>) -> LieSeries<C> {
        assert_eq!(self.source(), self.target(), "inverse needs an endomorphism");
        assert_eq!(f.alphabet(), self.source());
        let m = self.clone();
        let f = f.clone();
        let alphabet = self.source().clone();
        LieSeries::from_series(
            alphabet,
            Series::recursive(move |g, d| {
                let mut out = (*f.part(d)).clone();
                for k in 1..d {
                    for (w, c) in g.part(k).iter() {
                        let delta = m.image_minus_id(w);
                        for (kw, kc) in delta.part(d).iter() {
                            add_to(&mut out, kw.clone(), kc.mul(c).neg());
                        }
                    }
                }
                out
            }),
        )
    }

    /// The inverse endomorphism as a morphism (generator images solved
    /// lazily).
    pub fn inverse(&self) -> LieMorphism<C> {
        let images = self
            .source()
            .letters()
            .map(|l| {
                let gen = LieSeries::generator(self.source().clone(), self.source().name(l));
                (
                    self.source().name(l).to_owned(),
                    self.inverse_apply(&gen),
                )
            })
            .collect();
        LieMorphism::new(self.source().clone(), self.source().clone(), images)
    }

    /// Identity morphism.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = alphabet
            .letters()
            .map(|l| {
                (
                    alphabet.name(l).to_owned(),
                    LieSeries::generator(alphabet.clone(), alphabet.name(l)),
                )
            })
            .collect();
        LieMorphism::new(alphabet.clone(), alphabet.clone(), images)
    }
}

/// The universal BCH series on two generators, cached per degree in basis
/// form over the two-letter alphabet (letters 0, 1).
static BCH_TEMPLATE: Lazy<Mutex<HashMap<u32, Arc<PartMap<Word, Rational>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn bch_template_series() -> LieSeries<Rational> {
    static TEMPLATE: Lazy<LieSeries<Rational>> = Lazy::new(|| {
        let ab = Alphabet::new(["0", "1"]);
        let x = LieSeries::<Rational>::generator(ab.clone(), "0");
        let y = LieSeries::<Rational>::generator(ab, "1");
        x.bch(&y)
    });
    TEMPLATE.clone()
}

pub fn bch_template_part(d: u32) -> Arc<PartMap<Word, Rational>> {
    if let Some(p) = BCH_TEMPLATE.lock().unwrap().get(&d) {
        return p.clone();
    }
    let part = bch_template_series().part(d);
    BCH_TEMPLATE.lock().unwrap().insert(d, part.clone());
    part
}

/// Evaluates the universal BCH series in any graded Lie structure: the
/// caller supplies the two arguments and a bracket, all lazy. `E` must be
/// cheap to clone (an Arc-backed series type).
pub fn bch_generic<E: Clone>(
    x: &E,
    y: &E,
    add: impl Fn(&E, &E) -> E,
    scale: impl Fn(&E, &Rational) -> E,
    bracket: impl Fn(&E, &E) -> E,
    zero: E,
    max_template_degree: u32,
) -> E {
    // Evaluate basis words with memoization; template degree k terms start
    // at degree k, so callers truncating at degree d only need k <= d.
    let mut word_values: HashMap<Word, E> = HashMap::new();
    let mut acc = zero;
    for k in 1..=max_template_degree {
        for (w, c) in bch_template_part(k).iter() {
            let val = eval_word(w, x, y, &bracket, &mut word_values);
            acc = add(&acc, &scale(&val, c));
        }
    }
    acc
}

fn eval_word<E: Clone>(
    w: &Word,
    x: &E,
    y: &E,
    bracket: &impl Fn(&E, &E) -> E,
    cache: &mut HashMap<Word, E>,
) -> E {
    if let Some(v) = cache.get(w) {
        return v.clone();
    }
    let val = if w.len() == 1 {
        if w[0] == 0 {
            x.clone()
        } else {
            y.clone()
        }
    } else {
        let (u, v) = std_factorization(w);
        let a = eval_word(&u, x, y, bracket, cache);
        let b = eval_word(&v, x, y, bracket, cache);
        bracket(&a, &b)
    };
    cache.insert(w.clone(), val.clone());
    val
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Alphabet, LieSeries<Rational>, LieSeries<Rational>) {
        let ab = Alphabet::new(["x", "y"]);
        let x = LieSeries::generator(ab.clone(), "x");
        let y = LieSeries::generator(ab.clone(), "y");
        (ab, x, y)
    }

    #[test]
    fn bracket_of_generators() {
        let (ab, x, y) = xy();
        let b = x.bracket(&y);
        assert_eq!(b.coeff_of("xy"), Rational::one());
        assert!(b.part(1).is_empty());
        assert!(b.part(3).is_empty());
        let _ = ab;
    }

    #[test]
    fn antisymmetry_to_basis() {
        let (ab, _, _) = xy();
        // [y, x] -> -<xy>, [x, x] -> 0
        let t = BracketTree::br(BracketTree::gen("y"), BracketTree::gen("x"));
        let s: LieSeries<Rational> = t.to_basis(&ab);
        assert_eq!(s.coeff_of("xy"), -Rational::one());
        let t = BracketTree::br(BracketTree::gen("x"), BracketTree::gen("x"));
        let s: LieSeries<Rational> = t.to_basis(&ab);
        assert!(s.is_zero_through(4));
    }

    #[test]
    fn bch_low_degrees_match_classical_values() {
        let (_, x, y) = xy();
        let z = x.bch(&y);
        assert_eq!(z.coeff_of("x"), Rational::one());
        assert_eq!(z.coeff_of("y"), Rational::one());
        assert_eq!(z.coeff_of("xy"), Rational::ratio(1, 2));
        assert_eq!(z.coeff_of("xxy"), Rational::ratio(1, 12));
        assert_eq!(z.coeff_of("xyy"), Rational::ratio(1, 12));
        // Degree 4: -[y,[x,[x,y]]]/24 = +[x,[[x,y],y]]/24 in the basis.
        assert_eq!(z.coeff_of("xxyy"), Rational::ratio(1, 24));
        assert_eq!(z.coeff_of("xxxy"), Rational::zero());
        assert_eq!(z.coeff_of("xyyy"), Rational::zero());
    }

    #[test]
    fn bch_with_inverse_vanishes() {
        let (_, x, _) = xy();
        let z = x.bch(&x.neg());
        assert!(z.is_zero_through(8));
    }

    #[test]
    fn jacobi_on_sample_series() {
        // alpha = x+[x,y], beta = y-[x,[x,y]], gamma = x+y-2[x,y]
        let (ab, x, y) = xy();
        let xy = x.bracket(&y);
        let alpha = x.add(&xy);
        let beta = y.sub(&x.bracket(&xy));
        let gamma = x.add(&y).sub(&xy.scale_rat(&Rational::from_int(2)));
        let j = alpha
            .bracket(&beta.bracket(&gamma))
            .add(&beta.bracket(&gamma.bracket(&alpha)))
            .add(&gamma.bracket(&alpha.bracket(&beta)));
        assert!(j.is_zero_through(8));
        let _ = ab;
    }

    #[test]
    fn substitution_is_a_morphism() {
        let (ab, x, y) = xy();
        let abc = Alphabet::new(["x", "y", "z"]);
        let xm = LieSeries::<Rational>::generator(abc.clone(), "x");
        let ym = LieSeries::<Rational>::generator(abc.clone(), "y");
        let zm = LieSeries::<Rational>::generator(abc.clone(), "z");
        // y -> y+z
        let m = LieMorphism::new(
            ab.clone(),
            abc.clone(),
            vec![("x".into(), xm), ("y".into(), ym.add(&zm))],
        );
        let img = m.apply(&x.bracket(&y));
        assert_eq!(img.coeff_of("xy"), Rational::one());
        assert_eq!(img.coeff_of("xz"), Rational::one());
        // Morphism property on a bracket.
        let lhs = m.apply(&x.bracket(&y).bracket(&y));
        let rhs = m.apply(&x.bracket(&y)).bracket(&m.apply(&y));
        assert!(lhs.sub(&rhs).is_zero_through(6));
    }

    #[test]
    fn unipotent_inverse() {
        let (ab, x, y) = xy();
        // x -> x + [x,y], y -> y is unipotent.
        let m = LieMorphism::new(
            ab.clone(),
            ab.clone(),
            vec![("x".into(), x.add(&x.bracket(&y))), ("y".into(), y.clone())],
        );
        let f = LieSeries::random(ab, 7);
        let round = m.inverse_apply(&m.apply(&f));
        assert!(round.sub(&f).is_zero_through(8));
    }

    #[test]
    fn generic_bch_matches_word_level_bch() {
        let (_, x, y) = xy();
        let direct = x.bch(&y);
        let generic = bch_generic(
            &x,
            &y,
            |a, b| a.add(b),
            |a, r| a.scale_rat(r),
            |a, b| a.bracket(b),
            LieSeries::zero(x.alphabet().clone()),
            8,
        );
        assert!(direct.sub(&generic).is_zero_through(8));
    }
}
