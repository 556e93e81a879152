//! Tangential derivations and their calculus: the map assigning to each
//! generator family λ the derivation a ↦ [a, λ_a], the bracket that makes
//! λ-space a Lie algebra over these, BCH relative to that bracket,
//! conjugation automorphisms and their inverses, and the mutually inverse
//! ODE-defined maps relating exp(-∂_λ) to conjugations.

use crate::alphabet::{Alphabet, Letter, Word};
use crate::bernoulli::todd_minus;
use crate::cyclic::{cw_derive, cw_substitute, CwSeries};
use crate::lie::{bch_template_part, LieMorphism, LieSeries};
use crate::lyndon::std_factorization;
use crate::series::{PartMap, Series};
use scalars::{Coeff, Poly, Rational};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

/// A total map from generators to Lie series over the same alphabet: the
/// data (a → λ_a) of a tangential derivation plus its central part.
pub struct TangentMap<C: Coeff> {
    inner: Arc<TmInner<C>>,
}

struct TmInner<C: Coeff> {
    alphabet: Alphabet,
    images: Vec<LieSeries<C>>,
}

impl<C: Coeff> Clone for TangentMap<C> {
    fn clone(&self) -> Self {
        TangentMap {
            inner: self.inner.clone(),
        }
    }
}

impl<C: Coeff> TangentMap<C> {
    pub fn new(alphabet: Alphabet, entries: Vec<(String, LieSeries<C>)>) -> Self {
        let mut by_letter: Vec<Option<LieSeries<C>>> = vec![None; alphabet.len()];
        for (name, img) in entries {
            let l = alphabet
                .letter(&name)
                .unwrap_or_else(|| panic!("unknown generator {name:?}"));
            assert_eq!(img.alphabet(), &alphabet, "component in wrong alphabet");
            by_letter[l as usize] = Some(img);
        }
        let images = by_letter
            .into_iter()
            .map(|o| o.expect("tangent map must be total on the alphabet"))
            .collect();
        TangentMap {
            inner: Arc::new(TmInner { alphabet, images }),
        }
    }

    pub fn from_images(alphabet: Alphabet, images: Vec<LieSeries<C>>) -> Self {
        assert_eq!(images.len(), alphabet.len());
        for img in &images {
            assert_eq!(img.alphabet(), &alphabet);
        }
        TangentMap {
            inner: Arc::new(TmInner { alphabet, images }),
        }
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        let images = (0..alphabet.len())
            .map(|_| LieSeries::zero(alphabet.clone()))
            .collect();
        TangentMap::from_images(alphabet, images)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.inner.alphabet
    }

    pub fn image(&self, l: Letter) -> &LieSeries<C> {
        &self.inner.images[l as usize]
    }

    pub fn images(&self) -> &[LieSeries<C>] {
        &self.inner.images
    }

    pub fn get(&self, name: &str) -> &LieSeries<C> {
        let l = self
            .alphabet()
            .letter(name)
            .unwrap_or_else(|| panic!("unknown generator {name:?}"));
        self.image(l)
    }

    pub fn map_components(&self, f: impl Fn(&LieSeries<C>) -> LieSeries<C>) -> Self {
        TangentMap::from_images(
            self.alphabet().clone(),
            self.inner.images.iter().map(f).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        TangentMap::from_images(
            self.alphabet().clone(),
            self.inner
                .images
                .iter()
                .zip(&other.inner.images)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_components(|s| s.neg())
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        let r = r.clone();
        self.map_components(move |s| s.scale_rat(&r))
    }

    pub fn degree_scale(&self, h: &Rational) -> Self {
        let h = h.clone();
        self.map_components(move |s| s.degree_scale(&h))
    }

    pub fn eq_through(&self, other: &Self, max_degree: u32) -> bool {
        self.check(other);
        self.inner
            .images
            .iter()
            .zip(&other.inner.images)
            .all(|(a, b)| a.eq_through(b, max_degree).iter().all(|&t| t))
    }

    pub fn is_zero_through(&self, max_degree: u32) -> bool {
        self.inner.images.iter().all(|s| s.is_zero_through(max_degree))
    }

    pub fn force(&self, max_degree: u32) -> Self {
        self.map_components(|s| s.force(max_degree))
    }

    pub fn random(alphabet: Alphabet, seed: u64) -> Self {
        let images = alphabet
            .letters()
            .map(|l| LieSeries::random(alphabet.clone(), seed.wrapping_add(1 + l as u64 * 0x9e37)))
            .collect();
        TangentMap::from_images(alphabet, images)
    }

    /// The central component: the coefficient of the generator a in λ_a,
    /// per letter. The derivation map kills exactly this part.
    pub fn central_coeff(&self, l: Letter) -> C {
        let mut w = Word::new();
        w.push(l);
        self.image(l).coeff(1, &w)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.alphabet(), other.alphabet(), "alphabet mismatch");
    }
}

/// A derivation of the free Lie algebra given by its generator images,
/// with cached derivatives of basis words. Extends to wheels through the
/// word-level action.
pub struct Derivation<C: Coeff> {
    inner: Arc<DerivInner<C>>,
}

struct DerivInner<C: Coeff> {
    alphabet: Alphabet,
    images: Vec<LieSeries<C>>,
    cache: Mutex<HashMap<Word, LieSeries<C>>>,
}

impl<C: Coeff> Clone for Derivation<C> {
    fn clone(&self) -> Self {
        Derivation {
            inner: self.inner.clone(),
        }
    }
}

impl<C: Coeff> Derivation<C> {
    pub fn new(alphabet: Alphabet, images: Vec<LieSeries<C>>) -> Self {
        assert_eq!(images.len(), alphabet.len());
        Derivation {
            inner: Arc::new(DerivInner {
                alphabet,
                images,
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// The tangential derivation of λ: a ↦ [a, λ_a].
    pub fn tangential(lambda: &TangentMap<C>) -> Self {
        let alphabet = lambda.alphabet().clone();
        let images = alphabet
            .letters()
            .map(|l| {
                let gen = LieSeries::generator(alphabet.clone(), alphabet.name(l));
                gen.bracket(lambda.image(l))
            })
            .collect();
        Derivation::new(alphabet, images)
    }

    pub fn letter_image(&self, l: Letter) -> &LieSeries<C> {
        &self.inner.images[l as usize]
    }

    fn word_derivative(&self, w: &Word) -> LieSeries<C> {
        if let Some(s) = self.inner.cache.lock().unwrap().get(w) {
            return s.clone();
        }
        let val = if w.len() == 1 {
            self.letter_image(w[0]).clone()
        } else {
            let (u, v) = std_factorization(w);
            let bu = basis_word_series(&self.inner.alphabet, &u);
            let bv = basis_word_series(&self.inner.alphabet, &v);
            self.word_derivative(&u)
                .bracket(&bv)
                .add(&bu.bracket(&self.word_derivative(&v)))
        };
        self.inner
            .cache
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert(val)
            .clone()
    }

    pub fn apply_lie(&self, f: &LieSeries<C>) -> LieSeries<C> {
        assert_eq!(f.alphabet(), &self.inner.alphabet);
        let this = self.clone();
        let f = f.clone();
        LieSeries::from_series(
            self.inner.alphabet.clone(),
            Series::new(move |d| {
                let mut out = PartMap::new();
                for k in 1..=d {
                    for (w, c) in f.part(k).iter() {
                        let dw = this.word_derivative(w);
                        for (kw, kc) in dw.part(d).iter() {
                            crate::series::add_to(&mut out, kw.clone(), kc.mul(c));
                        }
                    }
                }
                out
            }),
        )
    }

    pub fn apply_cw(&self, omega: &CwSeries<C>) -> CwSeries<C> {
        assert_eq!(omega.alphabet(), &self.inner.alphabet);
        cw_derive(omega, self.inner.images.clone())
    }

    pub fn apply_map(&self, mu: &TangentMap<C>) -> TangentMap<C> {
        mu.map_components(|s| self.apply_lie(s))
    }
}

pub fn basis_word_series<C: Coeff>(alphabet: &Alphabet, w: &Word) -> LieSeries<C> {
    LieSeries::from_series(
        alphabet.clone(),
        Series::single(w.len() as u32, w.clone(), C::one()),
    )
}

/// Generic degree-raising operator series sum c_k O^k(f). The operator
/// must raise degree by at least one per application.
pub fn operator_series_lie<C: Coeff>(
    coeff: impl Fn(u32) -> C + Send + Sync + 'static,
    op: impl Fn(&LieSeries<C>) -> LieSeries<C> + Send + Sync + 'static,
    f: &LieSeries<C>,
) -> LieSeries<C> {
    let alphabet = f.alphabet().clone();
    let powers: Mutex<Vec<LieSeries<C>>> = Mutex::new(vec![f.clone()]);
    let s = Series::sum_bounded(move |k| {
        let mut powers = powers.lock().unwrap();
        while powers.len() <= k as usize {
            let next = op(powers.last().unwrap());
            powers.push(next);
        }
        powers[k as usize].scale(&coeff(k)).series().clone()
    });
    LieSeries::from_series(alphabet, s)
}

pub fn operator_series_cw<C: Coeff>(
    coeff: impl Fn(u32) -> C + Send + Sync + 'static,
    op: impl Fn(&CwSeries<C>) -> CwSeries<C> + Send + Sync + 'static,
    f: &CwSeries<C>,
) -> CwSeries<C> {
    let alphabet = f.alphabet().clone();
    let powers: Mutex<Vec<CwSeries<C>>> = Mutex::new(vec![f.clone()]);
    let s = Series::sum_bounded(move |k| {
        let mut powers = powers.lock().unwrap();
        while powers.len() <= k as usize {
            let next = op(powers.last().unwrap());
            powers.push(next);
        }
        powers[k as usize].scale(&coeff(k)).series().clone()
    });
    CwSeries::from_series(alphabet, s)
}

fn recip_factorial(k: u32) -> Rational {
    let mut f = Rational::one();
    for i in 1..=k as i64 {
        f = f * Rational::from_int(i);
    }
    f.recip()
}

/// e^{c ∂_λ}(f) on Lie series.
pub fn exp_tder_lie<C: Coeff>(
    lambda: &TangentMap<C>,
    c: &Rational,
    f: &LieSeries<C>,
) -> LieSeries<C> {
    let d = Derivation::tangential(lambda);
    let c = c.clone();
    operator_series_lie(
        move |k| C::from_rat(c.pow(k).mul_rat(&recip_factorial(k))),
        move |g| d.apply_lie(g),
        f,
    )
}

/// e^{c ∂_λ}(ω) on wheels.
pub fn exp_tder_cw<C: Coeff>(
    lambda: &TangentMap<C>,
    c: &Rational,
    omega: &CwSeries<C>,
) -> CwSeries<C> {
    let d = Derivation::tangential(lambda);
    let c = c.clone();
    operator_series_cw(
        move |k| C::from_rat(c.pow(k).mul_rat(&recip_factorial(k))),
        move |g| d.apply_cw(g),
        omega,
    )
}

impl<C: Coeff> TangentMap<C> {
    /// ∂_λ applied to a Lie series.
    pub fn derive_lie(&self, f: &LieSeries<C>) -> LieSeries<C> {
        Derivation::tangential(self).apply_lie(f)
    }

    /// ∂_λ applied to wheels.
    pub fn derive_cw(&self, omega: &CwSeries<C>) -> CwSeries<C> {
        Derivation::tangential(self).apply_cw(omega)
    }

    /// The bracket making the split sequence A ⊕ tder a Lie algebra:
    /// [λ1, λ2] + ∂_{λ1}λ2 − ∂_{λ2}λ1, componentwise plain bracket first.
    pub fn tb(&self, other: &Self) -> Self {
        self.check(other);
        let pointwise = TangentMap::from_images(
            self.alphabet().clone(),
            self.inner
                .images
                .iter()
                .zip(&other.inner.images)
                .map(|(a, b)| a.bracket(b))
                .collect(),
        );
        let d1 = Derivation::tangential(self);
        let d2 = Derivation::tangential(other);
        pointwise
            .add(&d1.apply_map(other))
            .sub(&d2.apply_map(self))
    }
}

/// BCH with the tangential bracket in place of the plain one, evaluated
/// lazily from the universal two-letter series.
pub fn bch_tb<C: Coeff>(x: &TangentMap<C>, y: &TangentMap<C>) -> TangentMap<C> {
    assert_eq!(x.alphabet(), y.alphabet());
    struct State<C: Coeff> {
        x: TangentMap<C>,
        y: TangentMap<C>,
        words: Mutex<HashMap<Word, TangentMap<C>>>,
        terms: Mutex<HashMap<u32, TangentMap<C>>>,
    }
    impl<C: Coeff> State<C> {
        fn eval(&self, w: &Word) -> TangentMap<C> {
            if let Some(v) = self.words.lock().unwrap().get(w) {
                return v.clone();
            }
            let val = if w.len() == 1 {
                if w[0] == 0 {
                    self.x.clone()
                } else {
                    self.y.clone()
                }
            } else {
                let (u, v) = std_factorization(w);
                self.eval(&u).tb(&self.eval(&v))
            };
            self.words
                .lock()
                .unwrap()
                .entry(w.clone())
                .or_insert(val)
                .clone()
        }

        fn term(&self, k: u32) -> TangentMap<C> {
            if let Some(t) = self.terms.lock().unwrap().get(&k) {
                return t.clone();
            }
            let mut acc = TangentMap::zero(self.x.alphabet().clone());
            if k >= 1 {
                for (w, c) in bch_template_part(k).iter() {
                    acc = acc.add(&self.eval(w).map_components(|s| s.scale_rat(c)));
                }
            }
            self.terms
                .lock()
                .unwrap()
                .entry(k)
                .or_insert(acc)
                .clone()
        }
    }
    let state = Arc::new(State {
        x: x.clone(),
        y: y.clone(),
        words: Mutex::new(HashMap::new()),
        terms: Mutex::new(HashMap::new()),
    });
    let alphabet = x.alphabet().clone();
    let images = alphabet
        .letters()
        .map(|l| {
            let state = state.clone();
            LieSeries::from_series(
                alphabet.clone(),
                Series::sum_bounded(move |k| state.term(k).image(l).series().clone()),
            )
        })
        .collect();
    TangentMap::from_images(alphabet, images)
}

/// The conjugation automorphism: the Lie endomorphism sending each
/// generator a to e^{λ_a} a e^{-λ_a} = e^{ad λ_a}(a).
pub fn conj_morphism<C: Coeff>(lambda: &TangentMap<C>) -> LieMorphism<C> {
    let alphabet = lambda.alphabet().clone();
    let images = alphabet
        .letters()
        .map(|l| {
            let gen = LieSeries::generator(alphabet.clone(), alphabet.name(l));
            let la = lambda.image(l).clone();
            let img = operator_series_lie(
                |k| C::from_rat(recip_factorial(k)),
                move |g| la.bracket(g),
                &gen,
            );
            (alphabet.name(l).to_owned(), img)
        })
        .collect();
    LieMorphism::new(alphabet.clone(), alphabet, images)
}

/// Conjugation supported on a single generator.
pub fn conj_single<C: Coeff>(u: &str, gamma: &LieSeries<C>) -> LieMorphism<C> {
    let alphabet = gamma.alphabet().clone();
    let mut lambda = Vec::new();
    for l in alphabet.letters() {
        let name = alphabet.name(l).to_owned();
        if name == u {
            lambda.push((name, gamma.clone()));
        } else {
            lambda.push((name, LieSeries::zero(alphabet.clone())));
        }
    }
    conj_morphism(&TangentMap::new(alphabet, lambda))
}

/// The inverse of the conjugation by -γ on the u strand (the standard
/// companion to `conj_single`; note it is not the conjugation by γ).
pub fn rc_single<C: Coeff>(u: &str, gamma: &LieSeries<C>) -> LieMorphism<C> {
    conj_single(u, &gamma.neg()).inverse()
}

/// Applies a morphism to every component of a tangent map (keys fixed).
pub fn map_values<C: Coeff>(m: &LieMorphism<C>, lambda: &TangentMap<C>) -> TangentMap<C> {
    lambda.map_components(|s| m.apply(s))
}

/// Applies a morphism to wheels through the word-level expansion.
pub fn map_cw<C: Coeff>(m: &LieMorphism<C>, omega: &CwSeries<C>) -> CwSeries<C> {
    let images = m
        .source()
        .letters()
        .map(|l| m.image_of_letter(l))
        .collect();
    cw_substitute(omega, images, m.target().clone())
}

/// Lift a series into polynomial coefficients (degree zero in the formal
/// parameter).
pub fn lift_lie<C: Coeff>(f: &LieSeries<C>) -> LieSeries<Poly<C>> {
    LieSeries::from_series(
        f.alphabet().clone(),
        f.series().map_into(|c| Poly::constant(c.clone())),
    )
}

/// Lift and multiply by the formal parameter: c ↦ c·t.
pub fn lift_lie_times_t<C: Coeff>(f: &LieSeries<C>) -> LieSeries<Poly<C>> {
    LieSeries::from_series(
        f.alphabet().clone(),
        f.series().map_into(|c| Poly::monomial(c.clone(), 1)),
    )
}

pub fn lift_map<C: Coeff>(lambda: &TangentMap<C>) -> TangentMap<Poly<C>> {
    TangentMap::from_images(
        lambda.alphabet().clone(),
        lambda.images().iter().map(lift_lie).collect(),
    )
}

pub fn eval_lie_at<C: Coeff>(f: &LieSeries<Poly<C>>, t: &Rational) -> LieSeries<C> {
    let t = t.clone();
    LieSeries::from_series(f.alphabet().clone(), f.series().map_into(move |p| p.eval(&t)))
}

pub fn eval_map_at<C: Coeff>(lambda: &TangentMap<Poly<C>>, t: &Rational) -> TangentMap<C> {
    TangentMap::from_images(
        lambda.alphabet().clone(),
        lambda.images().iter().map(|s| eval_lie_at(s, t)).collect(),
    )
}

pub fn eval_cw_at<C: Coeff>(f: &CwSeries<Poly<C>>, t: &Rational) -> CwSeries<C> {
    let t = t.clone();
    CwSeries::from_series(f.alphabet().clone(), f.series().map_into(move |p| p.eval(&t)))
}

/// Shared driver for the two ODE-defined maps. Each slice of the solution
/// is a polynomial in the parameter assembled from strictly lower slices,
/// so the ODE integrates exactly degree by degree.
struct OdeState<C: Coeff> {
    alphabet: Alphabet,
    /// slices[n][letter]: degree-n part of the solution, per letter.
    slices: Mutex<Vec<Vec<PartMap<Word, Poly<C>>>>>,
    rhs: Box<
        dyn Fn(&TangentMap<Poly<C>>, u32) -> Vec<PartMap<Word, Poly<C>>> + Send + Sync,
    >,
}

impl<C: Coeff> OdeState<C> {
    fn ensure(&self, n: u32) {
        loop {
            let have = self.slices.lock().unwrap().len();
            if have > n as usize {
                return;
            }
            let next = have as u32;
            if next == 0 {
                self.slices.lock().unwrap().push(vec![PartMap::new(); self.alphabet.len()]);
                continue;
            }
            // Materialize the solution below degree `next`.
            let below = self.materialized(next - 1);
            let rhs_parts = (self.rhs)(&below, next);
            let integrated: Vec<PartMap<Word, Poly<C>>> = rhs_parts
                .into_iter()
                .map(|p| {
                    p.into_iter()
                        .map(|(w, poly)| (w, poly.integrate()))
                        .filter(|(_, p)| !p.is_zero())
                        .collect()
                })
                .collect();
            let mut slices = self.slices.lock().unwrap();
            if slices.len() == next as usize {
                slices.push(integrated);
            }
        }
    }

    fn materialized(&self, max_degree: u32) -> TangentMap<Poly<C>> {
        self.ensure(max_degree);
        let slices = self.slices.lock().unwrap();
        let images = (0..self.alphabet.len())
            .map(|l| {
                let mut parts = BTreeMap::new();
                for d in 1..=max_degree as usize {
                    if d < slices.len() {
                        parts.insert(d as u32, slices[d][l].clone());
                    }
                }
                LieSeries::from_series(self.alphabet.clone(), Series::from_parts(parts))
            })
            .collect();
        TangentMap::from_images(self.alphabet.clone(), images)
    }

    fn into_lazy(self: Arc<Self>) -> TangentMap<Poly<C>> {
        let alphabet = self.alphabet.clone();
        let images = alphabet
            .letters()
            .map(|l| {
                let state = self.clone();
                LieSeries::from_series(
                    alphabet.clone(),
                    Series::new(move |d| {
                        if d == 0 {
                            return PartMap::new();
                        }
                        state.ensure(d);
                        state.slices.lock().unwrap()[d as usize][l as usize].clone()
                    }),
                )
            })
            .collect();
        TangentMap::from_images(alphabet, images)
    }
}

fn tangent_part_at<C: Coeff>(map: &TangentMap<C>, d: u32) -> Vec<PartMap<Word, C>> {
    map.images().iter().map(|s| (*s.part(d)).clone()).collect()
}

/// Operator series sum c_k O^k applied to a whole tangent map, sharing the
/// iterated applications across components. The operator must raise degree.
pub fn tangent_operator_series<C: Coeff>(
    coeff: impl Fn(u32) -> C + Send + Sync + 'static,
    op: impl Fn(&TangentMap<C>) -> TangentMap<C> + Send + Sync + 'static,
    f: &TangentMap<C>,
) -> TangentMap<C> {
    struct St<C: Coeff> {
        powers: Mutex<Vec<TangentMap<C>>>,
        op: Box<dyn Fn(&TangentMap<C>) -> TangentMap<C> + Send + Sync>,
        coeff: Box<dyn Fn(u32) -> C + Send + Sync>,
    }
    impl<C: Coeff> St<C> {
        fn power(&self, k: u32) -> TangentMap<C> {
            let mut p = self.powers.lock().unwrap();
            while p.len() <= k as usize {
                let next = (self.op)(p.last().unwrap());
                p.push(next);
            }
            p[k as usize].clone()
        }
    }
    let st = Arc::new(St {
        powers: Mutex::new(vec![f.clone()]),
        op: Box::new(op),
        coeff: Box::new(coeff),
    });
    let alphabet = f.alphabet().clone();
    let images = alphabet
        .letters()
        .map(|l| {
            let st = st.clone();
            LieSeries::from_series(
                alphabet.clone(),
                Series::sum_bounded(move |k| {
                    st.power(k).image(l).scale(&(st.coeff)(k)).series().clone()
                }),
            )
        })
        .collect();
    TangentMap::from_images(alphabet, images)
}

/// Componentwise plain bracket [a_l, b_l].
pub fn pointwise_bracket<C: Coeff>(a: &TangentMap<C>, b: &TangentMap<C>) -> TangentMap<C> {
    assert_eq!(a.alphabet(), b.alphabet());
    TangentMap::from_images(
        a.alphabet().clone(),
        a.images()
            .iter()
            .zip(b.images())
            .map(|(x, y)| x.bracket(y))
            .collect(),
    )
}

fn signed_t_over_factorial<C: Coeff>(k: u32, sign: i64) -> Poly<C> {
    let mut r = recip_factorial(k);
    if sign < 0 && k % 2 == 1 {
        r = -r;
    }
    Poly::monomial(C::from_rat(r), k as usize)
}

/// Solution of dΓ_t/dt = λ ∥ e^{-t∂_λ} ∥ ad Γ_t / (e^{ad Γ_t} - 1) with
/// Γ_0 = 0, as a polynomial family in t. Here ad acts componentwise with
/// the plain bracket and the Todd coefficients use B1 = -1/2; the degree-d
/// slice of the right side only involves strictly lower slices, so each
/// degree integrates exactly in t.
pub fn gamma_t<C: Coeff>(lambda: &TangentMap<C>) -> TangentMap<Poly<C>> {
    let alphabet = lambda.alphabet().clone();
    // μ(t) = λ ∥ e^{-t∂_λ}: independent of Γ.
    let deriv = Derivation::tangential(&lift_map(lambda));
    let mu = tangent_operator_series(
        |k| signed_t_over_factorial::<C>(k, -1),
        move |m| deriv.apply_map(m),
        &lift_map(lambda),
    );
    let state = Arc::new(OdeState {
        alphabet: alphabet.clone(),
        slices: Mutex::new(Vec::new()),
        rhs: Box::new(move |below, n| {
            let mut current = mu.clone();
            let mut acc: Vec<PartMap<Word, Poly<C>>> = tangent_part_at(&current, n)
                .into_iter()
                .map(|p| scale_part(p, &todd_minus(0)))
                .collect();
            for k in 1..=n {
                current = pointwise_bracket(below, &current);
                let c = todd_minus(k);
                if c.is_zero() {
                    continue;
                }
                for (accp, p) in acc.iter_mut().zip(tangent_part_at(&current, n)) {
                    for (w, v) in scale_part(p, &c) {
                        crate::series::add_to(accp, w, v);
                    }
                }
            }
            acc
        }),
    });
    state.into_lazy()
}

/// Solution of dΛ_t/dt = λ ∥ e^{∂_{Λ_t}} ∥ ad_tb Λ_t / (e^{ad_tb Λ_t} - 1)
/// with Λ_0 = 0. The inverse companion of `gamma_t`.
pub fn lambda_t<C: Coeff>(lambda: &TangentMap<C>) -> TangentMap<Poly<C>> {
    let alphabet = lambda.alphabet().clone();
    let lam_lift = lift_map(lambda);
    let state = Arc::new(OdeState {
        alphabet: alphabet.clone(),
        slices: Mutex::new(Vec::new()),
        rhs: Box::new(move |below, n| {
            let deriv = Derivation::tangential(below);
            let mu = tangent_operator_series(
                |k| Poly::constant(C::from_rat(recip_factorial(k))),
                move |m| deriv.apply_map(m),
                &lam_lift,
            );
            let mut current = mu;
            let mut acc: Vec<PartMap<Word, Poly<C>>> = tangent_part_at(&current, n)
                .into_iter()
                .map(|p| scale_part(p, &todd_minus(0)))
                .collect();
            for k in 1..=n {
                current = below.tb(&current);
                let c = todd_minus(k);
                if c.is_zero() {
                    continue;
                }
                for (accp, p) in acc.iter_mut().zip(tangent_part_at(&current, n)) {
                    for (w, v) in scale_part(p, &c) {
                        crate::series::add_to(accp, w, v);
                    }
                }
            }
            acc
        }),
    });
    state.into_lazy()
}

fn scale_part<C: Coeff>(p: PartMap<Word, Poly<C>>, r: &Rational) -> PartMap<Word, Poly<C>> {
    if r.is_one() {
        return p;
    }
    p.into_iter()
        .map(|(w, v)| (w, v.mul_rat(r)))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Γ(λ) = Γ_1(λ).
pub fn gamma<C: Coeff>(lambda: &TangentMap<C>) -> TangentMap<C> {
    eval_map_at(&gamma_t(lambda), &Rational::one())
}

/// Λ(λ) = Λ_1(λ).
pub fn lambda_map<C: Coeff>(lambda: &TangentMap<C>) -> TangentMap<C> {
    eval_map_at(&lambda_t(lambda), &Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Alphabet, LieSeries<Rational>, LieSeries<Rational>) {
        let ab = Alphabet::new(["x", "y"]);
        let x = LieSeries::generator(ab.clone(), "x");
        let y = LieSeries::generator(ab.clone(), "y");
        (ab, x, y)
    }

    #[test]
    fn derivation_on_generator() {
        let (ab, x, y) = setup();
        // (x→y, y→0): x ↦ [x,y]
        let lam = TangentMap::new(
            ab.clone(),
            vec![("x".into(), y.clone()), ("y".into(), LieSeries::zero(ab.clone()))],
        );
        let d = lam.derive_lie(&x);
        assert_eq!(d.coeff_of("xy"), Rational::one());
        assert!(d.is_zero_through(1));
    }

    #[test]
    fn leibniz_on_random_inputs() {
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 3);
        let f = LieSeries::<Rational>::random(ab.clone(), 4);
        let g = LieSeries::<Rational>::random(ab.clone(), 5);
        let lhs = lam.derive_lie(&f.bracket(&g));
        let rhs = lam.derive_lie(&f).bracket(&g).add(&f.bracket(&lam.derive_lie(&g)));
        assert!(lhs.sub(&rhs).is_zero_through(6));
    }

    #[test]
    fn tb_antisymmetric_and_compatible_with_derivations() {
        let (ab, _, _) = setup();
        let l1 = TangentMap::<Rational>::random(ab.clone(), 11);
        let l2 = TangentMap::<Rational>::random(ab.clone(), 12);
        assert!(l1.tb(&l1).is_zero_through(6));
        // ∂ of the tb bracket is the commutator of the derivations, both on
        // Lie series and on wheels.
        let omega = CwSeries::<Rational>::random(ab.clone(), 13);
        let lhs = l1.tb(&l2).derive_cw(&omega);
        let rhs = l1
            .derive_cw(&l2.derive_cw(&omega))
            .sub(&l2.derive_cw(&l1.derive_cw(&omega)));
        assert!(lhs.sub(&rhs).is_zero_through(8));
    }

    #[test]
    fn bch_tb_unit_and_inverse() {
        let (ab, _, _) = setup();
        let l = TangentMap::<Rational>::random(ab.clone(), 21);
        let zero = TangentMap::zero(ab.clone());
        assert!(bch_tb(&l, &zero).sub(&l).is_zero_through(7));
        assert!(bch_tb(&l, &l.neg()).is_zero_through(6));
    }

    #[test]
    fn conj_and_inverse_round_trip() {
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 31);
        let c = conj_morphism(&lam);
        let f = LieSeries::<Rational>::random(ab.clone(), 32);
        let round = c.inverse_apply(&c.apply(&f));
        assert!(round.sub(&f).is_zero_through(8));
    }

    #[test]
    fn conjugation_by_single_generator_is_nested_brackets() {
        let (ab, x, y) = setup();
        // conj of x by λ_x = y: x + [y,x] + [y,[y,x]]/2 + ...
        let m = conj_single("x", &y);
        let img = m.apply(&x);
        assert_eq!(img.coeff_of("x"), Rational::one());
        assert_eq!(img.coeff_of("xy"), -Rational::one());
        // [y,[y,x]] = [[x,y],y] = basis xyy, coefficient 1/2
        assert_eq!(img.coeff_of("xyy"), Rational::ratio(1, 2));
    }

    #[test]
    fn gamma_lambda_mutually_inverse() {
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 41);
        let g = gamma(&lam);
        let back = lambda_map(&g);
        assert!(back.sub(&lam).is_zero_through(6));
        let l = lambda_map(&lam);
        let forth = gamma(&l);
        assert!(forth.sub(&lam).is_zero_through(6));
    }

    #[test]
    fn gamma_operator_identity() {
        // e^{-∂_λ} = conjugation by Γ(λ), checked on every generator.
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 51);
        let g = gamma(&lam);
        let c = conj_morphism(&g);
        for l in ab.letters() {
            let gen = LieSeries::generator(ab.clone(), ab.name(l));
            let lhs = exp_tder_lie(&lam, &Rational::from_int(-1), &gen);
            let rhs = c.apply(&gen);
            assert!(lhs.sub(&rhs).is_zero_through(7), "generator {}", ab.name(l));
        }
    }

    #[test]
    fn lambda_operator_identity() {
        // conjugation by λ = e^{-∂_{Λ(λ)}} on every generator.
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 61);
        let lm = lambda_map(&lam);
        let c = conj_morphism(&lam);
        for l in ab.letters() {
            let gen = LieSeries::generator(ab.clone(), ab.name(l));
            let lhs = c.apply(&gen);
            let rhs = exp_tder_lie(&lm, &Rational::from_int(-1), &gen);
            assert!(lhs.sub(&rhs).is_zero_through(6), "generator {}", ab.name(l));
        }
    }

    #[test]
    fn central_part_is_killed_by_derivations() {
        let (ab, x, y) = setup();
        // λ with purely central components: λ_a = c·a
        let lam = TangentMap::new(
            ab.clone(),
            vec![
                ("x".into(), x.scale_rat(&Rational::from_int(2))),
                ("y".into(), y.scale_rat(&Rational::from_int(-3))),
            ],
        );
        assert_eq!(lam.central_coeff(0), Rational::from_int(2));
        let f = LieSeries::<Rational>::random(ab.clone(), 71);
        assert!(lam.derive_lie(&f).is_zero_through(7));
    }

    #[test]
    fn exp_derivation_is_an_automorphism() {
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 81);
        let f = LieSeries::<Rational>::random(ab.clone(), 82);
        let g = LieSeries::<Rational>::random(ab.clone(), 83);
        let one = Rational::one();
        let lhs = exp_tder_lie(&lam, &one, &f.bracket(&g));
        let rhs = exp_tder_lie(&lam, &one, &f).bracket(&exp_tder_lie(&lam, &one, &g));
        assert!(lhs.sub(&rhs).is_zero_through(6));
    }
}
