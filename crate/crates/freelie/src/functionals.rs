//! The word-level functionals from Lie series to wheels: the head-to-tail
//! closure, the divergence, its conjugated integral, and the log-Jacobian
//! cocycle.

use crate::alphabet::Word;
use crate::bernoulli::expm1_over_z;
use crate::cyclic::{CwSeries, CycWord};
use crate::lie::LieSeries;
use crate::series::{add_to, PartMap, Series};
use crate::tangent::{
    conj_single, lift_lie, lift_lie_times_t, map_cw, operator_series_cw, Derivation, TangentMap,
};
use scalars::{Coeff, Poly};

/// Sum over the u-labelled tails of the head-to-tail closure: word-level,
/// each word ending in u closes up into the cyclic word of its prefix.
/// Lowers degree by one; contributions that would close into the empty
/// wheel vanish.
pub fn tr_u<C: Coeff>(u: &str, gamma: &LieSeries<C>) -> CwSeries<C> {
    let l = match gamma.alphabet().letter(u) {
        Some(l) => l,
        None => panic!("generator {u:?} not in alphabet"),
    };
    let fa = gamma.fa();
    CwSeries::from_series(
        gamma.alphabet().clone(),
        Series::new(move |d| {
            let mut out = PartMap::new();
            if d == 0 {
                return out;
            }
            for (w, c) in fa.part(d + 1).iter() {
                if w.last() == Some(&l) {
                    let prefix = &w[..w.len() - 1];
                    if !prefix.is_empty() {
                        add_to(&mut out, CycWord::canonical(prefix), c.clone());
                    }
                }
            }
            out
        }),
    )
}

/// The divergence-type closure: a word ending in u contributes the wheel
/// of u followed by its prefix. Degree-preserving. The bare generator u
/// contributes the one-letter wheel; the full divergence of a tangent map
/// removes that central contribution separately.
pub fn div_u<C: Coeff>(u: &str, gamma: &LieSeries<C>) -> CwSeries<C> {
    let l = match gamma.alphabet().letter(u) {
        Some(l) => l,
        None => panic!("generator {u:?} not in alphabet"),
    };
    let fa = gamma.fa();
    CwSeries::from_series(
        gamma.alphabet().clone(),
        Series::new(move |d| {
            let mut out = PartMap::new();
            if d == 0 {
                return out;
            }
            for (w, c) in fa.part(d).iter() {
                if w.last() == Some(&l) {
                    let mut closed = Word::new();
                    closed.push(l);
                    closed.extend_from_slice(&w[..w.len() - 1]);
                    add_to(&mut out, CycWord::canonical(&closed), c.clone());
                }
            }
            out
        }),
    )
}

/// The divergence of a tangent map: sum of the per-generator divergences,
/// extended by zero on the central part.
pub fn div<C: Coeff>(lambda: &TangentMap<C>) -> CwSeries<C> {
    let alphabet = lambda.alphabet().clone();
    let mut acc = CwSeries::zero(alphabet.clone());
    for l in alphabet.letters() {
        let name = alphabet.name(l).to_owned();
        acc = acc.add(&div_u(&name, lambda.image(l)));
        // Remove the central contribution: div_u of the a-multiple of a.
        let central = lambda.central_coeff(l);
        if !central.is_zero() {
            let mut w = Word::new();
            w.push(l);
            let wheel = CwSeries::from_series(
                alphabet.clone(),
                Series::single(1, CycWord::canonical(&w), central),
            );
            acc = acc.sub(&wheel);
        }
    }
    acc
}

/// The log-Jacobian: j(λ) = (e^{∂_λ} - 1)/∂_λ applied to div λ.
pub fn j<C: Coeff>(lambda: &TangentMap<C>) -> CwSeries<C> {
    let d = Derivation::tangential(lambda);
    operator_series_cw(
        |k| C::from_rat(expm1_over_z(k)),
        move |w| d.apply_cw(w),
        &div(lambda),
    )
}

/// The raw per-generator divergence sum, central one-letter wheels
/// included. This is the variant the strand-reversal formulas need: the
/// head of a framing arrow sliding past its own tail leaves a one-letter
/// wheel, exactly the contribution the split-presentation action keeps.
pub fn div_raw<C: Coeff>(lambda: &TangentMap<C>) -> CwSeries<C> {
    let alphabet = lambda.alphabet().clone();
    let mut acc = CwSeries::zero(alphabet.clone());
    for l in alphabet.letters() {
        let name = alphabet.name(l).to_owned();
        acc = acc.add(&div_u(&name, lambda.image(l)));
    }
    acc
}

/// The log-Jacobian over the raw divergence.
pub fn j_raw<C: Coeff>(lambda: &TangentMap<C>) -> CwSeries<C> {
    let d = Derivation::tangential(lambda);
    operator_series_cw(
        |k| C::from_rat(expm1_over_z(k)),
        move |w| d.apply_cw(w),
        &div_raw(lambda),
    )
}

/// J_u(γ) = ∫_0^1 ds div_u(γ ∥ RC_u^{sγ}) ∥ C_u^{-sγ}: the integrand is a
/// polynomial in s in each degree, integrated term-wise with exact
/// rationals.
pub fn j_u<C: Coeff>(u: &str, gamma: &LieSeries<C>) -> CwSeries<C> {
    let alphabet = gamma.alphabet().clone();
    assert!(alphabet.contains(u), "generator {u:?} not in alphabet");
    // s·γ with a formal coefficient s.
    let s_gamma = lift_lie_times_t(gamma);
    // RC_u^{sγ} is the inverse of the conjugation by -sγ on u.
    let c_minus = conj_single::<Poly<C>>(u, &s_gamma.neg());
    let transported = c_minus.inverse_apply(&lift_lie(gamma));
    // div_u of the transported series, then conjugate the wheels back.
    let wheels = div_u(u, &transported);
    let conjugated = map_cw(&c_minus, &wheels);
    // ∫_0^1 ds, coefficientwise.
    let integrated = conjugated.series().map_into(|p: &Poly<C>| p.integrate_unit());
    CwSeries::from_series(alphabet, integrated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::lie::BracketTree;
    use scalars::Rational;
    use crate::tangent::bch_tb;

    fn setup() -> (Alphabet, LieSeries<Rational>, LieSeries<Rational>) {
        let ab = Alphabet::new(["u", "v"]);
        let u = LieSeries::generator(ab.clone(), "u");
        let v = LieSeries::generator(ab.clone(), "v");
        (ab, u, v)
    }

    #[test]
    fn closure_examples() {
        let (ab, u, v) = setup();
        // tr_u [[v,u],u] = -(uv)
        let g = v.bracket(&u).bracket(&u);
        let t = tr_u("u", &g);
        assert_eq!(t.coeff_of("uv"), -Rational::one());
        // div_u [[v,u],u] = -(uuv)
        let dv = div_u("u", &g);
        assert_eq!(dv.coeff_of("uuv"), -Rational::one());
        // tr of a series without the letter vanishes
        assert!(tr_u("u", &v).is_zero_through(6));
        // div_u([v,u]) = (uv), tr_u([v,u]) = -(v)
        let b = v.bracket(&u);
        assert_eq!(div_u("u", &b).coeff_of("uv"), Rational::one());
        assert_eq!(tr_u("u", &b).coeff_of("v"), Rational::one());
        let _ = ab;
    }

    #[test]
    fn tr_and_div_against_word_oracle() {
        // Independent word-level oracle on a random combination, degree <= 6.
        let (ab, _, _) = setup();
        let g = LieSeries::<Rational>::random(ab.clone(), 5);
        let l = ab.letter("u").unwrap();
        for d in 1..=6u32 {
            let fa = g.fa();
            let mut tr_expect: PartMap<CycWord, Rational> = PartMap::new();
            let mut div_expect: PartMap<CycWord, Rational> = PartMap::new();
            for (w, c) in fa.part(d).iter() {
                if w.last() == Some(&l) {
                    let mut closed = Word::new();
                    closed.push(l);
                    closed.extend_from_slice(&w[..w.len() - 1]);
                    add_to(&mut div_expect, CycWord::canonical(&closed), c.clone());
                }
            }
            for (w, c) in fa.part(d + 1).iter() {
                if w.last() == Some(&l) && w.len() > 1 {
                    add_to(&mut tr_expect, CycWord::canonical(&w[..w.len() - 1]), c.clone());
                }
            }
            assert_eq!(*tr_u("u", &g).part(d), tr_expect);
            assert_eq!(*div_u("u", &g).part(d), div_expect);
        }
    }

    #[test]
    fn j_vanishes_on_zero() {
        let (ab, _, _) = setup();
        let zero = TangentMap::<Rational>::zero(ab);
        assert!(j(&zero).is_zero_through(6));
    }

    #[test]
    fn j_cocycle_condition() {
        // j(BCH_tb(λ1, λ2)) = j(λ1) + e^{∂_{λ1}} j(λ2), degrees <= 6.
        let (ab, _, _) = setup();
        let l1 = TangentMap::<Rational>::random(ab.clone(), 91);
        let l2 = TangentMap::<Rational>::random(ab.clone(), 92);
        let lhs = j(&bch_tb(&l1, &l2));
        let rhs = j(&l1).add(&crate::tangent::exp_tder_cw(&l1, &Rational::one(), &j(&l2)));
        assert!(lhs.sub(&rhs).is_zero_through(6));
    }

    #[test]
    fn j_linearizes_to_div() {
        // With ε² = 0, j(ελ) = ε div λ: the degree-d wheel of j(ελ) that is
        // linear in ε is div λ. Model ε by the polynomial variable and drop
        // higher powers.
        let (ab, _, _) = setup();
        let lam = TangentMap::<Rational>::random(ab.clone(), 93);
        let lam_eps = TangentMap::from_images(
            ab.clone(),
            lam.images().iter().map(lift_lie_times_t).collect(),
        );
        let j_eps = j(&lam_eps);
        let linear_part = CwSeries::from_series(
            ab.clone(),
            j_eps.series().map_into(|p: &Poly<Rational>| p.coeff(1)),
        );
        assert!(linear_part.sub(&div(&lam)).is_zero_through(6));
        // and there is no constant term at all
        let const_part = CwSeries::from_series(
            ab,
            j_eps.series().map_into(|p: &Poly<Rational>| p.coeff(0)),
        );
        assert!(const_part.is_zero_through(6));
    }

    #[test]
    fn div_kills_central_part() {
        let (ab, u, v) = setup();
        let lam = TangentMap::new(
            ab.clone(),
            vec![
                ("u".into(), u.scale_rat(&Rational::from_int(7))),
                ("v".into(), v.scale_rat(&Rational::from_int(-2))),
            ],
        );
        assert!(div(&lam).is_zero_through(5));
    }

    #[test]
    fn j_u_leading_term_is_div() {
        // J_u(γ) = div_u γ + higher corrections; check the first degrees
        // where corrections vanish on a degree-2 element.
        let (ab, u, v) = setup();
        let g = u.bracket(&v);
        let j2 = j_u("u", &g);
        let d2 = div_u("u", &g);
        assert_eq!(*j2.part(2), *d2.part(2));
        let _ = BracketTree::gen("u");
    }
}
