//! Arithmetic in the free associative algebra on a generator alphabet,
//! graded by word length. This is the workhorse behind bracket
//! normalization, BCH, and the word-level functionals: Lie elements embed
//! by expanding basis brackets as commutators, are manipulated as sparse
//! word combinations, and are reduced back to the Lyndon basis by
//! triangularity.

use crate::alphabet::Word;
use crate::lyndon::{is_lyndon, lyndon_expansion};
use crate::series::{add_to, PartMap, Series};
use scalars::{Coeff, Rational};
use std::collections::BTreeMap;
use std::sync::Mutex;

pub type FaPart<C> = PartMap<Word, C>;

/// Concatenation product of two homogeneous parts.
pub fn fa_mul_part<C: Coeff>(a: &FaPart<C>, b: &FaPart<C>) -> FaPart<C> {
    let mut out = FaPart::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_to(&mut out, w, ca.mul(cb));
        }
    }
    out
}

/// Lazy product of two word series.
pub fn fa_mul<C: Coeff>(a: &Series<Word, C>, b: &Series<Word, C>) -> Series<Word, C> {
    let a = a.clone();
    let b = b.clone();
    Series::new(move |d| {
        let mut out = FaPart::new();
        for i in 0..=d {
            let pa = a.part(i);
            if pa.is_empty() {
                continue;
            }
            let pb = b.part(d - i);
            if pb.is_empty() {
                continue;
            }
            for (k, c) in fa_mul_part(&pa, &pb) {
                add_to(&mut out, k, c);
            }
        }
        out
    })
}

pub fn fa_unit<C: Coeff>() -> Series<Word, C> {
    Series::single(0, Word::new(), C::one())
}

/// exp of a series with no degree-0 part.
pub fn fa_exp<C: Coeff>(f: &Series<Word, C>) -> Series<Word, C> {
    debug_assert!(f.part(0).is_empty(), "exp needs positive degree input");
    let f = f.clone();
    let powers: Mutex<Vec<Series<Word, C>>> = Mutex::new(vec![fa_unit()]);
    Series::sum_bounded(move |k| {
        let mut powers = powers.lock().unwrap();
        while powers.len() <= k as usize {
            let next = fa_mul(powers.last().unwrap(), &f);
            powers.push(next);
        }
        powers[k as usize].scale_rat(&factorial_recip(k))
    })
}

/// log of a series whose degree-0 part is the unit.
pub fn fa_log<C: Coeff>(e: &Series<Word, C>) -> Series<Word, C> {
    let u = e.sub(&fa_unit());
    debug_assert!(u.part(0).is_empty(), "log needs a unit constant term");
    let powers: Mutex<Vec<Series<Word, C>>> = Mutex::new(vec![u.clone()]);
    let log_terms = Series::sum_bounded(move |k| {
        // term index k corresponds to u^(k+1) * (-1)^k / (k+1), supported
        // in degrees >= k+1 > k.
        let mut powers = powers.lock().unwrap();
        while powers.len() <= k as usize {
            let next = fa_mul(powers.last().unwrap(), &u);
            powers.push(next);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        powers[k as usize].scale_rat(&Rational::ratio(sign, k as i64 + 1))
    });
    log_terms
}

fn factorial_recip(k: u32) -> Rational {
    let mut f = Rational::one();
    for i in 1..=k as i64 {
        f = f * Rational::from_int(i);
    }
    f.recip()
}

/// Expands a Lyndon-basis part into the free associative algebra.
pub fn lie_part_to_fa<C: Coeff>(part: &PartMap<Word, C>) -> FaPart<C> {
    let mut out = FaPart::new();
    for (w, c) in part {
        for (word, n) in lyndon_expansion(w).iter() {
            add_to(&mut out, word.clone(), c.mul_rat(&Rational::from_i128(*n)));
        }
    }
    out
}

/// Reduces a homogeneous word combination known to be a Lie element into
/// the Lyndon basis. Triangular: the least word of the remainder is always
/// a Lyndon word with the same coefficient as its basis bracket.
pub fn fa_part_to_lie<C: Coeff>(part: &FaPart<C>) -> PartMap<Word, C> {
    let mut rest: BTreeMap<Word, C> = part.clone();
    let mut out = PartMap::new();
    while let Some((w, c)) = rest.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        assert!(
            is_lyndon(&w),
            "word combination is not a Lie element (leading word {w:?})"
        );
        for (word, n) in lyndon_expansion(&w).iter() {
            let delta = c.mul_rat(&Rational::from_i128(-*n));
            add_to(&mut rest, word.clone(), delta);
        }
        out.insert(w, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::word_of;

    fn single(w: &[u16]) -> Series<Word, Rational> {
        Series::single(w.len() as u32, word_of(w), Rational::one())
    }

    #[test]
    fn exp_log_round_trip() {
        let f = single(&[0]).add(&single(&[0, 1]));
        let back = fa_log(&fa_exp(&f));
        assert!(back.sub(&f).is_zero_through(6));
    }

    #[test]
    fn lie_round_trip_through_fa() {
        // [x,[x,y]] as a basis part.
        let mut part = PartMap::new();
        part.insert(word_of(&[0, 0, 1]), Rational::from_int(5));
        let fa = lie_part_to_fa(&part);
        assert_eq!(fa_part_to_lie(&fa), part);
    }

    #[test]
    #[should_panic(expected = "not a Lie element")]
    fn non_lie_input_is_rejected() {
        let mut part = FaPart::new();
        part.insert(word_of(&[0, 0]), Rational::one());
        fa_part_to_lie(&part);
    }
}
