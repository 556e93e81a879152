//! Lyndon words: enumeration, the standard factorization, and the
//! associative expansion of the bracketing attached to each word.
//!
//! A word is Lyndon when it is strictly smaller than all of its proper
//! cyclic rotations. The standard factorization w = uv takes v to be the
//! lexicographically least proper suffix (equivalently the longest proper
//! Lyndon suffix); bracketing recursively yields a basis of the free Lie
//! algebra.

use crate::alphabet::{Letter, Word};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub fn is_lyndon(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    for r in 1..n {
        let rotation = w[r..].iter().chain(w[..r].iter());
        if w.iter().ge(rotation) {
            return false;
        }
    }
    true
}

/// All Lyndon words of the given length over `k` letters, lexicographically
/// sorted (Duval's generation produces them in order).
pub fn lyndon_words(k: usize, len: usize) -> Vec<Word> {
    assert!(len >= 1, "degree must be positive");
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut w: Vec<Letter> = vec![0];
    loop {
        if w.len() == len {
            out.push(Word::from_slice(&w));
        }
        // Extend periodically to the target length, then increment.
        let cur = w.clone();
        while w.len() < len {
            w.push(cur[(w.len() - cur.len()) % cur.len()]);
        }
        while let Some(&last) = w.last() {
            if last as usize == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// Number of Lyndon words of length n over k letters, by Möbius inversion
/// of k^n = sum_{d|n} d * count(d). Used as an independent dimension
/// oracle for the graded pieces of the free Lie algebra.
pub fn lyndon_count(k: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let mut total: i128 = 0;
    for d in 1..=n {
        if n % d == 0 {
            total += moebius(d) as i128 * (k as i128).pow((n / d) as u32);
        }
    }
    (total / n as i128) as u64
}

/// Number of cyclic words (necklaces) of length n over k letters.
pub fn necklace_count(k: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let mut total: u128 = 0;
    for d in 1..=n {
        if n % d == 0 {
            total += euler_phi(d) as u128 * (k as u128).pow((n / d) as u32);
        }
    }
    (total / n as u128) as u64
}

fn moebius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Standard factorization of a Lyndon word of length >= 2: the right factor
/// is the lexicographically least proper suffix.
pub fn std_factorization(w: &[Letter]) -> (Word, Word) {
    debug_assert!(w.len() >= 2);
    let mut best = 1;
    for s in 2..w.len() {
        if w[s..] < w[best..] {
            best = s;
        }
    }
    (Word::from_slice(&w[..best]), Word::from_slice(&w[best..]))
}

/// Associative expansion of the standard bracketing of a Lyndon word:
/// sorted (word, integer coefficient) pairs. The leading (lexicographically
/// least) word is the Lyndon word itself with coefficient 1, which makes
/// reduction to the basis triangular.
pub type Expansion = Arc<Vec<(Word, i128)>>;

static EXPANSION_CACHE: Lazy<Mutex<HashMap<Word, Expansion>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Expansions above this degree are recomputed instead of cached; caching
/// every degree-16 expansion would cost gigabytes.
const EXPANSION_MEMO_MAX_DEGREE: usize = 12;

pub fn lyndon_expansion(w: &Word) -> Expansion {
    if w.len() <= EXPANSION_MEMO_MAX_DEGREE {
        if let Some(e) = EXPANSION_CACHE.lock().unwrap().get(w) {
            return e.clone();
        }
    }
    let result: Expansion = if w.len() == 1 {
        Arc::new(vec![(w.clone(), 1)])
    } else {
        let (u, v) = std_factorization(w);
        let eu = lyndon_expansion(&u);
        let ev = lyndon_expansion(&v);
        Arc::new(expansion_bracket(&eu, &ev))
    };
    if w.len() <= EXPANSION_MEMO_MAX_DEGREE {
        EXPANSION_CACHE
            .lock()
            .unwrap()
            .insert(w.clone(), result.clone());
    }
    result
}

fn expansion_bracket(a: &[(Word, i128)], b: &[(Word, i128)]) -> Vec<(Word, i128)> {
    let mut terms: Vec<(Word, i128)> = Vec::with_capacity(2 * a.len() * b.len());
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut ab = wa.clone();
            ab.extend_from_slice(wb);
            terms.push((ab, ca * cb));
            let mut ba = wb.clone();
            ba.extend_from_slice(wa);
            terms.push((ba, -(ca * cb)));
        }
    }
    combine_terms(terms)
}

pub(crate) fn combine_terms(mut terms: Vec<(Word, i128)>) -> Vec<(Word, i128)> {
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Word, i128)> = Vec::with_capacity(terms.len());
    for (w, c) in terms {
        match out.last_mut() {
            Some((lw, lc)) if *lw == w => *lc += c,
            _ => out.push((w, c)),
        }
    }
    out.retain(|(_, c)| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::word_of;

    #[test]
    fn lyndon_words_small() {
        // {x,y} (letters 0,1): degree 1 -> x, y; degree 2 -> xy only.
        let d1 = lyndon_words(2, 1);
        assert_eq!(d1.len(), 2);
        let d2 = lyndon_words(2, 2);
        assert_eq!(d2, vec![word_of(&[0, 1])]);
        let d5 = lyndon_words(2, 5);
        assert_eq!(d5.len() as u64, lyndon_count(2, 5));
        assert!(d5.windows(2).all(|p| p[0] < p[1]));
        assert!(d5.iter().all(|w| is_lyndon(w)));
    }

    #[test]
    fn witt_counts() {
        assert_eq!(lyndon_count(2, 1), 2);
        assert_eq!(lyndon_count(2, 2), 1);
        assert_eq!(lyndon_count(2, 6), 9);
        assert_eq!(lyndon_count(3, 4), 18);
        assert_eq!(necklace_count(2, 4), 6);
    }

    #[test]
    fn std_factorization_takes_least_suffix() {
        // xxyy = (x)(xyy), xyy = (xy)(y)
        let (u, v) = std_factorization(&[0, 0, 1, 1]);
        assert_eq!((u.as_slice(), v.as_slice()), (&[0][..], &[0, 1, 1][..]));
        let (u, v) = std_factorization(&[0, 1, 1]);
        assert_eq!((u.as_slice(), v.as_slice()), (&[0, 1][..], &[1][..]));
    }

    #[test]
    fn expansion_leading_term_is_the_word() {
        for d in 1..=7 {
            for w in lyndon_words(2, d) {
                let e = lyndon_expansion(&w);
                assert_eq!(e[0].0, w, "leading word");
                assert_eq!(e[0].1, 1, "leading coefficient");
                assert!(e.windows(2).all(|p| p[0].0 < p[1].0));
            }
        }
    }

    #[test]
    fn expansion_of_xy_is_commutator() {
        let e = lyndon_expansion(&word_of(&[0, 1]));
        assert_eq!(
            e.as_slice(),
            &[(word_of(&[0, 1]), 1), (word_of(&[1, 0]), -1)]
        );
    }
}
