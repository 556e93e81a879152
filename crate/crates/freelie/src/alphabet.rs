//! Generator alphabets and words over them.
//!
//! An alphabet is an ordered set of generator names; words store letter
//! indices into it, so lexicographic order on index sequences agrees with
//! lexicographic order on names (the alphabet is kept sorted).

use smallvec::SmallVec;
use std::fmt;
use std::sync::Arc;

pub type Letter = u16;
pub type Word = SmallVec<[Letter; 16]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<Vec<String>>,
}

impl Alphabet {
    /// Builds an alphabet from names, sorting and rejecting duplicates.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        let mut v: Vec<String> = names.into_iter().map(Into::into).collect();
        v.sort();
        for pair in v.windows(2) {
            assert!(pair[0] != pair[1], "duplicate generator {:?}", pair[0]);
        }
        assert!(v.len() <= Letter::MAX as usize, "alphabet too large");
        Alphabet {
            names: Arc::new(v),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
            .map(|i| i as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len() as Letter).into_iter()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.letter(name).is_some()
    }

    /// True when every generator name is a single character, in which case
    /// words print without separators (as in `xy`).
    pub fn single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    pub fn word_string(&self, w: &[Letter]) -> String {
        if self.single_char() {
            w.iter().map(|&l| self.name(l)).collect()
        } else {
            w.iter()
                .map(|&l| self.name(l))
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse_word(&self, s: &str) -> Option<Word> {
        let mut w = Word::new();
        if self.single_char() && !s.contains(',') {
            for ch in s.chars() {
                w.push(self.letter(&ch.to_string())?);
            }
        } else {
            for part in s.split(',') {
                w.push(self.letter(part)?);
            }
        }
        Some(w)
    }

    /// Merged alphabet plus translation tables from each input.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut names: Vec<String> = self.names.iter().cloned().collect();
        names.extend(other.names.iter().cloned());
        names.sort();
        names.dedup();
        Alphabet::new(names)
    }

    /// Letter translation into a superset alphabet.
    pub fn embedding(&self, target: &Alphabet) -> Vec<Letter> {
        self.names
            .iter()
            .map(|n| {
                target
                    .letter(n)
                    .unwrap_or_else(|| panic!("generator {n:?} missing from target alphabet"))
            })
            .collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

pub fn word_of(letters: &[Letter]) -> Word {
    Word::from_slice(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_searchable() {
        let a = Alphabet::new(["y", "x"]);
        assert_eq!(a.names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(a.letter("y"), Some(1));
        assert!(a.single_char());
        assert_eq!(a.word_string(&[0, 1, 0]), "xyx");
        assert_eq!(a.parse_word("xyx").unwrap().as_slice(), &[0, 1, 0]);
    }

    #[test]
    fn multichar_words_use_commas() {
        let a = Alphabet::new(["10", "2"]);
        assert!(!a.single_char());
        assert_eq!(a.word_string(&[0, 1]), "10,2");
        assert_eq!(a.parse_word("10,2").unwrap().as_slice(), &[0, 1]);
    }
}
