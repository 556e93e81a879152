//! Symbolic unknowns. An unknown is identified by its family (a short name
//! such as `alpha` or `kappa`), the degree of the graded slot it lives in,
//! and its position within a fixed enumeration of that family's degree-d
//! basis. The ordering (degree, family, index) is total and reproducible;
//! it is the order in which elimination visits columns.

use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unknown {
    pub degree: u32,
    pub family: Arc<str>,
    pub index: u32,
}

impl Unknown {
    pub fn new(family: &str, degree: u32, index: u32) -> Self {
        Unknown {
            degree,
            family: Arc::from(family),
            index,
        }
    }
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.family, self.degree, self.index)
    }
}

impl fmt::Debug for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_degree_then_family_then_index() {
        let a2 = Unknown::new("alpha", 2, 0);
        let b1 = Unknown::new("beta", 1, 5);
        let a1 = Unknown::new("alpha", 1, 5);
        let mut v = vec![a2.clone(), b1.clone(), a1.clone()];
        v.sort();
        assert_eq!(v, vec![a1, b1, a2]);
    }
}
