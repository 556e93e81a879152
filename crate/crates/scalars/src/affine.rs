//! Rationals extended by symbolic unknowns.
//!
//! During degree-staged solving the coefficients that matter are affine
//! (constant + linear) in the unknowns of the degree being solved. Products
//! of two symbolic parts do arise transiently inside series arithmetic
//! (e.g. inside a BCH at the lowest stage) and must cancel before equations
//! are read off, so a quadratic bucket is carried along exactly; anything
//! of higher order marks the value as entangled. An entangled or quadratic
//! coefficient surviving into an equation is reported as an error by the
//! solver, never silently dropped.

use crate::rational::Rational;
use crate::unknown::Unknown;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct AffineScalar {
    pub constant: Rational,
    /// Linear terms, no zero coefficients stored.
    pub linear: BTreeMap<Unknown, Rational>,
    /// Transient quadratic terms, key normalized so that `k.0 <= k.1`.
    pub quadratic: BTreeMap<(Unknown, Unknown), Rational>,
    /// True once a product of order three or higher occurred.
    pub entangled: bool,
}

impl AffineScalar {
    pub fn zero() -> Self {
        AffineScalar::default()
    }

    pub fn from_rat(r: Rational) -> Self {
        AffineScalar {
            constant: r,
            ..Default::default()
        }
    }

    pub fn from_unknown(u: Unknown) -> Self {
        let mut linear = BTreeMap::new();
        linear.insert(u, Rational::one());
        AffineScalar {
            constant: Rational::zero(),
            linear,
            quadratic: BTreeMap::new(),
            entangled: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        !self.entangled
            && self.constant.is_zero()
            && self.linear.is_empty()
            && self.quadratic.is_empty()
    }

    /// The value as a plain rational, if it has no symbolic part.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.entangled && self.linear.is_empty() && self.quadratic.is_empty() {
            Some(self.constant.clone())
        } else {
            None
        }
    }

    pub fn is_affine(&self) -> bool {
        !self.entangled && self.quadratic.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant += other.constant.clone();
        for (u, c) in &other.linear {
            add_term(&mut out.linear, u.clone(), c.clone());
        }
        for (k, c) in &other.quadratic {
            add_term(&mut out.quadratic, k.clone(), c.clone());
        }
        out.entangled |= other.entangled;
        out
    }

    pub fn neg(&self) -> Self {
        AffineScalar {
            constant: -&self.constant,
            linear: self.linear.iter().map(|(u, c)| (u.clone(), -c)).collect(),
            quadratic: self
                .quadratic
                .iter()
                .map(|(k, c)| (k.clone(), -c))
                .collect(),
            entangled: self.entangled,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_rat(&self, r: &Rational) -> Self {
        if r.is_zero() && !self.entangled {
            return AffineScalar::zero();
        }
        AffineScalar {
            constant: &self.constant * r,
            linear: self
                .linear
                .iter()
                .map(|(u, c)| (u.clone(), c * r))
                .collect(),
            quadratic: self
                .quadratic
                .iter()
                .map(|(k, c)| (k.clone(), c * r))
                .collect(),
            entangled: self.entangled,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return AffineScalar::zero();
        }
        let mut out = other.mul_rat(&self.constant);
        if !self.linear.is_empty() {
            // linear * constant
            for (u, c) in &self.linear {
                add_term(&mut out.linear, u.clone(), c * &other.constant);
            }
            // linear * linear -> quadratic
            for (u, cu) in &self.linear {
                for (v, cv) in &other.linear {
                    let key = if u <= v {
                        (u.clone(), v.clone())
                    } else {
                        (v.clone(), u.clone())
                    };
                    add_term(&mut out.quadratic, key, cu * cv);
                }
            }
            // linear * quadratic -> entangled
            if !other.quadratic.is_empty() {
                out.entangled = true;
            }
        }
        if !self.quadratic.is_empty() {
            for (k, c) in &self.quadratic {
                add_term(&mut out.quadratic, k.clone(), c * &other.constant);
            }
            if !other.linear.is_empty() || !other.quadratic.is_empty() {
                out.entangled = true;
            }
        }
        out.entangled |= self.entangled || other.entangled;
        out
    }

    /// Substitute committed values for unknowns. Quadratic terms collapse to
    /// linear or constant ones as their factors resolve.
    pub fn resolve(&self, lookup: &dyn Fn(&Unknown) -> Option<Rational>) -> Self {
        let mut out = AffineScalar::from_rat(self.constant.clone());
        out.entangled = self.entangled;
        for (u, c) in &self.linear {
            match lookup(u) {
                Some(v) => out.constant += c * &v,
                None => add_term(&mut out.linear, u.clone(), c.clone()),
            }
        }
        for ((u, v), c) in &self.quadratic {
            match (lookup(u), lookup(v)) {
                (Some(a), Some(b)) => out.constant += &(c * &a) * &b,
                (Some(a), None) => add_term(&mut out.linear, v.clone(), c * &a),
                (None, Some(b)) => add_term(&mut out.linear, u.clone(), c * &b),
                (None, None) => add_term(&mut out.quadratic, (u.clone(), v.clone()), c.clone()),
            }
        }
        out
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, val: Rational) {
    if val.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(val);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += val;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl fmt::Display for AffineScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.constant.is_zero() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (u, c) in &self.linear {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c, u)?;
            first = false;
        }
        for ((u, v), c) in &self.quadratic {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}*{}", c, u, v)?;
            first = false;
        }
        if self.entangled {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "<entangled>")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AffineScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(name: &str, d: u32, i: u32) -> AffineScalar {
        AffineScalar::from_unknown(Unknown::new(name, d, i))
    }

    #[test]
    fn linear_arithmetic_cancels() {
        let a = u("a", 1, 0);
        let two_a = a.add(&a);
        let diff = two_a.sub(&a.mul_rat(&Rational::from_int(2)));
        assert!(diff.is_zero());
    }

    #[test]
    fn quadratic_bucket_and_cancellation() {
        let a = u("a", 1, 0);
        let b = u("b", 1, 0);
        let ab = a.mul(&b);
        assert!(!ab.is_affine());
        let ba = b.mul(&a);
        assert!(ab.sub(&ba).is_zero());
    }

    #[test]
    fn cubic_entangles() {
        let a = u("a", 1, 0);
        let sq = a.mul(&a);
        let cube = sq.mul(&a);
        assert!(cube.entangled);
    }

    #[test]
    fn resolve_collapses() {
        let a = Unknown::new("a", 1, 0);
        let b = Unknown::new("b", 1, 0);
        let expr = AffineScalar::from_unknown(a.clone())
            .mul(&AffineScalar::from_unknown(b.clone()))
            .add(&AffineScalar::from_unknown(b.clone()));
        let resolved = expr.resolve(&|x| {
            if *x == a {
                Some(Rational::from_int(3))
            } else {
                None
            }
        });
        assert!(resolved.is_affine());
        assert_eq!(
            resolved.linear.get(&b).cloned(),
            Some(Rational::from_int(4))
        );
    }
}
