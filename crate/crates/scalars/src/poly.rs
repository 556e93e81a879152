//! Dense univariate polynomials over a coefficient ring, themselves usable
//! as series coefficients. The formal variable models an integration or
//! deformation parameter (the `s` of an exactly integrated integrand, the
//! `t` of a graded ODE), so only evaluation and term-wise integration are
//! needed besides ring arithmetic.

use crate::coeff::Coeff;
use crate::rational::Rational;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coeff> {
    /// Coefficients by ascending power; no trailing zeros.
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn constant(c: C) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn var() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, t: &Rational) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_rat(t).add(c);
        }
        acc
    }

    /// Term-wise antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.mul_rat(&Rational::ratio(1, (k + 1) as i64)));
        }
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Definite integral over [0, 1].
    pub fn integrate_unit(&self) -> C {
        self.integrate().eval(&Rational::one())
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rat(r: Rational) -> Self {
        Poly::constant(C::from_rat(r))
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).add(&other.coeff(k)));
        }
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn mul_rat(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.mul_rat(r)).collect(),
        }
    }

    fn try_rat(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs[0].try_rat(),
            _ => None,
        }
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*t", c)?,
                _ => write!(f, "({})*t^{}", c, k)?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrate_and_eval() {
        // p(t) = 1 + 2t, integral over [0,1] is 2.
        let p = Poly::constant(Rational::one()).add(&Poly::monomial(Rational::from_int(2), 1));
        assert_eq!(p.integrate_unit(), Rational::from_int(2));
        assert_eq!(p.eval(&Rational::ratio(1, 2)), Rational::from_int(2));
    }

    #[test]
    fn mul_trims() {
        let t = Poly::<Rational>::var();
        let sq = t.mul(&t);
        assert_eq!(sq.degree(), 2);
        assert!(sq.sub(&Poly::monomial(Rational::one(), 2)).is_zero());
    }
}
