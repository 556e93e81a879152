//! Bernoulli numbers, generated on demand with exact rationals. Both sign
//! conventions for B1 are exposed since the operator series z/(e^z - 1)
//! and z/(1 - e^{-z}) differ exactly there.

use once_cell::sync::Lazy;
use scalars::Rational;
use std::sync::Mutex;

static CACHE: Lazy<Mutex<Vec<Rational>>> = Lazy::new(|| Mutex::new(vec![Rational::one()]));

/// B_n with the B_1 = -1/2 convention: z/(e^z-1) = sum B_n z^n / n!.
pub fn bernoulli(n: u32) -> Rational {
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n as usize {
        let m = cache.len();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rational::zero();
        for (j, bj) in cache.iter().enumerate() {
            acc += &binomial(m as u64 + 1, j as u64) * bj;
        }
        let b = -acc / binomial(m as u64 + 1, m as u64);
        cache.push(b);
    }
    cache[n as usize].clone()
}

fn binomial(n: u64, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * Rational::from_int((n - i) as i64) / Rational::from_int((i + 1) as i64);
    }
    acc
}

/// Coefficient of z^k in z/(e^z - 1): B_k / k!.
pub fn todd_minus(k: u32) -> Rational {
    bernoulli(k).mul_by_recip_factorial(k)
}

/// Coefficient of z^k in z/(1 - e^{-z}): B_k / k! with B_1 = +1/2.
pub fn todd_plus(k: u32) -> Rational {
    if k == 1 {
        Rational::ratio(1, 2)
    } else {
        todd_minus(k)
    }
}

/// Coefficient of z^k in (e^z - 1)/z: 1/(k+1)!.
pub fn expm1_over_z(k: u32) -> Rational {
    Rational::one().mul_by_recip_factorial(k + 1)
}

trait RecipFactorial {
    fn mul_by_recip_factorial(self, k: u32) -> Rational;
}

impl RecipFactorial for Rational {
    fn mul_by_recip_factorial(self, k: u32) -> Rational {
        let mut f = Rational::one();
        for i in 1..=k as i64 {
            f = f * Rational::from_int(i);
        }
        self / f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), Rational::ratio(-1, 2));
        assert_eq!(bernoulli(2), Rational::ratio(1, 6));
        assert_eq!(bernoulli(3), Rational::zero());
        assert_eq!(bernoulli(4), Rational::ratio(-1, 30));
        assert_eq!(bernoulli(12), Rational::ratio(-691, 2730));
    }

    #[test]
    fn todd_coefficients() {
        assert_eq!(todd_minus(1), Rational::ratio(-1, 2));
        assert_eq!(todd_plus(1), Rational::ratio(1, 2));
        assert_eq!(todd_minus(2), Rational::ratio(1, 12));
        assert_eq!(todd_minus(4), Rational::ratio(-1, 720));
    }
}
