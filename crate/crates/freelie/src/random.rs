//! Deterministic pseudo-random coefficients for seeded sample elements.
//! Each coefficient is drawn independently from a splitmix64 hash of
//! (seed, degree, word), so series are reproducible across platforms and
//! extend indefinitely. Values are small integers in [-2, 2] to keep exact
//! arithmetic cheap.

use crate::alphabet::Letter;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

pub fn coeff_for(seed: u64, degree: u32, word: &[Letter]) -> i64 {
    let mut h = splitmix64(seed ^ 0x5851f42d4c957f2d);
    h = splitmix64(h ^ degree as u64);
    for &l in word {
        h = splitmix64(h ^ (l as u64 + 0x100));
    }
    (h % 5) as i64 - 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let a = coeff_for(0, 3, &[0, 1, 1]);
        let b = coeff_for(0, 3, &[0, 1, 1]);
        assert_eq!(a, b);
        for seed in 0..20 {
            for d in 1..6 {
                let c = coeff_for(seed, d, &[0, 1]);
                assert!((-2..=2).contains(&c));
            }
        }
    }
}
