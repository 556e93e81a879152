//! Lazy graded series: a per-degree generator with synchronized
//! memoization. All public operations request degrees on demand, so a
//! series extends indefinitely; a degree-d part may only depend on data of
//! degree < d of the same series (other series may be probed at any
//! degree).

use scalars::{Coeff, Rational};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, Weak};

pub type PartMap<K, C> = BTreeMap<K, C>;
pub type Part<K, C> = Arc<PartMap<K, C>>;

type Gen<K, C> = Box<dyn Fn(&Series<K, C>, u32) -> PartMap<K, C> + Send + Sync>;

pub struct Series<K, C> {
    inner: Arc<Inner<K, C>>,
}

struct Inner<K, C> {
    memo: Mutex<HashMap<u32, Part<K, C>>>,
    gen: Gen<K, C>,
}

impl<K, C> Clone for Series<K, C> {
    fn clone(&self) -> Self {
        Series {
            inner: self.inner.clone(),
        }
    }
}

impl<K: Ord + Clone + Send + Sync + 'static, C: Coeff> Series<K, C> {
    pub fn new(gen: impl Fn(u32) -> PartMap<K, C> + Send + Sync + 'static) -> Self {
        Series::recursive(move |_, d| gen(d))
    }

    /// A series whose generator may request strictly lower degrees of the
    /// series itself.
    pub fn recursive(
        gen: impl Fn(&Series<K, C>, u32) -> PartMap<K, C> + Send + Sync + 'static,
    ) -> Self {
        let inner = Arc::new_cyclic(|weak: &Weak<Inner<K, C>>| {
            let weak = weak.clone();
            Inner {
                memo: Mutex::new(HashMap::new()),
                gen: Box::new(move |_, d| {
                    let this = Series {
                        inner: weak.upgrade().expect("series vanished during generation"),
                    };
                    gen(&this, d)
                }),
            }
        });
        Series { inner }
    }

    pub fn zero() -> Self {
        Series::new(|_| PartMap::new())
    }

    pub fn from_parts(parts: BTreeMap<u32, PartMap<K, C>>) -> Self {
        Series::new(move |d| parts.get(&d).cloned().unwrap_or_default())
    }

    pub fn single(degree: u32, key: K, coeff: C) -> Self
    where
        K: 'static,
    {
        Series::new(move |d| {
            let mut m = PartMap::new();
            if d == degree && !coeff.is_zero() {
                m.insert(key.clone(), coeff.clone());
            }
            m
        })
    }

    /// The degree-d part, memoized. The lock is not held while generating,
    /// so generators may recurse into lower degrees.
    pub fn part(&self, d: u32) -> Part<K, C> {
        if let Some(p) = self.inner.memo.lock().unwrap().get(&d) {
            return p.clone();
        }
        let mut computed = (self.inner.gen)(self, d);
        computed.retain(|_, c| !c.is_zero());
        let part = Arc::new(computed);
        self.inner
            .memo
            .lock()
            .unwrap()
            .entry(d)
            .or_insert(part)
            .clone()
    }

    pub fn coeff(&self, d: u32, key: &K) -> C {
        self.part(d).get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero_through(&self, max_degree: u32) -> bool {
        (0..=max_degree).all(|d| self.part(d).is_empty())
    }

    /// Per-degree equality flags for degrees 0..=max_degree.
    pub fn eq_through(&self, other: &Self, max_degree: u32) -> Vec<bool> {
        (0..=max_degree)
            .map(|d| *self.part(d) == *other.part(d))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let a = self.clone();
        let b = other.clone();
        Series::new(move |d| {
            let mut out: PartMap<K, C> = (*a.part(d)).clone();
            for (k, c) in b.part(d).iter() {
                add_to(&mut out, k.clone(), c.clone());
            }
            out
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(move |c| c.neg())
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        let r = r.clone();
        if r.is_zero() {
            return Series::zero();
        }
        self.map_coeffs(move |c| c.mul_rat(&r))
    }

    pub fn scale(&self, c: &C) -> Self {
        let c = c.clone();
        self.map_coeffs(move |x| x.mul(&c))
    }

    /// Multiplies the degree-k part by h^k.
    pub fn degree_scale(&self, h: &Rational) -> Self {
        let a = self.clone();
        let h = h.clone();
        Series::new(move |d| {
            let f = h.pow(d);
            a.part(d)
                .iter()
                .map(|(k, c)| (k.clone(), c.mul_rat(&f)))
                .collect()
        })
    }

    /// Multiplies the degree-k part by k.
    pub fn euler(&self) -> Self {
        let a = self.clone();
        Series::new(move |d| {
            let f = Rational::from_int(d as i64);
            a.part(d)
                .iter()
                .map(|(k, c)| (k.clone(), c.mul_rat(&f)))
                .collect()
        })
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C + Send + Sync + 'static) -> Self {
        let a = self.clone();
        Series::new(move |d| {
            a.part(d)
                .iter()
                .map(|(k, c)| (k.clone(), f(c)))
                .collect()
        })
    }

    pub fn map_keys(&self, f: impl Fn(&K) -> K + Send + Sync + 'static) -> Self {
        let a = self.clone();
        Series::new(move |d| {
            let mut out = PartMap::new();
            for (k, c) in a.part(d).iter() {
                add_to(&mut out, f(k), c.clone());
            }
            out
        })
    }

    /// Keeps only degrees for which `keep` is true.
    pub fn filter_degrees(&self, keep: impl Fn(u32) -> bool + Send + Sync + 'static) -> Self {
        let a = self.clone();
        Series::new(move |d| {
            if keep(d) {
                (*a.part(d)).clone()
            } else {
                PartMap::new()
            }
        })
    }

    /// Sum of a degree-indexed family where `terms(k)` has no part below
    /// degree `k`; each part then needs only finitely many summands.
    pub fn sum_bounded(terms: impl Fn(u32) -> Series<K, C> + Send + Sync + 'static) -> Self {
        let cache: Mutex<Vec<Series<K, C>>> = Mutex::new(Vec::new());
        Series::new(move |d| {
            {
                let mut cache = cache.lock().unwrap();
                while cache.len() <= d as usize {
                    let k = cache.len() as u32;
                    cache.push(terms(k));
                }
            }
            let snapshot: Vec<Series<K, C>> = cache.lock().unwrap()[..=d as usize].to_vec();
            let mut out = PartMap::new();
            for t in &snapshot {
                for (k, c) in t.part(d).iter() {
                    add_to(&mut out, k.clone(), c.clone());
                }
            }
            out
        })
    }

    /// Coefficient-type-changing map (e.g. lifting rationals into
    /// polynomial coefficients).
    pub fn map_into<D: Coeff>(
        &self,
        f: impl Fn(&C) -> D + Send + Sync + 'static,
    ) -> Series<K, D> {
        let a = self.clone();
        Series::new(move |d| {
            let mut out = PartMap::new();
            for (k, c) in a.part(d).iter() {
                let v = f(c);
                if !v.is_zero() {
                    out.insert(k.clone(), v);
                }
            }
            out
        })
    }

    /// Eagerly materialize degrees 0..=max into an explicit series.
    pub fn force(&self, max_degree: u32) -> Self {
        let parts: BTreeMap<u32, PartMap<K, C>> = (0..=max_degree)
            .map(|d| (d, (*self.part(d)).clone()))
            .collect();
        Series::from_parts(parts)
    }
}

pub fn add_to<K: Ord, C: Coeff>(map: &mut PartMap<K, C>, key: K, val: C) {
    if val.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(val);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().add(&val);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursive_generators_see_lower_degrees() {
        // f(d) = d copies of the key (), defined via f(d-1).
        let s: Series<(), Rational> = Series::recursive(|this, d| {
            let mut m = PartMap::new();
            if d == 1 {
                m.insert((), Rational::one());
            } else if d > 1 {
                let prev = this.part(d - 1);
                let c = prev.get(&()).cloned().unwrap_or_else(Rational::zero);
                m.insert((), c + Rational::one());
            }
            m
        });
        assert_eq!(s.coeff(5, &()), Rational::from_int(5));
    }

    #[test]
    fn sum_bounded_truncates() {
        // terms(k) = single part at degree k with value 1; sum has 1 at
        // every degree >= 0.
        let s: Series<(), Rational> =
            Series::sum_bounded(|k| Series::single(k, (), Rational::one()));
        assert_eq!(s.coeff(3, &()), Rational::one());
        assert_eq!(s.coeff(0, &()), Rational::one());
    }
}
