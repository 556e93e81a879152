//! The split presentation: heads carry Lie series over the tail alphabet,
//! wheels live on tails alone. All strand surgery (deletion, doubling,
//! stitching, the tail-by-head action) has exact formulas here, which is
//! what makes this presentation compute knot-theoretic operations that the
//! lower-interlaced one cannot express strand by strand.

use crate::error::AwError;
use crate::relabel::{cw_embed, lie_embed, LinearSub};
use freelie::alphabet::Alphabet;
use freelie::cyclic::CwSeries;
use freelie::lie::LieSeries;
use freelie::tangent::map_cw;
use freelie::{j_u, rc_single};
use scalars::{Coeff, Rational};
use std::collections::BTreeMap;

pub struct Es<C: Coeff> {
    /// Head labels, sorted, each with its Lie series over the tails.
    lambda: BTreeMap<String, LieSeries<C>>,
    tails: Alphabet,
    omega: CwSeries<C>,
}

impl<C: Coeff> Clone for Es<C> {
    fn clone(&self) -> Self {
        Es {
            lambda: self.lambda.clone(),
            tails: self.tails.clone(),
            omega: self.omega.clone(),
        }
    }
}

impl<C: Coeff> Es<C> {
    pub fn new(lambda: Vec<(String, LieSeries<C>)>, omega: CwSeries<C>) -> Self {
        let tails = omega.alphabet().clone();
        let mut map = BTreeMap::new();
        for (h, s) in lambda {
            assert_eq!(s.alphabet(), &tails, "head component over wrong tails");
            let dup = map.insert(h, s);
            assert!(dup.is_none(), "duplicate head label");
        }
        Es {
            lambda: map,
            tails,
            omega,
        }
    }

    /// Unit on equal head and tail sets.
    pub fn unit(strands: &[&str]) -> Self {
        let ab = Alphabet::new(strands.iter().copied());
        let lambda = strands
            .iter()
            .map(|s| (s.to_string(), LieSeries::zero(ab.clone())))
            .collect();
        Es::new(lambda, CwSeries::zero(ab))
    }

    pub fn random(strands: &[&str], seed: u64) -> Self {
        let ab = Alphabet::new(strands.iter().copied());
        let lambda = strands
            .iter()
            .enumerate()
            .map(|(i, s)| {
                (
                    s.to_string(),
                    LieSeries::random(ab.clone(), seed.wrapping_add(i as u64 * 0x9e37 + 1)),
                )
            })
            .collect();
        Es::new(lambda, CwSeries::random(ab, seed ^ 0xE5E5))
    }

    pub fn heads(&self) -> Vec<&str> {
        self.lambda.keys().map(|s| s.as_str()).collect()
    }

    pub fn tails(&self) -> &Alphabet {
        &self.tails
    }

    pub fn omega(&self) -> &CwSeries<C> {
        &self.omega
    }

    pub fn head(&self, name: &str) -> Result<&LieSeries<C>, AwError> {
        self.lambda
            .get(name)
            .ok_or_else(|| AwError::UnknownLabel(name.to_owned()))
    }

    pub fn has_head(&self, name: &str) -> bool {
        self.lambda.contains_key(name)
    }

    pub fn has_tail(&self, name: &str) -> bool {
        self.tails.contains(name)
    }

    pub fn eq_through(&self, other: &Es<C>, max_degree: u32) -> bool {
        if self.heads() != other.heads() || self.tails != other.tails {
            return false;
        }
        self.lambda
            .iter()
            .all(|(h, s)| s.eq_through(&other.lambda[h], max_degree).iter().all(|&t| t))
            && self
                .omega
                .eq_through(&other.omega, max_degree)
                .iter()
                .all(|&t| t)
    }

    pub fn is_unit_through(&self, max_degree: u32) -> bool {
        self.lambda.values().all(|s| s.is_zero_through(max_degree))
            && self.omega.is_zero_through(max_degree)
    }

    pub fn force(&self, max_degree: u32) -> Es<C> {
        Es {
            lambda: self
                .lambda
                .iter()
                .map(|(h, s)| (h.clone(), s.force(max_degree)))
                .collect(),
            tails: self.tails.clone(),
            omega: self.omega.force(max_degree),
        }
    }

    fn sub_tails(&self, sub: &LinearSub<C>) -> Es<C> {
        Es {
            lambda: self
                .lambda
                .iter()
                .map(|(h, s)| (h.clone(), sub.apply_lie(s)))
                .collect(),
            tails: sub.target.clone(),
            omega: sub.apply_cw(&self.omega),
        }
    }
}

fn identity_images<C: Coeff>(names: &[String]) -> Vec<(String, Vec<(String, C)>)> {
    names
        .iter()
        .map(|n| (n.clone(), vec![(n.clone(), C::one())]))
        .collect()
}

/// Disjoint union.
pub fn union<C: Coeff>(a: &Es<C>, b: &Es<C>) -> Result<Es<C>, AwError> {
    for h in b.heads() {
        if a.has_head(h) {
            return Err(AwError::LabelClash(h.to_owned()));
        }
    }
    for t in b.tails.names() {
        if a.tails.contains(t) {
            return Err(AwError::LabelClash(t.clone()));
        }
    }
    let tails = a.tails.union(&b.tails);
    let mut lambda: Vec<(String, LieSeries<C>)> = Vec::new();
    for (h, s) in &a.lambda {
        lambda.push((h.clone(), lie_embed(s, &tails)));
    }
    for (h, s) in &b.lambda {
        lambda.push((h.clone(), lie_embed(s, &tails)));
    }
    let omega = cw_embed(&a.omega, &tails).add(&cw_embed(&b.omega, &tails));
    Ok(Es::new(lambda, omega))
}

pub fn extend<C: Coeff>(e: &Es<C>, extra: &[&str]) -> Es<C> {
    if extra.is_empty() {
        return e.clone();
    }
    union(e, &Es::unit(extra)).expect("extension labels clash")
}

/// The per-strand product: heads multiply by BCH, wheels add.
pub fn hash<C: Coeff>(a: &Es<C>, b: &Es<C>) -> Es<C> {
    assert_eq!(a.heads(), b.heads(), "head sets differ");
    assert_eq!(a.tails, b.tails, "tail sets differ");
    let lambda = a
        .lambda
        .iter()
        .map(|(h, s)| (h.clone(), s.bch(&b.lambda[h])))
        .collect();
    Es::new(lambda, a.omega.add(&b.omega))
}

pub fn delete_head<C: Coeff>(e: &Es<C>, x: &str) -> Result<Es<C>, AwError> {
    e.head(x)?;
    let mut out = e.clone();
    out.lambda.remove(x);
    Ok(out)
}

pub fn delete_tail<C: Coeff>(e: &Es<C>, u: &str) -> Result<Es<C>, AwError> {
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    let target = Alphabet::new(e.tails.names().iter().filter(|n| *n != u).cloned());
    let mut map = identity_images::<C>(
        &e.tails
            .names()
            .iter()
            .filter(|n| *n != u)
            .cloned()
            .collect::<Vec<_>>(),
    );
    map.push((u.to_owned(), vec![]));
    let sub = LinearSub::new(e.tails.clone(), target, map);
    Ok(e.sub_tails(&sub))
}

/// Reverses one head strand: negates its component.
pub fn head_adjoint<C: Coeff>(e: &Es<C>, x: &str) -> Result<Es<C>, AwError> {
    e.head(x)?;
    let mut out = e.clone();
    let s = out.lambda[x].neg();
    out.lambda.insert(x.to_owned(), s);
    Ok(out)
}

/// The tail adjoint is the identity.
pub fn tail_adjoint<C: Coeff>(e: &Es<C>, u: &str) -> Result<Es<C>, AwError> {
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    Ok(e.clone())
}

/// The head antipode coincides with the head adjoint.
pub fn head_antipode<C: Coeff>(e: &Es<C>, x: &str) -> Result<Es<C>, AwError> {
    head_adjoint(e, x)
}

/// The tail antipode sends the tail letter to its negative everywhere.
pub fn tail_antipode<C: Coeff>(e: &Es<C>, u: &str) -> Result<Es<C>, AwError> {
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    let mut map = identity_images::<C>(
        &e.tails
            .names()
            .iter()
            .filter(|n| *n != u)
            .cloned()
            .collect::<Vec<_>>(),
    );
    map.push((u.to_owned(), vec![(u.to_owned(), C::one().neg())]));
    let sub = LinearSub::new(e.tails.clone(), e.tails.clone(), map);
    Ok(e.sub_tails(&sub))
}

/// Stitches head x then head y into a new head z: BCH of the components.
pub fn head_mul<C: Coeff>(e: &Es<C>, x: &str, y: &str, z: &str) -> Result<Es<C>, AwError> {
    let sx = e.head(x)?.clone();
    let sy = e.head(y)?.clone();
    if x == y {
        return Err(AwError::LabelClash(x.to_owned()));
    }
    let mut out = e.clone();
    out.lambda.remove(x);
    out.lambda.remove(y);
    if out.lambda.contains_key(z) {
        return Err(AwError::LabelClash(z.to_owned()));
    }
    out.lambda.insert(z.to_owned(), sx.bch(&sy));
    Ok(out)
}

/// Merges tails u and v into w (commutative in u, v).
pub fn tail_mul<C: Coeff>(e: &Es<C>, u: &str, v: &str, w: &str) -> Result<Es<C>, AwError> {
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    if !e.has_tail(v) || u == v {
        return Err(AwError::UnknownLabel(v.to_owned()));
    }
    let kept: Vec<String> = e
        .tails
        .names()
        .iter()
        .filter(|n| *n != u && *n != v)
        .cloned()
        .collect();
    if kept.iter().any(|n| n == w) {
        return Err(AwError::LabelClash(w.to_owned()));
    }
    let target = Alphabet::new(kept.iter().cloned().chain([w.to_owned()]));
    let mut map = identity_images::<C>(&kept);
    map.push((u.to_owned(), vec![(w.to_owned(), C::one())]));
    map.push((v.to_owned(), vec![(w.to_owned(), C::one())]));
    let sub = LinearSub::new(e.tails.clone(), target, map);
    Ok(e.sub_tails(&sub))
}

pub fn head_double<C: Coeff>(e: &Es<C>, x: &str, y: &str, z: &str) -> Result<Es<C>, AwError> {
    let s = e.head(x)?.clone();
    let mut out = e.clone();
    out.lambda.remove(x);
    for n in [y, z] {
        if out.lambda.contains_key(n) {
            return Err(AwError::LabelClash(n.to_owned()));
        }
    }
    if y == z {
        return Err(AwError::LabelClash(y.to_owned()));
    }
    out.lambda.insert(y.to_owned(), s.clone());
    out.lambda.insert(z.to_owned(), s);
    Ok(out)
}

pub fn tail_double<C: Coeff>(e: &Es<C>, u: &str, v: &str, w: &str) -> Result<Es<C>, AwError> {
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    let kept: Vec<String> = e.tails.names().iter().filter(|n| *n != u).cloned().collect();
    for n in [v, w] {
        if kept.iter().any(|k| k == n) {
            return Err(AwError::LabelClash(n.to_owned()));
        }
    }
    if v == w {
        return Err(AwError::LabelClash(v.to_owned()));
    }
    let target = Alphabet::new(kept.iter().cloned().chain([v.to_owned(), w.to_owned()]));
    let mut map = identity_images::<C>(&kept);
    map.push((
        u.to_owned(),
        vec![(v.to_owned(), C::one()), (w.to_owned(), C::one())],
    ));
    let sub = LinearSub::new(e.tails.clone(), target, map);
    Ok(e.sub_tails(&sub))
}

pub fn head_rename<C: Coeff>(e: &Es<C>, x: &str, y: &str) -> Result<Es<C>, AwError> {
    if x == y {
        return Ok(e.clone());
    }
    let s = e.head(x)?.clone();
    let mut out = e.clone();
    out.lambda.remove(x);
    if out.lambda.contains_key(y) {
        return Err(AwError::LabelClash(y.to_owned()));
    }
    out.lambda.insert(y.to_owned(), s);
    Ok(out)
}

pub fn tail_rename<C: Coeff>(e: &Es<C>, u: &str, v: &str) -> Result<Es<C>, AwError> {
    if u == v {
        return Ok(e.clone());
    }
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    let kept: Vec<String> = e.tails.names().iter().filter(|n| *n != u).cloned().collect();
    if kept.iter().any(|n| n == v) {
        return Err(AwError::LabelClash(v.to_owned()));
    }
    let target = Alphabet::new(kept.iter().cloned().chain([v.to_owned()]));
    let mut map = identity_images::<C>(&kept);
    map.push((u.to_owned(), vec![(v.to_owned(), C::one())]));
    let sub = LinearSub::new(e.tails.clone(), target, map);
    Ok(e.sub_tails(&sub))
}

/// The tail-by-head action: a copy of the head-x exponential is stitched
/// on top of tail u. The tails transform by the inverse conjugation on u
/// by λ_x, and the wheels pick up the partial-Jacobian correction before
/// transforming the same way.
pub fn tail_head_action<C: Coeff>(e: &Es<C>, u: &str, x: &str) -> Result<Es<C>, AwError> {
    let gamma = e.head(x)?.clone();
    if !e.has_tail(u) {
        return Err(AwError::UnknownLabel(u.to_owned()));
    }
    let m = rc_single(u, &gamma);
    let lambda = e
        .lambda
        .iter()
        .map(|(h, s)| (h.clone(), m.apply(s)))
        .collect();
    let omega = map_cw(&m, &e.omega.add(&j_u(u, &gamma)));
    Ok(Es {
        lambda,
        tails: e.tails.clone(),
        omega,
    })
}

// ---------------------------------------------------------------------
// Composite operations for elements with equal head and tail sets (the
// factored form of one-set elements; the change of viewpoint is a no-op on
// the data, so these composites are definitions, not conversions).
// ---------------------------------------------------------------------

fn assert_strand<C: Coeff>(e: &Es<C>, a: &str) -> Result<(), AwError> {
    if !e.has_head(a) || !e.has_tail(a) {
        return Err(AwError::UnknownLabel(a.to_owned()));
    }
    Ok(())
}

/// Stitches strand a onto strand b, naming the result c.
pub fn stitch<C: Coeff>(e: &Es<C>, a: &str, b: &str, c: &str) -> Result<Es<C>, AwError> {
    assert_strand(e, a)?;
    assert_strand(e, b)?;
    let e = tail_head_action(e, a, b)?;
    let e = head_mul(&e, a, b, c)?;
    tail_mul(&e, a, b, c)
}

/// Single-strand adjoint.
pub fn adjoint_strand<C: Coeff>(e: &Es<C>, a: &str) -> Result<Es<C>, AwError> {
    assert_strand(e, a)?;
    let e = head_adjoint(e, a)?;
    tail_head_action(&e, a, a)
}

/// Single-strand antipode.
pub fn antipode_strand<C: Coeff>(e: &Es<C>, a: &str) -> Result<Es<C>, AwError> {
    assert_strand(e, a)?;
    let e = head_antipode(e, a)?;
    let e = tail_antipode(&e, a)?;
    tail_head_action(&e, a, a)
}

pub fn delete_strand<C: Coeff>(e: &Es<C>, a: &str) -> Result<Es<C>, AwError> {
    assert_strand(e, a)?;
    let e = delete_head(e, a)?;
    delete_tail(&e, a)
}

pub fn double_strand<C: Coeff>(e: &Es<C>, a: &str, b: &str, c: &str) -> Result<Es<C>, AwError> {
    assert_strand(e, a)?;
    let e = head_double(e, a, b, c)?;
    tail_double(&e, a, b, c)
}

pub fn rename_strand<C: Coeff>(e: &Es<C>, a: &str, b: &str) -> Result<Es<C>, AwError> {
    assert_strand(e, a)?;
    let e = head_rename(e, a, b)?;
    tail_rename(&e, a, b)
}

pub fn swap_strands<C: Coeff>(e: &Es<C>, a: &str, b: &str) -> Result<Es<C>, AwError> {
    let tmp = "~swap~";
    let e = rename_strand(e, a, tmp)?;
    let e = rename_strand(&e, b, a)?;
    rename_strand(&e, tmp, b)
}

/// Strand labels common to heads and tails, sorted.
pub fn strand_labels<C: Coeff>(e: &Es<C>) -> Vec<String> {
    e.heads()
        .into_iter()
        .filter(|h| e.has_tail(h))
        .map(|s| s.to_owned())
        .collect()
}

/// The stacking product, via a disjoint copy and per-strand stitching.
pub fn stack<C: Coeff>(a: &Es<C>, b: &Es<C>) -> Es<C> {
    let labels = strand_labels(a);
    assert_eq!(labels, strand_labels(b), "stacking needs equal strand sets");
    let mut shadow = b.clone();
    for l in &labels {
        shadow = rename_strand(&shadow, l, &format!("~{l}")).expect("shadow rename");
    }
    let mut acc = union(a, &shadow).expect("shadow labels clash");
    for l in &labels {
        acc = stitch(&acc, l, &format!("~{l}"), l).expect("stitching shadow");
    }
    acc
}

/// All-strands adjoint, strand by strand in sorted order.
pub fn adjoint_all<C: Coeff>(e: &Es<C>) -> Es<C> {
    let mut acc = e.clone();
    for l in strand_labels(e) {
        acc = adjoint_strand(&acc, &l).expect("adjoint");
    }
    acc
}

pub fn antipode_all<C: Coeff>(e: &Es<C>) -> Es<C> {
    let mut acc = e.clone();
    for l in strand_labels(e) {
        acc = antipode_strand(&acc, &l).expect("antipode");
    }
    acc
}

/// Multiplies every degree-d component by h^d.
pub fn degree_scale<C: Coeff>(e: &Es<C>, h: &Rational) -> Es<C> {
    Es {
        lambda: e
            .lambda
            .iter()
            .map(|(k, s)| (k.clone(), s.degree_scale(h)))
            .collect(),
        tails: e.tails.clone(),
        omega: e.omega.degree_scale(h),
    }
}

/// Componentwise difference (zero iff the elements agree).
pub fn diff<C: Coeff>(a: &Es<C>, b: &Es<C>) -> Es<C> {
    assert_eq!(a.heads(), b.heads());
    assert_eq!(a.tails, b.tails);
    Es {
        lambda: a
            .lambda
            .iter()
            .map(|(h, s)| (h.clone(), s.sub(&b.lambda[h])))
            .collect(),
        tails: a.tails.clone(),
        omega: a.omega.sub(&b.omega),
    }
}

/// The crossing value in the split presentation: same pair of data as in
/// the lower-interlaced one.
pub fn r_power<C: Coeff>(upper: &str, lower: &str, s: &Rational) -> Es<C> {
    if upper == lower {
        panic!("crossing needs two distinct strands");
    }
    let ab = Alphabet::new([upper, lower]);
    let image = LieSeries::generator(ab.clone(), upper).scale_rat(s);
    Es::new(
        vec![
            (upper.to_owned(), LieSeries::zero(ab.clone())),
            (lower.to_owned(), image),
        ],
        CwSeries::zero(ab),
    )
}

pub fn r_plus<C: Coeff>(upper: &str, lower: &str) -> Es<C> {
    r_power(upper, lower, &Rational::one())
}

pub fn r_minus<C: Coeff>(upper: &str, lower: &str) -> Es<C> {
    r_power(upper, lower, &Rational::from_int(-1))
}

/// An element made of wheels alone.
pub fn from_wheels<C: Coeff>(strands: &[&str], omega: CwSeries<C>) -> Es<C> {
    let lambda = strands
        .iter()
        .map(|s| (s.to_string(), LieSeries::zero(omega.alphabet().clone())))
        .collect();
    Es::new(lambda, omega)
}
