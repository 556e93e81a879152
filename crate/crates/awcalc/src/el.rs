//! The lower-interlaced presentation of group-like elements: pairs
//! (λ; ω) of a tangent map and a wheel series over one strand alphabet,
//! with the stacking product carried by BCH in the tangential bracket.

use crate::error::AwError;
use crate::relabel::{cw_embed, cw_relabel, lie_embed, LinearSub};
use freelie::alphabet::Alphabet;
use freelie::cyclic::CwSeries;
use freelie::lie::LieSeries;
use freelie::tangent::{bch_tb, exp_tder_cw, TangentMap};
use freelie::{j_raw, Word};
use scalars::{Coeff, Rational};

pub struct El<C: Coeff> {
    pub lambda: TangentMap<C>,
    pub omega: CwSeries<C>,
}

impl<C: Coeff> Clone for El<C> {
    fn clone(&self) -> Self {
        El {
            lambda: self.lambda.clone(),
            omega: self.omega.clone(),
        }
    }
}

impl<C: Coeff> El<C> {
    pub fn new(lambda: TangentMap<C>, omega: CwSeries<C>) -> Self {
        assert_eq!(lambda.alphabet(), omega.alphabet(), "strand sets differ");
        El { lambda, omega }
    }

    pub fn unit(strands: &[&str]) -> Self {
        let ab = Alphabet::new(strands.iter().copied());
        El::new(TangentMap::zero(ab.clone()), CwSeries::zero(ab))
    }

    pub fn strands(&self) -> &Alphabet {
        self.lambda.alphabet()
    }

    pub fn random(strands: &[&str], seed: u64) -> Self {
        let ab = Alphabet::new(strands.iter().copied());
        El::new(
            TangentMap::random(ab.clone(), seed),
            CwSeries::random(ab, seed ^ 0xE1E1),
        )
    }

    pub fn eq_through(&self, other: &El<C>, max_degree: u32) -> bool {
        self.strands() == other.strands()
            && self.lambda.eq_through(&other.lambda, max_degree)
            && self
                .omega
                .eq_through(&other.omega, max_degree)
                .iter()
                .all(|&t| t)
    }

    pub fn is_unit_through(&self, max_degree: u32) -> bool {
        self.lambda.is_zero_through(max_degree) && self.omega.is_zero_through(max_degree)
    }

    /// Componentwise difference; zero exactly when the two elements agree.
    pub fn diff(&self, other: &El<C>) -> El<C> {
        assert_eq!(self.strands(), other.strands());
        El {
            lambda: self.lambda.sub(&other.lambda),
            omega: self.omega.sub(&other.omega),
        }
    }

    pub fn force(&self, max_degree: u32) -> El<C> {
        El {
            lambda: self.lambda.force(max_degree),
            omega: self.omega.force(max_degree),
        }
    }
}

/// The value of a crossing, with an arbitrary exponent: λ sends the lower
/// strand label to s times the upper one, everything else to zero, no
/// wheels. s = 1 and s = -1 are the positive and negative crossings.
pub fn r_power<C: Coeff>(upper: &str, lower: &str, s: &Rational) -> El<C> {
    if upper == lower {
        panic!("crossing needs two distinct strands");
    }
    let ab = Alphabet::new([upper, lower]);
    let image = LieSeries::generator(ab.clone(), upper).scale_rat(s);
    let lambda = TangentMap::new(
        ab.clone(),
        vec![
            (upper.to_owned(), LieSeries::zero(ab.clone())),
            (lower.to_owned(), image),
        ],
    );
    El::new(lambda, CwSeries::zero(ab))
}

pub fn r_plus<C: Coeff>(upper: &str, lower: &str) -> El<C> {
    r_power(upper, lower, &Rational::one())
}

pub fn r_minus<C: Coeff>(upper: &str, lower: &str) -> El<C> {
    r_power(upper, lower, &Rational::from_int(-1))
}

/// Disjoint union: concatenation of the λ maps and sum of wheels in the
/// merged alphabet.
pub fn union<C: Coeff>(a: &El<C>, b: &El<C>) -> Result<El<C>, AwError> {
    for n in b.strands().names() {
        if a.strands().contains(n) {
            return Err(AwError::LabelClash(n.clone()));
        }
    }
    let merged = a.strands().union(b.strands());
    let images = merged
        .letters()
        .map(|l| {
            let name = merged.name(l);
            if a.strands().contains(name) {
                lie_embed(a.lambda.get(name), &merged)
            } else {
                lie_embed(b.lambda.get(name), &merged)
            }
        })
        .collect();
    Ok(El::new(
        TangentMap::from_images(merged.clone(), images),
        cw_embed(&a.omega, &merged).add(&cw_embed(&b.omega, &merged)),
    ))
}

/// Extends an element by extra trivial strands.
pub fn extend<C: Coeff>(e: &El<C>, extra: &[&str]) -> El<C> {
    if extra.is_empty() {
        return e.clone();
    }
    union(e, &El::unit(extra)).expect("extension labels clash")
}

/// The stacking product: BCH in the tangential bracket on trees, wheels of
/// the first factor transported below the second.
pub fn stack<C: Coeff>(a: &El<C>, b: &El<C>) -> El<C> {
    assert_eq!(a.strands(), b.strands(), "stacking needs equal strand sets");
    let lambda = bch_tb(&a.lambda, &b.lambda);
    let omega = exp_tder_cw(&b.lambda, &Rational::from_int(-1), &a.omega).add(&b.omega);
    El::new(lambda, omega)
}

/// Deletes one strand: the key is removed and the letter is sent to zero
/// everywhere.
pub fn delete<C: Coeff>(e: &El<C>, a: &str) -> Result<El<C>, AwError> {
    let ab = e.strands();
    if !ab.contains(a) {
        return Err(AwError::UnknownLabel(a.to_owned()));
    }
    let target = Alphabet::new(ab.names().iter().filter(|n| *n != a).cloned());
    let sub = kill_letter_sub::<C>(ab, &target, a);
    let images = target
        .letters()
        .map(|l| sub.apply_lie(e.lambda.get(target.name(l))))
        .collect();
    Ok(El::new(
        TangentMap::from_images(target.clone(), images),
        sub.apply_cw(&e.omega),
    ))
}

fn kill_letter_sub<C: Coeff>(source: &Alphabet, target: &Alphabet, a: &str) -> LinearSub<C> {
    let map = source
        .names()
        .iter()
        .map(|n| {
            if n == a {
                (n.clone(), vec![])
            } else {
                (n.clone(), vec![(n.clone(), C::one())])
            }
        })
        .collect();
    LinearSub::new(source.clone(), target.clone(), map)
}

/// Doubles strand a into daughters b and c: both daughters inherit λ_a,
/// and the letter a is replaced by b + c everywhere.
pub fn double<C: Coeff>(e: &El<C>, a: &str, b: &str, c: &str) -> Result<El<C>, AwError> {
    let ab = e.strands();
    if !ab.contains(a) {
        return Err(AwError::UnknownLabel(a.to_owned()));
    }
    let kept: Vec<String> = ab.names().iter().filter(|n| *n != a).cloned().collect();
    for n in [b, c] {
        if kept.iter().any(|k| k == n) {
            return Err(AwError::LabelClash(n.to_owned()));
        }
    }
    if b == c {
        return Err(AwError::LabelClash(b.to_owned()));
    }
    let target = Alphabet::new(kept.iter().cloned().chain([b.to_owned(), c.to_owned()]));
    let mut map: Vec<(String, Vec<(String, C)>)> = ab
        .names()
        .iter()
        .filter(|n| *n != a)
        .map(|n| (n.clone(), vec![(n.clone(), C::one())]))
        .collect();
    map.push((
        a.to_owned(),
        vec![(b.to_owned(), C::one()), (c.to_owned(), C::one())],
    ));
    let sub = LinearSub::new(ab.clone(), target.clone(), map);
    let images = target
        .letters()
        .map(|l| {
            let name = target.name(l);
            let pre = if name == b || name == c {
                e.lambda.get(a)
            } else {
                e.lambda.get(name)
            };
            sub.apply_lie(pre)
        })
        .collect();
    Ok(El::new(
        TangentMap::from_images(target.clone(), images),
        sub.apply_cw(&e.omega),
    ))
}

/// Renames strand a to b.
pub fn rename<C: Coeff>(e: &El<C>, a: &str, b: &str) -> Result<El<C>, AwError> {
    if a == b {
        return Ok(e.clone());
    }
    let ab = e.strands();
    if !ab.contains(a) {
        return Err(AwError::UnknownLabel(a.to_owned()));
    }
    if ab.names().iter().any(|n| n != a && n == b) {
        return Err(AwError::LabelClash(b.to_owned()));
    }
    let target = Alphabet::new(
        ab.names()
            .iter()
            .map(|n| if n == a { b.to_owned() } else { n.clone() }),
    );
    let table: Vec<_> = ab
        .names()
        .iter()
        .map(|n| {
            let n = if n == a { b } else { n };
            target.letter(n).unwrap()
        })
        .collect();
    let images = target
        .letters()
        .map(|l| {
            let name = target.name(l);
            let old_name = if name == b { a } else { name };
            crate::relabel::lie_relabel(e.lambda.get(old_name), target.clone(), table.clone())
        })
        .collect();
    Ok(El::new(
        TangentMap::from_images(target.clone(), images),
        cw_relabel(&e.omega, target, table),
    ))
}

/// Swap two strand labels.
pub fn swap<C: Coeff>(e: &El<C>, a: &str, b: &str) -> Result<El<C>, AwError> {
    let tmp = "~swap~";
    let e = rename(e, a, tmp)?;
    let e = rename(&e, b, a)?;
    rename(&e, tmp, b)
}

/// The all-strands adjoint: (λ; ω) ↦ (-λ; e^{∂_λ}ω - j(λ)), with the
/// log-Jacobian taken over the raw divergence so that central framing
/// parts leave their one-letter wheels (matching the per-strand
/// composites in the split presentation).
pub fn adjoint_all<C: Coeff>(e: &El<C>) -> El<C> {
    let omega = exp_tder_cw(&e.lambda, &Rational::one(), &e.omega).sub(&j_raw(&e.lambda));
    El::new(e.lambda.neg(), omega)
}

/// The all-strands antipode: the adjoint followed by the parity sign.
pub fn antipode_all<C: Coeff>(e: &El<C>) -> El<C> {
    let adj = adjoint_all(e);
    let minus_one = Rational::from_int(-1);
    El::new(
        adj.lambda.degree_scale(&minus_one),
        adj.omega.degree_scale(&minus_one),
    )
}

/// Multiplies every degree-d component by h^d.
pub fn degree_scale<C: Coeff>(e: &El<C>, h: &Rational) -> El<C> {
    El::new(e.lambda.degree_scale(h), e.omega.degree_scale(h))
}

/// The sum over strands of the one-letter wheels lost by ∂ (the central
/// part of λ), used by consistency checks.
pub fn central_part<C: Coeff>(e: &El<C>) -> Vec<(String, C)> {
    let ab = e.strands();
    ab.letters()
        .map(|l| (ab.name(l).to_owned(), e.lambda.central_coeff(l)))
        .collect()
}

/// exp of a pure wheel: wheels are already the log coordinates of the
/// wheel factor, so the exponential of (0; ω) is itself.
pub fn from_wheels<C: Coeff>(omega: CwSeries<C>) -> El<C> {
    El::new(TangentMap::zero(omega.alphabet().clone()), omega)
}

pub type Strand = Word;
