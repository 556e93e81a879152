//! Exact sparse Gaussian elimination over ℚ.
//!
//! Pivoting is deterministic: rows are processed in the order given, each
//! reduced against the pivots found so far, and a surviving row contributes
//! a pivot at its first nonzero coefficient in unknown order. Exact
//! arithmetic needs no numerical pivoting. Undetermined unknowns are
//! returned as free and assigned zero.

use crate::affine::AffineScalar;
use crate::rational::Rational;
use crate::unknown::Unknown;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinSolveError {
    #[error("inconsistent linear system: row reduces to {0} = 0")]
    Inconsistent(Rational),
    #[error("equation mentions unknown {0} not in the unknown list")]
    UnlistedUnknown(Unknown),
    #[error("equation is not affine in the unknowns: {0}")]
    NotAffine(AffineScalar),
}

/// A sparse row: sorted (column, coefficient) pairs plus the constant term.
/// The stored equation is `sum coeff * unknown + constant = 0`.
#[derive(Clone, Debug)]
struct Row {
    terms: Vec<(usize, Rational)>,
    constant: Rational,
}

impl Row {
    fn leading(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0)
    }

    /// self -= factor * other, where other is normalized with leading 1.
    fn sub_scaled(&mut self, other: &Row, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ca, _)), Some(&&(cb, _))) if ca == cb => {
                    let va = &a.next().unwrap().1;
                    let vb = &b.next().unwrap().1;
                    let v = va - &(factor * vb);
                    if !v.is_zero() {
                        out.push((ca, v));
                    }
                }
                (Some(&&(ca, _)), Some(&&(cb, _))) if ca < cb => {
                    out.push(a.next().unwrap().clone());
                    let _ = ca;
                }
                (Some(_), Some(_)) => {
                    let (cb, vb) = b.next().unwrap();
                    out.push((*cb, -(factor * vb)));
                }
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (cb, vb) = b.next().unwrap();
                    out.push((*cb, -(factor * vb)));
                }
                (None, None) => break,
            }
        }
        self.terms = out;
        self.constant -= factor * &other.constant;
    }

    fn normalize(&mut self) {
        let lead = self.terms[0].1.clone();
        if lead.is_one() {
            return;
        }
        let inv = lead.recip();
        for (_, v) in &mut self.terms {
            *v *= inv.clone();
        }
        self.constant *= inv;
    }
}

/// Solve `equations = 0` for `unknowns`. Returns the assignment (free
/// unknowns set to zero, solved ones fully resolved to rationals) and the
/// list of free unknowns in unknown order.
pub fn linear_solve(
    equations: &[AffineScalar],
    unknowns: &[Unknown],
) -> Result<(BTreeMap<Unknown, AffineScalar>, Vec<Unknown>), LinSolveError> {
    let col_of: HashMap<&Unknown, usize> = unknowns.iter().zip(0..).collect();

    // pivot_rows[c] = reduced, normalized row whose leading column is c.
    let mut pivot_rows: BTreeMap<usize, Row> = BTreeMap::new();

    for eq in equations {
        if eq.is_zero() {
            continue;
        }
        if !eq.is_affine() {
            return Err(LinSolveError::NotAffine(eq.clone()));
        }
        let mut terms = Vec::with_capacity(eq.linear.len());
        for (u, c) in &eq.linear {
            match col_of.get(u) {
                Some(&col) => terms.push((col, c.clone())),
                None => return Err(LinSolveError::UnlistedUnknown(u.clone())),
            }
        }
        terms.sort_by_key(|t| t.0);
        let mut row = Row {
            terms,
            constant: eq.constant.clone(),
        };
        // Reduce against existing pivots.
        while let Some(lead) = row.leading() {
            match pivot_rows.get(&lead) {
                Some(p) => {
                    let factor = row.terms[0].1.clone();
                    row.sub_scaled(p, &factor);
                }
                None => break,
            }
        }
        match row.leading() {
            Some(lead) => {
                row.normalize();
                pivot_rows.insert(lead, row);
            }
            None => {
                if !row.constant.is_zero() {
                    return Err(LinSolveError::Inconsistent(row.constant));
                }
            }
        }
    }

    // Back-substitution with free unknowns pinned to zero.
    let mut values: Vec<Option<Rational>> = vec![None; unknowns.len()];
    let mut free = Vec::new();
    for (col, _) in unknowns.iter().enumerate() {
        if !pivot_rows.contains_key(&col) {
            values[col] = Some(Rational::zero());
            free.push(unknowns[col].clone());
        }
    }
    for (&col, row) in pivot_rows.iter().rev() {
        let mut val = -&row.constant;
        for (c, coeff) in row.terms.iter().skip(1) {
            let dep = values[*c]
                .clone()
                .expect("columns right of a pivot are resolved first");
            val -= coeff * &dep;
        }
        values[col] = Some(val);
    }

    let assignment = unknowns
        .iter()
        .zip(values)
        .map(|(u, v)| (u.clone(), AffineScalar::from_rat(v.unwrap())))
        .collect();
    Ok((assignment, free))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aff(c: i64) -> AffineScalar {
        AffineScalar::from_rat(Rational::from_int(c))
    }

    fn term(u: &Unknown, c: i64) -> AffineScalar {
        AffineScalar::from_unknown(u.clone()).mul_rat(&Rational::from_int(c))
    }

    #[test]
    fn one_equation_one_unknown() {
        // 2u - 1 = 0  =>  u = 1/2
        let u = Unknown::new("u", 1, 0);
        let eq = term(&u, 2).add(&aff(-1));
        let (assign, free) = linear_solve(&[eq], &[u.clone()]).unwrap();
        assert_eq!(assign[&u].as_rational().unwrap(), Rational::ratio(1, 2));
        assert!(free.is_empty());
    }

    #[test]
    fn underdetermined_sets_free_to_zero() {
        // u + v = 0 with unknowns [u, v]: v is free and zero, so u = 0.
        let u = Unknown::new("u", 1, 0);
        let v = Unknown::new("v", 1, 1);
        let eq = term(&u, 1).add(&term(&v, 1));
        let (assign, free) = linear_solve(&[eq], &[u.clone(), v.clone()]).unwrap();
        assert_eq!(free, vec![v.clone()]);
        assert!(assign[&u].is_zero());
        assert!(assign[&v].is_zero());
    }

    #[test]
    fn inconsistent_reported() {
        let u = Unknown::new("u", 1, 0);
        let eqs = [term(&u, 1).add(&aff(-1)), term(&u, 1).add(&aff(-2))];
        assert!(matches!(
            linear_solve(&eqs, &[u]),
            Err(LinSolveError::Inconsistent(_))
        ));
    }

    /// Dense textbook elimination, used as an independent oracle.
    fn dense_solve(
        equations: &[AffineScalar],
        unknowns: &[Unknown],
    ) -> Result<(Vec<Rational>, usize), ()> {
        let n = unknowns.len();
        let mut rows: Vec<Vec<Rational>> = equations
            .iter()
            .map(|eq| {
                let mut r = vec![Rational::zero(); n + 1];
                for (u, c) in &eq.linear {
                    let col = unknowns.iter().position(|x| x == u).unwrap();
                    r[col] = c.clone();
                }
                r[n] = eq.constant.clone();
                r
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next_row = 0;
        for col in 0..n {
            let Some(r) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next_row, r);
            let inv = rows[next_row][col].recip();
            for v in rows[next_row].iter_mut() {
                *v *= inv.clone();
            }
            for r2 in 0..rows.len() {
                if r2 != next_row && !rows[r2][col].is_zero() {
                    let f = rows[r2][col].clone();
                    for c2 in 0..=n {
                        let delta = &f * &rows[next_row][c2];
                        rows[r2][c2] -= delta;
                    }
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
        }
        for r in rows.iter().skip(next_row) {
            if !r[n].is_zero() {
                return Err(());
            }
        }
        let mut vals = vec![Rational::zero(); n];
        for (r, c) in pivots.iter().rev() {
            let mut v = -&rows[*r][n];
            for c2 in c + 1..n {
                v -= &rows[*r][c2] * &vals[c2];
            }
            vals[*c] = v;
        }
        Ok((vals, n - pivots.len()))
    }

    #[test]
    fn agrees_with_dense_oracle_on_random_systems() {
        // Deterministic splitmix-style pseudo-random small systems.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _case in 0..200 {
            let n = 1 + (next() % 8) as usize;
            let m = 1 + (next() % 10) as usize;
            let unknowns: Vec<Unknown> =
                (0..n).map(|i| Unknown::new("u", 1, i as u32)).collect();
            let eqs: Vec<AffineScalar> = (0..m)
                .map(|_| {
                    let mut e = AffineScalar::from_rat(Rational::from_int(
                        (next() % 5) as i64 - 2,
                    ));
                    for u in &unknowns {
                        let c = (next() % 5) as i64 - 2;
                        e = e.add(&term(u, c));
                    }
                    e
                })
                .collect();
            let ours = linear_solve(&eqs, &unknowns);
            let oracle = dense_solve(&eqs, &unknowns);
            match (ours, oracle) {
                (Ok((assign, free)), Ok((_, free_count))) => {
                    assert_eq!(free.len(), free_count);
                    // Residual check: substituting must zero every equation.
                    for eq in &eqs {
                        let r = eq.resolve(&|u| assign[u].as_rational());
                        assert!(r.is_zero(), "nonzero residual {r}");
                    }
                }
                (Err(LinSolveError::Inconsistent(_)), Err(())) => {}
                (a, b) => panic!("solver disagreement: {a:?} vs oracle {b:?}"),
            }
        }
    }
}
