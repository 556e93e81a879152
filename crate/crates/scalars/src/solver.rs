//! The degree-staged equation solver.
//!
//! Graded equations whose degree-k slice is affine-linear in the unknowns of
//! degree k + shift (once all lower-degree unknowns are committed) are solved
//! one degree at a time: evaluate every residual at the appropriate degree,
//! read off scalar equations, eliminate, commit the solved values, and move
//! up. Undetermined coefficients default to zero and the choice is logged;
//! the log is the only place the choice is visible.

use crate::affine::AffineScalar;
use crate::linsolve::{linear_solve, LinSolveError};
use crate::rational::Rational;
use crate::unknown::Unknown;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

type DimFn = dyn Fn(u32) -> usize + Send + Sync;
type LabelFn = dyn Fn(u32, u32) -> String + Send + Sync;

/// One family of unknowns: a name, the size of its degree-d coefficient
/// basis, and a printable label per basis slot (used by the solve log).
pub struct FamilyDecl {
    pub name: String,
    dim: Box<DimFn>,
    label: Box<LabelFn>,
}

/// Declares unknown families and holds committed values. Single-owner
/// during a solve; concurrent solves need separate registries.
#[derive(Default)]
pub struct UnknownRegistry {
    families: Vec<FamilyDecl>,
    committed: BTreeMap<Unknown, Rational>,
}

impl UnknownRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(
        &mut self,
        name: &str,
        dim: impl Fn(u32) -> usize + Send + Sync + 'static,
        label: impl Fn(u32, u32) -> String + Send + Sync + 'static,
    ) {
        assert!(
            self.families.iter().all(|f| f.name != name),
            "family {name} declared twice"
        );
        self.families.push(FamilyDecl {
            name: name.to_owned(),
            dim: Box::new(dim),
            label: Box::new(label),
        });
    }

    pub fn value(&self, u: &Unknown) -> Option<Rational> {
        self.committed.get(u).cloned()
    }

    pub fn commit(&mut self, u: Unknown, v: Rational) {
        self.committed.insert(u, v);
    }

    pub fn label(&self, u: &Unknown) -> String {
        match self.families.iter().find(|f| *f.name == *u.family) {
            Some(f) => (f.label)(u.degree, u.index),
            None => format!("#{}", u.index),
        }
    }

    /// All unknowns of one degree, ordered by family declaration order and
    /// basis index within each family.
    pub fn unknowns_of_degree(&self, degree: u32) -> Vec<Unknown> {
        let mut out = Vec::new();
        for f in &self.families {
            for i in 0..(f.dim)(degree) {
                out.push(Unknown::new(&f.name, degree, i as u32));
            }
        }
        out
    }

    /// A snapshot of the committed assignment, cheap to share with series
    /// builders.
    pub fn snapshot(&self) -> RegistrySnapshot {
        RegistrySnapshot {
            committed: Arc::new(self.committed.clone()),
        }
    }
}

/// Immutable view of the committed assignment at the start of a stage.
#[derive(Clone)]
pub struct RegistrySnapshot {
    committed: Arc<BTreeMap<Unknown, Rational>>,
}

impl RegistrySnapshot {
    pub fn value(&self, u: &Unknown) -> Option<Rational> {
        self.committed.get(u).cloned()
    }

    /// The coefficient for one basis slot: the committed rational if the
    /// unknown is already solved, the symbolic unknown otherwise.
    pub fn coeff(&self, family: &str, degree: u32, index: u32) -> AffineScalar {
        let u = Unknown::new(family, degree, index);
        match self.committed.get(&u) {
            Some(v) => AffineScalar::from_rat(v.clone()),
            None => AffineScalar::from_unknown(u),
        }
    }
}

/// A graded family of scalar equations, re-evaluated against the current
/// assignment at every stage.
pub trait Residual: Send + Sync {
    fn name(&self) -> &str;

    /// Degree shift: evaluating this residual at degree k constrains the
    /// unknowns of degree k + shift.
    fn degree_shift(&self) -> i64 {
        0
    }

    /// All scalar equations contributed at evaluation degree `k`.
    fn equations_at(&self, snapshot: &RegistrySnapshot, k: u32) -> Vec<AffineScalar>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreedRecord {
    pub unknown: Unknown,
    pub label: String,
}

#[derive(Clone, Debug, Default)]
pub struct SolveEvent {
    pub degree: u32,
    pub solved: Vec<Unknown>,
    pub freed: Vec<FreedRecord>,
}

#[derive(Clone, Debug, Default)]
pub struct SolveLog {
    pub events: Vec<SolveEvent>,
}

impl SolveLog {
    pub fn freed(&self) -> Vec<&FreedRecord> {
        self.events.iter().flat_map(|e| e.freed.iter()).collect()
    }

    /// One JSON object per line, degrees ascending.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            let freed: Vec<serde_json::Value> = e
                .freed
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "family": &*f.unknown.family,
                        "degree": f.unknown.degree,
                        "index": f.unknown.index,
                        "label": f.label,
                    })
                })
                .collect();
            let line = serde_json::json!({
                "degree": e.degree,
                "solved": e.solved.len(),
                "free_set_to_zero": freed,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SolveLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json_lines())
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("degree {degree}: inconsistent system in residual set ({source})")]
    Inconsistent {
        degree: u32,
        source: LinSolveError,
    },
    #[error(
        "degree {degree}: residual {residual} produced a non-affine coefficient \
         (mis-staged equation): {value}"
    )]
    NonlinearEntanglement {
        degree: u32,
        residual: String,
        value: AffineScalar,
    },
    #[error(
        "degree {degree}: residual {residual} involves unknown {unknown} of higher degree \
         (mis-staged equation)"
    )]
    MisStaged {
        degree: u32,
        residual: String,
        unknown: Unknown,
    },
}

/// Solve all residuals degree by degree, committing every unknown of degree
/// <= max_degree into the registry.
pub fn series_solve(
    residuals: &[&dyn Residual],
    registry: &mut UnknownRegistry,
    max_degree: u32,
) -> Result<SolveLog, SolveError> {
    let mut log = SolveLog::default();
    for degree in 1..=max_degree {
        let unknowns = registry.unknowns_of_degree(degree);
        let snapshot = registry.snapshot();
        let mut equations = Vec::new();
        for r in residuals {
            let k = degree as i64 - r.degree_shift();
            if k < 0 {
                continue;
            }
            for eq in r.equations_at(&snapshot, k as u32) {
                let eq = eq.resolve(&|u| snapshot.value(u));
                if eq.is_zero() {
                    continue;
                }
                if !eq.is_affine() {
                    return Err(SolveError::NonlinearEntanglement {
                        degree,
                        residual: r.name().to_owned(),
                        value: eq,
                    });
                }
                if let Some(u) = eq.linear.keys().find(|u| u.degree > degree) {
                    return Err(SolveError::MisStaged {
                        degree,
                        residual: r.name().to_owned(),
                        unknown: u.clone(),
                    });
                }
                equations.push(eq);
            }
        }
        let (assignment, free) = linear_solve(&equations, &unknowns)
            .map_err(|source| SolveError::Inconsistent { degree, source })?;
        let mut event = SolveEvent {
            degree,
            ..Default::default()
        };
        for u in &unknowns {
            let v = assignment[u]
                .as_rational()
                .expect("linear_solve resolves every unknown");
            if free.contains(u) {
                event.freed.push(FreedRecord {
                    unknown: u.clone(),
                    label: registry.label(u),
                });
            } else {
                event.solved.push(u.clone());
            }
            registry.commit(u.clone(), v);
        }
        log.events.push(event);
    }
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Simple;

    // One unknown per degree; equation u_d - d = 0, except degree 2 where
    // the unknown is left unconstrained.
    impl Residual for Simple {
        fn name(&self) -> &str {
            "simple"
        }
        fn equations_at(&self, snap: &RegistrySnapshot, k: u32) -> Vec<AffineScalar> {
            if k == 0 || k == 2 {
                return vec![];
            }
            let u = snap.coeff("u", k, 0);
            vec![u.sub(&AffineScalar::from_rat(Rational::from_int(k as i64)))]
        }
    }

    #[test]
    fn stages_commit_and_log_free_choices() {
        let mut reg = UnknownRegistry::new();
        reg.declare("u", |_| 1, |d, _| format!("u{d}"));
        let log = series_solve(&[&Simple], &mut reg, 3).unwrap();
        assert_eq!(
            reg.value(&Unknown::new("u", 1, 0)),
            Some(Rational::from_int(1))
        );
        assert_eq!(
            reg.value(&Unknown::new("u", 2, 0)),
            Some(Rational::zero())
        );
        assert_eq!(
            reg.value(&Unknown::new("u", 3, 0)),
            Some(Rational::from_int(3))
        );
        let freed = log.freed();
        assert_eq!(freed.len(), 1);
        assert_eq!(freed[0].label, "u2");
    }

    #[test]
    fn empty_residual_list_changes_nothing() {
        let mut reg = UnknownRegistry::new();
        reg.declare("u", |_| 1, |d, _| format!("u{d}"));
        let log = series_solve(&[], &mut reg, 3).unwrap();
        // All unknowns free, all zero.
        assert_eq!(log.freed().len(), 3);
        assert_eq!(
            reg.value(&Unknown::new("u", 2, 0)),
            Some(Rational::zero())
        );
    }
}
