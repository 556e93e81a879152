//! Exact scalar arithmetic for graded computations: arbitrary-precision
//! rationals, rationals extended by affine-linear symbolic unknowns, exact
//! linear solving, and a degree-staged equation solver.
//!
//! Everything here works over ℚ. There is no floating point anywhere.

pub mod affine;
pub mod coeff;
pub mod linsolve;
pub mod poly;
pub mod rational;
pub mod solver;
pub mod unknown;

pub use affine::AffineScalar;
pub use coeff::Coeff;
pub use linsolve::{linear_solve, LinSolveError};
pub use poly::Poly;
pub use rational::Rational;
pub use solver::{
    series_solve, FreedRecord, Residual, SolveError, SolveEvent, SolveLog, UnknownRegistry,
};
pub use unknown::Unknown;
