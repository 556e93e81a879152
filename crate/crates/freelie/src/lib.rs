//! The degree-completed free Lie algebra on Lyndon bases, cyclic words,
//! and the tangential-derivation calculus connecting them: graded lazy
//! series with exact rational (or symbolic) coefficients, brackets, BCH,
//! substitutions, the closure functionals into wheels, conjugation
//! automorphisms, and the ODE-defined conversion maps.

pub mod alphabet;
pub mod bernoulli;
pub mod cyclic;
pub mod fa;
pub mod fmt;
pub mod functionals;
pub mod lie;
pub mod lyndon;
pub mod random;
pub mod series;
pub mod tangent;

pub use alphabet::{Alphabet, Letter, Word};
pub use cyclic::{cw_from_lie_word, cw_substitute, CwSeries, CycWord};
pub use functionals::{div, div_raw, div_u, j, j_raw, j_u, tr_u};
pub use lie::{bch_template_part, BracketTree, LieMorphism, LieSeries};
pub use lyndon::{is_lyndon, lyndon_count, lyndon_words, necklace_count};
pub use series::Series;
pub use tangent::{
    bch_tb, conj_morphism, conj_single, eval_map_at, exp_tder_cw, exp_tder_lie, gamma, gamma_t,
    lambda_map, lambda_t, map_cw, map_values, rc_single, Derivation, TangentMap,
};
