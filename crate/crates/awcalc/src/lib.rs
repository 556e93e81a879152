//! Group-like elements of arrow-diagram spaces through their two
//! tree-and-wheel presentations, the full operation set on each, and the
//! conversions between them. Arrow diagrams themselves are never
//! represented; every element lives as a pair (λ; ω).

pub mod convert;
pub mod el;
pub mod error;
pub mod es;
pub mod json;
pub mod props;
pub mod relabel;

pub use convert::{el_to_es, es_to_el};
pub use error::AwError;
