//! Conversions between the two presentations. Wheels pass through
//! unchanged; the tree part is transported by the mutually inverse
//! ODE-defined maps.

use crate::el::El;
use crate::es::{strand_labels, Es};
use freelie::tangent::{gamma, lambda_map, TangentMap};
use scalars::Coeff;

/// Lower-interlaced to split.
pub fn el_to_es<C: Coeff>(e: &El<C>) -> Es<C> {
    let g = gamma(&e.lambda);
    let ab = e.strands().clone();
    let lambda = ab
        .letters()
        .map(|l| (ab.name(l).to_owned(), g.image(l).clone()))
        .collect();
    Es::new(lambda, e.omega.clone())
}

/// Split to lower-interlaced; requires equal head and tail sets.
pub fn es_to_el<C: Coeff>(e: &Es<C>) -> El<C> {
    let ab = e.tails().clone();
    let labels = strand_labels(e);
    assert_eq!(
        labels,
        ab.names().to_vec(),
        "conversion needs equal head and tail sets"
    );
    let images = ab
        .letters()
        .map(|l| e.head(ab.name(l)).expect("head exists").clone())
        .collect();
    let tm = TangentMap::from_images(ab, images);
    El::new(lambda_map(&tm), e.omega().clone())
}
