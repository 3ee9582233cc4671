//! Radicals, idempotent lifting, Krull-Schmidt decompositions, isomorphism
//! tests and `add` closures.

mod decompose;
mod lift;
mod poly;
mod radical;

pub use decompose::{
    add_equal, add_membership, decompose, indecomposable_isomorphism, indecomposable_pieces,
    indecomposable_types, is_isomorphic, radical_layers, Decomposition, Piece, Summand,
};
pub(crate) use lift::ensure_split;
pub use lift::{
    algebra_radical, lift_end_algebra, lift_idempotent, lift_primitive_idempotents, split_form,
    LiftedAlgebra,
};
pub use poly::{minimal_polynomial, roots_in_field};
pub use radical::trace_form_radical;
