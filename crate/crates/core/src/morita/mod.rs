//! Schur and Nakayama functors, covers, double centralizer properties,
//! self-injectivity and the Morita algebra condition table.

mod cover;
mod functors;
mod verdict;

pub use cover::{
    centralizer_maps, commutative_cover_check, corner_bimodules, cover_check, cover_check_with,
    double_centralizer_check, idempotent_projective, reduce_cover_to_idempotent, CentralizerMaps,
    CommutativeCover, CoverCertificate, CoverMode, CoverVerdict, FailingPair,
};
pub use functors::{inverse_nakayama, left_part, nakayama, right_part, schur_apply, SchurFunctor};
pub use verdict::{
    is_frobenius_left, is_morita_algebra, is_self_injective, MoritaVerdict, CONDITIONS,
};

#[cfg(test)]
mod tests;
