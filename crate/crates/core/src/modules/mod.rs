//! Modules and bimodules given by action matrices: Hom spaces, endomorphism
//! algebras, duals, tensor products, sums and subquotients.

mod bimodule;
mod build;
mod hom;
mod module;
mod spec;
mod tensor;

pub use bimodule::Bimodule;
pub use build::{
    annihilator, direct_sum, dual_bimodule_of_algebra, injective_indecomposable, is_faithful,
    power, projective_indecomposable, quotient, radical_submodule, regular_bimodule,
    regular_module, simple_module, submodule, DirectSum,
};
pub(crate) use hom::intertwiners;
pub use hom::{end_algebra, hom_bimodule, hom_space, EndAlgebra, HomBasis, HomBimodule, HomSpace};
pub use module::{Module, ModuleHom, Side};
pub use spec::{module_from_spec, ModuleSpec, SpecTerm};
pub use tensor::{tensor_module, tensor_over};

/// `D(M)`; see [`Module::dual`].
pub fn dual_module(m: &Module) -> Module {
    m.dual()
}
