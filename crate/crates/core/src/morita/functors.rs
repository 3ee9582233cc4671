use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::sparse::sparsify;
use crate::exactlin::{Echelon, Field, Matrix, Scalar};
use crate::homological::is_projective;
use crate::krullschmidt::lift_end_algebra;
use crate::modules::{
    dual_bimodule_of_algebra, end_algebra, hom_bimodule, tensor_module, Bimodule, EndAlgebra,
    HomBimodule, Module, Side,
};

/// One side of a bimodule as a module, forgetting the other action.
pub fn left_part(bi: &Bimodule) -> Result<Module> {
    Module::from_actions(
        bi.left_algebra().clone(),
        Side::Left,
        bi.left_actions().to_vec(),
        bi.dim(),
    )
}

pub fn right_part(bi: &Bimodule) -> Result<Module> {
    Module::from_actions(
        bi.right_algebra().clone(),
        Side::Right,
        bi.right_actions().to_vec(),
        bi.dim(),
    )
}

/// Rank of a family of equally shaped matrices, as vectors.
pub(crate) fn matrix_rank(field: Field, ms: &[Matrix]) -> usize {
    let Some(first) = ms.first() else { return 0 };
    let mut ech = Echelon::new(field, first.rows() * first.cols());
    for m in ms {
        ech.insert(sparsify(m.entries()));
    }
    ech.rank()
}

/// The Schur functor `F = Hom_A(P, −)` for a projective left module `P`,
/// landing in left modules over `B = End_A(P)^op` (with lifted primitive
/// idempotents). `B` acts by `b·f = f∘b`.
#[derive(Clone, Debug)]
pub struct SchurFunctor {
    pub projective: Module,
    pub end: EndAlgebra,
    /// `P` as an `(A, B)`-bimodule, in a basis adapted to both sides.
    pub bimodule: Bimodule,
}

impl SchurFunctor {
    pub fn new(p: &Module) -> Result<Self> {
        if p.side() != Side::Left {
            return Err(Error::NotProjective(
                "the Schur functor needs a left module".into(),
            ));
        }
        if p.dim() == 0 {
            return Err(Error::NotProjective(
                "the Schur functor of the zero module is trivial".into(),
            ));
        }
        if !is_projective(p)? {
            return Err(Error::NotProjective(format!(
                "module of dimension {} is not projective",
                p.dim()
            )));
        }
        let end = lift_end_algebra(&end_algebra(p)?)?;
        let (bimodule, _) = end.bimodule()?;
        Ok(SchurFunctor {
            projective: p.clone(),
            end,
            bimodule,
        })
    }

    /// The algebra `A` the functor starts from.
    pub fn source(&self) -> &Arc<Algebra> {
        self.projective.algebra()
    }

    /// `B = End_A(P)^op`.
    pub fn target(&self) -> &Arc<Algebra> {
        &self.end.algebra
    }

    /// `F M` with its basis of homomorphisms `P → M`.
    pub fn apply(&self, m: &Module) -> Result<HomBimodule> {
        if m.side() != Side::Left {
            return Err(Error::AlgebraMismatch(
                "the Schur functor takes left modules".into(),
            ));
        }
        hom_bimodule(&self.bimodule, m.bimodule())
    }

    pub fn apply_module(&self, m: &Module) -> Result<Module> {
        Module::from_bimodule(self.apply(m)?.module, Side::Left)
    }

    /// `FA = Hom_A(P, A)` as a `(B, A)`-bimodule.
    pub fn apply_regular(&self) -> Result<HomBimodule> {
        hom_bimodule(
            &self.bimodule,
            &crate::modules::regular_bimodule(self.source()),
        )
    }

    /// `Fφ = φ∘−` as a matrix between the bases of `fm` and `fn`.
    pub fn apply_hom(&self, phi: &Matrix, fm: &HomBimodule, fn_: &HomBimodule) -> Matrix {
        let field = phi.field();
        let cols: Vec<Vec<Scalar>> = fm
            .space
            .basis
            .iter()
            .map(|g| fn_.space.coordinates(&phi.mul(g)))
            .collect();
        Matrix::from_columns(field, fn_.space.dim(), &cols)
    }
}

/// `Hom_A(P, M)` over `End_A(P)^op`.
pub fn schur_apply(p: &Module, m: &Module) -> Result<Module> {
    SchurFunctor::new(p)?.apply_module(m)
}

/// The Nakayama functor `ν = DA ⊗_A −`.
pub fn nakayama(m: &Module) -> Result<Module> {
    tensor_module(&dual_bimodule_of_algebra(m.algebra()), m)
}

/// Its right adjoint `ν⁻ = Hom_A(DA, −)`, with `A` acting through the right
/// action on `DA`.
pub fn inverse_nakayama(m: &Module) -> Result<Module> {
    if m.side() != Side::Left {
        return Err(Error::AlgebraMismatch(
            "the inverse Nakayama functor takes left modules".into(),
        ));
    }
    let h = hom_bimodule(&dual_bimodule_of_algebra(m.algebra()), m.bimodule())?;
    Module::from_bimodule(h.module, Side::Left)
}
