use std::sync::Arc;

use super::bimodule::Bimodule;
use super::module::{Module, ModuleHom, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

/// `A` acting on itself by left (or right) multiplication.
pub fn regular_module(a: &Arc<Algebra>, side: Side) -> Module {
    let acts = (0..a.dim())
        .map(|b| match side {
            Side::Left => a.left_mult_basis(b),
            Side::Right => a.right_mult_basis(b),
        })
        .collect();
    Module::from_actions(a.clone(), side, acts, a.dim()).expect("Peirce basis is adapted")
}

/// `A` as an `(A, A)`-bimodule.
pub fn regular_bimodule(a: &Arc<Algebra>) -> Bimodule {
    let l = (0..a.dim()).map(|b| a.left_mult_basis(b)).collect();
    let r = (0..a.dim()).map(|b| a.right_mult_basis(b)).collect();
    Bimodule::from_actions(a.clone(), a.clone(), l, r).expect("Peirce basis is adapted")
}

/// `DA = Hom_k(A, k)` with `(a·φ·a')(x) = φ(a' x a)`.
pub fn dual_bimodule_of_algebra(a: &Arc<Algebra>) -> Bimodule {
    regular_bimodule(a).dual()
}

fn check_vertex(a: &Algebra, i: usize) -> Result<()> {
    if i >= a.num_idempotents() {
        return Err(Error::DimensionMismatch(format!(
            "vertex {i} out of range ({} idempotents)",
            a.num_idempotents()
        )));
    }
    Ok(())
}

/// `A e_i` (left) or `e_i A` (right): spanned by the basis elements in the
/// corresponding Peirce components.
pub fn projective_indecomposable(a: &Arc<Algebra>, i: usize, side: Side) -> Result<Module> {
    check_vertex(a, i)?;
    let keep: Vec<usize> = (0..a.dim())
        .filter(|&k| {
            let (t, s) = a.peirce(k);
            match side {
                Side::Left => s == i,
                Side::Right => t == i,
            }
        })
        .collect();
    let acts = (0..a.dim())
        .map(|b| {
            let full = match side {
                Side::Left => a.left_mult_basis(b),
                Side::Right => a.right_mult_basis(b),
            };
            full.select(&keep, &keep)
        })
        .collect();
    Module::from_actions(a.clone(), side, acts, keep.len())
}

/// `D(e_i A)` (left) or `D(A e_i)` (right).
pub fn injective_indecomposable(a: &Arc<Algebra>, i: usize, side: Side) -> Result<Module> {
    Ok(projective_indecomposable(a, i, side.flip())?.dual())
}

/// `P(i) / rad P(i)`.
pub fn simple_module(a: &Arc<Algebra>, i: usize, side: Side) -> Result<Module> {
    let p = projective_indecomposable(a, i, side)?;
    let rad = radical_submodule(&p)?;
    Ok(quotient(&p, &rad)?.0)
}

/// `J·M`, the span of `r·x` for `r` in the radical of the algebra.
pub fn radical_submodule(m: &Module) -> Result<Subspace> {
    let j = m.algebra().radical()?;
    let mut vs = Vec::new();
    for r in j.vectors() {
        let act = m.act(&r);
        vs.extend((0..m.dim()).map(|c| act.column(c)));
    }
    Ok(Subspace::from_vectors(m.field(), m.dim(), vs))
}

/// A direct sum with its canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModuleHom>,
    pub projections: Vec<ModuleHom>,
}

pub fn direct_sum(a: &Arc<Algebra>, side: Side, ms: &[Module]) -> Result<DirectSum> {
    for m in ms {
        if m.side() != side || !m.algebra().same_as(a) {
            return Err(Error::AlgebraMismatch(
                "summands over different algebras or sides".into(),
            ));
        }
    }
    let field = a.field();
    let total: usize = ms.iter().map(Module::dim).sum();
    let acts = (0..a.dim())
        .map(|b| {
            let blocks: Vec<&Matrix> = ms.iter().map(|m| m.action(b)).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    let module = Module::from_actions(a.clone(), side, acts, total)?;
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for m in ms {
        let mut inj = Matrix::zeros(field, total, m.dim());
        for k in 0..m.dim() {
            inj[(offset + k, k)] = field.one();
        }
        projections.push(ModuleHom::new_unchecked(
            module.clone(),
            m.clone(),
            inj.transpose(),
        ));
        injections.push(ModuleHom::new_unchecked(m.clone(), module.clone(), inj));
        offset += m.dim();
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

/// `M^n`.
pub fn power(m: &Module, n: usize) -> Result<Module> {
    let ms = vec![m.clone(); n];
    Ok(direct_sum(m.algebra(), m.side(), &ms)?.module)
}

/// The submodule on an invariant subspace, in its echelon basis, with the
/// inclusion map.
pub fn submodule(m: &Module, s: &Subspace) -> Result<(Module, ModuleHom)> {
    if s.ambient() != m.dim() {
        return Err(Error::AmbientMismatch(s.ambient(), m.dim()));
    }
    let basis = s.vectors();
    let d = basis.len();
    let field = m.field();
    let mut acts = Vec::with_capacity(m.actions().len());
    for act in m.actions() {
        let mut out = Matrix::zeros(field, d, d);
        for (c, v) in basis.iter().enumerate() {
            let w = act.mul_vec(v);
            let coords = s
                .coordinates(&w)
                .ok_or_else(|| Error::Internal("subspace is not a submodule".into()))?;
            for (r, x) in coords.into_iter().enumerate() {
                out[(r, c)] = x;
            }
        }
        acts.push(out);
    }
    let sub = Module::from_actions(m.algebra().clone(), m.side(), acts, d)?;
    let incl = Matrix::from_columns(field, m.dim(), &basis);
    Ok((sub.clone(), ModuleHom::new_unchecked(sub, m.clone(), incl)))
}

/// `M / S` with basis the classes of the standard vectors off the pivots of
/// `S`, and the projection map.
pub fn quotient(m: &Module, s: &Subspace) -> Result<(Module, ModuleHom)> {
    if s.ambient() != m.dim() {
        return Err(Error::AmbientMismatch(s.ambient(), m.dim()));
    }
    let field = m.field();
    let free = s.non_pivots();
    let d = free.len();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = s.residual(v);
        free.iter().map(|&c| r[c].clone()).collect()
    };
    let mut acts = Vec::with_capacity(m.actions().len());
    for act in m.actions() {
        let cols: Vec<Vec<Scalar>> = free.iter().map(|&c| project(&act.column(c))).collect();
        acts.push(Matrix::from_columns(field, d, &cols));
    }
    let q = Module::from_actions(m.algebra().clone(), m.side(), acts, d)?;
    let cols: Vec<Vec<Scalar>> = (0..m.dim())
        .map(|c| {
            let mut e = vec![field.zero(); m.dim()];
            e[c] = field.one();
            project(&e)
        })
        .collect();
    let proj = Matrix::from_columns(field, d, &cols);
    Ok((q.clone(), ModuleHom::new_unchecked(m.clone(), q, proj)))
}

/// Elements of `A` acting as zero.
pub fn annihilator(m: &Module) -> Subspace {
    let a = m.algebra();
    let field = m.field();
    let n = m.dim();
    let mut rows = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            rows.push(m.actions().iter().map(|act| act[(r, c)].clone()).collect());
        }
    }
    if rows.is_empty() {
        return Subspace::full(field, a.dim());
    }
    Matrix::from_rows(field, a.dim(), rows).kernel()
}

pub fn is_faithful(m: &Module) -> bool {
    annihilator(m).is_zero()
}
