use std::sync::Arc;

use super::{Algebra, AlgebraParts, Idempotent};
use crate::error::{Error, Result};
use crate::exactlin::sparse::axpy;
use crate::exactlin::{Scalar, SparseVec, Subspace};

/// `eAe` together with the positions of its basis inside `A`.
#[derive(Clone, Debug)]
pub struct CornerAlgebra {
    pub algebra: Arc<Algebra>,
    /// `inclusion[k]` is the index in `A` of the `k`-th basis element of `eAe`.
    pub inclusion: Vec<usize>,
    /// The distinguished idempotents of `A` that were kept.
    pub vertices: Vec<usize>,
}

impl CornerAlgebra {
    /// Coordinates in `A` of an element of `eAe`.
    pub fn include(&self, x: &[Scalar], ambient_dim: usize) -> Vec<Scalar> {
        let field = self.algebra.field();
        let mut out = vec![field.zero(); ambient_dim];
        for (k, c) in x.iter().enumerate() {
            out[self.inclusion[k]] = c.clone();
        }
        out
    }
}

/// The corner algebra `eAe` for `e` a sum of distinguished idempotents.
/// With a Peirce adapted basis, `e b e` is `b` or `0`, so the corner basis is a
/// subset of the basis of `A`.
pub fn corner_algebra(a: &Algebra, e: &Idempotent) -> Result<CornerAlgebra> {
    let n = a.num_idempotents();
    if e.vertices().is_empty() {
        return Err(Error::NotIdempotentSubset("empty idempotent".into()));
    }
    if let Some(&v) = e.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::NotIdempotentSubset(format!(
            "index {v} out of range ({n} idempotents)"
        )));
    }
    let field = a.field();
    let keep: Vec<usize> = (0..a.dim())
        .filter(|&k| {
            let (j, i) = a.peirce(k);
            e.contains(j) && e.contains(i)
        })
        .collect();
    let mut pos = vec![usize::MAX; a.dim()];
    for (new, &old) in keep.iter().enumerate() {
        pos[old] = new;
    }
    let restrict = |v: &[Scalar]| -> Vec<Scalar> { keep.iter().map(|&k| v[k].clone()).collect() };
    let restrict_sparse = |v: &SparseVec| -> SparseVec {
        v.iter()
            .map(|(k, c)| {
                debug_assert!(pos[*k] != usize::MAX);
                (pos[*k], c.clone())
            })
            .collect()
    };
    let table = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| restrict_sparse(a.product(i, j)))
                .collect()
        })
        .collect();
    let idempotents: Vec<Vec<Scalar>> = e
        .vertices()
        .iter()
        .map(|&v| restrict(&a.idempotents()[v]))
        .collect();
    let unit = restrict(&e.coefficients(a)?);
    // e J e is the image of J under x ↦ e x e
    let known_radical = a.radical().ok().map(|j| {
        let vs = j.vectors().iter().map(|v| restrict(v)).collect();
        Subspace::from_vectors(field, keep.len(), vs)
    });
    let algebra = Algebra::from_parts(AlgebraParts {
        field,
        basis_labels: keep.iter().map(|&k| a.basis_labels()[k].clone()).collect(),
        table,
        unit,
        idempotents,
        vertex_labels: e
            .vertices()
            .iter()
            .map(|&v| a.vertex_labels()[v].clone())
            .collect(),
        primitive: a.idempotents_primitive(),
        known_radical,
    })?;
    Ok(CornerAlgebra {
        algebra: Arc::new(algebra),
        inclusion: keep,
        vertices: e.vertices().to_vec(),
    })
}

pub(super) fn opposite_parts(a: &Algebra) -> Algebra {
    let dim = a.dim();
    let table = (0..dim)
        .map(|i| (0..dim).map(|j| a.product(j, i).clone()).collect())
        .collect();
    let mut parts = a.parts();
    parts.table = table;
    Algebra::from_parts(parts).expect("opposite of an adapted algebra is adapted")
}

/// The opposite algebra, sharing the cache of `a` (so taking it twice returns
/// `a` itself).
pub fn opposite_algebra(a: &Arc<Algebra>) -> Arc<Algebra> {
    a.opposite()
}

/// Check the algebra axioms; returns a description of every violation found.
pub fn validate_algebra(a: &Algebra) -> Vec<String> {
    let mut out = Vec::new();
    if !a.is_adapted() {
        out.push("basis is not adapted to the idempotents".to_string());
    }
    let field = a.field();
    let dim = a.dim();
    let table = a.table();
    let times_basis = |v: &SparseVec, j: usize, left: bool| -> SparseVec {
        let mut acc = Vec::new();
        for (k, c) in v {
            let p = if left { &table[j][*k] } else { &table[*k][j] };
            acc = axpy(&acc, c, p);
        }
        acc
    };
    'assoc: for i in 0..dim {
        for j in 0..dim {
            let ij = &table[i][j];
            for k in 0..dim {
                // (b_i b_j) b_k versus b_i (b_j b_k)
                let lhs = times_basis(ij, k, false);
                let rhs = times_basis(&table[j][k], i, true);
                if lhs != rhs {
                    out.push(format!(
                        "associativity fails on ({}, {}, {})",
                        a.basis_labels()[i],
                        a.basis_labels()[j],
                        a.basis_labels()[k]
                    ));
                    break 'assoc;
                }
            }
        }
    }
    let unit = a.unit();
    for k in 0..dim {
        let b = a.basis_vector(k);
        if a.mul(unit, &b) != b || a.mul(&b, unit) != b {
            out.push(format!(
                "unit is not a two-sided identity on {}",
                a.basis_labels()[k]
            ));
            break;
        }
    }
    let mut sum = vec![field.zero(); dim];
    for e in a.idempotents() {
        for (s, x) in sum.iter_mut().zip(e) {
            *s += x;
        }
    }
    if sum != unit {
        out.push("idempotents do not sum to the unit".into());
    }
    let zero = vec![field.zero(); dim];
    for (i, ei) in a.idempotents().iter().enumerate() {
        for (j, ej) in a.idempotents().iter().enumerate() {
            let p = a.mul(ei, ej);
            let expected = if i == j { ei } else { &zero };
            if &p != expected {
                out.push(format!(
                    "idempotents {i} and {j} are not orthogonal idempotents"
                ));
            }
        }
    }
    if a.idempotents_primitive() && out.is_empty() {
        if let Ok(rad) = a.radical() {
            for v in 0..a.num_idempotents() {
                let comp = a.peirce_component(v, v);
                let corner_rad = Subspace::from_vectors(
                    field,
                    comp.len(),
                    rad.vectors()
                        .iter()
                        .map(|x| comp.iter().map(|&k| x[k].clone()).collect())
                        .collect(),
                );
                let local = comp.len() - corner_rad.dim();
                if local != 1 {
                    out.push(format!("idempotent {v} is not primitive with split top"));
                }
            }
        }
    }
    out
}
