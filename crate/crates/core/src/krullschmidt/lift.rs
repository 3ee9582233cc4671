use std::sync::Arc;

use super::decompose::decompose;
use crate::algebra::{Algebra, AlgebraParts};
use crate::error::{Error, Result};
use crate::exactlin::sparse::{densify, sparsify};
use crate::exactlin::{Echelon, Matrix, Scalar, Subspace};
use crate::modules::{regular_module, EndAlgebra, Side};

/// The Jacobson radical, with its nilpotency verified.
pub fn algebra_radical(b: &Algebra) -> Result<Subspace> {
    let j = b.radical()?;
    let field = b.field();
    let jv = j.vectors();
    let mut power = jv.clone();
    for _ in 0..=b.dim() {
        if power.is_empty() {
            return Ok(j);
        }
        let mut ech = Echelon::new(field, b.dim());
        for x in &power {
            for y in &jv {
                ech.insert_dense(&b.mul(x, y));
            }
        }
        power = ech
            .reduced_rows()
            .iter()
            .map(|v| densify(field, b.dim(), v))
            .collect();
    }
    Err(Error::Internal("radical is not nilpotent".into()))
}

/// Refine an element that is idempotent modulo the radical to an idempotent
/// by iterating `e ↦ 3e² − 2e³`.
pub fn lift_idempotent(b: &Algebra, x: &[Scalar]) -> Result<Vec<Scalar>> {
    let field = b.field();
    let three = field.from_i64(3);
    let two = field.from_i64(2);
    let mut e = x.to_vec();
    // the defect e² − e lies in J^(2^k) after k rounds
    let rounds = usize::BITS - b.dim().leading_zeros() + 1;
    for _ in 0..=rounds {
        let e2 = b.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = b.mul(&e2, &e);
        e = e2
            .iter()
            .zip(&e3)
            .map(|(a, c)| &(&three * a) - &(&two * c))
            .collect();
    }
    Err(Error::Internal(
        "idempotent lifting did not converge".into(),
    ))
}

/// An algebra with a complete set of primitive orthogonal idempotents in a
/// Peirce adapted basis. `basis_change` has the new basis as columns in the
/// old coordinates.
#[derive(Clone, Debug)]
pub struct LiftedAlgebra {
    pub algebra: Arc<Algebra>,
    pub basis_change: Matrix,
}

/// Upgrade `b` to carry primitive idempotents. They are read off a
/// Krull-Schmidt decomposition of the regular module: for `B = ⊕ Q_k` with
/// splitting maps `ι_k π_k`, the idempotents are `ι_k π_k(1)`.
pub fn lift_primitive_idempotents(b: &Arc<Algebra>) -> Result<LiftedAlgebra> {
    let field = b.field();
    if b.idempotents_primitive() {
        check_split_local(b)?;
        return Ok(LiftedAlgebra {
            algebra: b.clone(),
            basis_change: Matrix::identity(field, b.dim()),
        });
    }
    algebra_radical(b)?;
    let reg = regular_module(b, Side::Left);
    let dec = decompose(&reg)?;
    let mut idems = Vec::new();
    for s in &dec.summands {
        for (i, p) in s.injections.iter().zip(&s.projections) {
            idems.push(i.mul(p).mul_vec(b.unit()));
        }
    }
    let (algebra, q) = peirce_rebase(b, &idems)?;
    Ok(LiftedAlgebra {
        algebra: Arc::new(algebra),
        basis_change: q,
    })
}

/// The algebra itself when it already carries primitive idempotents,
/// otherwise its lifted form.
pub fn split_form(b: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    Ok(lift_primitive_idempotents(b)?.algebra)
}

/// Fails with `NotSplit` unless the distinguished idempotents are primitive
/// with one-dimensional tops.
pub(crate) fn ensure_split(b: &Algebra) -> Result<()> {
    if !b.idempotents_primitive() {
        return Err(Error::NotSplit(
            "idempotents are not known to be primitive; lift them first".into(),
        ));
    }
    check_split_local(b)
}

fn check_split_local(b: &Algebra) -> Result<()> {
    let rad = algebra_radical(b)?;
    for v in 0..b.num_idempotents() {
        let comp = b.peirce_component(v, v);
        let corner_rad = Subspace::from_vectors(
            b.field(),
            comp.len(),
            rad.vectors()
                .iter()
                .map(|x| comp.iter().map(|&k| x[k].clone()).collect())
                .collect(),
        );
        if comp.len() - corner_rad.dim() != 1 {
            return Err(Error::NotSplit(format!(
                "e{} B e{} modulo its radical is not the ground field",
                v + 1,
                v + 1
            )));
        }
    }
    Ok(())
}

/// Rewrite `b` in a basis adapted to the given complete set of orthogonal
/// idempotents: the idempotents first, then each `e_j B e_i` in turn, with
/// `e_i J e_i` spanning the rest of each diagonal block.
pub(crate) fn peirce_rebase(b: &Algebra, idems: &[Vec<Scalar>]) -> Result<(Algebra, Matrix)> {
    let field = b.field();
    let d = b.dim();
    let r = idems.len();
    let rad = algebra_radical(b)?;
    let mut cols: Vec<Vec<Scalar>> = idems.to_vec();
    let mut labels: Vec<String> = (1..=r).map(|v| format!("e{v}")).collect();
    let basis: Vec<Vec<Scalar>> = (0..d).map(|k| b.basis_vector(k)).collect();
    let sandwich = |j: usize, x: &[Scalar], i: usize| b.mul(&b.mul(&idems[j], x), &idems[i]);
    for j in 0..r {
        for i in 0..r {
            let part: Vec<Vec<Scalar>> = if i == j {
                let jj: Vec<Vec<Scalar>> =
                    rad.vectors().iter().map(|x| sandwich(j, x, i)).collect();
                let s = Subspace::from_vectors(field, d, jj);
                let full = Subspace::from_vectors(
                    field,
                    d,
                    basis.iter().map(|x| sandwich(j, x, i)).collect(),
                );
                if full.dim() != s.dim() + 1 {
                    return Err(Error::NotSplit(format!(
                        "corner at idempotent {} is not split local",
                        j + 1
                    )));
                }
                s.vectors()
            } else {
                Subspace::from_vectors(field, d, basis.iter().map(|x| sandwich(j, x, i)).collect())
                    .vectors()
            };
            for (n, v) in part.into_iter().enumerate() {
                labels.push(format!("x{}_{}_{}", j + 1, i + 1, n + 1));
                cols.push(v);
            }
        }
    }
    if cols.len() != d {
        return Err(Error::Internal(
            "Peirce components do not span the algebra".into(),
        ));
    }
    let q = Matrix::from_columns(field, d, &cols);
    let qinv = q
        .inverse()
        .ok_or_else(|| Error::Internal("Peirce basis is singular".into()))?;
    let table = (0..d)
        .map(|a| {
            (0..d)
                .map(|c| sparsify(&qinv.mul_vec(&b.mul(&cols[a], &cols[c]))))
                .collect()
        })
        .collect();
    let unit = qinv.mul_vec(b.unit());
    let new_idems = (0..r)
        .map(|v| {
            let mut e = vec![field.zero(); d];
            e[v] = field.one();
            e
        })
        .collect();
    let known_radical = Some(Subspace::from_vectors(
        field,
        d,
        rad.vectors().iter().map(|x| qinv.mul_vec(x)).collect(),
    ));
    let a = Algebra::from_parts(AlgebraParts {
        field,
        basis_labels: labels,
        table,
        unit,
        idempotents: new_idems,
        vertex_labels: (1..=r).map(|v| v.to_string()).collect(),
        primitive: true,
        known_radical,
    })?;
    Ok((a, q))
}

/// [`lift_primitive_idempotents`] applied to an endomorphism algebra, carrying
/// its endomorphism basis along. The primitive idempotents of `End(M)` are the
/// projections onto the summands of a decomposition of `M`, which is much
/// smaller than the regular module of `End(M)`.
pub fn lift_end_algebra(e: &EndAlgebra) -> Result<EndAlgebra> {
    if e.algebra.idempotents_primitive() {
        check_split_local(&e.algebra)?;
        return Ok(e.clone());
    }
    let dec = decompose(&e.module)?;
    let mut idems = Vec::new();
    for s in &dec.summands {
        for (i, p) in s.injections.iter().zip(&s.projections) {
            idems.push(e.coordinates(&i.mul(p)));
        }
    }
    let (algebra, q) = peirce_rebase(&e.algebra, &idems)?;
    e.rebased(Arc::new(algebra), &q)
}
