use super::bimodule::Bimodule;
use super::module::{Module, Side};
use crate::error::{Error, Result};
use crate::exactlin::sparse::sparsify;
use crate::exactlin::{Echelon, Matrix, Scalar, SparseVec};

/// `M ⊗_A N` for an `(L, A)`-bimodule `M` and an `(A, R)`-bimodule `N`, as the
/// quotient of `M ⊗_k N` by the span of `x·a ⊗ y − x ⊗ a·y`.
///
/// Pairs of basis vectors with different `A`-weights are zero in the tensor
/// product and are dropped up front; the remaining relations come from the
/// generators of `A`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<Bimodule> {
    let a = m.right_algebra();
    if !a.same_as(n.left_algebra()) {
        return Err(Error::AlgebraMismatch(
            "tensor product over different algebras".into(),
        ));
    }
    let field = a.field();
    let (dm, dn) = (m.dim(), n.dim());
    let mut pair = vec![usize::MAX; dm * dn];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..dm {
        for j in 0..dn {
            if m.right_weights()[i] == n.left_weights()[j] {
                pair[i * dn + j] = pairs.len();
                pairs.push((i, j));
            }
        }
    }
    let np = pairs.len();
    let mut ech = Echelon::new(field, np);
    for &g in a.generators() {
        let (to_w, from_w) = a.peirce(g);
        // x in M e_to, y in e_from N
        let rm = &m.right_actions()[g];
        let ln = &n.left_actions()[g];
        let rm_cols: Vec<SparseVec> = (0..dm).map(|i| sparsify(&rm.column(i))).collect();
        let ln_cols: Vec<SparseVec> = (0..dn).map(|j| sparsify(&ln.column(j))).collect();
        for i in (0..dm).filter(|&i| m.right_weights()[i] == to_w) {
            for j in (0..dn).filter(|&j| n.left_weights()[j] == from_w) {
                let mut row: Vec<(usize, Scalar)> = Vec::new();
                for (i2, x) in &rm_cols[i] {
                    row.push((pair[i2 * dn + j], x.clone()));
                }
                for (j2, x) in &ln_cols[j] {
                    row.push((pair[i * dn + j2], -x));
                }
                ech.insert(normalize(row));
            }
        }
    }
    ech.make_reduced();
    let pivots: std::collections::HashSet<usize> = ech.pivots().collect();
    let free: Vec<usize> = (0..np).filter(|c| !pivots.contains(c)).collect();
    let mut free_pos = vec![usize::MAX; np];
    for (k, &c) in free.iter().enumerate() {
        free_pos[c] = k;
    }
    let d = free.len();
    let induced = |image: &dyn Fn(usize, usize) -> Vec<(usize, Scalar)>| -> Matrix {
        let mut out = Matrix::zeros(field, d, d);
        for (col, &c) in free.iter().enumerate() {
            let (i, j) = pairs[c];
            let v = ech.reduce(normalize(image(i, j)));
            for (k, x) in v {
                out[(free_pos[k], col)] = x;
            }
        }
        out
    };
    let lact: Vec<Matrix> = m
        .left_actions()
        .iter()
        .map(|l| {
            induced(&|i, j| {
                sparsify(&l.column(i))
                    .into_iter()
                    .map(|(i2, x)| (pair[i2 * dn + j], x))
                    .collect()
            })
        })
        .collect();
    let ract: Vec<Matrix> = n
        .right_actions()
        .iter()
        .map(|r| {
            induced(&|i, j| {
                sparsify(&r.column(j))
                    .into_iter()
                    .map(|(j2, x)| (pair[i * dn + j2], x))
                    .collect()
            })
        })
        .collect();
    Bimodule::from_actions(
        m.left_algebra().clone(),
        n.right_algebra().clone(),
        lact,
        ract,
    )
}

fn normalize(mut row: Vec<(usize, Scalar)>) -> SparseVec {
    debug_assert!(row.iter().all(|(k, _)| *k != usize::MAX));
    row.sort_by_key(|(k, _)| *k);
    let mut out: SparseVec = Vec::with_capacity(row.len());
    for (k, x) in row {
        match out.last_mut() {
            Some((k0, y)) if *k0 == k => *y += &x,
            _ => out.push((k, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// `X ⊗_A N` for an `(L, A)`-bimodule and a left `A`-module: a left
/// `L`-module.
pub fn tensor_module(x: &Bimodule, n: &Module) -> Result<Module> {
    if n.side() != Side::Left {
        return Err(Error::AlgebraMismatch("tensor with a right module".into()));
    }
    Module::from_bimodule(tensor_over(x, n.bimodule())?, Side::Left)
}
