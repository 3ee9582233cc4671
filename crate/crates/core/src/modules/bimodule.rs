use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

/// A finite-dimensional `(L, R)`-bimodule. Left action matrices act on column
/// vectors by `x ↦ a·x`; right action matrices by `x ↦ x·b`, so
/// `R(b_j) R(b_i) = R(b_i b_j)`.
///
/// The basis is adapted on both sides: every basis vector lies in
/// `e_v X f_w` for one left idempotent `e_v` and one right idempotent `f_w`.
#[derive(Clone)]
pub struct Bimodule(Arc<Inner>);

struct Inner {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    lact: Vec<Matrix>,
    ract: Vec<Matrix>,
    lw: Vec<usize>,
    rw: Vec<usize>,
}

fn idempotent_action(alg: &Algebra, acts: &[Matrix], e: &[Scalar], dim: usize) -> Matrix {
    let mut m = Matrix::zeros(alg.field(), dim, dim);
    for (c, a) in e.iter().zip(acts) {
        if !c.is_zero() {
            m.add_scaled(c, a);
        }
    }
    m
}

/// For each basis vector, the unique idempotent acting as the identity on it.
fn weights(alg: &Algebra, acts: &[Matrix], dim: usize) -> Option<Vec<usize>> {
    let mut w = vec![usize::MAX; dim];
    for (v, e) in alg.idempotents().iter().enumerate() {
        let m = idempotent_action(alg, acts, e, dim);
        for c in 0..dim {
            for r in 0..dim {
                let x = &m[(r, c)];
                let expect_one = r == c;
                if expect_one && x.is_one() {
                    if w[c] != usize::MAX {
                        return None;
                    }
                    w[c] = v;
                } else if !x.is_zero() {
                    return None;
                }
            }
        }
    }
    w.iter().all(|&x| x != usize::MAX).then_some(w)
}

impl Bimodule {
    /// Assemble from action matrices; the basis must already be adapted.
    pub fn from_actions(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        lact: Vec<Matrix>,
        ract: Vec<Matrix>,
    ) -> Result<Self> {
        let dim = Self::check_shapes(&left, &right, &lact, &ract)?;
        let lw = weights(&left, &lact, dim)
            .ok_or_else(|| Error::Internal("basis not adapted to left idempotents".into()))?;
        let rw = weights(&right, &ract, dim)
            .ok_or_else(|| Error::Internal("basis not adapted to right idempotents".into()))?;
        Ok(Bimodule(Arc::new(Inner {
            left,
            right,
            dim,
            lact,
            ract,
            lw,
            rw,
        })))
    }

    fn check_shapes(
        left: &Algebra,
        right: &Algebra,
        lact: &[Matrix],
        ract: &[Matrix],
    ) -> Result<usize> {
        if left.field() != right.field() {
            return Err(Error::AlgebraMismatch(
                "algebras over different fields".into(),
            ));
        }
        if lact.len() != left.dim() || ract.len() != right.dim() {
            return Err(Error::DimensionMismatch(
                "one action matrix per basis element".into(),
            ));
        }
        let dim = lact
            .first()
            .map(Matrix::rows)
            .or_else(|| ract.first().map(Matrix::rows))
            .unwrap_or(0);
        if lact
            .iter()
            .chain(ract)
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::DimensionMismatch(
                "action matrices must be square of equal size".into(),
            ));
        }
        Ok(dim)
    }

    /// Assemble from action matrices in any basis, changing to an adapted one.
    /// Returns the module and `T` whose columns are the new basis vectors in
    /// the old coordinates.
    pub fn adapt(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        lact: Vec<Matrix>,
        ract: Vec<Matrix>,
    ) -> Result<(Self, Matrix)> {
        let dim = Self::check_shapes(&left, &right, &lact, &ract)?;
        let field = left.field();
        if weights(&left, &lact, dim).is_some() && weights(&right, &ract, dim).is_some() {
            let m = Self::from_actions(left, right, lact, ract)?;
            return Ok((m, Matrix::identity(field, dim)));
        }
        let le: Vec<Matrix> = left
            .idempotents()
            .iter()
            .map(|e| idempotent_action(&left, &lact, e, dim))
            .collect();
        let re: Vec<Matrix> = right
            .idempotents()
            .iter()
            .map(|e| idempotent_action(&right, &ract, e, dim))
            .collect();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for l in &le {
            for r in &re {
                let proj = l.mul(r);
                cols.extend(proj.column_space().vectors());
            }
        }
        if cols.len() != dim {
            return Err(Error::Internal(
                "idempotent actions do not decompose the module".into(),
            ));
        }
        let t = Matrix::from_columns(field, dim, &cols);
        let tinv = t
            .inverse()
            .ok_or_else(|| Error::Internal("idempotent eigenbasis is singular".into()))?;
        let conj = |m: &Matrix| tinv.mul(m).mul(&t);
        let lact = lact.iter().map(conj).collect();
        let ract = ract.iter().map(conj).collect();
        Ok((Self::from_actions(left, right, lact, ract)?, t))
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.0.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.0.right
    }

    pub fn field(&self) -> Field {
        self.0.left.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.0.lact
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.0.ract
    }

    pub fn left_weights(&self) -> &[usize] {
        &self.0.lw
    }

    pub fn right_weights(&self) -> &[usize] {
        &self.0.rw
    }

    pub fn left_act(&self, x: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), &self.0.lact, x)
    }

    pub fn right_act(&self, x: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), &self.0.ract, x)
    }

    /// The same space with sides exchanged: an `(R^op, L^op)`-bimodule.
    pub fn swap_sides(&self) -> Bimodule {
        let lw = self.0.rw.clone();
        let rw = self.0.lw.clone();
        Bimodule(Arc::new(Inner {
            left: self.0.right.opposite(),
            right: self.0.left.opposite(),
            dim: self.0.dim,
            lact: self.0.ract.clone(),
            ract: self.0.lact.clone(),
            lw,
            rw,
        }))
    }

    /// The `k`-dual `Hom_k(X, k)`, an `(R, L)`-bimodule with
    /// `(r·φ)(x) = φ(x·r)` and `(φ·l)(x) = φ(l·x)`.
    pub fn dual(&self) -> Bimodule {
        let t = |ms: &[Matrix]| ms.iter().map(Matrix::transpose).collect::<Vec<_>>();
        Bimodule(Arc::new(Inner {
            left: self.0.right.clone(),
            right: self.0.left.clone(),
            dim: self.0.dim,
            lact: t(&self.0.ract),
            ract: t(&self.0.lact),
            lw: self.0.rw.clone(),
            rw: self.0.lw.clone(),
        }))
    }

    /// Replace the algebras by structurally equal ones (used after
    /// recomputing an algebra that is already known up to identity).
    pub(crate) fn with_algebras(&self, left: Arc<Algebra>, right: Arc<Algebra>) -> Bimodule {
        debug_assert!(left.same_as(&self.0.left) && right.same_as(&self.0.right));
        Bimodule(Arc::new(Inner {
            left,
            right,
            dim: self.0.dim,
            lact: self.0.lact.clone(),
            ract: self.0.ract.clone(),
            lw: self.0.lw.clone(),
            rw: self.0.rw.clone(),
        }))
    }

    /// Every violated axiom, as text.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.dim();
        let id = Matrix::identity(self.field(), n);
        let (l, r) = (&self.0.left, &self.0.right);
        if self.left_act(l.unit()) != id {
            out.push("left unit does not act as the identity".into());
        }
        if self.right_act(r.unit()) != id {
            out.push("right unit does not act as the identity".into());
        }
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let lhs = self.0.lact[i].mul(&self.0.lact[j]);
                let rhs = sparse_combine(self.field(), n, &self.0.lact, l.product(i, j));
                if lhs != rhs {
                    out.push(format!("left action not multiplicative on ({i}, {j})"));
                }
            }
        }
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let lhs = self.0.ract[j].mul(&self.0.ract[i]);
                let rhs = sparse_combine(self.field(), n, &self.0.ract, r.product(i, j));
                if lhs != rhs {
                    out.push(format!("right action not multiplicative on ({i}, {j})"));
                }
            }
        }
        for (i, a) in self.0.lact.iter().enumerate() {
            for (j, b) in self.0.ract.iter().enumerate() {
                if a.mul(b) != b.mul(a) {
                    out.push(format!("left {i} and right {j} actions do not commute"));
                }
            }
        }
        out
    }
}

pub(crate) fn combine(field: Field, n: usize, acts: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for (c, a) in x.iter().zip(acts) {
        if !c.is_zero() {
            m.add_scaled(c, a);
        }
    }
    m
}

pub(crate) fn sparse_combine(
    field: Field,
    n: usize,
    acts: &[Matrix],
    x: &[(usize, Scalar)],
) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    for (k, c) in x {
        m.add_scaled(c, &acts[*k]);
    }
    m
}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bimodule")
            .field("dim", &self.dim())
            .field("left_dim", &self.0.left.dim())
            .field("right_dim", &self.0.right.dim())
            .finish()
    }
}
