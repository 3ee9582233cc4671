use std::fmt;
use std::sync::Arc;

use super::bimodule::Bimodule;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A one-sided module: a bimodule whose other side is the ground field.
#[derive(Clone)]
pub struct Module {
    bi: Bimodule,
    side: Side,
}

impl Module {
    /// Module from one action matrix per basis element of `a`; the basis must
    /// be adapted to the distinguished idempotents.
    pub fn from_actions(
        a: Arc<Algebra>,
        side: Side,
        actions: Vec<Matrix>,
        dim: usize,
    ) -> Result<Self> {
        let k = Algebra::ground_arc(a.field());
        let id = vec![Matrix::identity(a.field(), dim)];
        let bi = match side {
            Side::Left => Bimodule::from_actions(a, k, actions, id)?,
            Side::Right => Bimodule::from_actions(k, a, id, actions)?,
        };
        Ok(Module { bi, side })
    }

    /// Like [`Module::from_actions`] but changes to an adapted basis first;
    /// returns the basis change (columns are the new basis in old coordinates).
    pub fn adapt(
        a: Arc<Algebra>,
        side: Side,
        actions: Vec<Matrix>,
        dim: usize,
    ) -> Result<(Self, Matrix)> {
        let k = Algebra::ground_arc(a.field());
        let id = vec![Matrix::identity(a.field(), dim)];
        let (bi, t) = match side {
            Side::Left => Bimodule::adapt(a, k, actions, id)?,
            Side::Right => Bimodule::adapt(k, a, id, actions)?,
        };
        Ok((Module { bi, side }, t))
    }

    /// View a bimodule over `(A, k)` or `(k, A)` as a one-sided module.
    pub fn from_bimodule(bi: Bimodule, side: Side) -> Result<Self> {
        let other = match side {
            Side::Left => bi.right_algebra(),
            Side::Right => bi.left_algebra(),
        };
        if !other.is_ground() {
            return Err(Error::AlgebraMismatch("bimodule is not one-sided".into()));
        }
        Ok(Module { bi, side })
    }

    pub fn zero(a: Arc<Algebra>, side: Side) -> Self {
        let field = a.field();
        let acts = vec![Matrix::zeros(field, 0, 0); a.dim()];
        Module::from_actions(a, side, acts, 0).expect("zero module")
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bi
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        match self.side {
            Side::Left => self.bi.left_algebra(),
            Side::Right => self.bi.right_algebra(),
        }
    }

    pub fn field(&self) -> Field {
        self.bi.field()
    }

    pub fn dim(&self) -> usize {
        self.bi.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn actions(&self) -> &[Matrix] {
        match self.side {
            Side::Left => self.bi.left_actions(),
            Side::Right => self.bi.right_actions(),
        }
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.actions()[b]
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        match self.side {
            Side::Left => self.bi.left_act(x),
            Side::Right => self.bi.right_act(x),
        }
    }

    /// Idempotent index of each basis vector.
    pub fn weights(&self) -> &[usize] {
        match self.side {
            Side::Left => self.bi.left_weights(),
            Side::Right => self.bi.right_weights(),
        }
    }

    /// Basis indices lying in `e_v M` (or `M e_v` on the right).
    pub fn weight_space(&self, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| self.weights()[k] == v)
            .collect()
    }

    /// `dim e_v M` for each distinguished idempotent.
    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.algebra().num_idempotents()];
        for &w in self.weights() {
            out[w] += 1;
        }
        out
    }

    /// For a basis element in `e_j A e_i`: the weight it maps from and the
    /// weight it maps into on this side.
    pub fn transport(&self, b: usize) -> (usize, usize) {
        let (j, i) = self.algebra().peirce(b);
        match self.side {
            Side::Left => (i, j),
            Side::Right => (j, i),
        }
    }

    pub fn same_category(&self, other: &Module) -> bool {
        self.side == other.side && self.algebra().same_as(other.algebra())
    }

    pub(crate) fn check_same_category(&self, other: &Module) -> Result<()> {
        if self.side != other.side {
            return Err(Error::AlgebraMismatch("modules on different sides".into()));
        }
        if !self.algebra().same_as(other.algebra()) {
            return Err(Error::AlgebraMismatch(
                "modules over different algebras".into(),
            ));
        }
        Ok(())
    }

    /// The `k`-dual, a module on the other side.
    pub fn dual(&self) -> Module {
        Module {
            bi: self.bi.dual(),
            side: self.side.flip(),
        }
    }

    /// A right `A`-module as a left `A^op`-module and vice versa (same
    /// matrices).
    pub fn to_opposite(&self) -> Module {
        Module {
            bi: self.bi.swap_sides(),
            side: self.side.flip(),
        }
    }

    /// Same module over a structurally equal algebra instance.
    pub fn over(&self, a: &Arc<Algebra>) -> Result<Module> {
        if !a.same_as(self.algebra()) {
            return Err(Error::AlgebraMismatch("algebras differ".into()));
        }
        let bi = match self.side {
            Side::Left => self
                .bi
                .with_algebras(a.clone(), self.bi.right_algebra().clone()),
            Side::Right => self
                .bi
                .with_algebras(self.bi.left_algebra().clone(), a.clone()),
        };
        Ok(Module {
            bi,
            side: self.side,
        })
    }

    pub fn violations(&self) -> Vec<String> {
        self.bi.violations()
    }

    /// The submodule generated by the given vectors.
    pub fn generated_by(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let n = self.dim();
        let field = self.field();
        let mut span = crate::exactlin::Echelon::new(field, n);
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        // weight components are images under idempotents; generators map
        // homogeneous vectors to homogeneous vectors
        for v in vectors {
            for w in 0..self.algebra().num_idempotents() {
                let c: Vec<Scalar> = (0..n)
                    .map(|k| {
                        if self.weights()[k] == w {
                            v[k].clone()
                        } else {
                            field.zero()
                        }
                    })
                    .collect();
                if span.insert_dense(&c) {
                    queue.push(c);
                }
            }
        }
        let gens: Vec<usize> = self.algebra().generators().to_vec();
        while let Some(v) = queue.pop() {
            for &g in &gens {
                let w = self.action(g).mul_vec(&v);
                if span.insert_dense(&w) {
                    queue.push(w);
                }
            }
        }
        Subspace::from_vectors(field, n, span.to_matrix().row_vectors())
    }

    /// Whether a subspace is closed under the action.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.vectors()
            .iter()
            .all(|v| self.actions().iter().all(|a| s.contains(&a.mul_vec(v))))
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("side", &self.side)
            .field("dim", &self.dim())
            .field("dimension_vector", &self.dimension_vector())
            .finish()
    }
}

/// A module homomorphism, as a `dim(target) × dim(source)` matrix.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl ModuleHom {
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<Self> {
        source.check_same_category(&target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch("homomorphism matrix shape".into()));
        }
        let h = ModuleHom {
            source,
            target,
            matrix,
        };
        debug_assert!(h.intertwines(), "matrix is not a module homomorphism");
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, matrix: Matrix) -> Self {
        ModuleHom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(m: &Module) -> Self {
        ModuleHom::new_unchecked(m.clone(), m.clone(), Matrix::identity(m.field(), m.dim()))
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        ModuleHom::new_unchecked(
            source.clone(),
            target.clone(),
            Matrix::zeros(source.field(), target.dim(), source.dim()),
        )
    }

    pub fn intertwines(&self) -> bool {
        self.source
            .actions()
            .iter()
            .zip(self.target.actions())
            .all(|(s, t)| self.matrix.mul(s) == t.mul(&self.matrix))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleHom) -> Result<ModuleHom> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch("composition".into()));
        }
        Ok(ModuleHom::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
        ))
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.column_space()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }
}
