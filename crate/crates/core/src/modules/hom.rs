use std::collections::BTreeMap;
use std::sync::Arc;

use super::bimodule::Bimodule;
use super::module::{Module, ModuleHom, Side};
use crate::algebra::{Algebra, AlgebraParts};
use crate::error::{Error, Result};
use crate::exactlin::sparse::sparsify;
use crate::exactlin::{Echelon, Field, Matrix, Scalar, SparseVec};

/// A basis of a space of intertwiners together with the matrix entries that
/// serve as coordinates: the `k`-th basis map has a 1 at `coords[k]` and a 0
/// at every other coordinate entry.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub basis: Vec<Matrix>,
    pub coords: Vec<(usize, usize)>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an intertwiner in this basis.
    pub fn coordinates(&self, f: &Matrix) -> Vec<Scalar> {
        self.coords
            .iter()
            .map(|&(p, q)| f[(p, q)].clone())
            .collect()
    }

    pub fn combination(&self, field: Field, rows: usize, cols: usize, coeffs: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                m.add_scaled(c, b);
            }
        }
        m
    }
}

/// Matrices `X` with `X S(a) = T(a) X` for all `a` in the algebra, where `S`
/// and `T` are actions on `side`. Only weight-preserving entries are unknowns
/// and only the algebra generators contribute equations.
pub(crate) fn intertwiners(
    a: &Algebra,
    side: Side,
    src: (&[Matrix], &[usize]),
    tgt: (&[Matrix], &[usize]),
) -> HomBasis {
    let field = a.field();
    let (s_acts, s_w) = src;
    let (t_acts, t_w) = tgt;
    let (ns, nt) = (s_w.len(), t_w.len());
    let mut var = vec![usize::MAX; nt * ns];
    let mut pos: Vec<(usize, usize)> = Vec::new();
    for p in 0..nt {
        for q in 0..ns {
            if t_w[p] == s_w[q] {
                var[p * ns + q] = pos.len();
                pos.push((p, q));
            }
        }
    }
    let nvars = pos.len();
    let mut by_weight_s: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (q, &w) in s_w.iter().enumerate() {
        by_weight_s.entry(w).or_default().push(q);
    }
    let mut by_weight_t: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (p, &w) in t_w.iter().enumerate() {
        by_weight_t.entry(w).or_default().push(p);
    }
    let mut ech = Echelon::new(field, nvars);
    let empty = Vec::new();
    for &g in a.generators() {
        let (j, i) = a.peirce(g);
        let (from, to) = match side {
            Side::Left => (i, j),
            Side::Right => (j, i),
        };
        let sm = &s_acts[g];
        let tm = &t_acts[g];
        let s_cols: Vec<SparseVec> = (0..ns).map(|q| sparsify(&sm.column(q))).collect();
        let t_rows: Vec<SparseVec> = (0..nt).map(|p| sparsify(tm.row(p))).collect();
        for &p in by_weight_t.get(&to).unwrap_or(&empty) {
            for &q in by_weight_s.get(&from).unwrap_or(&empty) {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (r, x) in &s_cols[q] {
                    let v = var[p * ns + r];
                    debug_assert!(v != usize::MAX);
                    *acc.entry(v).or_insert_with(|| field.zero()) += x;
                }
                for (u, x) in &t_rows[p] {
                    let v = var[u * ns + q];
                    debug_assert!(v != usize::MAX);
                    *acc.entry(v).or_insert_with(|| field.zero()) -= x;
                }
                let row: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    let kernel = ech.kernel();
    let mut basis = Vec::with_capacity(kernel.len());
    let mut coords = Vec::with_capacity(kernel.len());
    for (free, v) in kernel {
        let mut m = Matrix::zeros(field, nt, ns);
        for (k, x) in v {
            m[pos[k]] = x;
        }
        basis.push(m);
        coords.push(pos[free]);
    }
    HomBasis { basis, coords }
}

/// `Hom_A(M, N)` for two modules on the same side.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub space: HomBasis,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.space.basis
    }

    pub fn hom(&self, k: usize) -> ModuleHom {
        ModuleHom::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.space.basis[k].clone(),
        )
    }

    pub fn homs(&self) -> Vec<ModuleHom> {
        (0..self.dim()).map(|k| self.hom(k)).collect()
    }

    pub fn coordinates(&self, f: &Matrix) -> Vec<Scalar> {
        self.space.coordinates(f)
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> Matrix {
        self.space.combination(
            self.source.field(),
            self.target.dim(),
            self.source.dim(),
            coeffs,
        )
    }
}

pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    m.check_same_category(n)?;
    let space = intertwiners(
        m.algebra(),
        m.side(),
        (m.actions(), m.weights()),
        (n.actions(), n.weights()),
    );
    debug_assert!(space.basis.iter().all(|f| ModuleHom::new_unchecked(
        m.clone(),
        n.clone(),
        f.clone()
    )
    .intertwines()));
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        space,
    })
}

/// `Hom_A(M, N)` for an `(A, B)`-bimodule `M` and an `(A, C)`-bimodule `N`,
/// as a `(B, C)`-bimodule with `(b·f)(x) = f(x·b)` and `(f·c)(x) = f(x)·c`.
#[derive(Clone, Debug)]
pub struct HomBimodule {
    pub module: Bimodule,
    pub space: HomBasis,
}

pub fn hom_bimodule(m: &Bimodule, n: &Bimodule) -> Result<HomBimodule> {
    let a = m.left_algebra();
    if !a.same_as(n.left_algebra()) {
        return Err(Error::AlgebraMismatch(
            "Hom over different left algebras".into(),
        ));
    }
    let space = intertwiners(
        a,
        Side::Left,
        (m.left_actions(), m.left_weights()),
        (n.left_actions(), n.left_weights()),
    );
    let field = a.field();
    let d = space.dim();
    let act_on = |f: &dyn Fn(&Matrix) -> Matrix| -> Matrix {
        let cols: Vec<Vec<Scalar>> = space
            .basis
            .iter()
            .map(|b| space.coordinates(&f(b)))
            .collect();
        Matrix::from_columns(field, d, &cols)
    };
    let lact: Vec<Matrix> = m
        .right_actions()
        .iter()
        .map(|rb| act_on(&|f: &Matrix| f.mul(rb)))
        .collect();
    let ract: Vec<Matrix> = n
        .right_actions()
        .iter()
        .map(|rc| act_on(&|f: &Matrix| rc.mul(f)))
        .collect();
    let module = Bimodule::from_actions(
        m.right_algebra().clone(),
        n.right_algebra().clone(),
        lact,
        ract,
    )?;
    Ok(HomBimodule { module, space })
}

/// `B = End_A(M)^op` with its basis of endomorphisms: the product `b_i b_j`
/// in `B` is the composite `maps[j] ∘ maps[i]`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub maps: Vec<Matrix>,
    pub module: Module,
    coords: Vec<(usize, usize)>,
    /// Converts raw coordinates (read at `coords`) to coordinates in the
    /// current basis of `algebra`.
    to_basis: Option<Matrix>,
}

pub fn end_algebra(m: &Module) -> Result<EndAlgebra> {
    let h = hom_space(m, m)?;
    let field = m.field();
    let d = h.dim();
    let table: Vec<Vec<SparseVec>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| sparsify(&h.coordinates(&h.basis()[j].mul(&h.basis()[i]))))
                .collect()
        })
        .collect();
    let unit = h.coordinates(&Matrix::identity(field, m.dim()));
    let algebra = Algebra::from_parts(AlgebraParts {
        field,
        basis_labels: (0..d).map(|k| format!("f{k}")).collect(),
        table,
        unit: unit.clone(),
        idempotents: vec![unit],
        vertex_labels: vec!["1".into()],
        primitive: false,
        known_radical: None,
    })?;
    Ok(EndAlgebra {
        algebra: Arc::new(algebra),
        maps: h.space.basis,
        module: m.clone(),
        coords: h.space.coords,
        to_basis: None,
    })
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// The endomorphism represented by an element of `B`.
    pub fn map_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.module.dim();
        let mut m = Matrix::zeros(self.module.field(), n, n);
        for (c, f) in x.iter().zip(&self.maps) {
            if !c.is_zero() {
                m.add_scaled(c, f);
            }
        }
        m
    }

    /// Coordinates in `B` of an endomorphism of the module.
    pub fn coordinates(&self, f: &Matrix) -> Vec<Scalar> {
        let raw: Vec<Scalar> = self
            .coords
            .iter()
            .map(|&(p, q)| f[(p, q)].clone())
            .collect();
        match &self.to_basis {
            Some(t) => t.mul_vec(&raw),
            None => raw,
        }
    }

    /// Replace `B` by a structurally isomorphic algebra whose `k`-th basis
    /// element is `Σ_l q[l][k] b_l` in the old basis.
    pub(crate) fn rebased(&self, algebra: Arc<Algebra>, q: &Matrix) -> Result<EndAlgebra> {
        let qinv = q
            .inverse()
            .ok_or_else(|| Error::Internal("basis change is singular".into()))?;
        let maps = (0..q.cols()).map(|k| self.map_of(&q.column(k))).collect();
        let to_basis = match &self.to_basis {
            Some(t) => qinv.mul(t),
            None => qinv,
        };
        Ok(EndAlgebra {
            algebra,
            maps,
            module: self.module.clone(),
            coords: self.coords.clone(),
            to_basis: Some(to_basis),
        })
    }

    /// The module as an `(A, B)`-bimodule with `p·b = b(p)`, in a basis
    /// adapted to the idempotents of `B`. Also returns the basis change.
    pub fn bimodule(&self) -> Result<(Bimodule, Matrix)> {
        if self.module.side() != Side::Left {
            return Err(Error::AlgebraMismatch(
                "bimodule structure needs a left module".into(),
            ));
        }
        Bimodule::adapt(
            self.module.algebra().clone(),
            self.algebra.clone(),
            self.module.actions().to_vec(),
            self.maps.clone(),
        )
    }
}
