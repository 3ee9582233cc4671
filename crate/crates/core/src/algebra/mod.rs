//! Finite-dimensional algebras given by structure constants, together with a
//! distinguished complete set of orthogonal idempotents.
//!
//! Every algebra keeps its basis *Peirce adapted*: each basis element `b`
//! satisfies `e_j b e_i = b` for exactly one pair of distinguished idempotents.
//! Modules over the algebra inherit this as a weight grading, which keeps the
//! linear systems for homomorphisms and tensor products block structured.

mod ops;
mod quiver;

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactlin::sparse::{axpy, densify, sparsify};
use crate::exactlin::{Field, Matrix, Scalar, SparseVec, Subspace};

pub use ops::{corner_algebra, opposite_algebra, validate_algebra, CornerAlgebra};
pub(crate) use quiver::field_json;
pub use quiver::{build_algebra, Arrow, QuiverPresentation, Relation, Term};

/// Sum of a subset of an algebra's distinguished idempotents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Idempotent {
    vertices: Vec<usize>,
}

impl Idempotent {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Idempotent { vertices }
    }

    pub fn unit(a: &Algebra) -> Self {
        Idempotent::new((0..a.num_idempotents()).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn coefficients(&self, a: &Algebra) -> Result<Vec<Scalar>> {
        let mut out = vec![a.field().zero(); a.dim()];
        for &v in &self.vertices {
            let e = a
                .idempotents
                .get(v)
                .ok_or_else(|| Error::NotIdempotentSubset(format!("no idempotent {v}")))?;
            for (o, x) in out.iter_mut().zip(e) {
                *o += x;
            }
        }
        Ok(out)
    }

    pub fn label(&self, a: &Algebra) -> String {
        self.vertices
            .iter()
            .map(|&v| format!("e{}", a.vertex_labels[v]))
            .collect::<Vec<_>>()
            .join("+")
    }
}

pub struct Algebra {
    field: Field,
    basis_labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    unit: Vec<Scalar>,
    idempotents: Vec<Vec<Scalar>>,
    vertex_labels: Vec<String>,
    primitive: bool,
    peirce: Vec<(usize, usize)>,
    adapted: bool,
    fingerprint: u64,
    known_radical: Option<Subspace>,
    radical: OnceLock<Result<Subspace>>,
    generators: OnceLock<Vec<usize>>,
    classes: OnceLock<Result<Vec<Vec<usize>>>>,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: Weak<Algebra>,
}

/// Raw data from which an [`Algebra`] is assembled.
#[derive(Clone, Debug)]
pub struct AlgebraParts {
    pub field: Field,
    pub basis_labels: Vec<String>,
    /// `table[i][j]` holds the coordinates of `b_i * b_j`.
    pub table: Vec<Vec<SparseVec>>,
    pub unit: Vec<Scalar>,
    pub idempotents: Vec<Vec<Scalar>>,
    pub vertex_labels: Vec<String>,
    pub primitive: bool,
    pub known_radical: Option<Subspace>,
}

impl Algebra {
    /// Assemble an algebra. The basis must be Peirce adapted to the given
    /// idempotents; axioms are not checked here (see [`validate_algebra`]).
    pub fn from_parts(parts: AlgebraParts) -> Result<Self> {
        let mut a = Self::assemble(parts)?;
        a.peirce = a.compute_peirce()?;
        a.adapted = true;
        a.fingerprint = a.compute_fingerprint();
        Ok(a)
    }

    /// Like [`Algebra::from_parts`] but accepts data that is not Peirce
    /// adapted (or not even an algebra), so it can be fed to
    /// [`validate_algebra`].
    pub fn from_parts_unchecked(parts: AlgebraParts) -> Self {
        let mut a = Self::assemble(parts).expect("well-shaped structure tensor");
        match a.compute_peirce() {
            Ok(p) => {
                a.peirce = p;
                a.adapted = true;
            }
            Err(_) => a.peirce = vec![(0, 0); a.dim()],
        }
        a.fingerprint = a.compute_fingerprint();
        a
    }

    pub(crate) fn is_adapted(&self) -> bool {
        self.adapted
    }

    fn assemble(parts: AlgebraParts) -> Result<Self> {
        let AlgebraParts {
            field,
            basis_labels,
            table,
            unit,
            idempotents,
            vertex_labels,
            primitive,
            known_radical,
        } = parts;
        let dim = basis_labels.len();
        if table.len() != dim || table.iter().any(|r| r.len() != dim) || unit.len() != dim {
            return Err(Error::DimensionMismatch("structure tensor shape".into()));
        }
        if idempotents.len() != vertex_labels.len() || idempotents.iter().any(|e| e.len() != dim) {
            return Err(Error::DimensionMismatch("idempotent list".into()));
        }
        Ok(Algebra {
            field,
            basis_labels,
            table,
            unit,
            idempotents,
            vertex_labels,
            primitive,
            peirce: Vec::new(),
            adapted: false,
            fingerprint: 0,
            known_radical,
            radical: OnceLock::new(),
            generators: OnceLock::new(),
            classes: OnceLock::new(),
            opposite: OnceLock::new(),
            opposite_of: Weak::new(),
        })
    }

    fn compute_peirce(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.idempotents.len();
        (0..self.dim())
            .map(|k| {
                let b = self.basis_vector(k);
                let mut found = None;
                for j in 0..n {
                    let left = self.mul(&self.idempotents[j], &b);
                    if left.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    for i in 0..n {
                        if self.mul(&left, &self.idempotents[i]) == b {
                            found = Some((j, i));
                        }
                    }
                }
                found.ok_or_else(|| {
                    Error::Internal(format!(
                        "basis element {} is not Peirce adapted",
                        self.basis_labels[k]
                    ))
                })
            })
            .collect()
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.field.hash(&mut h);
        self.dim().hash(&mut h);
        self.table.hash(&mut h);
        self.unit.hash(&mut h);
        self.idempotents.hash(&mut h);
        h.finish()
    }

    /// The ground field viewed as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        let one = field.one();
        Algebra::from_parts(AlgebraParts {
            field,
            basis_labels: vec!["1".into()],
            table: vec![vec![vec![(0, one.clone())]]],
            unit: vec![one.clone()],
            idempotents: vec![vec![one]],
            vertex_labels: vec!["1".into()],
            primitive: true,
            known_radical: Some(Subspace::zero(field, 1)),
        })
        .expect("ground field")
    }

    /// Shared instance of [`Algebra::ground`].
    pub fn ground_arc(field: Field) -> Arc<Algebra> {
        static CACHE: OnceLock<Mutex<HashMap<Field, Arc<Algebra>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("ground field cache");
        guard
            .entry(field)
            .or_insert_with(|| Arc::new(Algebra::ground(field)))
            .clone()
    }

    pub fn is_ground(&self) -> bool {
        self.dim() == 1 && self.num_idempotents() == 1
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|v| v == label)
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.idempotents
    }

    pub fn num_idempotents(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotents_primitive(&self) -> bool {
        self.primitive
    }

    /// `(j, i)` with `e_j b_k e_i = b_k`.
    pub fn peirce(&self, k: usize) -> (usize, usize) {
        self.peirce[k]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Structural equality (same field, structure constants and idempotents).
    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other)
            || (self.fingerprint == other.fingerprint
                && self.field == other.field
                && self.table == other.table
                && self.idempotents == other.idempotents)
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub(crate) fn table(&self) -> &Vec<Vec<SparseVec>> {
        &self.table
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[k] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut acc: SparseVec = Vec::new();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                acc = axpy(&acc, &(a * b), &self.table[i][j]);
            }
        }
        densify(self.field, self.dim(), &acc)
    }

    /// Matrix of `y ↦ x y` (columns indexed by basis).
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.table[i][j] {
                    m[(*k, j)].add_product(a, c);
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.table[j][i] {
                    m[(*k, j)].add_product(a, c);
                }
            }
        }
        m
    }

    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        self.left_mult_matrix(&self.basis_vector(i))
    }

    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        self.right_mult_matrix(&self.basis_vector(i))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Basis indices lying in `e_j A e_i`.
    pub fn peirce_component(&self, j: usize, i: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| self.peirce[k] == (j, i))
            .collect()
    }

    /// Index of the basis element equal to idempotent `v`, if there is one.
    pub fn idempotent_basis_index(&self, v: usize) -> Option<usize> {
        let e = sparsify(&self.idempotents[v]);
        (e.len() == 1 && e[0].1.is_one()).then(|| e[0].0)
    }

    /// The Jacobson radical. Presented algebras know it combinatorially;
    /// otherwise the kernel of the trace form `(x, y) ↦ Tr(L_{xy})` is used,
    /// which needs characteristic 0 or `p > dim`.
    pub fn radical(&self) -> Result<Subspace> {
        self.radical
            .get_or_init(|| match &self.known_radical {
                Some(r) => Ok(r.clone()),
                None => crate::krullschmidt::trace_form_radical(self),
            })
            .clone()
    }

    /// A set of basis elements that, with the distinguished idempotents,
    /// generates the algebra. Chosen greedily in basis order.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| self.compute_generators())
    }

    fn compute_generators(&self) -> Vec<usize> {
        // anything spanning A modulo J² together with the idempotents
        // generates A
        if let Ok(j) = self.radical() {
            let jv = j.vectors();
            let mut span = crate::exactlin::Echelon::new(self.field, self.dim());
            for e in &self.idempotents {
                span.insert_dense(e);
            }
            for x in &jv {
                for y in &jv {
                    span.insert_dense(&self.mul(x, y));
                }
            }
            return (0..self.dim())
                .filter(|&k| span.insert(vec![(k, self.field.one())]))
                .collect();
        }
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.subalgebra_span(&gens);
        for k in 0..self.dim() {
            if span.contains(vec![(k, self.field.one())]) {
                continue;
            }
            gens.push(k);
            span = self.subalgebra_span(&gens);
            if span.rank() == self.dim() {
                break;
            }
        }
        gens
    }

    /// Span of the subalgebra generated by the idempotents and `gens`.
    fn subalgebra_span(&self, gens: &[usize]) -> crate::exactlin::Echelon {
        let mut span = crate::exactlin::Echelon::new(self.field, self.dim());
        let mut left: Vec<Matrix> = Vec::new();
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        let mut seeds: Vec<Vec<Scalar>> = self.idempotents.clone();
        seeds.extend(gens.iter().map(|&g| self.basis_vector(g)));
        for s in &seeds {
            left.push(self.left_mult_matrix(s));
            if span.insert_dense(s) {
                queue.push(s.clone());
            }
        }
        while let Some(w) = queue.pop() {
            for l in &left {
                let p = l.mul_vec(&w);
                if span.insert_dense(&p) {
                    queue.push(p);
                }
            }
        }
        span
    }

    /// Partition of the distinguished idempotents into classes with
    /// isomorphic projectives `A e_i`. Needs primitive idempotents.
    pub fn vertex_classes(&self) -> Result<Vec<Vec<usize>>> {
        self.classes
            .get_or_init(|| {
                let rad = self.radical()?;
                let n = self.num_idempotents();
                let mut class_of: Vec<Option<usize>> = vec![None; n];
                let mut classes: Vec<Vec<usize>> = Vec::new();
                for i in 0..n {
                    if class_of[i].is_some() {
                        continue;
                    }
                    let c = classes.len();
                    class_of[i] = Some(c);
                    let mut members = vec![i];
                    for j in i + 1..n {
                        if class_of[j].is_none() && self.projectives_isomorphic(i, j, &rad) {
                            class_of[j] = Some(c);
                            members.push(j);
                        }
                    }
                    classes.push(members);
                }
                Ok(classes)
            })
            .clone()
    }

    /// `A e_i ≅ A e_j` iff `e_i A e_j A e_i ⊄ rad`.
    fn projectives_isomorphic(&self, i: usize, j: usize, rad: &Subspace) -> bool {
        let ij = self.peirce_component(i, j);
        let ji = self.peirce_component(j, i);
        ij.iter().any(|&a| {
            ji.iter().any(|&b| {
                let p = densify(self.field, self.dim(), &self.table[a][b]);
                !rad.contains(&p)
            })
        })
    }

    /// The opposite algebra, cached; `a.opposite().opposite()` is `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.opposite_of.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let mut op = ops::opposite_parts(self);
                op.opposite_of = Arc::downgrade(self);
                Arc::new(op)
            })
            .clone()
    }

    pub fn describe(&self) -> String {
        format!(
            "algebra of dimension {} over {} with {} idempotents",
            self.dim(),
            self.field,
            self.num_idempotents()
        )
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("basis", &self.basis_labels)
            .field("vertices", &self.vertex_labels)
            .field("primitive", &self.primitive)
            .finish()
    }
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::from_parts_unchecked(self.parts())
    }
}

impl Algebra {
    pub fn parts(&self) -> AlgebraParts {
        AlgebraParts {
            field: self.field,
            basis_labels: self.basis_labels.clone(),
            table: self.table.clone(),
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            vertex_labels: self.vertex_labels.clone(),
            primitive: self.primitive,
            known_radical: self.known_radical.clone(),
        }
    }
}

#[cfg(test)]
mod tests;
