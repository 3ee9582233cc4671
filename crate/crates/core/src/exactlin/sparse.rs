//! Sparse row reduction for the large, very sparse systems that arise from
//! intertwining conditions and tensor relations.

use std::collections::BTreeMap;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparsify(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn densify(field: Field, n: usize, v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + c * b`
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale(v: &mut SparseVec, c: &Scalar) {
    for (_, x) in v.iter_mut() {
        *x *= c;
    }
}

/// Incremental echelon form of a row space; pivots are leading (smallest)
/// column indices.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduce `v` until its leading column is not a pivot.
    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((c, x)) = v.first() else { return v };
            match self.rows.get(c) {
                Some(row) => {
                    let f = -x;
                    v = axpy(&v, &f, row);
                }
                None => return v,
            }
        }
    }

    /// Fully reduce `v` against every pivot row.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut k = 0;
        while k < v.len() {
            let c = v[k].0;
            if let Some(row) = self.rows.get(&c) {
                let f = -&v[k].1;
                v = axpy(&v, &f, row);
                // entry at c is now gone; stay at position k
            } else {
                k += 1;
            }
        }
        v
    }

    /// Insert a row; returns whether it enlarged the row space.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(c, _)| *c < self.ncols));
        let mut v = self.reduce_leading(v);
        if v.is_empty() {
            return false;
        }
        let inv = v[0].1.inv().expect("nonzero leading entry");
        scale(&mut v, &inv);
        self.rows.insert(v[0].0, v);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(sparsify(v))
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Bring the stored rows to reduced row echelon form.
    pub fn make_reduced(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let row = self.rows.remove(&p).expect("pivot row");
            let head = row[0].clone();
            let tail = self.reduce(row[1..].to_vec());
            let mut row = vec![head];
            row.extend(tail);
            self.rows.insert(p, row);
        }
    }

    /// Rows of the reduced echelon form, ordered by pivot.
    pub fn reduced_rows(mut self) -> Vec<SparseVec> {
        self.make_reduced();
        self.rows.into_values().collect()
    }

    /// Basis of `{x : r . x = 0 for every stored row r}`, one vector per free
    /// column, each with a 1 at its free column and 0 at the other free columns.
    pub fn kernel(mut self) -> Vec<(usize, SparseVec)> {
        self.make_reduced();
        let mut free: BTreeMap<usize, SparseVec> = (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|c| (c, Vec::new()))
            .collect();
        for (&p, row) in &self.rows {
            for (c, x) in &row[1..] {
                free.get_mut(c).expect("non-pivot column").push((p, -x));
            }
        }
        let one = self.field.one();
        free.into_iter()
            .map(|(f, mut v)| {
                v.push((f, one.clone()));
                v.sort_by_key(|(c, _)| *c);
                (f, v)
            })
            .collect()
    }

    pub fn to_matrix(self) -> Matrix {
        let field = self.field;
        let n = self.ncols;
        let rows = self.reduced_rows();
        Matrix::from_rows(
            field,
            n,
            rows.iter().map(|r| densify(field, n, r)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_kernel_matches_dense() {
        let q = Field::Rationals;
        let m = Matrix::from_i64(q, &[&[1, 2, 0, -1], &[0, 1, 1, 1], &[1, 3, 1, 0]]);
        let mut e = Echelon::new(q, 4);
        for r in m.row_vectors() {
            e.insert_dense(&r);
        }
        assert_eq!(e.rank(), 2);
        let ker = e.clone().kernel();
        assert_eq!(ker.len(), 2);
        for (_, v) in &ker {
            let d = densify(q, 4, v);
            assert!(m.mul_vec(&d).iter().all(Scalar::is_zero));
        }
        assert_eq!(
            e.to_matrix(),
            m.rref().matrix.select(&[0, 1], &[0, 1, 2, 3])
        );
    }
}
