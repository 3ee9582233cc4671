use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Field, Scalar};
use super::sparse::Echelon;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            field,
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = &self[(i, j)];
                if !v.is_zero() {
                    t[(j, i)] = v.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_product(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        self.with_data(data)
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// `trace(self * rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Matrix) -> Scalar {
        assert_eq!((self.rows, self.cols), (rhs.cols, rhs.rows));
        let mut t = self.field.zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    t.add_product(a, &rhs[(k, i)]);
                }
            }
        }
        t
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Rows `rows` and columns `cols` (in the given order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Reduced row echelon form, with zero rows at the bottom.
    pub fn rref(&self) -> Rref {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert_dense(self.row(i));
        }
        let rows = ech.reduced_rows();
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut m = Matrix::zeros(self.field, self.rows, self.cols);
        for (i, r) in rows.iter().enumerate() {
            for (c, x) in r {
                m[(i, *c)] = x.clone();
            }
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let field = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); self.cols];
            v[f] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                let a = &matrix[(i, f)];
                if !a.is_zero() {
                    v[p] = -a;
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(field, self.cols, basis)
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs);
        let Rref {
            matrix,
            pivots,
            rank,
        } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for i in 0..rank {
            for j in 0..rhs.cols {
                x[(pivots[i], j)] = matrix[(i, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve(&id).ok().flatten()?;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_vectors(
            self.field,
            self.rows,
            (0..self.cols).map(|j| self.column(j)).collect(),
        )
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.row_vectors())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(Q, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        let z = Matrix::zeros(Q, 2, 5);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_is_reduced_and_spans_the_rows() {
        let m = Matrix::from_i64(
            Q,
            &[&[2, 4, 1, 3], &[3, 1, 5, 7], &[5, 5, 6, 10], &[1, -1, 2, 0]],
        );
        let r = m.rref();
        assert_eq!(r.rank, 3);
        for (i, &p) in r.pivots.iter().enumerate() {
            for k in 0..4 {
                let want = if k == i { Q.one() } else { Q.zero() };
                assert_eq!(r.matrix[(k, p)], want);
            }
        }
        assert!(r.matrix.row(3).iter().all(|x| x.is_zero()));
        let span = Subspace::from_vectors(Q, 4, (0..3).map(|i| r.matrix.row(i).to_vec()).collect());
        for i in 0..4 {
            assert!(span.contains(m.row(i)));
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 4).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel().dim(), 3);
        let k = Matrix::from_i64(Q, &[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        let v = &k.basis().row_vectors()[0];
        assert_eq!(v[0], -&v[1]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(Q, 2);
        let b = Matrix::from_i64(Q, &[&[3], &[-1]]);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);
        let z = Matrix::zeros(Q, 2, 2);
        assert_eq!(z.solve(&b).unwrap(), None);
        let two = Matrix::from_i64(Q, &[&[2]]);
        let one = Matrix::from_i64(Q, &[&[1]]);
        let x = two.solve(&one).unwrap().unwrap();
        assert_eq!(x[(0, 0)], Q.parse("1/2").unwrap());
        assert!(id.solve(&Matrix::zeros(Q, 3, 1)).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
