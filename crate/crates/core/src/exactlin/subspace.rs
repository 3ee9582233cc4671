use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::sparse::{densify, Echelon};
use crate::error::{Error, Result};

/// A linear subspace of `k^n`, stored by its reduced echelon basis, which is
/// a canonical representative: two subspaces are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Lattice data for a pair of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// `a ⊆ b`
    pub containment: bool,
    pub equality: bool,
}

impl Subspace {
    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for v in &vectors {
            ech.insert_dense(v);
        }
        let rows = ech
            .reduced_rows()
            .iter()
            .map(|r| densify(field, ambient, r))
            .collect();
        Self::from_rref_rows(field, ambient, rows)
    }

    /// Build from rows already in reduced echelon form.
    pub(crate) fn from_rref_rows(field: Field, ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(field, ambient, rows),
            pivots,
        }
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let residual = self.residual(v);
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    /// `v` minus its echelon reduction against the basis.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(k).iter().enumerate() {
                if !b.is_zero() {
                    r[j] -= &(&c * b);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.residual(v).iter().all(Scalar::is_zero)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.row_vectors().iter().all(|v| self.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Ok(Subspace::from_vectors(self.field(), self.ambient, vs))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(field, self.ambient));
        }
        // x A = y B  <=>  [A^T | -B^T] (x, y) = 0
        let stacked = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose().scale(&-field.one()));
        let ker = stacked.kernel();
        let ra = self.dim();
        let vs = ker
            .vectors()
            .into_iter()
            .map(|v| {
                let mut out = vec![field.zero(); self.ambient];
                for (k, c) in v[..ra].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, b) in self.basis.row(k).iter().enumerate() {
                        out[j].add_product(c, b);
                    }
                }
                out
            })
            .collect();
        Ok(Subspace::from_vectors(field, self.ambient, vs))
    }

    /// Sum, intersection, containment (`self ⊆ other`) and equality.
    pub fn ops(&self, other: &Subspace) -> Result<SubspaceOps> {
        Ok(SubspaceOps {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
            containment: other.contains_subspace(self)?,
            equality: self == other,
        })
    }

    /// Coordinates not occupied by pivots; the standard basis vectors at these
    /// positions span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Image of `self` under `x ↦ m x`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let vs = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(self.field(), m.rows(), vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn span(vs: &[&[i64]]) -> Subspace {
        let n = vs[0].len();
        Subspace::from_vectors(
            Q,
            n,
            vs.iter()
                .map(|v| v.iter().map(|&x| Q.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn full_and_any() {
        let full = Subspace::full(Q, 3);
        let b = span(&[&[1, 1, 0]]);
        let ops = full.ops(&b).unwrap();
        assert_eq!(ops.intersection, b);
        assert_eq!(ops.sum, full);
        assert!(!ops.containment);
        assert!(b.ops(&full).unwrap().containment);
    }

    #[test]
    fn equality_is_canonical() {
        let a = span(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = span(&[&[1, 2, 1], &[2, 3, 1]]);
        assert!(a.ops(&b).unwrap().equality);
        assert_eq!(a, b);
    }

    #[test]
    fn axes_intersect_trivially() {
        let a = span(&[&[1, 0]]);
        let b = span(&[&[0, 1]]);
        assert!(a.intersection(&b).unwrap().is_zero());
        assert!(a.sum(&Subspace::zero(Q, 3)).is_err());
    }

    #[test]
    fn coordinates_use_pivots() {
        let a = span(&[&[1, 0, 2], &[0, 1, 3]]);
        let v: Vec<Scalar> = [2, -1, 1].iter().map(|&x| Q.from_i64(x)).collect();
        assert_eq!(
            a.coordinates(&v).unwrap(),
            vec![Q.from_i64(2), Q.from_i64(-1)]
        );
        let w: Vec<Scalar> = [0, 0, 1].iter().map(|&x| Q.from_i64(x)).collect();
        assert!(a.coordinates(&w).is_none());
    }
}
