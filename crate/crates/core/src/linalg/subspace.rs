use num_traits::Zero;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A subspace of `F^n` held by its reduced row-echelon basis.
///
/// The representation is canonical: two subspaces are equal exactly when
/// their basis matrices are identical, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let basis = Matrix::from_fn(k, m.cols(), |i, j| r[(i, j)].clone());
        Self {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Span of a family of vectors of length `ambient`.
    ///
    /// Panics if a vector has the wrong length.
    pub fn span<V: AsRef<[F]>>(ambient: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        let rows: Vec<Vec<F>> = vectors.into_iter().map(|v| v.as_ref().to_vec()).collect();
        let m = Matrix::from_rows(ambient, rows).expect("vector length must equal ambient dimension");
        Self::row_space(&m)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(ambient, indices.into_iter().map(|i| unit::<F>(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors().map(<[F]>::to_vec).collect()
    }

    /// Remainder of `v` modulo the subspace; it vanishes on every pivot column.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    let t = c.clone() * b;
                    out[j] = std::mem::replace(&mut out[j], F::zero()) - t;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.row_vectors().all(|v| other.contains(v))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates.
    pub fn from_coords(&self, c: &[F]) -> Vec<F> {
        assert_eq!(c.len(), self.dim());
        let mut out = vec![F::zero(); self.ambient];
        for (row, coef) in c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    let t = coef.clone() * b;
                    out[j] = std::mem::replace(&mut out[j], F::zero()) + t;
                }
            }
        }
        out
    }

    /// Inclusion matrix (`ambient x dim`) whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix<F> {
        self.basis.transpose()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let m = Matrix::vstack(self.ambient, &[self.basis.clone(), other.basis.clone()]);
        Ok(Self::row_space(&m))
    }

    /// Intersection by the Zassenhaus double-basis reduction.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let rows = self.dim() + other.dim();
        let mut m = Matrix::zeros(rows, 2 * n);
        for (i, v) in self.basis.row_vectors().enumerate() {
            for j in 0..n {
                m[(i, j)] = v[j].clone();
                m[(i, n + j)] = v[j].clone();
            }
        }
        for (i, v) in other.basis.row_vectors().enumerate() {
            for j in 0..n {
                m[(self.dim() + i, j)] = v[j].clone();
            }
        }
        let (r, pivots) = m.rref_with_pivots();
        let inter: Vec<Vec<F>> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Ok(Self::span(n, inter))
    }

    /// A complement `c` of `self` inside `w`, so that `c ⊕ self = w`.
    ///
    /// Basis vectors of `w` are adjoined in order whenever they are not yet
    /// spanned, which makes the result deterministic.
    pub fn complement_in(&self, w: &Self) -> Result<Self> {
        self.check_ambient(w)?;
        if !self.is_subspace_of(w) {
            return Err(Error::NotContained);
        }
        let mut acc = self.clone();
        let mut picked = Vec::new();
        for v in w.basis.row_vectors() {
            if !acc.contains(v) {
                acc = acc.sum(&Self::span(self.ambient, [v]))?;
                picked.push(v.to_vec());
            }
            if acc.dim() == w.dim() {
                break;
            }
        }
        Ok(Self::span(self.ambient, picked))
    }

    /// Complement spanned by the standard basis vectors off the pivot columns.
    pub fn standard_complement(&self) -> Self {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        Self::coordinate(self.ambient, (0..self.ambient).filter(|&j| !is_pivot[j]))
    }

    /// Image under the linear map `v -> m * v`.
    pub fn image(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        Self::span(m.rows(), self.basis.row_vectors().map(|v| m.mul_vec(v)))
    }

    /// Preimage `{v : m * v ∈ self}` of this subspace under `m`.
    pub fn preimage(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.rows(), self.ambient);
        // v ∈ preimage iff the reduction of m*v modulo self vanishes.
        let reduced = Matrix::from_columns(
            self.ambient,
            &(0..m.cols()).map(|j| self.reduce(&m.column(j))).collect::<Vec<_>>(),
        )
        .expect("columns have ambient length");
        reduced.kernel()
    }

    /// Matrix of `m` restricted to `self` and written in the coordinates of
    /// `target`; fails if `m` does not map `self` into `target`.
    pub fn restrict_map(&self, m: &Matrix<F>, target: &Self) -> Result<Matrix<F>> {
        let cols = self
            .basis
            .row_vectors()
            .map(|v| target.coords(&m.mul_vec(v)).ok_or(Error::NotContained))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(target.dim(), &cols)
    }
}

pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}
