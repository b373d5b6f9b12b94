//! Algebras presented by structure constants.
//!
//! A [`LeibnizAlgebra`] is any bilinear product on `F^n`; no law is assumed
//! at construction so that the checkers in [`classify`](LeibnizAlgebra::classify)
//! can reject products that are not Leibniz.

mod classify;
mod hom;
mod structure;

pub use classify::{ClassificationFlags, Law, Violation};
pub use hom::AlgebraHom;
pub use structure::{Quotient, Side};
pub(crate) use structure::lie_radical;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{unit, Matrix};
use crate::scalar::Scalar;

/// Structure tensor `c` with `[e_i e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra<F> {
    dim: usize,
    c: Vec<F>,
    labels: Vec<String>,
}

impl<F: Scalar> LeibnizAlgebra<F> {
    /// The algebra with zero product.
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            c: vec![F::zero(); dim * dim * dim],
            labels: default_labels(dim),
        }
    }

    /// Builds an algebra from a flat tensor indexed `(i * dim + j) * dim + k`.
    pub fn from_tensor(dim: usize, c: Vec<F>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: c.len(),
            });
        }
        Ok(Self {
            dim,
            c,
            labels: default_labels(dim),
        })
    }

    /// Builds an algebra from a function giving `[e_i e_j]`.
    pub fn from_brackets(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<F>) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bracket vector has wrong length");
                c.extend(v);
            }
        }
        Self {
            dim,
            c,
            labels: default_labels(dim),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tensor(&self) -> &[F] {
        &self.c
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Sets `[e_i e_j] = v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[F]) {
        assert_eq!(v.len(), self.dim);
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].clone_from_slice(v);
    }

    /// `[e_i e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[F] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.br(x, y))
    }

    /// Bracket without the length check.
    pub(crate) fn br(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coef = xi.clone() * yj;
                for (k, ck) in self.basis_bracket(i, j).iter().enumerate() {
                    if !ck.is_zero() {
                        let t = coef.clone() * ck;
                        out[k] = std::mem::replace(&mut out[k], F::zero()) + t;
                    }
                }
            }
        }
        out
    }

    /// Bracket of a basis vector with an arbitrary vector.
    pub(crate) fn br_basis_left(&self, i: usize, y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, ck) in self.basis_bracket(i, j).iter().enumerate() {
                if !ck.is_zero() {
                    let t = yj.clone() * ck;
                    out[k] = std::mem::replace(&mut out[k], F::zero()) + t;
                }
            }
        }
        out
    }

    /// Matrix of the left multiplication `y -> [x y]`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|j| self.br(x, &unit(self.dim, j)))
            .collect();
        Matrix::from_columns(self.dim, &cols).expect("columns have length dim")
    }

    /// Matrix of the right multiplication `y -> [y x]`.
    pub fn right_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim)
            .map(|j| self.br(&unit(self.dim, j), x))
            .collect();
        Matrix::from_columns(self.dim, &cols).expect("columns have length dim")
    }

    /// Left multiplication by the basis vector `e_i`.
    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.structure_constant(i, j, k).clone())
    }

    /// The same algebra in the basis given by the columns of `p`.
    ///
    /// A subspace `u` of the old coordinates corresponds to
    /// `u.image(&p_inverse)` in the new ones; the inverse is returned
    /// alongside.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<(Self, Matrix<F>)> {
        if p.rows() != self.dim || !p.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let inv = p.inverse().ok_or(Error::NotAutomorphism)?;
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| p.column(j)).collect();
        let out = Self::from_brackets(self.dim, |a, b| inv.mul_vec(&self.br(&cols[a], &cols[b])));
        Ok((out, inv))
    }

    /// `M ⊥ M'`: the direct sum with componentwise bracket.
    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.dim, other.dim);
        let mut out = Self::abelian(n1 + n2);
        for i in 0..n1 {
            for j in 0..n1 {
                let mut v = self.basis_bracket(i, j).to_vec();
                v.extend(std::iter::repeat_n(F::zero(), n2));
                out.set_bracket(i, j, &v);
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                let mut v = vec![F::zero(); n1];
                v.extend(other.basis_bracket(i, j).iter().cloned());
                out.set_bracket(n1 + i, n1 + j, &v);
            }
        }
        out.labels = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .cloned()
            .collect();
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}
