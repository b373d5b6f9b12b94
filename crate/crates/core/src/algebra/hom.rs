use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{unit, Matrix, Subspace};
use crate::scalar::Scalar;

/// A linear map between algebras that preserves the bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom<F> {
    source: LeibnizAlgebra<F>,
    target: LeibnizAlgebra<F>,
    map: Matrix<F>,
}

impl<F: Scalar> AlgebraHom<F> {
    /// `map` is `target.dim() x source.dim()`; the morphism property is
    /// checked on all basis pairs.
    pub fn new(source: LeibnizAlgebra<F>, target: LeibnizAlgebra<F>, map: Matrix<F>) -> Result<Self> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: map.rows() * map.cols(),
            });
        }
        let n = source.dim();
        let images: Vec<Vec<F>> = (0..n).map(|i| map.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = map.mul_vec(source.basis_bracket(i, j));
                let rhs = target.br(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotAMorphism(i, j));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(a: &LeibnizAlgebra<F>) -> Self {
        Self {
            source: a.clone(),
            target: a.clone(),
            map: Matrix::identity(a.dim()),
        }
    }

    pub fn source(&self) -> &LeibnizAlgebra<F> {
        &self.source
    }

    pub fn target(&self) -> &LeibnizAlgebra<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.map
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        self.map.mul_vec(v)
    }

    pub fn kernel(&self) -> Subspace<F> {
        self.map.kernel()
    }

    pub fn image(&self) -> Subspace<F> {
        Subspace::full(self.source.dim()).image(&self.map)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.map.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn compose(&self, after: &Self) -> Result<Self> {
        if after.source != self.target {
            return Err(Error::DimensionMismatch {
                expected: self.target.dim(),
                found: after.source.dim(),
            });
        }
        Self::new(self.source.clone(), after.target.clone(), after.map.mul(&self.map))
    }

    /// Image of the `i`-th source basis vector.
    pub fn image_of_basis(&self, i: usize) -> Vec<F> {
        self.apply(&unit(self.source.dim(), i))
    }
}
