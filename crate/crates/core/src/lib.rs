//! Exact computations with finite-dimensional Leibniz algebras given by
//! structure constants.
//!
//! Everything is generic over a [`Scalar`] field; [`Q`] (arbitrary
//! precision rationals) is the intended instantiation and the aliases below
//! fix it.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod pairing;
pub mod scalar;

pub use algebra::{AlgebraHom, ClassificationFlags, Law, LeibnizAlgebra, Quotient, Side, Violation};
pub use constructions::{Quintuple, QuintupleViolation};
pub use error::{Error, Result};
pub use lie::{LeviDecomposition, ModuleAction};
pub use linalg::{Matrix, Solution, Subspace};
pub use pairing::{KernelValuedForm, ScalarForm};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rationals.
pub type Q = BigRational;
pub type Algebra = LeibnizAlgebra<Q>;
pub type QMatrix = Matrix<Q>;
pub type QSubspace = Subspace<Q>;
pub type QModule = ModuleAction<Q>;
pub type QHom = AlgebraHom<Q>;
pub type QQuintuple = Quintuple<Q>;

#[cfg(test)]
pub(crate) mod test_support {
    use crate::{constructions, Algebra, QSubspace, Q};

    pub fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_integer(x.into())).collect()
    }

    pub fn span(n: usize, vs: &[&[i64]]) -> QSubspace {
        QSubspace::span(n, vs.iter().map(|v| qv(v)))
    }

    /// `[e0 e0] = e1`.
    pub fn two_dim() -> Algebra {
        let mut a = Algebra::abelian(2);
        a.set_bracket(0, 0, &qv(&[0, 1]));
        a
    }

    pub fn sl2() -> Algebra {
        constructions::sl(2)
    }

    /// `[x y] = y = -[y x]`.
    pub fn solvable_xy() -> Algebra {
        let mut a = Algebra::abelian(2);
        a.set_bracket(0, 1, &qv(&[0, 1]));
        a.set_bracket(1, 0, &qv(&[0, -1]));
        a
    }
}
