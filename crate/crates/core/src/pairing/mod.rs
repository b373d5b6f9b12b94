//! The symmetric pairing `ψ(a, b) = [ab] + [ba]` and its geometry.
//!
//! `ψ` takes values in the Leibniz kernel `C(M)`. [`KernelValuedForm`]
//! stores one symmetric Gram matrix per basis vector of `C(M)`; when the rank
//! is one the single component is a [`ScalarForm`] and the usual
//! quadratic-form vocabulary (isotropic vectors, hyperbolic planes, Witt
//! index) applies.

mod embedding;
mod isotropic;

pub use embedding::{rank_one_projections, RankOneEmbedding};
pub use isotropic::{
    certify_anisotropic, find_isotropic_vector, maximal_totally_isotropic,
    pair_of_transverse_lagrangians, Anisotropy, HyperbolicSplitting,
};

use num_traits::Zero;

use crate::algebra::{Law, LeibnizAlgebra, Violation};
use crate::error::{Error, Result};
use crate::linalg::{dot, unit, Matrix, Subspace};
use crate::scalar::Scalar;

/// `ψ(a, b) = Σ_t (aᵀ G_t b) n_t` with `n_t` the canonical basis of `C(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelValuedForm<F> {
    dim: usize,
    kernel: Subspace<F>,
    components: Vec<Matrix<F>>,
}

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarForm<F> {
    gram: Matrix<F>,
}

/// Shared linear algebra for a family of Gram matrices on `F^n`.
fn orth_of<F: Scalar>(n: usize, grams: &[Matrix<F>], u: &Subspace<F>) -> Subspace<F> {
    let mut rows = Vec::new();
    for g in grams {
        for a in u.basis().row_vectors() {
            rows.push((0..n).map(|j| dot(a, &g.column(j))).collect::<Vec<F>>());
        }
    }
    Matrix::from_rows(n, rows).expect("rows have length n").kernel()
}

fn bilinear<F: Scalar>(g: &Matrix<F>, a: &[F], b: &[F]) -> F {
    dot(a, &g.mul_vec(b))
}

impl<F: Scalar> KernelValuedForm<F> {
    pub fn of(a: &LeibnizAlgebra<F>) -> Self {
        let n = a.dim();
        let kernel = a.leibniz_kernel();
        let components = kernel
            .pivots()
            .iter()
            .map(|&p| {
                Matrix::from_fn(n, n, |i, j| {
                    a.structure_constant(i, j, p).clone() + a.structure_constant(j, i, p)
                })
            })
            .collect();
        Self {
            dim: n,
            kernel,
            components,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kernel(&self) -> &Subspace<F> {
        &self.kernel
    }

    pub fn components(&self) -> &[Matrix<F>] {
        &self.components
    }

    /// `ψ(a, b)` in kernel coordinates.
    pub fn eval_coords(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.components.iter().map(|g| bilinear(g, a, b)).collect()
    }

    /// `ψ(a, b)` as a vector of the algebra.
    pub fn eval(&self, a: &[F], b: &[F]) -> Vec<F> {
        self.kernel.from_coords(&self.eval_coords(a, b))
    }

    pub fn is_symmetric(&self) -> bool {
        self.components.iter().all(|g| g.transpose() == *g)
    }

    /// `R = M^⊥`.
    pub fn radical(&self) -> Subspace<F> {
        self.orth(&Subspace::full(self.dim))
    }

    /// `U^⊥ = {b : ψ(a, b) = 0 for all a ∈ U}`.
    pub fn orth(&self, u: &Subspace<F>) -> Subspace<F> {
        orth_of(self.dim, &self.components, u)
    }

    /// `rad(U) = U ∩ U^⊥`.
    pub fn rad_of(&self, u: &Subspace<F>) -> Subspace<F> {
        u.intersect(&self.orth(u)).expect("same ambient")
    }

    pub fn is_totally_isotropic(&self, u: &Subspace<F>) -> bool {
        u.is_subspace_of(&self.orth(u))
    }

    pub fn is_isotropic_vector(&self, v: &[F]) -> bool {
        self.eval_coords(v, v).iter().all(Zero::is_zero)
    }

    /// The scalar trace form when `C(M)` is one-dimensional.
    pub fn scalar_form(&self) -> Option<ScalarForm<F>> {
        match self.components.as_slice() {
            [g] => Some(ScalarForm { gram: g.clone() }),
            _ => None,
        }
    }
}

impl<F: Scalar> ScalarForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<Self> {
        if !gram.is_square() || gram.transpose() != gram {
            return Err(Error::HypothesisViolated("Gram matrix must be symmetric".into()));
        }
        Ok(Self { gram })
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, a: &[F], b: &[F]) -> F {
        bilinear(&self.gram, a, b)
    }

    pub fn radical(&self) -> Subspace<F> {
        self.gram.kernel()
    }

    pub fn orth(&self, u: &Subspace<F>) -> Subspace<F> {
        orth_of(self.dim(), std::slice::from_ref(&self.gram), u)
    }

    pub fn rad_of(&self, u: &Subspace<F>) -> Subspace<F> {
        u.intersect(&self.orth(u)).expect("same ambient")
    }

    pub fn is_totally_isotropic(&self, u: &Subspace<F>) -> bool {
        u.is_subspace_of(&self.orth(u))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Gram matrix of the restriction to `u` in its canonical coordinates.
    pub fn restricted_gram(&self, u: &Subspace<F>) -> Matrix<F> {
        let b = u.basis();
        b.mul(&self.gram).mul(&b.transpose())
    }

    /// Orthogonal basis of `within` with the diagonal values `f(w, w)`.
    ///
    /// Symmetric elimination: a vector with nonzero square is split off;
    /// when every square vanishes a pair `v_i + v_j` with `f(v_i, v_j) ≠ 0`
    /// is used instead.
    pub fn diagonalize(&self, within: &Subspace<F>) -> Vec<(Vec<F>, F)> {
        let mut rest = within.basis_vectors();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let pivot = if let Some(i) = rest.iter().position(|v| !self.eval(v, v).is_zero()) {
                rest.remove(i)
            } else if let Some((i, j)) = first_nonorthogonal_pair(self, &rest) {
                let sum: Vec<F> = rest[i].iter().zip(&rest[j]).map(|(a, b)| a.clone() + b).collect();
                rest.remove(i);
                sum
            } else {
                out.extend(rest.drain(..).map(|v| (v, F::zero())));
                break;
            };
            let d = self.eval(&pivot, &pivot);
            for v in rest.iter_mut() {
                let c = self.eval(v, &pivot) / &d;
                if !c.is_zero() {
                    for (x, p) in v.iter_mut().zip(&pivot) {
                        *x = std::mem::replace(x, F::zero()) - c.clone() * p;
                    }
                }
            }
            out.push((pivot, d));
        }
        out
    }
}

fn first_nonorthogonal_pair<F: Scalar>(f: &ScalarForm<F>, vs: &[Vec<F>]) -> Option<(usize, usize)> {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !f.eval(&vs[i], &vs[j]).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// `ψ` of `a`.
pub fn psi<F: Scalar>(a: &LeibnizAlgebra<F>) -> KernelValuedForm<F> {
    KernelValuedForm::of(a)
}

/// Checks `ψ([ab], c) = ψ(a, [bc])` on basis triples; `None` means the
/// pairing is associative.
pub fn check_associative<F: Scalar>(a: &LeibnizAlgebra<F>) -> Option<Violation<F>> {
    let n = a.dim();
    let psi = KernelValuedForm::of(a);
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_bracket(i, j);
            for k in 0..n {
                let ek = unit(n, k);
                let ei = unit(n, i);
                let lhs = psi.eval_coords(ij, &ek);
                let rhs = psi.eval_coords(&ei, a.basis_bracket(j, k));
                if lhs != rhs {
                    return Some(Violation {
                        law: Law::Associativity,
                        a: ei,
                        b: unit(n, j),
                        c: ek,
                    });
                }
            }
        }
    }
    None
}

pub fn form_radical<F: Scalar>(a: &LeibnizAlgebra<F>) -> Subspace<F> {
    KernelValuedForm::of(a).radical()
}

pub fn orth_complement<F: Scalar>(a: &LeibnizAlgebra<F>, u: &Subspace<F>) -> Subspace<F> {
    KernelValuedForm::of(a).orth(u)
}

pub fn rad_of<F: Scalar>(a: &LeibnizAlgebra<F>, u: &Subspace<F>) -> Subspace<F> {
    KernelValuedForm::of(a).rad_of(u)
}

pub fn is_totally_isotropic<F: Scalar>(a: &LeibnizAlgebra<F>, u: &Subspace<F>) -> bool {
    KernelValuedForm::of(a).is_totally_isotropic(u)
}

/// `dim C(M)`.
pub fn rank<F: Scalar>(a: &LeibnizAlgebra<F>) -> usize {
    a.rank()
}

/// The scalar form of a rank-one algebra.
pub fn trace_form<F: Scalar>(a: &LeibnizAlgebra<F>) -> Result<ScalarForm<F>> {
    let psi = KernelValuedForm::of(a);
    psi.scalar_form().ok_or(Error::WrongRank {
        expected: 1,
        found: psi.kernel().dim(),
    })
}
