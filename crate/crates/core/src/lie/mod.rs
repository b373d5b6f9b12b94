//! Lie-theoretic tools: modules, the Killing form, intertwiners, Levi
//! factors, derivations and conjugacy of Levi subalgebras.

mod derivation;
mod levi;

pub use derivation::{
    derivations, exp_nilpotent, is_automorphism, is_derivation, malcev_conjugator,
    verify_conjugacy, Conjugator, PreConjugator,
};
pub use levi::{levi_decomposition, levi_subalgebras_hemi, levi_subalgebra_of_lie, LeviDecomposition, LeviFamily};


use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::pairing::ScalarForm;
use crate::scalar::Scalar;

/// A Lie algebra acting linearly on `F^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction<F> {
    algebra: LeibnizAlgebra<F>,
    dim: usize,
    rho: Vec<Matrix<F>>,
}

impl<F: Scalar> ModuleAction<F> {
    /// `rho[i]` is the action of the `i`-th basis vector; the homomorphism
    /// property is checked on every basis pair.
    pub fn new(algebra: LeibnizAlgebra<F>, dim: usize, rho: Vec<Matrix<F>>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: rho.len(),
            });
        }
        if let Some(m) = rho.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.rows().max(m.cols()),
            });
        }
        let out = Self { algebra, dim, rho };
        for i in 0..out.algebra.dim() {
            for j in 0..out.algebra.dim() {
                let lhs = out.rho_of(out.algebra.basis_bracket(i, j));
                if lhs != out.rho[i].commutator(&out.rho[j]) {
                    return Err(Error::ActionInvalid(i, j));
                }
            }
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &LeibnizAlgebra<F> {
        &self.algebra
    }

    /// Dimension of the carrier space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self, i: usize) -> &Matrix<F> {
        &self.rho[i]
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.rho
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn rho_of(&self, x: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (xi, m) in x.iter().zip(&self.rho) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi));
            }
        }
        out
    }

    /// `x.v`.
    pub fn act(&self, x: &[F], v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (xi, m) in x.iter().zip(&self.rho) {
            if xi.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(m.mul_vec(v)) {
                *o = std::mem::replace(o, F::zero()) + xi.clone() * t;
            }
        }
        out
    }

    pub fn is_invariant(&self, w: &Subspace<F>) -> bool {
        self.rho
            .iter()
            .all(|m| w.image(m).is_subspace_of(w))
    }

    pub fn is_trivial(&self) -> bool {
        self.rho.iter().all(Matrix::is_zero)
    }
}

/// `κ(x, y) = tr(ad x ad y)`.
pub fn killing_form<F: Scalar>(l: &LeibnizAlgebra<F>) -> Result<ScalarForm<F>> {
    if !l.classify().lie {
        return Err(Error::NotLie);
    }
    ScalarForm::new(l.killing_matrix())
}

/// Cartan's criterion: a Lie algebra is semisimple iff its Killing form is
/// nondegenerate.
pub fn is_semisimple<F: Scalar>(l: &LeibnizAlgebra<F>) -> bool {
    killing_form(l).is_ok_and(|k| k.is_nondegenerate())
}

fn same_algebra<F: Scalar>(v: &ModuleAction<F>, w: &ModuleAction<F>) -> Result<()> {
    if v.algebra.dim() != w.algebra.dim() || v.algebra.tensor() != w.algebra.tensor() {
        return Err(Error::HypothesisViolated("modules over different algebras".into()));
    }
    Ok(())
}

/// Basis of `Hom_L(V, W)`: matrices `c` (`dim W x dim V`) with
/// `c ρ_V(x) = ρ_W(x) c` for every basis vector `x`.
pub fn hom_modules<F: Scalar>(v: &ModuleAction<F>, w: &ModuleAction<F>) -> Result<Vec<Matrix<F>>> {
    same_algebra(v, w)?;
    let (dv, dw) = (v.dim, w.dim);
    let idx = |r: usize, s: usize| r * dv + s;
    let mut rows = Vec::new();
    for (rv, rw) in v.rho.iter().zip(&w.rho) {
        for r in 0..dw {
            for t in 0..dv {
                let mut row = vec![F::zero(); dw * dv];
                for s in 0..dv {
                    if !rv[(s, t)].is_zero() {
                        row[idx(r, s)] = row[idx(r, s)].clone() + &rv[(s, t)];
                    }
                }
                for u in 0..dw {
                    if !rw[(r, u)].is_zero() {
                        row[idx(u, t)] = row[idx(u, t)].clone() - &rw[(r, u)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(dw * dv, rows)?;
    Ok(system
        .kernel()
        .basis_vectors()
        .into_iter()
        .map(|c| Matrix::from_fn(dw, dv, |r, s| c[idx(r, s)].clone()))
        .collect())
}

/// An invariant complement of the submodule `w`.
///
/// Solves for `Q` (`dim W x dim V`) with `Q|_W = id` (in the coordinates of
/// `w`) and `Q ρ(x) = A_x Q`, where `A_x` is the action on `w`; then
/// `ker Q` is invariant and complements `w`.
pub fn equivariant_complement<F: Scalar>(v: &ModuleAction<F>, w: &Subspace<F>) -> Result<Subspace<F>> {
    if w.ambient_dim() != v.dim {
        return Err(Error::DimensionMismatch {
            expected: v.dim,
            found: w.ambient_dim(),
        });
    }
    if !v.is_invariant(w) {
        return Err(Error::NotInvariant);
    }
    let (k, n) = (w.dim(), v.dim);
    if k == 0 {
        return Ok(Subspace::full(n));
    }
    let idx = |a: usize, s: usize| a * n + s;
    let b = w.basis();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..k {
        for j in 0..k {
            let mut row = vec![F::zero(); k * n];
            for s in 0..n {
                row[idx(a, s)] = b[(j, s)].clone();
            }
            rows.push(row);
            rhs.push(if a == j { F::one() } else { F::zero() });
        }
    }
    for rho in &v.rho {
        let act = w.restrict_map(rho, w)?;
        for a in 0..k {
            for t in 0..n {
                let mut row = vec![F::zero(); k * n];
                for s in 0..n {
                    if !rho[(s, t)].is_zero() {
                        row[idx(a, s)] = row[idx(a, s)].clone() + &rho[(s, t)];
                    }
                }
                for c in 0..k {
                    if !act[(a, c)].is_zero() {
                        row[idx(c, t)] = row[idx(c, t)].clone() - &act[(a, c)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                    rhs.push(F::zero());
                }
            }
        }
    }
    let system = Matrix::from_rows(k * n, rows)?;
    let q = system
        .solve_vec(&rhs)
        .map_err(|_| Error::NoEquivariantProjection)?;
    Ok(Matrix::from_fn(k, n, |a, s| q[idx(a, s)].clone()).kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::constructions::{adjoint_module, natural_module, sl, symmetric_square, trivial_module};
    use crate::test_support::*;
    use crate::Q;

    #[test]
    fn killing_examples() {
        let ab = LeibnizAlgebra::<Q>::abelian(2);
        assert!(killing_form(&ab).unwrap().gram().is_zero());
        assert!(!is_semisimple(&ab));
        let k = killing_form(&sl2()).unwrap();
        assert!(!k.gram().determinant().is_zero());
        assert!(is_semisimple(&sl2()));
        let plus_line = sl2().orthogonal_sum(&LeibnizAlgebra::abelian(1));
        assert!(!is_semisimple(&plus_line));
        assert_eq!(killing_form(&two_dim()).unwrap_err(), Error::NotLie);
    }

    #[test]
    fn schur_for_adjoint() {
        let ad = adjoint_module(&sl2()).unwrap();
        let homs = hom_modules(&ad, &ad).unwrap();
        assert_eq!(homs.len(), 1);
        for c in &homs {
            for r in ad.matrices() {
                assert_eq!(c.mul(r), r.mul(c));
            }
        }
    }

    #[test]
    fn symmetric_square_of_natural_is_adjoint() {
        let s2 = symmetric_square(&natural_module::<Q>(2)).unwrap();
        let ad = adjoint_module(&sl::<Q>(2)).unwrap();
        let homs = hom_modules(&ad, &s2).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].rank(), 3);
    }

    #[test]
    fn complement_of_full_is_zero() {
        let ad = adjoint_module(&sl2()).unwrap();
        assert!(equivariant_complement(&ad, &Subspace::full(3)).unwrap().is_zero());
    }

    #[test]
    fn complement_of_block_diagonal() {
        // natural ⊕ trivial line for sl2: the complement of the natural
        // block is the trivial line.
        let nat = natural_module::<Q>(2);
        let triv = trivial_module(&sl::<Q>(2), 1);
        let rho: Vec<_> = (0..3)
            .map(|i| {
                Matrix::from_fn(3, 3, |r, c| {
                    if r < 2 && c < 2 {
                        nat.rho(i)[(r, c)].clone()
                    } else {
                        triv.rho(i)[(0, 0)].clone()
                    }
                })
            })
            .collect();
        let v = ModuleAction::new(sl::<Q>(2), 3, rho).unwrap();
        let w = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(equivariant_complement(&v, &w).unwrap(), span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn bad_action_rejected() {
        // Sending e and f to the identity violates [e f] = h.
        let rho = vec![Matrix::<Q>::identity(2), Matrix::zeros(2, 2), Matrix::identity(2)];
        assert!(matches!(
            ModuleAction::new(sl::<Q>(2), 2, rho),
            Err(Error::ActionInvalid(..))
        ));
    }

    #[test]
    fn non_invariant_subspace_rejected() {
        let nat = natural_module::<Q>(2);
        assert_eq!(
            equivariant_complement(&nat, &span(2, &[&[1, 0]])).unwrap_err(),
            Error::NotInvariant
        );
    }
}
