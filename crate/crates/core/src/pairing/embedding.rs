use crate::algebra::{AlgebraHom, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// `M → ⊥_i M/N_i`, each `N_i` a coordinate hyperplane of `C(M)`.
#[derive(Clone, Debug)]
pub struct RankOneEmbedding<F> {
    /// The rank-one quotients `M/N_i` with their projections.
    pub factors: Vec<(LeibnizAlgebra<F>, AlgebraHom<F>)>,
    pub embedding: AlgebraHom<F>,
}

/// Embeds a left central algebra of rank `r ≥ 1` into an orthogonal sum of
/// `r` rank-one algebras.
pub fn rank_one_projections<F: Scalar>(a: &LeibnizAlgebra<F>) -> Result<RankOneEmbedding<F>> {
    if a.central_violation().is_some() || !a.is_left_leibniz() {
        return Err(Error::NotLeftCentral);
    }
    let kernel = a.leibniz_kernel();
    let r = kernel.dim();
    if r == 0 {
        return Err(Error::RankZero);
    }
    let basis = kernel.basis_vectors();
    let mut factors = Vec::with_capacity(r);
    for i in 0..r {
        let hyperplane = Subspace::span(
            a.dim(),
            basis.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v),
        );
        factors.push(a.quotient(&hyperplane)?);
    }
    let mut factors_iter = factors.iter();
    let first = factors_iter.next().expect("r ≥ 1").0.clone();
    let sum = factors_iter.fold(first, |acc, (q, _)| acc.orthogonal_sum(q));
    let blocks: Vec<Matrix<F>> = factors.iter().map(|(_, h)| h.matrix().clone()).collect();
    let map = Matrix::vstack(a.dim(), &blocks);
    let embedding = AlgebraHom::new(a.clone(), sum, map)?;
    if !embedding.is_injective() {
        return Err(Error::HypothesisViolated(
            "coordinate hyperplanes of C(M) meet nontrivially".into(),
        ));
    }
    Ok(RankOneEmbedding { factors, embedding })
}
