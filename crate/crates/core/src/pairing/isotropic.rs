

use super::{KernelValuedForm, ScalarForm};
use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::scalar::Scalar;

/// Outcome of an anisotropy test on a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Anisotropy<F> {
    /// A nonzero vector with `f(v, v) = 0`.
    Isotropic(Vec<F>),
    /// No nonzero isotropic vector exists over the base field.
    Anisotropic,
    /// Neither found an isotropic vector nor certified its absence.
    Undetermined,
}

/// Decomposition `space = rad ⊕ (⊕ hyperbolic planes) ⊕ remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicSplitting<F> {
    pub radical: Subspace<F>,
    /// Pairs `(v, w)` with `f(v, v) = f(w, w) = 0` and `f(v, w) = 1`,
    /// mutually orthogonal across pairs.
    pub pairs: Vec<(Vec<F>, Vec<F>)>,
    /// Orthogonal to every pair; no isotropic vector was found in it.
    pub remainder: Subspace<F>,
    pub remainder_anisotropic: bool,
}

impl<F: Scalar> HyperbolicSplitting<F> {
    /// `rad + span(v_i)`.
    pub fn first_lagrangian(&self) -> Subspace<F> {
        self.extend_radical(self.pairs.iter().map(|(v, _)| v))
    }

    /// `rad + span(w_i)`.
    pub fn second_lagrangian(&self) -> Subspace<F> {
        self.extend_radical(self.pairs.iter().map(|(_, w)| w))
    }

    fn extend_radical<'a>(&self, vs: impl Iterator<Item = &'a Vec<F>>) -> Subspace<F> {
        let n = self.radical.ambient_dim();
        self.radical
            .sum(&Subspace::span(n, vs))
            .expect("same ambient")
    }

    pub fn witt_index(&self) -> usize {
        self.pairs.len()
    }

    /// The split-off planes exhaust the form up to an anisotropic remainder,
    /// so `first_lagrangian` is maximal totally isotropic.
    pub fn is_certified(&self) -> bool {
        self.remainder_anisotropic
    }
}

/// Searches `within` for a nonzero isotropic vector.
///
/// The lowest-index basis vector with `f(v, v) = 0` is preferred; otherwise
/// the restriction is diagonalized and a zero diagonal entry, or a pair with
/// `-d_j / d_i` a rational square `s²` (giving `s w_i + w_j`), is used.
pub fn find_isotropic_vector<F: Scalar>(f: &ScalarForm<F>, within: &Subspace<F>) -> Result<Vec<F>> {
    let basis = within.basis_vectors();
    if let Some(v) = basis.into_iter().find(|v| f.eval(v, v).is_zero()) {
        return Ok(v);
    }
    let diag = f.diagonalize(within);
    if let Some((v, _)) = diag.iter().find(|(_, d)| d.is_zero()) {
        return Ok(v.clone());
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let ratio = -(diag[j].1.clone() / &diag[i].1);
            if let Some(s) = ratio.sqrt_exact() {
                let v = diag[i]
                    .0
                    .iter()
                    .zip(&diag[j].0)
                    .map(|(a, b)| s.clone() * a + b)
                    .collect();
                return Ok(v);
            }
        }
    }
    Err(Error::NotFoundOverField)
}

/// Exact for `dim within ≤ 2`; above that only an isotropic vector is
/// conclusive.
pub fn certify_anisotropic<F: Scalar>(f: &ScalarForm<F>, within: &Subspace<F>) -> Anisotropy<F> {
    match find_isotropic_vector(f, within) {
        Ok(v) => Anisotropy::Isotropic(v),
        Err(_) if within.dim() <= 2 => Anisotropy::Anisotropic,
        Err(_) => Anisotropy::Undetermined,
    }
}

impl<F: Scalar> ScalarForm<F> {
    /// Greedy hyperbolic splitting of `f` restricted to `space`.
    ///
    /// The radical is `space ∩ space^⊥`; on a complement of it isotropic
    /// vectors are found one at a time, each paired with a partner and the
    /// resulting plane split off.
    pub fn hyperbolic_splitting(&self, space: &Subspace<F>) -> HyperbolicSplitting<F> {
        let radical = self.rad_of(space);
        let mut rest = radical.complement_in(space).expect("radical lies in space");
        let mut pairs = Vec::new();
        while let Ok(v) = find_isotropic_vector(self, &rest) {
            let partner = rest
                .basis_vectors()
                .into_iter()
                .find(|b| !self.eval(&v, b).is_zero())
                .expect("the form is nondegenerate off the radical");
            let scale = F::one() / &self.eval(&v, &partner);
            let mut w: Vec<F> = partner.iter().map(|x| x.clone() * &scale).collect();
            let half = self.eval(&w, &w) / F::from_i64(2);
            for (x, y) in w.iter_mut().zip(&v) {
                *x = std::mem::replace(x, F::zero()) - half.clone() * y;
            }
            let plane = Subspace::span(space.ambient_dim(), [&v, &w]);
            rest = rest.intersect(&self.orth(&plane)).expect("same ambient");
            pairs.push((v, w));
        }
        let remainder_anisotropic = rest.dim() <= 2;
        HyperbolicSplitting {
            radical,
            pairs,
            remainder: rest,
            remainder_anisotropic,
        }
    }

    /// Certifies that a totally isotropic `t ⊆ within` is maximal there:
    /// `t ⊇ rad(within)` and `(t^⊥ ∩ within) / t` is anisotropic.
    pub fn maximality(&self, t: &Subspace<F>, within: &Subspace<F>) -> Anisotropy<F> {
        if !self.is_totally_isotropic(t) || !t.is_subspace_of(within) {
            return Anisotropy::Undetermined;
        }
        let perp = self.orth(t).intersect(within).expect("same ambient");
        let quotient = t.complement_in(&perp).expect("t is isotropic, so t ⊆ t^⊥");
        certify_anisotropic(self, &quotient)
    }
}

fn rank_one_form<F: Scalar>(a: &LeibnizAlgebra<F>) -> Result<ScalarForm<F>> {
    let psi = KernelValuedForm::of(a);
    psi.scalar_form().ok_or(Error::WrongRank {
        expected: 1,
        found: psi.kernel().dim(),
    })
}

/// A maximal totally isotropic subspace of a rank-one algebra, of dimension
/// `dim R + ⌊dim(M/R)/2⌋` when the form splits over the base field.
pub fn maximal_totally_isotropic<F: Scalar>(a: &LeibnizAlgebra<F>) -> Result<Subspace<F>> {
    let f = rank_one_form(a)?;
    let split = f.hyperbolic_splitting(&Subspace::full(a.dim()));
    if !split.is_certified() {
        return Err(Error::NotFoundOverField);
    }
    Ok(split.first_lagrangian())
}

/// Maximal totally isotropic `L1`, `L2` with `L1 ∩ L2 = R` and `L1 + L2` of
/// codimension at most one.
pub fn pair_of_transverse_lagrangians<F: Scalar>(
    a: &LeibnizAlgebra<F>,
) -> Result<(Subspace<F>, Subspace<F>)> {
    let f = rank_one_form(a)?;
    let split = f.hyperbolic_splitting(&Subspace::full(a.dim()));
    if split.remainder.dim() > 1 {
        return Err(Error::NotFoundOverField);
    }
    Ok((split.first_lagrangian(), split.second_lagrangian()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::linalg::Matrix;
    use crate::test_support::*;
    use crate::Q;

    fn form(rows: &[&[i64]]) -> ScalarForm<Q> {
        ScalarForm::new(Matrix::from_i64(rows)).unwrap()
    }

    #[test]
    fn radical_vector_found_first() {
        let f = form(&[&[1, 0], &[0, 0]]);
        assert_eq!(find_isotropic_vector(&f, &Subspace::full(2)).unwrap(), qv(&[0, 1]));
    }

    #[test]
    fn hyperbolic_plane() {
        let f = form(&[&[0, 1], &[1, 0]]);
        assert_eq!(find_isotropic_vector(&f, &Subspace::full(2)).unwrap(), qv(&[1, 0]));
    }

    #[test]
    fn sum_of_squares_is_anisotropic() {
        let f = form(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            find_isotropic_vector(&f, &Subspace::full(2)),
            Err(Error::NotFoundOverField)
        );
        assert_eq!(certify_anisotropic(&f, &Subspace::full(2)), Anisotropy::Anisotropic);
    }

    #[test]
    fn square_ratio_gives_isotropic_vector() {
        // x² - 4y² vanishes on (2, 1).
        let f = form(&[&[1, 0], &[0, -4]]);
        let v = find_isotropic_vector(&f, &Subspace::full(2)).unwrap();
        assert!(f.eval(&v, &v).is_zero());
        assert!(v.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn splitting_of_split_form() {
        // diag(1, -1, 1, -1, 3): two hyperbolic planes and an anisotropic line.
        let f = form(&[
            &[1, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, -1, 0],
            &[0, 0, 0, 0, 3],
        ]);
        let s = f.hyperbolic_splitting(&Subspace::full(5));
        assert_eq!(s.witt_index(), 2);
        assert_eq!(s.remainder.dim(), 1);
        assert!(s.is_certified());
        for (v, w) in &s.pairs {
            assert!(f.eval(v, v).is_zero());
            assert!(f.eval(w, w).is_zero());
            assert_eq!(f.eval(v, w), Q::one());
        }
        let l1 = s.first_lagrangian();
        let l2 = s.second_lagrangian();
        assert!(f.is_totally_isotropic(&l1) && f.is_totally_isotropic(&l2));
        assert!(l1.intersect(&l2).unwrap().is_zero());
        assert_eq!(f.maximality(&l1, &Subspace::full(5)), Anisotropy::Anisotropic);
    }

    #[test]
    fn maximal_isotropic_of_two_dim_is_radical() {
        let t = two_dim();
        assert_eq!(maximal_totally_isotropic(&t).unwrap(), span(2, &[&[0, 1]]));
        let (l1, l2) = pair_of_transverse_lagrangians(&t).unwrap();
        assert_eq!(l1, l2);
    }

    #[test]
    fn lie_algebra_has_wrong_rank() {
        assert!(matches!(
            maximal_totally_isotropic(&sl2()),
            Err(Error::WrongRank { expected: 1, found: 0 })
        ));
    }
}
