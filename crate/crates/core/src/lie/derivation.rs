
use crate::algebra::{AlgebraHom, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Basis of `Der(A)`: all `f` with `f[xy] = [f(x) y] + [x f(y)]`.
pub fn derivations<F: Scalar>(a: &LeibnizAlgebra<F>) -> Vec<Matrix<F>> {
    let n = a.dim();
    let idx = |r: usize, s: usize| r * n + s;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![F::zero(); n * n];
                // f([e_i e_j])_k
                for (l, c) in a.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[idx(k, l)] = row[idx(k, l)].clone() + c;
                    }
                }
                for l in 0..n {
                    let c = a.structure_constant(l, j, k);
                    if !c.is_zero() {
                        row[idx(l, i)] = row[idx(l, i)].clone() - c;
                    }
                    let c = a.structure_constant(i, l, k);
                    if !c.is_zero() {
                        row[idx(l, j)] = row[idx(l, j)].clone() - c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(n * n, rows)
        .expect("rows have length n²")
        .kernel()
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |r, s| v[idx(r, s)].clone()))
        .collect()
}

pub fn is_derivation<F: Scalar>(a: &LeibnizAlgebra<F>, f: &Matrix<F>) -> bool {
    let n = a.dim();
    if f.rows() != n || f.cols() != n {
        return false;
    }
    let images: Vec<Vec<F>> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(a.basis_bracket(i, j));
            let mut rhs = a.br(&images[i], &crate::linalg::unit(n, j));
            for (x, y) in rhs.iter_mut().zip(a.br_basis_left(i, &images[j])) {
                *x = std::mem::replace(x, F::zero()) + y;
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `Σ_{i<n} f^i / i!` for nilpotent `f`.
pub fn exp_nilpotent<F: Scalar>(f: &Matrix<F>) -> Result<Matrix<F>> {
    if !f.is_square() {
        return Err(Error::NotNilpotent);
    }
    let n = f.rows();
    let mut out = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    let mut factorial = F::one();
    for i in 1..=n {
        power = power.mul(f);
        if power.is_zero() {
            return Ok(out);
        }
        factorial = factorial * F::from_i64(i as i64);
        out = out.add(&power.scale(&(F::one() / &factorial)));
    }
    Err(Error::NotNilpotent)
}

/// Whether `m` is an invertible bracket-preserving map of `a` to itself.
pub fn is_automorphism<F: Scalar>(a: &LeibnizAlgebra<F>, m: &Matrix<F>) -> bool {
    AlgebraHom::new(a.clone(), a.clone(), m.clone()).is_ok_and(|h| h.is_isomorphism())
}

/// Checks `α(T) ⊆ S` for an automorphism `α`.
pub fn verify_conjugacy<F: Scalar>(
    a: &LeibnizAlgebra<F>,
    alpha: &Matrix<F>,
    t: &Subspace<F>,
    s: &Subspace<F>,
) -> Result<bool> {
    if !is_automorphism(a, alpha) {
        return Err(Error::NotAutomorphism);
    }
    Ok(t.image(alpha).is_subspace_of(s))
}

/// `exp(t ad x)` applied before the derivation step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreConjugator<F> {
    pub x: Vec<F>,
    pub automorphism: Matrix<F>,
}

/// `exp(f) ∘ pre` maps `S1` onto `S2`, with `f` a square-zero derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugator<F> {
    pub pre: Option<PreConjugator<F>>,
    pub derivation: Matrix<F>,
    pub automorphism: Matrix<F>,
}

const SEARCH_SCALES: [i64; 4] = [1, -1, 2, -2];

/// Derivation `f` with `exp(f)(S1) = S2` when `[B, N] = 0`.
///
/// If `S1 + N ≠ S2 + N`, first looks for `exp(t ad x)`, `x` in a basis of
/// `[M, B]` and `t ∈ {±1, ±2}`, matching them modulo `N`. Then `c: S1 → N`
/// is read off from `S2 = {x + c(x)}` and `f` is `c` on `S1`, zero on `B`.
pub fn malcev_conjugator<F: Scalar>(
    a: &LeibnizAlgebra<F>,
    s1: &Subspace<F>,
    s2: &Subspace<F>,
) -> Result<Conjugator<F>> {
    if !a.is_left_leibniz() {
        return Err(Error::NotLeftLeibniz);
    }
    let n = a.dim();
    let kernel = a.leibniz_kernel();
    let radical = a.solvable_radical();
    if !a.bracket_spaces(&radical, &kernel).is_zero() {
        return Err(Error::HypothesisViolated("[B, N] ≠ 0".into()));
    }
    for s in [s1, s2] {
        let ok = a.is_closed(s)
            && s.dim() + radical.dim() == n
            && s.intersect(&radical)?.is_zero();
        if !ok {
            return Err(Error::HypothesisViolated("not a Levi subalgebra".into()));
        }
    }
    let target = s2.sum(&kernel)?;
    let mut pre = None;
    let mut start = s1.clone();
    if s1.sum(&kernel)? != target {
        let found = search_pre_conjugator(a, s1, &kernel, &radical, &target)?;
        start = s1.image(&found.automorphism);
        pre = Some(found);
    }
    // c(x) = y - x with y ∈ S2 ∩ (x + N).
    let stacked = Matrix::vstack(n, &[s2.basis().clone(), kernel.basis().clone()]).transpose();
    let k2 = s2.dim();
    let mut images = Vec::new();
    let mut domain = radical.basis_vectors();
    for x in start.basis_vectors() {
        let coef = stacked.solve_vec(&x)?;
        let y = s2.from_coords(&coef[..k2]);
        images.push(y.iter().zip(&x).map(|(p, q)| p.clone() - q).collect::<Vec<F>>());
        domain.push(x);
    }
    let mut cols = vec![vec![F::zero(); n]; radical.dim()];
    cols.extend(images);
    let p = Matrix::from_columns(n, &domain)?;
    let f = Matrix::from_columns(n, &cols)?
        .mul(&p.inverse().expect("B ⊕ S1 = M"));
    let ok = is_derivation(a, &f) && f.mul(&f).is_zero();
    let exp_f = exp_nilpotent(&f)?;
    if !ok || start.image(&exp_f) != *s2 {
        return Err(Error::HypothesisViolated("constructed map is not a conjugating derivation".into()));
    }
    let automorphism = match &pre {
        Some(p) => exp_f.mul(&p.automorphism),
        None => exp_f.clone(),
    };
    Ok(Conjugator {
        pre,
        derivation: f,
        automorphism,
    })
}

fn search_pre_conjugator<F: Scalar>(
    a: &LeibnizAlgebra<F>,
    s1: &Subspace<F>,
    kernel: &Subspace<F>,
    radical: &Subspace<F>,
    target: &Subspace<F>,
) -> Result<PreConjugator<F>> {
    let mb = a.bracket_spaces(&Subspace::full(a.dim()), radical);
    for x in mb.basis_vectors() {
        for t in SEARCH_SCALES {
            let tx: Vec<F> = x.iter().map(|v| v.clone() * F::from_i64(t)).collect();
            let Ok(alpha) = exp_nilpotent(&a.left_mult(&tx)) else {
                continue;
            };
            if s1.image(&alpha).sum(kernel)? == *target {
                return Ok(PreConjugator {
                    x: tx,
                    automorphism: alpha,
                });
            }
        }
    }
    Err(Error::HypothesisViolated(
        "Levi subalgebras differ modulo C(M) and the bounded search found no conjugator".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{adjoint_module, adjoint_hemisemidirect, sl};
    use crate::lie::levi_subalgebras_hemi;
    use crate::test_support::*;
    use crate::Q;

    #[test]
    fn inner_derivations() {
        let m = adjoint_hemisemidirect(&sl::<Q>(2)).unwrap();
        for i in 0..m.dim() {
            assert!(is_derivation(&m, &m.ad_basis(i)));
        }
    }

    #[test]
    fn abelian_derivations_are_gl() {
        assert_eq!(derivations(&LeibnizAlgebra::<Q>::abelian(2)).len(), 4);
        assert_eq!(derivations(&sl2()).len(), 3);
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_nilpotent(&Matrix::<Q>::zeros(3, 3)).unwrap(), Matrix::identity(3));
        let f = Matrix::<Q>::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(exp_nilpotent(&f).unwrap(), Matrix::identity(2).add(&f));
        assert_eq!(
            exp_nilpotent(&Matrix::<Q>::identity(2)).unwrap_err(),
            Error::NotNilpotent
        );
        let s = sl2();
        let alpha = exp_nilpotent(&s.ad_basis(0)).unwrap();
        assert!(is_automorphism(&s, &alpha));
        let inv = exp_nilpotent(&s.ad_basis(0).scale(&Q::from_integer((-1).into()))).unwrap();
        assert_eq!(alpha.mul(&inv), Matrix::identity(3));
    }

    #[test]
    fn conjugator_between_family_members() {
        let s = sl2();
        let fam = levi_subalgebras_hemi(&s, &adjoint_module(&s).unwrap()).unwrap();
        let s1 = fam.member(&fam.parameter(&qv(&[0]))).unwrap();
        let s2 = fam.member(&fam.parameter(&qv(&[3]))).unwrap();
        let c = malcev_conjugator(&fam.algebra, &s1, &s2).unwrap();
        assert!(c.pre.is_none());
        assert!(is_derivation(&fam.algebra, &c.derivation));
        assert!(c.derivation.mul(&c.derivation).is_zero());
        assert_eq!(s1.image(&c.automorphism), s2);
        let same = malcev_conjugator(&fam.algebra, &s1, &s1).unwrap();
        assert!(same.derivation.is_zero());
    }

    #[test]
    fn conjugacy_check() {
        let s = sl2();
        let full = Subspace::full(3);
        assert!(verify_conjugacy(&s, &Matrix::identity(3), &full, &full).unwrap());
        assert_eq!(
            verify_conjugacy(&s, &Matrix::zeros(3, 3), &full, &full).unwrap_err(),
            Error::NotAutomorphism
        );
    }
}
