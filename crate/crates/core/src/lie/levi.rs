
use super::{equivariant_complement, hom_modules, is_semisimple, ModuleAction};
use crate::algebra::{lie_radical, LeibnizAlgebra};
use crate::constructions::{adjoint_module, hemisemidirect};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// `M = B ⊕ S` with `B` the solvable radical and `S` a Levi subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition<F> {
    pub radical: Subspace<F>,
    pub levi: Subspace<F>,
}

/// Levi subalgebra of a Lie algebra, by induction on the derived length of
/// its radical.
pub fn levi_subalgebra_of_lie<F: Scalar>(l: &LeibnizAlgebra<F>) -> Result<Subspace<F>> {
    let n = l.dim();
    let rad = lie_radical(l);
    if rad.is_zero() {
        return Ok(Subspace::full(n));
    }
    if rad.is_full() {
        return Ok(Subspace::zero(n));
    }
    let rad2 = l.derived(&rad);
    if rad2.is_zero() {
        return abelian_radical_case(l, &rad);
    }
    // Levi factor of L/[R, R] pulled back to P ⊇ [R, R]; a Levi factor of P
    // is one of L.
    let q = l.quotient_map(&rad2)?;
    let top = levi_subalgebra_of_lie(&q.algebra)?;
    let p = q.preimage(&top);
    let inner = levi_subalgebra_of_lie(&l.restrict(&p)?)?;
    Ok(Subspace::span(
        n,
        inner.basis().row_vectors().map(|c| p.from_coords(c)),
    ))
}

/// Solves `ρ_ab + [e_a r_b] - [e_b r_a] = Σ_c γ_abc r_c` for `r_a` in the
/// abelian radical, where `e_a` lift a basis of `L/R` with structure
/// constants `γ` and `[e_a e_b] = Σ γ_abc e_c + ρ_ab`.
fn abelian_radical_case<F: Scalar>(l: &LeibnizAlgebra<F>, rad: &Subspace<F>) -> Result<Subspace<F>> {
    let n = l.dim();
    let q = l.quotient_map(rad)?;
    let m = q.algebra.dim();
    let d = rad.dim();
    let lifts: Vec<Vec<F>> = (0..m).map(|a| crate::linalg::unit(n, q.section[a])).collect();
    let rbasis = rad.basis_vectors();
    let idx = |c: usize, t: usize| c * d + t;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let bracket = l.br(&lifts[a], &lifts[b]);
            let gamma = q.algebra.basis_bracket(a, b);
            let mut rho_ab = bracket;
            for (c, g) in gamma.iter().enumerate() {
                if !g.is_zero() {
                    for (x, y) in rho_ab.iter_mut().zip(&lifts[c]) {
                        *x = std::mem::replace(x, F::zero()) - g.clone() * y;
                    }
                }
            }
            let ea_r: Vec<Vec<F>> = rbasis.iter().map(|r| l.br(&lifts[a], r)).collect();
            let eb_r: Vec<Vec<F>> = rbasis.iter().map(|r| l.br(&lifts[b], r)).collect();
            for k in 0..n {
                let mut row = vec![F::zero(); m * d];
                for t in 0..d {
                    row[idx(b, t)] = row[idx(b, t)].clone() + &ea_r[t][k];
                    row[idx(a, t)] = row[idx(a, t)].clone() - &eb_r[t][k];
                    for (c, g) in gamma.iter().enumerate() {
                        if !g.is_zero() {
                            row[idx(c, t)] = row[idx(c, t)].clone() - g.clone() * &rbasis[t][k];
                        }
                    }
                }
                rows.push(row);
                rhs.push(-rho_ab[k].clone());
            }
        }
    }
    let sol = Matrix::from_rows(m * d, rows)?
        .solve_vec(&rhs)
        .map_err(|_| Error::HypothesisViolated("Levi lifting system is unsolvable".into()))?;
    let gens = (0..m).map(|a| {
        let mut v = lifts[a].clone();
        for (t, r) in rbasis.iter().enumerate() {
            let y = &sol[idx(a, t)];
            if !y.is_zero() {
                for (x, rk) in v.iter_mut().zip(r) {
                    *x = std::mem::replace(x, F::zero()) + y.clone() * rk;
                }
            }
        }
        v
    });
    Ok(Subspace::span(n, gens))
}

/// Levi decomposition of a left Leibniz algebra.
///
/// A Levi factor `T/N` of the Lie algebra `M/N`, `N = C(M)`, is lifted to
/// `T ⊇ N`; `T` is a module for `T/N` under left multiplication and an
/// invariant complement of `N` in it is a Levi subalgebra of `M`.
pub fn levi_decomposition<F: Scalar>(a: &LeibnizAlgebra<F>) -> Result<LeviDecomposition<F>> {
    if !a.is_left_leibniz() {
        return Err(Error::NotLeftLeibniz);
    }
    let n = a.dim();
    let kernel = a.leibniz_kernel();
    let q = a.quotient_map(&kernel)?;
    let top = levi_subalgebra_of_lie(&q.algebra)?;
    let t = q.preimage(&top);
    let levi = if kernel.is_zero() {
        t
    } else {
        let acting = q.algebra.restrict(&top)?;
        let rho = top
            .basis()
            .row_vectors()
            .map(|s| t.restrict_map(&a.left_mult(&q.lift(s)), &t))
            .collect::<Result<Vec<_>>>()?;
        let module = ModuleAction::new(acting, t.dim(), rho)?;
        let n_in_t = Subspace::span(
            t.dim(),
            kernel
                .basis()
                .row_vectors()
                .map(|v| t.coords(v).expect("N ⊆ T")),
        );
        let c = equivariant_complement(&module, &n_in_t)?;
        Subspace::span(n, c.basis().row_vectors().map(|v| t.from_coords(v)))
    };
    let radical = a.solvable_radical();
    let ok = a.is_closed(&levi)
        && levi.dim() + radical.dim() == n
        && levi.intersect(&radical)?.is_zero();
    if !ok {
        return Err(Error::HypothesisViolated("Levi decomposition postconditions failed".into()));
    }
    Ok(LeviDecomposition { radical, levi })
}

/// Levi subalgebras `{(x, c(x))}` of the hemisemidirect product `S ⋉ N`,
/// parametrized by `c ∈ Hom_S(S, N)`.
#[derive(Clone, Debug)]
pub struct LeviFamily<F> {
    pub algebra: LeibnizAlgebra<F>,
    pub s_dim: usize,
    /// Basis of `Hom_S(S, N)`.
    pub parameters: Vec<Matrix<F>>,
}

impl<F: Scalar> LeviFamily<F> {
    pub fn parameter_dim(&self) -> usize {
        self.parameters.len()
    }

    /// `c = Σ t_i c_i`.
    pub fn parameter(&self, t: &[F]) -> Matrix<F> {
        let nd = self.algebra.dim() - self.s_dim;
        let mut c = Matrix::zeros(nd, self.s_dim);
        for (ti, ci) in t.iter().zip(&self.parameters) {
            if !ti.is_zero() {
                c = c.add(&ci.scale(ti));
            }
        }
        c
    }

    /// The graph of `c`, checked to be a Lie subalgebra.
    pub fn member(&self, c: &Matrix<F>) -> Result<Subspace<F>> {
        let n = self.algebra.dim();
        let graph = Subspace::span(
            n,
            (0..self.s_dim).map(|i| {
                let mut v = crate::linalg::unit(self.s_dim, i);
                v.extend(c.column(i));
                v
            }),
        );
        let sub = self.algebra.restrict(&graph)?;
        if !sub.classify().lie {
            return Err(Error::NotLie);
        }
        Ok(graph)
    }
}

pub fn levi_subalgebras_hemi<F: Scalar>(
    s: &LeibnizAlgebra<F>,
    module: &ModuleAction<F>,
) -> Result<LeviFamily<F>> {
    if !is_semisimple(s) {
        return Err(Error::HypothesisViolated("acting algebra is not semisimple".into()));
    }
    let parameters = hom_modules(&adjoint_module(s)?, module)?;
    Ok(LeviFamily {
        algebra: hemisemidirect(s, module)?,
        s_dim: s.dim(),
        parameters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::constructions::{adjoint_module, hemisemidirect, natural_module, sl};
    use crate::test_support::*;
    use crate::Q;

    #[test]
    fn semisimple_is_its_own_levi() {
        let d = levi_decomposition(&sl2()).unwrap();
        assert!(d.radical.is_zero());
        assert!(d.levi.is_full());
    }

    #[test]
    fn solvable_has_zero_levi() {
        let d = levi_decomposition(&solvable_xy()).unwrap();
        assert!(d.radical.is_full());
        assert!(d.levi.is_zero());
        let d = levi_decomposition(&two_dim()).unwrap();
        assert!(d.levi.is_zero());
    }

    #[test]
    fn sl2_natural_hemisemidirect() {
        let m = hemisemidirect(&sl::<Q>(2), &natural_module::<Q>(2)).unwrap();
        let d = levi_decomposition(&m).unwrap();
        assert_eq!(d.radical, Subspace::coordinate(5, 3..5));
        assert!(is_semisimple(&m.restrict(&d.levi).unwrap()));
    }

    #[test]
    fn nonabelian_radical_lie_algebra() {
        // sl2 ⋉ Heisenberg: the natural module plus a central line, with
        // [v1 v2] = z; a basis change hides the Levi factor.
        let s = sl::<Q>(2);
        let nat = natural_module::<Q>(2);
        let mut l = LeibnizAlgebra::<Q>::abelian(6);
        for i in 0..3 {
            for j in 0..3 {
                let mut v = s.basis_bracket(i, j).to_vec();
                v.extend(vec![Q::zero(); 3]);
                l.set_bracket(i, j, &v);
            }
            for j in 0..2 {
                let mut v = vec![Q::zero(); 3];
                v.extend(nat.rho(i).column(j));
                v.push(Q::zero());
                l.set_bracket(i, 3 + j, &v);
                let neg: Vec<Q> = v.iter().map(|x| -x.clone()).collect();
                l.set_bracket(3 + j, i, &neg);
            }
        }
        l.set_bracket(3, 4, &qv(&[0, 0, 0, 0, 0, 1]));
        l.set_bracket(4, 3, &qv(&[0, 0, 0, 0, 0, -1]));
        assert!(l.classify().lie);
        let p = Matrix::<Q>::from_fn(6, 6, |r, c| {
            if r == c {
                Q::from_integer(1.into())
            } else if r >= 3 && c < 3 {
                Q::from_integer(((r + 2 * c) as i64 % 3 - 1).into())
            } else {
                Q::zero()
            }
        });
        let (twisted, _) = l.change_basis(&p).unwrap();
        let d = levi_decomposition(&twisted).unwrap();
        assert_eq!(d.levi.dim(), 3);
        assert_eq!(d.radical.dim(), 3);
        assert!(is_semisimple(&twisted.restrict(&d.levi).unwrap()));
    }

    #[test]
    fn adjoint_family_is_one_dimensional() {
        let s = sl2();
        let fam = levi_subalgebras_hemi(&s, &adjoint_module(&s).unwrap()).unwrap();
        assert_eq!(fam.parameter_dim(), 1);
        let zero = fam.member(&fam.parameter(&qv(&[0]))).unwrap();
        assert_eq!(zero, Subspace::coordinate(6, 0..3));
        let one = fam.member(&fam.parameter(&qv(&[1]))).unwrap();
        assert_ne!(zero, one);
    }
}
