//! Named algebras and modules: `sl(n)`, its natural, adjoint and symmetric
//! square modules, hemisemidirect products and the quintuple construction.

mod quintuple;

pub use quintuple::{
    cotangent_quintuple, heisenberg_quintuple, m_construct, m_tilde, minimal_quintuple, twist_quintuple,
    Quintuple, QuintupleViolation,
};


use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::lie::{hom_modules, ModuleAction};
use crate::linalg::{unit, Matrix, Subspace};
use crate::scalar::Scalar;

/// Basis of `sl(n)` as `n x n` matrices, with labels.
///
/// Order: `E_ij` for `i < j` lexicographically, then
/// `H_k = E_kk - E_{k+1,k+1}`, then `E_ij` for `i > j`. For `n = 2` this is
/// `e, h, f`.
fn sl_basis<F: Scalar>(n: usize) -> Vec<(String, Matrix<F>)> {
    let elementary = |i: usize, j: usize| {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = F::one();
        m
    };
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in i + 1..n {
            out.push((format!("E{}{}", i + 1, j + 1), elementary(i, j)));
        }
    }
    for k in 0..n - 1 {
        let h = elementary(k, k).sub(&elementary(k + 1, k + 1));
        out.push((format!("H{}", k + 1), h));
    }
    for i in 0..n {
        for j in 0..i {
            out.push((format!("E{}{}", i + 1, j + 1), elementary(i, j)));
        }
    }
    out
}

/// Coordinates of a traceless matrix in the basis of [`sl_basis`].
fn sl_coords<F: Scalar>(n: usize, m: &Matrix<F>) -> Vec<F> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in i + 1..n {
            out.push(m[(i, j)].clone());
        }
    }
    let mut h = F::zero();
    for k in 0..n - 1 {
        h = h + &m[(k, k)];
        out.push(h.clone());
    }
    for i in 0..n {
        for j in 0..i {
            out.push(m[(i, j)].clone());
        }
    }
    out
}

/// The Lie algebra of traceless `n x n` matrices.
pub fn sl<F: Scalar>(n: usize) -> LeibnizAlgebra<F> {
    assert!(n >= 2, "sl(n) needs n ≥ 2");
    let basis = sl_basis::<F>(n);
    let labels = basis.iter().map(|(l, _)| l.clone()).collect();
    LeibnizAlgebra::from_brackets(basis.len(), |a, b| {
        sl_coords(n, &basis[a].1.commutator(&basis[b].1))
    })
    .with_labels(labels)
    .expect("one label per basis vector")
}

/// `sl(n)` acting on column vectors.
pub fn natural_module<F: Scalar>(n: usize) -> ModuleAction<F> {
    let rho = sl_basis::<F>(n).into_iter().map(|(_, m)| m).collect();
    ModuleAction::new(sl(n), n, rho).expect("matrix commutators represent sl(n)")
}

/// `x.y = [x y]`.
pub fn adjoint_module<F: Scalar>(l: &LeibnizAlgebra<F>) -> Result<ModuleAction<F>> {
    let rho = (0..l.dim()).map(|i| l.ad_basis(i)).collect();
    ModuleAction::new(l.clone(), l.dim(), rho)
}

pub fn trivial_module<F: Scalar>(l: &LeibnizAlgebra<F>, d: usize) -> ModuleAction<F> {
    let rho = vec![Matrix::zeros(d, d); l.dim()];
    ModuleAction::new(l.clone(), d, rho).expect("the zero action respects any bracket")
}

/// Index of `v_i ∘ v_j` in the basis `{v_i ∘ v_j : i ≤ j}` ordered
/// lexicographically.
fn sym_index(d: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * d - i * (i + 1) / 2 + j
}

/// `S²(V)` with `x.(v ∘ w) = (x.v) ∘ w + v ∘ (x.w)`.
pub fn symmetric_square<F: Scalar>(v: &ModuleAction<F>) -> Result<ModuleAction<F>> {
    let d = v.dim();
    let sd = d * (d + 1) / 2;
    let rho = v
        .matrices()
        .iter()
        .map(|r| {
            let mut m = Matrix::<F>::zeros(sd, sd);
            for i in 0..d {
                for j in i..d {
                    let col = sym_index(d, i, j);
                    for k in 0..d {
                        for (src, other) in [(i, j), (j, i)] {
                            let c = &r[(k, src)];
                            if !c.is_zero() {
                                let row = sym_index(d, k, other);
                                m[(row, col)] = m[(row, col)].clone() + c;
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleAction::new(v.algebra().clone(), sd, rho)
}

/// The action of the subalgebra `t`, in the coordinates of its canonical
/// basis.
pub fn restrict_action<F: Scalar>(v: &ModuleAction<F>, t: &Subspace<F>) -> Result<ModuleAction<F>> {
    let sub = v.algebra().restrict(t)?;
    let rho = t.basis().row_vectors().map(|x| v.rho_of(x)).collect();
    ModuleAction::new(sub, v.dim(), rho)
}

/// `S ⊕ N` with `[(a, m)(b, n)] = ([ab], a.n)`.
pub fn hemisemidirect<F: Scalar>(s: &LeibnizAlgebra<F>, module: &ModuleAction<F>) -> Result<LeibnizAlgebra<F>> {
    if module.algebra().dim() != s.dim() || module.algebra().tensor() != s.tensor() {
        return Err(Error::HypothesisViolated("module is over a different algebra".into()));
    }
    let (ds, dn) = (s.dim(), module.dim());
    let mut out = LeibnizAlgebra::abelian(ds + dn);
    for i in 0..ds {
        for j in 0..ds {
            let mut v = s.basis_bracket(i, j).to_vec();
            v.resize(ds + dn, F::zero());
            out.set_bracket(i, j, &v);
        }
        for j in 0..dn {
            let mut v = vec![F::zero(); ds];
            v.extend(module.rho(i).column(j));
            out.set_bracket(i, ds + j, &v);
        }
    }
    let labels = s
        .labels()
        .iter()
        .cloned()
        .chain((0..dn).map(|k| format!("n{k}")))
        .collect();
    let out = out.with_labels(labels)?;
    if let Some(v) = out.left_leibniz_violation() {
        let idx = |w: &[F]| w.iter().position(|x| !x.is_zero()).unwrap_or(0);
        return Err(Error::ActionInvalid(idx(&v.a), idx(&v.b)));
    }
    Ok(out)
}

/// `sl(3) ⋉ S²(V)` with the root `sl(2)` inside it and the graph of an
/// intertwiner into `N`.
#[derive(Clone, Debug)]
pub struct StraySl2Example<F> {
    pub algebra: LeibnizAlgebra<F>,
    /// The `sl(3)` copy.
    pub s: Subspace<F>,
    /// `S²(V)`.
    pub n: Subspace<F>,
    /// `span(E12, E21, H1)` inside the `sl(3)` copy.
    pub t: Subspace<F>,
    /// `{(x, d(x)) : x ∈ T}`.
    pub t1: Subspace<F>,
    /// `d ∈ Hom_T(T, N)`, the first solver basis vector.
    pub d: Matrix<F>,
    /// `dim Hom_S(S, N)`.
    pub hom_s_dim: usize,
    /// `dim Hom_T(T, N)`.
    pub hom_t_dim: usize,
}

/// A copy of `sl(2)` that no Levi subalgebra contains, since `Hom_S(S, N) = 0`
/// while `Hom_T(T, N) ≠ 0`.
pub fn stray_sl2_example<F: Scalar>() -> Result<StraySl2Example<F>> {
    let s = sl::<F>(3);
    let nmod = symmetric_square(&natural_module(3))?;
    let algebra = hemisemidirect(&s, &nmod)?;
    let (ds, dn) = (s.dim(), nmod.dim());
    let dim = ds + dn;
    let hom_s_dim = hom_modules(&adjoint_module(&s)?, &nmod)?.len();
    // E12, H1, E21 in the sl(3) basis order.
    let t_in_s = Subspace::coordinate(ds, [0, 3, 5]);
    let t_alg = s.restrict(&t_in_s)?;
    let n_t = restrict_action(&nmod, &t_in_s)?;
    let homs = hom_modules(&adjoint_module(&t_alg)?, &n_t)?;
    let hom_t_dim = homs.len();
    let d = homs
        .into_iter()
        .next()
        .ok_or_else(|| Error::HypothesisViolated("Hom_T(T, N) is zero".into()))?;
    let embed = |x: &[F], m: &[F]| -> Vec<F> { x.iter().chain(m).cloned().collect() };
    let t1 = Subspace::span(
        dim,
        t_in_s.basis().row_vectors().enumerate().map(|(a, x)| {
            embed(x, &d.mul_vec(&unit(t_in_s.dim(), a)))
        }),
    );
    let pad = |sub: &Subspace<F>| {
        Subspace::span(dim, sub.basis().row_vectors().map(|x| embed(x, &vec![F::zero(); dn])))
    };
    Ok(StraySl2Example {
        s: Subspace::coordinate(dim, 0..ds),
        n: Subspace::coordinate(dim, ds..dim),
        t: pad(&t_in_s),
        t1,
        d,
        hom_s_dim,
        hom_t_dim,
        algebra,
    })
}

/// `S ⋉ S` for the adjoint module.
pub fn adjoint_hemisemidirect<F: Scalar>(s: &LeibnizAlgebra<F>) -> Result<LeibnizAlgebra<F>> {
    hemisemidirect(s, &adjoint_module(s)?)
}
