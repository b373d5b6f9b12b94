use thiserror::Error;

use crate::algebra::{LeibnizAlgebra, Quotient, Side};
use crate::constructions::trivial_module;
use crate::error::{Error, Result};
use crate::lie::{is_derivation, ModuleAction};
use crate::linalg::{unit, Matrix, Subspace};
use crate::scalar::Scalar;

/// Lie data `(L1, L2, R, α, π)` for the construction of `M` and `M̃`.
///
/// `R` is given by a common basis: row `t` of `r_l1` and of `r_l2` is the
/// same element of `R` in the coordinates of `L1` and `L2`. `π` is stored
/// lifted to `L1`: `pi[a]` is a `dim R x dim L2` matrix with
/// `ψ'(x_a, y) = pi[a] y` in `R`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quintuple<F> {
    pub l1: LeibnizAlgebra<F>,
    pub l2: LeibnizAlgebra<F>,
    pub r_l1: Matrix<F>,
    pub r_l2: Matrix<F>,
    /// `L1` acting on `L2`.
    pub alpha: ModuleAction<F>,
    pub pi: Vec<Matrix<F>>,
}

/// The first assumption on a [`Quintuple`] that fails.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuintupleViolation {
    #[error("inconsistent shapes: {0}")]
    Shape(&'static str),
    #[error("L{0} is not a Lie algebra")]
    NotLie(u8),
    #[error("the basis of R is linearly dependent in L{0}")]
    RDependent(u8),
    #[error("R is not an ideal of L{0}")]
    RNotIdeal(u8),
    #[error("the brackets of R in L1 and L2 differ on ({0}, {1})")]
    RBracketMismatch(usize, usize),
    #[error("L2/R is not abelian: [y{0} y{1}] is not in R")]
    L2QuotientNonabelian(usize, usize),
    #[error("alpha(x{0}) is not a derivation of L2")]
    AlphaNotDerivation(usize),
    #[error("r{r}.y{y} differs from [r{r} y{y}]")]
    AlphaOnRadicalLeft { r: usize, y: usize },
    #[error("x{x}.r{r} differs from [x{x} r{r}]")]
    AlphaOnRadicalRight { x: usize, r: usize },
    #[error("psi'(x{x}, y{y}) is not in Z")]
    PsiOutsideZ { x: usize, y: usize },
    #[error("psi'([x{x1} x{x2}], y{y}) differs from psi'(x{x1}, x{x2}.y{y})")]
    PsiNotInvariant { x1: usize, x2: usize, y: usize },
    #[error("the left kernel of psi' is not R, so pi is not injective on L1/R")]
    PiNotInjective,
    #[error("the right kernel of psi' is not R, so im pi annihilates a nonzero element of L2/R")]
    PiAnnihilates,
}

type Check = std::result::Result<(), QuintupleViolation>;

impl<F: Scalar> Quintuple<F> {
    pub fn r_dim(&self) -> usize {
        self.r_l1.rows()
    }

    pub fn r_in_l1(&self) -> Subspace<F> {
        Subspace::row_space(&self.r_l1)
    }

    pub fn r_in_l2(&self) -> Subspace<F> {
        Subspace::row_space(&self.r_l2)
    }

    /// The element of `L1` with `R`-coordinates `c`.
    pub fn to_l1(&self, c: &[F]) -> Vec<F> {
        self.r_l1.transpose().mul_vec(c)
    }

    pub fn to_l2(&self, c: &[F]) -> Vec<F> {
        self.r_l2.transpose().mul_vec(c)
    }

    fn coords_in(r: &Matrix<F>, v: &[F]) -> Option<Vec<F>> {
        r.transpose().solve_vec(v).ok()
    }

    /// `ψ'(x, y)` in `R`-coordinates.
    pub fn psi_prime(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.r_dim()];
        for (xa, p) in x.iter().zip(&self.pi) {
            if xa.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(p.mul_vec(y)) {
                *o = std::mem::replace(o, F::zero()) + xa.clone() * v;
            }
        }
        out
    }

    /// `Z = R ∩ Z(L1) ∩ Z(L2)` in `R`-coordinates.
    pub fn z(&self) -> Subspace<F> {
        let z1 = self.l1.center().preimage(&self.r_l1.transpose());
        let z2 = self.l2.center().preimage(&self.r_l2.transpose());
        z1.intersect(&z2).expect("same ambient")
    }

    /// Checks assumptions (a)–(c) on basis vectors.
    pub fn validate(&self) -> Check {
        self.check_shapes()?;
        self.check_lie_data()?;
        self.check_action()?;
        self.check_pairing()
    }

    fn check_shapes(&self) -> Check {
        use QuintupleViolation::Shape;
        let (d1, d2, k) = (self.l1.dim(), self.l2.dim(), self.r_l1.rows());
        if self.r_l1.cols() != d1 || self.r_l2.cols() != d2 || self.r_l2.rows() != k {
            return Err(Shape("R basis matrices"));
        }
        if self.alpha.dim() != d2
            || self.alpha.algebra().dim() != d1
            || self.alpha.algebra().tensor() != self.l1.tensor()
        {
            return Err(Shape("alpha must be an action of L1 on L2"));
        }
        if self.pi.len() != d1 || self.pi.iter().any(|p| p.rows() != k || p.cols() != d2) {
            return Err(Shape("pi must hold one dim R x dim L2 matrix per basis vector of L1"));
        }
        Ok(())
    }

    fn check_lie_data(&self) -> Check {
        use QuintupleViolation::*;
        let k = self.r_dim();
        for (which, l, r) in [(1, &self.l1, &self.r_l1), (2, &self.l2, &self.r_l2)] {
            if !l.classify().lie {
                return Err(NotLie(which));
            }
            if r.rank() != k {
                return Err(RDependent(which));
            }
            if !l.is_ideal(&Subspace::row_space(r), Side::TwoSided) {
                return Err(RNotIdeal(which));
            }
        }
        let rows1: Vec<Vec<F>> = self.r_l1.row_vectors().map(<[F]>::to_vec).collect();
        let rows2: Vec<Vec<F>> = self.r_l2.row_vectors().map(<[F]>::to_vec).collect();
        for s in 0..k {
            for t in 0..k {
                let c1 = Self::coords_in(&self.r_l1, &self.l1.br(&rows1[s], &rows1[t]));
                let c2 = Self::coords_in(&self.r_l2, &self.l2.br(&rows2[s], &rows2[t]));
                if c1 != c2 {
                    return Err(RBracketMismatch(s, t));
                }
            }
        }
        let r2 = self.r_in_l2();
        for a in 0..self.l2.dim() {
            for b in 0..self.l2.dim() {
                if !r2.contains(self.l2.basis_bracket(a, b)) {
                    return Err(L2QuotientNonabelian(a, b));
                }
            }
        }
        Ok(())
    }

    fn check_action(&self) -> Check {
        use QuintupleViolation::*;
        let (d1, d2) = (self.l1.dim(), self.l2.dim());
        for a in 0..d1 {
            if !is_derivation(&self.l2, self.alpha.rho(a)) {
                return Err(AlphaNotDerivation(a));
            }
        }
        for (t, (r1, r2)) in self.r_l1.row_vectors().zip(self.r_l2.row_vectors()).enumerate() {
            let act = self.alpha.rho_of(r1);
            for y in 0..d2 {
                let e = unit(d2, y);
                if act.mul_vec(&e) != self.l2.br(r2, &e) {
                    return Err(AlphaOnRadicalLeft { r: t, y });
                }
            }
            for x in 0..d1 {
                let inside = self.l1.br_basis_left(x, r1);
                let expected = Self::coords_in(&self.r_l1, &inside).map(|c| self.to_l2(&c));
                if expected.as_deref() != Some(self.alpha.rho(x).mul_vec(r2).as_slice()) {
                    return Err(AlphaOnRadicalRight { x, r: t });
                }
            }
        }
        Ok(())
    }

    fn check_pairing(&self) -> Check {
        use QuintupleViolation::*;
        let (d1, d2) = (self.l1.dim(), self.l2.dim());
        let z = self.z();
        for (x, p) in self.pi.iter().enumerate() {
            for y in 0..d2 {
                if !z.contains(&p.column(y)) {
                    return Err(PsiOutsideZ { x, y });
                }
            }
        }
        for x1 in 0..d1 {
            for x2 in 0..d1 {
                let bracket = self.l1.basis_bracket(x1, x2);
                for y in 0..d2 {
                    let lhs = self.psi_prime(bracket, &unit(d2, y));
                    let rhs = self.pi[x1].mul_vec(&self.alpha.rho(x2).column(y));
                    if lhs != rhs {
                        return Err(PsiNotInvariant { x1, x2, y });
                    }
                }
            }
        }
        // Left kernel: Σ_a x_a pi[a][t][b] = 0 for all t, b.
        let k = self.r_dim();
        let left = Matrix::from_fn(k * d2, d1, |row, a| self.pi[a][(row / d2, row % d2)].clone());
        if left.kernel() != self.r_in_l1() {
            return Err(PiNotInjective);
        }
        let right = Matrix::vstack(d2, &self.pi);
        if right.kernel() != self.r_in_l2() {
            return Err(PiAnnihilates);
        }
        Ok(())
    }

    /// `R ⊕ R` inside `M = L1 ⊕ L2`.
    pub fn m_radical(&self) -> Subspace<F> {
        let n = self.l1.dim() + self.l2.dim();
        let rows = self
            .r_l1
            .row_vectors()
            .map(|r| pad(r, 0, n))
            .chain(self.r_l2.row_vectors().map(|r| pad(r, self.l1.dim(), n)));
        Subspace::span(n, rows)
    }

    /// `D = {(a, -a) : a ∈ R}`.
    pub fn diagonal_ideal(&self) -> Subspace<F> {
        let d1 = self.l1.dim();
        let rows = self.r_l1.row_vectors().zip(self.r_l2.row_vectors()).map(|(a, b)| {
            a.iter()
                .cloned()
                .chain(b.iter().map(|x| -x.clone()))
                .collect::<Vec<F>>()
        });
        Subspace::span(d1 + self.l2.dim(), rows)
    }
}

fn pad<F: Scalar>(v: &[F], offset: usize, n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

/// `M(L1, L2, R, α, π)` on `L1 ⊕ L2` with
/// `[(x1, y1)(x2, y2)] = ([x1 x2], x1.y2 - x2.y1 + [y1 y2] + ψ'(x2, y1))`.
pub fn m_construct<F: Scalar>(q: &Quintuple<F>) -> Result<LeibnizAlgebra<F>> {
    q.validate().map_err(Error::InvalidQuintuple)?;
    let (d1, d2) = (q.l1.dim(), q.l2.dim());
    let n = d1 + d2;
    let m = LeibnizAlgebra::from_brackets(n, |i, j| match (i < d1, j < d1) {
        (true, true) => pad(q.l1.basis_bracket(i, j), 0, n),
        (true, false) => pad(&q.alpha.rho(i).column(j - d1), d1, n),
        (false, true) => {
            let ya = unit(d2, i - d1);
            let mut v: Vec<F> = q.alpha.rho(j).column(i - d1).iter().map(|x| -x.clone()).collect();
            for (o, p) in v.iter_mut().zip(q.to_l2(&q.psi_prime(&unit(d1, j), &ya))) {
                *o = std::mem::replace(o, F::zero()) + p;
            }
            pad(&v, d1, n)
        }
        (false, false) => pad(q.l2.basis_bracket(i - d1, j - d1), d1, n),
    });
    let labels = q
        .l1
        .labels()
        .iter()
        .map(|l| format!("x:{l}"))
        .chain(q.l2.labels().iter().map(|l| format!("y:{l}")))
        .collect();
    m.with_labels(labels)
}

/// `M̃ = M / D`, returned with its projection from `M`.
pub fn m_tilde<F: Scalar>(q: &Quintuple<F>) -> Result<Quotient<F>> {
    let m = m_construct(q)?;
    m.quotient_map(&q.diagonal_ideal())
}

fn abelian_with_labels<F: Scalar>(labels: &[&str]) -> LeibnizAlgebra<F> {
    LeibnizAlgebra::abelian(labels.len())
        .with_labels(labels.iter().map(|s| s.to_string()).collect())
        .expect("one label per basis vector")
}

fn last_coordinate<F: Scalar>(d: usize) -> Matrix<F> {
    Matrix::from_rows(d, vec![unit(d, d - 1)]).expect("row of length d")
}

fn pi_delta<F: Scalar>(d1: usize, d2: usize, pairs: usize) -> Vec<Matrix<F>> {
    (0..d1)
        .map(|a| {
            let row = if a < pairs { unit(d2, a) } else { vec![F::zero(); d2] };
            Matrix::from_rows(d2, vec![row]).expect("row of length d2")
        })
        .collect()
}

/// `L1 = span(x, z)`, `L2 = span(y, z)` abelian, `R = span(z)`, `α = 0`,
/// `ψ'(x, y) = z`.
pub fn minimal_quintuple<F: Scalar>() -> Quintuple<F> {
    let l1 = abelian_with_labels::<F>(&["x", "z"]);
    Quintuple {
        alpha: trivial_module(&l1, 2),
        l2: abelian_with_labels(&["y", "z"]),
        r_l1: last_coordinate(2),
        r_l2: last_coordinate(2),
        pi: pi_delta(2, 2, 1),
        l1,
    }
}

/// Abelian `L1 = span(x1, x2, z)`, `L2 = span(y1, y2, z)` with
/// `x1.y2 = z` and `ψ'(x_a, y_b) = δ_ab z`.
pub fn twist_quintuple<F: Scalar>() -> Quintuple<F> {
    let l1 = abelian_with_labels::<F>(&["x1", "x2", "z"]);
    let mut twist = Matrix::zeros(3, 3);
    twist[(2, 1)] = F::one();
    let rho = vec![twist, Matrix::zeros(3, 3), Matrix::zeros(3, 3)];
    Quintuple {
        alpha: ModuleAction::new(l1.clone(), 3, rho).expect("commuting square-zero action"),
        l2: abelian_with_labels(&["y1", "y2", "z"]),
        r_l1: last_coordinate(3),
        r_l2: last_coordinate(3),
        pi: pi_delta(3, 3, 2),
        l1,
    }
}

fn heisenberg<F: Scalar>(labels: &[&str]) -> LeibnizAlgebra<F> {
    let mut h = abelian_with_labels::<F>(labels);
    h.set_bracket(0, 1, &unit(3, 2));
    h.set_bracket(1, 0, &unit::<F>(3, 2).into_iter().map(|x| -x).collect::<Vec<_>>());
    h
}

/// Heisenberg `L1`, `L2` with `[x1 x2] = z`, `[y1 y2] = z`, `α = 0` and
/// `ψ'(x_a, y_b) = δ_ab z`.
pub fn heisenberg_quintuple<F: Scalar>() -> Quintuple<F> {
    let l1 = heisenberg::<F>(&["x1", "x2", "z"]);
    Quintuple {
        alpha: trivial_module(&l1, 3),
        l2: heisenberg(&["y1", "y2", "z"]),
        r_l1: last_coordinate(3),
        r_l2: last_coordinate(3),
        pi: pi_delta(3, 3, 2),
        l1,
    }
}

/// `L1 = g ⊕ span(z)`, `L2 = g* ⊕ span(z)` abelian, `α` coadjoint and
/// `ψ'(x, ξ) = ξ(x) z`.
pub fn cotangent_quintuple<F: Scalar>(g: &LeibnizAlgebra<F>) -> Result<Quintuple<F>> {
    let d = g.dim();
    let line = LeibnizAlgebra::abelian(1).with_labels(vec!["z".into()])?;
    let l1 = g.orthogonal_sum(&line);
    let l2 = LeibnizAlgebra::abelian(d + 1).with_labels(
        (0..d)
            .map(|i| format!("{}*", g.labels()[i]))
            .chain(std::iter::once("z".to_string()))
            .collect(),
    )?;
    let rho = (0..=d)
        .map(|i| {
            Matrix::from_fn(d + 1, d + 1, |l, k| {
                if i < d && l < d && k < d {
                    -g.structure_constant(i, l, k).clone()
                } else {
                    F::zero()
                }
            })
        })
        .collect();
    Ok(Quintuple {
        alpha: ModuleAction::new(l1.clone(), d + 1, rho)?,
        l2,
        r_l1: last_coordinate(d + 1),
        r_l2: last_coordinate(d + 1),
        pi: pi_delta(d + 1, d + 1, d),
        l1,
    })
}
