use std::time::Instant;

use leibniz::constructions::{m_construct, m_tilde};
use leibniz::linalg::unit;
use leibniz::pairing::{form_radical, pair_of_transverse_lagrangians};
use leibniz::{Algebra, AlgebraHom, Matrix, ModuleAction, QHom, QQuintuple, QSubspace, QuintupleViolation, Side, Q};
use thiserror::Error;

use super::{skipped, Claim, RankOne};
use crate::report::{Status, VerificationReport, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("the trace form does not split over Q")]
    FieldLimited,
    #[error("the recovered data is not a valid quintuple: {0}")]
    InvalidQuintuple(QuintupleViolation),
    #[error("{0}")]
    Algebra(#[from] leibniz::Error),
}

/// `H = L1 + L2` with the quintuple read off from it and `M̃ → H`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub quintuple: QQuintuple,
    pub l1: QSubspace,
    pub l2: QSubspace,
    pub h: QSubspace,
    /// `M̃(L1, L2, R, α, π) → restrict(H)`.
    pub iso: QHom,
    /// `M(L1, L2, R, α, π) → restrict(H)`, `(x, y) ↦ x + y`.
    pub phi: QHom,
}

fn coords_in(s: &QSubspace, vectors: &[Vec<Q>]) -> Matrix<Q> {
    let rows = vectors.iter().map(|v| s.coords(v).expect("vector lies in the subspace")).collect();
    Matrix::from_rows(s.dim(), rows).expect("rows have length dim s")
}

fn psi(a: &Algebra, x: &[Q], y: &[Q]) -> Vec<Q> {
    let xy = a.bracket(x, y).expect("same dimension");
    let yx = a.bracket(y, x).expect("same dimension");
    xy.into_iter().zip(yx).map(|(p, q)| p + q).collect()
}

/// Quintuple with `α` the left adjoint action of `L1` on `L2` and
/// `π(x, y) = ψ(x, y)`.
fn read_quintuple(a: &Algebra, radical: &QSubspace, l1: &QSubspace, l2: &QSubspace) -> Result<QQuintuple, DecomposeError> {
    let r = radical.basis_vectors();
    let u = l1.basis_vectors();
    let v = l2.basis_vectors();
    let alg1 = a.restrict(l1)?;
    let rho = u
        .iter()
        .map(|x| l2.restrict_map(&a.left_mult(x), l2))
        .collect::<Result<Vec<_>, _>>()?;
    let pi = u
        .iter()
        .map(|x| {
            let cols: Vec<Vec<Q>> = v
                .iter()
                .map(|y| radical.coords(&psi(a, x, y)).expect("psi takes values in C(M), inside R"))
                .collect();
            Matrix::from_columns(radical.dim(), &cols)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QQuintuple {
        alpha: ModuleAction::new(alg1.clone(), l2.dim(), rho)?,
        l1: alg1,
        l2: a.restrict(l2)?,
        r_l1: coords_in(l1, &r),
        r_l2: coords_in(l2, &r),
        pi,
    })
}

/// `(x, y) ↦ x + y` from `L1 ⊕ L2` into `H`-coordinates.
fn sum_map(l1: &QSubspace, l2: &QSubspace, h: &QSubspace, v: &[Q]) -> Vec<Q> {
    let (x, y) = v.split_at(l1.dim());
    let s: Vec<Q> = l1.from_coords(x).into_iter().zip(l2.from_coords(y)).map(|(p, q)| p + q).collect();
    h.coords(&s).expect("L1 + L2 = H")
}

pub fn decompose(a: &Algebra) -> Result<Decomposition, DecomposeError> {
    if !a.classify().symmetric {
        return Err(DecomposeError::Hypothesis("the algebra is not symmetric".into()));
    }
    let ctx = RankOne::of(a).map_err(DecomposeError::Hypothesis)?;
    if !ctx.is_split() {
        return Err(DecomposeError::FieldLimited);
    }
    let (l1, l2) = pair_of_transverse_lagrangians(a).map_err(|_| DecomposeError::FieldLimited)?;
    let radical = form_radical(a);
    let q = read_quintuple(a, &radical, &l1, &l2)?;
    q.validate().map_err(DecomposeError::InvalidQuintuple)?;
    let h = l1.sum(&l2)?;
    let target = a.restrict(&h)?;
    let m = m_construct(&q)?;
    let n = m.dim();
    let phi_cols: Vec<Vec<Q>> = (0..n).map(|k| sum_map(&l1, &l2, &h, &unit(n, k))).collect();
    let phi = AlgebraHom::new(m, target.clone(), Matrix::from_columns(h.dim(), &phi_cols)?)?;
    let mt = m_tilde(&q)?;
    let iso_cols: Vec<Vec<Q>> = (0..mt.algebra.dim())
        .map(|k| sum_map(&l1, &l2, &h, &mt.lift(&unit(mt.algebra.dim(), k))))
        .collect();
    let iso = AlgebraHom::new(mt.algebra, target, Matrix::from_columns(h.dim(), &iso_cols)?)?;
    Ok(Decomposition {
        quintuple: q,
        l1,
        l2,
        h,
        iso,
        phi,
    })
}

pub fn quintuple_decomposition(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::QuintupleDecomposition;
    let d = match decompose(a) {
        Ok(d) => d,
        Err(DecomposeError::Hypothesis(why)) => return skipped(claim, subject, why, start),
        Err(DecomposeError::FieldLimited) => {
            return VerificationReport::new(claim.id(), subject, Status::FieldLimited, DecomposeError::FieldLimited.to_string())
                .timed(start)
        }
        Err(e) => return VerificationReport::new(claim.id(), subject, Status::Refuted, e.to_string()).timed(start),
    };
    let radical = form_radical(a);
    let ideal = a.is_ideal(&d.h, Side::TwoSided);
    let parity = d.h.codim() == (a.dim() - radical.dim()) % 2;
    let iso = d.iso.is_isomorphism();
    let kernel = d.phi.kernel() == d.quintuple.diagonal_ideal();
    let ok = ideal && parity && iso && kernel;
    let summary = format!(
        "H = L1 + L2 has codim {}: ideal {ideal}, codim = dim(M/R) mod 2 {parity}, M~ isomorphic to H {iso}, ker phi = D {kernel}",
        d.h.codim()
    );
    VerificationReport::new(claim.id(), subject, if ok { Status::Verified } else { Status::Refuted }, summary)
        .detail(format!("dim L1 = {}, dim L2 = {}, dim R = {}", d.l1.dim(), d.l2.dim(), radical.dim()))
        .witness(Witness::subspace("L1", &d.l1))
        .witness(Witness::subspace("L2", &d.l2))
        .witness(Witness::subspace("H", &d.h))
        .timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build, quintuples, two_dim};

    #[test]
    fn two_dim_has_h_equal_to_r() {
        let a = two_dim();
        let d = decompose(&a).unwrap();
        assert_eq!(d.l1, form_radical(&a));
        assert_eq!(d.l2, d.l1);
        assert_eq!(d.h.codim(), 1);
        assert!(d.iso.is_isomorphism());
    }

    #[test]
    fn symmetric_quintuples_round_trip() {
        for name in ["minimal", "twist", "heisenberg"] {
            let a = build(name).unwrap();
            let d = decompose(&a).unwrap();
            assert!(d.h.is_full(), "{name}");
            assert_eq!(quintuple_decomposition(name, &a).status, Status::Verified);
        }
    }

    #[test]
    fn non_symmetric_is_skipped() {
        for (name, _) in quintuples().into_iter().filter(|(n, _)| n.starts_with("cotangent")) {
            let a = build(name).unwrap();
            assert_eq!(quintuple_decomposition(name, &a).status, Status::Skipped);
        }
    }
}
