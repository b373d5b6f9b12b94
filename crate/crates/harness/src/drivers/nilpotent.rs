use std::time::Instant;

use leibniz::pairing::{certify_anisotropic, find_isotropic_vector, Anisotropy};
use leibniz::{Algebra, QSubspace, Subspace};
use thiserror::Error;

use super::{radical_preimage, skipped, Claim, RankOne};
use crate::report::{Status, VerificationReport, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("the trace form does not split over Q")]
    FieldLimited,
    #[error("no totally isotropic ideal extends U (dim {u_dim}) inside A (dim {a_dim})")]
    NoIsotropicIdeal { u_dim: usize, a_dim: usize },
}

/// A maximal isotropic Lie subalgebra with the data the recursion produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub lagrangian: QSubspace,
    /// Preimage of the solvable radical of `M/R`.
    pub b: QSubspace,
    /// The isotropic ideals `R = U_0 ⊊ U_1 ⊊ …`, ending at the result.
    pub chain: Vec<QSubspace>,
    pub witt_dim: usize,
}

impl Construction {
    /// `(maximal isotropic, L/R nilpotent, L ⊆ B)`.
    pub fn postconditions(&self, a: &Algebra) -> [bool; 3] {
        let l = &self.lagrangian;
        let r = &self.chain[0];
        let maximal = l.dim() == self.witt_dim
            && leibniz::pairing::is_totally_isotropic(a, l)
            && a.is_closed(l)
            && a.restrict(l).map(|s| s.classify().lie).unwrap_or(false);
        let nilpotent = a
            .restrict(l)
            .and_then(|s| {
                let rs = Subspace::span(l.dim(), r.basis_vectors().iter().map(|v| l.coords(v).expect("R ⊆ L")));
                s.quotient_map(&rs)
            })
            .map(|q| q.algebra.is_nilpotent(&Subspace::full(q.algebra.dim())))
            .unwrap_or(false);
        [maximal, nilpotent, l.is_subspace_of(&self.b)]
    }
}

/// Pushes a subspace of `A` given in `A`-coordinates into `M`.
fn into_ambient(a_space: &QSubspace, s: &QSubspace) -> QSubspace {
    s.image(&a_space.inclusion())
}

/// Totally isotropic ideals `U' ⊋ U` of `A`, in the order the recursion
/// prefers them.
fn proposals(a: &Algebra, ctx: &RankOne, space: &QSubspace, u: &QSubspace) -> Vec<QSubspace> {
    let f = &ctx.form;
    let sub = a.restrict(space).expect("A is closed");
    let u_local = Subspace::span(space.dim(), u.basis_vectors().iter().map(|v| space.coords(v).expect("U ⊆ A")));
    let q = sub.quotient_map(&u_local).expect("U is an ideal of A");
    let bar = &q.algebra;
    let full = Subspace::full(bar.dim());
    let pull = |s: &QSubspace| into_ambient(space, &q.preimage(s));

    let mut ideals: Vec<QSubspace> = bar.derived_series();
    ideals.extend(bar.lower_central_series(&full));
    ideals.push(bar.center());
    let mut out: Vec<QSubspace> = Vec::new();
    for i in &ideals {
        let i = pull(i);
        out.push(f.rad_of(&i));
        out.push(f.rad_of(&f.orth(&i).intersect(space).expect("same ambient")));
    }
    if !bar.is_solvable() {
        let b = pull(&bar.solvable_radical());
        out.push(f.orth(&b).intersect(space).expect("same ambient"));
    }
    if bar.is_abelian() {
        let comp = u.complement_in(space).expect("U ⊆ A");
        if let Ok(v) = find_isotropic_vector(f, &comp) {
            out.push(u.sum(&Subspace::span(a.dim(), [v])).expect("same ambient"));
        }
    }
    out.retain(|w| u.is_subspace_of(w) && w.dim() > u.dim() && f.is_totally_isotropic(w));
    out
}

/// Builds `L` by recursing through isotropic ideals `U` and their
/// orthogonals until the remaining quotient is anisotropic.
pub fn construct_nilpotent_lagrangian(a: &Algebra) -> Result<Construction, ConstructionError> {
    let ctx = RankOne::of(a).map_err(ConstructionError::Hypothesis)?;
    if !ctx.split.is_certified() {
        return Err(ConstructionError::FieldLimited);
    }
    let mut space = Subspace::full(a.dim());
    let mut u = ctx.radical.clone();
    let mut chain = vec![u.clone()];
    loop {
        let comp = u.complement_in(&space).expect("U ⊆ A");
        match certify_anisotropic(&ctx.form, &comp) {
            Anisotropy::Anisotropic => break,
            Anisotropy::Undetermined => return Err(ConstructionError::FieldLimited),
            Anisotropy::Isotropic(_) => {}
        }
        let next = proposals(a, &ctx, &space, &u).into_iter().next().ok_or(
            ConstructionError::NoIsotropicIdeal {
                u_dim: u.dim(),
                a_dim: space.dim(),
            },
        )?;
        space = ctx.form.orth(&next).intersect(&space).expect("same ambient");
        debug_assert!(a.is_closed(&space));
        u = next;
        chain.push(u.clone());
    }
    Ok(Construction {
        b: radical_preimage(a, &ctx.radical),
        witt_dim: ctx.lagrangian_dim(),
        lagrangian: u,
        chain,
    })
}

pub fn nilpotent_lagrangian(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::NilpotentLagrangian;
    let c = match construct_nilpotent_lagrangian(a) {
        Ok(c) => c,
        Err(ConstructionError::Hypothesis(why)) => return skipped(claim, subject, why, start),
        Err(ConstructionError::FieldLimited) => {
            return VerificationReport::new(claim.id(), subject, Status::FieldLimited, ConstructionError::FieldLimited.to_string())
                .timed(start)
        }
        Err(e @ ConstructionError::NoIsotropicIdeal { .. }) => {
            return VerificationReport::new(claim.id(), subject, Status::Skipped, e.to_string()).timed(start)
        }
    };
    let [maximal, nilpotent, in_b] = c.postconditions(a);
    let ok = maximal && nilpotent && in_b;
    let summary = format!(
        "dim L = {} (Witt bound {}): maximal isotropic {maximal}, L/R nilpotent {nilpotent}, L inside B {in_b}",
        c.lagrangian.dim(),
        c.witt_dim
    );
    VerificationReport::new(claim.id(), subject, if ok { Status::Verified } else { Status::Refuted }, summary)
        .witness(Witness::subspace("L", &c.lagrangian))
        .witness(Witness::trace("dim U along the recursion", c.chain.iter().map(Subspace::dim).collect()))
        .detail(format!("dim B = {}", c.b.dim()))
        .timed(start)
}
