use std::time::Instant;

use leibniz::lie::exp_nilpotent;
use leibniz::pairing::{certify_anisotropic, find_isotropic_vector, Anisotropy};
use leibniz::{Algebra, QSubspace, Scalar, Subspace, Q};
use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{skipped, Claim, Options, RankOne};
use crate::report::{Status, VerificationReport, Witness};

const ATTEMPTS: usize = 16;
const COEFFICIENT: i64 = 3;

/// A Lie subalgebra containing `R`, grown one isotropic vector at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub subalgebra: QSubspace,
    /// Maximal totally isotropic, hence a maximal Lie subalgebra.
    pub certified: bool,
    pub steps: usize,
}

/// `{y : [y L] ⊆ L, [L y] ⊆ L}`.
fn normalizer(a: &Algebra, l: &QSubspace) -> QSubspace {
    let mut n = Subspace::full(a.dim());
    for v in l.basis_vectors() {
        n = n.intersect(&l.preimage(&a.left_mult(&v))).expect("same ambient");
        n = n.intersect(&l.preimage(&a.right_mult(&v))).expect("same ambient");
    }
    n
}

fn random_vector(rng: &mut ChaCha8Rng, within: &QSubspace) -> Vec<Q> {
    let coords: Vec<Q> = (0..within.dim())
        .map(|_| Q::from_i64(rng.gen_range(-COEFFICIENT..=COEFFICIENT)))
        .collect();
    within.from_coords(&coords)
}

/// A random isotropic vector of `c`: either an isotropic basis vector or
/// the second intersection `f(u,u) v0 - 2 f(v0,u) u` of the line through a
/// known isotropic `v0` in direction `u` with the quadric.
fn isotropic_in(ctx: &RankOne, c: &QSubspace, rng: &mut ChaCha8Rng) -> Option<Vec<Q>> {
    let f = &ctx.form;
    if rng.gen_bool(0.5) {
        let isotropic: Vec<Vec<Q>> = c.basis_vectors().into_iter().filter(|b| f.eval(b, b).is_zero()).collect();
        if !isotropic.is_empty() {
            return Some(isotropic[rng.gen_range(0..isotropic.len())].clone());
        }
    }
    let v0 = find_isotropic_vector(f, c).ok()?;
    let u = random_vector(rng, c);
    let (uu, vu) = (f.eval(&u, &u), f.eval(&v0, &u));
    let two = Q::from_i64(2);
    let x: Vec<Q> = v0
        .iter()
        .zip(&u)
        .map(|(v, w)| uu.clone() * v - two.clone() * &vu * w)
        .collect();
    Some(if x.iter().all(Zero::is_zero) { v0 } else { x })
}

fn grow(a: &Algebra, ctx: &RankOne, rng: &mut ChaCha8Rng) -> Sample {
    let bound = ctx.lagrangian_dim();
    let mut l = ctx.radical.clone();
    let mut steps = 0;
    while l.dim() < bound {
        let w = normalizer(a, &l).intersect(&ctx.form.orth(&l)).expect("same ambient");
        let c = l.complement_in(&w).expect("a closed isotropic L lies in its normalizer and its orthogonal");
        let Some(x) = (!c.is_zero()).then(|| isotropic_in(ctx, &c, rng)).flatten() else {
            break;
        };
        l = l.sum(&Subspace::span(a.dim(), [x])).expect("same ambient");
        steps += 1;
    }
    let certified = l.dim() == bound
        || matches!(ctx.form.maximality(&l, &Subspace::full(a.dim())), Anisotropy::Anisotropic);
    Sample {
        subalgebra: l,
        certified,
        steps,
    }
}

/// Applies `exp(L_x)` for a random `x` in `[M, B]`; left multiplications are
/// derivations, so this is an automorphism whenever `L_x` is nilpotent.
fn twist(a: &Algebra, l: &QSubspace, rng: &mut ChaCha8Rng) -> QSubspace {
    let full = Subspace::full(a.dim());
    let mb = a.bracket_spaces(&full, &a.solvable_radical());
    if mb.is_zero() {
        return l.clone();
    }
    let x = random_vector(rng, &mb);
    match exp_nilpotent(&a.left_mult(&x)) {
        Ok(g) => l.image(&g),
        Err(_) => l.clone(),
    }
}

/// Seeded sample of a maximal Lie subalgebra of a left central rank-one
/// algebra whose trace form splits up to a certified anisotropic part.
pub fn maximal_lie_sample(a: &Algebra, seed: u64) -> Result<Sample, String> {
    let ctx = RankOne::of(a)?;
    if !ctx.split.is_certified() {
        return Err("field-limited: the trace form does not split over Q".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..ATTEMPTS {
        let s = grow(a, &ctx, &mut rng);
        if s.certified {
            let subalgebra = twist(a, &s.subalgebra, &mut rng);
            return Ok(Sample { subalgebra, ..s });
        }
        last = Some(s);
    }
    Ok(last.expect("at least one attempt"))
}

pub fn verify_maximal_intersection(subject: &str, a: &Algebra, opts: Options) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::MaximalIntersection;
    let n = a.dim();
    if a.classify().lie {
        return VerificationReport::new(
            claim.id(),
            subject,
            Status::Verified,
            "M is Lie, so R = M is the only maximal Lie subalgebra",
        )
        .timed(start);
    }
    let ctx = match RankOne::of(a) {
        Ok(ctx) => ctx,
        Err(why) => return skipped(claim, subject, why, start),
    };
    let off_radical = ctx.radical.complement_in(&Subspace::full(n)).expect("R lies in M");
    if let Anisotropy::Anisotropic = certify_anisotropic(&ctx.form, &off_radical) {
        return VerificationReport::new(
            claim.id(),
            subject,
            Status::Verified,
            "every nonzero class of M/R is anisotropic, so R is the unique maximal Lie subalgebra",
        )
        .timed(start);
    }
    if !ctx.split.is_certified() {
        return ctx.field_limited(claim, subject, start);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut meet = Subspace::full(n);
    let mut trace = vec![n];
    let mut certified = 0;
    for _ in 0..opts.trials {
        let sample = maximal_lie_sample(a, rng.next_u64()).expect("preconditions checked above");
        let l = &sample.subalgebra;
        if !ctx.radical.is_subspace_of(l) {
            return VerificationReport::new(claim.id(), subject, Status::Refuted, "a maximal Lie subalgebra misses R")
                .witness(Witness::subspace("L", l))
                .witness(Witness::subspace("R", &ctx.radical))
                .timed(start);
        }
        if !sample.certified {
            continue;
        }
        certified += 1;
        meet = meet.intersect(l).expect("same ambient");
        trace.push(meet.dim());
        if meet == ctx.radical {
            break;
        }
    }
    let descent = Witness::trace("dim of the running intersection", trace);
    let (status, summary) = if meet == ctx.radical {
        (Status::Verified, format!("the intersection of {certified} maximal Lie subalgebras is R"))
    } else if certified == 0 {
        (Status::Skipped, "inconclusive: no sample was certified maximal".to_string())
    } else {
        (
            Status::Skipped,
            format!(
                "inconclusive: after {certified} samples the intersection has dimension {} > dim R = {}",
                meet.dim(),
                ctx.radical.dim()
            ),
        )
    };
    VerificationReport::new(claim.id(), subject, status, summary)
        .detail(format!("seed {}, up to {} trials, dim R = {}", opts.seed, opts.trials, ctx.radical.dim()))
        .witness(descent)
        .timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build, two_dim};
    use leibniz::pairing::form_radical;

    #[test]
    fn two_dim_sample_is_the_radical() {
        let a = two_dim();
        let s = maximal_lie_sample(&a, 1).unwrap();
        assert_eq!(s.subalgebra, form_radical(&a));
        assert!(s.certified);
    }

    #[test]
    fn three_dim_samples_are_the_two_lines() {
        let m = build("minimal").unwrap();
        let r = form_radical(&m);
        let mut seen = Vec::new();
        for seed in 0..20 {
            let s = maximal_lie_sample(&m, seed).unwrap();
            assert!(s.certified && r.is_subspace_of(&s.subalgebra) && s.subalgebra.dim() == 2);
            if !seen.contains(&s.subalgebra) {
                seen.push(s.subalgebra);
            }
        }
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn samples_are_deterministic() {
        let m = build("cotangent-sl2").unwrap();
        assert_eq!(maximal_lie_sample(&m, 9), maximal_lie_sample(&m, 9));
        let opts = Options { seed: 3, trials: 20 };
        let a = verify_maximal_intersection("c", &m, opts);
        let b = verify_maximal_intersection("c", &m, opts);
        assert_eq!(a.untimed(), b.untimed());
    }

    #[test]
    fn intersection_reaches_the_radical() {
        for recipe in ["two-dim", "minimal", "twist", "heisenberg", "cotangent-xy", "sl:2"] {
            let r = verify_maximal_intersection(recipe, &build(recipe).unwrap(), Options::default());
            assert_eq!(r.status, Status::Verified, "{r}");
        }
    }
}
