use std::time::Instant;

use leibniz::linalg::unit;
use leibniz::pairing::{check_associative, form_radical, is_totally_isotropic, orth_complement, rad_of};
use leibniz::{Algebra, QSubspace, Side, Subspace};

use super::{radical_preimage, skipped, Claim, RankOne};
use crate::report::{Status, VerificationReport, Witness};

pub fn associativity(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::Associativity;
    let violation = check_associative(a);
    if !a.classify().left_central {
        let mut r = skipped(claim, subject, "the algebra is not left central", start);
        if let Some(v) = violation {
            r = r.detail("psi is not associative here").witness(Witness::violation(&v));
        }
        return r;
    }
    match violation {
        None => VerificationReport::new(
            claim.id(),
            subject,
            Status::Verified,
            format!("psi([ab], c) = psi(a, [bc]) on all {} basis triples", a.dim().pow(3)),
        ),
        Some(v) => VerificationReport::new(claim.id(), subject, Status::Refuted, "psi is not associative")
            .witness(Witness::violation(&v)),
    }
    .timed(start)
}

/// `(L ∈ 𝓛, L totally isotropic, L + R ∈ 𝓛)`; membership in `𝓛` requires
/// closure, so an unclosed `L` fails the first and possibly the last.
pub fn lie_subalgebra_equivalences(a: &Algebra, l: &QSubspace) -> [bool; 3] {
    let lie = |u: &QSubspace| a.is_closed(u) && a.restrict(u).map(|s| s.classify().lie).unwrap_or(false);
    let extended = l.sum(&form_radical(a)).expect("same ambient");
    [lie(l), is_totally_isotropic(a, l), lie(&extended)]
}

fn push_unique(list: &mut Vec<QSubspace>, s: QSubspace) {
    if !list.contains(&s) {
        list.push(s);
    }
}

/// Subalgebras generated by `R`, single basis vectors, pairs of them and
/// a maximal isotropic subspace when one is available.
fn closed_candidates(a: &Algebra) -> Vec<QSubspace> {
    let n = a.dim();
    let radical = form_radical(a);
    let mut out = vec![radical.clone()];
    for i in 0..n {
        let e = unit(n, i);
        push_unique(&mut out, a.subalgebra_closure([&e]));
        push_unique(
            &mut out,
            a.subalgebra_closure(radical.basis_vectors().into_iter().chain([e.clone()])),
        );
        for j in i + 1..n {
            push_unique(&mut out, a.subalgebra_closure([e.clone(), unit(n, j)]));
        }
    }
    if let Ok(l) = leibniz::pairing::maximal_totally_isotropic(a) {
        push_unique(&mut out, a.subalgebra_closure(l.basis_vectors()));
    }
    out
}

pub fn lie_subalgebra_sweep(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::LieSubalgebras;
    if !a.classify().left_central {
        return skipped(claim, subject, "the algebra is not left central", start);
    }
    let candidates = closed_candidates(a);
    let mut lie = 0;
    for l in &candidates {
        let flags = lie_subalgebra_equivalences(a, l);
        if flags.iter().any(|&f| f != flags[0]) {
            return VerificationReport::new(
                claim.id(),
                subject,
                Status::Refuted,
                format!("conditions disagree: lie {}, isotropic {}, L + R lie {}", flags[0], flags[1], flags[2]),
            )
            .witness(Witness::subspace("L", l))
            .timed(start);
        }
        lie += usize::from(flags[0]);
    }
    VerificationReport::new(
        claim.id(),
        subject,
        Status::Verified,
        format!("the three conditions agree on {} closed subspaces", candidates.len()),
    )
    .detail(format!("{lie} of them are Lie, {} are not", candidates.len() - lie))
    .timed(start)
}

/// `Ok((lie, derived ⊆ R))`, or the failed precondition.
pub fn isotropic_ideal_check(a: &Algebra, u: &QSubspace) -> Result<(bool, bool), String> {
    if !a.classify().left_central {
        return Err("the algebra is not left central".into());
    }
    if !a.is_ideal(u, Side::TwoSided) {
        return Err("U is not a two-sided ideal".into());
    }
    if !is_totally_isotropic(a, u) {
        return Err("U is not totally isotropic".into());
    }
    let lie = a.restrict(u).expect("ideals are closed").classify().lie;
    Ok((lie, a.derived(u).is_subspace_of(&form_radical(a))))
}

fn ideal_candidates(a: &Algebra) -> Vec<QSubspace> {
    let n = a.dim();
    let radical = form_radical(a);
    let mut ideals = vec![radical.clone(), a.leibniz_kernel(), Subspace::full(n)];
    ideals.extend(a.derived_series());
    ideals.push(orth_complement(a, &radical_preimage(a, &radical)));
    for i in 0..n {
        ideals.push(a.ideal_closure([unit(n, i)]));
        ideals.push(a.ideal_closure(radical.basis_vectors().into_iter().chain([unit(n, i)])));
    }
    let mut out = Vec::new();
    for i in ideals {
        push_unique(&mut out, rad_of(a, &i));
        push_unique(&mut out, i);
    }
    out.retain(|u| a.is_ideal(u, Side::TwoSided) && is_totally_isotropic(a, u));
    out
}

pub fn isotropic_ideal_sweep(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::IsotropicIdeals;
    if !a.classify().left_central {
        return skipped(claim, subject, "the algebra is not left central", start);
    }
    let candidates = ideal_candidates(a);
    for u in &candidates {
        let (lie, derived_in_r) = isotropic_ideal_check(a, u).expect("candidates are filtered");
        if !lie || !derived_in_r {
            let what = if lie { "U' is not inside R" } else { "U is not a Lie algebra" };
            return VerificationReport::new(claim.id(), subject, Status::Refuted, what)
                .witness(Witness::subspace("U", u))
                .timed(start);
        }
    }
    VerificationReport::new(
        claim.id(),
        subject,
        Status::Verified,
        format!("{} totally isotropic ideals are Lie with U' inside R", candidates.len()),
    )
    .detail(format!(
        "ideal dimensions: {:?}",
        candidates.iter().map(Subspace::dim).collect::<Vec<_>>()
    ))
    .timed(start)
}

pub fn b_perp_check(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::RadicalPerp;
    if let Err(why) = RankOne::of(a) {
        return skipped(claim, subject, why, start);
    }
    let radical = form_radical(a);
    let b = radical_preimage(a, &radical);
    let perp = orth_complement(a, &b);
    let status = if perp.is_subspace_of(&b) { Status::Verified } else { Status::Refuted };
    let summary = format!(
        "dim B = {}, dim B^perp = {}, B^perp {} B",
        b.dim(),
        perp.dim(),
        if status == Status::Verified { "lies in" } else { "is not inside" }
    );
    let mut r = VerificationReport::new(claim.id(), subject, status, summary);
    if status == Status::Refuted {
        r = r.witness(Witness::subspace("B", &b)).witness(Witness::subspace("B^perp", &perp));
    }
    r.timed(start)
}

pub fn symmetric_criterion(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::SymmetricCriterion;
    let flags = a.classify();
    if !flags.left_leibniz {
        return skipped(claim, subject, "the algebra is not left Leibniz", start);
    }
    let radical = form_radical(a);
    let derived = a.derived(&Subspace::full(a.dim()));
    let inside = derived.is_subspace_of(&radical);
    let status = if inside == flags.symmetric { Status::Verified } else { Status::Refuted };
    let mut r = VerificationReport::new(
        claim.id(),
        subject,
        status,
        format!(
            "symmetric: {}, M' inside R: {} (dim M' = {}, dim R = {})",
            flags.symmetric,
            inside,
            derived.dim(),
            radical.dim()
        ),
    );
    if status == Status::Refuted {
        r = r.witness(Witness::subspace("M'", &derived)).witness(Witness::subspace("R", &radical));
        if let Some(v) = flags.witness {
            r = r.witness(Witness::violation(&v));
        }
    }
    r.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build, two_dim};
    use leibniz::Q;

    fn span(n: usize, vs: &[&[i64]]) -> QSubspace {
        Subspace::span(n, vs.iter().map(|v| v.iter().map(|&x| Q::from_integer(x.into())).collect::<Vec<_>>()))
    }

    #[test]
    fn equivalence_examples() {
        let a = two_dim();
        assert_eq!(lie_subalgebra_equivalences(&a, &form_radical(&a)), [true; 3]);
        assert_eq!(lie_subalgebra_equivalences(&a, &span(2, &[&[1, 0]])), [false; 3]);
        let m = build("minimal").unwrap();
        let x = span(3, &[&[1, 0, 0]]);
        assert_eq!(lie_subalgebra_equivalences(&m, &x), [true; 3]);
    }

    #[test]
    fn isotropic_ideal_examples() {
        let m = build("minimal").unwrap();
        assert_eq!(isotropic_ideal_check(&m, &form_radical(&m)), Ok((true, true)));
        assert_eq!(isotropic_ideal_check(&m, &m.leibniz_kernel()), Ok((true, true)));
        assert!(isotropic_ideal_check(&m, &Subspace::full(3)).is_err());
    }

    #[test]
    fn drivers_verify_small_examples() {
        for recipe in ["two-dim", "minimal", "twist", "cotangent-xy", "sl2-natural", "sl:2"] {
            let a = build(recipe).unwrap();
            for r in [
                associativity(recipe, &a),
                lie_subalgebra_sweep(recipe, &a),
                isotropic_ideal_sweep(recipe, &a),
                b_perp_check(recipe, &a),
                symmetric_criterion(recipe, &a),
            ] {
                assert!(r.status <= Status::Skipped, "{r}");
            }
        }
    }

    #[test]
    fn associativity_witness_on_non_central() {
        let a = build("sl2-natural").unwrap();
        let r = associativity("sl2-natural", &a);
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.witnesses[0].replays_on(&a), Some(true));
    }
}
