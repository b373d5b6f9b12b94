use std::time::Instant;

use leibniz::linalg::unit;
use leibniz::pairing::form_radical;
use leibniz::{Algebra, QSubspace, Subspace};

use super::{modulo_radical, skipped, Claim};
use crate::report::{Status, VerificationReport, Witness};

/// The sum of all semisimple ideals of a Lie algebra: the last term of the
/// derived series of the centralizer of the solvable radical.
pub fn largest_semisimple_ideal(l: &Algebra) -> QSubspace {
    let c = l.centralizer(&l.solvable_radical());
    l.derived_series_of(&c).pop().expect("the series starts at c")
}

/// Nonzero ideals inside `i` that the descent tries, smallest first.
fn smaller_ideals(l: &Algebra, i: &QSubspace) -> Vec<QSubspace> {
    let full = Subspace::full(l.dim());
    let mut out = vec![
        l.bracket_spaces(&full, i),
        l.bracket_spaces(i, &full),
        l.derived(i),
        i.intersect(&l.center()).expect("same ambient"),
    ];
    out.extend(i.basis_vectors().into_iter().map(|v| l.ideal_closure([v])));
    out.retain(|j| !j.is_zero() && j.dim() < i.dim());
    out.sort_by_key(Subspace::dim);
    out
}

/// Descends from the ideal generated by each basis vector until none of
/// the brackets, the center or a principal ideal cuts it down further.
/// Each result is minimal among those candidates; over `Q` this does not
/// certify irreducibility.
pub fn minimal_ideals(l: &Algebra) -> Vec<QSubspace> {
    let n = l.dim();
    let mut found: Vec<QSubspace> = Vec::new();
    for k in 0..n {
        let mut i = l.ideal_closure([unit(n, k)]);
        if i.is_zero() {
            continue;
        }
        while let Some(j) = smaller_ideals(l, &i).into_iter().next() {
            i = j;
        }
        if !found.contains(&i) {
            found.push(i);
        }
    }
    found
}

pub fn no_semisimple_ideal_check(subject: &str, a: &Algebra) -> VerificationReport {
    let start = Instant::now();
    let claim = Claim::NoSemisimpleIdeals;
    let flags = a.classify();
    if flags.lie {
        return VerificationReport::new(claim.id(), subject, Status::Verified, "M is Lie, so R = M and M/R = 0")
            .timed(start);
    }
    if !flags.left_central {
        return skipped(claim, subject, "the algebra is not left central", start);
    }
    let radical = form_radical(a);
    let q = modulo_radical(a, &radical);
    let l = &q.algebra;
    let semisimple = largest_semisimple_ideal(l);
    let minimal = minimal_ideals(l);
    let abelian = minimal.iter().filter(|i| l.derived(i).is_zero()).count();
    let detail = format!(
        "descent found {} minimal ideal candidates of dimensions {:?}, {} abelian",
        minimal.len(),
        minimal.iter().map(Subspace::dim).collect::<Vec<_>>(),
        abelian
    );
    if semisimple.is_zero() {
        VerificationReport::new(
            claim.id(),
            subject,
            Status::Verified,
            format!(
                "dim M/R = {}; the centralizer of its solvable radical has solvable derived series",
                l.dim()
            ),
        )
        .detail(detail)
    } else {
        VerificationReport::new(
            claim.id(),
            subject,
            Status::Refuted,
            format!("M/R has a semisimple ideal of dimension {}", semisimple.dim()),
        )
        .detail(detail)
        .witness(Witness::subspace("preimage of the ideal", &q.preimage(&semisimple)))
    }
    .timed(start)
}
