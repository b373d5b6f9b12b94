//! One driver per structural claim; each returns a [`VerificationReport`].

mod decompose;
mod hierarchy;
mod ideals;
mod maximal;
mod nilpotent;
mod pairing;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use leibniz::pairing::{trace_form, HyperbolicSplitting};
use leibniz::{Algebra, QSubspace, ScalarForm, Subspace, Q};

pub use decompose::{decompose, quintuple_decomposition, DecomposeError, Decomposition};
pub use hierarchy::{hierarchy_witnesses, HierarchyWitnesses, HIERARCHY_CLAIM};
pub use ideals::{largest_semisimple_ideal, minimal_ideals, no_semisimple_ideal_check};
pub use maximal::{maximal_lie_sample, verify_maximal_intersection, Sample};
pub use nilpotent::{construct_nilpotent_lagrangian, nilpotent_lagrangian, Construction, ConstructionError};
pub use pairing::{
    associativity, b_perp_check, isotropic_ideal_check, isotropic_ideal_sweep, lie_subalgebra_equivalences,
    lie_subalgebra_sweep, symmetric_criterion,
};

use crate::report::{Status, VerificationReport};

/// The claims a driver can check, under frozen command-line ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Associativity,
    LieSubalgebras,
    IsotropicIdeals,
    NoSemisimpleIdeals,
    MaximalIntersection,
    RadicalPerp,
    NilpotentLagrangian,
    SymmetricCriterion,
    QuintupleDecomposition,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::Associativity,
        Claim::LieSubalgebras,
        Claim::IsotropicIdeals,
        Claim::NoSemisimpleIdeals,
        Claim::MaximalIntersection,
        Claim::RadicalPerp,
        Claim::NilpotentLagrangian,
        Claim::SymmetricCriterion,
        Claim::QuintupleDecomposition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Associativity => "lemma-4.1",
            Claim::LieSubalgebras => "lemma-4.2",
            Claim::IsotropicIdeals => "lemma-4.3",
            Claim::NoSemisimpleIdeals => "lemma-4.5",
            Claim::MaximalIntersection => "prop-4.1",
            Claim::RadicalPerp => "lemma-4.6",
            Claim::NilpotentLagrangian => "thm-5.1",
            Claim::SymmetricCriterion => "lemma-6.1",
            Claim::QuintupleDecomposition => "thm-6.3",
        }
    }

    /// Descriptive alias accepted wherever the id is.
    pub fn alias(self) -> &'static str {
        match self {
            Claim::Associativity => "psi-associativity",
            Claim::LieSubalgebras => "lie-subalgebras",
            Claim::IsotropicIdeals => "isotropic-ideals",
            Claim::NoSemisimpleIdeals => "no-semisimple-ideals",
            Claim::MaximalIntersection => "maximal-intersection",
            Claim::RadicalPerp => "radical-perp",
            Claim::NilpotentLagrangian => "nilpotent-lagrangian",
            Claim::SymmetricCriterion => "symmetric-criterion",
            Claim::QuintupleDecomposition => "quintuple-decomposition",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::Associativity => "psi([ab], c) = psi(a, [bc]) on a left central algebra",
            Claim::LieSubalgebras => "for closed L: L Lie <=> L totally isotropic <=> L + R Lie",
            Claim::IsotropicIdeals => "a totally isotropic ideal U is Lie with U' inside R",
            Claim::NoSemisimpleIdeals => "M/R has no nonzero semisimple ideal",
            Claim::MaximalIntersection => "R is the intersection of the maximal Lie subalgebras",
            Claim::RadicalPerp => "B^perp lies in B, where B/R is the solvable radical of M/R",
            Claim::NilpotentLagrangian => "some maximal isotropic L has L/R nilpotent and L inside B",
            Claim::SymmetricCriterion => "M symmetric <=> M' inside R",
            Claim::QuintupleDecomposition => "a symmetric rank-one M has an ideal of codim <= 1 built from a quintuple",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownClaim(pub String);

impl fmt::Display for UnknownClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = Claim::ALL.iter().map(|c| c.id()).collect();
        write!(f, "unknown claim {:?}; known ids: {}", self.0, ids.join(", "))
    }
}

impl std::error::Error for UnknownClaim {}

impl FromStr for Claim {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s || c.alias() == s)
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

/// Seeds and budgets for the randomized drivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { seed: 7, trials: 20 }
    }
}

/// Runs `claim` on `a` with every candidate the driver generates itself.
pub fn run(claim: Claim, subject: &str, a: &Algebra, opts: Options) -> VerificationReport {
    match claim {
        Claim::Associativity => associativity(subject, a),
        Claim::LieSubalgebras => lie_subalgebra_sweep(subject, a),
        Claim::IsotropicIdeals => isotropic_ideal_sweep(subject, a),
        Claim::NoSemisimpleIdeals => no_semisimple_ideal_check(subject, a),
        Claim::MaximalIntersection => verify_maximal_intersection(subject, a, opts),
        Claim::RadicalPerp => b_perp_check(subject, a),
        Claim::NilpotentLagrangian => nilpotent_lagrangian(subject, a),
        Claim::SymmetricCriterion => symmetric_criterion(subject, a),
        Claim::QuintupleDecomposition => quintuple_decomposition(subject, a),
    }
}

pub fn run_all(subject: &str, a: &Algebra, opts: Options) -> Vec<VerificationReport> {
    Claim::ALL.into_iter().map(|c| run(c, subject, a, opts)).collect()
}

/// The trace form of a left central rank-one algebra with its splitting.
pub(crate) struct RankOne {
    pub form: ScalarForm<Q>,
    pub radical: QSubspace,
    pub split: HyperbolicSplitting<Q>,
}

impl RankOne {
    /// A left central algebra of rank one, or the reason it is not.
    pub fn of(a: &Algebra) -> Result<Self, String> {
        if !a.classify().left_central {
            return Err("the algebra is not left central".into());
        }
        let form = trace_form(a).map_err(|_| format!("rank is {}, not 1", a.rank()))?;
        let split = form.hyperbolic_splitting(&Subspace::full(a.dim()));
        Ok(Self {
            radical: split.radical.clone(),
            form,
            split,
        })
    }

    /// Witt index `⌊dim(M/R)/2⌋` is attained over the rationals.
    pub fn is_split(&self) -> bool {
        self.split.remainder.dim() <= 1
    }

    /// `dim R + witt index`, the dimension of a maximal isotropic subspace.
    pub fn lagrangian_dim(&self) -> usize {
        self.radical.dim() + self.split.witt_index()
    }

    pub fn field_limited(&self, claim: Claim, subject: &str, start: Instant) -> VerificationReport {
        VerificationReport::new(
            claim.id(),
            subject,
            Status::FieldLimited,
            format!(
                "the trace form does not split over Q: anisotropic remainder of dimension {}",
                self.split.remainder.dim()
            ),
        )
        .timed(start)
    }
}

pub(crate) fn skipped(claim: Claim, subject: &str, why: impl Into<String>, start: Instant) -> VerificationReport {
    VerificationReport::new(claim.id(), subject, Status::Skipped, format!("hypothesis fails: {}", why.into()))
        .timed(start)
}

/// `M/R` for the form radical `R`, as a Lie algebra with its projection.
pub(crate) fn modulo_radical(a: &Algebra, radical: &QSubspace) -> leibniz::Quotient<Q> {
    a.quotient_map(radical).expect("the form radical of a left central algebra is an ideal")
}

/// The preimage in `M` of the solvable radical of `M/R`.
pub(crate) fn radical_preimage(a: &Algebra, radical: &QSubspace) -> QSubspace {
    let q = modulo_radical(a, radical);
    q.preimage(&q.algebra.solvable_radical())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_aliases_parse() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>(), Ok(c));
            assert_eq!(c.alias().parse::<Claim>(), Ok(c));
        }
        assert!("lemma-9.9".parse::<Claim>().is_err());
    }
}
