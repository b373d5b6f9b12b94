use std::fmt;
use std::time::{Duration, Instant};

use leibniz::{Algebra, Law, QSubspace, Subspace, Violation, Q};
use serde::{Deserialize, Serialize};

use crate::format::{parse_vector, subspace_strings, vector_strings, FormatError};

/// Ordered by severity, so the worst of several is their maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Skipped,
    FieldLimited,
    Refuted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified | Status::Skipped => 0,
            Status::Refuted => 1,
            Status::FieldLimited => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Skipped => "skipped",
            Status::FieldLimited => "field-limited",
            Status::Refuted => "refuted",
        })
    }
}

/// Exact data backing a report; coordinates are canonical rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Vector {
        name: String,
        coords: Vec<String>,
    },
    Subspace {
        name: String,
        ambient: usize,
        basis: Vec<Vec<String>>,
    },
    Triple {
        law: String,
        a: Vec<String>,
        b: Vec<String>,
        c: Vec<String>,
    },
    Trace {
        name: String,
        values: Vec<usize>,
    },
}

fn law_name(law: Law) -> &'static str {
    match law {
        Law::LeftLeibniz => "left-leibniz",
        Law::RightLeibniz => "right-leibniz",
        Law::LeftCentral => "left-central",
        Law::Lie => "lie",
        Law::Associativity => "associativity",
    }
}

fn law_from_name(s: &str) -> Option<Law> {
    [Law::LeftLeibniz, Law::RightLeibniz, Law::LeftCentral, Law::Lie, Law::Associativity]
        .into_iter()
        .find(|&l| law_name(l) == s)
}

impl Witness {
    pub fn vector(name: impl Into<String>, v: &[Q]) -> Self {
        Witness::Vector {
            name: name.into(),
            coords: vector_strings(v),
        }
    }

    pub fn subspace(name: impl Into<String>, s: &QSubspace) -> Self {
        Witness::Subspace {
            name: name.into(),
            ambient: s.ambient_dim(),
            basis: subspace_strings(s),
        }
    }

    pub fn violation(v: &Violation<Q>) -> Self {
        Witness::Triple {
            law: law_name(v.law).into(),
            a: vector_strings(&v.a),
            b: vector_strings(&v.b),
            c: vector_strings(&v.c),
        }
    }

    pub fn trace(name: impl Into<String>, values: Vec<usize>) -> Self {
        Witness::Trace {
            name: name.into(),
            values,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Witness::Vector { name, .. } | Witness::Subspace { name, .. } | Witness::Trace { name, .. } => name,
            Witness::Triple { law, .. } => law,
        }
    }

    pub fn to_violation(&self) -> Option<Result<Violation<Q>, FormatError>> {
        let Witness::Triple { law, a, b, c } = self else {
            return None;
        };
        let law = law_from_name(law)?;
        Some((|| {
            Ok(Violation {
                law,
                a: parse_vector(a)?,
                b: parse_vector(b)?,
                c: parse_vector(c)?,
            })
        })())
    }

    pub fn to_subspace(&self) -> Option<Result<QSubspace, FormatError>> {
        let Witness::Subspace { ambient, basis, .. } = self else {
            return None;
        };
        Some(
            basis
                .iter()
                .map(|v| parse_vector(v))
                .collect::<Result<Vec<_>, _>>()
                .map(|rows| Subspace::span(*ambient, rows)),
        )
    }

    /// Re-evaluates a violation triple; `Some(true)` when it still fails.
    pub fn replays_on(&self, a: &Algebra) -> Option<bool> {
        let v = self.to_violation()?.ok()?;
        Some(a.replay(&v).iter().any(|x| !num_traits::Zero::is_zero(x)))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vector { name, coords } => write!(f, "{name} = ({})", coords.join(", ")),
            Witness::Subspace { name, basis, .. } => {
                let rows: Vec<String> = basis.iter().map(|r| format!("({})", r.join(", "))).collect();
                write!(f, "{name} = span[{}]", rows.join(", "))
            }
            Witness::Triple { law, a, b, c } => write!(
                f,
                "{law} fails on a = ({}), b = ({}), c = ({})",
                a.join(", "),
                b.join(", "),
                c.join(", ")
            ),
            Witness::Trace { name, values } => {
                let v: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "{name}: {}", v.join(" -> "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub subject: String,
    pub status: Status,
    pub summary: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    pub elapsed_us: u64,
}

impl VerificationReport {
    pub fn new(claim: &str, subject: &str, status: Status, summary: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            subject: subject.into(),
            status,
            summary: summary.into(),
            details: Vec::new(),
            witnesses: Vec::new(),
            elapsed_us: 0,
        }
    }

    pub fn detail(mut self, line: impl Into<String>) -> Self {
        self.details.push(line.into());
        self
    }

    pub fn witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_us = u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX);
        self
    }

    pub fn elapsed(&self) -> Duration {
        Duration::from_micros(self.elapsed_us)
    }

    /// The report with timing cleared, for comparing runs.
    pub fn untimed(&self) -> Self {
        Self {
            elapsed_us: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} on {}: {} ({:.1} ms)",
            self.status,
            self.claim,
            self.subject,
            self.summary,
            self.elapsed_us as f64 / 1000.0
        )?;
        for d in &self.details {
            write!(f, "\n    {d}")?;
        }
        for w in &self.witnesses {
            write!(f, "\n    witness {w}")?;
        }
        Ok(())
    }
}

pub fn worst(reports: &[VerificationReport]) -> Status {
    reports.iter().map(|r| r.status).max().unwrap_or(Status::Verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz::constructions::{hemisemidirect, natural_module, sl};
    use leibniz::pairing::check_associative;

    #[test]
    fn severity_order() {
        assert!(Status::Refuted > Status::FieldLimited);
        assert!(Status::FieldLimited > Status::Skipped);
        assert_eq!(Status::Skipped.exit_code(), 0);
        assert_eq!(Status::FieldLimited.exit_code(), 2);
    }

    #[test]
    fn triple_witness_round_trips_and_replays() {
        let m = hemisemidirect(&sl::<Q>(2), &natural_module(2)).unwrap();
        let v = check_associative(&m).unwrap();
        let w = Witness::violation(&v);
        let json = serde_json::to_string(&w).unwrap();
        let back: Witness = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_violation().unwrap().unwrap(), v);
        assert_eq!(back.replays_on(&m), Some(true));
    }

    #[test]
    fn subspace_witness_round_trips() {
        let s = Subspace::coordinate(4, [1, 3]);
        let w = Witness::subspace("L", &s);
        assert_eq!(w.to_subspace().unwrap().unwrap(), s);
        assert_eq!(w.to_string(), "L = span[(0, 1, 0, 0), (0, 0, 0, 1)]");
    }
}
