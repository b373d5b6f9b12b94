use std::time::Instant;

use crate::corpus::{from_recipe, CorpusEntry};
use crate::report::{Status, VerificationReport, Witness};

pub const HIERARCHY_CLAIM: &str = "hierarchy";

/// One algebra per level of Lie ⊂ symmetric ⊂ left central ⊂ left Leibniz.
pub struct HierarchyWitnesses {
    pub entries: Vec<CorpusEntry>,
    pub report: VerificationReport,
}

const LEVELS: [(&str, &str, u8); 4] = [
    ("lie", "sl:2", 4),
    ("symmetric", "two-dim", 3),
    ("left-central", "cotangent-xy", 2),
    ("left-leibniz", "sl2-natural", 1),
];

pub fn hierarchy_witnesses() -> HierarchyWitnesses {
    let start = Instant::now();
    let mut entries = Vec::new();
    let mut levels = Vec::new();
    let mut report_lines = Vec::new();
    let mut witnesses = Vec::new();
    let mut consistent = true;
    for (id, recipe, _) in LEVELS {
        let mut e = from_recipe(id, recipe).expect("shipped recipes build");
        let flags = e.algebra.classify();
        consistent &= flags.hierarchy_consistent();
        let level = flags.level();
        levels.push(level);
        e.expected.insert("level".into(), level.into());
        report_lines.push(format!(
            "{id} ({recipe}, dim {}): level {level}, lie {}, symmetric {}, left central {}, left Leibniz {}",
            e.algebra.dim(),
            flags.lie,
            flags.symmetric,
            flags.left_central,
            flags.left_leibniz
        ));
        if let Some(v) = &flags.witness {
            witnesses.push(Witness::violation(v));
        }
        entries.push(e);
    }
    let expected: Vec<u8> = LEVELS.iter().map(|l| l.2).collect();
    let ok = consistent && levels == expected;
    let mut report = VerificationReport::new(
        HIERARCHY_CLAIM,
        "witness",
        if ok { Status::Verified } else { Status::Refuted },
        format!("levels {levels:?}, each one step below the previous"),
    );
    report.details = report_lines;
    report.witnesses = witnesses;
    HierarchyWitnesses {
        entries,
        report: report.timed(start),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_strict_levels_with_replaying_witnesses() {
        let h = hierarchy_witnesses();
        assert_eq!(h.report.status, Status::Verified, "{}", h.report);
        assert_eq!(h.entries.len(), 4);
        // the Lie algebra has no failing law; the other three each carry one
        assert_eq!(h.report.witnesses.len(), 3);
        for (w, e) in h.report.witnesses.iter().zip(&h.entries[1..]) {
            assert_eq!(w.replays_on(&e.algebra), Some(true));
        }
    }
}
