//! Named algebras, their recipes and the on-disk entry format.

use std::collections::BTreeMap;

use leibniz::constructions::{
    cotangent_quintuple, stray_sl2_example, adjoint_hemisemidirect, hemisemidirect, heisenberg_quintuple, m_construct,
    m_tilde, minimal_quintuple, natural_module, sl, twist_quintuple,
};
use leibniz::linalg::unit;
use leibniz::pairing::form_radical;
use leibniz::{Algebra, QQuintuple, Scalar, Q};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::format::{AlgebraFile, FormatError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Recipe(String),
    Literal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub id: String,
    pub algebra: Algebra,
    pub provenance: Provenance,
    pub expected: BTreeMap<String, Value>,
}

#[derive(Serialize, Deserialize)]
struct EntryFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    #[serde(flatten)]
    algebra: AlgebraFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    expected: BTreeMap<String, Value>,
}

impl CorpusEntry {
    pub fn literal(id: impl Into<String>, algebra: Algebra) -> Self {
        Self {
            id: id.into(),
            algebra,
            provenance: Provenance::Literal,
            expected: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let file = EntryFile {
            id: Some(self.id.clone()),
            algebra: AlgebraFile::from_algebra(&self.algebra),
            provenance: Some(self.provenance.clone()),
            expected: self.expected.clone(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }

    /// Parses an entry; a missing `id` becomes `default_id`.
    pub fn from_json(text: &str, default_id: &str, max_dim: usize) -> Result<Self, FormatError> {
        let file: EntryFile = serde_json::from_str(text)?;
        Ok(Self {
            id: file.id.unwrap_or_else(|| default_id.to_string()),
            algebra: file.algebra.to_algebra(max_dim)?,
            provenance: file.provenance.unwrap_or(Provenance::Literal),
            expected: file.expected,
        })
    }

    /// Recomputes every recorded expectation; returns `(key, expected, found)`
    /// for those that differ or are unknown.
    pub fn mismatches(&self) -> Vec<(String, Value, Value)> {
        self.expected
            .iter()
            .filter_map(|(k, v)| {
                let found = observe(&self.algebra, k).unwrap_or(Value::Null);
                (found != *v).then(|| (k.clone(), v.clone(), found))
            })
            .collect()
    }
}

fn observe(a: &Algebra, key: &str) -> Option<Value> {
    Some(match key {
        "level" => a.classify().level().into(),
        "rank" => a.rank().into(),
        "radical-dim" => form_radical(a).dim().into(),
        "solvable-radical-dim" => a.solvable_radical().dim().into(),
        "center-dim" => a.center().dim().into(),
        _ => return None,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecipeError {
    #[error("unknown recipe {0:?}")]
    Unknown(String),
    #[error("recipe {name:?} needs a parameter in {range}")]
    Parameter { name: String, range: &'static str },
    #[error("construction failed: {0}")]
    Construction(#[from] leibniz::Error),
}

/// `[e_i e_i] = z` for `i < k`, all other brackets zero; the trace form on
/// `M/R` is the sum of `k` squares.
pub fn squares(k: usize) -> Algebra {
    let mut a = Algebra::abelian(k + 1);
    for i in 0..k {
        a.set_bracket(i, i, &unit(k + 1, k));
    }
    let labels = (0..k).map(|i| format!("a{i}")).chain(["z".into()]).collect();
    a.with_labels(labels).expect("one label per basis vector")
}

/// `[e e] = f`.
pub fn two_dim() -> Algebra {
    let mut a = Algebra::abelian(2);
    a.set_bracket(0, 0, &unit(2, 1));
    a.with_labels(vec!["e".into(), "f".into()]).expect("two labels")
}

/// `[x y] = y = -[y x]`.
pub fn solvable_xy() -> Algebra {
    let mut a = Algebra::abelian(2);
    a.set_bracket(0, 1, &unit(2, 1));
    a.set_bracket(1, 0, &[Q::from_i64(0), Q::from_i64(-1)]);
    a.with_labels(vec!["x".into(), "y".into()]).expect("two labels")
}

pub const RECIPES: &[&str] = &[
    "abelian:N",
    "sl:N",
    "squares:K",
    "two-dim",
    "two-dim-squared",
    "solvable-xy",
    "sl2-natural",
    "sl2-adjoint",
    "sl3-sym2",
    "minimal-m",
    "minimal",
    "twist",
    "heisenberg",
    "cotangent-xy",
    "cotangent-sl2",
];

/// The valid quintuples shipped with the corpus.
pub fn quintuples() -> Vec<(&'static str, QQuintuple)> {
    vec![
        ("minimal", minimal_quintuple()),
        ("twist", twist_quintuple()),
        ("heisenberg", heisenberg_quintuple()),
        ("cotangent-xy", cotangent_quintuple(&solvable_xy()).expect("coadjoint action")),
        ("cotangent-sl2", cotangent_quintuple(&sl(2)).expect("coadjoint action")),
    ]
}

pub fn quintuple(name: &str) -> Option<QQuintuple> {
    quintuples().into_iter().find(|(n, _)| *n == name).map(|(_, q)| q)
}

pub fn build(recipe: &str) -> Result<Algebra, RecipeError> {
    let (name, param) = match recipe.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (recipe, None),
    };
    let numeric = |range: &'static str, min: usize| {
        param
            .and_then(|p| p.parse::<usize>().ok())
            .filter(|&n| n >= min)
            .ok_or(RecipeError::Parameter {
                name: name.to_string(),
                range,
            })
    };
    if let Some(q) = quintuple(name) {
        return Ok(m_tilde(&q)?.algebra);
    }
    Ok(match name {
        "abelian" => Algebra::abelian(numeric("1..", 1)?),
        "sl" => sl(numeric("2..", 2)?),
        "squares" => squares(numeric("1..", 1)?),
        "two-dim" => two_dim(),
        "two-dim-squared" => two_dim().orthogonal_sum(&two_dim()),
        "solvable-xy" => solvable_xy(),
        "sl2-natural" => hemisemidirect(&sl(2), &natural_module(2))?,
        "sl2-adjoint" => adjoint_hemisemidirect(&sl(2))?,
        "sl3-sym2" => stray_sl2_example::<Q>()?.algebra,
        "minimal-m" => m_construct(&minimal_quintuple())?,
        _ => return Err(RecipeError::Unknown(recipe.to_string())),
    })
}

pub fn from_recipe(id: &str, recipe: &str) -> Result<CorpusEntry, RecipeError> {
    Ok(CorpusEntry {
        id: id.to_string(),
        algebra: build(recipe)?,
        provenance: Provenance::Recipe(recipe.to_string()),
        expected: BTreeMap::new(),
    })
}

fn expect(entry: CorpusEntry, pairs: &[(&str, usize)]) -> CorpusEntry {
    let mut entry = entry;
    for (k, v) in pairs {
        entry.expected.insert((*k).to_string(), (*v).into());
    }
    entry
}

type Row = (&'static str, &'static str, &'static [(&'static str, usize)]);

/// The shipped corpus with recorded levels, ranks and radical dimensions.
pub fn builtin() -> Vec<CorpusEntry> {
    let table: &[Row] = &[
        ("abelian-3", "abelian:3", &[("level", 4), ("rank", 0)]),
        ("sl2", "sl:2", &[("level", 4), ("rank", 0), ("solvable-radical-dim", 0)]),
        ("solvable-xy", "solvable-xy", &[("level", 4), ("rank", 0), ("solvable-radical-dim", 2)]),
        ("two-dim", "two-dim", &[("level", 3), ("rank", 1), ("radical-dim", 1)]),
        ("two-dim-squared", "two-dim-squared", &[("level", 3), ("rank", 2), ("radical-dim", 2)]),
        ("sum-of-two-squares", "squares:2", &[("level", 3), ("rank", 1), ("radical-dim", 1)]),
        ("sum-of-three-squares", "squares:3", &[("level", 3), ("rank", 1), ("radical-dim", 1)]),
        ("sl2-natural", "sl2-natural", &[("level", 1), ("rank", 2)]),
        ("sl2-adjoint", "sl2-adjoint", &[("level", 1), ("rank", 3)]),
        ("sl3-sym2", "sl3-sym2", &[("level", 1), ("rank", 6), ("solvable-radical-dim", 6)]),
        ("minimal-m", "minimal-m", &[("level", 3), ("rank", 1), ("radical-dim", 2)]),
        ("minimal", "minimal", &[("level", 3), ("rank", 1), ("radical-dim", 1)]),
        ("twist", "twist", &[("level", 3), ("rank", 1), ("radical-dim", 1)]),
        ("heisenberg", "heisenberg", &[("level", 3), ("rank", 1), ("radical-dim", 1)]),
        ("cotangent-xy", "cotangent-xy", &[("level", 2), ("rank", 1), ("radical-dim", 1)]),
        ("cotangent-sl2", "cotangent-sl2", &[("level", 2), ("rank", 1), ("radical-dim", 1)]),
    ];
    table
        .iter()
        .map(|(id, recipe, pairs)| expect(from_recipe(id, recipe).expect("shipped recipes build"), pairs))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::DEFAULT_MAX_DIM;

    #[test]
    fn builtin_expectations_hold() {
        for e in builtin() {
            assert!(e.mismatches().is_empty(), "{}: {:?}", e.id, e.mismatches());
        }
    }

    #[test]
    fn entries_round_trip() {
        for e in builtin() {
            let text = e.to_json();
            let back = CorpusEntry::from_json(&text, "unused", DEFAULT_MAX_DIM).unwrap();
            assert_eq!(back, e);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn recipes_report_bad_parameters() {
        assert_eq!(
            build("sl:1").unwrap_err(),
            RecipeError::Parameter {
                name: "sl".into(),
                range: "2.."
            }
        );
        assert!(matches!(build("octonions"), Err(RecipeError::Unknown(_))));
        assert_eq!(build("sl:3").unwrap().dim(), 8);
    }

    #[test]
    fn unknown_expectation_is_a_mismatch() {
        let mut e = CorpusEntry::literal("x", two_dim());
        e.expected.insert("colour".into(), "blue".into());
        assert_eq!(e.mismatches().len(), 1);
    }
}
