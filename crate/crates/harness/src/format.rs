//! JSON structure-constant files.
//!
//! ```json
//! { "dim": 2, "field": "Q", "basis": ["e", "f"], "brackets": [[0, 0, [[1, "1"]]]] }
//! ```
//!
//! Omitted brackets are zero, indices are 0-based and coefficients are
//! rationals written `p` or `p/q`. Output is canonical: brackets sorted by
//! `(i, j)`, terms by `k`, zero terms dropped and fractions reduced.

use std::collections::BTreeMap;

use leibniz::linalg::Subspace;
use leibniz::scalar::parse_scalar;
use leibniz::{Algebra, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FIELD: &str = "Q";
pub const DEFAULT_MAX_DIM: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported field {0:?}, only \"Q\" is available")]
    UnsupportedField(String),
    #[error("basis lists {found} names for dimension {dim}")]
    BasisLength { dim: usize, found: usize },
    #[error("bracket index {index} is out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{0:?} is not a rational number")]
    BadRational(String),
    #[error("bracket [e{0} e{1}] is listed twice")]
    DuplicateBracket(usize, usize),
    #[error("bracket [e{i} e{j}] lists basis vector {k} twice")]
    DuplicateTerm { i: usize, j: usize, k: usize },
    #[error("dimension {dim} exceeds the limit {max}")]
    TooLarge { dim: usize, max: usize },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// `[i, j, [[k, "p/q"], …]]`: `[e_i e_j] = Σ c_k e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket(pub usize, pub usize, pub Vec<(usize, String)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub field: String,
    pub basis: Vec<String>,
    pub brackets: Vec<Bracket>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> Self {
        let n = a.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, String)> = a
                    .basis_bracket(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.to_string()))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(Bracket(i, j, terms));
                }
            }
        }
        Self {
            dim: n,
            field: FIELD.into(),
            basis: a.labels().to_vec(),
            brackets,
        }
    }

    pub fn to_algebra(&self, max_dim: usize) -> Result<Algebra, FormatError> {
        let n = self.dim;
        if n > max_dim {
            return Err(FormatError::TooLarge { dim: n, max: max_dim });
        }
        if self.field != FIELD {
            return Err(FormatError::UnsupportedField(self.field.clone()));
        }
        if self.basis.len() != n {
            return Err(FormatError::BasisLength {
                dim: n,
                found: self.basis.len(),
            });
        }
        let check = |index: usize| {
            if index < n {
                Ok(index)
            } else {
                Err(FormatError::IndexOutOfRange { index, dim: n })
            }
        };
        let mut table: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        for Bracket(i, j, terms) in &self.brackets {
            let (i, j) = (check(*i)?, check(*j)?);
            let mut v = vec![Q::zero(); n];
            let mut seen = vec![false; n];
            for (k, text) in terms {
                let k = check(*k)?;
                if std::mem::replace(&mut seen[k], true) {
                    return Err(FormatError::DuplicateTerm { i, j, k });
                }
                v[k] = parse_scalar(text).ok_or_else(|| FormatError::BadRational(text.clone()))?;
            }
            if table.insert((i, j), v).is_some() {
                return Err(FormatError::DuplicateBracket(i, j));
            }
        }
        let mut a = Algebra::abelian(n);
        for ((i, j), v) in table {
            a.set_bracket(i, j, &v);
        }
        Ok(a.with_labels(self.basis.clone()).expect("basis length checked"))
    }
}

pub fn algebra_to_json(a: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("plain data serializes")
}

pub fn algebra_from_json(text: &str, max_dim: usize) -> Result<Algebra, FormatError> {
    serde_json::from_str::<AlgebraFile>(text)?.to_algebra(max_dim)
}

/// Canonical text for each coordinate.
pub fn vector_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn parse_vector(v: &[String]) -> Result<Vec<Q>, FormatError> {
    v.iter()
        .map(|s| parse_scalar(s).ok_or_else(|| FormatError::BadRational(s.clone())))
        .collect()
}

pub fn subspace_strings(s: &Subspace<Q>) -> Vec<Vec<String>> {
    s.basis().row_vectors().map(vector_strings).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz::constructions::sl;

    const TWO_DIM: &str = r#"{"dim": 2, "field": "Q", "basis": ["e", "f"], "brackets": [[0, 0, [[1, "1"]]]]}"#;

    #[test]
    fn reads_the_two_dimensional_example() {
        let a = algebra_from_json(TWO_DIM, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), ["e", "f"]);
        assert_eq!(a.basis_bracket(0, 0)[1], Q::from_integer(1.into()));
        assert!(a.basis_bracket(1, 0).iter().all(Zero::is_zero));
    }

    #[test]
    fn output_is_canonical() {
        let text = r#"{"dim": 2, "field": "Q", "basis": ["a", "b"],
            "brackets": [[1, 1, [[0, "0"]]], [0, 1, [[1, "4/6"], [0, "-3"]]]]}"#;
        let a = algebra_from_json(text, DEFAULT_MAX_DIM).unwrap();
        let file = AlgebraFile::from_algebra(&a);
        assert_eq!(
            file.brackets,
            vec![Bracket(0, 1, vec![(0, "-3".into()), (1, "2/3".into())])]
        );
    }

    #[test]
    fn round_trip_is_exact() {
        let s = sl::<Q>(3);
        let text = algebra_to_json(&s);
        let back = algebra_from_json(&text, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(back, s);
        assert_eq!(algebra_to_json(&back), text);
    }

    #[test]
    fn malformed_inputs_are_named() {
        let cases = [
            (r#"{"dim": 2, "field": "R", "basis": ["a","b"], "brackets": []}"#, FormatError::UnsupportedField("R".into())),
            (r#"{"dim": 2, "field": "Q", "basis": ["a"], "brackets": []}"#, FormatError::BasisLength { dim: 2, found: 1 }),
            (r#"{"dim": 1, "field": "Q", "basis": ["a"], "brackets": [[0, 1, []]]}"#, FormatError::IndexOutOfRange { index: 1, dim: 1 }),
            (r#"{"dim": 1, "field": "Q", "basis": ["a"], "brackets": [[0, 0, [[0, "1/0"]]]]}"#, FormatError::BadRational("1/0".into())),
            (r#"{"dim": 1, "field": "Q", "basis": ["a"], "brackets": [[0, 0, []], [0, 0, []]]}"#, FormatError::DuplicateBracket(0, 0)),
        ];
        for (text, expected) in cases {
            assert_eq!(algebra_from_json(text, DEFAULT_MAX_DIM).unwrap_err(), expected);
        }
        assert_eq!(
            algebra_from_json(TWO_DIM, 1).unwrap_err(),
            FormatError::TooLarge { dim: 2, max: 1 }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = algebra_from_json("{\n  \"dim\": 2,\n  \"field\": }", DEFAULT_MAX_DIM).unwrap_err();
        match err {
            FormatError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
