//! The algebra file format.
//!
//! A JSON object with fields `dim_even`, `dim_odd`, optional `names`, and
//! `brackets`: a list of `{"i": .., "j": .., "coeffs": [[k, "p/q"], ..]}`
//! objects. Indices are 1-based with `i <= j`; unlisted pairs are zero.
//! The serializer is canonical: brackets sorted by `(i, j)`, coefficients by
//! `k`, rationals in lowest terms, so dump/parse round-trips are bit-exact.

use super::{LieSuperAlgebra, Violation};
use crate::exactmath::{format_rational, parse_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    dim_even: usize,
    dim_odd: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    brackets: Vec<BracketEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    coeffs: Vec<(usize, String)>,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("bracket entry ({i}, {j}): {reason}")]
    BadEntry { i: usize, j: usize, reason: String },
    #[error("names list has {got} entries, expected {expected}")]
    BadNames { expected: usize, got: usize },
    #[error("algebra axiom violated: {0}")]
    Invalid(#[from] Violation),
}

/// Structural parse only; axioms are not checked.
pub fn read_algebra_str(text: &str) -> Result<LieSuperAlgebra, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = file.dim_even + file.dim_odd;
    if let Some(names) = &file.names {
        if names.len() != n {
            return Err(FormatError::BadNames { expected: n, got: names.len() });
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut entries = Vec::new();
    for entry in &file.brackets {
        let bad = |reason: String| FormatError::BadEntry { i: entry.i, j: entry.j, reason };
        if entry.i == 0 || entry.j == 0 || entry.i > n || entry.j > n {
            return Err(bad(format!("indices must be in 1..={n}")));
        }
        if entry.i > entry.j {
            return Err(bad("indices must satisfy i <= j".to_string()));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(bad("duplicate pair".to_string()));
        }
        let mut coeffs = vec![Rational::zero(); n];
        let mut seen_k = std::collections::BTreeSet::new();
        for (k, value) in &entry.coeffs {
            if *k == 0 || *k > n {
                return Err(bad(format!("coefficient index {k} out of 1..={n}")));
            }
            if !seen_k.insert(*k) {
                return Err(bad(format!("duplicate coefficient index {k}")));
            }
            coeffs[*k - 1] =
                parse_rational(value).map_err(|e| bad(format!("coefficient {k}: {e}")))?;
        }
        entries.push(((entry.i - 1, entry.j - 1), coeffs));
    }
    LieSuperAlgebra::new(file.dim_even, file.dim_odd, file.names.clone(), entries)
        .map_err(|e| FormatError::BadEntry { i: 0, j: 0, reason: e.to_string() })
}

/// Parse and validate.
pub fn parse_algebra_str(text: &str) -> Result<LieSuperAlgebra, FormatError> {
    let g = read_algebra_str(text)?;
    g.validate()?;
    Ok(g)
}

/// Parse and validate a file.
pub fn parse_algebra_file(path: &Path) -> Result<LieSuperAlgebra, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FormatError::Io { path: path.display().to_string(), source: e })?;
    parse_algebra_str(&text)
}

/// Canonical serialization: pairs normalized to `i <= j`, sorted by
/// `(i, j)`, coefficients sorted by `k`, rationals in lowest terms.
pub fn to_canonical_json(g: &LieSuperAlgebra) -> String {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i..n {
            let coeffs = g.bracket_basis(i, j);
            let sparse: Vec<(usize, String)> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k + 1, format_rational(c)))
                .collect();
            if !sparse.is_empty() {
                brackets.push(BracketEntry { i: i + 1, j: j + 1, coeffs: sparse });
            }
        }
    }
    let file = AlgebraFile {
        dim_even: g.dim_even(),
        dim_odd: g.dim_odd(),
        names: Some(g.basis_names().to_vec()),
        brackets,
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}
