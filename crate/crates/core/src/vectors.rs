//! Plain-text decision vectors: one vector per line, values separated by
//! commas and/or whitespace, `#` starts a comment. Blank lines are skipped.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: cannot parse {token:?} as a number")]
pub struct VectorParseError {
    pub line: usize,
    pub token: String,
}

/// Parses one line; `Ok(None)` for blank or comment-only lines.
pub fn parse_line(text: &str, line: usize) -> Result<Option<Vec<f64>>, VectorParseError> {
    let body = text.split('#').next().unwrap_or("");
    let values = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| VectorParseError { line, token: t.to_string() }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((!values.is_empty()).then_some(values))
}

pub fn parse_vectors(text: &str) -> Result<Vec<Vec<f64>>, VectorParseError> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if let Some(v) = parse_line(line, k + 1)? {
            out.push(v);
        }
    }
    Ok(out)
}
