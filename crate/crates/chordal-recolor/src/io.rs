//! File formats: colorings as JSON arrays, sequences as JSON lines.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::RecolorStep;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("sequence is missing its metadata line")]
    MissingMetadata,
}

/// Trailing line of a sequence file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SequenceMeta {
    pub length: usize,
    pub max_per_vertex: u32,
    pub omega: usize,
    pub delta: usize,
    pub k: usize,
}

pub fn parse_coloring(text: &str) -> Result<Vec<u32>, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

pub fn coloring_to_json(coloring: &[u32]) -> String {
    serde_json::to_string(coloring).expect("coloring serializes")
}

pub fn write_sequence(steps: &[RecolorStep], meta: &SequenceMeta) -> String {
    let mut out = String::with_capacity(steps.len() * 24 + 96);
    for s in steps {
        out.push_str(&serde_json::to_string(s).expect("step serializes"));
        out.push('\n');
    }
    out.push_str(&serde_json::to_string(meta).expect("metadata serializes"));
    out.push('\n');
    out
}

/// Parses step lines followed by one metadata line.
pub fn parse_sequence(text: &str) -> Result<(Vec<RecolorStep>, SequenceMeta), FormatError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let Some(&(last_no, last)) = lines.last() else {
        return Err(FormatError::MissingMetadata);
    };
    let parse_err = |line: usize, e: serde_json::Error| FormatError::Parse {
        line: line + 1,
        msg: e.to_string(),
    };
    let meta: SequenceMeta = serde_json::from_str(last).map_err(|e| {
        if serde_json::from_str::<RecolorStep>(last).is_ok() {
            FormatError::MissingMetadata
        } else {
            parse_err(last_no, e)
        }
    })?;
    let steps = lines[..lines.len() - 1]
        .iter()
        .map(|&(no, l)| serde_json::from_str(l).map_err(|e| parse_err(no, e)))
        .collect::<Result<Vec<RecolorStep>, _>>()?;
    Ok((steps, meta))
}
