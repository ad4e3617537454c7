//! Independent replay of a recoloring sequence.

use serde::Serialize;

use crate::engine::RecolorStep;
use crate::graph_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub ok: bool,
    /// Index of the first bad step; equals the length when only the endpoint differs.
    pub failure_index: Option<usize>,
    pub failure_reason: Option<String>,
    pub length: usize,
    pub per_vertex_counts: Vec<u32>,
    pub max_per_vertex: u32,
}

/// Replays `seq` from `start` and checks every intermediate coloring is proper
/// with colors in `1..=k`, ending at `end`.
pub fn verify_sequence(
    g: &Graph,
    start: &[u32],
    seq: &[RecolorStep],
    end: &[u32],
    k: usize,
) -> VerifyReport {
    let n = g.n();
    let mut counts = vec![0u32; n];
    let fail = |idx: usize, why: String, counts: Vec<u32>| {
        let max = counts.iter().copied().max().unwrap_or(0);
        VerifyReport {
            ok: false,
            failure_index: Some(idx),
            failure_reason: Some(why),
            length: seq.len(),
            per_vertex_counts: counts,
            max_per_vertex: max,
        }
    };
    if start.len() != n || end.len() != n {
        return fail(0, "coloring length differs from vertex count".into(), counts);
    }
    let mut cur = start.to_vec();
    for (i, st) in seq.iter().enumerate() {
        if st.v >= n {
            return fail(i, format!("vertex {} out of range", st.v), counts);
        }
        if cur[st.v] != st.from {
            return fail(
                i,
                format!("vertex {} has color {}, step says {}", st.v, cur[st.v], st.from),
                counts,
            );
        }
        if st.to == 0 || st.to as usize > k {
            return fail(i, format!("color {} outside 1..={k}", st.to), counts);
        }
        if let Some(&w) = g.neighbors(st.v).iter().find(|&&w| cur[w] == st.to) {
            return fail(
                i,
                format!("vertex {} takes color {} held by neighbor {w}", st.v, st.to),
                counts,
            );
        }
        cur[st.v] = st.to;
        counts[st.v] += 1;
    }
    if cur != end {
        let v = (0..n).find(|&v| cur[v] != end[v]).unwrap_or(0);
        return fail(
            seq.len(),
            format!("final color of vertex {v} is {}, expected {}", cur[v], end[v]),
            counts,
        );
    }
    let max = counts.iter().copied().max().unwrap_or(0);
    VerifyReport {
        ok: true,
        failure_index: None,
        failure_reason: None,
        length: seq.len(),
        per_vertex_counts: counts,
        max_per_vertex: max,
    }
}

/// Length, per-vertex counts and their maximum.
pub fn recolor_stats(n: usize, seq: &[RecolorStep]) -> (usize, Vec<u32>, u32) {
    let mut counts = vec![0u32; n];
    for s in seq {
        if s.v < n {
            counts[s.v] += 1;
        }
    }
    let max = counts.iter().copied().max().unwrap_or(0);
    (seq.len(), counts, max)
}
