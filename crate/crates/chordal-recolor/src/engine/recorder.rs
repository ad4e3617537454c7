use serde::{Deserialize, Serialize};

use crate::graph_core::Graph;

use super::EngineError;

/// One recoloring: vertex `v` changes from color `from` to color `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecolorStep {
    pub v: usize,
    pub from: u32,
    pub to: u32,
}

impl RecolorStep {
    pub fn inverse(self) -> Self {
        RecolorStep {
            v: self.v,
            from: self.to,
            to: self.from,
        }
    }
}

/// Working coloring plus the log of every recoloring applied to it.
pub(crate) struct Recorder<'g> {
    g: &'g Graph,
    pub coloring: Vec<u32>,
    pub steps: Vec<RecolorStep>,
    pub per_vertex: Vec<u32>,
    canon: Vec<u32>,
    comp: Vec<usize>,
    off_canon: Vec<usize>,
    check: bool,
}

impl<'g> Recorder<'g> {
    pub fn new(g: &'g Graph, start: &[u32], canon: &[u32], check: bool) -> Self {
        let comps = g.components();
        let mut comp = vec![0; g.n()];
        let mut off_canon = vec![0; comps.len()];
        for (i, members) in comps.iter().enumerate() {
            for &v in members {
                comp[v] = i;
                if start[v] != canon[v] {
                    off_canon[i] += 1;
                }
            }
        }
        Recorder {
            g,
            coloring: start.to_vec(),
            steps: Vec::new(),
            per_vertex: vec![0; g.n()],
            canon: canon.to_vec(),
            comp,
            off_canon,
            check,
        }
    }

    pub fn recolor(&mut self, v: usize, to: u32) -> Result<(), EngineError> {
        let from = self.coloring[v];
        if from == to {
            return Ok(());
        }
        if self.check {
            if let Some(&w) = self.g.neighbors(v).iter().find(|&&w| self.coloring[w] == to) {
                return Err(EngineError::Internal(format!(
                    "recoloring {v} to {to} clashes with neighbor {w}"
                )));
            }
        }
        let c = self.comp[v];
        if from == self.canon[v] {
            self.off_canon[c] += 1;
        }
        if to == self.canon[v] {
            self.off_canon[c] -= 1;
        }
        self.coloring[v] = to;
        self.per_vertex[v] += 1;
        self.steps.push(RecolorStep { v, from, to });
        Ok(())
    }

    /// True when every vertex of the component of `v` has its canonical color.
    pub fn component_canonical(&self, v: usize) -> bool {
        self.off_canon[self.comp[v]] == 0
    }
}
