//! The recoloring engine: drives every clique of the tree from the leaves to the
//! root, keeping a valid buffer below each treated clique.

mod lab;
mod lemmas;
mod recorder;
mod state;
mod unify;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::buffer::{
    border_distance, clique_vector, construct_valid_tuple, BufferParams, ColorVector, ParamError,
    RegionKind, Tuple,
};
use crate::graph_core::{ChordalError, Graph, Structure};

pub use lab::{unify_tuples, VectorLab};
pub use recorder::RecolorStep;
use recorder::Recorder;
use state::{Buffer, Collector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    NotChordal(#[from] ChordalError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineConfig {
    /// Re-check validity after every lemma and properness after every recoloring.
    pub debug: bool,
}

impl EngineConfig {
    /// Debug checks are on when `RECOLOR_DEBUG=1`.
    pub fn from_env() -> Self {
        EngineConfig {
            debug: std::env::var("RECOLOR_DEBUG").is_ok_and(|v| v == "1"),
        }
    }
}

/// How often a lemma ran and the most changes it made to one vector coordinate
/// (for the shift into the parent: to one vertex) in a single run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub invocations: u64,
    pub worst: u32,
    /// Vertex recolorings emitted, summed over all invocations.
    pub recolorings: u64,
}

impl Budget {
    fn record(&mut self, worst: u32, recolorings: usize) {
        self.invocations += 1;
        self.worst = self.worst.max(worst);
        self.recolorings += recolorings as u64;
    }

    pub fn merge(&mut self, other: &Budget) {
        self.invocations += other.invocations;
        self.worst = self.worst.max(other.worst);
        self.recolorings += other.recolorings;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LemmaStats {
    pub step1: Budget,
    pub step2: Budget,
    pub step3: Budget,
    pub step4: Budget,
}

impl LemmaStats {
    pub fn merge(&mut self, other: &LemmaStats) {
        self.step1.merge(&other.step1);
        self.step2.merge(&other.step2);
        self.step3.merge(&other.step3);
        self.step4.merge(&other.step4);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub omega: usize,
    pub delta: usize,
    pub k: usize,
    pub length: usize,
    pub max_per_vertex: u32,
    pub lemmas: LemmaStats,
}

#[derive(Debug, Clone)]
pub struct Recoloring {
    pub steps: Vec<RecolorStep>,
    pub report: RunReport,
}

pub(crate) struct Ctx<'a> {
    g: &'a Graph,
    st: &'a Structure,
    params: BufferParams,
    rec: Recorder<'a>,
    debug: bool,
    stats: LemmaStats,
}

/// Checks length, color range and properness of `coloring`.
pub fn check_coloring(g: &Graph, coloring: &[u32], k: usize) -> Result<(), EngineError> {
    if coloring.len() != g.n() {
        return Err(EngineError::InvalidColoring(format!(
            "expected {} colors, found {}",
            g.n(),
            coloring.len()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| coloring[v] == 0 || coloring[v] as usize > k) {
        return Err(EngineError::InvalidColoring(format!(
            "vertex {v} has color {} outside 1..={k}",
            coloring[v]
        )));
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| coloring[u] == coloring[v]) {
        return Err(EngineError::InvalidColoring(format!(
            "edge {u}-{v} is monochromatic"
        )));
    }
    Ok(())
}

/// Recolors `coloring` to the canonical coloring of `g`.
pub fn recolor_to_canonical(
    g: &Graph,
    coloring: &[u32],
    k: usize,
    cfg: EngineConfig,
) -> Result<Recoloring, EngineError> {
    let st = Structure::new(g)?;
    recolor_with_structure(g, &st, coloring, k, cfg)
}

pub fn recolor_with_structure(
    g: &Graph,
    st: &Structure,
    coloring: &[u32],
    k: usize,
    cfg: EngineConfig,
) -> Result<Recoloring, EngineError> {
    let params = BufferParams::new(st.omega(), st.delta, k)?;
    check_coloring(g, coloring, k)?;
    let mut ctx = Ctx {
        g,
        st,
        params,
        rec: Recorder::new(g, coloring, &st.canon.coloring, cfg.debug),
        debug: cfg.debug,
        stats: LemmaStats::default(),
    };
    ctx.run()?;
    if ctx.rec.coloring != st.canon.coloring {
        return Err(EngineError::Internal("run ended away from the canonical coloring".into()));
    }
    let max_per_vertex = ctx.rec.per_vertex.iter().copied().max().unwrap_or(0);
    let steps = std::mem::take(&mut ctx.rec.steps);
    Ok(Recoloring {
        report: RunReport {
            omega: params.omega,
            delta: params.delta,
            k,
            length: steps.len(),
            max_per_vertex,
            lemmas: ctx.stats,
        },
        steps,
    })
}

/// Recoloring sequence from `c1` to `c2`: `c1` to canonical, then the reverse of
/// `c2` to canonical.
pub fn transform(
    g: &Graph,
    c1: &[u32],
    c2: &[u32],
    k: usize,
    cfg: EngineConfig,
) -> Result<Recoloring, EngineError> {
    let st = Structure::new(g)?;
    let a = recolor_with_structure(g, &st, c1, k, cfg)?;
    let b = recolor_with_structure(g, &st, c2, k, cfg)?;
    let mut steps = a.steps;
    steps.extend(b.steps.iter().rev().map(|s| s.inverse()));
    let mut counts = vec![0u32; g.n()];
    for s in &steps {
        counts[s.v] += 1;
    }
    let mut lemmas = a.report.lemmas;
    lemmas.merge(&b.report.lemmas);
    Ok(Recoloring {
        report: RunReport {
            length: steps.len(),
            max_per_vertex: counts.into_iter().max().unwrap_or(0),
            lemmas,
            ..a.report
        },
        steps,
    })
}

/// Rough upper bound on how often one vertex is recolored by `recolor_to_canonical`.
pub fn per_vertex_budget(params: &BufferParams) -> u64 {
    let w = params.omega as u64;
    let levels = params.depth() as u64 + params.block_width() as u64 + 1;
    let per_level = w * (3 + 6) + STEP3_CONSTANT as u64 * w * w + 1;
    levels * per_level
}

/// Per-coordinate changes allowed to one unification of children, divided by `omega^2`.
pub const STEP3_CONSTANT: u32 = 30;

impl Ctx<'_> {
    fn run(&mut self) -> Result<(), EngineError> {
        let tree = &self.st.tree;
        let mut collector = Collector::new(self.g.n());
        let mut tuples: HashMap<usize, Tuple> = HashMap::new();
        for &root in &tree.roots.clone() {
            let nodes = tree.subtree(root);
            let mut by_height: Vec<Vec<usize>> = Vec::new();
            for &u in &nodes {
                let h = tree.height[u] - tree.height[root];
                if by_height.len() <= h {
                    by_height.resize(h + 1, Vec::new());
                }
                by_height[h].push(u);
            }
            for layer in by_height.iter().rev() {
                for &c in layer {
                    self.treat(c, &mut collector, &mut tuples)?;
                }
            }
            let mut nu = tuples.remove(&root).expect("root treated");
            let anchor = tree.bags[root][0];
            for offset in 0..self.params.depth() {
                if self.rec.component_canonical(anchor) {
                    break;
                }
                let mut buf = collector.collect(self.g, self.st, &self.params, root, offset, nu);
                self.check_buffer(&buf)?;
                let target = ColorVector::canonical(self.params.omega);
                self.settle_border(&mut buf, &target)?;
                self.step4(&mut buf)?;
                nu = buf.nu;
            }
            if !self.rec.component_canonical(anchor) {
                return Err(EngineError::Internal("component not canonical after the final shifts".into()));
            }
        }
        Ok(())
    }

    fn treat(
        &mut self,
        c: usize,
        collector: &mut Collector,
        tuples: &mut HashMap<usize, Tuple>,
    ) -> Result<(), EngineError> {
        let tree = &self.st.tree;
        let target = clique_vector(
            &tree.bags[c],
            &self.rec.coloring,
            &self.st.canon.coloring,
            self.params.omega,
            self.params.k,
        );
        let children = &tree.children[c];
        if children.is_empty() {
            tuples.insert(c, construct_valid_tuple(&target, &self.params));
            return Ok(());
        }
        let mut bufs = Vec::with_capacity(children.len());
        for &child in children {
            let nu = tuples.remove(&child).expect("child treated first");
            let buf = collector.collect(self.g, self.st, &self.params, child, 0, nu);
            self.check_buffer(&buf)?;
            bufs.push(buf);
        }
        for buf in &mut bufs {
            self.settle_border(buf, &target)?;
        }
        for buf in &mut bufs {
            buf.reset_coord();
        }
        let before = self.rec.steps.len();
        self.step3(&mut bufs)?;
        let worst = bufs.iter().map(Buffer::worst_coord).max().unwrap_or(0);
        if bufs.len() > 1 {
            self.stats.step3.record(worst, self.rec.steps.len() - before);
        }
        for buf in &mut bufs {
            self.require_valid(buf, false, "step3")?;
            self.step4(buf)?;
        }
        tuples.insert(c, bufs.swap_remove(0).nu);
        Ok(())
    }

    /// Alternates the two border lemmas until the top vector equals `target`.
    fn settle_border(&mut self, buf: &mut Buffer, target: &ColorVector) -> Result<(), EngineError> {
        let top = BufferParams::c(self.params.n_regions);
        loop {
            let before = border_distance(buf.v(top), target);
            if before == 0 {
                return Ok(());
            }
            buf.reset_coord();
            let at = self.rec.steps.len();
            self.step1(buf, target)?;
            self.stats.step1.record(buf.worst_coord(), self.rec.steps.len() - at);
            if border_distance(buf.v(top), target) >= before {
                return Err(EngineError::Internal("border error did not decrease".into()));
            }
            self.require_valid(buf, true, "step1")?;
            buf.reset_coord();
            let at = self.rec.steps.len();
            self.step2(buf)?;
            self.stats.step2.record(buf.worst_coord(), self.rec.steps.len() - at);
            self.require_valid(buf, false, "step2")?;
        }
    }

    /// Recolors the vertices that drop one block when the root moves one level up.
    fn step4(&mut self, buf: &mut Buffer) -> Result<(), EngineError> {
        let n = self.params.n_regions;
        let before = self.rec.steps.len();
        for j in (2..n).rev() {
            let (bj, cj) = (BufferParams::b(j), BufferParams::c(j));
            match self.kind(buf, j) {
                RegionKind::Waiting => {}
                RegionKind::Color { p, c1, .. } => {
                    for i in 0..buf.frontier.get(bj, p).len() {
                        self.rec.recolor(buf.frontier.get(bj, p)[i], c1)?;
                    }
                }
                RegionKind::Transposition { p, q, c1, c2, z, z2 } => {
                    for (blk, cls, col) in [(cj, p, z), (cj, q, z2), (bj, p, c1), (bj, q, c2)] {
                        for i in 0..buf.frontier.get(blk, cls).len() {
                            self.rec.recolor(buf.frontier.get(blk, cls)[i], col)?;
                        }
                    }
                }
                RegionKind::Irregular(why) => {
                    return Err(EngineError::Internal(format!("irregular region R{j}: {why}")));
                }
            }
        }
        let mut seen: HashMap<usize, u32> = HashMap::new();
        for s in &self.rec.steps[before..] {
            *seen.entry(s.v).or_default() += 1;
        }
        self.stats.step4.record(seen.values().copied().max().unwrap_or(0), self.rec.steps.len() - before);
        Ok(())
    }

    fn check_buffer(&self, buf: &Buffer) -> Result<(), EngineError> {
        if !self.debug {
            return Ok(());
        }
        self.require_valid(buf, false, "collection")?;
        Collector::well_colored(buf, &self.rec.coloring).map_err(EngineError::Internal)
    }
}
