//! Seeded chordal instance generators and random proper colorings.

mod rng;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph_core::{canonical_coloring, compute_peo, Graph};
pub use rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Random `(omega - 1)`-tree with a degree cap.
    Ktree,
    /// Random interval graph with at most `omega` intervals over any point.
    Interval,
    /// `(omega - 1)`-th power of a path.
    Pathpower,
    Path,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Ktree, Model::Interval, Model::Pathpower, Model::Path];
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Model::Ktree => "ktree",
            Model::Interval => "interval",
            Model::Pathpower => "pathpower",
            Model::Path => "path",
        };
        f.write_str(s)
    }
}

impl FromStr for Model {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Model::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| GenError::UnknownModel(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible specification: {0}")]
    InfeasibleSpec(String),
    #[error("unknown model {0:?}")]
    UnknownModel(String),
    #[error("no admissible color for vertex {0}")]
    NoAdmissibleColor(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenSpec {
    pub model: Model,
    pub n: usize,
    pub omega: usize,
    pub max_degree: usize,
    pub seed: u64,
}

/// Measured parameters of a generated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenMeta {
    pub model: Model,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub delta: usize,
    /// Degeneracy, `omega - 1` for chordal graphs.
    pub d: usize,
    pub seed: u64,
}

pub fn generate(spec: &GenSpec) -> Result<(Graph, GenMeta), GenError> {
    let mut rng = SplitMix64::new(spec.seed);
    let edges = match spec.model {
        Model::Ktree => ktree(spec, &mut rng)?,
        Model::Interval => interval(spec, &mut rng)?,
        Model::Pathpower => path_power(spec.n, spec.omega.max(1) - 1, spec.max_degree, &mut rng)?,
        Model::Path => path_power(spec.n, 1, spec.max_degree, &mut rng)?,
    };
    let g = Graph::from_edges(spec.n, &edges).expect("generators emit simple graphs");
    let omega = compute_peo(&g)
        .map(|peo| canonical_coloring(&g, &peo).omega)
        .expect("generators emit chordal graphs");
    let meta = GenMeta {
        model: spec.model,
        n: g.n(),
        m: g.m(),
        omega,
        delta: g.max_degree(),
        d: omega.saturating_sub(1),
        seed: spec.seed,
    };
    Ok((g, meta))
}

fn infeasible<T>(msg: impl Into<String>) -> Result<T, GenError> {
    Err(GenError::InfeasibleSpec(msg.into()))
}

fn ktree(spec: &GenSpec, rng: &mut SplitMix64) -> Result<Vec<(usize, usize)>, GenError> {
    let (n, w, cap) = (spec.n, spec.omega, spec.max_degree);
    if w == 0 || n < w {
        return infeasible(format!("ktree needs 1 <= omega <= n (omega={w}, n={n})"));
    }
    if cap + 1 < w {
        return infeasible(format!("max degree {cap} is below omega - 1 = {}", w - 1));
    }
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for u in 0..w {
        for v in u + 1..w {
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0..w)
        .map(|x| (0..w).filter(|&y| y != x).collect())
        .collect();
    for v in w..n {
        // Two random candidates, keep the lighter one; saturated cliques are dropped.
        let mut pick = || loop {
            if cliques.is_empty() {
                return None;
            }
            let i = rng.below(cliques.len());
            if cliques[i].iter().all(|&x| deg[x] < cap) {
                return Some(cliques[i].clone());
            }
            cliques.swap_remove(i);
        };
        let Some(a) = pick() else {
            return infeasible(format!("degree cap {cap} leaves no clique for vertex {v}"));
        };
        let b = pick().unwrap_or_else(|| a.clone());
        let load = |c: &[usize]| c.iter().map(|&x| deg[x]).sum::<usize>();
        let base = if load(&b) < load(&a) { b } else { a };
        for &x in &base {
            edges.push((x, v));
            deg[x] += 1;
            deg[v] += 1;
        }
        for skip in 0..base.len() {
            let mut next: Vec<usize> = base
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x)
                .collect();
            next.push(v);
            cliques.push(next);
        }
    }
    Ok(relabel(n, edges, rng))
}

/// Sweeps left to right, opening intervals (adjacent to every open one) or closing
/// them, never exceeding `omega` open intervals or the degree cap.
fn interval(spec: &GenSpec, rng: &mut SplitMix64) -> Result<Vec<(usize, usize)>, GenError> {
    let (n, w, cap) = (spec.n, spec.omega, spec.max_degree);
    if n > 0 && w == 0 {
        return infeasible("interval graphs with vertices need omega >= 1");
    }
    if w >= 2 && cap + 1 < w && n >= w {
        return infeasible(format!("max degree {cap} is below omega - 1 = {}", w - 1));
    }
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut created = 0;
    while created < n {
        open.retain(|&x| deg[x] < cap);
        let must_close = open.len() >= w || open.len() > cap;
        if !open.is_empty() && (must_close || rng.chance(2, 5)) {
            let i = rng.below(open.len());
            open.swap_remove(i);
            continue;
        }
        let v = created;
        created += 1;
        for &x in &open {
            edges.push((x, v));
            deg[x] += 1;
            deg[v] += 1;
        }
        open.push(v);
    }
    Ok(relabel(n, edges, rng))
}

fn path_power(n: usize, p: usize, cap: usize, rng: &mut SplitMix64) -> Result<Vec<(usize, usize)>, GenError> {
    let need = (2 * p).min(n.saturating_sub(1));
    if cap < need {
        return infeasible(format!("max degree {cap} is below {need}"));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for d in 1..=p {
            if i + d < n {
                edges.push((i, i + d));
            }
        }
    }
    Ok(relabel(n, edges, rng))
}

fn relabel(n: usize, edges: Vec<(usize, usize)>, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect()
}

/// Random proper coloring with colors in `1..=k`: vertices are visited in a
/// maximum cardinality search order with random tie-breaking, and each takes a
/// uniformly random color unused by its already-colored neighbors. On a chordal
/// graph those neighbors form a clique, so `k >= omega` always succeeds.
pub fn gen_coloring(g: &Graph, k: usize, seed: u64) -> Result<Vec<u32>, GenError> {
    let mut rng = SplitMix64::new(seed ^ 0xC010_12ED);
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut slot: Vec<usize> = (0..n).collect();
    let mut done = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    buckets[0] = (0..n).collect();
    let mut top = 0;
    let mut coloring = vec![0u32; n];
    let mut banned = vec![usize::MAX; k + 1];
    for step in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let i = rng.below(buckets[top].len());
        let v = take(&mut buckets[top], &mut slot, i);
        done[v] = true;
        for &w in g.neighbors(v) {
            let c = coloring[w] as usize;
            if c != 0 && c <= k {
                banned[c] = step;
            }
        }
        let free: Vec<u32> = (1..=k).filter(|&c| banned[c] != step).map(|c| c as u32).collect();
        if free.is_empty() {
            return Err(GenError::NoAdmissibleColor(v));
        }
        coloring[v] = free[rng.below(free.len())];
        for &w in g.neighbors(v) {
            if !done[w] {
                let b = weight[w];
                let at = slot[w];
                take(&mut buckets[b], &mut slot, at);
                weight[w] += 1;
                slot[w] = buckets[b + 1].len();
                buckets[b + 1].push(w);
                top = top.max(b + 1);
            }
        }
    }
    Ok(coloring)
}

fn take(bucket: &mut Vec<usize>, slot: &mut [usize], i: usize) -> usize {
    let v = bucket.swap_remove(i);
    if i < bucket.len() {
        slot[bucket[i]] = i;
    }
    v
}
