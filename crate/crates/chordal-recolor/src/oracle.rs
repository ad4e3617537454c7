//! Exhaustive search over the reconfiguration graph of small instances.
//!
//! States are proper colorings encoded in base `k` (vertex `v` is digit `v`); two
//! states are adjacent when they differ on exactly one vertex.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::graph_core::Graph;

pub const DEFAULT_STATE_CAP: usize = 5_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("state space exceeds the cap of {cap} colorings")]
    StateSpaceTooLarge { cap: usize },
    #[error("the graph has no proper {k}-coloring")]
    NoProperColoring { k: usize },
    #[error("the reconfiguration graph is disconnected")]
    Disconnected,
    #[error("not a proper {k}-coloring: {0}", k = .1)]
    InvalidColoring(String, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    Distance,
    Connected,
    Diameter,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleAnswer {
    pub mode: OracleMode,
    pub value: serde_json::Value,
}

/// All proper `k`-colorings of `g`, as base-`k` codes in increasing order.
pub struct StateSpace<'g> {
    g: &'g Graph,
    k: usize,
    codes: Vec<u64>,
    index: HashMap<u64, u32>,
    pow: Vec<u64>,
}

impl<'g> StateSpace<'g> {
    pub fn enumerate(g: &'g Graph, k: usize, cap: usize) -> Result<Self, OracleError> {
        let n = g.n();
        let too_large = || OracleError::StateSpaceTooLarge { cap };
        let mut pow = Vec::with_capacity(n);
        let mut acc: u64 = 1;
        for _ in 0..n {
            pow.push(acc);
            acc = acc.checked_mul(k as u64).ok_or_else(too_large)?;
        }
        let mut codes = Vec::new();
        let mut col = vec![0u32; n];
        let mut v = 0usize;
        if n == 0 {
            codes.push(0);
        }
        while v < n {
            col[v] += 1;
            if col[v] as usize > k {
                col[v] = 0;
                if v == 0 {
                    break;
                }
                v -= 1;
                continue;
            }
            let c = col[v];
            if g.neighbors(v).iter().any(|&w| w < v && col[w] == c) {
                continue;
            }
            if v + 1 == n {
                if codes.len() >= cap {
                    return Err(too_large());
                }
                codes.push(encode(&col, &pow));
            } else {
                v += 1;
            }
        }
        if codes.is_empty() {
            return Err(OracleError::NoProperColoring { k });
        }
        let index = codes.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        Ok(StateSpace {
            g,
            k,
            codes,
            index,
            pow,
        })
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn index_of(&self, coloring: &[u32]) -> Option<usize> {
        if coloring.len() != self.g.n() || coloring.iter().any(|&c| c == 0 || c as usize > self.k) {
            return None;
        }
        self.index.get(&encode(coloring, &self.pow)).map(|&i| i as usize)
    }

    /// The coloring stored as state `i`.
    pub fn coloring(&self, i: usize) -> Vec<u32> {
        let k = self.k as u64;
        self.pow.iter().map(|&p| ((self.codes[i] / p) % k + 1) as u32).collect()
    }

    fn neighbors(&self, i: usize, out: &mut Vec<usize>) {
        out.clear();
        let n = self.g.n();
        let code = self.codes[i];
        let k = self.k as u64;
        let digit = |v: usize| (code / self.pow[v]) % k;
        for v in 0..n {
            let cur = digit(v);
            for c in 0..k {
                if c == cur || self.g.neighbors(v).iter().any(|&w| digit(w) == c) {
                    continue;
                }
                let next = code - cur * self.pow[v] + c * self.pow[v];
                out.push(self.index[&next] as usize);
            }
        }
    }

    /// Breadth-first distances from state `src` (`u32::MAX` when unreachable).
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        let mut nb = Vec::new();
        while let Some(u) = queue.pop_front() {
            self.neighbors(u, &mut nb);
            for &w in &nb {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

fn encode(col: &[u32], pow: &[u64]) -> u64 {
    col.iter().zip(pow).map(|(&c, &p)| (c as u64 - 1) * p).sum()
}

/// Fewest recolorings from `c1` to `c2`, or `None` when no sequence exists.
pub fn bfs_distance(
    g: &Graph,
    c1: &[u32],
    c2: &[u32],
    k: usize,
    cap: usize,
) -> Result<Option<usize>, OracleError> {
    let space = StateSpace::enumerate(g, k, cap)?;
    let bad = |what: &str| OracleError::InvalidColoring(what.to_string(), k);
    let a = space.index_of(c1).ok_or_else(|| bad("start"))?;
    let b = space.index_of(c2).ok_or_else(|| bad("target"))?;
    let d = space.bfs(a)[b];
    Ok((d != u32::MAX).then_some(d as usize))
}

pub fn reconfig_connected(g: &Graph, k: usize, cap: usize) -> Result<bool, OracleError> {
    let space = StateSpace::enumerate(g, k, cap)?;
    Ok(space.bfs(0).iter().all(|&d| d != u32::MAX))
}

/// Largest distance between two proper colorings.
pub fn reconfig_diameter(g: &Graph, k: usize, cap: usize) -> Result<usize, OracleError> {
    let space = StateSpace::enumerate(g, k, cap)?;
    let mut best = 0;
    for i in 0..space.len() {
        let dist = space.bfs(i);
        let far = *dist.iter().max().expect("non-empty");
        if far == u32::MAX {
            return Err(OracleError::Disconnected);
        }
        best = best.max(far as usize);
    }
    Ok(best)
}
