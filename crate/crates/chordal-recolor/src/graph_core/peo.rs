use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use super::Graph;

/// A perfect elimination ordering `v_1, .., v_n` with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peo {
    pub order: Vec<usize>,
    pub pos: Vec<usize>,
}

impl Peo {
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        Peo { order, pos }
    }

    /// Neighbors of `v` that come after it in the ordering.
    pub fn later_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.pos[w] > self.pos[v])
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChordalError {
    #[error("graph is not chordal; chordless cycle {hole:?}")]
    NotChordal { hole: Vec<usize> },
}

/// Maximum cardinality search visiting order; ties go to the smallest vertex id.
pub fn mcs_visit_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    buckets[0].extend(0..n);
    let mut top = 0usize;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = *buckets[top].iter().next().unwrap();
        buckets[top].remove(&v);
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                buckets[weight[w]].remove(&w);
                weight[w] += 1;
                buckets[weight[w]].insert(w);
                top = top.max(weight[w]);
            }
        }
    }
    visit
}

/// Returns a witness triple `(v, u, w)` when `peo` is not perfect: `u` is the
/// earliest later neighbor of `v` and `w` is another later neighbor not adjacent to `u`.
pub fn peo_violation(g: &Graph, peo: &Peo) -> Option<(usize, usize, usize)> {
    for &v in &peo.order {
        let later = peo.later_neighbors(g, v);
        let Some(&u) = later.iter().min_by_key(|&&w| peo.pos[w]) else {
            continue;
        };
        for &w in &later {
            if w != u && !g.has_edge(u, w) {
                return Some((v, u, w));
            }
        }
    }
    None
}

pub fn is_peo(g: &Graph, peo: &Peo) -> bool {
    peo.order.len() == g.n() && peo_violation(g, peo).is_none()
}

/// Computes a perfect elimination ordering or a chordless cycle of length at least 4.
pub fn compute_peo(g: &Graph) -> Result<Peo, ChordalError> {
    let mut order = mcs_visit_order(g);
    order.reverse();
    let peo = Peo::from_order(order);
    match peo_violation(g, &peo) {
        None => Ok(peo),
        Some((v, u, w)) => {
            let hole = hole_through(g, v, u, w)
                .or_else(|| find_hole(g))
                .expect("a graph without a perfect elimination ordering has a hole");
            Err(ChordalError::NotChordal { hole })
        }
    }
}

/// Shortest `u`-`w` path avoiding the closed neighborhood of `v` (except `u`, `w`),
/// closed into a cycle through `v`. Such a cycle is chordless.
fn hole_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        if x != u && x != w {
            blocked[x] = true;
        }
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([u]);
    prev[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[w] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut x = w;
    while x != u {
        cycle.push(x);
        x = prev[x];
    }
    cycle.push(u);
    Some(cycle)
}

fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(c) = hole_through(g, v, u, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Checks that `cycle` is a chordless cycle of length at least 4 in `g`.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != len || sorted.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
