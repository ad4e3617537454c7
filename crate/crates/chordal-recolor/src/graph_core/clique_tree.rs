use std::collections::VecDeque;

use thiserror::Error;

use super::{Graph, Peo};

/// Clique forest: one tree per connected component, bags are the maximal cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<Vec<usize>>,
    pub adj: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("vertex {vertex} does not occur in the subtree rooted at node {node}")]
    VertexNotInSubtree { node: usize, vertex: usize },
}

impl CliqueTree {
    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Builds the clique forest by adding `v_n, .., v_1` one at a time. A vertex whose
/// earlier-added neighborhood equals an existing bag joins it; otherwise it opens a
/// new bag hanging below the bag of its earliest later neighbor.
pub fn build_clique_tree(g: &Graph, peo: &Peo) -> CliqueTree {
    let n = g.n();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut home = vec![usize::MAX; n];
    for &v in peo.order.iter().rev() {
        let later = peo.later_neighbors(g, v);
        let Some(&p) = later.iter().min_by_key(|&&w| peo.pos[w]) else {
            home[v] = bags.len();
            bags.push(vec![v]);
            adj.push(Vec::new());
            continue;
        };
        let x = home[p];
        if bags[x].len() == later.len() {
            bags[x].push(v);
            home[v] = x;
        } else {
            let id = bags.len();
            let mut bag = later;
            bag.push(v);
            bags.push(bag);
            adj.push(vec![x]);
            adj[x].push(id);
            home[v] = id;
        }
    }
    for bag in &mut bags {
        bag.sort_unstable();
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    CliqueTree { bags, adj }
}

/// A rooted clique forest with heights and the per-vertex data used for start heights.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub bags: Vec<Vec<usize>>,
    pub roots: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub height: Vec<usize>,
    /// `height_table[i]` lists the nodes at height `i`, in increasing id order.
    pub height_table: Vec<Vec<usize>>,
    /// `deep[u][i]`: largest absolute height of a bag in `T_u` containing `bags[u][i]`.
    pub deep: Vec<Vec<usize>>,
    /// Largest absolute height of any bag containing the vertex.
    pub max_height: Vec<usize>,
    /// Highest bag containing the vertex.
    pub top: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

/// Roots the component of `root` at `root` and every other component at its smallest node.
pub fn root_and_heights(t: &CliqueTree, root: usize) -> RootedTree {
    let k = t.len();
    let mut parent = vec![None; k];
    let mut height = vec![usize::MAX; k];
    let mut children = vec![Vec::new(); k];
    let mut roots = Vec::new();
    let mut bfs = Vec::with_capacity(k);
    let starts = std::iter::once(root).chain(0..k);
    for r in starts {
        if r >= k || height[r] != usize::MAX {
            continue;
        }
        roots.push(r);
        height[r] = 0;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            bfs.push(u);
            for &w in &t.adj[u] {
                if height[w] == usize::MAX {
                    height[w] = height[u] + 1;
                    parent[w] = Some(u);
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
    }
    let max_h = height.iter().copied().max().map_or(0, |h| h + 1);
    let mut height_table = vec![Vec::new(); max_h];
    for u in 0..k {
        height_table[height[u]].push(u);
    }

    let mut deep: Vec<Vec<usize>> = t.bags.iter().map(|b| vec![0; b.len()]).collect();
    for &u in bfs.iter().rev() {
        for (i, &v) in t.bags[u].iter().enumerate() {
            let mut d = height[u];
            for &c in &children[u] {
                if let Ok(j) = t.bags[c].binary_search(&v) {
                    d = d.max(deep[c][j]);
                }
            }
            deep[u][i] = d;
        }
    }

    let n = t.bags.iter().flatten().copied().max().map_or(0, |v| v + 1);
    let mut max_height = vec![0; n];
    let mut top = vec![usize::MAX; n];
    for &u in &bfs {
        for &v in &t.bags[u] {
            max_height[v] = max_height[v].max(height[u]);
            if top[v] == usize::MAX {
                top[v] = u;
            }
        }
    }

    let mut tin = vec![0; k];
    let mut tout = vec![0; k];
    let mut clock = 0;
    for &r in &roots {
        let mut stack = vec![(r, 0usize)];
        tin[r] = clock;
        clock += 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < children[u].len() {
                let c = children[u][*i];
                *i += 1;
                tin[c] = clock;
                clock += 1;
                stack.push((c, 0));
            } else {
                tout[u] = clock;
                stack.pop();
            }
        }
    }

    RootedTree {
        bags: t.bags.clone(),
        roots,
        parent,
        children,
        height,
        height_table,
        deep,
        max_height,
        top,
        tin,
        tout,
    }
}

impl RootedTree {
    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// True when `a` is `b` or an ancestor of `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.tin[a] <= self.tin[b] && self.tout[b] <= self.tout[a]
    }

    /// Root of the tree containing `u`.
    pub fn root_of(&self, mut u: usize) -> usize {
        while let Some(p) = self.parent[u] {
            u = p;
        }
        u
    }

    /// Nodes of `T_u` in breadth-first order.
    pub fn subtree(&self, u: usize) -> Vec<usize> {
        let mut out = vec![u];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&self.children[out[i]]);
            i += 1;
        }
        out
    }

    /// Start height of `v` in `T_u`, or `None` when `v` does not occur in `T_u`.
    pub fn start_height_opt(&self, u: usize, v: usize) -> Option<usize> {
        if let Ok(i) = self.bags[u].binary_search(&v) {
            return Some(self.deep[u][i] - self.height[u]);
        }
        if v < self.top.len() && self.top[v] != usize::MAX && self.is_ancestor(u, self.top[v]) {
            return Some(self.max_height[v] - self.height[u]);
        }
        None
    }
}

/// Largest height, relative to `subtree_root`, of a bag of `T_subtree_root` containing `v`.
pub fn start_height(t: &RootedTree, subtree_root: usize, v: usize) -> Result<usize, TreeError> {
    t.start_height_opt(subtree_root, v)
        .ok_or(TreeError::VertexNotInSubtree {
            node: subtree_root,
            vertex: v,
        })
}
