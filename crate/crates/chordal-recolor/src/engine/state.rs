use crate::buffer::{BufferParams, ColorVector, Tuple};
use crate::graph_core::{Graph, Structure};

/// Vertices of one buffer split by block and class, together with its tuple.
pub(crate) struct Buffer {
    /// `members.get(b, p)`: vertices of class `p` in block `b`.
    pub members: Buckets,
    /// Members whose start height sits at the deep edge of their block's band;
    /// they drop one block when the buffer is re-rooted one level up.
    pub frontier: Buckets,
    /// Classes whose top-block vertices have no neighbor outside `R_{N-1}`, `R_N`.
    pub internal: Vec<bool>,
    pub nu: Tuple,
    /// Per-coordinate change counters, indexed `b * omega + p - 1`.
    pub coord: Vec<u32>,
}

impl Buffer {
    pub fn v(&self, b: usize) -> &ColorVector {
        &self.nu.vecs[b]
    }

    pub fn is_internal(&self, p: usize) -> bool {
        self.internal[p - 1]
    }

    pub fn worst_coord(&self) -> u32 {
        self.coord.iter().copied().max().unwrap_or(0)
    }

    pub fn reset_coord(&mut self) {
        self.coord.fill(0);
    }
}

/// Vertices grouped by `(block, class)` in one flat array.
pub(crate) struct Buckets {
    omega: usize,
    start: Vec<u32>,
    items: Vec<usize>,
}

impl Buckets {
    pub fn empty(nb: usize, omega: usize) -> Self {
        Buckets { omega, start: vec![0; nb * omega + 1], items: Vec::new() }
    }

    /// Groups `(block, class, vertex)` entries, keeping their relative order.
    fn build(nb: usize, omega: usize, entries: &[(usize, usize, usize)]) -> Self {
        let mut start = vec![0u32; nb * omega + 1];
        for &(b, p, _) in entries {
            start[b * omega + p] += 1;
        }
        for i in 1..start.len() {
            start[i] += start[i - 1];
        }
        let mut fill = start.clone();
        let mut items = vec![0; entries.len()];
        for &(b, p, v) in entries {
            let k = b * omega + p - 1;
            items[fill[k] as usize] = v;
            fill[k] += 1;
        }
        Buckets { omega, start, items }
    }

    pub fn get(&self, b: usize, p: usize) -> &[usize] {
        let k = b * self.omega + p - 1;
        &self.items[self.start[k] as usize..self.start[k + 1] as usize]
    }

    fn blocks(&self) -> usize {
        (self.start.len() - 1) / self.omega.max(1)
    }
}

/// Scratch arrays reused across buffer collections.
pub(crate) struct Collector {
    stamp: Vec<u32>,
    block: Vec<usize>,
    cur: u32,
}

impl Collector {
    pub fn new(n: usize) -> Self {
        Collector {
            stamp: vec![0; n],
            block: vec![usize::MAX; n],
            cur: 0,
        }
    }

    /// Buffer of `T_root` seen from `offset` extra levels above `root`.
    pub fn collect(
        &mut self,
        g: &Graph,
        st: &Structure,
        params: &BufferParams,
        root: usize,
        offset: usize,
        nu: Tuple,
    ) -> Buffer {
        let tree = &st.tree;
        let omega = params.omega;
        let nb = params.num_blocks();
        let depth = params.depth();
        let width = params.block_width();
        self.cur += 1;
        let cur = self.cur;
        let mut members = Vec::new();
        let mut frontier = Vec::new();
        let mut top_members = Vec::new();
        let mut layer = vec![root];
        let mut d = 0;
        while !layer.is_empty() && d + offset < depth {
            let mut next = Vec::new();
            for &u in &layer {
                for &v in &tree.bags[u] {
                    if self.stamp[v] == cur {
                        continue;
                    }
                    self.stamp[v] = cur;
                    self.block[v] = usize::MAX;
                    let sh = tree.start_height_opt(root, v).expect("vertex of a subtree bag");
                    let e = sh + offset;
                    let Some(b) = params.block_of_height(e) else {
                        continue;
                    };
                    self.block[v] = b;
                    let p = st.canon.class_of(v);
                    members.push((b, p, v));
                    if (e + 1).is_multiple_of(width) {
                        frontier.push((b, p, v));
                    }
                    if b == nb - 1 {
                        top_members.push((v, p));
                    }
                }
                next.extend_from_slice(&tree.children[u]);
            }
            layer = next;
            d += 1;
        }
        let mut internal = vec![true; omega];
        let low = nb.saturating_sub(6);
        for (v, p) in top_members {
            if !internal[p - 1] {
                continue;
            }
            let outside = g
                .neighbors(v)
                .iter()
                .any(|&w| self.stamp[w] != cur || self.block[w] == usize::MAX || self.block[w] < low);
            if outside {
                internal[p - 1] = false;
            }
        }
        Buffer {
            members: Buckets::build(nb, omega, &members),
            frontier: Buckets::build(nb, omega, &frontier),
            internal,
            nu,
            coord: vec![0; nb * omega],
        }
    }

    /// Every vertex of the buffer carries the color its block vector assigns to its class.
    pub fn well_colored(buf: &Buffer, coloring: &[u32]) -> Result<(), String> {
        for b in 0..buf.members.blocks() {
            for p in 1..=buf.members.omega {
                let want = buf.nu.vecs[b].at(p);
                if let Some(&v) = buf.members.get(b, p).iter().find(|&&v| coloring[v] != want) {
                    return Err(format!(
                        "vertex {v} in block {b} has color {} but its vector says {want}",
                        coloring[v]
                    ));
                }
            }
        }
        Ok(())
    }
}
