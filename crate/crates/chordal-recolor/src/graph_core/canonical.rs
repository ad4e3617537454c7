use super::{Graph, Peo};

/// The canonical coloring and its color classes `X_1, .., X_omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalClasses {
    pub coloring: Vec<u32>,
    pub omega: usize,
    pub classes: Vec<Vec<usize>>,
}

impl CanonicalClasses {
    /// Class index (1-based) of `v`, which equals its canonical color.
    pub fn class_of(&self, v: usize) -> usize {
        self.coloring[v] as usize
    }
}

/// Greedy coloring along `v_n, .., v_1` with the smallest color unused by
/// already-colored neighbors.
pub fn canonical_coloring(g: &Graph, peo: &Peo) -> CanonicalClasses {
    let n = g.n();
    let mut coloring = vec![0u32; n];
    let mut mark = vec![usize::MAX; n + 2];
    let mut omega = 0usize;
    for (step, &v) in peo.order.iter().rev().enumerate() {
        for &w in g.neighbors(v) {
            let c = coloring[w] as usize;
            if c != 0 {
                mark[c] = step;
            }
        }
        let mut c = 1;
        while mark[c] == step {
            c += 1;
        }
        coloring[v] = c as u32;
        omega = omega.max(c);
    }
    if n > 0 {
        omega = omega.max(1);
    }
    let mut classes = vec![Vec::new(); omega];
    for v in 0..n {
        classes[coloring[v] as usize - 1].push(v);
    }
    CanonicalClasses {
        coloring,
        omega,
        classes,
    }
}
