//! Graphs, elimination orderings, the canonical coloring and clique trees.

mod canonical;
mod clique_tree;
mod graph;
mod peo;

pub use canonical::{canonical_coloring, CanonicalClasses};
pub use clique_tree::{
    build_clique_tree, root_and_heights, start_height, CliqueTree, RootedTree, TreeError,
};
pub use graph::{load_graph, Graph, GraphError};
pub use peo::{compute_peo, is_chordless_cycle, is_peo, mcs_visit_order, ChordalError, Peo};

/// Everything derived from a chordal graph that the recoloring engine needs.
#[derive(Debug, Clone)]
pub struct Structure {
    pub peo: Peo,
    pub canon: CanonicalClasses,
    pub tree: RootedTree,
    pub delta: usize,
}

impl Structure {
    pub fn new(g: &Graph) -> Result<Self, ChordalError> {
        let peo = compute_peo(g)?;
        let canon = canonical_coloring(g, &peo);
        let tree = build_clique_tree(g, &peo);
        let tree = root_and_heights(&tree, 0);
        Ok(Structure {
            peo,
            canon,
            tree,
            delta: g.max_degree(),
        })
    }

    pub fn omega(&self) -> usize {
        self.canon.omega
    }
}
