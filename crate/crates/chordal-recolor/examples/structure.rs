// Elimination ordering, canonical coloring and rooted clique tree of a small
// chordal graph.

use chordal_recolor::graph_core::{
    build_clique_tree, canonical_coloring, compute_peo, is_peo, root_and_heights, start_height, Graph,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Two triangles sharing the edge 1-2, plus a pendant vertex 4 on 3.
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])?;
    let peo = compute_peo(&g)?;
    assert!(is_peo(&g, &peo));
    println!("elimination order: {:?}", peo.order);

    let canon = canonical_coloring(&g, &peo);
    println!("omega = {}, canonical coloring = {:?}", canon.omega, canon.coloring);
    assert_eq!(canon.omega, 3);

    let tree = root_and_heights(&build_clique_tree(&g, &peo), 0);
    for (u, bag) in tree.bags.iter().enumerate() {
        println!("bag {u}: {bag:?} height {} parent {:?}", tree.height[u], tree.parent[u]);
    }
    for v in 0..g.n() {
        println!("vertex {v} starts at height {}", start_height(&tree, tree.roots[0], v)?);
    }

    let cycle = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    match compute_peo(&cycle) {
        Err(e) => println!("C4: {e}"),
        Ok(_) => return Err("C4 accepted as chordal".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
