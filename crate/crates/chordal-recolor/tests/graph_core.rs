mod common;

use chordal_recolor::generators::Model;
use chordal_recolor::graph_core::{
    build_clique_tree, canonical_coloring, compute_peo, is_chordless_cycle, is_peo, load_graph,
    mcs_visit_order, root_and_heights, start_height, ChordalError, CliqueTree, GraphError, Peo,
    Structure, TreeError,
};
use chordal_recolor::Graph;
use proptest::prelude::*;

use common::{brute_chordal, gen, naive_start_height};

#[test]
fn load_triangle() {
    let g = load_graph(r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
    assert_eq!(g.n(), 3);
    assert_eq!(g.m(), 3);
    assert_eq!(g.max_degree(), 2);
    assert!(g.has_edge(2, 0));
}

#[test]
fn load_isolated() {
    let g = load_graph(r#"{"n":2,"edges":[]}"#).unwrap();
    assert_eq!((g.n(), g.m(), g.max_degree()), (2, 0, 0));
}

#[test]
fn load_rejects_bad_input() {
    assert_eq!(load_graph(r#"{"n":2,"edges":[[0,0]]}"#), Err(GraphError::SelfLoop(0)));
    assert!(matches!(
        load_graph(r#"{"n":2,"edges":[[0,1],[1,0]]}"#),
        Err(GraphError::DuplicateEdge(..))
    ));
    assert!(matches!(
        load_graph(r#"{"n":2,"edges":[[0,2]]}"#),
        Err(GraphError::VertexOutOfRange(..))
    ));
    assert!(matches!(load_graph("{"), Err(GraphError::Parse(_))));
}

#[test]
fn json_round_trip() {
    let g = gen(Model::Ktree, 30, 3, 6, 4);
    assert_eq!(load_graph(&g.to_json()).unwrap(), g);
}

#[test]
fn every_order_of_triangle_is_peo() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        assert!(is_peo(&g, &Peo::from_order(order.to_vec())));
    }
    assert!(is_peo(&g, &compute_peo(&g).unwrap()));
}

#[test]
fn four_cycle_is_not_chordal() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let Err(ChordalError::NotChordal { hole }) = compute_peo(&g) else {
        panic!("C4 accepted");
    };
    assert_eq!(hole.len(), 4);
    assert!(is_chordless_cycle(&g, &hole));
}

#[test]
fn path_orders_match_brute_force() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let brute = |o: &[usize]| {
        (0..3).all(|i| {
            let later: Vec<usize> = o[i + 1..].iter().copied().filter(|&w| g.has_edge(o[i], w)).collect();
            later.iter().all(|&a| later.iter().all(|&b| a == b || g.has_edge(a, b)))
        })
    };
    for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        assert_eq!(is_peo(&g, &Peo::from_order(order.to_vec())), brute(&order), "{order:?}");
    }
    assert!(is_peo(&g, &Peo::from_order(vec![0, 2, 1])));
    assert!(!is_peo(&g, &Peo::from_order(vec![1, 0, 2])));
}

#[test]
fn mcs_breaks_ties_by_smallest_id() {
    let g = Graph::empty(4);
    assert_eq!(mcs_visit_order(&g), vec![0, 1, 2, 3]);
    assert_eq!(compute_peo(&g).unwrap().order, vec![3, 2, 1, 0]);
}

#[test]
fn canonical_on_triangle() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let c = canonical_coloring(&g, &Peo::from_order(vec![0, 1, 2]));
    assert_eq!(c.coloring, vec![3, 2, 1]);
    assert_eq!(c.omega, 3);
}

#[test]
fn canonical_on_edgeless() {
    let g = Graph::empty(4);
    let c = canonical_coloring(&g, &compute_peo(&g).unwrap());
    assert_eq!(c.coloring, vec![1; 4]);
    assert_eq!(c.omega, 1);
}

#[test]
fn canonical_on_path() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let c = canonical_coloring(&g, &Peo::from_order(vec![0, 2, 1]));
    assert_eq!(c.coloring, vec![2, 1, 2]);
    assert_eq!(c.omega, 2);
    assert_eq!(c.classes, vec![vec![1], vec![0, 2]]);
}

#[test]
fn clique_tree_of_triangle() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let t = build_clique_tree(&g, &compute_peo(&g).unwrap());
    assert_eq!(t.bags, vec![vec![0, 1, 2]]);
    assert!(t.edges().is_empty());
}

#[test]
fn clique_tree_of_path() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let t = build_clique_tree(&g, &compute_peo(&g).unwrap());
    let mut bags = t.bags.clone();
    bags.sort();
    assert_eq!(bags, vec![vec![0, 1], vec![1, 2]]);
    assert_eq!(t.edges(), vec![(0, 1)]);
}

#[test]
fn heights_single_node() {
    let t = CliqueTree { bags: vec![vec![0]], adj: vec![vec![]] };
    let r = root_and_heights(&t, 0);
    assert_eq!(r.height_table, vec![vec![0]]);
}

#[test]
fn heights_path_from_end() {
    let t = CliqueTree {
        bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        adj: vec![vec![1], vec![0, 2], vec![1]],
    };
    assert_eq!(root_and_heights(&t, 0).height, vec![0, 1, 2]);
    assert_eq!(root_and_heights(&t, 2).height, vec![2, 1, 0]);
}

#[test]
fn heights_star_from_center() {
    let t = CliqueTree {
        bags: vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]],
        adj: vec![vec![1, 2, 3], vec![0], vec![0], vec![0]],
    };
    let r = root_and_heights(&t, 0);
    assert_eq!(r.height, vec![0, 1, 1, 1]);
    assert_eq!(r.height_table, vec![vec![0], vec![1, 2, 3]]);
}

#[test]
fn start_heights() {
    // Bags along a path of four cliques; vertex 1 sits in the first three.
    let t = CliqueTree {
        bags: vec![vec![0, 1], vec![1, 2], vec![1, 3], vec![3, 4]],
        adj: vec![vec![1], vec![0, 2], vec![1, 3], vec![2]],
    };
    let r = root_and_heights(&t, 0);
    assert_eq!(start_height(&r, 0, 0), Ok(0));
    assert_eq!(start_height(&r, 0, 1), Ok(2));
    assert_eq!(start_height(&r, 1, 1), Ok(1));
    assert_eq!(start_height(&r, 0, 4), Ok(3));
    assert_eq!(
        start_height(&r, 2, 0),
        Err(TreeError::VertexNotInSubtree { node: 2, vertex: 0 })
    );
}

fn tree_invariants(g: &Graph) {
    let st = Structure::new(g).unwrap();
    let t = &st.tree;
    let w = st.omega();
    assert!(t.len() <= g.n().max(1));
    for bag in &t.bags {
        assert!(bag.len() <= w);
        for (i, &a) in bag.iter().enumerate() {
            for &b in &bag[i + 1..] {
                assert!(g.has_edge(a, b), "bag {bag:?} is not a clique");
            }
        }
    }
    for u in 0..t.len() {
        if let Some(p) = t.parent[u] {
            assert!(t.bags[u].iter().any(|x| !t.bags[p].contains(x)));
            assert!(t.bags[p].iter().any(|x| !t.bags[u].contains(x)));
            assert_eq!(t.height[u], t.height[p] + 1);
        }
    }
    for v in 0..g.n() {
        let holders: Vec<usize> = (0..t.len()).filter(|&u| t.bags[u].contains(&v)).collect();
        assert!(!holders.is_empty());
        // Connected subtree: exactly one holder has a parent outside the holders.
        let tops = holders
            .iter()
            .filter(|&&u| t.parent[u].is_none_or(|p| !t.bags[p].contains(&v)))
            .count();
        assert_eq!(tops, 1, "bags of vertex {v} are not connected");
        let hs: Vec<usize> = holders.iter().map(|&u| t.height[u]).collect();
        let spread = hs.iter().max().unwrap() - hs.iter().min().unwrap();
        assert!(spread <= st.delta, "height spread {spread} > delta {}", st.delta);
    }
    for (u, v) in g.edges() {
        assert!(t.bags.iter().any(|b| b.contains(&u) && b.contains(&v)));
    }
    for (h, nodes) in t.height_table.iter().enumerate() {
        assert!(nodes.iter().all(|&u| t.height[u] == h));
    }
    assert_eq!(t.height_table.iter().map(Vec::len).sum::<usize>(), t.len());
}

#[test]
fn two_tree_bags_are_triangles() {
    let g = gen(Model::Ktree, 50, 3, 49, 1);
    let st = Structure::new(&g).unwrap();
    assert!(st.tree.bags.iter().all(|b| b.len() == 3));
    tree_invariants(&g);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_model() -> impl Strategy<Value = Model> {
    prop_oneof![
        Just(Model::Ktree),
        Just(Model::Interval),
        Just(Model::Pathpower),
        Just(Model::Path)
    ]
}

proptest! {
    #[test]
    fn chordality_matches_brute_force(g in arb_graph(9)) {
        match compute_peo(&g) {
            Ok(peo) => {
                prop_assert!(brute_chordal(&g));
                prop_assert!(is_peo(&g, &peo));
            }
            Err(ChordalError::NotChordal { hole }) => {
                prop_assert!(!brute_chordal(&g));
                prop_assert!(hole.len() >= 4);
                prop_assert!(is_chordless_cycle(&g, &hole));
            }
        }
    }

    #[test]
    fn generated_trees_hold_invariants(
        model in arb_model(),
        n in 1usize..120,
        omega in 2usize..5,
        seed in any::<u64>(),
    ) {
        let g = gen(model, n.max(omega), omega, 3 * omega, seed);
        tree_invariants(&g);
        let st = Structure::new(&g).unwrap();
        prop_assert!(is_peo(&g, &st.peo));
        prop_assert!(st.canon.coloring.iter().all(|&c| c >= 1 && c as usize <= st.omega()));
        prop_assert!(g.edges().iter().all(|&(u, v)| st.canon.coloring[u] != st.canon.coloring[v]));
        let max_bag = st.tree.bags.iter().map(Vec::len).max().unwrap_or(0);
        prop_assert_eq!(max_bag, st.omega());
    }

    #[test]
    fn start_height_matches_walk(n in 2usize..60, seed in any::<u64>()) {
        let g = gen(Model::Ktree, n.max(3), 3, 8, seed);
        let st = Structure::new(&g).unwrap();
        let t = &st.tree;
        for u in 0..t.len() {
            for v in 0..g.n() {
                prop_assert_eq!(t.start_height_opt(u, v), naive_start_height(t, u, v));
            }
        }
    }

    #[test]
    fn start_height_grows_by_one_at_parent(n in 2usize..60, seed in any::<u64>()) {
        let g = gen(Model::Interval, n, 3, 8, seed);
        let st = Structure::new(&g).unwrap();
        let t = &st.tree;
        for u in 0..t.len() {
            let Some(p) = t.parent[u] else { continue };
            for &v in &t.bags[u] {
                if let Some(h) = t.start_height_opt(u, v) {
                    let hp = t.start_height_opt(p, v).unwrap();
                    prop_assert!(hp > h);
                    if !t.bags[p].contains(&v) {
                        prop_assert_eq!(hp, h + 1);
                    }
                }
            }
        }
    }
}
