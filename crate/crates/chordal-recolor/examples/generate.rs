// Seeded instances from every model, with a random proper coloring each.

use chordal_recolor::generators::{gen_coloring, generate, GenSpec, Model};
use chordal_recolor::graph_core::compute_peo;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for model in Model::ALL {
        let spec = GenSpec { model, n: 40, omega: 3, max_degree: 6, seed: 7 };
        let (g, meta) = generate(&spec)?;
        compute_peo(&g)?;
        let (again, _) = generate(&spec)?;
        assert_eq!(g.to_json(), again.to_json());

        let c = gen_coloring(&g, meta.omega + 3, 1)?;
        assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v]));
        println!("{}", serde_json::to_string(&meta)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
