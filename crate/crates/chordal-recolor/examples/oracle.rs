// Exact distances on tiny instances, compared with the engine.

use chordal_recolor::generators::{gen_coloring, generate, GenSpec, Model};
use chordal_recolor::oracle::{bfs_distance, reconfig_connected, reconfig_diameter, DEFAULT_STATE_CAP};
use chordal_recolor::{transform, EngineConfig, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cap = DEFAULT_STATE_CAP;
    let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)])?;
    println!("K3 with 3 colors connected: {}", reconfig_connected(&k3, 3, cap)?);
    println!("K3 with 4 colors connected: {}", reconfig_connected(&k3, 4, cap)?);

    let edge = Graph::from_edges(2, &[(0, 1)])?;
    println!("edge, 3 colors: diameter {}", reconfig_diameter(&edge, 3, cap)?);

    let (g, meta) = generate(&GenSpec { model: Model::Ktree, n: 6, omega: 2, max_degree: 5, seed: 3 })?;
    let k = meta.omega + 3;
    let c1 = gen_coloring(&g, k, 5)?;
    let c2 = gen_coloring(&g, k, 6)?;
    let best = bfs_distance(&g, &c1, &c2, k, cap)?.ok_or("endpoints are not connected")?;
    let engine = transform(&g, &c1, &c2, k, EngineConfig::default())?;
    println!("6-vertex tree: shortest {best}, engine {}", engine.steps.len());
    assert!(engine.steps.len() >= best);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
