// Sequence length and per-vertex counts as the graph grows.

use std::time::Instant;

use chordal_recolor::generators::{gen_coloring, generate, GenSpec, Model};
use chordal_recolor::{transform, EngineConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6} {:>8} {:>8} {:>6} {:>8}", "n", "length", "len/n", "max", "ms");
    for n in [250, 500, 1000] {
        let (g, _) = generate(&GenSpec { model: Model::Interval, n, omega: 3, max_degree: 8, seed: 0 })?;
        let c1 = gen_coloring(&g, 6, 0)?;
        let c2 = gen_coloring(&g, 6, 1)?;
        let t0 = Instant::now();
        let r = transform(&g, &c1, &c2, 6, EngineConfig::default())?;
        println!(
            "{n:>6} {:>8} {:>8.2} {:>6} {:>8.1}",
            r.report.length,
            r.report.length as f64 / n as f64,
            r.report.max_per_vertex,
            t0.elapsed().as_secs_f64() * 1e3
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
