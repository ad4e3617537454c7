// Recolor a generated chordal graph between two random colorings and check the
// result with the independent verifier.

use chordal_recolor::generators::{gen_coloring, generate, GenSpec, Model};
use chordal_recolor::io::{parse_sequence, write_sequence, SequenceMeta};
use chordal_recolor::{transform, verify_sequence, EngineConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GenSpec { model: Model::Ktree, n: 300, omega: 3, max_degree: 8, seed: 11 };
    let (g, meta) = generate(&spec)?;
    let k = meta.omega + 3;
    let c1 = gen_coloring(&g, k, 1)?;
    let c2 = gen_coloring(&g, k, 2)?;

    let r = transform(&g, &c1, &c2, k, EngineConfig::default())?;
    println!(
        "n={} omega={} delta={} k={k}: {} recolorings, at most {} per vertex",
        g.n(),
        r.report.omega,
        r.report.delta,
        r.report.length,
        r.report.max_per_vertex
    );

    let text = write_sequence(
        &r.steps,
        &SequenceMeta {
            length: r.report.length,
            max_per_vertex: r.report.max_per_vertex,
            omega: r.report.omega,
            delta: r.report.delta,
            k,
        },
    );
    let (steps, back) = parse_sequence(&text)?;
    assert_eq!(steps, r.steps);
    assert_eq!(back.length, r.steps.len());

    let report = verify_sequence(&g, &c1, &steps, &c2, k);
    println!("verifier: ok={} maxPerVertex={}", report.ok, report.max_per_vertex);
    assert!(report.ok);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
