// The verifier replays a sequence and reports the first step that breaks it.

use chordal_recolor::{verify_sequence, Graph, RecolorStep};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)])?;
    let start = [1, 2, 1];
    let end = [2, 1, 2];
    let step = |v, from, to| RecolorStep { v, from, to };
    let good = vec![step(1, 2, 3), step(0, 1, 2), step(2, 1, 2), step(1, 3, 1)];

    let report = verify_sequence(&g, &start, &good, &end, 3);
    println!("good: {}", serde_json::to_string(&report)?);
    assert!(report.ok);

    let mut clash = good.clone();
    clash[0].to = 1;
    let report = verify_sequence(&g, &start, &clash, &end, 3);
    println!("clash: index {:?}, {:?}", report.failure_index, report.failure_reason);
    assert_eq!(report.failure_index, Some(0));

    let short = &good[..3];
    let report = verify_sequence(&g, &start, short, &end, 3);
    println!("short: index {:?}, {:?}", report.failure_index, report.failure_reason);
    assert_eq!(report.failure_index, Some(3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
