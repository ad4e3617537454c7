// Region tuples: build a valid tuple for a clique vector, then move its border
// one coordinate at a time toward a new vector.

use chordal_recolor::buffer::{check_validity, construct_valid_tuple, BufferParams, ColorVector, Validity};
use chordal_recolor::engine::VectorLab;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BufferParams::new(3, 2, 6)?;
    println!(
        "omega=3 delta=2 k=6: {} regions, transposition buffer up to R{}",
        params.n_regions,
        params.s - 1
    );

    let top = ColorVector(vec![2, 6, 1]);
    let nu = construct_valid_tuple(&top, &params);
    print!("{}", nu.dump(3));
    assert_eq!(check_validity(&nu, &params), Validity::Valid);

    let target = ColorVector(vec![3, 1, 2]);
    let mut lab = VectorLab::new(params, nu, &[]);
    while lab.tuple().top() != &target {
        lab.step1(&target)?;
        lab.step2()?;
        println!("top now {} ({} changes per coordinate at most)", lab.tuple().top(), lab.worst);
    }
    assert_eq!(check_validity(lab.tuple(), &params), Validity::Valid);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
