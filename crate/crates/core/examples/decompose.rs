// Brute-force decomposition of Foulkes characters.

use foulkes::oracle::{decompose, decompose_with, Method};
use foulkes::{Guards, Partition};

pub fn run_example() -> foulkes::Result<()> {
    let g = Guards::default();
    let mu: Partition = "3,3,3".parse()?;
    let d = decompose(&mu, &g)?;
    println!("φ^{mu}:");
    for c in &d.constituents {
        println!("  {} x {}", c.mult, c.lambda);
    }
    println!(
        "minimal: {:?}",
        d.minimal.iter().map(|l| l.to_string()).collect::<Vec<_>>()
    );

    // The naive fixed-point count gives the same answer, only slower.
    let small: Partition = "2,2,2".parse()?;
    assert_eq!(
        decompose_with(&small, &g, Method::Naive)?,
        decompose(&small, &g)?
    );
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
