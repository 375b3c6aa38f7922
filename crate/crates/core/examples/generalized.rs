// Minimal constituents of generalized Foulkes characters.

use foulkes::generalized::{generalized_report, verify_against_oracle};
use foulkes::{Guards, Partition};

pub fn run_example() -> foulkes::Result<()> {
    let g = Guards::default();
    let mu: Partition = "5,5,5,5,5,3,3,3,3,3".parse()?;
    let r = generalized_report(&mu, &g, false)?;
    println!(
        "φ^{mu}: {} candidate unions, {} minimal",
        r.candidates.len(),
        r.minimal.len()
    );
    for l in &r.minimal {
        println!("  {l}");
    }

    let odd: Partition = "7,6,6,6,6,2,2,2,2,1".parse()?;
    println!(
        "{odd}: candidate = {}, minimal = {}",
        r.candidates.contains(&odd),
        r.minimal.contains(&odd)
    );

    // Small cases can be confirmed by decomposing φ^μ directly.
    let small: Partition = "3,3,2,2".parse()?;
    let checked = verify_against_oracle(&small, &g)?;
    println!(
        "φ^{small}: minimal {:?}, oracle agrees = {}",
        checked
            .minimal
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>(),
        checked.consistent()
    );
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
