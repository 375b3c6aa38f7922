// Minimal set families of shape (3^4) and their types.
//
// Run with `cargo run --example minimal_types`.

use foulkes::families::minimal_types;
use foulkes::Guards;

pub fn run_example() -> foulkes::Result<()> {
    let types = minimal_types(3, 4, &Guards::default())?;
    for t in &types {
        println!("type {} with d = {}", t.lambda, t.multiplicity);
        for f in &t.families {
            println!("    {f}");
        }
    }
    assert_eq!(types.len(), 3);
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
