// Garnir check for the homomorphism attached to a closed family.

use foulkes::specht::{hom_image, verify_hom};
use foulkes::{Guards, SetFamily};

pub fn run_example() -> foulkes::Result<()> {
    let g = Guards::default();
    let q = SetFamily::from_lists(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4]])?;
    let v = verify_hom(&q, &g, false)?;
    println!(
        "type {}: {} image terms, {} Garnir pairs, passed = {}",
        v.lambda,
        v.image_terms,
        v.garnir.pairs_checked,
        v.passed()
    );

    let image = hom_image(&q, &g)?;
    for (u, c) in image.iter().take(3) {
        println!("  {c:+} {u}");
    }
    println!("  ...");
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
