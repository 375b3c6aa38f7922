// The star construction (m^n)⋆ν and its inverse.

use foulkes::families::enumerate_closed;
use foulkes::families::family_type;
use foulkes::partitions::{star, star_preimage};
use foulkes::{Guards, Partition};

pub fn run_example() -> foulkes::Result<()> {
    let nu: Partition = "4,2,1".parse()?;
    println!("(5^8)⋆{nu} = {}", star(5, 8, &nu)?);

    // Every closed family of shape (4^5) has a star type.
    for f in enumerate_closed(4, 5, &Guards::default())? {
        let t = family_type(&f)?;
        let nu = star_preimage(4, 5, &t).expect("closed (4^5) families have star types");
        println!("{t} = (4^5)⋆{nu}");
    }

    let lam: Partition = "5,5,5,1,1,1".parse()?;
    println!(
        "{lam} is a star type of (3^6): {}",
        star_preimage(3, 6, &lam).is_some()
    );
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
