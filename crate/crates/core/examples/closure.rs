// Downsets in the majorization order and closing a family.
//
// Starting from the downset of {2,4,6,8}, swap two members for two sets that
// break closedness, then close the result again.

use foulkes::families::{close, family_type, is_closed};
use foulkes::partitions::strictly_dominates;
use foulkes::subsets::downset;
use foulkes::MSubset;

pub fn run_example() -> foulkes::Result<()> {
    let p = downset(&MSubset::new(vec![2, 4, 6, 8])?);
    println!(
        "downset of {{2,4,6,8}}: {} sets, type {}",
        p.len(),
        family_type(&p)?
    );

    let q = p.exchange(
        &[
            MSubset::new(vec![2, 4, 6, 8])?,
            MSubset::new(vec![1, 3, 5, 7])?,
        ],
        &[
            MSubset::new(vec![1, 2, 7, 8])?,
            MSubset::new(vec![3, 4, 5, 6])?,
        ],
    )?;
    println!("modified family closed: {}", is_closed(&q));

    let closed = close(&q);
    let t = family_type(&closed)?;
    println!("closure has type {t}");
    assert!(strictly_dominates(&family_type(&p)?, &t)?);
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
