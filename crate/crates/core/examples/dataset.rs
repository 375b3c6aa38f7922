// A small table of minimal constituents, written as CSV to stdout.

use foulkes::dataset::build_dataset;
use foulkes::io::write_dataset_csv;
use foulkes::Guards;

pub fn run_example() -> foulkes::Result<()> {
    let rows = build_dataset(7, Some(10), &Guards::default(), |s| eprintln!("row {s}"))?;
    let mut csv = Vec::new();
    write_dataset_csv(&rows, &mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));
    assert!(rows
        .iter()
        .filter_map(|r| r.oracle.as_ref())
        .all(|o| o.verified));
    Ok(())
}

fn main() -> foulkes::Result<()> {
    run_example()
}
