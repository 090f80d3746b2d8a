//! Classes, genus and modular orbit sizes for the shipped group presets.
//!
//! ```text
//! cargo run --release --example census
//! ```

use std::time::Instant;

use modcomp::cli::{census_row, CENSUS_ROWS};
use modcomp::group::DEFAULT_ORDER_CAP;

fn main() -> modcomp::Result<()> {
    println!(
        "{:<10} {:>4}  {:<16} {:>5} {:>7} {:>7}  orbits",
        "group", "|G|", "signature", "genus", "vectors", "classes"
    );
    for &(group, sig, _) in CENSUS_ROWS {
        let start = Instant::now();
        let r = census_row(group, sig, DEFAULT_ORDER_CAP)?;
        println!(
            "{:<10} {:>4}  {:<16} {:>5} {:>7} {:>7}  {:?}  [{:.2?}]",
            r.group,
            r.order,
            r.signature,
            r.genus.unwrap(),
            r.vectors,
            r.classes,
            r.orbit_sizes,
            start.elapsed()
        );
    }
    Ok(())
}
