//! Partial isometry matrix for Alt(5) with signature (0;2,2,2,3) on cut E4.
//!
//! Prints the matrix under both injectivity rules and compares the relaxed
//! one with reference values after relabelling classes.
//!
//! ```text
//! cargo run --release --example isometry_matrix
//! ```

use modcomp::group::{preset, DEFAULT_ORDER_CAP};
use modcomp::patch::{isometry_matrix, Injectivity, Selection};
use modcomp::pipeline::Pipeline;
use modcomp::tiling::{CutId, CutSystem};

const REFERENCE: [[usize; 9]; 9] = [
    [60, 36, 36, 35, 35, 35, 36, 36, 36],
    [37, 60, 37, 39, 42, 37, 37, 42, 39],
    [35, 35, 60, 44, 44, 35, 35, 35, 35],
    [36, 36, 42, 60, 42, 36, 36, 36, 36],
    [33, 44, 44, 44, 60, 33, 33, 44, 33],
    [37, 34, 37, 37, 34, 60, 34, 34, 37],
    [38, 38, 36, 36, 36, 36, 60, 38, 38],
    [38, 44, 38, 38, 44, 38, 38, 60, 38],
    [35, 39, 35, 39, 35, 35, 35, 35, 60],
];

/// Reference label of each of our classes.
const RELABEL: [usize; 9] = [4, 2, 3, 7, 8, 6, 1, 0, 5];

fn main() -> modcomp::Result<()> {
    let g = preset("alt5", DEFAULT_ORDER_CAP)?;
    let p = Pipeline::new(g, "2,2,2,3".parse()?);
    let cut = CutSystem::preset(CutId::E4);
    let reps = p.representatives();
    for (i, r) in reps.iter().enumerate() {
        println!("class {i}: {}  (reference V{})", r.display(&p.group), RELABEL[i] + 1);
    }
    for inj in [Injectivity::Enforced, Injectivity::Relaxed] {
        let m = isometry_matrix(&p.group, &cut, &reps, Selection::CayleyDistance, inj)?;
        println!("\ninjectivity {inj}");
        let mut agree = 0;
        for (i, row) in m.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|e| format!("{:>3}", e.unwrap())).collect();
            println!("  {}", cells.join(""));
            agree += (0..9)
                .filter(|&j| row[j] == Some(REFERENCE[RELABEL[i]][RELABEL[j]]))
                .count();
        }
        println!("  {agree}/81 cells agree with the reference after relabelling");
    }
    Ok(())
}
