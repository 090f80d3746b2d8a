//! Distribution of patch sizes under random boundary selection, compared
//! with the deterministic Cayley-distance rule.
//!
//! ```text
//! cargo run --release --example random_patches
//! ```

use modcomp::group::{preset, DEFAULT_ORDER_CAP};
use modcomp::patch::{grow_patch, sample_patches, verify_patch, Injectivity, Selection};
use modcomp::pipeline::Pipeline;
use modcomp::tiling::{crossover_sequence, CutId, CutSystem};

fn main() -> modcomp::Result<()> {
    let p = Pipeline::new(preset("alt5", DEFAULT_ORDER_CAP)?, "2,2,2,3".parse()?);
    let g = &p.group;
    let cut = CutSystem::preset(CutId::E4);
    let seqs: Vec<_> = p
        .representatives()
        .iter()
        .map(|v| crossover_sequence(g, &cut, v))
        .collect();
    for j in 1..4 {
        let fixed = grow_patch(g, &cut, &seqs[0], &seqs[j], Selection::CayleyDistance)?;
        let sample = sample_patches(g, &cut, &seqs[0], &seqs[j], Injectivity::Enforced, 1, 200)?;
        println!(
            "0 -> {j}: cayley-distance {}  random min {} max {} mean {:.2}",
            fixed.size, sample.min, sample.max, sample.mean
        );
    }
    let r = grow_patch(g, &cut, &seqs[0], &seqs[1], Selection::Random { seed: 42 })?;
    println!(
        "seed 42 patch of size {} verifies: {}",
        r.size,
        verify_patch(g, &seqs[0], &seqs[1], &r)
    );
    Ok(())
}
