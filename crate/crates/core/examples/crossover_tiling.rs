//! Crossover sequences and tiling degeneracies for each cut system.
//!
//! Pass `--dot` to print the labelled polygon of the first vector on E1
//! instead.
//!
//! ```text
//! cargo run --example crossover_tiling
//! cargo run --example crossover_tiling -- --dot | dot -Tsvg > e1.svg
//! ```

use modcomp::group::{preset, DEFAULT_ORDER_CAP};
use modcomp::pipeline::Pipeline;
use modcomp::tiling::{
    crossover_sequence, detect_degeneracies, formula_display, polygon_dot, sector_sequence, validate_spoke_cycles,
    CutId, CutSystem,
};

fn main() -> modcomp::Result<()> {
    let p = Pipeline::new(preset("sym3", DEFAULT_ORDER_CAP)?, "2,2,3,3".parse()?);
    let g = &p.group;
    if std::env::args().any(|a| a == "--dot") {
        let cut = CutSystem::preset(CutId::E1);
        print!(
            "{}",
            polygon_dot(g, &cut, &crossover_sequence(g, &cut, &p.classes[0].representative))
        );
        return Ok(());
    }
    for id in CutId::ALL {
        let cut = CutSystem::preset(id);
        cut.validate()?;
        println!("== {id} ==");
        for q in 0..cut.len() {
            println!("  {:<4} {}", cut.boundary[q].to_string(), formula_display(&cut, q));
        }
        for v in &p.vectors {
            let seq = crossover_sequence(g, &cut, v);
            let rep = detect_degeneracies(g, &cut, &seq);
            let taus: Vec<String> = seq.taus.iter().map(|&t| g.display(t)).collect();
            println!(
                "  {:<22} ({})  collapse {:?}  shape {:?}  spokes {}",
                v.display(g),
                taus.join(", "),
                rep.collapsed_edges,
                rep.multi_edge_shape,
                if validate_spoke_cycles(g, &cut, &seq) {
                    "ok"
                } else {
                    "bad"
                }
            );
        }
        // sector labels around each vertex for the first class, at the identity tile
        let seq = crossover_sequence(g, &cut, &p.classes[0].representative);
        for vertex in &cut.vertices {
            let labels: Vec<String> = sector_sequence(g, &cut, &seq, vertex.label, g.identity())?
                .iter()
                .map(|&h| g.display(h))
                .collect();
            println!("  sectors at {}: {}", vertex.label, labels.join(" "));
        }
    }
    Ok(())
}
