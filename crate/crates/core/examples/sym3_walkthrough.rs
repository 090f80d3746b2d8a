//! Every stage for Sym(3) with signature (0;2,2,3,3).
//!
//! ```text
//! cargo run --example sym3_walkthrough
//! ```

use modcomp::braid::modular_generators;
use modcomp::group::{preset, DEFAULT_ORDER_CAP};
use modcomp::patch::{isometry_matrix, Injectivity, Selection};
use modcomp::pipeline::Pipeline;
use modcomp::tiling::{crossover_sequence, CutId, CutSystem};

fn main() -> modcomp::Result<()> {
    let g = preset("sym3", DEFAULT_ORDER_CAP)?;
    println!("{} has order {}", g.name(), g.order());
    for a in g.elements() {
        println!("  {:>2}  {:<5} order {}", a.0, g.display(a), g.element_order(a));
    }

    let p = Pipeline::new(g, "2,2,3,3".parse()?);
    let g = &p.group;
    println!("\n{} automorphisms", p.automorphisms.len());
    println!("signature {} genus {}", p.signature, p.genus().unwrap());
    println!("{} generating vectors:", p.vectors.len());
    for v in &p.vectors {
        println!("  {}", v.display(g));
    }

    println!("\n{} classes:", p.classes.len());
    for c in &p.classes {
        println!(
            "  V{} = {}  ({} vectors)",
            c.index + 1,
            c.representative.display(g),
            c.orbit_size
        );
    }

    let moves: Vec<String> = modular_generators(&p.signature).iter().map(|m| m.to_string()).collect();
    println!("\nmodular generators: {}", moves.join(" "));
    println!("orbit sizes {}", p.strata()?.sizes_display());

    let cut = CutSystem::preset(CutId::E4);
    for c in &p.classes {
        let seq = crossover_sequence(g, &cut, &c.representative);
        let taus: Vec<String> = seq.taus.iter().map(|&t| g.display(t)).collect();
        println!("E4 crossover for V{}: ({})", c.index + 1, taus.join(", "));
    }

    let m = isometry_matrix(
        g,
        &cut,
        &p.representatives(),
        Selection::CayleyDistance,
        Injectivity::Enforced,
    )?;
    println!("\npatch sizes:");
    for row in &m.entries {
        println!("  {:?}", row.iter().map(|e| e.unwrap()).collect::<Vec<_>>());
    }
    Ok(())
}
