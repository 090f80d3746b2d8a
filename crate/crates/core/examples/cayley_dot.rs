//! Modified Cayley graph of a class representative as Graphviz DOT.
//!
//! ```text
//! cargo run --example cayley_dot -- 1 > v2.dot
//! ```

use modcomp::cayley::{build_graph, graph_fingerprint};
use modcomp::group::{preset, DEFAULT_ORDER_CAP};
use modcomp::pipeline::Pipeline;
use modcomp::tiling::{crossover_sequence, CutId, CutSystem};

fn main() -> modcomp::Result<()> {
    let class: usize = std::env::args().nth(1).map_or(Ok(0), |a| a.parse()).unwrap_or(0);
    let p = Pipeline::new(preset("sym3", DEFAULT_ORDER_CAP)?, "2,2,3,3".parse()?);
    let cut = CutSystem::preset(CutId::E4);
    let rep = &p.classes[class.min(p.classes.len() - 1)].representative;
    let graph = build_graph(&p.group, &cut, &crossover_sequence(&p.group, &cut, rep))?;
    let fp = graph_fingerprint(&graph);
    eprintln!(
        "{} nodes, {} edges, connected {}, multi-edge shape {:?}",
        graph.node_count(),
        graph.edge_count(),
        graph.is_connected(),
        fp.multi_edge_shape
    );
    print!("{}", graph.to_dot(&p.group));
    Ok(())
}
