//! Modified Cayley graph with typed, coloured, directed multi-edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};
use crate::tiling::{
    detect_degeneracies, equality_classes, CrossoverSequence, CutSystem, DegeneracyReport, OrientedEdge, VertexLabel,
};

/// A directed edge `(e, src, src * tau_e)`; `position` indexes the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypedEdge {
    pub position: usize,
    pub src: Elem,
    pub dst: Elem,
}

#[derive(Clone, Debug)]
pub struct ModifiedCayleyGraph {
    order: usize,
    degree: usize,
    adj: Vec<Elem>,
    op: Vec<usize>,
    labels: Vec<OrientedEdge>,
    colours: Vec<usize>,
    seq: CrossoverSequence,
    report: DegeneracyReport,
}

/// Builds the graph; fails if some transformation is trivial.
pub fn build_graph(g: &GroupTable, cut: &CutSystem, seq: &CrossoverSequence) -> Result<ModifiedCayleyGraph> {
    if seq.cut != cut.id || seq.taus.len() != cut.len() {
        return Err(Error::MismatchedPatchInputs(format!(
            "sequence for {} used with cut {}",
            seq.cut, cut.id
        )));
    }
    let report = detect_degeneracies(g, cut, seq);
    if report.has_edge_collapse() {
        return Err(Error::EdgeCollapse {
            cut: cut.id.to_string(),
            positions: report
                .collapsed_edges
                .iter()
                .map(|&p| cut.boundary[p].to_string())
                .collect(),
        });
    }
    let degree = cut.len();
    let mut adj = Vec::with_capacity(g.order() * degree);
    for a in g.elements() {
        for &t in &seq.taus {
            adj.push(g.mul(a, t));
        }
    }
    let op: Vec<usize> = (0..degree).map(|p| cut.op(p)).collect();
    let mut colours = vec![usize::MAX; degree];
    let mut next = 0;
    for p in 0..degree {
        if colours[p] == usize::MAX {
            colours[p] = next;
            colours[op[p]] = next;
            next += 1;
        }
    }
    Ok(ModifiedCayleyGraph {
        order: g.order(),
        degree,
        adj,
        op,
        labels: cut.boundary.clone(),
        colours,
        seq: seq.clone(),
        report,
    })
}

impl ModifiedCayleyGraph {
    pub fn node_count(&self) -> usize {
        self.order
    }

    /// Out-degree of every node, `2k`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn target(&self, src: Elem, position: usize) -> Elem {
        self.adj[src.index() * self.degree + position]
    }

    pub fn out_edges(&self, src: Elem) -> impl Iterator<Item = TypedEdge> + '_ {
        (0..self.degree).map(move |p| TypedEdge {
            position: p,
            src,
            dst: self.target(src, p),
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = TypedEdge> + '_ {
        (0..self.order as u32).flat_map(move |a| self.out_edges(Elem(a)))
    }

    pub fn opposite(&self, e: TypedEdge) -> TypedEdge {
        TypedEdge {
            position: self.op[e.position],
            src: e.dst,
            dst: e.src,
        }
    }

    pub fn op_position(&self, p: usize) -> usize {
        self.op[p]
    }

    pub fn label(&self, p: usize) -> OrientedEdge {
        self.labels[p]
    }

    /// Colour class of a position; `e` and its opposite share one.
    pub fn colour(&self, p: usize) -> usize {
        self.colours[p]
    }

    pub fn sequence(&self) -> &CrossoverSequence {
        &self.seq
    }

    pub fn degeneracies(&self) -> &DegeneracyReport {
        &self.report
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![Elem::IDENTITY];
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for e in self.out_edges(a) {
                if !seen[e.dst.index()] {
                    seen[e.dst.index()] = true;
                    count += 1;
                    stack.push(e.dst);
                }
            }
        }
        count == self.order
    }

    pub fn to_dot(&self, g: &GroupTable) -> String {
        const PALETTE: &[&str] = &["blue", "darkgreen", "orange", "purple", "brown", "teal"];
        let mut out = String::from("digraph cayley {\n  node [shape=circle];\n");
        for a in g.elements() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", a.0, g.display(a)));
        }
        for e in self.edges() {
            if !self.labels[e.position].plus {
                continue;
            }
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\", color={}];\n",
                e.src.0,
                e.dst.0,
                self.labels[e.position],
                PALETTE[self.colours[e.position] % PALETTE.len()]
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn adjacency(&self, g: &GroupTable) -> Vec<AdjacencyRow> {
        g.elements()
            .map(|a| AdjacencyRow {
                node: a.0,
                label: g.display(a),
                out: self
                    .out_edges(a)
                    .map(|e| (self.labels[e.position].to_string(), e.dst.0))
                    .collect(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyRow {
    pub node: u32,
    pub label: String,
    pub out: Vec<(String, u32)>,
}

/// Summary that must agree between two graphs admitting a complete
/// label-preserving isometry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphFingerprint {
    pub collapse_count: usize,
    /// Equality classes of the transformations as position sets.
    pub position_partition: Vec<Vec<usize>>,
    pub multi_edge_shape: Vec<usize>,
    pub vertex_collapses: Vec<(VertexLabel, bool)>,
}

pub fn graph_fingerprint(graph: &ModifiedCayleyGraph) -> GraphFingerprint {
    let r = &graph.report;
    GraphFingerprint {
        collapse_count: r.collapsed_edges.len(),
        position_partition: equality_classes(&graph.seq.taus),
        multi_edge_shape: r.multi_edge_shape.clone(),
        vertex_collapses: r.vertex_collapses.iter().map(|v| (v.vertex, v.collapsed)).collect(),
    }
}
