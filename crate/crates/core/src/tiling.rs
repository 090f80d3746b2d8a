//! Cut systems on the four-point sphere, crossover sequences, sector labels
//! and tiling degeneracies.
//!
//! Positions along a polygon boundary are 0-based throughout this module.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genvec::GenVector;
use crate::group::{Elem, GroupTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CutId {
    E1,
    E2,
    E3,
    E4,
}

impl CutId {
    pub const ALL: [CutId; 4] = [CutId::E1, CutId::E2, CutId::E3, CutId::E4];
}

impl FromStr for CutId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CutId> {
        match s.trim().to_ascii_uppercase().as_str() {
            "E1" => Ok(CutId::E1),
            "E2" => Ok(CutId::E2),
            "E3" => Ok(CutId::E3),
            "E4" => Ok(CutId::E4),
            _ => Err(Error::UnknownCut(s.to_string())),
        }
    }
}

impl fmt::Display for CutId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Black vertices are the cone points `1..=4`; the white vertex is an extra
/// branch point of the tree with trivial stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexLabel {
    Black(u8),
    White,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Black(j) => write!(f, "{j}"),
            VertexLabel::White => write!(f, "w"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<VertexLabel> {
        match s.trim() {
            "w" | "W" => Ok(VertexLabel::White),
            t => match t.parse::<u8>() {
                Ok(j @ 1..=4) => Ok(VertexLabel::Black(j)),
                _ => Err(Error::UnknownVertex(s.to_string())),
            },
        }
    }
}

/// `e_j^+` or `e_j^-`, with `j` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientedEdge {
    pub edge: u8,
    pub plus: bool,
}

impl OrientedEdge {
    pub fn opposite(self) -> OrientedEdge {
        OrientedEdge {
            edge: self.edge,
            plus: !self.plus,
        }
    }
}

impl fmt::Display for OrientedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{}", self.edge, if self.plus { '+' } else { '-' })
    }
}

/// A product of vector entries: `+j` stands for `c_j`, `-j` for `c_j^-1`.
pub type Word = Vec<i8>;

fn word_display(w: &[i8]) -> String {
    w.iter()
        .map(|&t| if t > 0 { format!("c{t}") } else { format!("c{}^-1", -t) })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: VertexLabel,
    /// Boundary positions of the incident edges in counterclockwise order.
    pub spoke_cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSystem {
    pub id: CutId,
    pub undirected_edges: Vec<(VertexLabel, VertexLabel)>,
    pub boundary: Vec<OrientedEdge>,
    pub formulas: Vec<Word>,
    pub vertices: Vec<Vertex>,
}

fn oe(edge: u8, plus: bool) -> OrientedEdge {
    OrientedEdge { edge, plus }
}

type PresetData = (
    Vec<(VertexLabel, VertexLabel)>,
    Vec<OrientedEdge>,
    Vec<Word>,
    Vec<(VertexLabel, Vec<usize>)>,
);

impl CutSystem {
    pub fn preset(id: CutId) -> CutSystem {
        use VertexLabel::{Black as B, White as W};
        let (edges, boundary, formulas, cycles): PresetData = match id {
            CutId::E1 => (
                vec![(B(1), B(2)), (B(2), B(3)), (B(3), B(4))],
                vec![
                    oe(1, true),
                    oe(2, true),
                    oe(3, true),
                    oe(3, false),
                    oe(2, false),
                    oe(1, false),
                ],
                vec![vec![-1], vec![-2, -1], vec![4], vec![-4], vec![1, 2], vec![1]],
                vec![(B(1), vec![5]), (B(2), vec![0, 4]), (B(3), vec![1, 3]), (B(4), vec![2])],
            ),
            CutId::E2 => (
                vec![(B(1), B(4)), (B(2), B(4)), (B(3), B(4))],
                vec![
                    oe(1, true),
                    oe(2, true),
                    oe(2, false),
                    oe(3, true),
                    oe(3, false),
                    oe(1, false),
                ],
                vec![vec![-1], vec![2], vec![-2], vec![3], vec![-3], vec![1]],
                vec![(B(1), vec![5]), (B(2), vec![1]), (B(3), vec![3]), (B(4), vec![4, 2, 0])],
            ),
            CutId::E3 => (
                vec![(B(1), W), (B(2), W), (B(2), B(3)), (B(4), W)],
                vec![
                    oe(1, true),
                    oe(2, true),
                    oe(3, true),
                    oe(3, false),
                    oe(2, false),
                    oe(4, true),
                    oe(4, false),
                    oe(1, false),
                ],
                vec![
                    vec![-1],
                    vec![-1, -4],
                    vec![3],
                    vec![-3],
                    vec![4, 1],
                    vec![4],
                    vec![-4],
                    vec![1],
                ],
                vec![
                    (B(1), vec![7]),
                    (B(2), vec![1, 3]),
                    (B(3), vec![2]),
                    (B(4), vec![5]),
                    (W, vec![0, 6, 4]),
                ],
            ),
            CutId::E4 => (
                vec![(B(1), W), (B(2), W), (B(3), W), (B(4), W)],
                vec![
                    oe(1, true),
                    oe(2, true),
                    oe(2, false),
                    oe(3, true),
                    oe(3, false),
                    oe(4, true),
                    oe(4, false),
                    oe(1, false),
                ],
                vec![
                    vec![-1],
                    vec![2],
                    vec![-2],
                    vec![3],
                    vec![-3],
                    vec![4],
                    vec![-4],
                    vec![1],
                ],
                vec![
                    (B(1), vec![7]),
                    (B(2), vec![1]),
                    (B(3), vec![3]),
                    (B(4), vec![5]),
                    (W, vec![0, 6, 4, 2]),
                ],
            ),
        };
        let cut = CutSystem {
            id,
            undirected_edges: edges,
            boundary,
            formulas,
            vertices: cycles
                .into_iter()
                .map(|(label, spoke_cycle)| Vertex { label, spoke_cycle })
                .collect(),
        };
        debug_assert!(cut.validate().is_ok());
        cut
    }

    /// Number of undirected edges.
    pub fn k(&self) -> usize {
        self.undirected_edges.len()
    }

    /// Number of boundary positions, `2k`.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Position of the oppositely oriented copy of the edge at `p`.
    pub fn op(&self, p: usize) -> usize {
        let target = self.boundary[p].opposite();
        self.boundary
            .iter()
            .position(|&e| e == target)
            .expect("validated cut systems pair every edge")
    }

    pub fn vertex(&self, label: VertexLabel) -> Result<&Vertex> {
        self.vertices
            .iter()
            .find(|v| v.label == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Structural checks on edges, orientations, valencies and spoke cycles.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Internal(format!("cut system {}: {m}", self.id)));
        let k = self.k();
        if self.boundary.len() != 2 * k || self.formulas.len() != 2 * k {
            return fail("boundary length is not 2k".into());
        }
        for e in 1..=k as u8 {
            for plus in [true, false] {
                if self.boundary.iter().filter(|&&b| b == oe(e, plus)).count() != 1 {
                    return fail(format!("{} does not occur exactly once", oe(e, plus)));
                }
            }
        }
        for p in 0..2 * k {
            let inv: Word = self.formulas[p].iter().rev().map(|t| -t).collect();
            if inv != self.formulas[self.op(p)] {
                return fail(format!(
                    "formula at {} is not inverse to its opposite",
                    self.boundary[p]
                ));
            }
        }
        let mut covered = vec![0usize; 2 * k];
        for v in &self.vertices {
            let valency = self
                .undirected_edges
                .iter()
                .map(|&(a, b)| (a == v.label) as usize + (b == v.label) as usize)
                .sum::<usize>();
            if valency != v.spoke_cycle.len() {
                return fail(format!("vertex {} valency mismatch", v.label));
            }
            // walking around a vertex: leave through p, come back in on op(p),
            // the next spoke is the edge just before it on the boundary
            for (i, &p) in v.spoke_cycle.iter().enumerate() {
                covered[p] += 1;
                let next = v.spoke_cycle[(i + 1) % v.spoke_cycle.len()];
                if (self.op(p) + 2 * k - 1) % (2 * k) != next {
                    return fail(format!("spoke cycle of vertex {} is not a rotation circuit", v.label));
                }
            }
        }
        if covered.iter().any(|&c| c != 1) {
            return fail("spoke cycles do not partition the boundary".into());
        }
        Ok(())
    }
}

/// Crossover transformations of a vector along one cut system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossoverSequence {
    pub cut: CutId,
    pub source: GenVector,
    pub taus: Vec<Elem>,
}

fn eval(g: &GroupTable, v: &GenVector, w: &[i8]) -> Elem {
    w.iter().fold(Elem::IDENTITY, |acc, &t| {
        let c = v.get(t.unsigned_abs() as usize - 1);
        g.mul(acc, if t > 0 { c } else { g.inv(c) })
    })
}

pub fn crossover_sequence(g: &GroupTable, cut: &CutSystem, v: &GenVector) -> CrossoverSequence {
    CrossoverSequence {
        cut: cut.id,
        source: *v,
        taus: cut.formulas.iter().map(|w| eval(g, v, w)).collect(),
    }
}

/// Stabilizer generator of a vertex: `c_j` for black vertex `j`, 1 for white.
fn vertex_element(v: &GenVector, label: VertexLabel) -> Elem {
    match label {
        VertexLabel::Black(j) => v.get(j as usize - 1),
        VertexLabel::White => Elem::IDENTITY,
    }
}

/// Labels of the sectors around `vertex`, starting from `h`.
pub fn sector_sequence(
    g: &GroupTable,
    cut: &CutSystem,
    seq: &CrossoverSequence,
    vertex: VertexLabel,
    h: Elem,
) -> Result<Vec<Elem>> {
    let v = cut.vertex(vertex)?;
    let m = g.element_order(vertex_element(&seq.source, vertex)) as usize;
    let mut out = Vec::with_capacity(v.spoke_cycle.len() * m);
    let mut cur = h;
    for _ in 0..m {
        for &p in &v.spoke_cycle {
            out.push(cur);
            cur = g.mul(cur, seq.taus[p]);
        }
    }
    Ok(out)
}

/// One-cycle product of the spoke transformations around `vertex`, starting
/// at spoke `start`.
pub fn spoke_product(g: &GroupTable, seq: &CrossoverSequence, vertex: &Vertex, start: usize) -> Elem {
    let n = vertex.spoke_cycle.len();
    (0..n).fold(Elem::IDENTITY, |acc, i| {
        g.mul(acc, seq.taus[vertex.spoke_cycle[(start + i) % n]])
    })
}

/// True iff every white vertex has trivial spoke product and every black
/// vertex `j` has spoke product exactly `c_j` (hence of order `m_j`).
pub fn validate_spoke_cycles(g: &GroupTable, cut: &CutSystem, seq: &CrossoverSequence) -> bool {
    cut.vertices.iter().all(|v| {
        let want = vertex_element(&seq.source, v.label);
        let got = spoke_product(g, seq, v, 0);
        match v.label {
            VertexLabel::White => (0..v.spoke_cycle.len()).all(|s| spoke_product(g, seq, v, s).is_identity()),
            VertexLabel::Black(_) => got == want,
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCollapse {
    pub vertex: VertexLabel,
    pub collapsed: bool,
    /// First repeated pair of positions in the sector sequence.
    pub repeat: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyReport {
    /// Positions with trivial crossover transformation.
    pub collapsed_edges: Vec<usize>,
    /// Positions sharing one nontrivial transformation, groups of size >= 2.
    pub multi_edge_groups: Vec<Vec<usize>>,
    /// Sizes of all equality classes of nontrivial positions, descending.
    pub multi_edge_shape: Vec<usize>,
    pub vertex_collapses: Vec<VertexCollapse>,
}

impl DegeneracyReport {
    pub fn has_edge_collapse(&self) -> bool {
        !self.collapsed_edges.is_empty()
    }
}

/// Equality classes of nontrivial transformations, ordered by first position.
pub fn equality_classes(taus: &[Elem]) -> Vec<Vec<usize>> {
    let mut by_value: BTreeMap<Elem, Vec<usize>> = BTreeMap::new();
    for (p, &t) in taus.iter().enumerate() {
        if !t.is_identity() {
            by_value.entry(t).or_default().push(p);
        }
    }
    let mut classes: Vec<Vec<usize>> = by_value.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    classes
}

pub fn detect_degeneracies(g: &GroupTable, cut: &CutSystem, seq: &CrossoverSequence) -> DegeneracyReport {
    let collapsed_edges = (0..seq.taus.len()).filter(|&p| seq.taus[p].is_identity()).collect();
    let classes = equality_classes(&seq.taus);
    let mut multi_edge_shape: Vec<usize> = classes.iter().map(Vec::len).collect();
    multi_edge_shape.sort_unstable_by(|a, b| b.cmp(a));
    let vertex_collapses = cut
        .vertices
        .iter()
        .map(|v| {
            let s = sector_sequence(g, cut, seq, v.label, Elem::IDENTITY).expect("vertex comes from the cut");
            let mut first: BTreeMap<Elem, usize> = BTreeMap::new();
            let mut repeat = None;
            for (i, &e) in s.iter().enumerate() {
                if let Some(&j) = first.get(&e) {
                    repeat = Some((j, i));
                    break;
                }
                first.insert(e, i);
            }
            VertexCollapse {
                vertex: v.label,
                collapsed: repeat.is_some(),
                repeat,
            }
        })
        .collect();
    DegeneracyReport {
        collapsed_edges,
        multi_edge_groups: classes.into_iter().filter(|c| c.len() >= 2).collect(),
        multi_edge_shape,
        vertex_collapses,
    }
}

const PALETTE: &[&str] = &[
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "teal",
    "magenta",
    "olive",
];

/// DOT drawing of the distinguished polygon: one edge per boundary position,
/// labelled with its oriented edge and transformation. Repeated transformations
/// share a colour; collapsed edges are red and dashed.
pub fn polygon_dot(g: &GroupTable, cut: &CutSystem, seq: &CrossoverSequence) -> String {
    let n = cut.len();
    let classes = equality_classes(&seq.taus);
    let mut colour = vec!["black"; n];
    let mut next = 0;
    for c in &classes {
        if c.len() >= 2 {
            for &p in c {
                colour[p] = PALETTE[next % PALETTE.len()];
            }
            next += 1;
        }
    }
    let mut out = format!("graph polygon_{} {{\n  layout=circo;\n  node [shape=point];\n", cut.id);
    for (p, &tau) in seq.taus.iter().enumerate() {
        let (col, style) = if tau.is_identity() {
            ("red", "dashed")
        } else {
            (colour[p], "solid")
        };
        out.push_str(&format!(
            "  v{p} -- v{} [label=\"{} : {}\", color={col}, style={style}];\n",
            (p + 1) % n,
            cut.boundary[p],
            g.display(tau),
        ));
    }
    out.push_str("}\n");
    out
}

/// Formula of position `p` as text, e.g. `c1^-1`.
pub fn formula_display(cut: &CutSystem, p: usize) -> String {
    word_display(&cut.formulas[p])
}
