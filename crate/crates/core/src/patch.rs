//! Growing maximal partial isometries between two tilings of one quotient.
//!
//! Polygons of the first surface are labelled by `G`. A patch is a set `H`
//! containing 1 with an injective label map `w: H -> G` such that every edge
//! `(e_j, g, g tau_{j,1})` between polygons of `H` satisfies
//! `w(g tau_{j,1}) = w(g) tau_{j,2}`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::TypedEdge;
use crate::error::{Error, Result};
use crate::genvec::GenVector;
use crate::group::{is_automorphism, Elem, GroupTable};
use crate::tiling::{crossover_sequence, detect_degeneracies, CrossoverSequence, CutSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Selection {
    /// Always take the first boundary edge (breadth-first growth).
    CayleyDistance,
    /// Take a uniformly random boundary edge.
    Random { seed: u64 },
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selection::CayleyDistance => write!(f, "cayley-distance"),
            Selection::Random { seed } => write!(f, "random(seed={seed})"),
        }
    }
}

/// Selection mode without its seed, as parsed from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionMode {
    CayleyDistance,
    Random,
}

impl FromStr for SelectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<SelectionMode> {
        match s.trim() {
            "cayley-distance" | "cayley" => Ok(SelectionMode::CayleyDistance),
            "random" => Ok(SelectionMode::Random),
            other => Err(Error::Config(format!("unknown selection mode `{other}`"))),
        }
    }
}

impl SelectionMode {
    pub fn with_seed(self, seed: Option<u64>) -> Result<Selection> {
        match (self, seed) {
            (SelectionMode::CayleyDistance, None) => Ok(Selection::CayleyDistance),
            (SelectionMode::CayleyDistance, Some(_)) => {
                Err(Error::Config("--seed is only meaningful with random selection".into()))
            }
            (SelectionMode::Random, Some(seed)) => Ok(Selection::Random { seed }),
            (SelectionMode::Random, None) => Err(Error::Config("random selection requires --seed".into())),
        }
    }
}

/// Whether a candidate polygon must receive a label not yet used by `w`.
///
/// `Enforced` is the algorithm as stated. `Relaxed` skips that test and keeps
/// only the continuity test; a complete relaxed patch is still an
/// automorphism, since continuity on every edge forces `w` to be a
/// homomorphism onto the group generated by the second sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Injectivity {
    #[default]
    Enforced,
    Relaxed,
}

impl FromStr for Injectivity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Injectivity> {
        match s.trim() {
            "enforced" => Ok(Injectivity::Enforced),
            "relaxed" => Ok(Injectivity::Relaxed),
            other => Err(Error::Config(format!("unknown injectivity rule `{other}`"))),
        }
    }
}

impl fmt::Display for Injectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Injectivity::Enforced => write!(f, "enforced"),
            Injectivity::Relaxed => write!(f, "relaxed"),
        }
    }
}

/// The evolving state of one run.
#[derive(Clone, Debug)]
pub struct PatchState {
    pub h: Vec<Elem>,
    /// `w[g]` for `g` in `H`.
    pub w: Vec<Option<Elem>>,
    pub wh: Vec<Elem>,
    pub int_edges_1: Vec<TypedEdge>,
    pub int_edges_2: Vec<TypedEdge>,
    pub boundary_edges_1: Vec<TypedEdge>,
    pub bad_edges_1: Vec<TypedEdge>,
    in_wh: Vec<bool>,
}

impl PatchState {
    fn seed(n: usize, taus1: &[Elem]) -> PatchState {
        let mut w = vec![None; n];
        w[0] = Some(Elem::IDENTITY);
        let mut in_wh = vec![false; n];
        in_wh[0] = true;
        PatchState {
            h: vec![Elem::IDENTITY],
            w,
            wh: vec![Elem::IDENTITY],
            int_edges_1: Vec::new(),
            int_edges_2: Vec::new(),
            boundary_edges_1: taus1
                .iter()
                .enumerate()
                .map(|(p, &t)| TypedEdge {
                    position: p,
                    src: Elem::IDENTITY,
                    dst: t,
                })
                .collect(),
            bad_edges_1: Vec::new(),
            in_wh,
        }
    }

    pub fn in_h(&self, g: Elem) -> bool {
        self.w[g.index()].is_some()
    }

    /// Cheap structural invariants, checked after every step in debug builds.
    fn invariants_hold(&self, g: &GroupTable, s1: &[Elem], s2: &[Elem], inj: Injectivity) -> bool {
        let w = |a: Elem| self.w[a.index()];
        self.w[0] == Some(Elem::IDENTITY)
            && self.h.len() == self.wh.len()
            && (inj == Injectivity::Relaxed || self.in_wh.iter().filter(|&&b| b).count() == self.h.len())
            && self.int_edges_1.iter().zip(&self.int_edges_2).all(|(e1, e2)| {
                w(e1.dst) == Some(g.mul(w(e1.src).unwrap(), s2[e1.position]))
                    && e1.dst == g.mul(e1.src, s1[e1.position])
                    && e2.src == w(e1.src).unwrap()
                    && e2.dst == w(e1.dst).unwrap()
            })
            && self
                .boundary_edges_1
                .iter()
                .all(|e| self.in_h(e.src) && !self.in_h(e.dst))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchResult {
    /// Polygons in order of addition.
    pub h: Vec<Elem>,
    /// `(h, w(h))` in order of addition.
    pub w: Vec<(Elem, Elem)>,
    pub size: usize,
    pub complete: bool,
    pub selection: Selection,
    pub injectivity: Injectivity,
    pub iterations: usize,
}

impl PatchResult {
    pub fn w_of(&self, g: Elem) -> Option<Elem> {
        self.w.iter().find(|&&(a, _)| a == g).map(|&(_, b)| b)
    }
}

fn check_inputs(g: &GroupTable, cut: &CutSystem, seq1: &CrossoverSequence, seq2: &CrossoverSequence) -> Result<()> {
    if seq1.cut != cut.id || seq2.cut != cut.id {
        return Err(Error::MismatchedPatchInputs(format!(
            "sequences for {} and {} used with cut {}",
            seq1.cut, seq2.cut, cut.id
        )));
    }
    if seq1.taus.len() != cut.len() || seq2.taus.len() != cut.len() {
        return Err(Error::MismatchedPatchInputs(
            "sequence length differs from the cut".into(),
        ));
    }
    let orders = |v: &GenVector| v.0.map(|c| g.element_order(c));
    if orders(&seq1.source) != orders(&seq2.source) {
        return Err(Error::MismatchedPatchInputs("vectors have different signatures".into()));
    }
    for seq in [seq1, seq2] {
        let r = detect_degeneracies(g, cut, seq);
        if r.has_edge_collapse() {
            return Err(Error::EdgeCollapse {
                cut: cut.id.to_string(),
                positions: r.collapsed_edges.iter().map(|&p| cut.boundary[p].to_string()).collect(),
            });
        }
    }
    Ok(())
}

/// Runs the patch-growing algorithm from the polygon labelled 1.
pub fn grow_patch(
    g: &GroupTable,
    cut: &CutSystem,
    seq1: &CrossoverSequence,
    seq2: &CrossoverSequence,
    selection: Selection,
) -> Result<PatchResult> {
    grow_patch_with(g, cut, seq1, seq2, selection, Injectivity::Enforced)
}

pub fn grow_patch_with(
    g: &GroupTable,
    cut: &CutSystem,
    seq1: &CrossoverSequence,
    seq2: &CrossoverSequence,
    selection: Selection,
    injectivity: Injectivity,
) -> Result<PatchResult> {
    check_inputs(g, cut, seq1, seq2)?;
    let (t1, t2) = (&seq1.taus[..], &seq2.taus[..]);
    let n2k = cut.len();
    let op: Vec<usize> = (0..n2k).map(|p| cut.op(p)).collect();
    let mut st = PatchState::seed(g.order(), t1);
    let mut rng = match selection {
        Selection::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Selection::CayleyDistance => None,
    };
    let mut iterations = 0;

    while !st.boundary_edges_1.is_empty() {
        iterations += 1;
        let idx = match rng.as_mut() {
            None => 0,
            Some(r) => r.random_range(0..st.boundary_edges_1.len()),
        };
        let entry = st.boundary_edges_1[idx];
        let h = entry.dst;
        let wg = st.w[entry.src.index()].expect("boundary edges leave H");
        let wh = g.mul(wg, t2[entry.position]);

        // edges (q, g', h) with g' in H become interior
        let incoming: Vec<TypedEdge> = (0..n2k)
            .filter_map(|q| {
                let src = g.mul(h, t1[op[q]]);
                st.in_h(src).then_some(TypedEdge {
                    position: q,
                    src,
                    dst: h,
                })
            })
            .collect();
        let passes = (injectivity == Injectivity::Relaxed || !st.in_wh[wh.index()])
            && incoming
                .iter()
                .all(|e| g.mul(st.w[e.src.index()].unwrap(), t2[e.position]) == wh);

        if passes {
            st.h.push(h);
            st.w[h.index()] = Some(wh);
            st.wh.push(wh);
            st.in_wh[wh.index()] = true;
            for e in &incoming {
                let we = st.w[e.src.index()].unwrap();
                st.int_edges_1.push(*e);
                st.int_edges_1.push(TypedEdge {
                    position: op[e.position],
                    src: h,
                    dst: e.src,
                });
                st.int_edges_2.push(TypedEdge {
                    position: e.position,
                    src: we,
                    dst: wh,
                });
                st.int_edges_2.push(TypedEdge {
                    position: op[e.position],
                    src: wh,
                    dst: we,
                });
            }
            st.boundary_edges_1.retain(|e| e.dst != h);
            let start = op[entry.position];
            for i in 0..n2k {
                let q = (start + i) % n2k;
                let dst = g.mul(h, t1[q]);
                if !st.in_h(dst) {
                    st.boundary_edges_1.push(TypedEdge {
                        position: q,
                        src: h,
                        dst,
                    });
                }
            }
        } else {
            let (bad, keep): (Vec<TypedEdge>, Vec<TypedEdge>) = st.boundary_edges_1.iter().partition(|e| e.dst == h);
            st.boundary_edges_1 = keep;
            st.bad_edges_1.extend(bad);
        }
        debug_assert!(st.invariants_hold(g, t1, t2, injectivity));
    }

    let size = st.h.len();
    Ok(PatchResult {
        w: st.h.iter().map(|&a| (a, st.w[a.index()].unwrap())).collect(),
        h: st.h,
        size,
        complete: size == g.order(),
        selection,
        injectivity,
        iterations,
    })
}

/// Independent check of a result: `w(1) = 1`, injectivity (unless the
/// result was grown with relaxed rules), continuity on every edge between
/// polygons of `H`, edge-connectedness of `H`, and for a complete result
/// that `w` is an automorphism.
pub fn verify_patch(g: &GroupTable, seq1: &CrossoverSequence, seq2: &CrossoverSequence, result: &PatchResult) -> bool {
    let n = g.order();
    let mut w: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    for &(a, b) in &result.w {
        if a.index() >= n || b.index() >= n || w[a.index()].is_some() {
            return false;
        }
        if used[b.index()] && result.injectivity == Injectivity::Enforced {
            return false;
        }
        w[a.index()] = Some(b);
        used[b.index()] = true;
    }
    if w[0] != Some(Elem::IDENTITY) || result.size != result.w.len() {
        return false;
    }
    let mut h_sorted = result.h.clone();
    h_sorted.sort();
    let mut dom: Vec<Elem> = result.w.iter().map(|&(a, _)| a).collect();
    dom.sort();
    if h_sorted != dom {
        return false;
    }
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut stack = vec![Elem::IDENTITY];
    while let Some(a) = stack.pop() {
        for (p, &t) in seq1.taus.iter().enumerate() {
            let b = g.mul(a, t);
            if let Some(wb) = w[b.index()] {
                if wb != g.mul(w[a.index()].unwrap(), seq2.taus[p]) {
                    return false;
                }
                if !reached[b.index()] {
                    reached[b.index()] = true;
                    stack.push(b);
                }
            }
        }
    }
    if result.h.iter().any(|a| !reached[a.index()]) {
        return false;
    }
    if result.complete {
        let map: Vec<Elem> = (0..n).map(|i| w[i].unwrap()).collect();
        return result.size == n && is_automorphism(g, &map);
    }
    result.size < n
}

/// True iff no neighbouring polygon can be added to the patch under the
/// rules it was grown with.
pub fn is_maximal(g: &GroupTable, seq1: &CrossoverSequence, seq2: &CrossoverSequence, result: &PatchResult) -> bool {
    let n = g.order();
    let mut w: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    for &(a, b) in &result.w {
        w[a.index()] = Some(b);
        used[b.index()] = true;
    }
    for &(a, wa) in &result.w {
        for (p, &t) in seq1.taus.iter().enumerate() {
            let h = g.mul(a, t);
            if w[h.index()].is_some() {
                continue;
            }
            let wh = g.mul(wa, seq2.taus[p]);
            let consistent = seq1.taus.iter().enumerate().all(|(q, &tq)| {
                let src = g.mul(h, g.inv(tq));
                match w[src.index()] {
                    Some(ws) => g.mul(ws, seq2.taus[q]) == wh,
                    None => true,
                }
            });
            if consistent && (result.injectivity == Injectivity::Relaxed || !used[wh.index()]) {
                return false;
            }
        }
    }
    true
}

/// Partial-isometry sizes between class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryMatrix {
    /// `entries[i][j]` is the patch size from `i` to `j`; `None` when a
    /// representative has an edge collapse under the cut.
    pub entries: Vec<Vec<Option<usize>>>,
    /// Classes whose tiling has an edge collapse.
    pub collapsed: Vec<bool>,
    pub selection: Selection,
    pub injectivity: Injectivity,
}

pub fn isometry_matrix(
    g: &GroupTable,
    cut: &CutSystem,
    representatives: &[GenVector],
    selection: Selection,
    injectivity: Injectivity,
) -> Result<IsometryMatrix> {
    let seqs: Vec<CrossoverSequence> = representatives.iter().map(|v| crossover_sequence(g, cut, v)).collect();
    let collapsed: Vec<bool> = seqs
        .iter()
        .map(|s| detect_degeneracies(g, cut, s).has_edge_collapse())
        .collect();
    let n = representatives.len();
    let flat: Vec<Option<usize>> = (0..n * n)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            if collapsed[i] || collapsed[j] {
                return Ok(None);
            }
            let r = grow_patch_with(g, cut, &seqs[i], &seqs[j], selection, injectivity)?;
            if !verify_patch(g, &seqs[i], &seqs[j], &r) {
                return Err(Error::Internal(format!("patch {i} -> {j} failed verification")));
            }
            if i == j && r.size != g.order() {
                return Err(Error::Internal(format!(
                    "self patch of class {i} has size {} instead of {}",
                    r.size,
                    g.order()
                )));
            }
            Ok(Some(r.size))
        })
        .collect::<Result<_>>()?;
    Ok(IsometryMatrix {
        entries: flat.chunks(n.max(1)).take(n).map(|r| r.to_vec()).collect(),
        collapsed,
        selection,
        injectivity,
    })
}

/// Patch sizes over random runs with seeds `first_seed..first_seed + runs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatchSample {
    pub sizes: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
}

pub fn sample_patches(
    g: &GroupTable,
    cut: &CutSystem,
    seq1: &CrossoverSequence,
    seq2: &CrossoverSequence,
    injectivity: Injectivity,
    first_seed: u64,
    runs: usize,
) -> Result<PatchSample> {
    if runs == 0 {
        return Err(Error::Config("at least one run is required".into()));
    }
    let sizes: Vec<usize> = (0..runs as u64)
        .into_par_iter()
        .map(|i| {
            grow_patch_with(
                g,
                cut,
                seq1,
                seq2,
                Selection::Random { seed: first_seed + i },
                injectivity,
            )
            .map(|r| r.size)
        })
        .collect::<Result<_>>()?;
    Ok(PatchSample {
        min: *sizes.iter().min().unwrap(),
        max: *sizes.iter().max().unwrap(),
        mean: sizes.iter().sum::<usize>() as f64 / runs as f64,
        sizes,
    })
}
