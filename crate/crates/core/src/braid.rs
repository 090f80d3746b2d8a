//! Braid moves on generating vectors and the induced action on Aut(G) classes.
//!
//! Conjugation follows `y^x = x^-1 y x`. The elementary inverse move on
//! positions `(j, j+1)` is `(a, b) -> (b, a^b)`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genvec::{class_of, GenVector, Signature, VectorClass};
use crate::group::{Automorphism, GroupTable};

/// A braid move with 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BraidMove {
    Phi(u8),
    PhiInverse(u8),
    /// Pure braid generator `X Phi_i^2 X^-1`, `X = Phi_{j-1} ... Phi_{i+1}`.
    PureA(u8, u8),
}

impl BraidMove {
    /// The move as a sequence of elementary moves, applied left to right.
    pub fn word(&self) -> Vec<BraidMove> {
        match *self {
            BraidMove::Phi(_) | BraidMove::PhiInverse(_) => vec![*self],
            BraidMove::PureA(i, j) => {
                let mut w: Vec<BraidMove> = ((i + 1)..j).rev().map(BraidMove::PhiInverse).collect();
                w.push(BraidMove::Phi(i));
                w.push(BraidMove::Phi(i));
                w.extend(((i + 1)..j).map(BraidMove::Phi));
                w
            }
        }
    }

    /// Elementary word of the inverse move.
    pub fn inverse_word(&self) -> Vec<BraidMove> {
        self.word()
            .into_iter()
            .rev()
            .map(|m| match m {
                BraidMove::Phi(j) => BraidMove::PhiInverse(j),
                BraidMove::PhiInverse(j) => BraidMove::Phi(j),
                BraidMove::PureA(..) => unreachable!("words are elementary"),
            })
            .collect()
    }

    fn check(&self) {
        match *self {
            BraidMove::Phi(j) | BraidMove::PhiInverse(j) => assert!((1..=3).contains(&j)),
            BraidMove::PureA(i, j) => assert!(1 <= i && i < j && j <= 4),
        }
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidMove::Phi(j) => write!(f, "Phi({j},{})", j + 1),
            BraidMove::PhiInverse(j) => write!(f, "PhiInv({j},{})", j + 1),
            BraidMove::PureA(i, j) => write!(f, "A({i},{j})"),
        }
    }
}

fn elementary(g: &GroupTable, m: BraidMove, v: &mut [crate::group::Elem; 4]) {
    match m {
        BraidMove::PhiInverse(j) => {
            let p = j as usize - 1;
            let (a, b) = (v[p], v[p + 1]);
            v[p] = b;
            v[p + 1] = g.mul(g.mul(g.inv(b), a), b);
        }
        BraidMove::Phi(j) => {
            let p = j as usize - 1;
            let (a, b) = (v[p], v[p + 1]);
            v[p] = g.conjugate(a, b);
            v[p + 1] = a;
        }
        BraidMove::PureA(..) => unreachable!(),
    }
}

/// Applies a sequence of moves, left to right.
pub fn braid_act_word(g: &GroupTable, moves: &[BraidMove], v: &GenVector) -> GenVector {
    let mut e = v.entries();
    for m in moves {
        m.check();
        for w in m.word() {
            elementary(g, w, &mut e);
        }
    }
    let out = GenVector(e);
    debug_assert_eq!(g.product(&out.0), g.product(&v.0));
    debug_assert_eq!(g.generates(&out.0), g.generates(&v.0));
    out
}

pub fn braid_act(g: &GroupTable, m: BraidMove, v: &GenVector) -> GenVector {
    let out = braid_act_word(g, &[m], v);
    if let BraidMove::PureA(..) = m {
        debug_assert!((0..4).all(|j| g.element_order(out.0[j]) == g.element_order(v.0[j])));
    }
    out
}

/// Signature-preserving generators: every pure generator plus the swaps of
/// equal adjacent periods and their inverses.
pub fn modular_generators(s: &Signature) -> Vec<BraidMove> {
    let mut out = Vec::new();
    for i in 1..=4u8 {
        for j in (i + 1)..=4 {
            out.push(BraidMove::PureA(i, j));
        }
    }
    for j in 1..=3u8 {
        if s.period(j as usize - 1) == s.period(j as usize) {
            out.push(BraidMove::Phi(j));
            out.push(BraidMove::PhiInverse(j));
        }
    }
    out
}

/// Permutation of class indices induced by a word of moves.
pub fn induced_permutation_word(
    g: &GroupTable,
    auts: &[Automorphism],
    classes: &[VectorClass],
    moves: &[BraidMove],
) -> Result<Vec<usize>> {
    let mut perm = Vec::with_capacity(classes.len());
    let mut hit = vec![false; classes.len()];
    for (i, c) in classes.iter().enumerate() {
        let img = braid_act_word(g, moves, &c.representative);
        let k = class_of(&img, auts, classes).ok_or(Error::IncompleteClassList(i))?;
        if hit[k] {
            return Err(Error::Internal("induced map is not a bijection".into()));
        }
        hit[k] = true;
        perm.push(k);
    }
    Ok(perm)
}

pub fn induced_permutation(
    g: &GroupTable,
    auts: &[Automorphism],
    classes: &[VectorClass],
    m: BraidMove,
) -> Result<Vec<usize>> {
    induced_permutation_word(g, auts, classes, &[m])
}

/// Orbits of the modular action on classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumPartition {
    /// Each orbit sorted ascending; orbits ordered by least member.
    pub orbits: Vec<Vec<usize>>,
    pub generator_set: Vec<BraidMove>,
}

impl StratumPartition {
    /// Orbit sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// `(6, 10, 15, 16)`
    pub fn sizes_display(&self) -> String {
        format!(
            "({})",
            self.sizes()
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }

    pub fn orbit_of(&self, class: usize) -> Option<usize> {
        self.orbits.iter().position(|o| o.contains(&class))
    }
}

/// Orbit partition under the permutations induced by `modular_generators`.
pub fn strata(
    g: &GroupTable,
    auts: &[Automorphism],
    s: &Signature,
    classes: &[VectorClass],
) -> Result<StratumPartition> {
    let gens = modular_generators(s);
    let perms: Vec<Vec<usize>> = gens
        .par_iter()
        .map(|&m| induced_permutation(g, auts, classes, m))
        .collect::<Result<_>>()?;
    let n = classes.len();
    let mut orbit_id = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_id[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_id[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for p in &perms {
                let y = p[x];
                if orbit_id[y] == usize::MAX {
                    orbit_id[y] = id;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(StratumPartition {
        orbits,
        generator_set: gens,
    })
}
