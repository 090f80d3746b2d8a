//! Automorphism group enumeration.

use rayon::prelude::*;

use super::{Elem, GroupTable};

/// A group automorphism stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    image: Vec<Elem>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Automorphism {
        Automorphism {
            image: (0..order as u32).map(Elem).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.image[e.index()]
    }

    pub fn images(&self) -> &[Elem] {
        &self.image
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: self.image.iter().map(|&e| other.apply(e)).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![Elem::IDENTITY; self.image.len()];
        for (i, &e) in self.image.iter().enumerate() {
            image[e.index()] = Elem(i as u32);
        }
        Automorphism { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, e)| e.index() == i)
    }
}

/// Conjugation `Ad_x: y -> x y x^-1`.
pub fn inner_automorphism(g: &GroupTable, x: Elem) -> Automorphism {
    Automorphism {
        image: g.elements().map(|y| g.conjugate(x, y)).collect(),
    }
}

/// Checks that `map` is a bijective homomorphism of `g`.
pub fn is_automorphism(g: &GroupTable, map: &[Elem]) -> bool {
    let n = g.order();
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &e in map {
        if e.index() >= n || seen[e.index()] {
            return false;
        }
        seen[e.index()] = true;
    }
    g.elements().all(|a| {
        g.elements()
            .all(|b| map[g.mul(a, b).index()] == g.mul(map[a.index()], map[b.index()]))
    })
}

/// Drops generators that are redundant given the others.
fn minimal_generators(g: &GroupTable) -> Vec<Elem> {
    let mut gens: Vec<Elem> = g.generators().to_vec();
    gens.retain(|e| !e.is_identity());
    gens.dedup();
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if g.generates(&rest) {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

/// All automorphisms of `g`, sorted by image list (the identity first).
///
/// Candidate images of a generating tuple are tuples of elements with matching
/// orders; each candidate is extended along a spanning tree and checked.
pub fn automorphisms(g: &GroupTable) -> Vec<Automorphism> {
    let n = g.order();
    let gens = minimal_generators(g);
    if gens.is_empty() {
        return vec![Automorphism::identity(n)];
    }

    // Spanning tree over the reduced generators.
    let mut parent: Vec<Option<(Elem, usize)>> = vec![None; n];
    let mut bfs = vec![Elem::IDENTITY];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < bfs.len() {
        let x = bfs[head];
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y.index()] {
                seen[y.index()] = true;
                parent[y.index()] = Some((x, i));
                bfs.push(y);
            }
        }
        head += 1;
    }

    let candidates: Vec<Vec<Elem>> = gens.iter().map(|&s| g.elements_of_order(g.element_order(s))).collect();

    let try_images = |imgs: &[Elem]| -> Option<Automorphism> {
        let mut image = vec![Elem::IDENTITY; n];
        for &y in &bfs[1..] {
            let (p, i) = parent[y.index()].expect("tree covers the group");
            image[y.index()] = g.mul(image[p.index()], imgs[i]);
        }
        for a in g.elements() {
            for (i, &s) in gens.iter().enumerate() {
                if image[g.mul(a, s).index()] != g.mul(image[a.index()], imgs[i]) {
                    return None;
                }
            }
        }
        let mut hit = vec![false; n];
        for &e in &image {
            if hit[e.index()] {
                return None;
            }
            hit[e.index()] = true;
        }
        Some(Automorphism { image })
    };

    // Iterate the product of candidate lists, parallel over the first factor.
    let mut out: Vec<Automorphism> = candidates[0]
        .par_iter()
        .flat_map_iter(|&first| {
            let mut found = Vec::new();
            let rest = &candidates[1..];
            let mut idx = vec![0usize; rest.len()];
            'outer: loop {
                let mut imgs = Vec::with_capacity(gens.len());
                imgs.push(first);
                imgs.extend(idx.iter().zip(rest).map(|(&k, c)| c[k]));
                if let Some(a) = try_images(&imgs) {
                    found.push(a);
                }
                for d in (0..idx.len()).rev() {
                    idx[d] += 1;
                    if idx[d] < rest[d].len() {
                        continue 'outer;
                    }
                    idx[d] = 0;
                }
                break;
            }
            found
        })
        .collect();
    out.sort();
    out
}
