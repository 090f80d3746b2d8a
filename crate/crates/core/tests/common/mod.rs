#![allow(dead_code)]

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use modcomp::braid::{braid_act, BraidMove};
use modcomp::genvec::{aut_classes, canonical, class_of, enumerate_vectors, GenVector, Signature, VectorClass};
use modcomp::group::{automorphisms, preset, Automorphism, GroupTable, Perm, DEFAULT_ORDER_CAP};
use modcomp::patch::{grow_patch, grow_patch_with, verify_patch, Injectivity, Selection};
use modcomp::tiling::{crossover_sequence, detect_degeneracies, spoke_product, CutId, CutSystem, VertexLabel};
use modcomp::Elem;

/// Closes `gens` under `mul` and returns the multiplication table.
pub fn closure_table<T: Clone + Eq + Hash>(id: T, gens: &[T], mul: impl Fn(&T, &T) -> T) -> Vec<Vec<u32>> {
    let mut elems = vec![id.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for s in gens {
            let p = mul(&elems[i], s);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        i += 1;
    }
    elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&mul(a, b)] as u32).collect())
        .collect()
}

fn table_group(name: &str, table: Vec<Vec<u32>>) -> GroupTable {
    GroupTable::from_table(name, &table, DEFAULT_ORDER_CAP).unwrap()
}

fn from_perms(name: &str, gens: &[&str]) -> GroupTable {
    let perms: Vec<Perm> = gens.iter().map(|s| s.parse().unwrap()).collect();
    GroupTable::from_permutations(name, &perms, DEFAULT_ORDER_CAP).unwrap()
}

fn cyclic(n: usize) -> GroupTable {
    preset(&format!("cyclic:{n}"), DEFAULT_ORDER_CAP).unwrap()
}

fn powmod(r: i64, e: i64, m: i64) -> i64 {
    (0..e).fold(1, |acc, _| acc * r % m)
}

/// `<a, b | a^m, b^n = a^s, b a b^-1 = a^r>`.
fn metacyclic(name: &str, m: i64, n: i64, r: i64, s: i64) -> GroupTable {
    assert_eq!(powmod(r, n, m), 1);
    assert_eq!(r * s % m, s % m);
    let mul = |x: &(i64, i64), y: &(i64, i64)| {
        let mut i = x.0 + powmod(r, x.1, m) * y.0;
        let mut j = x.1 + y.1;
        if j >= n {
            j -= n;
            i += s;
        }
        (i.rem_euclid(m), j)
    };
    table_group(name, closure_table((0, 0), &[(1, 0), (0, 1)], mul))
}

fn direct(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (ta, tb) = (a.table(), b.table());
    let nb = b.order();
    let table = (0..a.order() * nb)
        .map(|x| {
            (0..a.order() * nb)
                .map(|y| (ta[x / nb][y / nb] as usize * nb + tb[x % nb][y % nb] as usize) as u32)
                .collect()
        })
        .collect();
    table_group(&format!("{}x{}", a.name(), b.name()), table)
}

type Gauss = (i64, i64);
type Mat2 = [[Gauss; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let cm = |a: Gauss, b: Gauss| (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
    let add = |a: Gauss, b: Gauss| (a.0 + b.0, a.1 + b.1);
    let mut out = [[(0, 0); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = add(cm(x[i][0], y[0][j]), cm(x[i][1], y[1][j]));
        }
    }
    out
}

/// One representative of every isomorphism class of groups of order at most 21.
pub fn small_groups() -> Vec<GroupTable> {
    let mut out: Vec<GroupTable> = (1..=21).map(cyclic).collect();
    let c = |n| cyclic(n);
    out.push(direct(&c(2), &c(2)));
    out.push(preset("sym3", DEFAULT_ORDER_CAP).unwrap());
    out.push(direct(&c(4), &c(2)));
    out.push(direct(&direct(&c(2), &c(2)), &c(2)));
    let d4 = metacyclic("D4", 4, 2, 3, 0);
    let q8 = metacyclic("Q8", 4, 2, 3, 2);
    out.push(d4.clone());
    out.push(q8.clone());
    out.push(direct(&c(3), &c(3)));
    out.push(metacyclic("D5", 5, 2, 4, 0));
    out.push(direct(&c(6), &c(2)));
    out.push(from_perms("A4", &["(1,2,3)", "(1,2)(3,4)"]));
    out.push(metacyclic("D6", 6, 2, 5, 0));
    out.push(metacyclic("Dic3", 6, 2, 5, 3));
    out.push(metacyclic("D7", 7, 2, 6, 0));
    out.push(direct(&c(4), &c(4)));
    out.push(direct(&c(8), &c(2)));
    out.push(direct(&direct(&c(4), &c(2)), &c(2)));
    out.push(direct(&direct(&direct(&c(2), &c(2)), &c(2)), &c(2)));
    out.push(metacyclic("D8", 8, 2, 7, 0));
    out.push(metacyclic("Q16", 8, 2, 7, 4));
    out.push(metacyclic("SD16", 8, 2, 3, 0));
    out.push(metacyclic("M16", 8, 2, 5, 0));
    out.push(metacyclic("C4:C4", 4, 4, 3, 0));
    out.push(direct(&d4, &c(2)));
    out.push(direct(&q8, &c(2)));
    let (one, i, z) = ((1, 0), (0, 1), (0, 0));
    let pauli_x: Mat2 = [[z, one], [one, z]];
    let pauli_z: Mat2 = [[one, z], [z, (-1, 0)]];
    let scalar_i: Mat2 = [[i, z], [z, i]];
    out.push(table_group(
        "Pauli",
        closure_table([[one, z], [z, one]], &[pauli_x, pauli_z, scalar_i], mat_mul),
    ));
    // (C4 x C2) : C2 with c a c^-1 = ab
    let g16_3 = |x: &(i64, i64, i64), y: &(i64, i64, i64)| {
        let (a, b) = if x.2 == 1 { (y.0, (y.1 + y.0) % 2) } else { (y.0, y.1) };
        ((x.0 + a) % 4, (x.1 + b) % 2, (x.2 + y.2) % 2)
    };
    out.push(table_group(
        "(C4xC2):C2",
        closure_table((0, 0, 0), &[(1, 0, 0), (0, 1, 0), (0, 0, 1)], g16_3),
    ));
    out.push(direct(&c(6), &c(3)));
    out.push(metacyclic("D9", 9, 2, 8, 0));
    out.push(direct(&preset("sym3", DEFAULT_ORDER_CAP).unwrap(), &c(3)));
    let gen_d = |x: &(i64, i64, i64), y: &(i64, i64, i64)| {
        let s = if x.2 == 1 { -1 } else { 1 };
        (
            (x.0 + s * y.0).rem_euclid(3),
            (x.1 + s * y.1).rem_euclid(3),
            (x.2 + y.2) % 2,
        )
    };
    out.push(table_group(
        "(C3xC3):C2",
        closure_table((0, 0, 0), &[(1, 0, 0), (0, 1, 0), (0, 0, 1)], gen_d),
    ));
    out.push(direct(&c(10), &c(2)));
    out.push(metacyclic("D10", 10, 2, 9, 0));
    out.push(metacyclic("Dic5", 10, 2, 9, 5));
    out.push(metacyclic("F20", 5, 4, 2, 0));
    out.push(metacyclic("C7:C3", 7, 3, 2, 0));
    out
}

/// Number of groups of each order 1..=21.
pub const SMALL_GROUP_COUNTS: [usize; 21] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2];

/// Isomorphism invariants used to check that `small_groups` has no repeats.
pub fn invariants(g: &GroupTable) -> (usize, bool, Vec<u32>, usize, usize, usize) {
    let mut orders: Vec<u32> = g.elements().map(|a| g.element_order(a)).collect();
    orders.sort();
    let centre = g
        .elements()
        .filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)))
        .count();
    let mut squares: Vec<Elem> = g.elements().map(|a| g.mul(a, a)).collect();
    squares.sort();
    squares.dedup();
    (
        g.order(),
        g.is_abelian(),
        orders,
        centre,
        automorphisms(g).len(),
        squares.len(),
    )
}

/// Subgroup generated by `set`, by multiplying pairs until nothing new appears.
pub fn oracle_closure(g: &GroupTable, set: &[Elem]) -> Vec<Elem> {
    let mut s: Vec<Elem> = set.to_vec();
    s.push(g.identity());
    s.sort();
    s.dedup();
    loop {
        let mut next = s.clone();
        for &a in &s {
            for &b in &s {
                next.push(g.mul(a, b));
            }
        }
        next.sort();
        next.dedup();
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

pub fn oracle_generates(g: &GroupTable, set: &[Elem]) -> bool {
    oracle_closure(g, set).len() == g.order()
}

/// Generating vectors by a plain loop over all quadruples.
pub fn naive_vectors(g: &GroupTable, s: &Signature) -> Vec<GenVector> {
    let m = s.periods();
    let e: Vec<Elem> = g.elements().collect();
    let mut out = Vec::new();
    for &a in &e {
        for &b in &e {
            for &c in &e {
                for &d in &e {
                    let v = [a, b, c, d];
                    if (0..4).all(|j| g.element_order(v[j]) == m[j])
                        && g.product(&v) == g.identity()
                        && oracle_generates(g, &v)
                    {
                        out.push(GenVector(v));
                    }
                }
            }
        }
    }
    out
}

/// Every non-decreasing quadruple of element orders above 1.
pub fn candidate_signatures(g: &GroupTable) -> Vec<Signature> {
    let mut orders: Vec<u32> = g.elements().map(|a| g.element_order(a)).filter(|&o| o > 1).collect();
    orders.sort();
    orders.dedup();
    let mut out = Vec::new();
    let n = orders.len();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                for d in c..n {
                    out.push(Signature::new([orders[a], orders[b], orders[c], orders[d]]).unwrap());
                }
            }
        }
    }
    out
}

/// One group with a signature and its vectors.
pub struct Pool {
    pub group: GroupTable,
    pub signature: Signature,
    pub auts: Vec<Automorphism>,
    pub vectors: Vec<GenVector>,
    pub classes: Vec<VectorClass>,
}

/// The group presets with signatures that admit vectors.
pub fn pools() -> &'static [Pool] {
    static POOLS: OnceLock<Vec<Pool>> = OnceLock::new();
    POOLS.get_or_init(|| {
        [
            ("sym3", "2,2,3,3"),
            ("cyclic:13", "13,13,13,13"),
            ("cyclic:6", "2,6,6,6"),
            ("sg21_1", "3,3,7,7"),
            ("alt5", "2,2,2,3"),
            ("alt5", "5,5,5,5"),
            ("psl2_7", "2,2,3,3"),
            ("psl2_7", "3,3,4,7"),
        ]
        .iter()
        .map(|&(name, sig)| {
            let group = preset(name, DEFAULT_ORDER_CAP).unwrap();
            let signature: Signature = sig.parse().unwrap();
            let vectors = enumerate_vectors(&group, &signature);
            assert!(!vectors.is_empty(), "{name} {sig}");
            let auts = automorphisms(&group);
            Pool {
                classes: aut_classes(&auts, &vectors),
                auts,
                group,
                signature,
                vectors,
            }
        })
        .collect()
    })
}

pub fn cut(i: usize) -> CutSystem {
    CutSystem::preset(CutId::ALL[i % 4])
}

/// Opposite edges carry inverse transformations.
pub fn check_inverse_pairing(g: &GroupTable, cut: &CutSystem, v: &GenVector) -> Result<(), String> {
    let seq = crossover_sequence(g, cut, v);
    for p in 0..cut.len() {
        if seq.taus[cut.op(p)] != g.inv(seq.taus[p]) {
            return Err(format!("{} position {p} of {}", cut.id, v.display(g)));
        }
    }
    Ok(())
}

/// Spoke products are trivial at white nodes and of order `m_j` at black node `j`.
pub fn check_spoke_products(g: &GroupTable, cut: &CutSystem, v: &GenVector, s: &Signature) -> Result<(), String> {
    let seq = crossover_sequence(g, cut, v);
    for vertex in &cut.vertices {
        for start in 0..vertex.spoke_cycle.len() {
            let prod = spoke_product(g, &seq, vertex, start);
            let ok = match vertex.label {
                VertexLabel::White => prod.is_identity(),
                VertexLabel::Black(j) => g.element_order(prod) == s.period(j as usize - 1),
            };
            if !ok {
                return Err(format!(
                    "{} vertex {} start {start} of {}",
                    cut.id,
                    vertex.label,
                    v.display(g)
                ));
            }
        }
    }
    Ok(())
}

/// Grown patches always verify. Collapsed tilings are skipped.
pub fn check_patch_verifies(
    g: &GroupTable,
    cut: &CutSystem,
    v1: &GenVector,
    v2: &GenVector,
    selection: Selection,
    injectivity: Injectivity,
) -> Result<(), String> {
    let (s1, s2) = (crossover_sequence(g, cut, v1), crossover_sequence(g, cut, v2));
    if detect_degeneracies(g, cut, &s1).has_edge_collapse() || detect_degeneracies(g, cut, &s2).has_edge_collapse() {
        return Ok(());
    }
    let r = grow_patch_with(g, cut, &s1, &s2, selection, injectivity).map_err(|e| e.to_string())?;
    if verify_patch(g, &s1, &s2, &r) {
        Ok(())
    } else {
        Err(format!(
            "{} {} -> {} with {selection}",
            cut.id,
            v1.display(g),
            v2.display(g)
        ))
    }
}

/// A tiling patched against itself is complete with `w` the identity.
pub fn check_self_patch(g: &GroupTable, cut: &CutSystem, v: &GenVector, selection: Selection) -> Result<(), String> {
    let s = crossover_sequence(g, cut, v);
    if detect_degeneracies(g, cut, &s).has_edge_collapse() {
        return Ok(());
    }
    let r = grow_patch(g, cut, &s, &s, selection).map_err(|e| e.to_string())?;
    if r.complete && r.size == g.order() && g.elements().all(|h| r.w_of(h) == Some(h)) {
        Ok(())
    } else {
        Err(format!("{} self patch of {} has size {}", cut.id, v.display(g), r.size))
    }
}

/// Half twists keep product one, permute the orders along with the entries,
/// and keep generation.
pub fn check_braid_word(g: &GroupTable, v: &GenVector, s: &Signature, word: &[(bool, u8)]) -> Result<(), String> {
    let mut cur = *v;
    let mut periods = s.periods();
    for &(inverse, j) in word {
        let m = if inverse {
            BraidMove::PhiInverse(j)
        } else {
            BraidMove::Phi(j)
        };
        cur = braid_act(g, m, &cur);
        periods.swap(j as usize - 1, j as usize);
        let orders = cur.0.map(|e| g.element_order(e));
        if g.product(&cur.0) != g.identity() || orders != periods || !oracle_generates(g, &cur.0) {
            return Err(format!("{m} applied to {} gave {}", v.display(g), cur.display(g)));
        }
    }
    Ok(())
}

/// Canonical forms are fixed by canonicalisation and by automorphisms.
pub fn check_canonical(auts: &[Automorphism], classes: &[VectorClass], v: &GenVector, a: usize) -> Result<(), String> {
    let c = canonical(v, auts);
    if canonical(&c, auts) != c || canonical(&v.apply(&auts[a % auts.len()]), auts) != c {
        return Err("canonical form moved".into());
    }
    let k = class_of(v, auts, classes).ok_or("no class")?;
    if classes[k].representative != c {
        return Err("class representative differs from canonical form".into());
    }
    Ok(())
}
