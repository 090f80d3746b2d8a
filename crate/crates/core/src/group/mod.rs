//! Finite groups as explicit multiplication tables.
//!
//! Every [`GroupTable`] is built from a generating tuple. Element ids follow a
//! canonical ordering (version [`ORDERING_VERSION`]): elements are sorted by
//! element order, then by the shortlex-minimal positive word in the generating
//! tuple. The identity is always id 0. Lexicographic class representatives
//! elsewhere in the crate are relative to this ordering, so every report
//! carries [`GroupTable::ordering_fingerprint`].

mod aut;
mod perm;
mod presets;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use aut::{automorphisms, inner_automorphism, is_automorphism, Automorphism};
pub use perm::Perm;
pub use presets::{preset, PRESET_NAMES};

pub const ORDERING_VERSION: &str = "order-then-shortlex-v1";

pub const DEFAULT_ORDER_CAP: usize = 2000;

/// An element of a [`GroupTable`], identified by its canonical id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A group specification as accepted from JSON files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset { preset: String },
    Permutations { permutations: Vec<String> },
    Table { table: Vec<Vec<u32>> },
}

impl GroupSpec {
    /// Interprets `token` as a path to a JSON spec if such a file exists,
    /// otherwise as a preset name.
    pub fn from_token(token: &str) -> Result<GroupSpec> {
        let path = Path::new(token);
        if path.is_file() {
            let text = std::fs::read_to_string(path)?;
            serde_json::from_str(&text).map_err(|e| Error::InvalidGroupSpec(format!("{}: {e}", path.display())))
        } else {
            Ok(GroupSpec::Preset {
                preset: token.to_string(),
            })
        }
    }
}

/// Builds and validates a group from a specification.
pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    match spec {
        GroupSpec::Preset { preset: name } => presets::preset(name, cap),
        GroupSpec::Permutations { permutations } => {
            let perms = permutations
                .iter()
                .map(|s| Perm::parse_cycles(s))
                .collect::<Result<Vec<_>>>()?;
            let label = format!("<{}>", permutations.join(", "));
            GroupTable::from_permutations(&label, &perms, cap)
        }
        GroupSpec::Table { table } => GroupTable::from_table("table", table, cap),
    }
}

/// An immutable finite group with precomputed products, inverses and orders.
#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<Elem>,
    words: Vec<Vec<u8>>,
}

/// BFS data in discovery order: `right[i * k + g]` is element `i` times
/// generator `g`, `parent[i]` is the predecessor and generator letter.
struct Discovery {
    right: Vec<u32>,
    parent: Vec<(u32, u8)>,
    ngens: usize,
}

impl GroupTable {
    /// The group generated by `gens`, acting on a common domain.
    pub fn from_permutations(name: &str, gens: &[Perm], cap: usize) -> Result<GroupTable> {
        if gens.len() > u8::MAX as usize {
            return Err(Error::InvalidGroupSpec("too many generators".into()));
        }
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(0);
        let gens: Vec<Perm> = gens.iter().map(|g| g.extended(degree)).collect();
        let k = gens.len();

        let mut index: HashMap<Perm, u32> = HashMap::new();
        let mut elems = vec![Perm::identity(degree)];
        index.insert(elems[0].clone(), 0);
        let mut parent = vec![(0u32, 0u8)];
        let mut right: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elems.len() {
            for (gi, g) in gens.iter().enumerate() {
                let p = elems[head].then(g);
                let id = match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        let id = elems.len() as u32;
                        if elems.len() >= cap {
                            return Err(Error::OrderCapExceeded { cap });
                        }
                        index.insert(p.clone(), id);
                        elems.push(p);
                        parent.push((head as u32, gi as u8));
                        id
                    }
                };
                right.push(id);
            }
            head += 1;
        }
        Ok(Self::finish(
            name,
            Discovery {
                right,
                parent,
                ngens: k,
            },
        ))
    }

    /// Builds a group from a row-major Cayley table on arbitrary labels
    /// `0..n`. The table is validated; tables of order at most 256 are checked
    /// for associativity exhaustively, larger ones on a fixed random sample.
    pub fn from_table(name: &str, table: &[Vec<u32>], cap: usize) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("table is empty".into()));
        }
        if n > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v as usize >= n) {
                return Err(Error::InvalidTable(format!("entry {bad} out of range")));
            }
        }
        let at = |a: usize, b: usize| table[a][b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                row_seen[at(a, b)] = true;
                col_seen[at(b, a)] = true;
            }
            if row_seen.iter().chain(&col_seen).any(|s| !s) {
                return Err(Error::InvalidTable(format!("row or column {a} is not a permutation")));
            }
        }
        let assoc_fails = |a: usize, b: usize, c: usize| at(at(a, b), c) != at(a, at(b, c));
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if assoc_fails(a, b, c) {
                            return Err(Error::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..200_000 {
                let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if assoc_fails(a, b, c) {
                    return Err(Error::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }

        // Greedy generating tuple in label order.
        let mut gens: Vec<usize> = Vec::new();
        let mut inside = vec![false; n];
        inside[identity] = true;
        for cand in 0..n {
            if inside[cand] {
                continue;
            }
            gens.push(cand);
            let mut queue: VecDeque<usize> = (0..n).filter(|&x| inside[x]).collect();
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = at(x, g);
                    if !inside[y] {
                        inside[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        if gens.len() > u8::MAX as usize {
            return Err(Error::InvalidTable("too many generators required".into()));
        }

        // BFS relabelling from the identity.
        let k = gens.len();
        let mut label_to_bfs = vec![u32::MAX; n];
        let mut bfs_to_label = vec![identity];
        label_to_bfs[identity] = 0;
        let mut parent = vec![(0u32, 0u8)];
        let mut head = 0;
        while head < bfs_to_label.len() {
            let x = bfs_to_label[head];
            for (gi, &g) in gens.iter().enumerate() {
                let y = at(x, g);
                if label_to_bfs[y] == u32::MAX {
                    label_to_bfs[y] = bfs_to_label.len() as u32;
                    bfs_to_label.push(y);
                    parent.push((head as u32, gi as u8));
                }
            }
            head += 1;
        }
        let mut right = Vec::with_capacity(n * k);
        for &x in &bfs_to_label {
            for &g in &gens {
                right.push(label_to_bfs[at(x, g)]);
            }
        }
        Ok(Self::finish(
            name,
            Discovery {
                right,
                parent,
                ngens: k,
            },
        ))
    }

    fn finish(name: &str, d: Discovery) -> GroupTable {
        let n = d.parent.len();
        let k = d.ngens;
        // Products in discovery order, column by column along the BFS tree.
        let mut mul_bfs = vec![0u32; n * n];
        for a in 0..n {
            mul_bfs[a * n] = a as u32;
        }
        for b in 1..n {
            let (p, g) = d.parent[b];
            for a in 0..n {
                let ap = mul_bfs[a * n + p as usize] as usize;
                mul_bfs[a * n + b] = d.right[ap * k + g as usize];
            }
        }
        let mut words_bfs: Vec<Vec<u8>> = vec![Vec::new(); n];
        for b in 1..n {
            let (p, g) = d.parent[b];
            let mut w = words_bfs[p as usize].clone();
            w.push(g);
            words_bfs[b] = w;
        }
        let orders_bfs: Vec<u32> = (0..n)
            .map(|a| {
                let mut p = a;
                let mut k = 1;
                while p != 0 {
                    p = mul_bfs[p * n + a] as usize;
                    k += 1;
                }
                k
            })
            .collect();

        let mut by_key: Vec<usize> = (0..n).collect();
        by_key.sort_by_key(|&i| (orders_bfs[i], i));
        let mut new_id = vec![0u32; n];
        for (new, &old) in by_key.iter().enumerate() {
            new_id[old] = new as u32;
        }

        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[new_id[a] as usize * n + new_id[b] as usize] = new_id[mul_bfs[a * n + b] as usize];
            }
        }
        let orders: Vec<u32> = by_key.iter().map(|&old| orders_bfs[old]).collect();
        let words: Vec<Vec<u8>> = by_key.iter().map(|&old| words_bfs[old].clone()).collect();
        let generators: Vec<Elem> = (0..k)
            .map(|g| Elem(new_id[if n > 0 { d.right[g] as usize } else { 0 }]))
            .collect();
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let mut p = a;
            // a^(order-1)
            for _ in 1..orders[a].saturating_sub(1) {
                p = mul[p * n + a] as usize;
            }
            inv[a] = if orders[a] == 1 { 0 } else { p as u32 };
        }

        GroupTable {
            name: name.to_string(),
            order: n,
            mul,
            inv,
            orders,
            generators,
            words,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order as u32).map(Elem)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inv[a.index()])
    }

    /// Least `n >= 1` with `a^n = 1`.
    #[inline]
    pub fn element_order(&self, a: Elem) -> u32 {
        self.orders[a.index()]
    }

    pub fn pow(&self, a: Elem, exp: i64) -> Elem {
        let m = self.element_order(a) as i64;
        let e = exp.rem_euclid(m);
        let mut p = Elem::IDENTITY;
        for _ in 0..e {
            p = self.mul(p, a);
        }
        p
    }

    pub fn product(&self, elems: &[Elem]) -> Elem {
        elems.iter().fold(Elem::IDENTITY, |acc, &e| self.mul(acc, e))
    }

    /// `x y x^-1`.
    pub fn conjugate(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.inv(x))
    }

    /// The generating tuple that fixed the element ordering.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Shortlex-minimal positive word for `a` as generator indices.
    pub fn word(&self, a: Elem) -> &[u8] {
        &self.words[a.index()]
    }

    /// Human-readable word, generators lettered `a`, `b`, `c`, ...; runs are
    /// folded into powers, e.g. `ab^2`. The identity is `1`.
    pub fn display(&self, a: Elem) -> String {
        let w = self.word(a);
        if w.is_empty() {
            return "1".into();
        }
        let letter = |g: u8| {
            if g < 26 {
                ((b'a' + g) as char).to_string()
            } else {
                format!("g{g}")
            }
        };
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            out.push_str(&letter(w[i]));
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }

    pub fn elements_of_order(&self, m: u32) -> Vec<Elem> {
        self.elements().filter(|&g| self.element_order(g) == m).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `set`.
    pub fn closure(&self, set: &[Elem]) -> Vec<bool> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut queue = VecDeque::from([Elem::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for &s in set {
                let y = self.mul(x, s);
                if !inside[y.index()] {
                    inside[y.index()] = true;
                    queue.push_back(y);
                }
            }
        }
        inside
    }

    /// True iff `set` generates the whole group.
    pub fn generates(&self, set: &[Elem]) -> bool {
        self.closure(set).iter().all(|&b| b)
    }

    /// Short identifier of the element ordering: a hash of the ordering
    /// version, the generating tuple and the multiplication table.
    pub fn ordering_fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(ORDERING_VERSION.as_bytes());
        h.update((self.order as u64).to_le_bytes());
        for g in &self.generators {
            h.update(g.0.to_le_bytes());
        }
        for &m in &self.mul {
            h.update(m.to_le_bytes());
        }
        let digest = h.finalize();
        format!("{ORDERING_VERSION}:{}", hex::encode(&digest[..8]))
    }

    /// Row-major multiplication table in canonical ids.
    pub fn table(&self) -> Vec<Vec<u32>> {
        self.mul.chunks(self.order).map(|r| r.to_vec()).collect()
    }
}
