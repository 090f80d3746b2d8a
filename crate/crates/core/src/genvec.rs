//! Planar four-point signatures, generating vectors and their Aut(G) classes.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Automorphism, Elem, GroupTable};

/// A signature `(0; m1, m2, m3, m4)` with non-decreasing periods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    periods: [u32; 4],
}

impl Signature {
    pub fn new(periods: [u32; 4]) -> Result<Signature> {
        let shown = periods.map(|m| m.to_string()).join(",");
        if let Some(m) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSignature {
                input: shown,
                reason: format!("period {m} is below 2"),
            });
        }
        if periods.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSignature {
                input: shown,
                reason: "periods must be non-decreasing".into(),
            });
        }
        Ok(Signature { periods })
    }

    pub fn periods(&self) -> [u32; 4] {
        self.periods
    }

    pub fn period(&self, j: usize) -> u32 {
        self.periods[j]
    }

    /// `2,2,3,3`
    pub fn compact(&self) -> String {
        self.periods.map(|m| m.to_string()).join(",")
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `2,2,3,3` or `(0;2,2,3,3)`.
    fn from_str(input: &str) -> Result<Signature> {
        let bad = |reason: &str| Error::InvalidSignature {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut body = input.trim();
        if let Some(inner) = body.strip_prefix('(') {
            body = inner.strip_suffix(')').ok_or_else(|| bad("unbalanced parenthesis"))?;
            if let Some((h, rest)) = body.split_once(';') {
                if h.trim() != "0" {
                    return Err(bad("only quotient genus 0 is supported"));
                }
                body = rest;
            }
        }
        let periods: Vec<u32> = body
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("periods must be positive integers"))?;
        let periods: [u32; 4] = periods
            .try_into()
            .map_err(|_| bad("exactly four periods are required"))?;
        Signature::new(periods).map_err(|e| match e {
            Error::InvalidSignature { reason, .. } => bad(&reason),
            other => other,
        })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(0;{})", self.compact())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Riemann–Hurwitz genus of a surface with a `G`-action of signature `s`.
pub fn genus(g: &GroupTable, s: &Signature) -> Result<u64> {
    let fail = |reason: String| Error::IncompatibleSignature {
        signature: s.to_string(),
        order: g.order(),
        reason,
    };
    let l = s
        .periods
        .iter()
        .fold(1u64, |acc, &m| acc / gcd(acc, m as u64) * m as u64);
    // (2 sigma - 2) * l = |G| * (2 l - sum l/m_j)
    let inner: i64 = 2 * l as i64 - s.periods.iter().map(|&m| (l / m as u64) as i64).sum::<i64>();
    let num = g.order() as i64 * inner;
    if num % l as i64 != 0 {
        return Err(fail("Riemann-Hurwitz quotient is not an integer".into()));
    }
    let two_sigma_minus_two = num / l as i64;
    if two_sigma_minus_two % 2 != 0 {
        return Err(fail("Riemann-Hurwitz quotient is odd".into()));
    }
    let sigma = 1 + two_sigma_minus_two / 2;
    if sigma < 2 {
        return Err(fail(format!("genus {sigma} is below 2")));
    }
    Ok(sigma as u64)
}

/// A tuple `(c1, c2, c3, c4)`; ordered lexicographically by element id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenVector(pub [Elem; 4]);

impl GenVector {
    pub fn from_ids(ids: [u32; 4]) -> GenVector {
        GenVector(ids.map(Elem))
    }

    pub fn entries(&self) -> [Elem; 4] {
        self.0
    }

    pub fn get(&self, j: usize) -> Elem {
        self.0[j]
    }

    pub fn ids(&self) -> [u32; 4] {
        self.0.map(|e| e.0)
    }

    pub fn apply(&self, aut: &Automorphism) -> GenVector {
        GenVector(self.0.map(|e| aut.apply(e)))
    }

    pub fn display(&self, g: &GroupTable) -> String {
        format!(
            "({})",
            self.0.iter().map(|&e| g.display(e)).collect::<Vec<_>>().join(", ")
        )
    }

    /// Product one, prescribed orders and generation.
    pub fn is_valid(&self, g: &GroupTable, s: &Signature) -> bool {
        g.product(&self.0).is_identity()
            && (0..4).all(|j| g.element_order(self.0[j]) == s.period(j))
            && g.generates(&self.0)
    }
}

/// All generating vectors of `s` in lexicographic order.
pub fn enumerate_vectors(g: &GroupTable, s: &Signature) -> Vec<GenVector> {
    let lists: Vec<Vec<Elem>> = (0..4).map(|j| g.elements_of_order(s.period(j))).collect();
    if lists.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    lists[0]
        .par_iter()
        .flat_map_iter(|&c1| {
            let mut found = Vec::new();
            for &c2 in &lists[1] {
                let c12 = g.mul(c1, c2);
                for &c3 in &lists[2] {
                    let c4 = g.inv(g.mul(c12, c3));
                    if g.element_order(c4) == s.period(3) && g.generates(&[c1, c2, c3]) {
                        found.push(GenVector([c1, c2, c3, c4]));
                    }
                }
            }
            found
        })
        .collect()
}

/// Lexicographic minimum of the Aut(G) orbit of `v`.
pub fn canonical(v: &GenVector, auts: &[Automorphism]) -> GenVector {
    auts.iter().map(|a| v.apply(a)).min().unwrap_or(*v)
}

/// One Aut(G) orbit of generating vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorClass {
    pub index: usize,
    pub representative: GenVector,
    pub orbit_size: usize,
}

/// Partitions `vectors` into Aut(G) orbits, sorted by representative.
/// Orbits are taken inside `vectors`; members outside the list are ignored.
pub fn aut_classes(auts: &[Automorphism], vectors: &[GenVector]) -> Vec<VectorClass> {
    let members: HashSet<GenVector> = vectors.iter().copied().collect();
    let mut sorted: Vec<GenVector> = members.iter().copied().collect();
    sorted.sort();
    let mut seen: HashSet<GenVector> = HashSet::new();
    let mut classes = Vec::new();
    for v in sorted {
        if seen.contains(&v) {
            continue;
        }
        let orbit: HashSet<GenVector> = auts
            .iter()
            .map(|a| v.apply(a))
            .filter(|w| members.contains(w))
            .collect();
        // v is the least unseen vector, hence least in its orbit
        classes.push(VectorClass {
            index: classes.len(),
            representative: v,
            orbit_size: orbit.len(),
        });
        seen.extend(orbit);
    }
    classes
}

/// Finds the class whose representative is the canonical form of `v`.
pub fn class_of(v: &GenVector, auts: &[Automorphism], classes: &[VectorClass]) -> Option<usize> {
    let c = canonical(v, auts);
    classes.binary_search_by(|k| k.representative.cmp(&c)).ok()
}

/// Serializable vector list tied to an element ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorList {
    pub group: String,
    pub signature: String,
    pub ordering: String,
    pub vectors: Vec<[u32; 4]>,
}

impl VectorList {
    pub fn new(g: &GroupTable, s: &Signature, vectors: &[GenVector]) -> VectorList {
        VectorList {
            group: g.name().to_string(),
            signature: s.to_string(),
            ordering: g.ordering_fingerprint(),
            vectors: vectors.iter().map(GenVector::ids).collect(),
        }
    }
}
