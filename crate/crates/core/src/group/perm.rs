//! Permutations of `{0, .., n-1}` and a parser for 1-based cycle notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation stored as its image list. Products compose left to right:
/// `x^(ab) = (x^a)^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation {
                    input: format!("{images:?}"),
                    reason: "image list is not a bijection".into(),
                });
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree.max(self.images.len()) as u32);
        Perm { images }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`; points are 1-based.
    /// The empty string and `()` denote the identity.
    pub fn parse_cycles(input: &str) -> Result<Perm> {
        let bad = |reason: &str| Error::InvalidPermutation {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = input.trim();
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = body_start.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = body_start[..close].trim();
            if !body.is_empty() {
                let mut cycle = Vec::new();
                for tok in body.split(',') {
                    let p: usize = tok
                        .trim()
                        .parse()
                        .map_err(|_| bad(&format!("`{}` is not a positive integer", tok.trim())))?;
                    if p == 0 {
                        return Err(bad("points are 1-based"));
                    }
                    cycle.push(p - 1);
                }
                cycles.push(cycle);
            }
            rest = body_start[close + 1..].trim_start();
        }
        let degree = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in &cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if moved[p] {
                    return Err(bad(&format!("point {} appears twice", p + 1)));
                }
                moved[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm { images })
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        Perm::parse_cycles(s)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut p = start;
            write!(f, "(")?;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.apply(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
