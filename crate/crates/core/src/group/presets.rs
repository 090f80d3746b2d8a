//! Built-in permutation groups.

use super::{GroupTable, Perm};
use crate::error::{Error, Result};

pub const PRESET_NAMES: &[&str] = &["sym3", "cyclic:<n>", "alt5", "psl2_7", "sg21_1"];

fn perms(cycles: &[&str]) -> Vec<Perm> {
    cycles
        .iter()
        .map(|c| Perm::parse_cycles(c).expect("preset generators are well formed"))
        .collect()
}

/// Looks up a preset by name. `cyclic:n` is the cyclic group of order `n`.
pub fn preset(name: &str, cap: usize) -> Result<GroupTable> {
    let name = name.trim();
    let (label, gens) = match name {
        "sym3" => ("Sym(3)".to_string(), perms(&["(1,2)", "(1,2,3)"])),
        "alt5" => ("Alt(5)".to_string(), perms(&["(1,2,3,4,5)", "(1,2,3)"])),
        // Action on the eight points of the projective line over F_7.
        "psl2_7" => (
            "PSL(2,7)".to_string(),
            perms(&["(2,3,4,5,6,7,8)", "(1,2)(3,8)(4,5)(6,7)"]),
        ),
        // x -> x + 1 and x -> 2x on Z/7.
        "sg21_1" => ("SG(21,1)".to_string(), perms(&["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"])),
        _ => {
            let n: usize = name
                .strip_prefix("cyclic:")
                .and_then(|n| n.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
            if n > cap {
                return Err(Error::OrderCapExceeded { cap });
            }
            let cycle = format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            let gens = if n == 1 {
                vec![Perm::identity(1)]
            } else {
                perms(&[&cycle])
            };
            (format!("Cyclic({n})"), gens)
        }
    };
    let mut g = GroupTable::from_permutations(&label, &gens, cap)?;
    g.set_name(&label);
    Ok(g)
}
