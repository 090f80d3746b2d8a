//! Groups given by permutations or by a multiplication table.
//!
//! ```text
//! cargo run --example custom_group
//! ```

use modcomp::braid::{braid_act_word, BraidMove};
use modcomp::group::{automorphisms, build_group, GroupSpec, GroupTable, Perm, DEFAULT_ORDER_CAP};
use modcomp::pipeline::Pipeline;

fn main() -> modcomp::Result<()> {
    // dihedral group of order 8 from two permutations
    let d4 = GroupTable::from_permutations(
        "D4",
        &["(1,2,3,4)".parse::<Perm>()?, "(1,3)".parse()?],
        DEFAULT_ORDER_CAP,
    )?;
    println!("{} order {}, abelian {}", d4.name(), d4.order(), d4.is_abelian());
    println!("{} automorphisms", automorphisms(&d4).len());
    println!("ordering {}", d4.ordering_fingerprint());

    // rebuilt from its table, with generators chosen greedily from the labels
    let again = GroupTable::from_table("D4", &d4.table(), DEFAULT_ORDER_CAP)?;
    println!(
        "from table: order {}, {} generators, {} automorphisms",
        again.order(),
        again.generators().len(),
        automorphisms(&again).len()
    );

    // JSON specs are what `--group file.json` reads
    let spec: GroupSpec = serde_json::from_str(r#"{"permutations": ["(1,2)(3,4)", "(1,3)(2,4)"]}"#)?;
    let v4 = build_group(&spec, DEFAULT_ORDER_CAP)?;
    println!("Klein four group from JSON: order {}", v4.order());

    let p = Pipeline::new(d4, "2,2,2,4".parse()?);
    println!(
        "D4 on {}: genus {}, {} vectors, {} classes, orbits {}",
        p.signature,
        p.genus().unwrap(),
        p.vectors.len(),
        p.classes.len(),
        p.strata()?.sizes_display()
    );
    if let Some(c) = p.classes.first() {
        let v = c.representative;
        let moved = braid_act_word(&p.group, &BraidMove::PureA(1, 2).word(), &v);
        println!("A(1,2) sends {} to {}", v.display(&p.group), moved.display(&p.group));
    }
    Ok(())
}
