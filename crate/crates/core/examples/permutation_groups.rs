//! Schreier-Sims on a few familiar groups: orders, orbits, stabilizers,
//! derived subgroups and transitivity degrees.
//!
//! ```bash
//! cargo run --example permutation_groups
//! ```

use subdiv_ldt::geometry::projective_line_group;
use subdiv_ldt::perm::{PermGroup, Permutation};

fn main() -> subdiv_ldt::Result<()> {
    let s6 = PermGroup::symmetric(6);
    let a5 = PermGroup::alternating(5);
    let pgammal = projective_line_group(8, true)?;
    for (name, g) in [("S6", &s6), ("A5", &a5), ("PGammaL(2,8)", &pgammal)] {
        let transitivity = (1..=5).take_while(|&k| g.is_k_transitive(k).unwrap_or(false)).last().unwrap_or(0);
        println!(
            "{name:<13} order {:>5}, base {:?}, derived order {}, {transitivity}-transitive",
            g.order(),
            g.chain().base(),
            g.derived_subgroup().order()
        );
    }

    let stab = s6.stabilizer(0);
    println!("S6 point stabilizer: order {}, orbits {:?}", stab.order(), stab.orbits().sizes);

    let dihedral = PermGroup::new(
        8,
        vec![
            Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]])?,
            Permutation::from_images(vec![0, 7, 6, 5, 4, 3, 2, 1])?,
        ],
    )?;
    let elements = dihedral.enumerate_elements(1000)?;
    println!("D16 has {} elements; stabilizer of 0 acts on {{1,7}} with orbit sizes {:?}",
        elements.len(), dihedral.stabilizer_orbits_on(0, &[1, 7])?);

    let outside = Permutation::from_cycles(8, &[&[0, 1]])?;
    let (member, residue) = dihedral.sift(&outside)?;
    println!("(0 1) in D16: {member}, sift residue moves {:?}", residue.first_moved());
    Ok(())
}
