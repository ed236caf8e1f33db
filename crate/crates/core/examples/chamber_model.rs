//! The 45 pairs of PG(1,9) as chambers of W(3,2), matched with the
//! edge-vertices of S(Tutte-Coxeter), and the groups transferred through
//! the match.
//!
//! ```bash
//! cargo run --example chamber_model
//! ```

use subdiv_ldt::checks::{chamber_facts, ChamberTransfer, MobiusRecipe};

fn main() -> subdiv_ldt::Result<()> {
    let t = ChamberTransfer::new()?;
    println!("{} chambers, opposition graph valency {:?}, |Aut| = {}",
        t.model.pairs.len(), t.model.opposition.regular_degree(), t.opposition_aut_order);
    println!("chamber 0 = pair {:?} sits on edge {:?}", t.model.pairs[0], t.map.edges()[t.chamber_to_edge[0]]);
    for r in MobiusRecipe::ALL {
        let g = t.group(r)?;
        println!("{:<13} order {:>4}, orbits on Tutte-Coxeter {:?}", r.name(), g.order(), g.orbits().sizes);
    }
    let f = chamber_facts(&t)?;
    println!("PGL(2,9) pair stabilizer: order {}, orbits on opposite chambers {:?}",
        f.pgl_stabilizer_order, f.pgl_opposite_orbits);
    println!("PSL(2,9) pair stabilizer: order {}, orbits {:?}, semiregular {}",
        f.psl_stabilizer_order, f.psl_opposite_orbits, f.psl_semiregular);
    println!("M10 edge stabilizer on the distance-8 sphere: {:?}", f.m10_distance_8_orbits);
    Ok(())
}
