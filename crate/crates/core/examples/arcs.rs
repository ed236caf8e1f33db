//! s-arc transitivity by orbit counting on ranked arcs.
//!
//! ```bash
//! cargo run --example arcs
//! ```

use subdiv_ldt::autsolve::{automorphism_group, Coloring};
use subdiv_ldt::checks::{check_arc_transitive, DEFAULT_ARC_CAP};
use subdiv_ldt::geometry::{incidence_pg2, incidence_w3, petersen};

fn main() -> subdiv_ldt::Result<()> {
    for (name, g) in [
        ("Petersen", petersen()),
        ("Heawood", incidence_pg2(2)?.graph),
        ("Tutte-Coxeter", incidence_w3(2)?.graph),
    ] {
        let aut = automorphism_group(&g, &Coloring::unit(g.n()))?;
        let mut line = format!("{name:<14}");
        for s in 1..=6 {
            let r = check_arc_transitive(&g, &aut, s, DEFAULT_ARC_CAP)?;
            line += &format!(" s={s}: {}/{}", r.orbit_count, r.arc_count);
        }
        println!("{line}");
    }
    println!("(orbits / arcs; a single orbit means s-arc transitive)");
    Ok(())
}
