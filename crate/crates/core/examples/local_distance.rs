//! Local distance transitivity of subdivisions, with a passing and a
//! failing group on the same graph.
//!
//! ```bash
//! cargo run --example local_distance
//! ```

use subdiv_ldt::autsolve::{automorphism_group, Coloring};
use subdiv_ldt::checks::{check_local_sdt, lift_group, ChamberTransfer, MobiusRecipe};
use subdiv_ldt::geometry::{incidence_pg2, petersen};
use subdiv_ldt::graph::Graph;
use subdiv_ldt::perm::PermGroup;

fn report(name: &str, sigma: &Graph, group: &PermGroup, s: usize) -> subdiv_ldt::Result<()> {
    let (sub, _, lifted) = lift_group(sigma, group)?;
    let r = check_local_sdt(&sub, &lifted, s)?;
    println!("{name}: s = {s}, verdict {}", r.verdict);
    for rep in &r.representatives {
        let orbits: Vec<_> = rep.depths.iter().map(|d| d.orbit_sizes.clone()).collect();
        println!("  vertex {:>2} (orbit {:>2}, |stab| {}): {orbits:?}", rep.vertex, rep.orbit_size, rep.stabilizer_order);
    }
    if let Some(f) = r.failure {
        println!("  first failure at vertex {}, depth {}: orbit sizes {:?}", f.vertex, f.depth, f.orbit_sizes);
    }
    Ok(())
}

fn main() -> subdiv_ldt::Result<()> {
    let p = petersen();
    report("S(Petersen), S5", &p, &automorphism_group(&p, &Coloring::unit(10))?, 6)?;
    let h = incidence_pg2(2)?.graph;
    report("S(Heawood), PGL(3,2).2", &h, &automorphism_group(&h, &Coloring::unit(14))?, 6)?;

    let t = ChamberTransfer::new()?;
    report("S(Tutte-Coxeter), M10", &t.sigma, &t.group(MobiusRecipe::M10)?, 8)?;
    report("S(Tutte-Coxeter), PGL(2,9)", &t.sigma, &t.group(MobiusRecipe::Pgl)?, 8)?;
    Ok(())
}
