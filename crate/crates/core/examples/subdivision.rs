//! The subdivision of the Petersen graph: layout, distance-2 split and the
//! lifted action of an automorphism.
//!
//! ```bash
//! cargo run --example subdivision
//! ```

use subdiv_ldt::autsolve::{automorphism_group, Coloring};
use subdiv_ldt::geometry::petersen;
use subdiv_ldt::graph::{diameter, distance2_components, girth, lift_to_subdivision, line_graph, subdivision};
use subdiv_ldt::perm::Permutation;

fn main() -> subdiv_ldt::Result<()> {
    let sigma = petersen();
    let (s, map) = subdivision(&sigma);
    println!("S(Petersen): {} vertices, {} edges", s.n(), s.m());
    println!("girth {:?} -> {:?}, diameter {} -> {}", girth(&sigma), girth(&s), diameter(&sigma)?, diameter(&s)?);
    for x in [10, 11, 24] {
        println!("edge-vertex {x} subdivides {:?}", map.edge_of(x).unwrap());
    }

    let split = distance2_components(&s)?;
    let line = line_graph(&sigma);
    println!("distance-2 components: {} and {} vertices", split.first.n(), split.second.n());
    println!("first equals Petersen: {}", split.first.edges() == sigma.edges());
    println!("second equals L(Petersen): {}", split.second.edges() == line.edges());

    let aut = automorphism_group(&sigma, &Coloring::unit(sigma.n()))?;
    for p in aut.generators() {
        let lifted = lift_to_subdivision(p, &sigma, &map)?;
        println!("{:?} lifts to an automorphism of S: {}", p.to_vec(), s.is_automorphism(&lifted.to_vec()));
    }
    let swap = Permutation::from_cycles(10, &[&[0, 1]])?;
    println!("(0 1) lifts: {}", lift_to_subdivision(&swap, &sigma, &map).is_ok());
    Ok(())
}
