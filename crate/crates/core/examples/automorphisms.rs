//! Automorphism groups by partition refinement and search, and isomorphism
//! testing.
//!
//! ```bash
//! cargo run --example automorphisms
//! ```

use subdiv_ldt::autsolve::{automorphism_group, isomorphism, refine, Coloring};
use subdiv_ldt::geometry::{cycle, hoffman_singleton, incidence_pg2, incidence_w3, petersen};
use subdiv_ldt::graph::{subdivision, Graph};

fn main() -> subdiv_ldt::Result<()> {
    for (name, g) in [
        ("Petersen", petersen()),
        ("Heawood", incidence_pg2(2)?.graph),
        ("Tutte-Coxeter", incidence_w3(2)?.graph),
        ("Hoffman-Singleton", hoffman_singleton()),
        ("S(Petersen)", subdivision(&petersen()).0),
    ] {
        let aut = automorphism_group(&g, &Coloring::unit(g.n()))?;
        println!("{name:<18} |Aut| = {:>7} from {} generators", aut.order(), aut.generators().len());
    }

    let (s, _) = subdivision(&petersen());
    let cells = refine(&s, &Coloring::unit(s.n())).cells();
    println!("refinement of S(Petersen) has cells of sizes {:?}", cells.iter().map(Vec::len).collect::<Vec<_>>());

    // fixing one vertex of C6 by colour leaves only the reflection through it
    let c6 = cycle(6)?;
    let fixed = automorphism_group(&c6, &Coloring::from_colors(&[1, 0, 0, 0, 0, 0]))?;
    println!("C6 with vertex 0 coloured: order {}", fixed.order());

    let shuffled = Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)])?;
    println!("C6 ~ relabelled C6: {:?}", isomorphism(&c6, &shuffled)?);
    let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])?;
    println!("C6 ~ 2C3: {:?}", isomorphism(&c6, &two_triangles)?);
    Ok(())
}
