//! Moore bounds and cage certificates.
//!
//! ```bash
//! cargo run --example cages
//! ```

use subdiv_ldt::checks::cage_certificate;
use subdiv_ldt::geometry::{hoffman_singleton, incidence_hexagon, incidence_pg2, incidence_w3, petersen};
use subdiv_ldt::graph::moore_bound;

fn main() -> subdiv_ldt::Result<()> {
    for (k, g) in [(3, 5), (7, 5), (3, 6), (4, 8), (4, 12), (57, 5)] {
        println!("n0({k},{g}) = {}", moore_bound(k, g));
    }
    for (name, graph) in [
        ("Petersen", petersen()),
        ("Hoffman-Singleton", hoffman_singleton()),
        ("Inc(PG(2,3))", incidence_pg2(3)?.graph),
        ("Inc(W(3,3))", incidence_w3(3)?.graph),
        ("Inc(H(3))", incidence_hexagon(3)?.graph),
    ] {
        let c = cage_certificate(&graph)?;
        println!("{name:<18} k {:?} g {:?} n {} bound {:?} cage {}", c.valency, c.girth, c.n, c.moore_bound, c.is_cage);
    }
    Ok(())
}
