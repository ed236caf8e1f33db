//! Build the classical graphs and print their invariants.
//!
//! ```bash
//! cargo run --example graphs
//! ```

use subdiv_ldt::geometry::{complete_bipartite, cycle, hoffman_singleton, incidence_pg2, incidence_w3, petersen};
use subdiv_ldt::graph::io::write_edge_list;
use subdiv_ldt::graph::{analyze, Graph};

fn main() -> subdiv_ldt::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("K3,3", complete_bipartite(3, 3)?),
        ("Petersen", petersen()),
        ("Hoffman-Singleton", hoffman_singleton()),
        ("Heawood", incidence_pg2(2)?.graph),
        ("Tutte-Coxeter", incidence_w3(2)?.graph),
        ("C7", cycle(7)?),
    ];
    println!("{:<18} {:>4} {:>4} {:>3} {:>3} {:>3} {:>6} {:>5}", "graph", "n", "m", "g", "d", "D", "moore", "cage");
    for (name, g) in &graphs {
        let r = analyze(g)?;
        let moore = r.moore_bound.map_or("-".to_string(), |b| b.to_string());
        let girth = r.girth.map_or("-".to_string(), |x| x.to_string());
        println!(
            "{name:<18} {:>4} {:>4} {girth:>3} {:>3} {:>3} {moore:>6} {:>5}",
            r.n, r.m, r.diameter, r.subdivision_diameter, r.is_cage
        );
    }
    print!("\nPetersen edge list:\n{}", write_edge_list(&petersen()));
    Ok(())
}
