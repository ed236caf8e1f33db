//! Every classification row, the negative controls and the side checks,
//! with a one-line summary per item.
//!
//! ```bash
//! cargo run --release --example verify_table
//! ```

use subdiv_ldt::checks::{verify_table, TableOptions};

fn main() -> subdiv_ldt::Result<()> {
    let include_hexagon = std::env::args().any(|a| a == "--include-hexagon");
    let report = verify_table(TableOptions { include_hexagon, jobs: 0 })?;
    for c in &report.cases {
        let status = if c.verdict { "ok" } else { "MISMATCH" };
        println!(
            "{status:<8} {:<34} |G| {:>8}  s=2d {:<5} s=D {:<5}",
            c.row, c.group.order, c.ldt.verdict, c.ldt.full_verdict
        );
        for m in &c.mismatches {
            println!("         {m}");
        }
    }
    println!("chamber facts {}", report.chamber.verdict);
    for s in &report.star {
        println!("condition (*) {:<9} {}", s.label, s.verdict);
    }
    for r in &report.remark {
        println!("K_n {:<13} {}", r.label, r.verdict);
    }
    println!("corollary max d {} max D {}", report.corollary.max_d, report.corollary.max_big_d);
    println!("failures: {:?}", report.failures());
    Ok(())
}
