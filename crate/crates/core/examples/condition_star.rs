//! Condition (*) for subgroups of S_n wr S_2 on K_{n,n}.
//!
//! ```bash
//! cargo run --example condition_star
//! ```

use subdiv_ldt::checks::{condition_star, wreath_full, wreath_of};
use subdiv_ldt::perm::{PermGroup, Permutation};

fn main() -> subdiv_ldt::Result<()> {
    let a3 = [Permutation::from_cycles(3, &[&[0, 1, 2]])?];
    let groups = [
        ("S3 wr S2", wreath_full(3)),
        ("S3 x S3", wreath_of(3, PermGroup::symmetric(3).generators(), false)),
        ("A3 wr S2", wreath_of(3, &a3, true)),
        ("S4 wr S2", wreath_full(4)),
    ];
    for (name, g) in groups {
        let n = g.degree() / 2;
        let r = condition_star(&g, n)?;
        println!(
            "{name:<9} order {:>4}: (i) {} (ii) {}/{} (iii) interchange {} transitive {} => {}",
            r.order, r.clause_i, r.clause_ii, r.clause_ii_second, r.clause_iii_interchange,
            r.clause_iii_transitive, r.verdict
        );
    }
    Ok(())
}
