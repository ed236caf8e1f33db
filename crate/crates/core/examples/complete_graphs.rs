//! Subdivisions of complete graphs: local distance transitivity against
//! 3- and 4-transitivity of the acting group.
//!
//! ```bash
//! cargo run --example complete_graphs
//! ```

use subdiv_ldt::checks::remark_kn_check;
use subdiv_ldt::geometry::projective_line_group;
use subdiv_ldt::perm::PermGroup;

fn main() -> subdiv_ldt::Result<()> {
    let cases = [
        ("S4", 4, PermGroup::symmetric(4)),
        ("A5", 5, PermGroup::alternating(5)),
        ("S5", 5, PermGroup::symmetric(5)),
        ("PGL(2,8)", 9, projective_line_group(8, false)?),
        ("PGammaL(2,8)", 9, projective_line_group(8, true)?),
    ];
    for (name, n, g) in cases {
        let r = remark_kn_check(n, &g)?;
        println!(
            "K{n} with {name:<12} 3-trans {:<5} 4-trans {:<5} | s=2 {:<5} s={} {:<5}",
            r.three_transitive, r.four_transitive, r.ldt_2, r.full_depth, r.ldt_full
        );
    }
    Ok(())
}
