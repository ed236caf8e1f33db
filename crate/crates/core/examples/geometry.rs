//! Finite fields and the incidence graphs of PG(2,q), W(3,q) and H(q).
//!
//! ```bash
//! cargo run --example geometry
//! ```

use subdiv_ldt::geometry::{incidence_hexagon, incidence_pg2, incidence_w3, projective_points, GField};
use subdiv_ldt::graph::analyze;

fn main() -> subdiv_ldt::Result<()> {
    let f4 = GField::new(4)?;
    println!("GF(4): characteristic {}, generator powers {:?}", f4.characteristic(),
        (0..3).map(|i| f4.pow(f4.primitive(), i)).collect::<Vec<_>>());
    println!("PG(2,4) has {} points", projective_points(&f4, 3).len());

    let mut rows = Vec::new();
    for q in [2, 3, 4, 5] {
        rows.push((format!("Inc(PG(2,{q}))"), incidence_pg2(q)?));
    }
    for q in [2, 3, 4] {
        rows.push((format!("Inc(W(3,{q}))"), incidence_w3(q)?));
    }
    rows.push(("Inc(H(2))".to_string(), incidence_hexagon(2)?));
    rows.push(("Inc(H(3))".to_string(), incidence_hexagon(3)?));
    for (name, geo) in rows {
        let r = analyze(&geo.graph)?;
        println!(
            "{name:<15} points {:>3}, lines {:>3}, valency {}, girth {:?}, d {}, D {}, cage {}",
            geo.point_vertices().len(),
            geo.line_vertices().len(),
            r.max_valency,
            r.girth,
            r.diameter,
            r.subdivision_diameter,
            r.is_cage
        );
    }
    Ok(())
}
