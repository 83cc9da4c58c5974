//! Canonical-path congestion and the resulting L2 upper bound on mixing.

use mixlab::bounds::{build_path_system, congestion_a_star, l2_upper_time, prop_a_bound};
use mixlab::generators::{classic_graph, ClassicFamily};
use mixlab::interchange::exact_mixing_times;

fn main() -> mixlab::Result<()> {
    println!("graph  A*        l2 bound  coarse bound  exact tau_l2");
    for (name, fam) in [
        ("P5", ClassicFamily::Path(5)),
        ("C6", ClassicFamily::Cycle(6)),
        ("K5", ClassicFamily::Complete(5)),
        ("Q3", ClassicFamily::Hypercube(3)),
    ] {
        let g = classic_graph(fam)?;
        let ps = build_path_system(&g)?;
        let rep = congestion_a_star(&g, &ps)?;
        let t = l2_upper_time(rep.a_star, g.n(), 1.0, 0.0)?;
        let exact = exact_mixing_times(&g)?.tau_l2;
        println!("{name:<6} {:<9.3} {t:<9} {:<13.1} {exact}", rep.a_star, prop_a_bound(&g)?);
    }

    let g = classic_graph(ClassicFamily::Path(6))?;
    let ps = build_path_system(&g)?;
    println!("\nP6 canonical path 0 -> 5: {:?} (edge, uses) {:?}", ps.path(0, 5), ps.edge_uses(0, 5));
    Ok(())
}
