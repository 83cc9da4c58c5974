//! Algebraic connectivity, the single-card gap, and its agreement with the
//! gap of the full interchange process on small graphs.

use mixlab::generators::{classic_graph, uniform_labelled_tree, ClassicFamily};
use mixlab::spectral::{fiedler, interchange_gap_exact, l1_report, single_card_gap};
use mixlab::RngSeed;

fn main() -> mixlab::Result<()> {
    println!("graph     single-card gap   interchange gap");
    for (name, fam) in [
        ("P5", ClassicFamily::Path(5)),
        ("C6", ClassicFamily::Cycle(6)),
        ("K5", ClassicFamily::Complete(5)),
        ("lolli", ClassicFamily::Lollipop { clique: 3, handle: 3 }),
    ] {
        let g = classic_graph(fam)?;
        println!("{name:<9} {:<17.12} {:.12}", single_card_gap(&g)?, interchange_gap_exact(&g)?);
    }

    println!("\nFiedler vector l1 norms on paths (exponent a in ||xi||_1 = n^a)");
    for n in [100, 400, 1600] {
        let f = fiedler(&classic_graph(ClassicFamily::Path(n))?)?;
        let r = l1_report(&f.eigenvector);
        println!("  n={n:<5} kappa={:.3e} l1={:.2} a={:.3} via {}", f.eigenvalue, r.l1, r.exponent, f.method);
    }

    let mut rng = RngSeed(3).rng();
    let t = uniform_labelled_tree(3000, &mut rng)?;
    let f = fiedler(&t)?;
    println!("\nuniform tree n=3000: gamma^-1={:.4e} residual={:.1e}", 1.0 / single_card_gap(&t)?, f.residual);
    Ok(())
}
