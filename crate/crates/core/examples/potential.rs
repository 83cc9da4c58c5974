//! Harmonic potentials, effective resistance, and the spectral-gap upper
//! bound from a centered potential.

use mixlab::electrical::{
    centered_test_vector, effective_resistance, gap_upper_bound, harmonic_potential,
    regular_tree_thirds, BoundaryCondition,
};
use mixlab::generators::{classic_graph, regular_tree, ClassicFamily};
use mixlab::spectral::single_card_gap;

fn main() -> mixlab::Result<()> {
    let p = classic_graph(ClassicFamily::Path(5))?;
    let sol = harmonic_potential(&p, &BoundaryCondition::new(vec![0], vec![4]))?;
    println!("P5 potential {:?}", sol.eta.values());
    println!("  R={} I={}", sol.resistance, sol.current);
    println!("K4 resistance between two vertices: {}", effective_resistance(&classic_graph(ClassicFamily::Complete(4))?, &[0], &[1])?);

    println!("\n3-ary trees: bound from the deep-leaves potential versus the true gap");
    for depth in 3..=7 {
        let t = regular_tree(3, depth)?;
        let sol = harmonic_potential(&t, &regular_tree_thirds(&t)?)?;
        let bound = gap_upper_bound(&t, &centered_test_vector(&sol))?;
        let gamma = single_card_gap(&t)?;
        println!("  depth={depth} n={:<5} bound={bound:.3e} gamma={gamma:.3e} ratio={:.2}", t.n(), bound / gamma);
    }
    Ok(())
}
