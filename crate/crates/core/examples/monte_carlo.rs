//! Monte Carlo decks against the exact law, and single-card marginals.

use mixlab::generators::{classic_graph, ClassicFamily};
use mixlab::interchange::{empirical_distribution, evolve_exact, simulate_map, single_card_marginal_tv};
use mixlab::RngSeed;

fn main() -> mixlab::Result<()> {
    let g = classic_graph(ClassicFamily::Path(4))?;
    println!("P4, 200000 decks per time");
    for t in [2, 5, 10, 20] {
        let exact = evolve_exact(&g, t)?;
        let emp = empirical_distribution(&g, t, 200_000, RngSeed(t as u64))?;
        println!(
            "  t={t:<3} exact tv={:.4} empirical tv={:.4} distance between them={:.4}",
            exact.tv_to_uniform(),
            emp.tv_to_uniform(),
            exact.tv_distance(&emp)?
        );
    }

    let big = classic_graph(ClassicFamily::Cycle(200))?;
    for t in [1_000, 10_000, 100_000] {
        let d = simulate_map(&big, t, 200, RngSeed(1), |deck| deck.displaced() as f64);
        let mean = d.iter().sum::<f64>() / d.len() as f64;
        let tv0 = single_card_marginal_tv(&big, 0, t)?;
        println!("C200 t={t:<7} mean displaced cards={mean:.1} card-0 marginal tv={tv0:.4}");
    }
    Ok(())
}
