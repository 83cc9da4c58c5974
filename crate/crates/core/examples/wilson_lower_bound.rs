//! The eigenvector statistic that certifies a deck is not yet mixed.

use mixlab::bounds::{wilson_distinguisher_mc, wilson_plan};
use mixlab::generators::{classic_graph, ClassicFamily};
use mixlab::spectral::fiedler;
use mixlab::RngSeed;

fn main() -> mixlab::Result<()> {
    let g = classic_graph(ClassicFamily::Cycle(40))?;
    let f = fiedler(&g)?;
    let gamma = f.eigenvalue / (2.0 * g.m() as f64);
    let plan = wilson_plan(&g, &f.eigenvector, gamma, 0.25)?;
    println!("C40: gamma={gamma:.4e} t={} threshold={:.3}", plan.t, plan.threshold);
    for k in [0usize, 1, 2, 4, 8, 16] {
        let p = plan.at_time(plan.t * k / 4);
        let d = wilson_distinguisher_mc(&g, &p, 4000, RngSeed(k as u64))?;
        println!(
            "  t={:<7} tv lower bound={:.3} mean statistic={:.3} expected={:.3}",
            p.t,
            d.tv_lower_bound,
            d.mean,
            p.expected_statistic(p.t)
        );
    }
    Ok(())
}
