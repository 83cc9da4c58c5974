//! Runs the built-in regular-tree and hypercube sweeps in parallel and fits
//! the scaling exponent of the inverse gap.

use mixlab::experiments::{fit_rows, preset, run_sweep_with_jobs, write_csv, Family, Quantity, SweepConfig};

fn main() -> mixlab::Result<()> {
    for name in ["a", "g"] {
        let cfg = &preset(name)?[0];
        let rows = run_sweep_with_jobs(cfg, 4)?;
        let fit = fit_rows(&rows, "gamma_inverse")?;
        println!("preset {name}: slope={:.3} r2={:.5} over {} sizes", fit.slope, fit.r2, fit.points);
    }

    let text = "family = uniform_tree\nsizes = 64, 128, 256, 512\nseeds = 5\nquantity = gamma_inverse\n";
    let cfg = SweepConfig::parse(text)?;
    assert_eq!(cfg.family, Family::UniformTree);
    assert_eq!(cfg.quantity, Quantity::GammaInverse);
    let rows = run_sweep_with_jobs(&cfg, 4)?;
    let fit = fit_rows(&rows, "gamma_inverse")?;
    println!("uniform trees: slope={:.3}", fit.slope);
    write_csv(&rows[..3], std::io::stdout().lock())?;
    Ok(())
}
