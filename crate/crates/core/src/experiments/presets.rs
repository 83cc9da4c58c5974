//! Ready-made sweeps for each graph class of the main theorem, sized for a
//! desktop run.

use super::config::{Family, Quantity, QuantityOptions, SweepConfig};
use crate::error::{Error, Result};

/// Budget `εN` for the fixed-budget 2-core sweep.
pub const DLP_BUDGET: f64 = 20_000.0;
/// The ε grid of the 2-core sweep.
pub const DLP_EPS: [f64; 4] = [0.15, 0.1, 0.07, 0.05];
/// Kesten tree depths whose typical sizes track 64, 128, .., 2048 vertices.
pub const KESTEN_DEPTHS: [usize; 6] = [9, 13, 18, 25, 36, 51];

/// `(name, description, sweeps)` for presets `a` through `g`.
pub fn theorem_a_recipes() -> Vec<(&'static str, &'static str, Vec<SweepConfig>)> {
    let tree_sizes: Vec<usize> = (6..=11).map(|k| 1 << k).collect();
    let dlp_sizes: Vec<usize> = DLP_EPS.iter().map(|e| (DLP_BUDGET / e).round() as usize).collect();
    vec![
        (
            "a",
            "regular tree, gamma^-1 ~ n^2",
            vec![
                SweepConfig::new(Family::RegularTree { r: 3 }, (5..=9).collect(), 1, Quantity::GammaInverse),
                SweepConfig::new(Family::RegularTree { r: 3 }, (5..=9).collect(), 1, Quantity::GapUpperBound),
            ],
        ),
        (
            "b",
            "uniform labelled tree and Kesten tree, gamma^-1 ~ n^{5/2}",
            vec![
                SweepConfig::new(Family::UniformTree, tree_sizes, 20, Quantity::GammaInverse),
                SweepConfig::new(Family::KestenIic, KESTEN_DEPTHS.to_vec(), 20, Quantity::GammaInverse),
            ],
        ),
        (
            "c",
            "critical Erdos-Renyi giant, gamma^-1 ~ n^{5/2}",
            vec![SweepConfig::new(
                Family::ErGiant { c: 1.0 },
                vec![4000, 8000, 16000, 32000, 64000],
                30,
                Quantity::GammaInverse,
            )],
        ),
        (
            "d",
            "supercritical 2-core model at fixed eps*N, gamma^-1/(eps*N) ~ eps^-3 up to log factors",
            vec![SweepConfig::new(
                Family::DlpGiant {
                    eps: None,
                    eps_n: Some(DLP_BUDGET),
                },
                dlp_sizes,
                20,
                Quantity::GammaInverse,
            )],
        ),
        (
            "e",
            "strictly supercritical giant, stick census",
            vec![SweepConfig::new(
                Family::ErGiant { c: 2.0 },
                vec![1000, 2000, 4000, 8000],
                5,
                Quantity::StickCensus,
            )
            .with_options(QuantityOptions {
                alpha: 0.3,
                ..QuantityOptions::default()
            })],
        ),
        (
            "f",
            "random 3-regular graphs, congestion and unmoved-card census",
            vec![
                SweepConfig::new(Family::RandomRegular { r: 3 }, vec![64, 128, 256], 3, Quantity::AStar),
                SweepConfig::new(Family::RandomRegular { r: 3 }, vec![128, 256, 512], 50, Quantity::UnmovedCensus)
                    .with_options(QuantityOptions {
                        frac: 0.3,
                        ..QuantityOptions::default()
                    }),
            ],
        ),
        (
            "g",
            "hypercube, gamma^-1 = n d / 2",
            vec![SweepConfig::new(Family::Hypercube, (3..=8).collect(), 1, Quantity::GammaInverse)],
        ),
    ]
}

pub fn preset(name: &str) -> Result<Vec<SweepConfig>> {
    theorem_a_recipes()
        .into_iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, _, cfgs)| cfgs)
        .ok_or_else(|| Error::Config(format!("unknown preset `{name}` (expected a..g)")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::run_sweep;

    #[test]
    fn presets_validate() {
        for (_, _, cfgs) in theorem_a_recipes() {
            for c in cfgs {
                c.validate().unwrap();
            }
        }
        assert!(preset("h").is_err());
    }

    #[test]
    fn hypercube_preset_is_exact() {
        let cfg = &preset("g").unwrap()[0];
        for r in run_sweep(cfg).unwrap() {
            let n = r.n.unwrap() as f64;
            let d = n.log2();
            assert!((r.value.unwrap() - n * d / 2.0).abs() < 1e-9 * n * d);
        }
    }
}
