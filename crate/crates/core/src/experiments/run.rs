//! Sweep execution and CSV output.

use std::io::Write;
use std::time::Instant;

use rand::Rng as _;
use rayon::prelude::*;

use super::census::{stick_census, unmoved_census};
use super::config::{Family, Quantity, SweepConfig};
use crate::bounds::{
    build_path_system, congestion_a_star, prop_a_bound, wilson_distinguisher_mc, wilson_plan,
};
use crate::electrical::{
    centered_test_vector, gap_upper_bound, harmonic_potential, level_progeny_boundary,
    regular_tree_thirds, BoundaryCondition,
};
use crate::error::{Error, Result};
use crate::generators::{
    classic_graph, dlp_giant, erdos_renyi, gw_conditioned_to_survive, kesten_iic, random_regular,
    regular_tree, uniform_labelled_tree, ClassicFamily, DlpParams, OffspringDistribution,
    SurvivalMode,
};
use crate::graph::Graph;
use crate::interchange::exact_mixing_times;
use crate::rng::{Rng, RngSeed};
use crate::spectral::{fiedler, TestVector};

pub const CSV_HEADER: &str = "family,n,m,seed,quantity,value,error,wall_ms";

/// One CSV row. `size` is the config size that produced it and is not
/// written out.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub family: String,
    pub size: usize,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub seed: u64,
    pub quantity: String,
    pub value: Option<f64>,
    pub error: Option<String>,
    pub wall_ms: f64,
}

impl Row {
    pub fn to_csv(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{:.3}",
            self.family,
            opt(self.n),
            opt(self.m),
            self.seed,
            self.quantity,
            self.value.map(|v| v.to_string()).unwrap_or_default(),
            self.error.as_deref().unwrap_or(""),
            self.wall_ms
        )
    }

    /// The CSV line without the wall-time column.
    pub fn to_csv_untimed(&self) -> String {
        let full = self.to_csv();
        full[..full.rfind(',').expect("has columns")].to_string()
    }
}

/// Family label, including the per-size ε for fixed-budget 2-core sweeps.
fn family_label(family: &Family, size: usize) -> String {
    match family {
        Family::DlpGiant { eps_n: Some(k), .. } => format!("dlp_giant:eps={}", k / size as f64),
        Family::DlpGiant { eps: Some(e), .. } => format!("dlp_giant:eps={e}"),
        Family::RegularTree { r } => format!("regular_tree:r={r}"),
        Family::ErGiant { c } => format!("er_giant:c={c}"),
        Family::RandomRegular { r } => format!("random_regular:r={r}"),
        Family::GwSurvive { mean } => format!("gw_survive:mean={mean}"),
        other => other.name().to_string(),
    }
}

/// Draws the graph for one `(size, seed)` cell.
pub fn generate(family: &Family, size: usize, rng: &mut Rng) -> Result<Graph> {
    match *family {
        Family::Path => classic_graph(ClassicFamily::Path(size)),
        Family::Cycle => classic_graph(ClassicFamily::Cycle(size)),
        Family::Complete => classic_graph(ClassicFamily::Complete(size)),
        Family::Hypercube => classic_graph(ClassicFamily::Hypercube(size as u32)),
        Family::Lollipop => classic_graph(ClassicFamily::Lollipop {
            clique: size / 2,
            handle: size - size / 2,
        }),
        Family::RegularTree { r } => regular_tree(r, size),
        Family::UniformTree => uniform_labelled_tree(size, rng),
        Family::KestenIic => kesten_iic(size, rng),
        Family::GwSurvive { mean } => {
            let off = OffspringDistribution::poisson(mean)?;
            Ok(gw_conditioned_to_survive(&off, size, SurvivalMode::Spine, 5_000_000, rng)?.tree)
        }
        Family::ErGiant { c } => {
            let g = erdos_renyi(size, c / size as f64, rng)?;
            Ok(g.giant_component()?.0)
        }
        Family::DlpGiant { eps, eps_n } => {
            let e = eps.unwrap_or_else(|| eps_n.unwrap_or(0.0) / size as f64);
            Ok(dlp_giant(&DlpParams::new(size, e)?, rng)?.graph)
        }
        Family::RandomRegular { r } => random_regular(size, r, 10_000, rng),
    }
}

/// Boundary for the electrical test vector: the thirds of a regular tree,
/// the two-progeny split of the deepest level for other trees, and the ends
/// of a double BFS sweep otherwise.
pub fn default_boundary(family: &Family, g: &Graph) -> Result<BoundaryCondition> {
    if matches!(family, Family::RegularTree { .. }) {
        return regular_tree_thirds(g);
    }
    if g.is_tree() {
        let height = g.eccentricity(0)?.unwrap_or(0);
        return level_progeny_boundary(g, 0, height);
    }
    let far = |s: usize| -> Result<usize> {
        let d = g.bfs_distances(s)?;
        Ok((0..g.n()).max_by_key(|&v| (d.get(v), std::cmp::Reverse(v))).unwrap_or(s))
    };
    let a = far(0)?;
    let b = far(a)?;
    if a == b {
        return Err(Error::BadBoundary("graph has a single vertex".into()));
    }
    Ok(BoundaryCondition::new(vec![a], vec![b]))
}

fn electrical_vector(family: &Family, g: &Graph) -> Result<TestVector> {
    let bc = default_boundary(family, g)?;
    Ok(centered_test_vector(&harmonic_potential(g, &bc)?))
}

/// `(quantity label, value)` pairs for one graph.
fn measure(cfg: &SweepConfig, g: &Graph, seed: RngSeed) -> Result<Vec<(String, f64)>> {
    let opts = &cfg.options;
    let q = cfg.quantity;
    let one = |v: f64| Ok(vec![(q.name().to_string(), v)]);
    match q {
        Quantity::GammaInverse => {
            let f = fiedler(g)?;
            one(2.0 * g.m() as f64 / f.eigenvalue)
        }
        Quantity::GapUpperBound => one(gap_upper_bound(g, &electrical_vector(&cfg.family, g)?)?),
        Quantity::AStar => one(congestion_a_star(g, &build_path_system(g)?)?.a_star),
        Quantity::PropA => one(prop_a_bound(g)?),
        Quantity::WilsonTime => {
            let f = fiedler(g)?;
            let gamma = f.eigenvalue / (2.0 * g.m() as f64);
            one(wilson_plan(g, &f.eigenvector, gamma, opts.b)?.t as f64)
        }
        Quantity::McTvCurve => {
            let f = fiedler(g)?;
            let gamma = f.eigenvalue / (2.0 * g.m() as f64);
            let plan = wilson_plan(g, &f.eigenvector, gamma, opts.b)?;
            (0..=8)
                .map(|k| {
                    let t = k * plan.t / 4;
                    let d = wilson_distinguisher_mc(g, &plan.at_time(t), opts.reps, seed.child(k as u64))?;
                    Ok((format!("mc_tv_curve:t={t}"), d.tv_lower_bound))
                })
                .collect()
        }
        Quantity::ExactTau => {
            let r = exact_mixing_times(g)?;
            Ok(vec![
                ("exact_tau:mix".into(), r.tau_mix as f64),
                ("exact_tau:l2".into(), r.tau_l2 as f64),
            ])
        }
        Quantity::StickCensus => one(stick_census(g, opts.alpha) as f64),
        Quantity::UnmovedCensus => {
            let n = g.n() as f64;
            let t = (opts.frac * n * n.ln()).floor() as usize;
            one(unmoved_census(g, t, &mut seed.child(u64::MAX).rng()) as f64 / n)
        }
    }
}

fn run_cell(cfg: &SweepConfig, size: usize, seed: u64) -> Vec<Row> {
    let start = Instant::now();
    let family = family_label(&cfg.family, size);
    let cell_seed = RngSeed(seed).child(size as u64);
    let mut rng = cell_seed.rng();
    // decorrelate the measurement stream from the generator stream
    let measure_seed = RngSeed(rng.random());
    let result = generate(&cfg.family, size, &mut rng)
        .and_then(|g| measure(cfg, &g, measure_seed).map(|vals| (g, vals)));
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    match result {
        Ok((g, vals)) => vals
            .into_iter()
            .map(|(quantity, value)| Row {
                family: family.clone(),
                size,
                n: Some(g.n()),
                m: Some(g.m()),
                seed,
                quantity,
                value: Some(value),
                error: None,
                wall_ms,
            })
            .collect(),
        Err(e) => vec![Row {
            family,
            size,
            n: None,
            m: None,
            seed,
            quantity: cfg.quantity.name().to_string(),
            value: None,
            error: Some(e.class().to_string()),
            wall_ms,
        }],
    }
}

/// Runs every `(size, seed)` cell in parallel. Rows come back in config
/// order (sizes outer, seeds inner); a failing cell yields one error row.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<Row>> {
    cfg.validate()?;
    let cells: Vec<(usize, u64)> = cfg
        .sizes
        .iter()
        .flat_map(|&s| (0..cfg.seeds as u64).map(move |j| (s, cfg.base_seed + j)))
        .collect();
    let rows: Vec<Vec<Row>> = cells
        .par_iter()
        .with_max_len(1)
        .map(|&(size, seed)| run_cell(cfg, size, seed))
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// Like [`run_sweep`] on a dedicated pool of `jobs` threads.
pub fn run_sweep_with_jobs(cfg: &SweepConfig, jobs: usize) -> Result<Vec<Row>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    pool.install(|| run_sweep(cfg))
}

pub fn write_csv<W: Write>(rows: &[Row], mut w: W) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(w, "{}", r.to_csv())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_gamma_inverse_matches_cosine_formula() {
        let cfg = SweepConfig::new(Family::Path, vec![8, 16, 32], 1, Quantity::GammaInverse);
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 3);
        for r in rows {
            let n = r.n.unwrap() as f64;
            let kappa = 2.0 * (1.0 - (std::f64::consts::PI / n).cos());
            let want = 2.0 * (n - 1.0) / kappa;
            assert!((r.value.unwrap() - want).abs() / want < 1e-9);
        }
    }

    #[test]
    fn complete_gamma_inverse_is_n_minus_one() {
        let cfg = SweepConfig::new(Family::Complete, vec![3, 5, 9], 2, Quantity::GammaInverse);
        for r in run_sweep(&cfg).unwrap() {
            let n = r.n.unwrap() as f64;
            assert!((r.value.unwrap() - (n - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn failures_become_rows() {
        // a 2-cycle does not exist; the sweep carries on to the next size
        let cfg = SweepConfig::new(Family::Cycle, vec![2, 4], 1, Quantity::PropA);
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows[0].error.as_deref(), Some("BadParams"));
        assert!(rows[1].value.is_some());
        assert!(rows[0].to_csv().starts_with("cycle,,,1,prop_a,,BadParams,"));
    }

    #[test]
    fn exact_tau_emits_both_times() {
        let cfg = SweepConfig::new(Family::Path, vec![3], 1, Quantity::ExactTau);
        let rows = run_sweep(&cfg).unwrap();
        let labels: Vec<&str> = rows.iter().map(|r| r.quantity.as_str()).collect();
        assert_eq!(labels, vec!["exact_tau:mix", "exact_tau:l2"]);
    }
}
