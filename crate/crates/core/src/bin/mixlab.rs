use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mixlab::bounds::{
    build_path_system, congestion_a_star, l2_upper_time, prop_a_bound, wilson_distinguisher_mc,
    wilson_plan,
};
use mixlab::electrical::{harmonic_potential, BoundaryCondition};
use mixlab::experiments::{preset, run_sweep_with_jobs, write_csv, SweepConfig};
use mixlab::generators::{
    classic_graph, dlp_giant, erdos_renyi, gw_conditioned_to_survive, gw_tree, kesten_iic,
    random_regular, regular_tree, uniform_labelled_tree, ClassicFamily, DlpParams,
    OffspringDistribution, SurvivalMode,
};
use mixlab::graph::{read_edge_list, write_edge_list};
use mixlab::interchange::{
    empirical_distribution, exact_mixing_times, simulate_map, MAX_EXACT_N,
};
use mixlab::spectral::{fiedler, interchange_gap_exact, l1_report};
use mixlab::{Error, Graph, Result, RngSeed};

#[derive(Parser)]
#[command(name = "mixlab", version, about = "Interchange process mixing-time laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample or build a graph and write it as an edge list
    Generate(GenerateArgs),
    /// Exact TV and L2 curves over all of S_n (n <= 8)
    Exact {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Monte Carlo decks run from the identity
    Simulate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 10_000)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Algebraic connectivity, single-card gap and Fiedler vector norms
    Spectral {
        #[arg(long)]
        graph: PathBuf,
        /// also diagonalize the full interchange operator (n <= 6)
        #[arg(long)]
        exact_interchange: bool,
    },
    /// Harmonic potential with +1 on one vertex set and -1 on another
    Potential {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        plus: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        minus: Vec<usize>,
    },
    /// Upper and lower mixing bounds as one CSV row
    Bounds {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        c_const: f64,
        #[arg(long, default_value_t = 0.25)]
        b: f64,
        #[arg(long, default_value_t = 2000)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run a preset or a key=value config and write CSV rows
    Sweep {
        #[arg(long, conflicts_with = "config")]
        preset: Option<String>,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(clap::Args)]
struct GenerateArgs {
    /// path, cycle, complete, hypercube, lollipop, regular_tree, uniform_tree,
    /// kesten_iic, gw_tree, gw_survive, er, er_giant, dlp_giant, random_regular
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// ambient size for Erdos-Renyi and 2-core models
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    r: Option<usize>,
    /// depth or dimension
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// mean offspring, or c in p = c/N
    #[arg(long)]
    mean: Option<f64>,
    #[arg(long)]
    clique: Option<usize>,
    #[arg(long)]
    handle: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn need<T>(x: Option<T>, flag: &str) -> Result<T> {
    x.ok_or_else(|| Error::BadParams(format!("this family needs --{flag}")))
}

fn generate(a: &GenerateArgs) -> Result<Graph> {
    let mut rng = RngSeed(a.seed).rng();
    match a.family.as_str() {
        "path" => classic_graph(ClassicFamily::Path(need(a.n, "n")?)),
        "cycle" => classic_graph(ClassicFamily::Cycle(need(a.n, "n")?)),
        "complete" => classic_graph(ClassicFamily::Complete(need(a.n, "n")?)),
        "hypercube" => classic_graph(ClassicFamily::Hypercube(need(a.d, "d")? as u32)),
        "lollipop" => classic_graph(ClassicFamily::Lollipop {
            clique: need(a.clique, "clique")?,
            handle: need(a.handle, "handle")?,
        }),
        "regular_tree" => regular_tree(a.r.unwrap_or(3), need(a.d, "d")?),
        "uniform_tree" => uniform_labelled_tree(need(a.n, "n")?, &mut rng),
        "kesten_iic" => kesten_iic(need(a.d, "d")?, &mut rng),
        "gw_tree" => gw_tree(
            &OffspringDistribution::poisson(need(a.mean, "mean")?)?,
            a.d.unwrap_or(usize::MAX),
            a.n.unwrap_or(1_000_000),
            &mut rng,
        ),
        "gw_survive" => Ok(gw_conditioned_to_survive(
            &OffspringDistribution::poisson(need(a.mean, "mean")?)?,
            need(a.d, "d")?,
            SurvivalMode::Spine,
            a.n.unwrap_or(5_000_000),
            &mut rng,
        )?
        .tree),
        "er" => erdos_renyi(need(a.big_n, "N")?, need(a.p, "p")?, &mut rng),
        "er_giant" => {
            let big_n = need(a.big_n, "N")?;
            let p = match (a.p, a.eps) {
                (Some(p), _) => p,
                (None, Some(e)) => (1.0 + e) / big_n as f64,
                (None, None) => a.mean.unwrap_or(1.0) / big_n as f64,
            };
            Ok(erdos_renyi(big_n, p, &mut rng)?.giant_component()?.0)
        }
        "dlp_giant" => Ok(dlp_giant(&DlpParams::new(need(a.big_n, "N")?, need(a.eps, "eps")?)?, &mut rng)?.graph),
        "random_regular" => random_regular(need(a.n, "n")?, a.r.unwrap_or(3), 10_000, &mut rng),
        other => Err(Error::BadParams(format!("unknown family `{other}`"))),
    }
}

fn load(path: &Path) -> Result<Graph> {
    read_edge_list(BufReader::new(File::open(path)?))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Generate(a) => {
            let g = generate(&a)?;
            let mut w = output(a.out.as_deref())?;
            write_edge_list(&g, &mut w)?;
            w.flush()?;
        }
        Cmd::Exact { graph } => {
            let g = load(&graph)?;
            let r = exact_mixing_times(&g)?;
            let mut w = output(None)?;
            writeln!(w, "# tau_mix={} tau_l2={}", r.tau_mix, r.tau_l2)?;
            writeln!(w, "t,tv,l2")?;
            for (t, tv, l2) in &r.curve {
                writeln!(w, "{t},{tv},{l2}")?;
            }
            w.flush()?;
        }
        Cmd::Simulate { graph, t, reps, seed } => {
            let g = load(&graph)?;
            let displaced = simulate_map(&g, t, reps, RngSeed(seed), |d| d.displaced() as f64);
            let mean = displaced.iter().sum::<f64>() / reps.max(1) as f64;
            let tv = if g.n() <= MAX_EXACT_N && reps > 0 {
                empirical_distribution(&g, t, reps, RngSeed(seed))?.tv_to_uniform().to_string()
            } else {
                String::new()
            };
            println!("t,reps,mean_displaced,empirical_tv");
            println!("{t},{reps},{mean},{tv}");
        }
        Cmd::Spectral { graph, exact_interchange } => {
            let g = load(&graph)?;
            let f = fiedler(&g)?;
            let gamma = f.eigenvalue / (2.0 * g.m() as f64);
            let l1 = l1_report(&f.eigenvector);
            let mut header = "kappa,gamma,l1,exponent,residual,method".to_string();
            let mut row = format!(
                "{},{},{},{},{},{}",
                f.eigenvalue, gamma, l1.l1, l1.exponent, f.residual, f.method
            );
            if exact_interchange {
                header.push_str(",interchange_gap");
                row.push_str(&format!(",{}", interchange_gap_exact(&g)?));
            }
            println!("{header}\n{row}");
        }
        Cmd::Potential { graph, plus, minus } => {
            let g = load(&graph)?;
            let sol = harmonic_potential(&g, &BoundaryCondition::new(plus, minus))?;
            let mut w = output(None)?;
            writeln!(w, "# resistance={} current={}", sol.resistance, sol.current)?;
            writeln!(w, "vertex,eta")?;
            for (v, x) in sol.eta.values().iter().enumerate() {
                writeln!(w, "{v},{x}")?;
            }
            w.flush()?;
        }
        Cmd::Bounds { graph, c_const, b, reps, seed } => {
            let g = load(&graph)?;
            let pa = prop_a_bound(&g)?;
            let a_star = congestion_a_star(&g, &build_path_system(&g)?)?.a_star;
            let l2 = l2_upper_time(a_star, g.n(), c_const, 0.0)?;
            let f = fiedler(&g)?;
            let gamma = f.eigenvalue / (2.0 * g.m() as f64);
            let plan = wilson_plan(&g, &f.eigenvector, gamma, b)?;
            let mc = wilson_distinguisher_mc(&g, &plan, reps, RngSeed(seed))?;
            println!("prop_a_leading_order,a_star,l2_upper_time,gamma,wilson_t,mc_tv_lower_bound");
            println!("{pa},{a_star},{l2},{gamma},{},{}", plan.t, mc.tv_lower_bound);
        }
        Cmd::Sweep { preset: name, config, out, jobs, seed } => {
            let mut cfgs = match (name, config) {
                (Some(p), _) => preset(&p)?,
                (None, Some(path)) => vec![SweepConfig::parse(&std::fs::read_to_string(path)?)?],
                (None, None) => return Err(Error::Config("give --preset or --config".into())),
            };
            if let Some(s) = seed {
                cfgs.iter_mut().for_each(|c| c.base_seed = s);
            }
            let out = out.or_else(|| cfgs.iter().find_map(|c| c.out.clone()));
            let mut rows = Vec::new();
            for c in &cfgs {
                rows.extend(run_sweep_with_jobs(c, jobs)?);
            }
            let mut w = output(out.as_deref())?;
            write_csv(&rows, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error [{}]: {e}", e.class());
            ExitCode::FAILURE
        }
    }
}
