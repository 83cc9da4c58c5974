//! Sweep configuration: graph family, sizes, seeds, and the measured quantity.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A graph family whose members are indexed by one integer size.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// size = n
    Path,
    /// size = n
    Cycle,
    /// size = n
    Complete,
    /// size = dimension d, n = 2^d
    Hypercube,
    /// size = n, split evenly between clique and handle
    Lollipop,
    /// size = depth
    RegularTree { r: usize },
    /// size = n
    UniformTree,
    /// size = depth
    KestenIic,
    /// size = depth; Poisson(mean) offspring conditioned to reach it
    GwSurvive { mean: f64 },
    /// size = ambient N; giant component of G(N, c/N)
    ErGiant { c: f64 },
    /// size = ambient N; either fixed ε or fixed budget εN
    DlpGiant { eps: Option<f64>, eps_n: Option<f64> },
    /// size = n
    RandomRegular { r: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Hypercube => "hypercube",
            Family::Lollipop => "lollipop",
            Family::RegularTree { .. } => "regular_tree",
            Family::UniformTree => "uniform_tree",
            Family::KestenIic => "kesten_iic",
            Family::GwSurvive { .. } => "gw_survive",
            Family::ErGiant { .. } => "er_giant",
            Family::DlpGiant { .. } => "dlp_giant",
            Family::RandomRegular { .. } => "random_regular",
        }
    }

    /// Builds the family from its name and the remaining config keys, which
    /// are consumed.
    fn from_parts(name: &str, params: &mut BTreeMap<String, String>) -> Result<Family> {
        let mut take = |key: &str| -> Result<Option<f64>> {
            params
                .remove(key)
                .map(|v| {
                    v.parse::<f64>()
                        .map_err(|_| Error::Config(format!("`{key}` must be a number, got `{v}`")))
                })
                .transpose()
        };
        let f = match name {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "hypercube" => Family::Hypercube,
            "lollipop" => Family::Lollipop,
            "regular_tree" => Family::RegularTree {
                r: take("r")?.unwrap_or(3.0) as usize,
            },
            "uniform_tree" => Family::UniformTree,
            "kesten_iic" => Family::KestenIic,
            "gw_survive" => Family::GwSurvive {
                mean: take("mean")?.unwrap_or(1.5),
            },
            "er_giant" => Family::ErGiant {
                c: take("c")?.unwrap_or(1.0),
            },
            "dlp_giant" => {
                let eps = take("eps")?;
                let eps_n = take("eps_n")?;
                if eps.is_some() == eps_n.is_some() {
                    return Err(Error::Config("dlp_giant needs exactly one of `eps`, `eps_n`".into()));
                }
                Family::DlpGiant { eps, eps_n }
            }
            "random_regular" => Family::RandomRegular {
                r: take("r")?.unwrap_or(3.0) as usize,
            },
            other => return Err(Error::Config(format!("unknown family `{other}`"))),
        };
        Ok(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    GammaInverse,
    GapUpperBound,
    AStar,
    PropA,
    WilsonTime,
    McTvCurve,
    ExactTau,
    /// sticks of length at least `alpha · ln n`
    StickCensus,
    /// fraction of cards never moved by time `frac · n ln n`
    UnmovedCensus,
}

impl Quantity {
    pub fn name(&self) -> &'static str {
        match self {
            Quantity::GammaInverse => "gamma_inverse",
            Quantity::GapUpperBound => "gap_upper_bound",
            Quantity::AStar => "a_star",
            Quantity::PropA => "prop_a",
            Quantity::WilsonTime => "wilson_time",
            Quantity::McTvCurve => "mc_tv_curve",
            Quantity::ExactTau => "exact_tau",
            Quantity::StickCensus => "stick_census",
            Quantity::UnmovedCensus => "unmoved_census",
        }
    }
}

impl FromStr for Quantity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Quantity> {
        Ok(match s {
            "gamma_inverse" => Quantity::GammaInverse,
            "gap_upper_bound" => Quantity::GapUpperBound,
            "a_star" => Quantity::AStar,
            "prop_a" => Quantity::PropA,
            "wilson_time" => Quantity::WilsonTime,
            "mc_tv_curve" => Quantity::McTvCurve,
            "exact_tau" => Quantity::ExactTau,
            "stick_census" => Quantity::StickCensus,
            "unmoved_census" => Quantity::UnmovedCensus,
            other => return Err(Error::Config(format!("unknown quantity `{other}`"))),
        })
    }
}

/// Knobs used by some quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantityOptions {
    /// Wilson exponent `b`
    pub b: f64,
    /// constant `C` in the random-transpositions L² bound
    pub c_const: f64,
    /// Monte Carlo replications
    pub reps: usize,
    /// stick length threshold factor
    pub alpha: f64,
    /// census time as a multiple of `n ln n`
    pub frac: f64,
}

impl Default for QuantityOptions {
    fn default() -> Self {
        QuantityOptions {
            b: 0.25,
            c_const: 1.0,
            reps: 2000,
            alpha: 0.5,
            frac: 0.3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub seeds: usize,
    pub base_seed: u64,
    pub quantity: Quantity,
    pub options: QuantityOptions,
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(family: Family, sizes: Vec<usize>, seeds: usize, quantity: Quantity) -> SweepConfig {
        SweepConfig {
            family,
            sizes,
            seeds,
            base_seed: 1,
            quantity,
            options: QuantityOptions::default(),
            out: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> SweepConfig {
        self.base_seed = seed;
        self
    }

    pub fn with_options(mut self, options: QuantityOptions) -> SweepConfig {
        self.options = options;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::Config("`sizes` is empty".into()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("`sizes` must be strictly increasing".into()));
        }
        if self.seeds == 0 {
            return Err(Error::Config("`seeds` must be at least 1".into()));
        }
        Ok(())
    }

    /// Parses flat `key = value` text. Blank lines and `#` comments are
    /// skipped; unknown keys are an error.
    pub fn parse(text: &str) -> Result<SweepConfig> {
        let mut kv = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                msg: "expected `key = value`".into(),
            })?;
            if kv.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("duplicate key `{}`", k.trim()),
                });
            }
        }
        let mut need = |key: &str| {
            kv.remove(key)
                .ok_or_else(|| Error::Config(format!("missing key `{key}`")))
        };
        let family_name = need("family")?;
        let quantity: Quantity = need("quantity")?.parse()?;
        let sizes = need("sizes")?
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Config(format!("bad size `{}`", s.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        let num = |kv: &mut BTreeMap<String, String>, key: &str| -> Result<Option<f64>> {
            kv.remove(key)
                .map(|v| {
                    v.parse::<f64>()
                        .map_err(|_| Error::Config(format!("`{key}` must be a number, got `{v}`")))
                })
                .transpose()
        };
        let seeds = num(&mut kv, "seeds")?.unwrap_or(1.0) as usize;
        let base_seed = num(&mut kv, "seed")?.unwrap_or(1.0) as u64;
        let mut options = QuantityOptions::default();
        if let Some(b) = num(&mut kv, "b")? {
            options.b = b;
        }
        if let Some(c) = num(&mut kv, "c_const")? {
            options.c_const = c;
        }
        if let Some(r) = num(&mut kv, "reps")? {
            options.reps = r as usize;
        }
        if let Some(a) = num(&mut kv, "alpha")? {
            options.alpha = a;
        }
        if let Some(f) = num(&mut kv, "frac")? {
            options.frac = f;
        }
        let out = kv.remove("out").map(PathBuf::from);
        let family = Family::from_parts(&family_name, &mut kv)?;
        if let Some(k) = kv.keys().next() {
            return Err(Error::Config(format!("unknown key `{k}`")));
        }
        let cfg = SweepConfig {
            family,
            sizes,
            seeds,
            base_seed,
            quantity,
            options,
            out,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}
