//! Lower bounds from an eigenvector test statistic.

use rand::seq::SliceRandom;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interchange::{simulate_map, DeckState};
use crate::rng::RngSeed;
use crate::spectral::TestVector;

/// `φ(X) = Σ_{i∈S} ξ(position of card i)` tracked to time `t = ⌊b γ⁻¹ ln n⌋`,
/// where `S` holds the cards that start on the positive support of `ξ`.
#[derive(Debug, Clone, PartialEq)]
pub struct WilsonPlan {
    pub xi: TestVector,
    pub gamma: f64,
    pub b: f64,
    pub t: usize,
    pub cards: Vec<usize>,
    /// `φ(X₀) = ½‖ξ‖₁` for zero-sum `ξ`
    pub phi0: f64,
    /// `½ (1−γ)^t φ(X₀)`, half the expected statistic at time `t`
    pub threshold: f64,
}

impl WilsonPlan {
    /// The same plan evaluated at another time, with the threshold moved to match.
    pub fn at_time(&self, t: usize) -> WilsonPlan {
        WilsonPlan {
            t,
            threshold: 0.5 * (1.0 - self.gamma).powi(t as i32) * self.phi0,
            ..self.clone()
        }
    }

    /// `E[φ(X_s)] = (1−γ)^s φ(X₀)` when `ξ` is an eigenvector.
    pub fn expected_statistic(&self, s: usize) -> f64 {
        (1.0 - self.gamma).powi(s as i32) * self.phi0
    }
}

pub fn wilson_plan(g: &Graph, xi: &TestVector, gamma: f64, b: f64) -> Result<WilsonPlan> {
    if xi.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: xi.len(),
        });
    }
    if !xi.is_zero_sum() || !xi.is_normalized() {
        return Err(Error::BadParams("ξ must be zero-sum with unit norm".into()));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::BadParams(format!("γ must lie in (0,1), got {gamma}")));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::BadParams(format!("b must be positive, got {b}")));
    }
    let t = (b / gamma * (g.n() as f64).ln()).floor() as usize;
    if t < 1 {
        return Err(Error::BadParams(format!("plan time ⌊bγ⁻¹ ln n⌋ is 0 for b = {b}")));
    }
    let cards: Vec<usize> = (0..g.n()).filter(|&v| xi[v] > 0.0).collect();
    let phi0: f64 = cards.iter().map(|&v| xi[v]).sum();
    let plan = WilsonPlan {
        xi: xi.clone(),
        gamma,
        b,
        t,
        cards,
        phi0,
        threshold: 0.0,
    };
    Ok(plan.at_time(t))
}

/// `Σ_{i∈S} ξ(pos_of[i])`.
pub fn wilson_statistic(xi: &TestVector, cards: &[usize], deck: &DeckState) -> Result<f64> {
    if xi.len() != deck.n() {
        return Err(Error::DimensionMismatch {
            expected: xi.len(),
            got: deck.n(),
        });
    }
    cards
        .iter()
        .map(|&c| {
            if c >= deck.n() {
                Err(Error::OutOfRange {
                    index: c,
                    limit: deck.n(),
                })
            } else {
                Ok(xi[deck.position(c)])
            }
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct WilsonDiagnostics {
    /// `max(0, f_t − f_∞ − 2 SE)`
    pub tv_lower_bound: f64,
    /// fraction of chains at time `t` with `φ > c`
    pub freq_chain: f64,
    /// fraction of uniform decks with `φ > c`
    pub freq_uniform: f64,
    /// standard error of `f_t − f_∞`
    pub std_error: f64,
    pub mean: f64,
    pub variance: f64,
    pub variance_below_one: bool,
}

const UNIFORM_STREAM_BASE: u64 = 1 << 40;
const CHUNK: usize = 4096;

/// Monte Carlo estimate of how well `{φ > c}` separates the chain at time
/// `t` from a uniform deck, reduced by two standard errors.
pub fn wilson_distinguisher_mc(
    g: &Graph,
    plan: &WilsonPlan,
    reps: usize,
    seed: RngSeed,
) -> Result<WilsonDiagnostics> {
    if reps < 100 {
        return Err(Error::BadParams("need at least 100 replications".into()));
    }
    if plan.xi.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: plan.xi.len(),
        });
    }
    let stat = |d: &DeckState| wilson_statistic(&plan.xi, &plan.cards, d).expect("sizes checked");
    let chain = simulate_map(g, plan.t, reps, seed, stat);
    let uniform: Vec<f64> = (0..reps.div_ceil(CHUNK))
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = seed.stream(UNIFORM_STREAM_BASE + c as u64);
            let len = CHUNK.min(reps - c * CHUNK);
            let mut out = Vec::with_capacity(len);
            let mut cards: Vec<usize> = (0..g.n()).collect();
            for _ in 0..len {
                cards.shuffle(&mut rng);
                let deck = DeckState::from_card_at(cards.clone()).expect("a permutation");
                out.push(stat(&deck));
            }
            out
        })
        .collect();

    let r = reps as f64;
    let freq = |xs: &[f64]| xs.iter().filter(|&&x| x > plan.threshold).count() as f64 / r;
    let (f_t, f_u) = (freq(&chain), freq(&uniform));
    let std_error = ((f_t * (1.0 - f_t) + f_u * (1.0 - f_u)) / r).sqrt();
    let mean = chain.iter().sum::<f64>() / r;
    let variance = chain.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (r - 1.0);
    Ok(WilsonDiagnostics {
        tv_lower_bound: (f_t - f_u - 2.0 * std_error).max(0.0),
        freq_chain: f_t,
        freq_uniform: f_u,
        std_error,
        mean,
        variance,
        variance_below_one: variance < 1.0,
    })
}
