//! The interchange process: Monte Carlo decks, the single-card chain, and
//! exact evolution of the deck law for small `n`.

mod deck;
mod exact;
mod lehmer;
mod single_card;

pub use deck::DeckState;
pub use exact::{
    evolve_exact, exact_mixing_times, ExactEvolution, InterchangeOperator, MixingReport,
    PermDistribution, L2_THRESHOLD, MAX_EXACT_N, TV_THRESHOLD,
};
pub use lehmer::{factorial, index_perm, perm_index};
pub use single_card::{
    single_card_law, single_card_marginal_tv, single_card_matrix, single_card_step,
    StochasticMatrix,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::RngSeed;

/// Replications per random stream. Fixed so that results do not depend on
/// the number of worker threads.
const CHUNK: usize = 4096;

/// Runs `reps` independent decks for `t` steps from the identity and maps
/// each final deck through `f`. Output order is replication order.
pub fn simulate_map<T, F>(g: &Graph, t: usize, reps: usize, seed: RngSeed, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&DeckState) -> T + Sync,
{
    let chunks = reps.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = seed.stream(c as u64);
            let len = CHUNK.min(reps - c * CHUNK);
            let mut out = Vec::with_capacity(len);
            for _ in 0..len {
                let mut deck = DeckState::identity(g.n());
                deck.run_steps(g, t, &mut rng);
                out.push(f(&deck));
            }
            out
        })
        .collect()
}

/// Empirical law of the deck after `t` steps, over `reps` replications.
pub fn empirical_distribution(
    g: &Graph,
    t: usize,
    reps: usize,
    seed: RngSeed,
) -> Result<PermDistribution> {
    if g.n() > MAX_EXACT_N {
        return Err(Error::TooLarge {
            what: "deck for empirical law",
            size: g.n(),
            cap: MAX_EXACT_N,
        });
    }
    if reps == 0 {
        return Err(Error::BadParams("reps must be positive".into()));
    }
    let idx = simulate_map(g, t, reps, seed, |d| {
        lehmer::perm_index_unchecked(d.card_at())
    });
    let mut probs = vec![0.0; factorial(g.n())];
    for i in idx {
        probs[i] += 1.0;
    }
    let total = reps as f64;
    probs.iter_mut().for_each(|p| *p /= total);
    PermDistribution::from_probs(g.n(), probs)
}
