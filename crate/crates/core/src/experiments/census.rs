//! Counting statistics behind the stick and unmoved-card lower bounds.

use rand::Rng as _;

use crate::graph::Graph;
use crate::rng::Rng;

/// Length of the stick ending at leaf `leaf`: the number of edges walked
/// inward through degree-2 vertices until the first vertex of another degree.
pub fn stick_length(g: &Graph, leaf: usize) -> usize {
    debug_assert_eq!(g.degree(leaf), 1);
    let mut prev = leaf;
    let mut cur = g.neighbors(leaf)[0];
    let mut len = 1;
    while g.degree(cur) == 2 {
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

/// Number of leaves whose stick has length at least `alpha · ln n`.
pub fn stick_census(g: &Graph, alpha: f64) -> usize {
    let threshold = alpha * (g.n() as f64).ln();
    (0..g.n())
        .filter(|&v| g.degree(v) == 1 && stick_length(g, v) as f64 >= threshold)
        .count()
}

/// Runs the interchange process for `t` steps and counts cards that were
/// never part of an executed swap.
pub fn unmoved_census(g: &Graph, t: usize, rng: &mut Rng) -> usize {
    let mut moved = vec![false; g.n()];
    if g.m() > 0 {
        for _ in 0..t {
            let (u, v) = g.edges()[rng.random_range(0..g.m())];
            if rng.random::<bool>() {
                // the card that started at u is still there iff no swap
                // has touched u
                moved[u] = true;
                moved[v] = true;
            }
        }
    }
    moved.iter().filter(|&&b| !b).count()
}
