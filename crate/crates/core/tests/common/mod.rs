#![allow(dead_code)]

use mixlab::generators::erdos_renyi;
use mixlab::{Graph, RngSeed};

/// Every connected labelled graph on `n` vertices, by edge bitmask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).ok()?;
            g.is_connected().then_some(g)
        })
        .collect()
}

/// Connected `G(n, p)` samples by rejection.
pub fn random_connected(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = RngSeed(seed).rng();
    let mut out = Vec::new();
    while out.len() < count {
        let g = erdos_renyi(n, p, &mut rng).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// `A x` for the single-card matrix `I − L/(2m)`, written out from the edges.
pub fn single_card_apply(g: &Graph, x: &[f64]) -> Vec<f64> {
    let m2 = 2.0 * g.m() as f64;
    let mut y = x.to_vec();
    for &(u, v) in g.edges() {
        let d = (x[v] - x[u]) / m2;
        y[u] += d;
        y[v] -= d;
    }
    y
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}
