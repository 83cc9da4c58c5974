use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiGraph};
use crate::rng::Rng;

/// `G(N, p)`: every pair is an edge independently with probability `p`.
/// Uses geometric skips over the pair sequence, so cost is `O(N + m)`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("edge probability {p} not in [0, 1]")));
    }
    if p == 0.0 || n < 2 {
        return Ok(Graph::empty(n));
    }
    let mut edges = Vec::new();
    if p == 1.0 {
        for v in 1..n {
            for w in 0..v {
                edges.push((w, v));
            }
        }
        return Graph::from_edge_list(n, &edges);
    }
    let log_q = (1.0 - p).ln();
    let mut v: usize = 1;
    let mut w: i64 = -1;
    while v < n {
        let r: f64 = rng.random();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Uniform perfect matching of half-edges. Loops and parallel edges are kept.
pub fn configuration_multigraph(degrees: &[usize], rng: &mut Rng) -> Result<MultiGraph> {
    let total: usize = degrees.iter().sum();
    if total % 2 == 1 {
        return Err(Error::OddDegreeSum(total));
    }
    let mut stubs: Vec<usize> = Vec::with_capacity(total);
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v, d));
    }
    stubs.shuffle(rng);
    let edges = stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    MultiGraph::new(degrees.len(), edges)
}

/// Uniform simple connected `r`-regular graph on `n` vertices, by rejection
/// from the configuration model.
pub fn random_regular(n: usize, r: usize, budget: usize, rng: &mut Rng) -> Result<Graph> {
    if (n * r) % 2 == 1 {
        return Err(Error::OddDegreeSum(n * r));
    }
    if r < 3 || r >= n {
        return Err(Error::BadParams(format!("need 3 <= r < n, got r = {r}, n = {n}")));
    }
    let degrees = vec![r; n];
    for _ in 0..budget {
        let h = configuration_multigraph(&degrees, rng)?;
        if !h.is_simple() {
            continue;
        }
        let g = h.to_simple()?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudgetExceeded(budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngSeed;

    #[test]
    fn er_extremes() {
        let mut rng = RngSeed(1).rng();
        assert_eq!(erdos_renyi(10, 0.0, &mut rng).unwrap().m(), 0);
        assert_eq!(erdos_renyi(10, 1.0, &mut rng).unwrap().m(), 45);
        assert!(erdos_renyi(10, 1.5, &mut rng).is_err());
    }

    #[test]
    fn er_mean_edge_count() {
        let n = 500;
        let p = 2.0 / n as f64;
        let reps = 200;
        let mut rng = RngSeed(2).rng();
        let total: usize = (0..reps).map(|_| erdos_renyi(n, p, &mut rng).unwrap().m()).sum();
        let pairs = (n * (n - 1) / 2) as f64;
        let mean = total as f64 / reps as f64;
        let sd_of_mean = (pairs * p * (1.0 - p) / reps as f64).sqrt();
        assert!((mean - pairs * p).abs() < 3.0 * sd_of_mean, "mean {mean}");
    }

    #[test]
    fn configuration_small_cases() {
        let mut rng = RngSeed(3).rng();
        let h = configuration_multigraph(&[1, 1], &mut rng).unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
        let h = configuration_multigraph(&[2], &mut rng).unwrap();
        assert_eq!(h.edges(), &[(0, 0)]);
        assert_eq!(h.degrees(), vec![2]);
        assert_eq!(
            configuration_multigraph(&[1, 2], &mut rng),
            Err(Error::OddDegreeSum(3))
        );
    }

    /// Exact law of the (3,3) configuration by enumerating all 15 perfect
    /// matchings of 6 labelled half-edges.
    fn enumerate_matchings(stubs: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if stubs.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for j in 1..stubs.len() {
            let mut rest: Vec<usize> = stubs[1..].to_vec();
            let partner = rest.remove(j - 1);
            for mut m in enumerate_matchings(&rest) {
                m.push((stubs[0], partner));
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn configuration_matches_enumeration() {
        let owner = [0usize, 0, 0, 1, 1, 1];
        let all = enumerate_matchings(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(all.len(), 15);
        let triple = all
            .iter()
            .filter(|m| m.iter().all(|&(a, b)| owner[a] != owner[b]))
            .count();
        let exact_triple = triple as f64 / 15.0;
        assert!((exact_triple - 0.4).abs() < 1e-12);

        let mut rng = RngSeed(4).rng();
        let reps = 100_000;
        let mut hits = 0;
        for _ in 0..reps {
            let h = configuration_multigraph(&[3, 3], &mut rng).unwrap();
            if h.multiplicity(0, 1) == 3 {
                hits += 1;
            } else {
                assert_eq!(h.multiplicity(0, 1), 1);
                assert_eq!(h.loop_count(), 2);
            }
        }
        let freq = hits as f64 / reps as f64;
        assert!((freq - exact_triple).abs() < 0.01, "freq {freq}");
    }

    #[test]
    fn random_regular_cases() {
        let mut rng = RngSeed(5).rng();
        for _ in 0..10 {
            let g = random_regular(4, 3, 10_000, &mut rng).unwrap();
            assert_eq!(g.m(), 6);
        }
        assert_eq!(random_regular(5, 3, 10, &mut rng), Err(Error::OddDegreeSum(15)));
        let g = random_regular(100, 3, 10_000, &mut rng).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.is_connected());
    }
}
