//! Upper bounds by comparison with random transpositions.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Leading-order `8 m ρ n ln n`, with `ρ` the radius.
pub fn prop_a_bound(g: &Graph) -> Result<f64> {
    let (radius, _) = g.radius_diameter()?;
    let n = g.n() as f64;
    Ok(8.0 * g.m() as f64 * radius as f64 * n * n.ln())
}

/// A shortest path for every unordered pair `u < v`, used to write the
/// transposition `(u v)` as a product of edge transpositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    n: usize,
    diameter: usize,
    /// concatenated paths, pair `p` occupies `flat[offsets[p]..offsets[p+1]]`
    flat: Vec<usize>,
    offsets: Vec<usize>,
    edge_of: HashMap<(usize, usize), usize>,
}

impl PathSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn pair_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn pair_index(&self, u: usize, v: usize) -> usize {
        let (u, v) = (u.min(v), u.max(v));
        // pairs (0,1),(0,2),..,(0,n-1),(1,2),..
        u * self.n - u * (u + 1) / 2 + (v - u - 1)
    }

    /// The stored path from `min(u,v)` to `max(u,v)`.
    pub fn path(&self, u: usize, v: usize) -> Result<&[usize]> {
        if u == v || u.max(v) >= self.n {
            return Err(Error::BadParams(format!("no transposition ({u} {v})")));
        }
        let p = self.pair_index(u, v);
        Ok(&self.flat[self.offsets[p]..self.offsets[p + 1]])
    }

    /// `|y| = 2r − 1` for a path with `r` edges.
    pub fn rep_length(&self, u: usize, v: usize) -> Result<usize> {
        Ok(2 * (self.path(u, v)?.len() - 1) - 1)
    }

    /// `(edge index, N(x, y))` for each edge used by the representation of
    /// `(u v)`: every path edge twice, except the one at the far end, once.
    pub fn edge_uses(&self, u: usize, v: usize) -> Result<Vec<(usize, usize)>> {
        let path = self.path(u, v)?;
        let r = path.len() - 1;
        Ok(path
            .windows(2)
            .enumerate()
            .map(|(k, w)| {
                let e = self.edge_of[&(w[0].min(w[1]), w[0].max(w[1]))];
                (e, if k + 1 == r { 1 } else { 2 })
            })
            .collect())
    }
}

/// One BFS per source; backtracking from each target picks the
/// smallest-labelled neighbor one level closer, matching
/// [`Graph::shortest_path`].
pub fn build_path_system(g: &Graph) -> Result<PathSystem> {
    g.require_connected()?;
    let n = g.n();
    let (_, diameter) = g.radius_diameter()?;
    let per_source: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let dist = g.bfs_distances(u).expect("source in range").dist;
            (u + 1..n)
                .map(|v| {
                    let mut d = dist[v].expect("connected");
                    let mut path = vec![v];
                    let mut cur = v;
                    while d > 0 {
                        cur = *g
                            .neighbors(cur)
                            .iter()
                            .find(|&&w| dist[w] == Some(d - 1))
                            .expect("BFS level structure");
                        path.push(cur);
                        d -= 1;
                    }
                    path.reverse();
                    path
                })
                .collect()
        })
        .collect();
    let mut flat = Vec::new();
    let mut offsets = vec![0];
    for path in per_source.into_iter().flatten() {
        let r = path.len() - 1;
        assert!(2 * r - 1 < 2 * diameter, "representation longer than 2·diam − 1");
        flat.extend(path);
        offsets.push(flat.len());
    }
    let edge_of = g.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    Ok(PathSystem {
        n,
        diameter,
        flat,
        offsets,
        edge_of,
    })
}

/// The comparison constant against random transpositions with
/// `μ(x) = 1/(2m)` on edges and `μ₀((i j)) = 1/n²`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub a_star: f64,
    pub argmax_edge: (usize, usize),
    pub mu: f64,
    pub mu0: f64,
    /// `(1/μ(x)) Σ_y |y| N(x,y) μ₀(y)` per edge, in `g.edges()` order.
    pub profile: Vec<f64>,
}

pub fn congestion_a_star(g: &Graph, ps: &PathSystem) -> Result<ComparisonReport> {
    if ps.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: ps.n(),
        });
    }
    let n = g.n();
    let m = g.m();
    // Σ |y| N(x,y) is an integer, so the parallel reduction is exact.
    let counts: Vec<u64> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut local = vec![0u64; m];
            for v in u + 1..n {
                let len = ps.rep_length(u, v).expect("valid pair") as u64;
                for (e, k) in ps.edge_uses(u, v).expect("valid pair") {
                    local[e] += len * k as u64;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; m],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let mu = 1.0 / (2.0 * m as f64);
    let mu0 = 1.0 / (n as f64 * n as f64);
    let profile: Vec<f64> = counts.iter().map(|&c| c as f64 * mu0 / mu).collect();
    let (best, &top) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        .ok_or(Error::EmptyGraph)?;
    Ok(ComparisonReport {
        a_star: top as f64 * mu0 / mu,
        argmax_edge: g.edges()[best],
        mu,
        mu0,
        profile,
    })
}

/// Smallest step count `t` with `n! e^{−s} + C e^{−2c} ≤ 1/4` for
/// `s = ⌊t/A*⌋ ≥ n(ln n + c)`. Each term gets half the budget, so `c` is
/// raised to at least `½ ln(8C)` and `s ≥ ln n! + ln 8`.
pub fn l2_upper_time(a_star: f64, n: usize, c_const: f64, safety: f64) -> Result<u64> {
    if !(a_star > 0.0 && a_star.is_finite()) {
        return Err(Error::BadParams(format!("A* must be positive, got {a_star}")));
    }
    if n < 2 {
        return Err(Error::BadParams("need n >= 2".into()));
    }
    if !(c_const > 0.0 && c_const.is_finite()) || !safety.is_finite() {
        return Err(Error::BadParams("C must be positive and c finite".into()));
    }
    let nf = n as f64;
    let c = safety.max(0.5 * (8.0 * c_const).ln());
    let ln_fact: f64 = (2..=n).map(|k| (k as f64).ln()).sum();
    let s_rt = (nf * (nf.ln() + c)).floor();
    let s_fact = (ln_fact + 8f64.ln()).ceil();
    let s = s_rt.max(s_fact);
    let mut t = (s * a_star).ceil() as u64;
    // guard against rounding in s·A*
    while ((t as f64) / a_star).floor() < s {
        t += 1;
    }
    while t > 0 && (((t - 1) as f64) / a_star).floor() >= s {
        t -= 1;
    }
    Ok(t)
}
