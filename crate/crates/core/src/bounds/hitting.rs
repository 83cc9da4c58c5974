//! Expected hitting and commute times by linear solves, and the explicit
//! formula for simple random walk on trees.

use crate::electrical::RootedTree;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::GroundedLaplacian;

/// Which walk on vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Walk {
    /// uniform neighbor each step
    Srw,
    /// uniform edge each step, moving along it when incident
    EdgeWalk,
    /// uniform edge each step, moving along it when incident with probability ½
    CardWalk,
}

impl std::str::FromStr for Walk {
    type Err = Error;
    fn from_str(s: &str) -> Result<Walk> {
        match s {
            "srw" => Ok(Walk::Srw),
            "edge_walk" | "edge" => Ok(Walk::EdgeWalk),
            "card_walk" | "card" => Ok(Walk::CardWalk),
            _ => Err(Error::BadParams(format!("unknown walk `{s}`"))),
        }
    }
}

/// `E_v τ_target` for every start `v`. All three walks move to each
/// neighbor at a rate proportional to 1, so `h` solves `L h = r` off the
/// target with `r = d_v`, `m` or `2m` respectively.
pub fn hitting_times(g: &Graph, target: usize, walk: Walk) -> Result<Vec<f64>> {
    if target >= g.n() {
        return Err(Error::OutOfRange {
            index: target,
            limit: g.n(),
        });
    }
    g.require_connected()?;
    let lap = GroundedLaplacian::grounded_at(g, target)?;
    let m = g.m() as f64;
    let rhs: Vec<f64> = (0..g.n())
        .map(|v| match walk {
            Walk::Srw => g.degree(v) as f64,
            Walk::EdgeWalk => m,
            Walk::CardWalk => 2.0 * m,
        })
        .collect();
    Ok(lap.solve_full(&rhs))
}

/// `E_l τ_h` for simple random walk on a tree:
/// `d(l,h)² + 2 Σ_{x∈P} |E(G_x)| d(x,h)`, where `P` is the `l`–`h` path and
/// `G_x` is the part of the tree hanging off the path at `x`.
pub fn tree_hitting_srw(tree: &Graph, l: usize, h: usize) -> Result<f64> {
    for x in [l, h] {
        if x >= tree.n() {
            return Err(Error::OutOfRange {
                index: x,
                limit: tree.n(),
            });
        }
    }
    let rt = RootedTree::new(tree, h)?;
    // subtree edge counts with h as root: |E(subtree(x))| = size(x) − 1
    let mut size = vec![1usize; tree.n()];
    for &v in rt.order.iter().rev() {
        if let Some(p) = rt.parent[v] {
            size[p] += size[v];
        }
    }
    let d = rt.depth[l] as f64;
    let mut sum = 0.0;
    let mut below: Option<usize> = None;
    let mut x = l;
    while x != h {
        // G_x is x's subtree minus the subtree of the path vertex below it
        let hanging = size[x] - below.map_or(0, |b| size[b]) - 1;
        sum += hanging as f64 * rt.depth[x] as f64;
        below = Some(x);
        x = rt.parent[x].expect("path to root");
    }
    Ok(d * d + 2.0 * sum)
}

/// `E_u τ_v + E_v τ_u`.
pub fn commute_time(g: &Graph, u: usize, v: usize, walk: Walk) -> Result<f64> {
    let to_v = hitting_times(g, v, walk)?;
    let to_u = hitting_times(g, u, walk)?;
    Ok(to_v[u] + to_u[v])
}
