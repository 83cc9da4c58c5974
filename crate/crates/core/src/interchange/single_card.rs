//! The walk of one card: stay with probability `1 − d_u/(2m)`, move to each
//! neighbor with probability `1/(2m)`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense row-stochastic matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    n: usize,
    data: Vec<f64>,
}

impl StochasticMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// `x ↦ x A` (equivalently `A x`, the matrix is symmetric).
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| x[i] * self.data[i * self.n + j]).sum())
            .collect()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }

    pub fn rows_sum_to_one(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (self.row(i).iter().sum::<f64>() - 1.0).abs() <= tol)
    }
}

pub fn single_card_matrix(g: &Graph) -> Result<StochasticMatrix> {
    g.require_connected()?;
    let n = g.n();
    let two_m = 2.0 * g.m() as f64;
    let mut data = vec![0.0; n * n];
    for u in 0..n {
        data[u * n + u] = if g.m() == 0 { 1.0 } else { 1.0 - g.degree(u) as f64 / two_m };
        for &v in g.neighbors(u) {
            data[u * n + v] = 1.0 / two_m;
        }
    }
    Ok(StochasticMatrix { n, data })
}

/// One step of the single-card walk applied to a vertex measure, in `O(n + m)`.
pub fn single_card_step(g: &Graph, x: &[f64]) -> Vec<f64> {
    if g.m() == 0 {
        return x.to_vec();
    }
    let two_m = 2.0 * g.m() as f64;
    (0..g.n())
        .map(|v| {
            let inflow: f64 = g.neighbors(v).iter().map(|&u| x[u]).sum();
            x[v] * (1.0 - g.degree(v) as f64 / two_m) + inflow / two_m
        })
        .collect()
}

/// Law of card `card`'s position after `t` steps from the identity deck.
pub fn single_card_law(g: &Graph, card: usize, t: usize) -> Result<Vec<f64>> {
    if card >= g.n() {
        return Err(Error::OutOfRange {
            index: card,
            limit: g.n(),
        });
    }
    let mut x = vec![0.0; g.n()];
    x[card] = 1.0;
    for _ in 0..t {
        x = single_card_step(g, &x);
    }
    Ok(x)
}

/// TV distance between the position of `card` at time `t` and uniform on `V`.
/// By data processing this lower-bounds the full-deck TV at `t`.
pub fn single_card_marginal_tv(g: &Graph, card: usize, t: usize) -> Result<f64> {
    g.require_connected()?;
    let law = single_card_law(g, card, t)?;
    let u = 1.0 / g.n() as f64;
    Ok(0.5 * law.iter().map(|p| (p - u).abs()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_examples() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let a = single_card_matrix(&p3).unwrap();
        assert_eq!(a.row(1), &[0.25, 0.5, 0.25]);
        assert!(a.is_symmetric(0.0));
        assert!(a.rows_sum_to_one(1e-12));
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let a = single_card_matrix(&k2).unwrap();
        assert_eq!(a.row(0), &[0.5, 0.5]);
        let cube = crate::generators::hypercube(3).unwrap();
        let a = single_card_matrix(&cube).unwrap();
        for &(u, v) in cube.edges() {
            assert!((a.get(u, v) - 1.0 / 24.0).abs() < 1e-15);
        }
        let split = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(single_card_matrix(&split), Err(Error::Disconnected));
    }

    #[test]
    fn marginal_tv_examples() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        for card in 0..3 {
            let tv = single_card_marginal_tv(&p3, card, 0).unwrap();
            assert!((tv - 2.0 / 3.0).abs() < 1e-15);
        }
        let tv = single_card_marginal_tv(&p3, 0, 1).unwrap();
        assert!((tv - 5.0 / 12.0).abs() < 1e-15);
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(single_card_marginal_tv(&k2, 0, 1).unwrap().abs() < 1e-15);
        assert!(single_card_marginal_tv(&k2, 0, 50).unwrap().abs() < 1e-15);
    }

    #[test]
    fn sparse_step_matches_matrix() {
        let g = crate::generators::classic_graph(crate::generators::ClassicFamily::Lollipop {
            clique: 4,
            handle: 3,
        })
        .unwrap();
        let a = single_card_matrix(&g).unwrap();
        let x: Vec<f64> = (0..g.n()).map(|i| (i as f64).sin()).collect();
        let dense = a.apply(&x);
        let sparse = single_card_step(&g, &x);
        for (d, s) in dense.iter().zip(&sparse) {
            assert!((d - s).abs() < 1e-14);
        }
    }
}
