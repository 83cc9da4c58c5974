//! Linear algebra on graph Laplacians.
//!
//! [`GroundedLaplacian`] factors the Laplacian restricted to a set of free
//! vertices (the rest are held at fixed values) with a minimum-degree sparse
//! LDLᵀ. Trees and tree-like graphs factor with no fill; when the remaining
//! Schur complement becomes dense the factorization hands it to a dense
//! Cholesky. The same factorization serves harmonic potentials, hitting times
//! and the pseudo-inverse used by the iterative eigensolver.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Sparse LDLᵀ of the Laplacian block on free vertices.
#[derive(Debug, Clone)]
pub struct GroundedLaplacian {
    /// free vertex -> local index
    local: Vec<Option<usize>>,
    /// local index -> vertex
    free: Vec<usize>,
    /// elimination order over local indices (sparse phase only)
    order: Vec<usize>,
    /// column of L below each pivot, by position in `order`
    cols: Vec<Vec<(usize, f64)>>,
    pivots: Vec<f64>,
    tail: Option<DenseTail>,
}

#[derive(Debug, Clone)]
struct DenseTail {
    idx: Vec<usize>,
    chol: nalgebra::Cholesky<f64, nalgebra::Dyn>,
}

impl GroundedLaplacian {
    /// Factors `L[free, free]` where `free[v]` marks vertices that are not
    /// held fixed. The block is positive definite as long as every connected
    /// component contains a fixed vertex.
    pub fn new(g: &Graph, is_free: &[bool]) -> Result<GroundedLaplacian> {
        if is_free.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                got: is_free.len(),
            });
        }
        let free: Vec<usize> = (0..g.n()).filter(|&v| is_free[v]).collect();
        let mut local = vec![None; g.n()];
        for (i, &v) in free.iter().enumerate() {
            local[v] = Some(i);
        }
        let k = free.len();
        let mut diag: Vec<f64> = free.iter().map(|&v| g.degree(v) as f64).collect();
        let mut off: Vec<HashMap<usize, f64>> = free
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|&w| local[w].map(|j| (j, -1.0)))
                    .collect()
            })
            .collect();

        let mut alive = vec![true; k];
        let mut remaining = k;
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            (0..k).map(|i| Reverse((off[i].len(), i))).collect();
        let mut order = Vec::with_capacity(k);
        let mut cols = Vec::with_capacity(k);
        let mut pivots = Vec::with_capacity(k);

        while let Some(Reverse((deg, v))) = heap.pop() {
            if !alive[v] || deg != off[v].len() {
                continue;
            }
            if remaining >= 48 && 3 * deg >= remaining {
                heap.push(Reverse((deg, v)));
                break;
            }
            let d = diag[v];
            if d <= 1e-10 {
                return Err(Error::BadBoundary(
                    "Laplacian block is singular: a component has no fixed vertex".into(),
                ));
            }
            let nbrs: Vec<(usize, f64)> = off[v].drain().collect();
            for &(i, _) in &nbrs {
                off[i].remove(&v);
            }
            for (a, &(i, ai)) in nbrs.iter().enumerate() {
                diag[i] -= ai * ai / d;
                for &(j, aj) in &nbrs[a + 1..] {
                    let delta = ai * aj / d;
                    *off[i].entry(j).or_insert(0.0) -= delta;
                    *off[j].entry(i).or_insert(0.0) -= delta;
                }
            }
            for &(i, _) in &nbrs {
                heap.push(Reverse((off[i].len(), i)));
            }
            alive[v] = false;
            remaining -= 1;
            order.push(v);
            pivots.push(d);
            cols.push(nbrs.into_iter().map(|(i, a)| (i, a / d)).collect());
        }

        let tail = if remaining > 0 {
            let idx: Vec<usize> = (0..k).filter(|&i| alive[i]).collect();
            let mut pos = HashMap::with_capacity(idx.len());
            for (p, &i) in idx.iter().enumerate() {
                pos.insert(i, p);
            }
            let mut dense = DMatrix::<f64>::zeros(idx.len(), idx.len());
            for (p, &i) in idx.iter().enumerate() {
                dense[(p, p)] = diag[i];
                for (&j, &a) in &off[i] {
                    dense[(p, pos[&j])] = a;
                }
            }
            let chol = dense.cholesky().ok_or_else(|| {
                Error::BadBoundary(
                    "Laplacian block is singular: a component has no fixed vertex".into(),
                )
            })?;
            Some(DenseTail { idx, chol })
        } else {
            None
        };

        Ok(GroundedLaplacian {
            local,
            free,
            order,
            cols,
            pivots,
            tail,
        })
    }

    /// Factors the Laplacian with the single vertex `ground` held fixed.
    pub fn grounded_at(g: &Graph, ground: usize) -> Result<GroundedLaplacian> {
        let mut is_free = vec![true; g.n()];
        is_free[ground] = false;
        GroundedLaplacian::new(g, &is_free)
    }

    pub fn free_vertices(&self) -> &[usize] {
        &self.free
    }

    pub fn local_index(&self, v: usize) -> Option<usize> {
        self.local.get(v).copied().flatten()
    }

    /// Solves `L[free, free] x = rhs` with both vectors in local indexing.
    pub fn solve_local(&self, rhs: &[f64]) -> Vec<f64> {
        let mut y = rhs.to_vec();
        for (k, &v) in self.order.iter().enumerate() {
            let yv = y[v];
            for &(i, l) in &self.cols[k] {
                y[i] -= l * yv;
            }
        }
        if let Some(tail) = &self.tail {
            let b = DVector::from_iterator(tail.idx.len(), tail.idx.iter().map(|&i| y[i]));
            let x = tail.chol.solve(&b);
            for (p, &i) in tail.idx.iter().enumerate() {
                y[i] = x[p];
            }
        }
        for k in (0..self.order.len()).rev() {
            let v = self.order[k];
            let mut acc = y[v] / self.pivots[k];
            for &(i, l) in &self.cols[k] {
                acc -= l * y[i];
            }
            y[v] = acc;
        }
        y
    }

    /// Solves with `rhs` given per vertex (entries at fixed vertices are
    /// ignored); returns a per-vertex vector that is zero on fixed vertices.
    pub fn solve_full(&self, rhs: &[f64]) -> Vec<f64> {
        let local_rhs: Vec<f64> = self.free.iter().map(|&v| rhs[v]).collect();
        let x = self.solve_local(&local_rhs);
        let mut out = vec![0.0; self.local.len()];
        for (i, &v) in self.free.iter().enumerate() {
            out[v] = x[i];
        }
        out
    }
}

/// `L x` for the combinatorial Laplacian.
pub fn laplacian_apply(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.n())
        .map(|v| {
            let s: f64 = g.neighbors(v).iter().map(|&w| x[w]).sum();
            g.degree(v) as f64 * x[v] - s
        })
        .collect()
}

pub fn laplacian_dense(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut l = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in g.edges() {
        l[(u, v)] = -1.0;
        l[(v, u)] = -1.0;
        l[(u, u)] += 1.0;
        l[(v, v)] += 1.0;
    }
    l
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn center(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|v| *v -= mean);
}

fn scale_to_unit(x: &mut [f64]) {
    let nrm = norm2(x);
    x.iter_mut().for_each(|v| *v /= nrm);
}

/// A converged eigenpair of the Laplacian.
#[derive(Debug, Clone)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

/// Residual `‖L x − λ x‖₂`.
pub fn laplacian_residual(g: &Graph, value: f64, x: &[f64]) -> f64 {
    let lx = laplacian_apply(g, x);
    lx.iter()
        .zip(x)
        .map(|(a, b)| (a - value * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Smallest nonzero Laplacian eigenpair by a full dense eigensolve.
pub fn fiedler_dense(g: &Graph) -> Eigenpair {
    let eig = SymmetricEigen::new(laplacian_dense(g));
    let mut idx: Vec<usize> = (0..g.n()).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let k = idx[1];
    let mut vector: Vec<f64> = eig.eigenvectors.column(k).iter().copied().collect();
    center(&mut vector);
    scale_to_unit(&mut vector);
    let value = eig.eigenvalues[k];
    let residual = laplacian_residual(g, value, &vector);
    Eigenpair {
        value,
        vector,
        residual,
        iterations: 1,
    }
}

/// Smallest nonzero Laplacian eigenpair by Lanczos on the pseudo-inverse
/// (restricted to the complement of the constants), with full
/// reorthogonalization and explicit restarts.
///
/// `max_solves` caps the total number of pseudo-inverse applications.
pub fn fiedler_lanczos(g: &Graph, tol: f64, max_solves: usize) -> Result<Eigenpair> {
    let n = g.n();
    let ground = (0..n).max_by_key(|&v| (g.degree(v), Reverse(v))).unwrap_or(0);
    let solver = GroundedLaplacian::grounded_at(g, ground)?;
    let apply = |x: &[f64]| -> Vec<f64> {
        let mut y = solver.solve_full(x);
        center(&mut y);
        y
    };

    let basis_cap = (n - 1).clamp(1, 120);
    // deterministic start with broad spectral content
    let mut start: Vec<f64> = (0..n)
        .map(|v| {
            let t = v as f64 + 1.0;
            (t * 0.618_033_988_749_895).fract() - 0.5 + 1e-3 * (t * 1.3).sin()
        })
        .collect();
    center(&mut start);
    scale_to_unit(&mut start);

    let mut solves = 0;
    let mut best_residual = f64::INFINITY;
    loop {
        let mut q: Vec<Vec<f64>> = vec![start.clone()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        let mut candidate: Option<Eigenpair> = None;
        for j in 0..basis_cap {
            let mut w = apply(&q[j]);
            solves += 1;
            let a = dot(&w, &q[j]);
            alpha.push(a);
            // full reorthogonalization, twice for stability
            for _ in 0..2 {
                for qi in &q {
                    let c = dot(&w, qi);
                    w.iter_mut().zip(qi).for_each(|(wv, qv)| *wv -= c * qv);
                }
                center(&mut w);
            }
            let b = norm2(&w);
            let k = alpha.len();
            let exhausted = b < 1e-14 * a.abs().max(1e-300) || k == n - 1;
            if k.is_multiple_of(8) || exhausted || j + 1 == basis_cap || solves >= max_solves {
                let pair = ritz_top(g, &q, &alpha, &beta, solves);
                best_residual = best_residual.min(pair.residual);
                let done = pair.residual <= tol;
                candidate = Some(pair);
                if done {
                    return Ok(candidate.unwrap());
                }
            }
            if exhausted || solves >= max_solves {
                break;
            }
            beta.push(b);
            w.iter_mut().for_each(|v| *v /= b);
            q.push(w);
        }
        if solves >= max_solves {
            return Err(Error::NoConvergence {
                iterations: solves,
                residual: best_residual,
            });
        }
        // restart from the best Ritz vector
        let pair = candidate.expect("at least one Ritz evaluation per sweep");
        start = pair.vector;
        if q.len() == n - 1 && best_residual.is_finite() {
            // full Krylov space already explored; nothing left to gain
            return Err(Error::NoConvergence {
                iterations: solves,
                residual: best_residual,
            });
        }
    }
}

fn ritz_top(g: &Graph, q: &[Vec<f64>], alpha: &[f64], beta: &[f64], solves: usize) -> Eigenpair {
    let k = alpha.len();
    let mut t = DMatrix::<f64>::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alpha[i];
        if i + 1 < k {
            t[(i, i + 1)] = beta[i];
            t[(i + 1, i)] = beta[i];
        }
    }
    let eig = SymmetricEigen::new(t);
    let top = (0..k)
        .max_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]))
        .unwrap();
    let s = eig.eigenvectors.column(top);
    let n = g.n();
    let mut y = vec![0.0; n];
    for (i, qi) in q.iter().take(k).enumerate() {
        let c = s[i];
        y.iter_mut().zip(qi).for_each(|(yv, qv)| *yv += c * qv);
    }
    center(&mut y);
    scale_to_unit(&mut y);
    let ly = laplacian_apply(g, &y);
    let value = dot(&ly, &y);
    let residual = ly
        .iter()
        .zip(&y)
        .map(|(a, b)| (a - value * b).powi(2))
        .sum::<f64>()
        .sqrt();
    Eigenpair {
        value,
        vector: y,
        residual,
        iterations: solves,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &e).unwrap()
    }

    #[test]
    fn grounded_solve_matches_dense() {
        // wheel-like graph: cycle plus hub, dense enough to hit the tail path
        let n = 80;
        let mut e = Vec::new();
        for i in 1..n {
            e.push((0, i));
            e.push((i, if i + 1 < n { i + 1 } else { 1 }));
            if i + 7 < n {
                e.push((i, i + 7));
            }
        }
        let g = Graph::from_edge_list(n, &e).unwrap();
        let solver = GroundedLaplacian::grounded_at(&g, 5).unwrap();
        let rhs: Vec<f64> = (0..n).map(|v| ((v * 37) % 11) as f64 - 5.0).collect();
        let x = solver.solve_full(&rhs);
        let lx = laplacian_apply(&g, &x);
        for v in 0..n {
            if v != 5 {
                assert!((lx[v] - rhs[v]).abs() < 1e-10, "row {v}");
            }
        }
    }

    #[test]
    fn path_fiedler_both_routes() {
        let g = path(30);
        let exact = 2.0 * (1.0 - (std::f64::consts::PI / 30.0).cos());
        let d = fiedler_dense(&g);
        assert!((d.value - exact).abs() < 1e-12);
        let l = fiedler_lanczos(&g, 1e-10, 10_000).unwrap();
        assert!((l.value - exact).abs() < 1e-12);
        assert!(l.residual <= 1e-10);
    }

    #[test]
    fn singular_block_is_reported() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let free = [false, true, true, true];
        assert!(matches!(
            GroundedLaplacian::new(&g, &free),
            Err(Error::BadBoundary(_))
        ));
    }
}
