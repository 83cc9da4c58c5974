//! Laplacian spectra and the single-card spectral gap.
//!
//! The single-card chain is `A = I − L/(2m)`, so its gap is `γ = κ/(2m)`
//! where `κ` is the algebraic connectivity. Everything here goes through the
//! Laplacian rather than `A`, whose top eigenvalues sit just below 1.

use nalgebra::DMatrix;
use rand::Rng as _;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interchange::{InterchangeOperator, MAX_EXACT_N};
use crate::linalg;
use crate::rng::Rng;

/// A real value per vertex with cached norms.
#[derive(Debug, Clone, PartialEq)]
pub struct TestVector {
    values: Vec<f64>,
    l1: f64,
    l2: f64,
}

impl TestVector {
    pub fn new(values: Vec<f64>) -> TestVector {
        let l1 = values.iter().map(|x| x.abs()).sum();
        let l2 = linalg::norm2(&values);
        TestVector { values, l1, l2 }
    }

    /// `x − mean(x)`, rescaled to unit `L²` norm.
    pub fn centered_unit(values: &[f64]) -> Result<TestVector> {
        if values.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let centered: Vec<f64> = values.iter().map(|x| x - mean).collect();
        let nrm = linalg::norm2(&centered);
        if nrm == 0.0 {
            return Err(Error::BadParams("vector is constant; cannot center and normalize".into()));
        }
        Ok(TestVector::new(centered.into_iter().map(|x| x / nrm).collect()))
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn l1_norm(&self) -> f64 {
        self.l1
    }

    pub fn l2_norm(&self) -> f64 {
        self.l2
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn is_zero_sum(&self) -> bool {
        self.sum().abs() <= 1e-10
    }

    pub fn is_normalized(&self) -> bool {
        (self.l2 - 1.0).abs() <= 1e-10
    }

    fn negated(&self) -> TestVector {
        TestVector::new(self.values.iter().map(|x| -x).collect())
    }
}

impl std::ops::Index<usize> for TestVector {
    type Output = f64;
    fn index(&self, v: usize) -> &f64 {
        &self.values[v]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Dense,
    Lanczos,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Dense => "dense",
            Method::Lanczos => "lanczos",
        })
    }
}

/// An eigenpair with its residual `‖Mξ − λξ‖₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub eigenvalue: f64,
    pub eigenvector: TestVector,
    pub residual: f64,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    /// Graphs with at most this many vertices use a dense eigensolve.
    pub dense_threshold: usize,
    pub tol: f64,
    /// Cap on pseudo-inverse applications in the iterative solver.
    pub max_iterations: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            dense_threshold: 400,
            tol: 1e-8,
            max_iterations: 1_000_000,
        }
    }
}

/// `(1/2m) Σ_{uv ∈ E} (ξ(u) − ξ(v))²`, the Dirichlet form `ξᵀ(I − A)ξ` of
/// the single-card chain.
pub fn laplacian_quadratic(g: &Graph, xi: &[f64]) -> Result<f64> {
    if xi.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: xi.len(),
        });
    }
    if g.m() == 0 {
        return Ok(0.0);
    }
    let s: f64 = g.edges().iter().map(|&(u, v)| (xi[u] - xi[v]).powi(2)).sum();
    Ok(s / (2.0 * g.m() as f64))
}

/// Algebraic connectivity `κ` and a unit, zero-sum Fiedler vector, signed so
/// that `max ξ ≥ −min ξ`.
pub fn fiedler(g: &Graph) -> Result<SpectralResult> {
    fiedler_with(g, &SpectralOptions::default())
}

pub fn fiedler_with(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult> {
    if g.n() < 2 {
        return Err(Error::BadParams("Fiedler vector needs n >= 2".into()));
    }
    g.require_connected()?;
    let (pair, method) = if g.n() <= opts.dense_threshold {
        (linalg::fiedler_dense(g), Method::Dense)
    } else {
        (
            linalg::fiedler_lanczos(g, opts.tol, opts.max_iterations)?,
            Method::Lanczos,
        )
    };
    if pair.residual > opts.tol {
        return Err(Error::NoConvergence {
            iterations: pair.iterations,
            residual: pair.residual,
        });
    }
    let mut xi = TestVector::new(pair.vector);
    if needs_flip(xi.values()) {
        xi = xi.negated();
    }
    Ok(SpectralResult {
        eigenvalue: pair.value,
        eigenvector: xi,
        residual: pair.residual,
        method,
    })
}

fn needs_flip(x: &[f64]) -> bool {
    let max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = x.iter().copied().fold(f64::INFINITY, f64::min);
    if (max + min).abs() > 1e-12 {
        return max < -min;
    }
    // symmetric range: make the first clearly nonzero entry positive
    x.iter().find(|v| v.abs() > 1e-12).is_some_and(|&v| v < 0.0)
}

/// `γ = κ/(2m)`.
pub fn single_card_gap(g: &Graph) -> Result<f64> {
    single_card_gap_with(g, &SpectralOptions::default())
}

pub fn single_card_gap_with(g: &Graph, opts: &SpectralOptions) -> Result<f64> {
    let r = fiedler_with(g, opts)?;
    Ok(r.eigenvalue / (2.0 * g.m() as f64))
}

/// `‖ξ‖₁` and the exponent `a = ln ‖ξ‖₁ / ln n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Report {
    pub l1: f64,
    pub exponent: f64,
}

pub fn l1_report(xi: &TestVector) -> L1Report {
    let n = xi.len() as f64;
    let exponent = if xi.len() >= 2 { xi.l1_norm().ln() / n.ln() } else { f64::NAN };
    L1Report {
        l1: xi.l1_norm(),
        exponent,
    }
}

/// Checks the variational characterization of `γ` on `trials` random
/// zero-sum unit vectors, and that the Fiedler vector attains it.
pub fn extremal_gap_check(g: &Graph, trials: usize, rng: &mut Rng) -> Result<bool> {
    let f = fiedler(g)?;
    let gamma = f.eigenvalue / (2.0 * g.m() as f64);
    let at_fiedler = laplacian_quadratic(g, f.eigenvector.values())?;
    if (at_fiedler - gamma).abs() > 1e-8 {
        return Ok(false);
    }
    for _ in 0..trials {
        let raw: Vec<f64> = (0..g.n()).map(|_| rng.sample(StandardNormal)).collect();
        let Ok(xi) = TestVector::centered_unit(&raw) else {
            continue;
        };
        if laplacian_quadratic(g, xi.values())? < gamma - 1e-10 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest deck for which the full interchange operator is diagonalized.
pub const MAX_GAP_EXACT_N: usize = 6;

/// Spectral gap of the interchange walk on `S_n`, from a dense eigensolve
/// of its `n! × n!` transition matrix.
pub fn interchange_gap_exact(g: &Graph) -> Result<f64> {
    if g.n() > MAX_GAP_EXACT_N {
        return Err(Error::TooLarge {
            what: "deck for exact interchange spectrum",
            size: g.n(),
            cap: MAX_GAP_EXACT_N,
        });
    }
    const { assert!(MAX_GAP_EXACT_N <= MAX_EXACT_N) };
    if g.n() < 2 {
        return Err(Error::BadParams("need n >= 2".into()));
    }
    let op = InterchangeOperator::new(g)?;
    let k = op.states();
    let w = 1.0 / (2.0 * op.m() as f64);
    let mut p = DMatrix::<f64>::zeros(k, k);
    for s in 0..k {
        p[(s, s)] += 0.5;
        for e in 0..op.m() {
            p[(s, op.neighbor(s, e))] += w;
        }
    }
    let mut eig: Vec<f64> = p.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(|a, b| b.total_cmp(a));
    Ok(1.0 - eig[1])
}
