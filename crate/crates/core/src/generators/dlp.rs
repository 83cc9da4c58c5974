//! Three-step model for the supercritical giant component: a degree-≥3
//! kernel, geometric subdivision of its edges, and subcritical Poisson trees
//! hanging off every vertex.

use std::collections::HashMap;

use rand_distr::{Distribution, Geometric, Normal};

use super::offspring::{poisson, OffspringDistribution};
use super::random::configuration_multigraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, MultiGraph};
use crate::rng::Rng;

/// The root `μ ∈ (0, 1)` of `μ e^{−μ} = (1+ε) e^{−(1+ε)}`, by bisection.
pub fn conjugate_mu(eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::BadParams(format!("eps must be > 0, got {eps}")));
    }
    let target = (1.0 + eps) * (-(1.0 + eps)).exp();
    let f = |x: f64| x * (-x).exp() - target;
    // f is increasing on (0, 1), negative at 0 and positive at 1
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut mid = 0.5;
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v.abs() <= 1e-15 || hi - lo < 1e-17 {
            break;
        }
        if v < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(mid)
}

/// Variance convention for the random rate `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GammaVariance {
    /// `1 / (ε N)` with `N` the ambient vertex count.
    #[default]
    PerAmbient,
    /// `1 / (ε n)` with `n = ε N` the giant-scale vertex count.
    PerGiant,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DlpParams {
    pub n_ambient: usize,
    pub eps: f64,
    pub mu: f64,
    pub gamma_variance: GammaVariance,
}

impl DlpParams {
    pub fn new(n_ambient: usize, eps: f64) -> Result<DlpParams> {
        let mu = conjugate_mu(eps)?;
        if n_ambient < 2 {
            return Err(Error::BadParams("N must be >= 2".into()));
        }
        Ok(DlpParams {
            n_ambient,
            eps,
            mu,
            gamma_variance: GammaVariance::default(),
        })
    }

    pub fn with_gamma_variance(mut self, gv: GammaVariance) -> Self {
        self.gamma_variance = gv;
        self
    }

    pub fn gamma_mean(&self) -> f64 {
        1.0 + self.eps - self.mu
    }

    pub fn gamma_var(&self) -> f64 {
        let n = self.n_ambient as f64;
        match self.gamma_variance {
            GammaVariance::PerAmbient => 1.0 / (self.eps * n),
            GammaVariance::PerGiant => 1.0 / (self.eps * self.eps * n),
        }
    }

    fn validate(&self) -> Result<()> {
        let residual = self.mu * (-self.mu).exp() - (1.0 + self.eps) * (-(1.0 + self.eps)).exp();
        if !(self.mu > 0.0 && self.mu < 1.0) || residual.abs() > 1e-12 {
            return Err(Error::BadParams(format!(
                "mu = {} is not the conjugate of 1 + {}",
                self.mu, self.eps
            )));
        }
        Ok(())
    }
}

/// One draw of the model with its intermediate structure.
#[derive(Debug, Clone)]
pub struct DlpSample {
    /// The full graph `F` (kernel, subdivisions and attached trees).
    pub graph: Graph,
    /// The kernel multigraph `H`; its vertices are `0..M` in `graph`.
    pub kernel: MultiGraph,
    /// Vertex count of the subdivided kernel `K`; these are `0..k_vertices`.
    pub k_vertices: usize,
    pub gamma: f64,
    /// Number of degree vectors drawn before the parity condition held.
    pub parity_draws: usize,
}

impl DlpSample {
    pub fn kernel_size(&self) -> usize {
        self.kernel.n()
    }
}

/// Samples the three-step model. `DegenerateKernel` means fewer than two
/// vertices reached degree 3; the caller decides whether to resample.
/// Samples beyond `2N + 64` vertices are abandoned with `TooLarge`, which
/// only happens when `εN` is tiny and the hanging trees are near-critical.
pub fn dlp_giant(params: &DlpParams, rng: &mut Rng) -> Result<DlpSample> {
    params.validate()?;
    let mean = params.gamma_mean();
    let normal = Normal::new(mean, params.gamma_var().sqrt())
        .map_err(|e| Error::BadParams(e.to_string()))?;
    let gamma = loop {
        let g = normal.sample(rng);
        if g > 0.0 {
            break g;
        }
    };

    // step 1: degrees, conditioned on an even kernel degree sum
    let mut parity_draws = 0;
    let kernel_degrees = loop {
        parity_draws += 1;
        let degs: Vec<usize> = (0..params.n_ambient)
            .map(|_| poisson(gamma, rng))
            .filter(|&d| d >= 3)
            .collect();
        if degs.iter().sum::<usize>() % 2 == 0 {
            break degs;
        }
    };
    let m_kernel = kernel_degrees.len();
    if m_kernel < 2 {
        return Err(Error::DegenerateKernel(m_kernel));
    }
    let kernel = configuration_multigraph(&kernel_degrees, rng)?;

    // step 2: subdivide with Geometric(1 - mu) lengths on {1, 2, ..}
    let geo = Geometric::new(1.0 - params.mu).map_err(|e| Error::BadParams(e.to_string()))?;
    let mut draw_len = |min: usize| loop {
        let len = 1 + geo.sample(rng) as usize;
        if len >= min {
            break len;
        }
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = m_kernel;
    let mut direct_used: HashMap<(usize, usize), bool> = HashMap::new();
    for &(u, v) in kernel.edges() {
        let len = if u == v {
            draw_len(3)
        } else {
            let used = direct_used.entry((u, v)).or_insert(false);
            let len = draw_len(if *used { 2 } else { 1 });
            if len == 1 {
                *used = true;
            }
            len
        };
        let mut prev = u;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    let k_vertices = n;
    let cap = 2 * params.n_ambient + 64;
    let too_large = |size| Error::TooLarge {
        what: "2-core model sample",
        size,
        cap,
    };
    if n > cap {
        return Err(too_large(n));
    }

    // step 3: Poisson(mu) trees on every vertex of K
    let off = OffspringDistribution::Poisson { mean: params.mu };
    for root in 0..k_vertices {
        let mut frontier = vec![root];
        while let Some(v) = frontier.pop() {
            let c = off.sample(rng);
            for _ in 0..c {
                edges.push((v, n));
                frontier.push(n);
                n += 1;
            }
            if n > cap {
                return Err(too_large(n));
            }
        }
    }

    let graph = Graph::from_edge_list(n, &edges)?;
    Ok(DlpSample {
        graph,
        kernel,
        k_vertices,
        gamma,
        parity_draws,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngSeed;

    fn bisect_oracle(eps: f64) -> f64 {
        // independent oracle: Newton from below on g(x) = ln x − x − c
        let c = (1.0 + eps).ln() - (1.0 + eps);
        let mut x = 0.01f64;
        for _ in 0..200 {
            let g = x.ln() - x - c;
            let dg = 1.0 / x - 1.0;
            x -= g / dg;
            x = x.clamp(1e-12, 1.0 - 1e-12);
        }
        x
    }

    #[test]
    fn conjugate_examples() {
        assert!(conjugate_mu(1e-6).unwrap() > 0.99);
        let m02 = conjugate_mu(0.2).unwrap();
        assert!((m02 - 0.8235).abs() < 1e-3, "{m02}");
        assert!((m02 - bisect_oracle(0.2)).abs() < 1e-9);
        let m1 = conjugate_mu(1.0).unwrap();
        assert!((m1 - 0.4064).abs() < 1e-3, "{m1}");
        assert!((m1 - bisect_oracle(1.0)).abs() < 1e-9);
        assert!(conjugate_mu(0.0).is_err());
        assert!(conjugate_mu(-1.0).is_err());
    }

    #[test]
    fn conjugate_is_decreasing_with_small_residual() {
        let mut prev = 1.0;
        for i in 1..=20 {
            let eps = 0.05 * i as f64;
            let mu = conjugate_mu(eps).unwrap();
            let r = mu * (-mu).exp() - (1.0 + eps) * (-(1.0 + eps)).exp();
            assert!(r.abs() <= 1e-12);
            assert!(mu < prev);
            prev = mu;
        }
    }

    #[test]
    fn subdivision_length_mean() {
        let mu: f64 = 0.8;
        let geo = Geometric::new(1.0 - mu).unwrap();
        let mut rng = RngSeed(9).rng();
        let reps = 100_000;
        let total: u64 = (0..reps).map(|_| 1 + geo.sample(&mut rng)).sum();
        let mean = total as f64 / reps as f64;
        assert!((mean - 5.0).abs() < 0.05, "{mean}");
    }

    #[test]
    fn sample_structure() {
        let params = DlpParams::new(20_000, 0.15).unwrap();
        let mut rng = RngSeed(10).rng();
        for _ in 0..5 {
            let s = dlp_giant(&params, &mut rng).unwrap();
            let kd = s.kernel.degrees();
            assert!(kd.iter().all(|&d| d >= 3));
            assert_eq!(kd.iter().sum::<usize>() % 2, 0);
            assert!(s.graph.check_invariants());
            // K is the first k_vertices labels and the rest are tree vertices
            assert!(s.k_vertices >= s.kernel_size());
            assert!(s.graph.n() >= s.k_vertices);
        }
    }

    #[test]
    fn rejects_bad_mu() {
        let mut p = DlpParams::new(1000, 0.1).unwrap();
        p.mu = 0.5;
        let mut rng = RngSeed(1).rng();
        assert!(matches!(dlp_giant(&p, &mut rng), Err(Error::BadParams(_))));
    }

    #[test]
    fn near_critical_is_capped() {
        let p = DlpParams::new(1000, 0.001).unwrap();
        let mut rng = RngSeed(3).rng();
        for _ in 0..5 {
            match dlp_giant(&p, &mut rng) {
                Ok(s) => assert!(s.graph.n() <= 2064),
                Err(e) => assert!(matches!(e, Error::TooLarge { .. } | Error::DegenerateKernel(_))),
            }
        }
    }
}
