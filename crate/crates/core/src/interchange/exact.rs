//! Exact evolution of the deck law over all of `S_n` for small decks.

use super::lehmer::{factorial, index_perm, perm_index_unchecked};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest deck for which the full law is tracked.
pub const MAX_EXACT_N: usize = 8;

/// A probability vector over `S_n`, indexed by the Lehmer code of the
/// `card_at` sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct PermDistribution {
    n: usize,
    probs: Vec<f64>,
}

impl PermDistribution {
    pub fn point_mass_identity(n: usize) -> PermDistribution {
        let mut probs = vec![0.0; factorial(n)];
        probs[0] = 1.0;
        PermDistribution { n, probs }
    }

    pub fn uniform(n: usize) -> PermDistribution {
        let k = factorial(n);
        PermDistribution {
            n,
            probs: vec![1.0 / k as f64; k],
        }
    }

    pub fn from_probs(n: usize, probs: Vec<f64>) -> Result<PermDistribution> {
        if probs.len() != factorial(n) {
            return Err(Error::DimensionMismatch {
                expected: factorial(n),
                got: probs.len(),
            });
        }
        let s: f64 = probs.iter().sum();
        if probs.iter().any(|&p| p < 0.0) || (s - 1.0).abs() > 1e-12 {
            return Err(Error::BadParams(format!("not a probability vector (sum {s})")));
        }
        Ok(PermDistribution { n, probs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, index: usize) -> f64 {
        self.probs[index]
    }

    /// `½ Σ |p − q|`.
    pub fn tv_distance(&self, other: &PermDistribution) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(0.5 * self.probs.iter().zip(&other.probs).map(|(a, b)| (a - b).abs()).sum::<f64>())
    }

    /// Total variation distance to the uniform law.
    pub fn tv_to_uniform(&self) -> f64 {
        let u = 1.0 / self.probs.len() as f64;
        0.5 * self.probs.iter().map(|p| (p - u).abs()).sum::<f64>()
    }

    /// `L²(π)` distance to uniform: `sqrt(n! Σ (p − 1/n!)²)`.
    pub fn l2_distance(&self) -> f64 {
        let k = self.probs.len() as f64;
        let u = 1.0 / k;
        (k * self.probs.iter().map(|p| (p - u).powi(2)).sum::<f64>()).sqrt()
    }

    /// Expectation of `f(card_at)` under the law.
    pub fn expect<F: FnMut(&[usize]) -> f64>(&self, mut f: F) -> f64 {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != 0.0)
            .map(|(i, &p)| p * f(&index_perm(i, self.n).expect("index in range")))
            .sum()
    }
}

/// Transition operator of the interchange walk on `S_n`: identity with
/// probability ½, each edge transposition with probability `1/(2m)`.
#[derive(Debug, Clone)]
pub struct InterchangeOperator {
    n: usize,
    m: usize,
    /// `neighbor[s * m + e]`: state reached from `s` by swapping across edge `e`
    neighbor: Vec<u32>,
}

impl InterchangeOperator {
    pub fn new(g: &Graph) -> Result<InterchangeOperator> {
        let n = g.n();
        if n > MAX_EXACT_N {
            return Err(Error::TooLarge {
                what: "deck for exact evolution",
                size: n,
                cap: MAX_EXACT_N,
            });
        }
        g.require_connected()?;
        let states = factorial(n);
        let m = g.m();
        let mut neighbor = Vec::with_capacity(states * m);
        for s in 0..states {
            let mut perm = index_perm(s, n)?;
            for &(u, v) in g.edges() {
                perm.swap(u, v);
                neighbor.push(perm_index_unchecked(&perm) as u32);
                perm.swap(u, v);
            }
        }
        Ok(InterchangeOperator { n, m, neighbor })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> usize {
        factorial(self.n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Index of the state reached from `state` by swapping across edge `e`.
    pub fn neighbor(&self, state: usize, e: usize) -> usize {
        self.neighbor[state * self.m + e] as usize
    }

    /// One step of the law. The operator is symmetric, so pushing mass
    /// forward equals pulling it from neighbors.
    pub fn apply(&self, p: &[f64], out: &mut [f64]) {
        if self.m == 0 {
            out.copy_from_slice(p);
            return;
        }
        let w = 1.0 / (2.0 * self.m as f64);
        for (s, o) in out.iter_mut().enumerate() {
            let row = &self.neighbor[s * self.m..(s + 1) * self.m];
            let acc: f64 = row.iter().map(|&t| p[t as usize]).sum();
            *o = 0.5 * p[s] + w * acc;
        }
    }
}

/// Step-by-step exact evolution from the identity deck.
#[derive(Debug, Clone)]
pub struct ExactEvolution {
    op: InterchangeOperator,
    t: usize,
    current: Vec<f64>,
    scratch: Vec<f64>,
}

impl ExactEvolution {
    pub fn new(g: &Graph) -> Result<ExactEvolution> {
        let op = InterchangeOperator::new(g)?;
        let mut current = vec![0.0; op.states()];
        current[0] = 1.0;
        let scratch = current.clone();
        Ok(ExactEvolution {
            op,
            t: 0,
            current,
            scratch,
        })
    }

    pub fn time(&self) -> usize {
        self.t
    }

    pub fn step(&mut self) {
        self.op.apply(&self.current, &mut self.scratch);
        std::mem::swap(&mut self.current, &mut self.scratch);
        self.t += 1;
    }

    pub fn advance_to(&mut self, t: usize) {
        while self.t < t {
            self.step();
        }
    }

    pub fn distribution(&self) -> PermDistribution {
        PermDistribution {
            n: self.op.n,
            probs: self.current.clone(),
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.current
    }

    pub fn tv_to_uniform(&self) -> f64 {
        let u = 1.0 / self.current.len() as f64;
        0.5 * self.current.iter().map(|p| (p - u).abs()).sum::<f64>()
    }

    pub fn l2_distance(&self) -> f64 {
        let k = self.current.len() as f64;
        let u = 1.0 / k;
        (k * self.current.iter().map(|p| (p - u).powi(2)).sum::<f64>()).sqrt()
    }
}

/// Law of the deck after `t` steps from the identity.
pub fn evolve_exact(g: &Graph, t: usize) -> Result<PermDistribution> {
    let mut ev = ExactEvolution::new(g)?;
    ev.advance_to(t);
    Ok(ev.distribution())
}

/// Exact `τ_mix` (TV ≤ ¼) and `τ̂` (L² ≤ ½) with both distance curves.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingReport {
    pub tau_mix: usize,
    pub tau_l2: usize,
    /// `(t, tv, l2)` for `t = 0..=tau_l2`.
    pub curve: Vec<(usize, f64, f64)>,
    /// Both curves were non-increasing (up to 1e-12).
    pub monotone: bool,
}

pub const TV_THRESHOLD: f64 = 0.25;
pub const L2_THRESHOLD: f64 = 0.5;

pub fn exact_mixing_times(g: &Graph) -> Result<MixingReport> {
    let mut ev = ExactEvolution::new(g)?;
    let mut curve = Vec::new();
    let mut tau_mix = None;
    let mut monotone = true;
    loop {
        let (tv, l2) = (ev.tv_to_uniform(), ev.l2_distance());
        if let Some(&(_, ptv, pl2)) = curve.last() {
            if tv > ptv + 1e-12 || l2 > pl2 + 1e-12 {
                monotone = false;
            }
        }
        curve.push((ev.time(), tv, l2));
        if tau_mix.is_none() && tv <= TV_THRESHOLD {
            tau_mix = Some(ev.time());
        }
        if l2 <= L2_THRESHOLD {
            let tau_l2 = ev.time();
            let tau_mix = tau_mix.unwrap_or(tau_l2);
            debug_assert!(monotone, "distance curves must not increase");
            return Ok(MixingReport {
                tau_mix,
                tau_l2,
                curve,
                monotone,
            });
        }
        ev.step();
    }
}
