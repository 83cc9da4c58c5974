use rand::Rng as _;
use rand_distr::{Binomial, Distribution, Geometric, Poisson};

use crate::error::{Error, Result};
use crate::rng::Rng;

/// Child-count law of a Galton-Watson process.
#[derive(Debug, Clone, PartialEq)]
pub enum OffspringDistribution {
    Poisson { mean: f64 },
    /// Failures before the first success, support `{0, 1, ..}`.
    Geometric { p: f64 },
    Binomial { k: u64, p: f64 },
    /// `probs[j]` is the probability of `j` children.
    Explicit(Vec<f64>),
}

impl OffspringDistribution {
    pub fn poisson(mean: f64) -> Result<Self> {
        let d = OffspringDistribution::Poisson { mean };
        d.validate()?;
        Ok(d)
    }

    pub fn explicit(probs: Vec<f64>) -> Result<Self> {
        let d = OffspringDistribution::Explicit(probs);
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            OffspringDistribution::Poisson { mean } if !(*mean > 0.0 && mean.is_finite()) => {
                Err(Error::BadParams(format!("Poisson mean must be > 0, got {mean}")))
            }
            OffspringDistribution::Geometric { p } | OffspringDistribution::Binomial { p, .. }
                if !(*p > 0.0 && *p <= 1.0) =>
            {
                Err(Error::BadParams(format!("success probability must be in (0, 1], got {p}")))
            }
            OffspringDistribution::Explicit(probs) => {
                if probs.is_empty() || probs.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
                    return Err(Error::BadParams("explicit law needs entries in [0, 1]".into()));
                }
                let s: f64 = probs.iter().sum();
                if (s - 1.0).abs() > 1e-12 {
                    return Err(Error::BadParams(format!("explicit law sums to {s}, not 1")));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn mean(&self) -> f64 {
        match self {
            OffspringDistribution::Poisson { mean } => *mean,
            OffspringDistribution::Geometric { p } => (1.0 - p) / p,
            OffspringDistribution::Binomial { k, p } => *k as f64 * p,
            OffspringDistribution::Explicit(probs) => {
                probs.iter().enumerate().map(|(j, q)| j as f64 * q).sum()
            }
        }
    }

    pub fn variance(&self) -> f64 {
        match self {
            OffspringDistribution::Poisson { mean } => *mean,
            OffspringDistribution::Geometric { p } => (1.0 - p) / (p * p),
            OffspringDistribution::Binomial { k, p } => *k as f64 * p * (1.0 - p),
            OffspringDistribution::Explicit(probs) => {
                let m = self.mean();
                probs
                    .iter()
                    .enumerate()
                    .map(|(j, q)| (j as f64 - m).powi(2) * q)
                    .sum()
            }
        }
    }

    /// Probability generating function `E[s^X]`.
    pub fn pgf(&self, s: f64) -> f64 {
        match self {
            OffspringDistribution::Poisson { mean } => (mean * (s - 1.0)).exp(),
            OffspringDistribution::Geometric { p } => p / (1.0 - (1.0 - p) * s),
            OffspringDistribution::Binomial { k, p } => (1.0 - p + p * s).powi(*k as i32),
            OffspringDistribution::Explicit(probs) => {
                probs.iter().rev().fold(0.0, |acc, q| acc * s + q)
            }
        }
    }

    pub fn sample(&self, rng: &mut Rng) -> usize {
        match self {
            OffspringDistribution::Poisson { mean } => poisson(*mean, rng),
            OffspringDistribution::Geometric { p } => {
                Geometric::new(*p).expect("validated").sample(rng) as usize
            }
            OffspringDistribution::Binomial { k, p } => {
                Binomial::new(*k, *p).expect("validated").sample(rng) as usize
            }
            OffspringDistribution::Explicit(probs) => {
                let u: f64 = rng.random();
                let mut acc = 0.0;
                for (j, q) in probs.iter().enumerate() {
                    acc += q;
                    if u < acc {
                        return j;
                    }
                }
                probs.iter().rposition(|&q| q > 0.0).unwrap_or(0)
            }
        }
    }
}

/// Poisson draw that tolerates a zero rate.
pub(crate) fn poisson(rate: f64, rng: &mut Rng) -> usize {
    if rate <= 0.0 {
        return 0;
    }
    Poisson::new(rate).expect("positive rate").sample(rng) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments() {
        let g = OffspringDistribution::Geometric { p: 0.25 };
        assert!((g.mean() - 3.0).abs() < 1e-12);
        let e = OffspringDistribution::explicit(vec![0.25, 0.5, 0.25]).unwrap();
        assert!((e.mean() - 1.0).abs() < 1e-12);
        assert!((e.variance() - 0.5).abs() < 1e-12);
        assert!((e.pgf(1.0) - 1.0).abs() < 1e-12);
        assert!((e.pgf(0.0) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_laws() {
        assert!(OffspringDistribution::explicit(vec![0.5, 0.4]).is_err());
        assert!(OffspringDistribution::poisson(0.0).is_err());
        assert!(OffspringDistribution::Geometric { p: 0.0 }.validate().is_err());
        assert!(OffspringDistribution::Binomial { k: 3, p: 1.5 }.validate().is_err());
    }
}
