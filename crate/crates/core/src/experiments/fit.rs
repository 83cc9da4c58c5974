//! Log-log least squares for scaling exponents.

use std::collections::BTreeMap;

use super::run::Row;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points: usize,
}

fn geometric_mean(xs: &[f64]) -> f64 {
    (xs.iter().map(|x| x.ln()).sum::<f64>() / xs.len() as f64).exp()
}

/// Fits `ln y = intercept + slope · ln x`. Points sharing an `x` are first
/// merged by geometric mean of `y`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<FitResult> {
    let mut groups: BTreeMap<u64, (f64, Vec<f64>)> = BTreeMap::new();
    for &(x, y) in points {
        groups.entry(x.to_bits()).or_insert((x, Vec::new())).1.push(y);
    }
    let merged: Vec<(f64, f64)> = groups.into_values().map(|(x, ys)| (x, geometric_mean(&ys))).collect();
    fit_loglog(&merged)
}

/// Fits over groups of `(x, y)` samples, each group reduced to the geometric
/// means of its `x` and `y`. Used when `x` itself is random.
pub fn fit_groups(groups: &[Vec<(f64, f64)>]) -> Result<FitResult> {
    let merged: Vec<(f64, f64)> = groups
        .iter()
        .filter(|g| !g.is_empty())
        .map(|g| {
            let xs: Vec<f64> = g.iter().map(|p| p.0).collect();
            let ys: Vec<f64> = g.iter().map(|p| p.1).collect();
            (geometric_mean(&xs), geometric_mean(&ys))
        })
        .collect();
    fit_loglog(&merged)
}

/// Fit of `value` against `n` over successful rows for `quantity`, one
/// group per config size.
pub fn fit_rows(rows: &[Row], quantity: &str) -> Result<FitResult> {
    let mut groups: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows {
        if let (Some(n), Some(v), true) = (r.n, r.value, r.quantity == quantity) {
            groups.entry(r.size).or_default().push((n as f64, v));
        }
    }
    fit_groups(&groups.into_values().collect::<Vec<_>>())
}

fn fit_loglog(points: &[(f64, f64)]) -> Result<FitResult> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints(points.len()));
    }
    if points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::BadParams("log-log fit needs positive data".into()));
    }
    let k = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ly.iter().map(|y| (y - my).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::TooFewPoints(1));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(FitResult {
        slope,
        intercept,
        r2,
        points: points.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngSeed;
    use rand::Rng as _;

    #[test]
    fn exact_power() {
        let pts: Vec<(f64, f64)> = (1..8).map(|i| (i as f64 * 10.0, (i as f64 * 10.0).powi(2))).collect();
        let f = fit_exponent(&pts).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-9);
        assert!((f.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn noisy_power() {
        let mut rng = RngSeed(9).rng();
        let mut pts = Vec::new();
        for x in [64.0f64, 128.0, 256.0, 512.0, 1024.0] {
            for _ in 0..10 {
                let noise = 1.0 + 0.05 * (2.0 * rng.random::<f64>() - 1.0);
                pts.push((x, x.powf(2.5) * noise));
            }
        }
        assert!((fit_exponent(&pts).unwrap().slope - 2.5).abs() < 0.1);
    }

    #[test]
    fn constant_and_scaling() {
        let pts = [(1.0, 5.0), (2.0, 5.0), (4.0, 5.0)];
        assert!(fit_exponent(&pts).unwrap().slope.abs() < 1e-12);
        let base = [(3.0, 2.0), (7.0, 9.5), (20.0, 61.0), (33.0, 140.0)];
        let scaled: Vec<_> = base.iter().map(|&(x, y)| (x, 17.0 * y)).collect();
        let (a, b) = (fit_exponent(&base).unwrap(), fit_exponent(&scaled).unwrap());
        assert!((a.slope - b.slope).abs() < 1e-12);
    }

    #[test]
    fn too_few() {
        assert_eq!(fit_exponent(&[(1.0, 1.0), (2.0, 4.0)]), Err(Error::TooFewPoints(2)));
        assert_eq!(
            fit_exponent(&[(1.0, 1.0), (1.0, 2.0), (2.0, 4.0)]),
            Err(Error::TooFewPoints(2))
        );
    }
}
