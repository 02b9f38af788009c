//! Small statistics toolbox: moments, nearest-rank quantiles, ordinary least
//! squares, and a two-sample Kolmogorov-Smirnov distance.

use crate::{Error, Result};

/// Sample mean. Empty input yields NaN.
pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample standard deviation (n−1 denominator); 0 for fewer than two samples.
pub fn std_dev(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>();
    (ss / (xs.len() - 1) as f64).sqrt()
}

/// Standard error of the mean.
pub fn std_error(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    std_dev(xs) / (xs.len() as f64).sqrt()
}

/// Empirical quantile by the nearest-rank rule: the k-th smallest value with
/// k = ceil(q·n), for q in (0, 1].
pub fn quantile_nearest_rank(xs: &[f64], q: f64) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::InvalidArgument("quantile of empty sample".into()));
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::InvalidArgument(format!("quantile level {q}")));
    }
    let mut sorted = xs.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let k = (q * sorted.len() as f64).ceil() as usize;
    Ok(sorted[k.max(1) - 1])
}

/// Ordinary least squares fit of `y = intercept + slope·x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn ols_fit(xs: &[f64], ys: &[f64]) -> Result<LinearFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "ols_fit needs two or more paired points, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let xm = mean(xs);
    let ym = mean(ys);
    let sxx = xs.iter().map(|x| (x - xm) * (x - xm)).sum::<f64>();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument(
            "degenerate (constant) predictor".into(),
        ));
    }
    let sxy = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (x - xm) * (y - ym))
        .sum::<f64>();
    let slope = sxy / sxx;
    let intercept = ym - slope * xm;
    let ss_tot = ys.iter().map(|y| (y - ym) * (y - ym)).sum::<f64>();
    let ss_res = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum::<f64>();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok(LinearFit {
        slope,
        intercept,
        r_squared,
    })
}

/// Two-sample Kolmogorov-Smirnov statistic: sup |F̂₁ − F̂₂|.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            i += 1;
        } else {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantile_nearest_rank_rule() {
        // 1..=100 at the 0.95 level picks the 95th order statistic.
        let xs: Vec<f64> = (1..=100).map(|x| x as f64).collect();
        assert_eq!(quantile_nearest_rank(&xs, 0.95).unwrap(), 95.0);
        assert_eq!(quantile_nearest_rank(&xs, 1.0).unwrap(), 100.0);
        assert_eq!(quantile_nearest_rank(&[3.0, 3.0, 3.0], 0.9).unwrap(), 3.0);
    }

    #[test]
    fn ols_recovers_exact_line() {
        let xs: Vec<f64> = (1..=10).map(|n| (n as f64).ln()).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x + 1.0).collect();
        let fit = ols_fit(&xs, &ys).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!((fit.intercept - 1.0).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ols_rejects_constant_predictor() {
        let xs = [1.0, 1.0, 1.0];
        let ys = [1.0, 2.0, 3.0];
        assert!(ols_fit(&xs, &ys).is_err());
    }

    #[test]
    fn ks_detects_shift() {
        let a: Vec<f64> = (0..1000).map(|i| i as f64 / 1000.0).collect();
        let b: Vec<f64> = a.iter().map(|x| x + 0.5).collect();
        assert!(ks_statistic(&a, &a) < 1e-12);
        assert!(ks_statistic(&a, &b) > 0.45);
    }
}
