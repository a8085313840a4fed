//! Sampled curves `r -> value`, their monotonicity verdicts, and a
//! least-squares fit in powers of `r^2`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{domain, Result};

/// Default tolerance on mean-normalized values.
pub const DEFAULT_TOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalCurve {
    pub name: String,
    pub expr: String,
    /// `(r, value)` with `r` strictly increasing.
    pub samples: Vec<(f64, f64)>,
}

impl FunctionalCurve {
    pub fn new(name: impl Into<String>, expr: impl Into<String>, samples: Vec<(f64, f64)>) -> Result<Self> {
        for (i, &(r, v)) in samples.iter().enumerate() {
            if !(r > 0.0) || !r.is_finite() {
                return domain(format!("radius {r} at sample {i} is not positive"));
            }
            if !v.is_finite() {
                return domain(format!("value {v} at r = {r} is not finite"));
            }
            if i > 0 && r <= samples[i - 1].0 {
                return domain(format!("radii not strictly increasing at sample {i}"));
            }
        }
        Ok(Self { name: name.into(), expr: expr.into(), samples })
    }

    pub fn radii(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.0)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotonicityKind {
    Increasing,
    Decreasing,
    Constant,
    Mixed,
}

impl fmt::Display for MonotonicityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonotonicityVerdict {
    pub kind: MonotonicityKind,
    pub window: (f64, f64),
    /// Spread for `Constant`; otherwise the largest normalized step against
    /// the overall direction (zero for a strict verdict).
    pub evidence: f64,
}

impl fmt::Display for MonotonicityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on [{}, {}], evidence {:e}", self.kind, self.window.0, self.window.1, self.evidence)
    }
}

/// Classifies a curve after dividing values by `|mean|` (or 1 if the mean
/// is zero).
pub fn classify(curve: &FunctionalCurve, tol: f64) -> Result<MonotonicityVerdict> {
    let n = curve.samples.len();
    if n < 3 {
        return domain(format!("classification needs at least 3 samples, got {n}"));
    }
    if !(tol >= 0.0) {
        return domain(format!("tolerance must be nonnegative, got {tol}"));
    }
    let window = (curve.samples[0].0, curve.samples[n - 1].0);
    let mean = curve.values().sum::<f64>() / n as f64;
    let scale = if mean == 0.0 { 1.0 } else { mean.abs() };
    let spread = curve.values().map(|v| (v - mean).abs()).fold(0.0, f64::max) / scale;
    if spread <= tol {
        return Ok(MonotonicityVerdict { kind: MonotonicityKind::Constant, window, evidence: spread });
    }
    let diffs: Vec<f64> = curve.samples.windows(2).map(|w| (w[1].1 - w[0].1) / scale).collect();
    let up = diffs.iter().all(|&d| d > tol);
    let down = diffs.iter().all(|&d| d < -tol);
    let overall = curve.samples[n - 1].1 - curve.samples[0].1;
    let against = |d: f64| if overall >= 0.0 { (-d).max(0.0) } else { d.max(0.0) };
    let evidence = diffs.iter().map(|&d| against(d)).fold(0.0, f64::max);
    let kind = if up {
        MonotonicityKind::Increasing
    } else if down {
        MonotonicityKind::Decreasing
    } else {
        MonotonicityKind::Mixed
    };
    Ok(MonotonicityVerdict { kind, window, evidence })
}

/// `count` geometrically spaced radii from `r_min` to `r_max` inclusive.
pub fn geometric_grid(r_min: f64, r_max: f64, count: usize) -> Result<Vec<f64>> {
    if !(r_min > 0.0 && r_min < r_max && r_max.is_finite()) {
        return domain(format!("grid needs 0 < r_min < r_max, got [{r_min}, {r_max}]"));
    }
    if count < 3 {
        return domain(format!("grid needs at least 3 points, got {count}"));
    }
    let ratio = (r_max / r_min).ln() / (count - 1) as f64;
    let mut g: Vec<f64> = (0..count).map(|i| r_min * (ratio * i as f64).exp()).collect();
    g[0] = r_min;
    g[count - 1] = r_max;
    Ok(g)
}

/// Evaluates `f` at every radius, in parallel, keeping grid order.
pub fn sample_curve(grid: &[f64], f: impl Fn(f64) -> Result<f64> + Sync) -> Result<Vec<(f64, f64)>> {
    grid.par_iter().map(|&r| Ok((r, f(r)?))).collect()
}

/// Least-squares coefficients `(c0, c1, c2)` of `c0 + c1 r^2 + c2 r^4`,
/// via modified Gram-Schmidt.
pub fn fit_even_quadratic(samples: &[(f64, f64)]) -> Result<[f64; 3]> {
    let m = samples.len();
    if m < 3 {
        return domain("fit needs at least 3 samples");
    }
    let mut q: Vec<Vec<f64>> = (0..3).map(|j| samples.iter().map(|&(r, _)| r.powi(2 * j)).collect()).collect();
    let mut rmat = [[0.0f64; 3]; 3];
    for j in 0..3 {
        for i in 0..j {
            let d: f64 = q[i].iter().zip(&q[j]).map(|(a, b)| a * b).sum();
            rmat[i][j] = d;
            let qi = q[i].clone();
            for (v, a) in q[j].iter_mut().zip(&qi) {
                *v -= d * a;
            }
        }
        let nrm = q[j].iter().map(|v| v * v).sum::<f64>().sqrt();
        if nrm == 0.0 {
            return domain("fit design matrix is rank deficient");
        }
        rmat[j][j] = nrm;
        q[j].iter_mut().for_each(|v| *v /= nrm);
    }
    let b: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let qtb: Vec<f64> = q.iter().map(|col| col.iter().zip(&b).map(|(a, b)| a * b).sum()).collect();
    let mut c = [0.0; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|k| rmat[i][k] * c[k]).sum();
        c[i] = (qtb[i] - s) / rmat[i][i];
    }
    Ok(c)
}
