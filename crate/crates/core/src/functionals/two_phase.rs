//! Two-phase functions `w = a1 u^+ - a2 u^-` built from the counterexample
//! `u = x - 3yt - 2x^3`, and the jump condition across `{u = 0}`.

use super::{HeisFunctionals, Orders, Phase};
use crate::error::{domain, Error, Result};
use crate::poly::{horizontal_gradient, CompiledPoly};
use crate::{parse, Point, Poly3};

/// Bound on `|u|` for a point to count as lying on the zero level.
const ON_LEVEL_TOL: f64 = 1e-10;

/// `x - 3yt - 2x^3`.
pub fn counterexample_u() -> Poly3 {
    parse("x - 3*y*t - 2*x^3").expect("literal parses")
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoPhase {
    pub base: Poly3,
    pub alpha_pos: f64,
    pub alpha_neg: f64,
}

fn check_alphas(a1: f64, a2: f64) -> Result<()> {
    if !(a1 > 0.0 && a2 > 0.0 && a1.is_finite() && a2.is_finite()) {
        return domain(format!("phase weights must be positive, got ({a1}, {a2})"));
    }
    Ok(())
}

impl TwoPhase {
    pub fn new(base: Poly3, alpha_pos: f64, alpha_neg: f64) -> Result<Self> {
        check_alphas(alpha_pos, alpha_neg)?;
        Ok(Self { base, alpha_pos, alpha_neg })
    }

    /// `u^+ - u^- = u`.
    pub fn unit(base: Poly3) -> Self {
        Self { base, alpha_pos: 1.0, alpha_neg: 1.0 }
    }

    pub fn alpha_sq(&self, phase: Phase) -> f64 {
        match phase {
            Phase::Positive => self.alpha_pos * self.alpha_pos,
            Phase::Negative => self.alpha_neg * self.alpha_neg,
        }
    }
}

/// `g = (a1^2 - a2^2) ((1 - 6(x^2 + y^2))^2 + 9(-t + 2xy)^2)`.
pub fn jump_function(a1: f64, a2: f64, p: &Point) -> f64 {
    let xc = 1.0 - 6.0 * (p.x * p.x + p.y * p.y);
    let yc = -p.t + 2.0 * p.x * p.y;
    (a1 * a1 - a2 * a2) * (xc * xc + 9.0 * yc * yc)
}

/// Zero of `x - 3yt - 2x^3` in `x` by bisection on `[-0.4, 0.4]`, where the
/// map is increasing; `|y|, |t| <= 0.2` keeps the root inside.
fn solve_x(y: f64, t: f64) -> f64 {
    let f = |x: f64| x - 3.0 * y * t - 2.0 * x * x * x;
    let (mut lo, mut hi) = (-0.4f64, 0.4f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if f(lo).abs() <= f(hi).abs() {
        lo
    } else {
        hi
    }
}

/// `n` points of `{u = 0}` over a square grid of `(y, t)` in `[-0.2, 0.2]^2`.
pub fn free_boundary_samples(n: usize) -> Vec<Point> {
    let side = (n as f64).sqrt().ceil().max(2.0) as usize;
    let step = 0.4 / (side - 1) as f64;
    let mut out = Vec::with_capacity(n);
    'outer: for i in 0..side {
        for j in 0..side {
            if out.len() == n {
                break 'outer;
            }
            let y = -0.2 + step * i as f64;
            let t = -0.2 + step * j as f64;
            out.push(Point::new(solve_x(y, t), y, t));
        }
    }
    out
}

/// Largest `|a1^2 |grad_H u|^2 - a2^2 |grad_H u|^2 - g|` over the samples.
pub fn two_phase_residual(a1: f64, a2: f64, sample: &[Point]) -> Result<f64> {
    check_alphas(a1, a2)?;
    let u = counterexample_u();
    let uc = CompiledPoly::new(&u);
    let g2 = CompiledPoly::new(&horizontal_gradient(&u).norm_sq());
    let mut worst = 0.0f64;
    for p in sample {
        let uv = uc.eval(p.x, p.y, p.t);
        if !(uv.abs() <= ON_LEVEL_TOL) {
            return Err(Error::Precondition(format!(
                "point ({}, {}, {}) is off the zero level: u = {uv:e}",
                p.x, p.y, p.t
            )));
        }
        let grad = g2.eval(p.x, p.y, p.t);
        let res = (a1 * a1 * grad - a2 * a2 * grad - jump_function(a1, a2, p)).abs();
        worst = worst.max(res);
    }
    Ok(worst)
}

/// `|I_w(r) - ((a1^2 + a2^2)/2) I_u(r)|` for `w = a1 u^+ - a2 u^-` and the
/// counterexample `u`.
pub fn generalized_identity_check(a1: f64, a2: f64, r: f64, orders: &Orders) -> Result<f64> {
    let tp = TwoPhase::new(counterexample_u(), a1, a2)?;
    if !(r > 0.0) {
        return domain(format!("radius must be positive, got {r}"));
    }
    let ev = HeisFunctionals::new(*orders)?;
    let iw = ev.two_phase_i(&tp, r)?;
    let iu = ev.i(&tp.base, r)?;
    Ok((iw - 0.5 * (a1 * a1 + a2 * a2) * iu).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_lie_on_zero_level() {
        let s = free_boundary_samples(50);
        assert_eq!(s.len(), 50);
        let u = CompiledPoly::new(&counterexample_u());
        for p in &s {
            assert!(u.eval(p.x, p.y, p.t).abs() <= 1e-15);
        }
    }

    #[test]
    fn residual_examples() {
        let s = free_boundary_samples(50);
        assert!(two_phase_residual(2.0, 1.0, &s).unwrap() <= 1e-9);
        assert_eq!(two_phase_residual(1.0, 1.0, &s).unwrap(), 0.0);
        assert!(matches!(two_phase_residual(2.0, 1.0, &[Point::new(0.3, 0.0, 0.0)]), Err(Error::Precondition(_))));
        assert!(two_phase_residual(0.0, 1.0, &s).is_err());
    }

    #[test]
    fn rejects_nonpositive_weights() {
        assert!(TwoPhase::new(counterexample_u(), 1.0, 0.0).is_err());
        assert!(generalized_identity_check(1.0, 0.0, 0.1, &Orders::default()).is_err());
        assert!(generalized_identity_check(1.0, 1.0, 0.0, &Orders::default()).is_err());
    }
}
