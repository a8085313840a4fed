//! `I`, `J` and `J_beta` on gauge balls and the coefficients of the series
//! `I(r) = sum_k a_k r^(2(k-1)) + 2 sum_{h<k} a_{h,k} r^(h+k-2)`.

use std::collections::BTreeMap;

use super::{Orders, Phase, TwoPhase};
use crate::error::{domain, Result};
use crate::heis::GaugePoint;
use crate::poly::{horizontal_gradient, q_poly, t_poly, CompiledPoly};
use crate::quadrature::{koranyi_ball_integrate, koranyi_sphere_rule, SphereRule};
use crate::Poly3;

/// `N(p)^2 = sqrt((x^2 + y^2)^2 + t^2)`.
fn gauge_sq(p: &GaugePoint<f64>) -> f64 {
    (p.x * p.x + p.y * p.y).hypot(p.t)
}

pub(crate) struct Prepared {
    pub u: CompiledPoly<f64>,
    pub grad_sq: CompiledPoly<f64>,
}

impl Prepared {
    pub fn heis(u: &Poly3) -> Self {
        Self { u: CompiledPoly::new(u), grad_sq: CompiledPoly::new(&horizontal_gradient(u).norm_sq()) }
    }
}

/// Evaluator holding the sphere rules for one set of orders.
#[derive(Clone, Debug)]
pub struct HeisFunctionals {
    pub orders: Orders,
    smooth: SphereRule<f64>,
    rough: SphereRule<f64>,
}

impl HeisFunctionals {
    pub fn new(orders: Orders) -> Result<Self> {
        orders.validate()?;
        let e = orders.escalated();
        Ok(Self {
            orders,
            smooth: koranyi_sphere_rule(orders.n_phi, orders.n_theta)?,
            rough: koranyi_sphere_rule(e.n_phi, e.n_theta)?,
        })
    }

    pub fn sphere_rule(&self) -> &SphereRule<f64> {
        &self.smooth
    }

    /// `(1/r^2) int_{B_r} |grad_H u|^2 / N^2`.
    pub fn i(&self, u: &Poly3, r: f64) -> Result<f64> {
        let p = Prepared::heis(u);
        let v =
            koranyi_ball_integrate(|q| p.grad_sq.eval(q.x, q.y, q.t) / gauge_sq(q), r, self.orders.n_r, &self.smooth)?;
        Ok(v / (r * r))
    }

    pub fn i_signed(&self, u: &Poly3, phase: Phase, r: f64) -> Result<f64> {
        self.two_phase_i_signed(&TwoPhase::unit(u.clone()), phase, r)
    }

    pub fn j(&self, u: &Poly3, r: f64) -> Result<f64> {
        self.two_phase_j(&TwoPhase::unit(u.clone()), r)
    }

    pub fn j_direct(&self, u: &Poly3, r: f64) -> Result<f64> {
        self.two_phase_j_direct(&TwoPhase::unit(u.clone()), r)
    }

    pub fn j_beta(&self, u: &Poly3, beta: f64, r: f64) -> Result<f64> {
        self.two_phase_j_beta(&TwoPhase::unit(u.clone()), beta, r)
    }

    /// Unnormalized `int_{B_r} |grad_H w|^2 / N^2` over one phase of
    /// `w = a1 u^+ - a2 u^-`.
    fn phase_integral(&self, tp: &TwoPhase, phase: Phase, r: f64, n_r: usize) -> Result<f64> {
        let p = Prepared::heis(&tp.base);
        let a2 = tp.alpha_sq(phase);
        koranyi_ball_integrate(
            |q| {
                if phase.contains(p.u.eval(q.x, q.y, q.t)) {
                    a2 * p.grad_sq.eval(q.x, q.y, q.t) / gauge_sq(q)
                } else {
                    0.0
                }
            },
            r,
            n_r,
            &self.rough,
        )
    }

    pub fn two_phase_i_signed(&self, tp: &TwoPhase, phase: Phase, r: f64) -> Result<f64> {
        Ok(self.phase_integral(tp, phase, r, self.orders.n_r)? / (r * r))
    }

    /// `I` of `a1 u^+ - a2 u^-`, integrated in one pass.
    pub fn two_phase_i(&self, tp: &TwoPhase, r: f64) -> Result<f64> {
        let p = Prepared::heis(&tp.base);
        let (ap, an) = (tp.alpha_sq(Phase::Positive), tp.alpha_sq(Phase::Negative));
        let v = koranyi_ball_integrate(
            |q| {
                let u = p.u.eval(q.x, q.y, q.t);
                let w = if Phase::Positive.contains(u) {
                    ap
                } else if Phase::Negative.contains(u) {
                    an
                } else {
                    0.0
                };
                w * p.grad_sq.eval(q.x, q.y, q.t) / gauge_sq(q)
            },
            r,
            self.orders.n_r,
            &self.rough,
        )?;
        Ok(v / (r * r))
    }

    /// `J = I^+ I^-`.
    pub fn two_phase_j(&self, tp: &TwoPhase, r: f64) -> Result<f64> {
        Ok(self.two_phase_i_signed(tp, Phase::Positive, r)? * self.two_phase_i_signed(tp, Phase::Negative, r)?)
    }

    /// `(1/r^4) int_{B_r} ... int_{B_r} ...` with the radial order raised
    /// by the indicator factor, as an independent cross-check of
    /// [`Self::two_phase_j`].
    pub fn two_phase_j_direct(&self, tp: &TwoPhase, r: f64) -> Result<f64> {
        let n_r = self.orders.n_r * self.orders.indicator_factor;
        let pos = self.phase_integral(tp, Phase::Positive, r, n_r)?;
        let neg = self.phase_integral(tp, Phase::Negative, r, n_r)?;
        Ok(pos * neg / r.powi(4))
    }

    /// `J_beta = r^(4 - beta) J`.
    pub fn two_phase_j_beta(&self, tp: &TwoPhase, beta: f64, r: f64) -> Result<f64> {
        if !(beta > 0.0) || !beta.is_finite() {
            return domain(format!("beta must be positive, got {beta}"));
        }
        Ok(r.powf(4.0 - beta) * self.two_phase_j(tp, r)?)
    }
}

pub fn i_heis(u: &Poly3, r: f64, orders: &Orders) -> Result<f64> {
    HeisFunctionals::new(*orders)?.i(u, r)
}

pub fn i_heis_signed(u: &Poly3, phase: Phase, r: f64, orders: &Orders) -> Result<f64> {
    HeisFunctionals::new(*orders)?.i_signed(u, phase, r)
}

pub fn j_heis(u: &Poly3, r: f64, orders: &Orders) -> Result<f64> {
    HeisFunctionals::new(*orders)?.j(u, r)
}

pub fn j_beta_heis(u: &Poly3, beta: f64, r: f64, orders: &Orders) -> Result<f64> {
    HeisFunctionals::new(*orders)?.j_beta(u, beta, r)
}

/// `a_k = (1/2k) int Q_k / rho dsigma`, with `Q_k = |grad_H P_k|^2` for the
/// degree-`k` part `P_k` of `u`.
pub fn coeff_diag(u: &Poly3, k: u32, rule: &SphereRule<f64>) -> Result<f64> {
    if k == 0 {
        return domain("coefficient index must be at least 1");
    }
    let q = CompiledPoly::new(&q_poly(&u.h_part(k))?);
    Ok(rule.integrate_flat(|p| q.eval(p.x, p.y, p.t))? / f64::from(2 * k))
}

/// `a_{h,k} = (1/(h+k)) int T_{h,k} / rho dsigma`, symmetric in `(h, k)`.
pub fn coeff_cross(u: &Poly3, h: u32, k: u32, rule: &SphereRule<f64>) -> Result<f64> {
    if h == 0 || k == 0 {
        return domain("coefficient indices must be at least 1");
    }
    if h == k {
        return domain(format!("cross coefficient needs h != k, got h = k = {h}"));
    }
    let (h, k) = (h.min(k), h.max(k));
    let tp = CompiledPoly::new(&t_poly(&u.h_part(h), &u.h_part(k))?);
    Ok(rule.integrate_flat(|p| tp.eval(p.x, p.y, p.t))? / f64::from(h + k))
}

/// Diagonal and cross coefficients up to degree `truncation`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SeriesCoefficients {
    pub diag: BTreeMap<u32, f64>,
    /// Keyed by `(h, k)` with `h < k`.
    pub cross: BTreeMap<(u32, u32), f64>,
    pub truncation: u32,
}

impl SeriesCoefficients {
    pub fn diag(&self, k: u32) -> f64 {
        self.diag.get(&k).copied().unwrap_or(0.0)
    }

    pub fn cross(&self, h: u32, k: u32) -> f64 {
        self.cross.get(&(h.min(k), h.max(k))).copied().unwrap_or(0.0)
    }
}

/// All coefficients with indices up to `truncation`, which defaults to the
/// top Heisenberg degree of `u`.
pub fn series_coefficients(u: &Poly3, truncation: Option<u32>, rule: &SphereRule<f64>) -> Result<SeriesCoefficients> {
    let kmax = truncation.unwrap_or_else(|| u.max_heisenberg_degree().unwrap_or(0));
    let mut out = SeriesCoefficients { truncation: kmax, ..Default::default() };
    for k in 1..=kmax {
        out.diag.insert(k, coeff_diag(u, k, rule)?);
        for h in 1..k {
            out.cross.insert((h, k), coeff_cross(u, h, k, rule)?);
        }
    }
    Ok(out)
}

/// `sum_k a_k r^(2(k-1)) + 2 sum_{h<k} a_{h,k} r^(h+k-2)`.
pub fn series_i(c: &SeriesCoefficients, r: f64) -> f64 {
    let mut acc = 0.0;
    for (&k, &a) in &c.diag {
        acc += a * r.powi(2 * (k as i32 - 1));
    }
    for (&(h, k), &a) in &c.cross {
        acc += 2.0 * a * r.powi(h as i32 + k as i32 - 2);
    }
    acc
}
