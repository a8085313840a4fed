//! The Euclidean baseline in `R^3`: `I(r) = (1/r^2) int_{B_r} |grad u|^2 / |P|`
//! and its coefficients `a_k = (1/2k) int_{S^2} |grad P_k|^2`.

use std::collections::BTreeMap;

use super::{Orders, Phase, SeriesCoefficients, TwoPhase};
use crate::error::{domain, Result};
use crate::heis::GaugePoint;
use crate::poly::{euclid_gradient, CompiledPoly};
use crate::quadrature::{euclid_ball_integrate, euclid_sphere_rule, EuclidRule};
use crate::Poly3;

fn norm(p: &GaugePoint<f64>) -> f64 {
    (p.x * p.x + p.y * p.y + p.t * p.t).sqrt()
}

#[derive(Clone, Debug)]
pub struct EuclidFunctionals {
    pub orders: Orders,
    smooth: EuclidRule<f64>,
    rough: EuclidRule<f64>,
}

impl EuclidFunctionals {
    pub fn new(orders: Orders) -> Result<Self> {
        orders.validate()?;
        Ok(Self {
            orders,
            smooth: euclid_sphere_rule(orders.n_phi)?,
            rough: euclid_sphere_rule(orders.escalated().n_phi)?,
        })
    }

    pub fn sphere_rule(&self) -> &EuclidRule<f64> {
        &self.smooth
    }

    pub fn i(&self, u: &Poly3, r: f64) -> Result<f64> {
        let g = CompiledPoly::new(&euclid_gradient(u).norm_sq());
        let v = euclid_ball_integrate(|p| g.eval(p.x, p.y, p.t) / norm(p), r, self.orders.n_r, &self.smooth)?;
        Ok(v / (r * r))
    }

    pub fn two_phase_i_signed(&self, tp: &TwoPhase, phase: Phase, r: f64) -> Result<f64> {
        let u = CompiledPoly::new(&tp.base);
        let g = CompiledPoly::new(&euclid_gradient(&tp.base).norm_sq());
        let a2 = tp.alpha_sq(phase);
        let v = euclid_ball_integrate(
            |p| {
                if phase.contains(u.eval(p.x, p.y, p.t)) {
                    a2 * g.eval(p.x, p.y, p.t) / norm(p)
                } else {
                    0.0
                }
            },
            r,
            self.orders.n_r,
            &self.rough,
        )?;
        Ok(v / (r * r))
    }

    pub fn two_phase_i(&self, tp: &TwoPhase, r: f64) -> Result<f64> {
        Ok(self.two_phase_i_signed(tp, Phase::Positive, r)? + self.two_phase_i_signed(tp, Phase::Negative, r)?)
    }

    pub fn two_phase_j(&self, tp: &TwoPhase, r: f64) -> Result<f64> {
        Ok(self.two_phase_i_signed(tp, Phase::Positive, r)? * self.two_phase_i_signed(tp, Phase::Negative, r)?)
    }
}

pub fn i_euclid(u: &Poly3, r: f64, orders: &Orders) -> Result<f64> {
    EuclidFunctionals::new(*orders)?.i(u, r)
}

pub fn j_euclid(u: &Poly3, r: f64, orders: &Orders) -> Result<f64> {
    EuclidFunctionals::new(*orders)?.two_phase_j(&TwoPhase::unit(u.clone()), r)
}

fn euclid_part(u: &Poly3, k: u32) -> Poly3 {
    u.euclid_decompose().remove(&k).unwrap_or_default()
}

/// `(1/2k) int_{S^2} |grad P_k|^2` for the ordinary-degree-`k` part of `u`.
pub fn coeff_euclid(u: &Poly3, k: u32, rule: &EuclidRule<f64>) -> Result<f64> {
    if k == 0 {
        return domain("coefficient index must be at least 1");
    }
    let g = CompiledPoly::new(&euclid_gradient(&euclid_part(u, k)).norm_sq());
    Ok(rule.integrate(|p| g.eval(p.x, p.y, p.t))? / f64::from(2 * k))
}

/// `(1/(h+k)) int_{S^2} <grad P_h, grad P_k>`.
pub fn coeff_euclid_cross(u: &Poly3, h: u32, k: u32, rule: &EuclidRule<f64>) -> Result<f64> {
    if h == 0 || k == 0 || h == k {
        return domain(format!("cross coefficient needs distinct positive indices, got ({h}, {k})"));
    }
    let g = CompiledPoly::new(&euclid_gradient(&euclid_part(u, h)).dot(&euclid_gradient(&euclid_part(u, k))));
    Ok(rule.integrate(|p| g.eval(p.x, p.y, p.t))? / f64::from(h + k))
}

/// Coefficients up to `truncation` (default: total degree of `u`). For
/// harmonic `u` the cross terms vanish.
pub fn euclid_series_coefficients(
    u: &Poly3,
    truncation: Option<u32>,
    rule: &EuclidRule<f64>,
) -> Result<SeriesCoefficients> {
    let kmax = truncation.unwrap_or_else(|| u.max_total_degree().unwrap_or(0));
    let mut diag = BTreeMap::new();
    let mut cross = BTreeMap::new();
    for k in 1..=kmax {
        diag.insert(k, coeff_euclid(u, k, rule)?);
        for h in 1..k {
            cross.insert((h, k), coeff_euclid_cross(u, h, k, rule)?);
        }
    }
    Ok(SeriesCoefficients { diag, cross, truncation: kmax })
}
