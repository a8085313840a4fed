//! Monotonicity functionals in `H^1` and in `R^3`, their series
//! coefficients, and monotonicity classification of sampled curves.

mod euclid;
mod heis;
mod monotonicity;
mod two_phase;

pub use euclid::{coeff_euclid, coeff_euclid_cross, euclid_series_coefficients, i_euclid, j_euclid, EuclidFunctionals};
pub use heis::{
    coeff_cross, coeff_diag, i_heis, i_heis_signed, j_beta_heis, j_heis, series_coefficients, series_i,
    HeisFunctionals, SeriesCoefficients,
};
pub use monotonicity::{
    classify, fit_even_quadratic, geometric_grid, sample_curve, FunctionalCurve, MonotonicityKind, MonotonicityVerdict,
    DEFAULT_TOL,
};
pub use two_phase::{
    counterexample_u, free_boundary_samples, generalized_identity_check, jump_function, two_phase_residual, TwoPhase,
};

use crate::error::{domain, Result};
use crate::Poly3;

/// Nodes with `|u|` at or below this belong to neither phase.
pub const ZERO_LEVEL_TOL: f64 = 1e-14;

/// Quadrature orders shared by every functional.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orders {
    /// Gauss-Legendre nodes per hemisphere (Koranyi sphere) or in `z`
    /// (Euclidean sphere).
    pub n_phi: usize,
    /// Angular midpoint nodes on the Koranyi sphere; a multiple of 4.
    pub n_theta: usize,
    /// Radial Gauss-Legendre nodes.
    pub n_r: usize,
    /// Multiplier on the sphere orders for integrands with a phase indicator.
    pub indicator_factor: usize,
}

impl Default for Orders {
    fn default() -> Self {
        Self { n_phi: 64, n_theta: 128, n_r: 16, indicator_factor: 4 }
    }
}

impl Orders {
    pub fn validate(&self) -> Result<()> {
        if self.n_phi < 2 {
            return domain(format!("n_phi must be at least 2, got {}", self.n_phi));
        }
        if self.n_theta < 4 || !self.n_theta.is_multiple_of(4) {
            return domain(format!("n_theta must be a positive multiple of 4, got {}", self.n_theta));
        }
        if self.n_r == 0 {
            return domain("n_r must be at least 1");
        }
        if self.indicator_factor == 0 {
            return domain("indicator_factor must be at least 1");
        }
        Ok(())
    }

    /// Orders used for integrands with a phase indicator.
    pub fn escalated(&self) -> Self {
        Self { n_phi: self.n_phi * self.indicator_factor, n_theta: self.n_theta * self.indicator_factor, ..*self }
    }
}

/// One side of the zero level of `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Positive,
    Negative,
}

impl Phase {
    pub fn contains(self, u: f64) -> bool {
        match self {
            Phase::Positive => u > ZERO_LEVEL_TOL,
            Phase::Negative => u < -ZERO_LEVEL_TOL,
        }
    }
}

/// The functionals exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FunctionalKind {
    I,
    J,
    JBeta(f64),
    IEuclid,
    JEuclid,
}

impl FunctionalKind {
    pub fn name(&self) -> &'static str {
        match self {
            FunctionalKind::I => "I",
            FunctionalKind::J => "J",
            FunctionalKind::JBeta(_) => "Jbeta",
            FunctionalKind::IEuclid => "Ieuclid",
            FunctionalKind::JEuclid => "Jeuclid",
        }
    }
}

/// Samples `kind` for `u` (or for `alpha.0 u^+ - alpha.1 u^-` when `alpha`
/// is given) over `grid`.
pub fn evaluate_curve(
    kind: FunctionalKind,
    u: &Poly3,
    alpha: Option<(f64, f64)>,
    grid: &[f64],
    orders: &Orders,
) -> Result<FunctionalCurve> {
    let (a1, a2) = alpha.unwrap_or((1.0, 1.0));
    let tp = TwoPhase::new(u.clone(), a1, a2)?;
    let samples = match kind {
        FunctionalKind::I | FunctionalKind::J | FunctionalKind::JBeta(_) => {
            let ev = HeisFunctionals::new(*orders)?;
            sample_curve(grid, |r| match kind {
                FunctionalKind::I if alpha.is_none() => ev.i(u, r),
                FunctionalKind::I => ev.two_phase_i(&tp, r),
                FunctionalKind::J => ev.two_phase_j(&tp, r),
                FunctionalKind::JBeta(beta) => ev.two_phase_j_beta(&tp, beta, r),
                _ => unreachable!(),
            })?
        }
        FunctionalKind::IEuclid | FunctionalKind::JEuclid => {
            let ev = EuclidFunctionals::new(*orders)?;
            sample_curve(grid, |r| match kind {
                FunctionalKind::IEuclid if alpha.is_none() => ev.i(u, r),
                FunctionalKind::IEuclid => ev.two_phase_i(&tp, r),
                _ => ev.two_phase_j(&tp, r),
            })?
        }
    };
    FunctionalCurve::new(kind.name(), crate::format(u), samples)
}
