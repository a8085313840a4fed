//! One-shot reproduction of the decreasing behaviour of `I` and `J` for
//! `u = x - 3yt - 2x^3`, with named checks.

use std::f64::consts::PI;

use crate::error::Result;
use crate::functionals::{
    classify, coeff_cross, coeff_diag, counterexample_u, free_boundary_samples, generalized_identity_check,
    geometric_grid, sample_curve, two_phase_residual, EuclidFunctionals, FunctionalCurve, HeisFunctionals,
    MonotonicityKind, MonotonicityVerdict, Orders, Phase, TwoPhase, DEFAULT_TOL,
};
use crate::poly::is_h_harmonic;
use crate::{format, parse};

#[derive(Clone, Debug)]
pub struct CounterexampleConfig {
    pub orders: Orders,
    pub r_min: f64,
    pub r_max: f64,
    pub r_count: usize,
    pub tol: f64,
    /// Also check the weighted two-phase identities for these weights.
    pub alpha: Option<(f64, f64)>,
    pub euclid_baseline: bool,
}

impl Default for CounterexampleConfig {
    fn default() -> Self {
        Self {
            orders: Orders::default(),
            r_min: 0.02,
            r_max: 0.3,
            r_count: 16,
            tol: DEFAULT_TOL,
            alpha: None,
            euclid_baseline: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub i_curve: FunctionalCurve,
    pub j_curve: FunctionalCurve,
    pub i_verdict: MonotonicityVerdict,
    pub j_verdict: MonotonicityVerdict,
    /// Least-squares `(a1, c2, a3)` of `I(r) = a1 + c2 r^2 + a3 r^4`.
    pub fit: [f64; 3],
    pub a3: f64,
    /// Signed `a_{3,1}`; the curve is `a1 + 2 a_{3,1} r^2 + a3 r^4`.
    pub a31: f64,
    /// `max_r |I^+ - I^-| / I`.
    pub phase_residual: f64,
    pub euclid_curve: Option<FunctionalCurve>,
    pub checks: Vec<Check>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn check(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.passed)
    }

    pub fn summary(&self) -> String {
        let phase = if self.check("phase symmetry") { "≤" } else { ">" };
        let a1 = if self.check("a1") { "≤" } else { ">" };
        format!(
            "I: {}; J: {}; |I+−I−| {phase} 1e−8; a1 = π² (rel err {a1} 1e−6)",
            self.i_verdict.kind, self.j_verdict.kind
        )
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

pub fn run_counterexample(cfg: &CounterexampleConfig) -> Result<CounterexampleReport> {
    let u = counterexample_u();
    let expr = format(&u);
    let ev = HeisFunctionals::new(cfg.orders)?;
    let grid = geometric_grid(cfg.r_min, cfg.r_max, cfg.r_count)?;
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    push("harmonic", is_h_harmonic(&u), "Kohn-Laplacian of u is the zero polynomial".into());

    let i_curve = FunctionalCurve::new("I", &expr, sample_curve(&grid, |r| ev.i(&u, r))?)?;
    let i_verdict = classify(&i_curve, cfg.tol)?;
    push("I decreasing", i_verdict.kind == MonotonicityKind::Decreasing, i_verdict.to_string());

    let unit = TwoPhase::unit(u.clone());
    let phases = sample_curve(&grid, |r| {
        let p = ev.two_phase_i_signed(&unit, Phase::Positive, r)?;
        let n = ev.two_phase_i_signed(&unit, Phase::Negative, r)?;
        Ok(if p + n == 0.0 { (p - n).abs() } else { (p - n).abs() / (p + n) })
    })?;
    let phase_residual = phases.iter().map(|s| s.1).fold(0.0, f64::max);
    push("phase symmetry", phase_residual <= 1e-8, format!("max |I+ - I-| / I = {phase_residual:e}"));

    let j_curve = FunctionalCurve::new("J", &expr, sample_curve(&grid, |r| ev.j(&u, r))?)?;
    let j_verdict = classify(&j_curve, cfg.tol)?;
    push("J decreasing", j_verdict.kind == MonotonicityKind::Decreasing, j_verdict.to_string());

    let fit = crate::functionals::fit_even_quadratic(&i_curve.samples)?;
    let a3 = coeff_diag(&u, 3, ev.sphere_rule())?;
    let a31 = coeff_cross(&u, 3, 1, ev.sphere_rule())?;
    let e1 = rel(fit[0], PI * PI);
    push("a1", e1 <= 1e-6, format!("fitted a1 = {:.12}, rel err {e1:e}", fit[0]));
    let e2 = rel(fit[1], -12.0 * PI);
    push("c2", e2 <= 1e-4 && rel(2.0 * a31, -12.0 * PI) <= 1e-6, format!("fitted c2 = {:.12}, rel err {e2:e}", fit[1]));
    let e3 = rel(fit[2], a3);
    push("a3", e3 <= 1e-5 && a3 > 0.0, format!("fitted a3 = {:.12}, coefficient {a3:.12}, rel err {e3:e}", fit[2]));

    let h = 1e-3;
    let derivs = sample_curve(&grid, |r| Ok((ev.i(&u, r + h)? - ev.i(&u, r - h)?) / (2.0 * h)))?;
    let worst = derivs.iter().map(|d| d.1).fold(f64::NEG_INFINITY, f64::max);
    push("derivative negative", worst < 0.0, format!("max central difference {worst:e}"));

    if let Some((a1, a2)) = cfg.alpha {
        let mut worst = 0.0f64;
        for r in [0.05, 0.1, 0.2] {
            let d = generalized_identity_check(a1, a2, r, &cfg.orders)?;
            worst = worst.max(d / (0.5 * (a1 * a1 + a2 * a2) * ev.i(&u, r)?));
        }
        push("generalized identity", worst <= 1e-6, format!("max rel deviation {worst:e}"));
        let res = two_phase_residual(a1, a2, &free_boundary_samples(50))?;
        push("jump condition", res <= 1e-9, format!("max residual {res:e} on 50 samples"));
        let tp = TwoPhase::new(u.clone(), a1, a2)?;
        let ratio =
            ev.two_phase_i_signed(&tp, Phase::Positive, 0.1)? / ev.two_phase_i_signed(&tp, Phase::Negative, 0.1)?;
        let e = rel(ratio, a1 * a1 / (a2 * a2));
        push("phase scaling", e <= 1e-8, format!("I(a1 u+) / I(a2 u-) = {ratio:.12}, rel err {e:e}"));
    }

    let mut euclid_curve = None;
    if cfg.euclid_baseline {
        let w = parse("x + x^2 - y^2").expect("literal parses");
        let eu = EuclidFunctionals::new(cfg.orders)?;
        let egrid = geometric_grid(0.02, 0.5, 24)?;
        let curve = FunctionalCurve::new("Ieuclid", format(&w), sample_curve(&egrid, |r| eu.i(&w, r))?)?;
        let v = classify(&curve, cfg.tol)?;
        push("euclid increasing", v.kind == MonotonicityKind::Increasing, v.to_string());
        let a2 = crate::functionals::coeff_euclid(&w, 2, eu.sphere_rule())?;
        let e = rel(a2, 8.0 * PI / 3.0);
        push("euclid a2", a2 > 0.0 && e <= 1e-8, format!("a2 = {a2:.12}, rel err {e:e}"));
        euclid_curve = Some(curve);
    }

    Ok(CounterexampleReport {
        i_curve,
        j_curve,
        i_verdict,
        j_verdict,
        fit,
        a3,
        a31,
        phase_residual,
        euclid_curve,
        checks,
    })
}
