use hacf_core::counterexample::{run_counterexample, CounterexampleConfig};
use hacf_core::functionals::{
    classify, counterexample_u, euclid_series_coefficients, evaluate_curve, geometric_grid, series_coefficients,
    EuclidFunctionals, FunctionalKind, HeisFunctionals, Orders,
};
use hacf_core::poly::{euclid_harmonic_basis, euclid_laplacian, h_harmonic_basis, kohn_laplacian};
use hacf_core::{format, parse, Poly3};

use crate::output::{sci, short, Sink};
use crate::{CoeffsArgs, CounterexampleArgs, Failure, FunctionalArgs, GridArgs, HarmonicArgs, KindArg, OrderArgs};

/// Parses `expr`, accepting `counterexample` for `x - 3*y*t - 2*x^3`.
fn polynomial(expr: &str) -> Result<Poly3, Failure> {
    if expr.trim() == "counterexample" {
        return Ok(counterexample_u());
    }
    parse(expr).map_err(|e| {
        let col = expr.get(..e.offset).map_or(e.offset, |s| s.chars().count());
        Failure::Usage(format!("parse error: {e}\n  {expr}\n  {}^", " ".repeat(col)))
    })
}

fn orders(a: &OrderArgs) -> Result<Orders, Failure> {
    let o = Orders { n_phi: a.n_phi, n_theta: a.n_theta, n_r: a.n_r, indicator_factor: a.indicator_factor };
    o.validate()?;
    Ok(o)
}

fn grid(g: &GridArgs, default: (f64, f64, usize)) -> Result<Vec<f64>, Failure> {
    let grid =
        geometric_grid(g.r_min.unwrap_or(default.0), g.r_max.unwrap_or(default.1), g.r_count.unwrap_or(default.2))?;
    Ok(grid)
}

fn alpha(a: &Option<Vec<f64>>) -> Option<(f64, f64)> {
    a.as_ref().map(|v| (v[0], v[1]))
}

fn tolerance(tol: f64) -> Result<f64, Failure> {
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Failure::Usage(format!("tolerance must be finite and nonnegative, got {tol}")));
    }
    Ok(tol)
}

pub fn harmonic(a: &HarmonicArgs) -> Result<(), Failure> {
    let mut verdict = Ok(());
    if let Some(expr) = &a.expr {
        let u = polynomial(expr)?;
        let (label, residual) =
            if a.euclid { ("R3-harmonic", euclid_laplacian(&u)) } else { ("H1-harmonic", kohn_laplacian(&u)) };
        if residual.is_zero() {
            println!("{label}: yes");
        } else {
            println!("{label}: no; residual = {}", format(&residual));
            verdict = Err(Failure::Check(format!("{} is not harmonic", format(&u))));
        }
    }
    if let Some(d) = a.basis {
        let basis = if a.euclid { euclid_harmonic_basis(d)? } else { h_harmonic_basis(d)? };
        for p in basis {
            println!("{}", format(&p));
        }
    }
    verdict
}

pub fn functional(a: &FunctionalArgs) -> Result<(), Failure> {
    let u = polynomial(&a.expr)?;
    let orders = orders(&a.orders)?;
    let grid = grid(&a.grid, (0.02, 0.5, 24))?;
    let tol = tolerance(a.tol)?;
    let kind = match a.kind {
        KindArg::I => FunctionalKind::I,
        KindArg::J => FunctionalKind::J,
        KindArg::JBeta => match a.beta {
            Some(b) if b.is_finite() => FunctionalKind::JBeta(b),
            Some(b) => return Err(Failure::Usage(format!("beta must be finite, got {b}"))),
            None => return Err(Failure::Usage("kind Jbeta needs --beta".into())),
        },
        KindArg::IEuclid => FunctionalKind::IEuclid,
        KindArg::JEuclid => FunctionalKind::JEuclid,
    };
    let alpha = alpha(&a.alpha);
    let curve = evaluate_curve(kind, &u, alpha, &grid, &orders)?;
    let verdict = classify(&curve, tol)?;

    let mut sink = Sink::new(a.output.format);
    sink.preamble("functional", &a.orders);
    sink.meta(format!("functional={} expr={}", curve.name, curve.expr));
    if let FunctionalKind::JBeta(b) = kind {
        sink.meta(format!("beta={b}"));
    }
    if let Some((a1, a2)) = alpha {
        sink.meta(format!("alpha={a1},{a2}"));
    }
    sink.meta(format!("tol={tol:e}"));
    sink.row(&["r", "value"]);
    for &(r, v) in &curve.samples {
        sink.row(&[sci(r), sci(v)]);
    }
    sink.meta(format!("verdict={} max_violation={:e}", verdict.kind, verdict.evidence));
    sink.finish(&a.output)
}

pub fn coeffs(a: &CoeffsArgs) -> Result<(), Failure> {
    let u = polynomial(&a.expr)?;
    let orders = orders(&a.orders)?;
    if a.k == Some(0) {
        return Err(Failure::Usage("K must be at least 1".into()));
    }
    let mut sink = Sink::new(a.output.format);
    sink.preamble("coeffs", &a.orders);
    sink.meta(format!("expr={}", format(&u)));
    sink.row(&["kind", "k", "h", "value"]);

    let heis = HeisFunctionals::new(orders)?;
    let c = series_coefficients(&u, a.k, heis.sphere_rule())?;
    emit_coefficients(&mut sink, "", &c);
    if a.euclid {
        let eu = EuclidFunctionals::new(orders)?;
        let c = euclid_series_coefficients(&u, a.k, eu.sphere_rule())?;
        emit_coefficients(&mut sink, "euclid-", &c);
    }
    sink.finish(&a.output)
}

fn emit_coefficients(sink: &mut Sink, prefix: &str, c: &hacf_core::functionals::SeriesCoefficients) {
    for k in 1..=c.truncation {
        sink.row(&[format!("{prefix}diag"), k.to_string(), String::new(), short(c.diag(k))]);
        for h in (1..k).rev() {
            sink.row(&[format!("{prefix}cross"), k.to_string(), h.to_string(), short(c.cross(h, k))]);
        }
    }
}

pub fn counterexample(a: &CounterexampleArgs) -> Result<(), Failure> {
    let orders = orders(&a.orders)?;
    let grid = grid(&a.grid, (0.02, 0.3, 16))?;
    let cfg = CounterexampleConfig {
        orders,
        r_min: grid[0],
        r_max: grid[grid.len() - 1],
        r_count: grid.len(),
        tol: tolerance(a.tol)?,
        alpha: alpha(&a.alpha),
        euclid_baseline: a.euclid_baseline,
    };
    let rep = run_counterexample(&cfg)?;

    let mut sink = Sink::new(a.output.format);
    sink.preamble("counterexample", &a.orders);
    sink.meta(format!("expr={}", rep.i_curve.expr));
    sink.meta(format!("tol={:e}", cfg.tol));
    if let Some((a1, a2)) = cfg.alpha {
        sink.meta(format!("alpha={a1},{a2}"));
    }
    let [a1, c2, a3] = rep.fit;
    sink.meta(format!("fit a1={} c2={} a3={}", sci(a1), sci(c2), sci(a3)));
    sink.meta(format!("a3 from coefficients={}", sci(rep.a3)));
    sink.meta(format!("a31 signed={} (curve a1 + 2*a31*r^2 + a3*r^4)", sci(rep.a31)));
    sink.meta(format!("a31 positive={} (curve a1 - 2*a31*r^2 + a3*r^4)", sci(-rep.a31)));
    sink.meta(format!("phase_residual={:e}", rep.phase_residual));
    sink.row(&["r", "I", "J"]);
    for (&(r, i), &(_, j)) in rep.i_curve.samples.iter().zip(&rep.j_curve.samples) {
        sink.row(&[sci(r), sci(i), sci(j)]);
    }
    if let Some(e) = &rep.euclid_curve {
        sink.meta(format!("euclid expr={}", e.expr));
        sink.row(&["r", "Ieuclid"]);
        for &(r, v) in &e.samples {
            sink.row(&[sci(r), sci(v)]);
        }
    }
    for c in &rep.checks {
        sink.meta(format!("check {}: {} ({})", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail));
    }
    sink.meta(rep.summary());
    sink.finish(&a.output)?;

    let failed: Vec<&str> = rep.failed().map(|c| c.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
    }
}
