//! Reference integrals over gauge balls computed in Cartesian coordinates,
//! with no use of the sphere parametrization.
#![allow(dead_code)]

use hacf_core::quadrature::gauss_legendre_on;
use hacf_core::{parse, Point, Poly3};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `int f dx dy dt` over `(x^2 + y^2)^2 + t^2 < r^4`.
///
/// Iterated Gauss-Legendre with `x = r sin b`, `y = Y sin a` where
/// `Y = sqrt(r^2 - x^2)`; the `t`-extent `sqrt(r^4 - rho^4)` then equals
/// `Y cos a sqrt(r^2 + rho^2)`, so every bound is smooth in `(b, a)`.
pub fn cartesian_ball(f: impl Fn(f64, f64, f64) -> f64, r: f64, n: usize, n_t: usize) -> f64 {
    let half = std::f64::consts::FRAC_PI_2;
    let (ang, wang) = gauss_legendre_on(n, -half, half).unwrap();
    let (w, ww) = gauss_legendre_on(n_t, -1.0, 1.0).unwrap();
    let mut total = 0.0;
    for (&b, &wb) in ang.iter().zip(&wang) {
        let x = r * b.sin();
        let yy = r * b.cos();
        let jx = r * b.cos();
        for (&a, &wa) in ang.iter().zip(&wang) {
            let y = yy * a.sin();
            let jy = yy * a.cos();
            let rho2 = x * x + y * y;
            let tt = yy * a.cos() * (r * r + rho2).sqrt();
            let mut inner = 0.0;
            for (&s, &ws) in w.iter().zip(&ww) {
                inner += ws * f(x, y, tt * s);
            }
            total += wb * wa * jx * jy * tt * inner;
        }
    }
    total
}

/// Cylindrical variant `dx dy dt = rho drho dpsi dt` with `rho = r sin g`,
/// for integrands with a factor of `rho`.
pub fn cylindrical_ball(f: impl Fn(f64, f64, f64) -> f64, r: f64, n: usize, n_psi: usize, n_t: usize) -> f64 {
    let (gam, wg) = gauss_legendre_on(n, 0.0, std::f64::consts::FRAC_PI_2).unwrap();
    let (w, ww) = gauss_legendre_on(n_t, -1.0, 1.0).unwrap();
    let h = 2.0 * std::f64::consts::PI / n_psi as f64;
    let mut total = 0.0;
    for (&g, &wgam) in gam.iter().zip(&wg) {
        let rho = r * g.sin();
        let jr = r * g.cos();
        let tt = r * r * g.cos() * (1.0 + g.sin() * g.sin()).sqrt();
        let mut ring = 0.0;
        for k in 0..n_psi {
            let psi = (k as f64 + 0.5) * h;
            let (x, y) = (rho * psi.cos(), rho * psi.sin());
            let mut inner = 0.0;
            for (&s, &ws) in w.iter().zip(&ww) {
                inner += ws * f(x, y, tt * s);
            }
            ring += inner;
        }
        total += wgam * jr * rho * h * tt * ring;
    }
    total
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `2 + sum c_b x^b1 y^b2 t^b3` over Heisenberg degree <= `max_deg`, with
/// `c_b` uniform in `[-1/4, 1/4]` on a grid of sixteenths.
pub fn random_positive_poly(rng: &mut ChaCha8Rng, max_deg: u32) -> Poly3 {
    let mut terms = vec!["2".to_string()];
    for b3 in 0..=max_deg / 2 {
        for b1 in 0..=max_deg {
            for b2 in 0..=max_deg {
                let d = b1 + b2 + 2 * b3;
                if d == 0 || d > max_deg {
                    continue;
                }
                let c: i32 = rng.gen_range(-4..=4);
                terms.push(format!("({c}/16)*x^{b1}*y^{b2}*t^{b3}"));
            }
        }
    }
    parse(&terms.join(" + ")).unwrap()
}

/// Random rational combination of the Kohn-harmonic basis in degrees
/// `1..=max_deg`.
pub fn random_h_harmonic(rng: &mut ChaCha8Rng, max_deg: i64) -> Poly3 {
    random_combination(rng, (1..=max_deg).flat_map(|k| hacf_core::poly::h_harmonic_basis(k).unwrap()))
}

pub fn random_euclid_harmonic(rng: &mut ChaCha8Rng, max_deg: i64) -> Poly3 {
    random_combination(rng, (1..=max_deg).flat_map(|k| hacf_core::poly::euclid_harmonic_basis(k).unwrap()))
}

fn random_combination(rng: &mut ChaCha8Rng, basis: impl Iterator<Item = Poly3>) -> Poly3 {
    let mut acc = Poly3::zero();
    for b in basis {
        let c: i64 = rng.gen_range(-3..=3);
        let d: i64 = rng.gen_range(1..=4);
        acc += b.scale(&hacf_core::Rational::new(c.into(), d.into()));
    }
    if acc.is_zero() {
        parse("x").unwrap()
    } else {
        acc
    }
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

pub fn p(x: f64, y: f64, t: f64) -> Point {
    Point::new(x, y, t)
}

/// Planar polar coordinates in the `(rho^2, t)` half-plane:
/// `rho^2 = R cos w`, `t = R sin w`, so `dx dy dt = (1/2) R dR dw dpsi`.
/// With `R = r^2 q^2` and `w = +-(pi/2)(1 - s^2)` every factor of
/// `rho = sqrt(R cos w)` is analytic in `(q, s)`.
pub fn planar_polar_ball(f: impl Fn(f64, f64, f64) -> f64, r: f64, n: usize, n_psi: usize) -> f64 {
    let (q, wq) = gauss_legendre_on(n, 0.0, 1.0).unwrap();
    let (s, ws) = gauss_legendre_on(n, 0.0, 1.0).unwrap();
    let h = 2.0 * std::f64::consts::PI / n_psi as f64;
    let half = std::f64::consts::FRAC_PI_2;
    let mut total = 0.0;
    for (&q, &wq) in q.iter().zip(&wq) {
        let big_r = r * r * q * q;
        let jr = 0.5 * big_r * 2.0 * r * r * q;
        for (&s, &ws) in s.iter().zip(&ws) {
            let w0 = half * (1.0 - s * s);
            let jw = std::f64::consts::PI * s;
            for sign in [1.0, -1.0] {
                let w = sign * w0;
                let rho = (big_r * w.cos()).sqrt();
                let t = big_r * w.sin();
                let mut ring = 0.0;
                for k in 0..n_psi {
                    let psi = (k as f64 + 0.5) * h;
                    ring += f(rho * psi.cos(), rho * psi.sin(), t);
                }
                total += wq * ws * jr * jw * h * ring;
            }
        }
    }
    total
}
