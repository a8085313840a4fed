//! Quadrature on the Koranyi unit sphere and on gauge balls.
//!
//! Each hemisphere is the graph `(x, y, t) = (sqrt(sin phi) cos theta,
//! sqrt(sin phi) sin theta, +-cos phi)` with `phi` in `(0, pi/2)`. In these
//! coordinates the perimeter measure is `sqrt(sin phi) dphi dtheta`, so for
//! `rho = sqrt(x^2 + y^2)` the weighted measure `dsigma / rho` is just
//! `dphi dtheta`.
//!
//! `phi = (pi/2) v^2` with Gauss-Legendre in `v` makes every polynomial
//! integrand analytic in `v`, including the `sqrt(sin phi)` factor at the
//! poles. `theta` uses the midpoint rule. Nodes are grouped in orbits of the
//! eight sign flips of `(x, y, t)` and each orbit is summed in a fixed order,
//! so integrands odd in `x`, `y`, `t` or in `(x, y)` jointly give exactly 0.

use crate::error::{domain, Error, Result};
use crate::heis::GaugePoint;
use crate::quadrature::gauss::gauss_legendre_on;
use crate::quadrature::sum::pairwise_sum;
use crate::scalar::Real;

/// Perimeter of the unit Koranyi sphere, `4 pi * int_0^{pi/2} sqrt(sin phi) dphi`.
pub const KORANYI_PERIMETER: f64 = 15.056_274_237_662_748;

/// One node of an expanded rule.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereNode<T> {
    pub phi: T,
    pub theta: T,
    /// `+1` for `t > 0`, `-1` for `t < 0`.
    pub hemisphere: i8,
    pub point: GaugePoint<T>,
    /// Weight for the perimeter measure.
    pub weight: T,
}

/// Representative of an orbit of eight nodes `(+-c, +-d, +-tau)` with
/// `c, d, tau > 0`.
#[derive(Clone, Debug)]
pub(crate) struct Orbit<T> {
    pub phi: T,
    pub theta: T,
    pub c: T,
    pub d: T,
    pub tau: T,
    pub weight: T,
    pub flat_weight: T,
}

#[derive(Clone, Debug)]
pub struct SphereRule<T> {
    pub n_phi: usize,
    pub n_theta: usize,
    pub(crate) orbits: Vec<Orbit<T>>,
}

/// Sums `f` over the eight sign images of `(c, d, tau)` in a fixed order:
/// `[(f(c,d,tau) + f(-c,d,tau)) + (f(c,-d,tau) + f(-c,-d,tau))] + [same, -tau]`.
pub(crate) fn orbit_sum<T: Real>(c: T, d: T, tau: T, f: &impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
    let mut v = [T::zero(); 8];
    let mut k = 0;
    for tt in [tau, -tau] {
        for yy in [d, -d] {
            for xx in [c, -c] {
                let p = GaugePoint::new(xx, yy, tt);
                let val = f(&p);
                if !val.is_finite() {
                    return Err(non_finite(&p, val));
                }
                v[k] = val;
                k += 1;
            }
        }
    }
    Ok(((v[0] + v[1]) + (v[2] + v[3])) + ((v[4] + v[5]) + (v[6] + v[7])))
}

fn non_finite<T: Real>(p: &GaugePoint<T>, value: T) -> Error {
    let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
    Error::NonFinite { x: f(p.x), y: f(p.y), t: f(p.t), value: f(value) }
}

/// Tensor rule with `n_phi` Gauss-Legendre nodes per hemisphere and
/// `n_theta` midpoint nodes in angle. `n_theta` must be a multiple of 4.
pub fn koranyi_sphere_rule<T: Real>(n_phi: usize, n_theta: usize) -> Result<SphereRule<T>> {
    if n_phi < 2 {
        return domain(format!("n_phi must be at least 2, got {n_phi}"));
    }
    if n_theta < 4 || !n_theta.is_multiple_of(4) {
        return domain(format!("n_theta must be a positive multiple of 4, got {n_theta}"));
    }
    let (v, wv) = gauss_legendre_on::<T>(n_phi, T::zero(), T::one())?;
    let pi = T::PI();
    let half_pi = T::FRAC_PI_2();
    let h_theta = T::lit(2.0) * pi / T::from_usize(n_theta).unwrap();
    let mut orbits = Vec::with_capacity(n_phi * n_theta / 4);
    for (&v, &wv) in v.iter().zip(&wv) {
        let phi = half_pi * v * v;
        let (sin_phi, cos_phi) = phi.sin_cos();
        let rho = sin_phi.sqrt();
        let flat = pi * v * wv * h_theta;
        for j in 0..n_theta / 4 {
            let theta = (T::from_usize(j).unwrap() + T::lit(0.5)) * h_theta;
            let (s, c) = theta.sin_cos();
            orbits.push(Orbit {
                phi,
                theta,
                c: rho * c,
                d: rho * s,
                tau: cos_phi,
                weight: rho * flat,
                flat_weight: flat,
            });
        }
    }
    Ok(SphereRule { n_phi, n_theta, orbits })
}

impl<T: Real> SphereRule<T> {
    pub fn len(&self) -> usize {
        8 * self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// All nodes, orbit by orbit.
    pub fn nodes(&self) -> Vec<SphereNode<T>> {
        let pi = T::PI();
        let mut out = Vec::with_capacity(self.len());
        for o in &self.orbits {
            for (hemi, tt) in [(1i8, o.tau), (-1, -o.tau)] {
                for (theta, xx, yy) in [
                    (o.theta, o.c, o.d),
                    (pi - o.theta, -o.c, o.d),
                    (pi + pi - o.theta, o.c, -o.d),
                    (pi + o.theta, -o.c, -o.d),
                ] {
                    out.push(SphereNode {
                        phi: o.phi,
                        theta,
                        hemisphere: hemi,
                        point: GaugePoint::new(xx, yy, tt),
                        weight: o.weight,
                    });
                }
            }
        }
        out
    }

    /// Sum of weights; approximates [`KORANYI_PERIMETER`].
    pub fn total_weight(&self) -> T {
        let w: Vec<T> = self.orbits.iter().map(|o| T::lit(8.0) * o.weight).collect();
        pairwise_sum(&w)
    }

    /// `int f dsigma` over the unit sphere.
    pub fn integrate(&self, f: impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        self.reduce(T::one(), |o| o.weight, &f)
    }

    /// `int f / rho dsigma` over the unit sphere, without dividing by `rho`.
    pub fn integrate_flat(&self, f: impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        self.reduce(T::one(), |o| o.flat_weight, &f)
    }

    /// `int f(delta_s sigma) / rho dsigma`.
    pub(crate) fn integrate_flat_dilated(&self, s: T, f: &impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        self.reduce(s, |o| o.flat_weight, f)
    }

    fn reduce(&self, s: T, w: impl Fn(&Orbit<T>) -> T, f: &impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        let s2 = s * s;
        let mut parts = Vec::with_capacity(self.orbits.len());
        for o in &self.orbits {
            parts.push(w(o) * orbit_sum(s * o.c, s * o.d, s2 * o.tau, f)?);
        }
        Ok(pairwise_sum(&parts))
    }
}

pub fn integrate_sphere<T: Real>(f: impl Fn(&GaugePoint<T>) -> T, rule: &SphereRule<T>) -> Result<T> {
    rule.integrate(f)
}

/// Gauge ball of radius `r` in Koranyi-polar coordinates:
/// `int_{B_r} f = int_0^r s^3 int f(delta_s sigma) / rho dsigma ds`.
#[derive(Clone, Debug)]
pub struct BallRule<'a, T> {
    pub r: T,
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
    pub sphere: &'a SphereRule<T>,
}

impl<'a, T: Real> BallRule<'a, T> {
    pub fn new(r: T, n_r: usize, sphere: &'a SphereRule<T>) -> Result<Self> {
        if !(r > T::zero()) || !r.is_finite() {
            return domain(format!("radius must be positive, got {r}"));
        }
        if n_r == 0 {
            return domain("n_r must be at least 1");
        }
        let (nodes, weights) = gauss_legendre_on(n_r, T::zero(), r)?;
        Ok(Self { r, nodes, weights, sphere })
    }

    pub fn integrate(&self, f: impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        let mut parts = Vec::with_capacity(self.nodes.len());
        for (&s, &w) in self.nodes.iter().zip(&self.weights) {
            parts.push(w * s * s * s * self.sphere.integrate_flat_dilated(s, &f)?);
        }
        Ok(pairwise_sum(&parts))
    }
}

pub fn koranyi_ball_integrate<T: Real>(
    f: impl Fn(&GaugePoint<T>) -> T,
    r: T,
    n_r: usize,
    rule: &SphereRule<T>,
) -> Result<T> {
    BallRule::new(r, n_r, rule)?.integrate(f)
}
