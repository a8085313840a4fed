//! Product rule on the unit sphere `S^2` of `R^3` and polar integration over
//! Euclidean balls. The third coordinate is `t`.

use crate::error::{domain, Result};
use crate::heis::GaugePoint;
use crate::quadrature::gauss::gauss_legendre_on;
use crate::quadrature::koranyi::orbit_sum;
use crate::quadrature::sum::pairwise_sum;
use crate::scalar::Real;

#[derive(Clone, Debug)]
struct EuclidOrbit<T> {
    c: T,
    d: T,
    z: T,
    weight: T,
}

/// `n` Gauss-Legendre nodes in `z = cos(polar angle)` on each hemisphere
/// times `4n` midpoint nodes in azimuth, grouped in sign orbits.
#[derive(Clone, Debug)]
pub struct EuclidRule<T> {
    pub n: usize,
    orbits: Vec<EuclidOrbit<T>>,
}

pub fn euclid_sphere_rule<T: Real>(n: usize) -> Result<EuclidRule<T>> {
    if n < 2 {
        return domain(format!("sphere order must be at least 2, got {n}"));
    }
    let (z, wz) = gauss_legendre_on::<T>(n, T::zero(), T::one())?;
    let m = 4 * n;
    let h = T::lit(2.0) * T::PI() / T::from_usize(m).unwrap();
    let mut orbits = Vec::with_capacity(n * n);
    for (&z, &wz) in z.iter().zip(&wz) {
        let s = (T::one() - z * z).sqrt();
        for j in 0..n {
            let (sin, cos) = ((T::from_usize(j).unwrap() + T::lit(0.5)) * h).sin_cos();
            orbits.push(EuclidOrbit { c: s * cos, d: s * sin, z, weight: wz * h });
        }
    }
    Ok(EuclidRule { n, orbits })
}

impl<T: Real> EuclidRule<T> {
    pub fn len(&self) -> usize {
        8 * self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Nodes on the sphere paired with their area weights.
    pub fn nodes(&self) -> Vec<(GaugePoint<T>, T)> {
        let mut out = Vec::with_capacity(self.len());
        for o in &self.orbits {
            for z in [o.z, -o.z] {
                for y in [o.d, -o.d] {
                    for x in [o.c, -o.c] {
                        out.push((GaugePoint::new(x, y, z), o.weight));
                    }
                }
            }
        }
        out
    }

    pub fn integrate(&self, f: impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        self.integrate_scaled(T::one(), &f)
    }

    /// `int_{S^2} f(s sigma) dsigma`.
    fn integrate_scaled(&self, s: T, f: &impl Fn(&GaugePoint<T>) -> T) -> Result<T> {
        let mut parts = Vec::with_capacity(self.orbits.len());
        for o in &self.orbits {
            parts.push(o.weight * orbit_sum(s * o.c, s * o.d, s * o.z, f)?);
        }
        Ok(pairwise_sum(&parts))
    }
}

/// `int_0^r s^2 int_{S^2} f(s sigma) dsigma ds`.
pub fn euclid_ball_integrate<T: Real>(
    f: impl Fn(&GaugePoint<T>) -> T,
    r: T,
    n_r: usize,
    rule: &EuclidRule<T>,
) -> Result<T> {
    if !(r > T::zero()) || !r.is_finite() {
        return domain(format!("radius must be positive, got {r}"));
    }
    if n_r == 0 {
        return domain("n_r must be at least 1");
    }
    let (s, w) = gauss_legendre_on(n_r, T::zero(), r)?;
    let mut parts = Vec::with_capacity(n_r);
    for (&s, &w) in s.iter().zip(&w) {
        parts.push(w * s * s * rule.integrate_scaled(s, &f)?);
    }
    Ok(pairwise_sum(&parts))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn norm(p: &GaugePoint<f64>) -> f64 {
        (p.x * p.x + p.y * p.y + p.t * p.t).sqrt()
    }

    #[test]
    fn sphere_examples() {
        let r = euclid_sphere_rule::<f64>(16).unwrap();
        assert!((r.integrate(|_| 1.0).unwrap() - 4.0 * PI).abs() < 1e-12);
        assert!((r.integrate(|p| p.x * p.x).unwrap() - 4.0 * PI / 3.0).abs() < 1e-12);
        assert_eq!(r.integrate(|p| p.x * p.y).unwrap(), 0.0);
        assert!(euclid_sphere_rule::<f64>(1).is_err());
        let r2 = euclid_sphere_rule::<f64>(2).unwrap();
        assert!((r2.integrate(|_| 1.0).unwrap() - 4.0 * PI).abs() < 1e-12);
        for (p, _) in r.nodes() {
            assert!((norm(&p) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn ball_examples() {
        let r = euclid_sphere_rule::<f64>(16).unwrap();
        let v = euclid_ball_integrate(|_| 1.0, 1.0, 8, &r).unwrap();
        assert!((v - 4.0 * PI / 3.0).abs() < 1e-12);
        let w = euclid_ball_integrate(|p| 1.0 / norm(p), 1.0, 8, &r).unwrap();
        assert!((w - 2.0 * PI).abs() < 1e-12);
        let h = euclid_ball_integrate(|p| if p.x > 0.0 { 1.0 } else { 0.0 }, 1.0, 8, &r).unwrap();
        assert!((h - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!(euclid_ball_integrate(|_| 1.0, 0.0, 8, &r).is_err());
    }

    #[test]
    fn harmonic_orthogonality() {
        // Distinct-degree harmonics are orthogonal on S^2.
        let r = euclid_sphere_rule::<f64>(16).unwrap();
        let v = r.integrate(|p| (p.x * p.x - p.y * p.y) * p.x).unwrap();
        assert!(v.abs() < 1e-14);
        let v = r.integrate(|p| p.x * p.y * p.t * (p.t * p.t - 1.0 / 3.0 * (p.x * p.x + p.y * p.y))).unwrap();
        assert!(v.abs() < 1e-14);
    }
}
