//! Gauss-Legendre nodes and weights.

use crate::error::{domain, Result};
use crate::scalar::Real;

/// Nodes and weights on `(-1, 1)`, nodes ascending.
///
/// Roots are found in `f64` by Newton iteration on the three-term
/// recurrence, then converted to `T`.
pub fn gauss_legendre<T: Real>(n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n == 0 {
        return domain("Gauss-Legendre order must be at least 1");
    }
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    let m = n.div_ceil(2);
    let nf = n as f64;
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() <= 1e-16 * z.abs().max(1.0) {
                let (_, d) = legendre(n, z);
                dp = d;
                break;
            }
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok((nodes.into_iter().map(T::lit).collect(), weights.into_iter().map(T::lit).collect()))
}

/// Nodes and weights mapped to `(a, b)`.
pub fn gauss_legendre_on<T: Real>(n: usize, a: T, b: T) -> Result<(Vec<T>, Vec<T>)> {
    let (x, w) = gauss_legendre::<T>(n)?;
    let half = (b - a) / T::lit(2.0);
    let mid = (a + b) / T::lit(2.0);
    Ok((x.into_iter().map(|x| mid + half * x).collect(), w.into_iter().map(|w| w * half).collect()))
}

/// `(P_n(z), P_n'(z))`.
fn legendre(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        for n in [1usize, 2, 5, 16, 64, 257] {
            let (x, w) = gauss_legendre::<f64>(n).unwrap();
            for deg in 0..(2 * n).min(40) {
                let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((got - exact).abs() < 1e-13, "n={n} deg={deg} got={got}");
            }
        }
    }

    #[test]
    fn nodes_are_symmetric_and_interior() {
        let (x, w) = gauss_legendre::<f64>(9).unwrap();
        for i in 0..9 {
            assert_eq!(x[i], -x[8 - i]);
            assert_eq!(w[i], w[8 - i]);
            assert!(x[i].abs() < 1.0 && w[i] > 0.0);
        }
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        assert!(gauss_legendre::<f64>(0).is_err());
    }

    #[test]
    fn mapped_interval_and_f32() {
        let (x, w) = gauss_legendre_on(8, 0.0f64, 2.0).unwrap();
        let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x * x).sum();
        assert!((got - 4.0).abs() < 1e-13);
        let (x, w) = gauss_legendre_on(6, 0.0f32, 1.0).unwrap();
        let got: f32 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
        assert!((got - 1.0 / 3.0).abs() < 1e-6);
    }
}
