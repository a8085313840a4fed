//! Horizontal vector fields, sub-Laplacians and gradient products.
//!
//! `X = d/dx + 2y d/dt`, `Y = d/dy - 2x d/dt`, `[X, Y] = -4 d/dt`.

use super::{MultiIndex, Poly};
use crate::error::{Error, Result};
use crate::scalar::Ring;

pub fn apply_x<C: Ring>(p: &Poly<C>) -> Poly<C> {
    let two = C::from_i64(2);
    &p.d_x() + &p.d_t().shift(MultiIndex::new(0, 1, 0)).scale(&two)
}

pub fn apply_y<C: Ring>(p: &Poly<C>) -> Poly<C> {
    let two = C::from_i64(2);
    &p.d_y() - &p.d_t().shift(MultiIndex::new(1, 0, 0)).scale(&two)
}

/// `X^2 + Y^2`.
pub fn kohn_laplacian<C: Ring>(p: &Poly<C>) -> Poly<C> {
    &apply_x(&apply_x(p)) + &apply_y(&apply_y(p))
}

/// Standard Laplacian on R^3 with `t` as the third coordinate.
pub fn euclid_laplacian<C: Ring>(p: &Poly<C>) -> Poly<C> {
    &(&p.d_x().d_x() + &p.d_y().d_y()) + &p.d_t().d_t()
}

pub fn is_h_harmonic<C: Ring>(p: &Poly<C>) -> bool {
    kohn_laplacian(p).is_zero()
}

pub fn is_euclid_harmonic<C: Ring>(p: &Poly<C>) -> bool {
    euclid_laplacian(p).is_zero()
}

/// `XYp - YXp + 4 dp/dt`; identically zero.
pub fn commutator_check<C: Ring>(p: &Poly<C>) -> Poly<C> {
    let xy = apply_x(&apply_y(p));
    let yx = apply_y(&apply_x(p));
    &(&xy - &yx) + &p.d_t().scale(&C::from_i64(4))
}

/// The pair `(Xu, Yu)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HorizontalField<C> {
    pub xc: Poly<C>,
    pub yc: Poly<C>,
}

impl<C: Ring> HorizontalField<C> {
    pub fn dot(&self, other: &Self) -> Poly<C> {
        &(&self.xc * &other.xc) + &(&self.yc * &other.yc)
    }

    pub fn norm_sq(&self) -> Poly<C> {
        self.dot(self)
    }
}

pub fn horizontal_gradient<C: Ring>(p: &Poly<C>) -> HorizontalField<C> {
    HorizontalField { xc: apply_x(p), yc: apply_y(p) }
}

/// Euclidean gradient `(d/dx, d/dy, d/dt)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclidField<C> {
    pub components: [Poly<C>; 3],
}

impl<C: Ring> EuclidField<C> {
    pub fn dot(&self, other: &Self) -> Poly<C> {
        let mut out = Poly::zero();
        for (a, b) in self.components.iter().zip(&other.components) {
            out += a * b;
        }
        out
    }

    pub fn norm_sq(&self) -> Poly<C> {
        self.dot(self)
    }
}

pub fn euclid_gradient<C: Ring>(p: &Poly<C>) -> EuclidField<C> {
    EuclidField { components: [p.d_x(), p.d_y(), p.d_t()] }
}

fn require_homogeneous<C: Ring>(p: &Poly<C>) -> Result<()> {
    let degs = p.heisenberg_degrees();
    if degs.len() > 1 {
        return Err(Error::NotHomogeneous(degs.into_iter().collect()));
    }
    Ok(())
}

/// `Q_k = |grad_H P_k|^2` for a Heisenberg-homogeneous `P_k`, as a true
/// polynomial. Satisfies `|grad_H P_k(delta_s xi)|^2 = s^(2(k-1)) Q_k(xi)`.
pub fn q_poly<C: Ring>(pk: &Poly<C>) -> Result<Poly<C>> {
    require_homogeneous(pk)?;
    Ok(horizontal_gradient(pk).norm_sq())
}

/// `T_{h,k} = <grad_H P_h, grad_H P_k>` for homogeneous `P_h`, `P_k`.
pub fn t_poly<C: Ring>(ph: &Poly<C>, pk: &Poly<C>) -> Result<Poly<C>> {
    require_homogeneous(ph)?;
    require_homogeneous(pk)?;
    Ok(horizontal_gradient(ph).dot(&horizontal_gradient(pk)))
}
