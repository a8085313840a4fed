//! Deterministic quadrature on Koranyi and Euclidean spheres and balls.

mod euclid;
mod gauss;
mod koranyi;
mod sum;

pub use euclid::{euclid_ball_integrate, euclid_sphere_rule, EuclidRule};
pub use gauss::{gauss_legendre, gauss_legendre_on};
pub use koranyi::{
    integrate_sphere, koranyi_ball_integrate, koranyi_sphere_rule, BallRule, SphereNode, SphereRule, KORANYI_PERIMETER,
};
pub use sum::pairwise_sum;
