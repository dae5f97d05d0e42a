//! Exact arithmetic: ℚ, ℚ[z], ℚ(z), truncated series, matrices, linear algebra.

pub mod bivariate;
pub mod hseries;
pub mod linsolve;
pub mod matrix;
pub mod point;
pub mod poly;
pub mod rational;
pub mod reconstruct;
pub mod rf;
pub mod ring;
pub mod series;

pub use hseries::HSeries;
pub use matrix::Matrix;
pub use point::Point;
pub use poly::Poly;
pub use rational::{q, qi, Q};
pub use rf::RF;
pub use ring::{Field, Ring};
pub use series::Series;
