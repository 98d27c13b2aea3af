//! Exact intersection numbers from polytopes.
//!
//! Mixed volumes and BKK root counts of Newton polytopes, Gelfand–Tsetlin
//! degrees of GL(m) flag varieties, and the graded Poincaré duality algebras
//! determined by a volume polynomial or by a symmetric multilinear form.
//! All arithmetic is exact over ℚ.

pub mod algebra;
pub mod bkk;
pub mod error;
pub mod flag;
pub mod geometry;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use geometry::{
    convex_hull, hrep_to_vrep, minkowski_sum, mixed_volume, scale, volume, vrep_to_hrep, HPolytope,
    Inequality, VPolytope,
};
pub use rational::{format_rational, parse_rational, Rational, RationalVector};

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
