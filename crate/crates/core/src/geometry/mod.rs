//! Exact rational convex polytopes: hulls, representation conversion,
//! Minkowski sums, volumes and mixed volumes.

mod dd;
mod mixed;
mod polytope;
mod volume;

pub use mixed::mixed_volume;
pub use polytope::{
    convex_hull, hrep_to_vrep, minkowski_sum, scale, vrep_to_hrep, HPolytope, Inequality, VPolytope,
};
pub use volume::{simplex_volume, triangulation, volume, Simplex};
