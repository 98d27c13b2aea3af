use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::polytope::{facets, VPolytope};
use crate::linalg;
use crate::rational::{factorial, Rational};

/// A simplex given by its `d + 1` vertices in ℚ^d.
pub type Simplex = Vec<Vec<Rational>>;

/// Triangulates the convex hull of distinct, full-dimensional points of ℚ^d by
/// coning every facet (triangulated recursively) from the vertex centroid.
pub(crate) fn triangulate(points: &[Vec<Rational>]) -> Vec<Simplex> {
    let d = points[0].len();
    if d == 1 {
        let lo = points.iter().min().unwrap().clone();
        let hi = points.iter().max().unwrap().clone();
        return vec![vec![lo, hi]];
    }
    let (fs, incidence) = facets(points);
    // only extreme points enter the centroid and the recursion
    let extreme: Vec<bool> = (0..points.len())
        .map(|i| !(0..points.len()).any(|j| j != i && incidence[j].is_superset_of(&incidence[i])))
        .collect();
    let count = extreme.iter().filter(|&&e| e).count();
    let mut apex = vec![Rational::zero(); d];
    for (p, _) in points.iter().zip(&extreme).filter(|(_, &e)| e) {
        for (a, x) in apex.iter_mut().zip(p) {
            *a += x;
        }
    }
    let count = Rational::from_integer(count.into());
    for a in apex.iter_mut() {
        *a /= &count;
    }

    let mut out = Vec::new();
    for facet in fs {
        // drop a coordinate the facet normal depends on; injective on the facet hyperplane
        let drop = facet.normal.iter().position(|a| !a.is_zero()).unwrap();
        let members: Vec<&Vec<Rational>> = facet
            .points
            .iter()
            .filter(|&&i| extreme[i])
            .map(|&i| &points[i])
            .collect();
        let projected: Vec<Vec<Rational>> = members
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != drop)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        for simplex in triangulate(&projected) {
            let mut lifted: Simplex = simplex
                .iter()
                .map(|q| lift(q, drop, &facet.normal, &facet.rhs))
                .collect();
            lifted.push(apex.clone());
            out.push(lifted);
        }
    }
    out
}

/// Reinserts coordinate `drop` so that the point lies on `normal · x = rhs`.
fn lift(q: &[Rational], drop: usize, normal: &[BigInt], rhs: &Rational) -> Vec<Rational> {
    let mut acc = rhs.clone();
    let mut out = Vec::with_capacity(q.len() + 1);
    let mut it = q.iter();
    for (c, a) in normal.iter().enumerate() {
        if c == drop {
            out.push(Rational::zero());
        } else {
            let x = it.next().unwrap().clone();
            acc -= Rational::from_integer(a.clone()) * &x;
            out.push(x);
        }
    }
    out[drop] = acc / Rational::from_integer(normal[drop].clone());
    out
}

pub fn simplex_volume(s: &Simplex) -> Rational {
    let d = s.len() - 1;
    let base = &s[0];
    let m: Vec<Vec<Rational>> = s[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    linalg::det(m).abs() / Rational::from_integer(factorial(d))
}

/// Exact volume in the ambient dimension; zero for lower-dimensional polytopes.
pub fn volume(a: &VPolytope) -> Rational {
    if !a.is_full_dimensional() || a.ambient_dim() == 0 {
        return Rational::zero();
    }
    let points: Vec<Vec<Rational>> = a.vertices().iter().map(|v| v.coords().to_vec()).collect();
    triangulate(&points).iter().map(simplex_volume).sum()
}

/// Simplices of a triangulation of a full-dimensional polytope; empty otherwise.
pub fn triangulation(a: &VPolytope) -> Vec<Simplex> {
    if !a.is_full_dimensional() {
        return Vec::new();
    }
    let points: Vec<Vec<Rational>> = a.vertices().iter().map(|v| v.coords().to_vec()).collect();
    triangulate(&points)
}
