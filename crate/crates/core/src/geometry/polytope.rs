use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dd::{self, Bits, DdError};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{primitive_integer, Rational, RationalVector};

/// A convex polytope given by its vertices.
///
/// Vertices are exactly the extreme points, stored in lexicographic order, so
/// two polytopes are equal iff their vertex lists are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<RationalVector>,
    affine_dim: usize,
}

/// One inequality `normal · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inequality {
    pub normal: RationalVector,
    pub rhs: Rational,
}

/// A bounded polytope given by inequalities.
#[derive(Clone, Debug)]
pub struct HPolytope {
    dim: usize,
    inequalities: Vec<Inequality>,
    vrep: VPolytope,
}

impl std::fmt::Debug for VPolytope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VPolytope")
            .field("dim", &self.dim)
            .field("affine_dim", &self.affine_dim)
            .field("vertices", &self.vertices)
            .finish()
    }
}

/// Affine hull data: `base` point, rank, and coordinate indices on which the
/// projection is injective along the hull.
pub(crate) struct AffineHull {
    pub rank: usize,
    pub coords: Vec<usize>,
    /// Rows of the reduced difference matrix.
    pub directions: Matrix,
}

pub(crate) fn affine_hull(points: &[RationalVector]) -> AffineHull {
    let base = &points[0];
    let mut diffs: Matrix = points[1..]
        .iter()
        .map(|p| (p - base).into_coords())
        .collect();
    let coords = linalg::rref(&mut diffs);
    AffineHull {
        rank: coords.len(),
        coords,
        directions: diffs,
    }
}

pub(crate) fn project(p: &RationalVector, coords: &[usize]) -> Vec<Rational> {
    coords.iter().map(|&c| p[c].clone()).collect()
}

/// A facet `normal · x ≤ rhs` of a full-dimensional point set, with the indices
/// of the input points lying on it.
#[derive(Debug, Clone)]
pub(crate) struct Facet {
    pub normal: Vec<BigInt>,
    pub rhs: Rational,
    pub points: Vec<usize>,
}

/// Facets of the convex hull of `points`, which must affinely span ℚ^d, d ≥ 1.
/// Points must be distinct.
pub(crate) fn facets(points: &[Vec<Rational>]) -> (Vec<Facet>, Vec<Bits>) {
    let d = points[0].len();
    // cone of valid inequalities (b, a): b - a·p ≥ 0
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut row = vec![Rational::one()];
            row.extend(p.iter().map(|x| -x));
            primitive_integer(&row)
        })
        .collect();
    let rays = match dd::extreme_rays(&rows) {
        Ok(r) => r,
        Err(DdError::NotPointed) => unreachable!("points are not full-dimensional"),
    };
    let mut out: Vec<Facet> = rays
        .into_iter()
        .map(|ray| {
            let b = Rational::from_integer(ray.coords[0].clone());
            let normal = ray.coords[1..].to_vec();
            let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            debug_assert!(!g.is_zero());
            let normal: Vec<BigInt> = normal.iter().map(|x| x / &g).collect();
            let rhs = b / Rational::from_integer(g);
            let pts = (0..points.len()).filter(|&i| ray.zeros.get(i)).collect();
            Facet {
                normal,
                rhs,
                points: pts,
            }
        })
        .collect();
    debug_assert!(out.iter().all(|f| f.points.len() >= d));
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    let incidence = (0..points.len())
        .map(|i| {
            let mut bits = Bits::new(out.len());
            for (k, f) in out.iter().enumerate() {
                if f.points.contains(&i) {
                    bits.set(k);
                }
            }
            bits
        })
        .collect();
    (out, incidence)
}

fn dedup_sorted(points: Vec<RationalVector>) -> Vec<RationalVector> {
    let set: BTreeSet<RationalVector> = points.into_iter().collect();
    set.into_iter().collect()
}

fn check_uniform(points: &[RationalVector]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::invalid("empty point set"));
    };
    let dim = first.dim();
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::invalid("points have mixed dimensions"));
    }
    Ok(dim)
}

/// Extreme points of the convex hull of `points`.
pub fn convex_hull(points: &[RationalVector]) -> Result<VPolytope> {
    let dim = check_uniform(points)?;
    let pts = dedup_sorted(points.to_vec());
    if pts.len() == 1 {
        return Ok(VPolytope {
            dim,
            vertices: pts,
            affine_dim: 0,
        });
    }
    let hull = affine_hull(&pts);
    let projected: Vec<Vec<Rational>> = pts.iter().map(|p| project(p, &hull.coords)).collect();
    let keep: Vec<bool> = if hull.rank == 1 {
        let lo = projected.iter().min().unwrap();
        let hi = projected.iter().max().unwrap();
        projected.iter().map(|p| p == lo || p == hi).collect()
    } else {
        let (_, incidence) = facets(&projected);
        // a point is extreme iff no other point lies on every facet it lies on
        (0..pts.len())
            .map(|i| !(0..pts.len()).any(|j| j != i && incidence[j].is_superset_of(&incidence[i])))
            .collect()
    };
    let vertices = pts
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    Ok(VPolytope {
        dim,
        vertices,
        affine_dim: hull.rank,
    })
}

impl VPolytope {
    /// Convex hull of the given points.
    pub fn from_points(points: &[RationalVector]) -> Result<Self> {
        convex_hull(points)
    }

    pub fn from_int_points(points: &[&[i64]]) -> Result<Self> {
        let pts: Vec<RationalVector> = points
            .iter()
            .map(|p| RationalVector::from_ints(p))
            .collect();
        convex_hull(&pts)
    }

    pub fn point(p: RationalVector) -> Self {
        VPolytope {
            dim: p.dim(),
            vertices: vec![p],
            affine_dim: 0,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(RationalVector::is_integral)
    }

    pub fn translate(&self, v: &RationalVector) -> Result<Self> {
        if v.dim() != self.dim {
            return Err(Error::invalid("translation vector has wrong dimension"));
        }
        let vertices = self.vertices.iter().map(|p| p + v).collect();
        Ok(VPolytope {
            vertices,
            ..self.clone()
        })
    }

    /// Image under `x ↦ M x`; `M` must be invertible so extreme points map to extreme points.
    pub fn transform(&self, m: &[Vec<Rational>]) -> Result<Self> {
        if m.len() != self.dim || m.iter().any(|r| r.len() != self.dim) {
            return Err(Error::invalid("matrix has wrong shape"));
        }
        if linalg::det(m.to_vec()).is_zero() {
            return Err(Error::invalid("matrix is singular"));
        }
        let mut vertices: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|p| RationalVector::from_vec(m.iter().map(|row| p.dot(row)).collect()))
            .collect();
        vertices.sort();
        Ok(VPolytope {
            vertices,
            ..self.clone()
        })
    }

    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        let h = vrep_to_hrep(self)?;
        Ok(h.contains(x))
    }
}

/// Minkowski sum: hull of all pairwise vertex sums.
pub fn minkowski_sum(a: &VPolytope, b: &VPolytope) -> Result<VPolytope> {
    if a.dim != b.dim {
        return Err(Error::invalid(format!(
            "dimension mismatch in Minkowski sum: {} vs {}",
            a.dim, b.dim
        )));
    }
    let sums: Vec<RationalVector> = a
        .vertices
        .iter()
        .flat_map(|p| b.vertices.iter().map(move |q| p + q))
        .collect();
    convex_hull(&sums)
}

/// Dilation by a nonnegative factor; dilation by zero is the origin.
pub fn scale(a: &VPolytope, t: &Rational) -> Result<VPolytope> {
    if t.is_negative() {
        return Err(Error::invalid("scale factor must be nonnegative"));
    }
    if t.is_zero() {
        return Ok(VPolytope::point(RationalVector::zero(a.dim)));
    }
    Ok(VPolytope {
        dim: a.dim,
        vertices: a.vertices.iter().map(|p| p.scaled(t)).collect(),
        affine_dim: a.affine_dim,
    })
}

fn normalize_inequality(normal: &[Rational], rhs: &Rational) -> Option<Inequality> {
    if normal.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = normal
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = normal.iter().map(|q| (q * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let factor = Rational::new(lcm, g.clone());
    Some(Inequality {
        normal: RationalVector::from_vec(
            ints.into_iter()
                .map(|x| Rational::from_integer(x / &g))
                .collect(),
        ),
        rhs: rhs * factor,
    })
}

impl Inequality {
    pub fn new(normal: Vec<Rational>, rhs: Rational) -> Self {
        Inequality {
            normal: RationalVector::from_vec(normal),
            rhs,
        }
    }

    pub fn satisfied_by(&self, x: &RationalVector) -> bool {
        self.normal.dot(x.coords()) <= self.rhs
    }
}

impl HPolytope {
    /// Builds an H-polytope, normalizing each inequality to a primitive integer
    /// normal and checking that the solution set is nonempty and bounded.
    pub fn new(dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("ambient dimension must be positive"));
        }
        let mut set = BTreeSet::new();
        for ineq in &inequalities {
            if ineq.normal.dim() != dim {
                return Err(Error::invalid("inequality normal has wrong dimension"));
            }
            match normalize_inequality(ineq.normal.coords(), &ineq.rhs) {
                Some(n) => {
                    set.insert(n);
                }
                None if ineq.rhs.is_negative() => {
                    return Err(Error::invalid("inequality 0 ≤ negative is infeasible"))
                }
                None => {}
            }
        }
        let inequalities: Vec<Inequality> = set.into_iter().collect();
        let vrep = enumerate_vertices(dim, &inequalities)?;
        Ok(HPolytope {
            dim,
            inequalities,
            vrep,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.inequalities.iter().all(|i| i.satisfied_by(x))
    }
}

fn enumerate_vertices(dim: usize, inequalities: &[Inequality]) -> Result<VPolytope> {
    // homogenized cone in (t, x): t ≥ 0, t·rhs − normal·x ≥ 0
    let mut rows: Vec<Vec<BigInt>> = inequalities
        .iter()
        .map(|ineq| {
            let mut row = vec![ineq.rhs.clone()];
            row.extend(ineq.normal.coords().iter().map(|x| -x));
            primitive_integer(&row)
        })
        .collect();
    let mut t_row = vec![BigInt::zero(); dim + 1];
    t_row[0] = BigInt::one();
    rows.push(t_row);
    let rays = dd::extreme_rays(&rows).map_err(|_| Error::UnboundedPolytope)?;
    let mut vertices = Vec::new();
    let mut recession = false;
    for ray in rays {
        let t = &ray.coords[0];
        if t.is_zero() {
            recession = true;
            continue;
        }
        let t = Rational::from_integer(t.clone());
        vertices.push(RationalVector::from_vec(
            ray.coords[1..]
                .iter()
                .map(|x| Rational::from_integer(x.clone()) / &t)
                .collect(),
        ));
    }
    if vertices.is_empty() {
        return Err(Error::invalid("inequalities are infeasible"));
    }
    if recession {
        return Err(Error::UnboundedPolytope);
    }
    vertices.sort();
    vertices.dedup();
    let affine_dim = if vertices.len() == 1 {
        0
    } else {
        affine_hull(&vertices).rank
    };
    Ok(VPolytope {
        dim,
        vertices,
        affine_dim,
    })
}

pub fn hrep_to_vrep(h: &HPolytope) -> VPolytope {
    h.vrep.clone()
}

/// Exact inequality description. Lower-dimensional polytopes get each affine
/// hull equation as a pair of opposite inequalities.
pub fn vrep_to_hrep(v: &VPolytope) -> Result<HPolytope> {
    let dim = v.dim;
    let mut ineqs = Vec::new();
    let base = &v.vertices[0];
    let (directions, coords) = if v.vertices.len() > 1 {
        let hull = affine_hull(&v.vertices);
        (hull.directions, hull.coords)
    } else {
        (Vec::new(), Vec::new())
    };
    for eq in linalg::nullspace(&directions, dim) {
        let normal: Vec<Rational> = primitive_integer(&eq)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let rhs = base.dot(&normal);
        ineqs.push(Inequality::new(
            normal.iter().map(|x| -x).collect(),
            -rhs.clone(),
        ));
        ineqs.push(Inequality::new(normal, rhs));
    }
    match coords.len() {
        0 => {}
        1 => {
            let c = coords[0];
            let lo = v.vertices.iter().map(|p| &p[c]).min().unwrap().clone();
            let hi = v.vertices.iter().map(|p| &p[c]).max().unwrap().clone();
            let mut e = vec![Rational::zero(); dim];
            e[c] = Rational::one();
            ineqs.push(Inequality::new(e.clone(), hi));
            ineqs.push(Inequality::new(e.iter().map(|x| -x).collect(), -lo));
        }
        _ => {
            let projected: Vec<Vec<Rational>> =
                v.vertices.iter().map(|p| project(p, &coords)).collect();
            let (fs, _) = facets(&projected);
            for f in fs {
                let mut normal = vec![Rational::zero(); dim];
                for (&c, a) in coords.iter().zip(&f.normal) {
                    normal[c] = Rational::from_integer(a.clone());
                }
                ineqs.push(Inequality::new(normal, f.rhs));
            }
        }
    }
    HPolytope::new(dim, ineqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn pts(p: &[&[i64]]) -> Vec<RationalVector> {
        p.iter().map(|x| RationalVector::from_ints(x)).collect()
    }

    #[test]
    fn hull_drops_interior_points() {
        let mut p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        p.push(RationalVector::new(vec![ratio(1, 4), ratio(1, 4)]).unwrap());
        let h = convex_hull(&p).unwrap();
        assert_eq!(h.vertices(), &pts(&[&[0, 0], &[0, 1], &[1, 0]])[..]);
        assert_eq!(h.affine_dim(), 2);
    }

    #[test]
    fn hull_of_single_point() {
        let h = convex_hull(&pts(&[&[0, 0]])).unwrap();
        assert_eq!(h.vertices().len(), 1);
        assert_eq!(h.affine_dim(), 0);
    }

    #[test]
    fn hull_of_cube_with_center() {
        let mut corners = Vec::new();
        for i in 0..8i64 {
            corners.push(RationalVector::from_ints(&[
                i & 1,
                (i >> 1) & 1,
                (i >> 2) & 1,
            ]));
        }
        let mut p = corners.clone();
        p.push(RationalVector::new(vec![ratio(1, 2); 3]).unwrap());
        let h = convex_hull(&p).unwrap();
        corners.sort();
        assert_eq!(h.vertices(), &corners[..]);
    }

    #[test]
    fn hull_errors() {
        assert!(convex_hull(&[]).is_err());
        assert!(convex_hull(&pts(&[&[0, 0], &[1]])).is_err());
    }

    #[test]
    fn collinear_and_coplanar_hulls() {
        let h = convex_hull(&pts(&[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2], &[3, 3, 3]])).unwrap();
        assert_eq!(h.vertices(), &pts(&[&[0, 0, 0], &[3, 3, 3]])[..]);
        assert_eq!(h.affine_dim(), 1);
        let h = convex_hull(&pts(&[
            &[0, 0, 1],
            &[2, 0, 1],
            &[0, 2, 1],
            &[1, 1, 1],
            &[2, 2, 1],
        ]))
        .unwrap();
        assert_eq!(h.vertices().len(), 4);
        assert_eq!(h.affine_dim(), 2);
    }

    #[test]
    fn standard_simplex_from_inequalities() {
        let h = HPolytope::new(
            2,
            vec![
                Inequality::new(vec![rat(-1), rat(0)], rat(0)),
                Inequality::new(vec![rat(0), rat(-1)], rat(0)),
                Inequality::new(vec![rat(1), rat(1)], rat(1)),
            ],
        )
        .unwrap();
        let v = hrep_to_vrep(&h);
        assert_eq!(v.vertices(), &pts(&[&[0, 0], &[0, 1], &[1, 0]])[..]);
    }

    #[test]
    fn unbounded_and_infeasible() {
        let quadrant = HPolytope::new(
            2,
            vec![
                Inequality::new(vec![rat(-1), rat(0)], rat(0)),
                Inequality::new(vec![rat(0), rat(-1)], rat(0)),
            ],
        );
        assert_eq!(quadrant.unwrap_err(), Error::UnboundedPolytope);
        let strip = HPolytope::new(
            2,
            vec![
                Inequality::new(vec![rat(-1), rat(0)], rat(0)),
                Inequality::new(vec![rat(1), rat(0)], rat(1)),
            ],
        );
        assert_eq!(strip.unwrap_err(), Error::UnboundedPolytope);
        let empty = HPolytope::new(
            1,
            vec![
                Inequality::new(vec![rat(1)], rat(0)),
                Inequality::new(vec![rat(-1)], rat(-1)),
            ],
        );
        assert!(matches!(empty, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn unit_square_has_four_facets() {
        let sq = VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let h = vrep_to_hrep(&sq).unwrap();
        assert_eq!(h.inequalities().len(), 4);
        assert_eq!(hrep_to_vrep(&h), sq);
    }

    #[test]
    fn lower_dimensional_round_trip() {
        let seg = VPolytope::from_int_points(&[&[0, 0, 0], &[1, 2, 3]]).unwrap();
        let h = vrep_to_hrep(&seg).unwrap();
        assert_eq!(hrep_to_vrep(&h), seg);
        let tri = VPolytope::from_int_points(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(hrep_to_vrep(&vrep_to_hrep(&tri).unwrap()), tri);
        let pt = VPolytope::from_int_points(&[&[2, -1]]).unwrap();
        assert_eq!(hrep_to_vrep(&vrep_to_hrep(&pt).unwrap()), pt);
    }

    #[test]
    fn minkowski_examples() {
        let sq = VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let big = VPolytope::from_int_points(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]).unwrap();
        assert_eq!(minkowski_sum(&sq, &sq).unwrap(), big);
        let sx = VPolytope::from_int_points(&[&[0, 0], &[1, 0]]).unwrap();
        let sy = VPolytope::from_int_points(&[&[0, 0], &[0, 1]]).unwrap();
        assert_eq!(minkowski_sum(&sx, &sy).unwrap(), sq);
        let origin = VPolytope::point(RationalVector::zero(2));
        assert_eq!(minkowski_sum(&sq, &origin).unwrap(), sq);
        assert!(minkowski_sum(&sq, &VPolytope::point(RationalVector::zero(3))).is_err());
    }

    #[test]
    fn scaling() {
        let seg = VPolytope::from_int_points(&[&[0], &[1]]).unwrap();
        assert_eq!(
            scale(&seg, &rat(3)).unwrap(),
            VPolytope::from_int_points(&[&[0], &[3]]).unwrap()
        );
        assert_eq!(scale(&seg, &rat(1)).unwrap(), seg);
        assert_eq!(scale(&seg, &rat(0)).unwrap().vertices().len(), 1);
        assert!(scale(&seg, &rat(-1)).is_err());
    }
}
