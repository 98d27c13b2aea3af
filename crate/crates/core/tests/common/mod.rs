#![allow(dead_code)]

use proptest::prelude::*;

use intnum_core::{Rational, RationalVector, VPolytope};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn lattice_points(n: usize, max_pts: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=max_pts)
}

pub fn to_polytope(pts: &[Vec<i64>]) -> VPolytope {
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    VPolytope::from_int_points(&refs).unwrap()
}

pub fn lattice_polytope(n: usize, max_pts: usize) -> impl Strategy<Value = VPolytope> {
    lattice_points(n, max_pts).prop_map(|p| to_polytope(&p))
}

/// Full-dimensional lattice polytope: a random point set plus a unit simplex at a random corner.
pub fn full_lattice_polytope(n: usize, max_pts: usize) -> impl Strategy<Value = VPolytope> {
    (
        lattice_points(n, max_pts),
        prop::collection::vec(-2i64..=1, n),
    )
        .prop_map(move |(mut p, c)| {
            p.push(c.clone());
            for i in 0..n {
                let mut e = c.clone();
                e[i] += 1;
                p.push(e);
            }
            to_polytope(&p)
        })
}

/// Product of shears and a sign flip; determinant ±1.
pub fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (
        prop::collection::vec((0..n, 0..n, -2i64..=2), 0..6),
        0..n,
        any::<bool>(),
    )
        .prop_map(move |(shears, flip, neg)| {
            let mut m: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            for (i, j, k) in shears {
                if i == j {
                    continue;
                }
                // row_i += k·row_j
                let rj = m[j].clone();
                for (a, b) in m[i].iter_mut().zip(rj) {
                    *a += k * b;
                }
            }
            if neg {
                for a in m[flip].iter_mut() {
                    *a = -*a;
                }
            }
            m
        })
}

pub fn to_rational_matrix(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|&a| q(a)).collect())
        .collect()
}

pub fn int_vector(n: usize) -> impl Strategy<Value = RationalVector> {
    prop::collection::vec(-3i64..=3, n).prop_map(|v| RationalVector::from_ints(&v))
}
