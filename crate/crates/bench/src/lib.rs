//! Fixed inputs shared by the benchmarks.

use intnum_core::{RationalVector, VPolytope};

pub fn polytope(points: &[&[i64]]) -> VPolytope {
    let pts: Vec<RationalVector> = points
        .iter()
        .map(|p| RationalVector::from_ints(p))
        .collect();
    VPolytope::from_points(&pts).unwrap()
}

/// Unit cube `[0,1]^n`.
pub fn cube(n: usize) -> VPolytope {
    let pts: Vec<RationalVector> = (0..1u32 << n)
        .map(|mask| {
            let v: Vec<i64> = (0..n).map(|i| i64::from(mask >> i & 1)).collect();
            RationalVector::from_ints(&v)
        })
        .collect();
    VPolytope::from_points(&pts).unwrap()
}

/// Cross-polytope `conv(±e_i)`.
pub fn cross_polytope(n: usize) -> VPolytope {
    let pts: Vec<RationalVector> = (0..n)
        .flat_map(|i| {
            [1, -1].map(|s| {
                let mut v = vec![0; n];
                v[i] = s;
                RationalVector::from_ints(&v)
            })
        })
        .collect();
    VPolytope::from_points(&pts).unwrap()
}

/// Standard simplex scaled by `d`.
pub fn simplex(n: usize, d: i64) -> VPolytope {
    let mut pts = vec![RationalVector::zero(n)];
    pts.extend((0..n).map(|i| {
        let mut v = vec![0; n];
        v[i] = d;
        RationalVector::from_ints(&v)
    }));
    VPolytope::from_points(&pts).unwrap()
}
