//! Double description method for pointed polyhedral cones `{y : A y ≥ 0}`.
//!
//! Rows are inserted in the order given. Rays are primitive integer vectors and
//! adjacency is decided by the combinatorial zero-set test.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::EchelonBasis;
use crate::rational::{primitive, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    pub(crate) fn is_superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Ray {
    pub coords: Vec<BigInt>,
    /// Constraint indices (into the input row list) on which the ray vanishes.
    pub zeros: Bits,
}

#[derive(Debug)]
pub(crate) enum DdError {
    /// The rows do not have full column rank, so the cone has a lineality space.
    NotPointed,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{y : rows · y ≥ 0}`. An empty result means the cone is `{0}`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Result<Vec<Ray>, DdError> {
    let m = rows.len();
    let dim = rows.first().map_or(0, Vec::len);
    if dim == 0 {
        return Err(DdError::NotPointed);
    }

    let mut basis = EchelonBasis::new();
    let mut initial = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        let q: Vec<Rational> = row.iter().cloned().map(Rational::from_integer).collect();
        if basis.insert(&q) {
            initial.push(i);
            if initial.len() == dim {
                break;
            }
        }
    }
    if initial.len() < dim {
        return Err(DdError::NotPointed);
    }

    // Columns of the inverse of the initial block are the rays of the simplicial start cone.
    let block: Vec<Vec<Rational>> = initial
        .iter()
        .map(|&i| {
            rows[i]
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();
    let inverse = invert(&block);
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<Rational> = inverse.iter().map(|row| row[j].clone()).collect();
            let coords = crate::rational::primitive_integer(&col);
            let mut zeros = Bits::new(m);
            for (k, &i) in initial.iter().enumerate() {
                if k != j {
                    zeros.set(i);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if initial.contains(&i) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next = Vec::with_capacity(rays.len());
        for (k, v) in values.iter().enumerate() {
            if v.is_positive() {
                pos.push(k);
            } else if v.is_negative() {
                neg.push(k);
            }
        }
        if neg.is_empty() {
            for (ray, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    ray.zeros.set(i);
                }
            }
            continue;
        }
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != n && r.zeros.is_superset_of(&common));
                if blocked {
                    continue;
                }
                let coords: Vec<BigInt> = rays[n]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(yn, yp)| &values[p] * yn - &values[n] * yp)
                    .collect();
                let mut zeros = common;
                zeros.set(i);
                created.push(Ray {
                    coords: primitive(coords),
                    zeros,
                });
            }
        }
        for (k, mut ray) in rays.into_iter().enumerate() {
            if values[k].is_negative() {
                continue;
            }
            if values[k].is_zero() {
                ray.zeros.set(i);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }
    Ok(rays)
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = crate::linalg::rref(&mut aug);
    debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
    aug.into_iter().map(|r| r[n..].to_vec()).collect()
}
