//! Gelfand–Tsetlin polytopes of GL(m) flag varieties, their degrees, and the
//! Weyl dimension formula as an independent check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{hrep_to_vrep, volume, HPolytope, Inequality};
use crate::rational::{factorial, Rational};

/// Highest weight `λ₁ ≥ … ≥ λ_m` of GL(m).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    lambda: Vec<i64>,
}

impl DominantWeight {
    pub fn new(lambda: Vec<i64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::invalid("weights need m ≥ 1 entries"));
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(lambda));
        }
        Ok(DominantWeight { lambda })
    }

    pub fn m(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// All inequalities strict.
    pub fn is_strictly_dominant(&self) -> bool {
        self.lambda.windows(2).all(|w| w[0] > w[1])
    }

    /// Dimension of the flag variety, `m(m−1)/2`.
    pub fn flag_dimension(&self) -> usize {
        self.m() * (self.m() - 1) / 2
    }

    fn require_ample(&self) -> Result<()> {
        if self.is_strictly_dominant() {
            Ok(())
        } else {
            Err(Error::NotAmple(self.lambda.clone()))
        }
    }
}

/// Index of `x_{r,i}` (row `r < m`, `0 ≤ i < r`) among the free coordinates,
/// rows listed from `m−1` down to `1`.
fn coordinate(m: usize, r: usize, i: usize) -> usize {
    // rows m−1, …, r+1 come first
    let before: usize = (r + 1..m).sum();
    before + i
}

/// Interlacing inequalities `x_{r+1,i} ≥ x_{r,i} ≥ x_{r+1,i+1}` with the top
/// row fixed to `λ`, in the `N = m(m−1)/2` free coordinates.
pub fn gt_hrep(w: &DominantWeight) -> Result<HPolytope> {
    let m = w.m();
    if m < 2 {
        return Err(Error::invalid("GT polytopes need m ≥ 2"));
    }
    let n = w.flag_dimension();
    let mut ineqs = Vec::with_capacity(2 * n);
    for r in (1..m).rev() {
        for i in 0..r {
            let me = coordinate(m, r, i);
            // upper: x_{r,i} − x_{r+1,i} ≤ 0, lower: x_{r+1,i+1} − x_{r,i} ≤ 0
            for (above, sign) in [(i, 1i64), (i + 1, -1i64)] {
                let mut normal = vec![Rational::zero(); n];
                normal[me] = Rational::from_integer(sign.into());
                let rhs = if r + 1 == m {
                    Rational::from_integer((sign * w.lambda[above]).into())
                } else {
                    normal[coordinate(m, r + 1, above)] = Rational::from_integer((-sign).into());
                    Rational::zero()
                };
                ineqs.push(Inequality::new(normal, rhs));
            }
        }
    }
    HPolytope::new(n, ineqs)
}

/// `N!·vol(GT(λ))`.
pub fn flag_degree_via_gt(w: &DominantWeight) -> Result<BigInt> {
    w.require_ample()?;
    let poly = hrep_to_vrep(&gt_hrep(w)?);
    let degree = volume(&poly) * Rational::from_integer(factorial(w.flag_dimension()));
    if !degree.is_integer() {
        return Err(Error::NonIntegerDegree(crate::format_rational(&degree)));
    }
    Ok(degree.to_integer())
}

/// `N!·∏_{i<j} (λᵢ−λⱼ)/(j−i)`, the leading coefficient of `dim V(kλ)` in `k`
/// scaled by `N!`.
pub fn flag_degree_via_weyl(w: &DominantWeight) -> Result<BigInt> {
    w.require_ample()?;
    let m = w.m();
    let mut product = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            product *= Rational::new(BigInt::from(w.lambda[i] - w.lambda[j]), BigInt::from(j - i));
        }
    }
    let degree = product * Rational::from_integer(factorial(w.flag_dimension()));
    if !degree.is_integer() {
        return Err(Error::NonIntegerDegree(crate::format_rational(&degree)));
    }
    Ok(degree.to_integer())
}

/// `∏_{i<j} (λᵢ−λⱼ+j−i)/(j−i)`.
pub fn weyl_dim(w: &DominantWeight) -> BigInt {
    let m = w.m();
    let mut product = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            product *= Rational::new(
                BigInt::from(w.lambda[i] - w.lambda[j] + (j - i) as i64),
                BigInt::from(j - i),
            );
        }
    }
    debug_assert!(product.is_integer());
    product.to_integer()
}

/// Number of integer GT patterns with top row `λ`, by row-by-row recursion.
pub fn count_lattice_points(w: &DominantWeight) -> BigInt {
    fn below(row: &[i64], memo: &mut HashMap<Vec<i64>, BigInt>) -> BigInt {
        if row.len() <= 1 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(row) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut next = Vec::with_capacity(row.len() - 1);
        fn fill(
            row: &[i64],
            next: &mut Vec<i64>,
            total: &mut BigInt,
            memo: &mut HashMap<Vec<i64>, BigInt>,
        ) {
            let i = next.len();
            if i + 1 == row.len() {
                let sub = below(next, memo);
                *total += sub;
                return;
            }
            for x in row[i + 1]..=row[i] {
                next.push(x);
                fill(row, next, total, memo);
                next.pop();
            }
        }
        fill(row, &mut next, &mut total, memo);
        memo.insert(row.to_vec(), total.clone());
        total
    }
    below(&w.lambda, &mut HashMap::new())
}

/// Degree pair from both routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub via_gt: BigInt,
    pub via_weyl: BigInt,
}

impl DegreeReport {
    pub fn compute(w: &DominantWeight) -> Result<Self> {
        Ok(DegreeReport {
            via_gt: flag_degree_via_gt(w)?,
            via_weyl: flag_degree_via_weyl(w)?,
        })
    }

    pub fn matches(&self) -> bool {
        self.via_gt == self.via_weyl
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i64]) -> DominantWeight {
        DominantWeight::new(l.to_vec()).unwrap()
    }

    #[test]
    fn not_dominant() {
        assert_eq!(
            DominantWeight::new(vec![0, 1]).unwrap_err(),
            Error::NotDominant(vec![0, 1])
        );
        assert!(w(&[1, 1, 0]).flag_dimension() == 3);
        assert!(!w(&[1, 1, 0]).is_strictly_dominant());
    }

    #[test]
    fn rank_one_interval() {
        let h = gt_hrep(&w(&[5, 2])).unwrap();
        let v = hrep_to_vrep(&h);
        let ends: Vec<_> = v.vertices().iter().map(|p| p[0].clone()).collect();
        assert_eq!(
            ends,
            vec![
                Rational::from_integer(2.into()),
                Rational::from_integer(5.into())
            ]
        );
    }

    #[test]
    fn gt_dimensions() {
        let v = hrep_to_vrep(&gt_hrep(&w(&[2, 1, 0])).unwrap());
        assert_eq!(v.ambient_dim(), 3);
        assert!(v.is_full_dimensional());
        assert_eq!(volume(&v), Rational::one());
        let v = hrep_to_vrep(&gt_hrep(&w(&[1, 1, 0])).unwrap());
        assert!(!v.is_full_dimensional());
    }

    #[test]
    fn degrees() {
        for d in 1..=5 {
            assert_eq!(flag_degree_via_gt(&w(&[d, 0])).unwrap(), BigInt::from(d));
            assert_eq!(flag_degree_via_weyl(&w(&[d, 0])).unwrap(), BigInt::from(d));
        }
        assert_eq!(flag_degree_via_gt(&w(&[2, 1, 0])).unwrap(), BigInt::from(6));
        assert_eq!(
            flag_degree_via_weyl(&w(&[3, 1, 0])).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(
            flag_degree_via_gt(&w(&[3, 1, 0])).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(
            flag_degree_via_gt(&w(&[1, 1, 0])).unwrap_err(),
            Error::NotAmple(vec![1, 1, 0])
        );
        assert!(flag_degree_via_weyl(&w(&[1, 1, 0])).is_err());
    }

    #[test]
    fn dimensions() {
        for d in 0..=4 {
            assert_eq!(weyl_dim(&w(&[d, 0])), BigInt::from(d + 1));
            assert_eq!(count_lattice_points(&w(&[d, 0])), BigInt::from(d + 1));
        }
        assert_eq!(weyl_dim(&w(&[1, 0, 0])), BigInt::from(3));
        assert_eq!(count_lattice_points(&w(&[1, 0, 0])), BigInt::from(3));
        assert_eq!(weyl_dim(&w(&[2, 1, 0])), BigInt::from(8));
        assert_eq!(count_lattice_points(&w(&[2, 1, 0])), BigInt::from(8));
        assert_eq!(count_lattice_points(&w(&[7])), BigInt::one());
    }
}
