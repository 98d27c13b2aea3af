use num_traits::Zero;

use super::polytope::{minkowski_sum, VPolytope};
use super::volume::volume;
use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

/// Mixed volume `V(K₁,…,Kₙ)` of `n` polytopes in ℚⁿ, normalized so that
/// `V(K,…,K) = vol(K)`, via the polarization identity
///
/// `n!·V = Σ_{∅≠S⊆[n]} (−1)^{n−|S|} vol(Σ_{i∈S} K_i)`.
pub fn mixed_volume(ks: &[VPolytope]) -> Result<Rational> {
    let n = ks.len();
    if n == 0 {
        return Err(Error::invalid("mixed volume needs at least one polytope"));
    }
    if let Some(k) = ks.iter().find(|k| k.ambient_dim() != n) {
        return Err(Error::invalid(format!(
            "mixed volume of {n} polytopes needs ambient dimension {n}, got {}",
            k.ambient_dim()
        )));
    }
    // sums[mask] = Σ_{i∈mask} K_i, built from the sum without the highest bit
    let mut sums: Vec<Option<VPolytope>> = vec![None; 1 << n];
    let mut total = Rational::zero();
    for mask in 1usize..(1 << n) {
        let high = usize::BITS - 1 - mask.leading_zeros();
        let rest = mask & !(1 << high);
        let sum = match &sums[rest] {
            None => ks[high as usize].clone(),
            Some(p) => minkowski_sum(p, &ks[high as usize])?,
        };
        let vol = volume(&sum);
        if (n - mask.count_ones() as usize).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
        sums[mask] = Some(sum);
    }
    Ok(total / Rational::from_integer(factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polytope::scale;
    use crate::rational::{rat, ratio};

    fn triangle() -> VPolytope {
        VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap()
    }

    #[test]
    fn diagonal_square() {
        let sq = VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(mixed_volume(&[sq.clone(), sq]).unwrap(), rat(1));
    }

    #[test]
    fn axis_segments() {
        let sx = VPolytope::from_int_points(&[&[0, 0], &[1, 0]]).unwrap();
        let sy = VPolytope::from_int_points(&[&[0, 0], &[0, 1]]).unwrap();
        assert_eq!(mixed_volume(&[sx, sy]).unwrap(), ratio(1, 2));
    }

    #[test]
    fn bezout_triangles() {
        for d1 in 1..=3 {
            for d2 in 1..=3 {
                let a = scale(&triangle(), &rat(d1)).unwrap();
                let b = scale(&triangle(), &rat(d2)).unwrap();
                assert_eq!(mixed_volume(&[a, b]).unwrap(), ratio(d1 * d2, 2));
            }
        }
    }

    #[test]
    fn minkowski_of_triangles() {
        let t = triangle();
        let s = minkowski_sum(&t, &scale(&t, &rat(2)).unwrap()).unwrap();
        assert_eq!(s, scale(&t, &rat(3)).unwrap());
        assert_eq!(volume(&s), ratio(9, 2));
    }

    #[test]
    fn wrong_shape() {
        assert!(mixed_volume(&[]).is_err());
        assert!(mixed_volume(&[triangle()]).is_err());
    }
}
