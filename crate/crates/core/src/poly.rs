//! Dense univariate polynomials over ℚ.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::rational::{primitive_integer, Rational};

const SQUAREFREE_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

/// Coefficients from the constant term upwards, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c · t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Removes the largest power of `t` dividing the polynomial.
    pub fn strip_variable_powers(&self) -> Self {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        UniPoly::new(self.coeffs[k..].to_vec())
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Tries a few primes first: squarefree mod `p` without a drop in degree
    /// implies squarefree over ℚ. Falls back to the exact gcd.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let ints = primitive_integer(&self.coeffs);
        if SQUAREFREE_PRIMES
            .iter()
            .any(|&p| squarefree_mod(&ints, p) == Some(true))
        {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn pow(&self, k: usize) -> UniPoly {
        (0..k).fold(UniPoly::constant(Rational::one()), |acc, _| &acc * self)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                    match rhs.coeffs.get(k) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

/// Fraction-free (Bareiss) determinant of a matrix over ℚ[t].
pub fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::constant(Rational::one());
    }
    let mut negate = false;
    let mut prev = UniPoly::constant(Rational::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return UniPoly::zero();
            };
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = mul_mod(*a.last().unwrap(), lead_inv, p);
        for (i, &c) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - mul_mod(f, c, p)) % p;
        }
        trim_mod(&mut a);
    }
    a
}

/// `None` when the leading coefficient vanishes mod `p`.
fn squarefree_mod(coeffs: &[BigInt], p: u64) -> Option<bool> {
    let pb = BigInt::from(p);
    let mut f: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let r = c % &pb;
            let r = if r < BigInt::zero() { r + &pb } else { r };
            r.to_u64().expect("residue fits")
        })
        .collect();
    trim_mod(&mut f);
    if f.len() != coeffs.len() || (f.len() as u64) > p {
        return None;
    }
    let mut d: Vec<u64> = (1..f.len()).map(|i| mul_mod(f[i], i as u64, p)).collect();
    trim_mod(&mut d);
    let mut a = f;
    while !d.is_empty() {
        let r = rem_mod(a, &d, p);
        a = d;
        d = r;
    }
    Some(a.len() == 1)
}

/// Sylvester resultant of `f = Σ f_k y^k` and `g = Σ g_k y^k` with
/// coefficients in ℚ[t]. Coefficient lists must have nonzero leading entries.
pub fn sylvester_resultant(f: &[UniPoly], g: &[UniPoly]) -> UniPoly {
    let p = f.len().saturating_sub(1);
    let q = g.len().saturating_sub(1);
    let size = p + q;
    if size == 0 {
        return UniPoly::constant(Rational::one());
    }
    let mut m = vec![vec![UniPoly::zero(); size]; size];
    for r in 0..q {
        for (k, c) in f.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..p {
        for (k, c) in g.iter().rev().enumerate() {
            m[q + r][r + k] = c.clone();
        }
    }
    bareiss_det(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        let (q, r) = p(&[-1, 0, 1]).div_rem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(p(&[0, 0, 3, 1]).strip_variable_powers(), p(&[3, 1]));
        assert_eq!(p(&[1, 2, 1]).gcd(&p(&[1, 1])), p(&[1, 1]));
        assert!(!p(&[1, 2, 1]).is_squarefree());
        assert!(p(&[-1, 0, 1]).is_squarefree());
        assert!(p(&[5]).is_squarefree());
        assert!(!UniPoly::zero().is_squarefree());
        // (t − 2)²(t + 1) and t(t − 1)(t + 3)
        assert!(!p(&[4, 0, -3, 1]).is_squarefree());
        assert!(p(&[0, -3, 2, 1]).is_squarefree());
        assert!(
            squarefree_mod(&[BigInt::from(1), BigInt::from(2), BigInt::from(1)], 7) == Some(false)
        );
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res_y(y - t, y - 2) = 2 - t  up to sign
        let f = vec![p(&[0, -1]), p(&[1])];
        let g = vec![p(&[-2]), p(&[1])];
        let r = sylvester_resultant(&f, &g);
        assert_eq!(r.degree(), Some(1));
        assert!(r.eval(&rat(2)).is_zero());
        // Res(y^2 - t, y - 1) vanishes at t = 1
        let f = vec![p(&[0, -1]), p(&[0]), p(&[1])];
        let r = sylvester_resultant(&f, &g_one());
        assert!(r.eval(&rat(1)).is_zero());
    }

    fn g_one() -> Vec<UniPoly> {
        vec![p(&[-1]), p(&[1])]
    }

    #[test]
    fn polynomial_bareiss_matches_evaluation() {
        let m = vec![
            vec![p(&[1, 1]), p(&[2]), p(&[0, 0, 1])],
            vec![p(&[3]), p(&[0, 1]), p(&[1])],
            vec![p(&[1, -1]), p(&[4]), p(&[2, 1])],
        ];
        let d = bareiss_det(m.clone());
        for x in -3..=3 {
            let x = rat(x);
            let num: Vec<Vec<Rational>> = m
                .iter()
                .map(|row| row.iter().map(|e| e.eval(&x)).collect())
                .collect();
            assert_eq!(d.eval(&x), crate::linalg::det(num));
        }
    }
}
