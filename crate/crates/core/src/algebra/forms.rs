use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{minkowski_sum, volume, VPolytope};
use crate::rational::{binomial, factorial, Rational, RationalVector};

/// Nonnegative exponent vector over the generators.
pub type Monomial = Vec<u32>;

/// All exponent vectors of total degree `k` in `s` symbols, in decreasing
/// lexicographic order (`x₁^k` first).
pub fn monomials(s: usize, k: usize) -> Vec<Monomial> {
    fn rec(s: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == s {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(s, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if s > 0 {
        rec(s, k as u32, &mut Vec::with_capacity(s), &mut out);
    }
    out
}

fn degree_of(m: &[u32]) -> usize {
    m.iter().map(|&a| a as usize).sum()
}

/// `α! = ∏ αᵢ!`
fn multi_factorial(m: &[u32]) -> BigInt {
    m.iter().map(|&a| factorial(a as usize)).product()
}

/// `n! / α!` with `n = |α|`.
pub fn multinomial(m: &[u32]) -> BigInt {
    factorial(degree_of(m)) / multi_factorial(m)
}

/// Symmetric `n`-linear form on ℚ^s, stored by multi-index: `values[α]` is the
/// value on the tuple containing generator `i` exactly `αᵢ` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    generators: usize,
    degree: usize,
    values: BTreeMap<Monomial, Rational>,
}

impl SymmetricForm {
    /// Zero entries are dropped; a form with no nonzero entry is rejected.
    pub fn new(
        generators: usize,
        degree: usize,
        values: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        if generators == 0 {
            return Err(Error::invalid("a form needs at least one generator"));
        }
        let mut map = BTreeMap::new();
        for (alpha, v) in values {
            if alpha.len() != generators || degree_of(&alpha) != degree {
                return Err(Error::invalid(format!(
                    "multi-index {alpha:?} is not of degree {degree} in {generators} symbols"
                )));
            }
            if !v.is_zero() {
                map.insert(alpha, v);
            }
        }
        if map.is_empty() {
            return Err(Error::ZeroForm);
        }
        Ok(SymmetricForm {
            generators,
            degree,
            values: map,
        })
    }

    /// `n!` times the polarization of a degree-`n` form: `F_α = ∂^α P`.
    pub fn from_polynomial(p: &HomogeneousForm) -> Result<Self> {
        let values = monomials(p.vars, p.degree)
            .into_iter()
            .map(|alpha| {
                let v = p.coefficient(&alpha) * Rational::from_integer(multi_factorial(&alpha));
                (alpha, v)
            })
            .collect::<Vec<_>>();
        Self::new(p.vars, p.degree, values)
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, alpha: &[u32]) -> Rational {
        self.values
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero entries.
    pub fn values(&self) -> &BTreeMap<Monomial, Rational> {
        &self.values
    }

    /// `F(x, …, x)` for `x ∈ ℚ^s`.
    pub fn diagonal(&self, x: &[Rational]) -> Rational {
        self.values
            .iter()
            .map(|(alpha, v)| v * Rational::from_integer(multinomial(alpha)) * power(x, alpha))
            .sum()
    }
}

fn power(x: &[Rational], alpha: &[u32]) -> Rational {
    x.iter().zip(alpha).fold(Rational::one(), |acc, (xi, &a)| {
        acc * num_traits::pow(xi.clone(), a as usize)
    })
}

/// Homogeneous polynomial in `vars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousForm {
    vars: usize,
    degree: usize,
    coeffs: BTreeMap<Monomial, Rational>,
}

impl HomogeneousForm {
    pub fn new(
        vars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        if vars == 0 {
            return Err(Error::invalid("a form needs at least one variable"));
        }
        let mut coeffs: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.len() != vars || degree_of(&m) != degree {
                return Err(Error::invalid(format!(
                    "monomial {m:?} is not of degree {degree} in {vars} variables"
                )));
            }
            *coeffs.entry(m).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(HomogeneousForm {
            vars,
            degree,
            coeffs,
        })
    }

    pub fn zero(vars: usize, degree: usize) -> Self {
        HomogeneousForm {
            vars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, m: &[u32]) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(m, c)| c * power(x, m)).sum()
    }

    /// Coefficients listed against `monomials(vars, degree)`.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        monomials(self.vars, self.degree)
            .iter()
            .map(|m| self.coefficient(m))
            .collect()
    }
}

/// Constant-coefficient differential operator `∂^β`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffOperatorMonomial {
    pub exponent: Monomial,
}

impl DiffOperatorMonomial {
    pub fn new(exponent: Monomial) -> Self {
        DiffOperatorMonomial { exponent }
    }

    pub fn order(&self) -> usize {
        degree_of(&self.exponent)
    }

    /// Operator of the product `∂^β ∂^γ`.
    pub fn compose(&self, other: &DiffOperatorMonomial) -> DiffOperatorMonomial {
        DiffOperatorMonomial::new(
            self.exponent
                .iter()
                .zip(&other.exponent)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Exact partial differentiation `∂^β P`. The result has degree `deg P − |β|`,
/// or is the zero form when `|β| > deg P`.
pub fn apply_operator(op: &DiffOperatorMonomial, p: &HomogeneousForm) -> Result<HomogeneousForm> {
    if op.exponent.len() != p.vars {
        return Err(Error::ShapeMismatch(format!(
            "operator has {} symbols, form has {} variables",
            op.exponent.len(),
            p.vars
        )));
    }
    let order = op.order();
    if order > p.degree {
        return Ok(HomogeneousForm::zero(p.vars, 0));
    }
    let mut out = BTreeMap::new();
    for (m, c) in &p.coeffs {
        if m.iter().zip(&op.exponent).any(|(a, b)| a < b) {
            continue;
        }
        // ∂^β x^α = α!/(α−β)! x^(α−β)
        let mut factor = BigInt::one();
        let mut rest = Vec::with_capacity(m.len());
        for (&a, &b) in m.iter().zip(&op.exponent) {
            for t in 0..b {
                factor *= BigInt::from(a - t);
            }
            rest.push(a - b);
        }
        out.insert(rest, c * Rational::from_integer(factor));
    }
    HomogeneousForm::new(p.vars, p.degree - order, out)
}

/// `P(x) = (1/n!) Σ_{|α|=n} (n choose α) F_α x^α`.
pub fn volume_polynomial(f: &SymmetricForm) -> HomogeneousForm {
    let n_fact = Rational::from_integer(factorial(f.degree));
    let terms = f.values.iter().map(|(alpha, v)| {
        (
            alpha.clone(),
            v * Rational::from_integer(multinomial(alpha)) / &n_fact,
        )
    });
    HomogeneousForm::new(f.generators, f.degree, terms).expect("form entries are well shaped")
}

/// Intersection-number tensor `F_α = n!·V(Δ₁^{α₁},…,Δ_s^{α_s})` of generator
/// polytopes in ℚⁿ, by polarization over sub-multisets:
///
/// `F_α = Σ_{0≠μ≤α} (−1)^{n−|μ|} ∏ C(αᵢ,μᵢ) · vol(Σ μᵢΔᵢ)`.
pub fn mixed_volume_tensor(generators: &[VPolytope]) -> Result<SymmetricForm> {
    let s = generators.len();
    if s == 0 {
        return Err(Error::invalid(
            "at least one generator polytope is required",
        ));
    }
    let n = generators[0].ambient_dim();
    if generators.iter().any(|g| g.ambient_dim() != n) {
        return Err(Error::invalid(
            "generator polytopes live in different dimensions",
        ));
    }
    let mut sums: HashMap<Monomial, VPolytope> = HashMap::new();
    sums.insert(vec![0; s], VPolytope::point(RationalVector::zero(n)));
    let mut vols: HashMap<Monomial, Rational> = HashMap::new();

    // all μ with |μ| ≤ n, in order of increasing degree so each sum extends a known one
    for k in 1..=n {
        for mu in monomials(s, k) {
            let j = mu.iter().rposition(|&a| a > 0).unwrap();
            let mut prev = mu.clone();
            prev[j] -= 1;
            let sum = minkowski_sum(&sums[&prev], &generators[j])?;
            vols.insert(mu.clone(), volume(&sum));
            sums.insert(mu, sum);
        }
    }

    let values = monomials(s, n).into_iter().map(|alpha| {
        let mut total = Rational::zero();
        for k in 1..=n {
            for mu in monomials(s, k) {
                if mu.iter().zip(&alpha).any(|(m, a)| m > a) {
                    continue;
                }
                let weight: BigInt = mu
                    .iter()
                    .zip(&alpha)
                    .map(|(&m, &a)| binomial(a as usize, m as usize))
                    .product();
                let term = &vols[&mu] * Rational::from_integer(weight);
                if (n - k).is_multiple_of(2) {
                    total += term;
                } else {
                    total -= term;
                }
            }
        }
        (alpha, total)
    });
    SymmetricForm::new(s, n, values.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn triangle() -> VPolytope {
        VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap()
    }

    fn axis_segments() -> Vec<VPolytope> {
        vec![
            VPolytope::from_int_points(&[&[0, 0], &[1, 0]]).unwrap(),
            VPolytope::from_int_points(&[&[0, 0], &[0, 1]]).unwrap(),
        ]
    }

    #[test]
    fn monomial_order() {
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 4), vec![vec![4]]);
    }

    #[test]
    fn tensor_of_triangle() {
        let f = mixed_volume_tensor(&[triangle()]).unwrap();
        assert_eq!(f.get(&[2]), rat(1));
    }

    #[test]
    fn tensor_of_axis_segments() {
        let f = mixed_volume_tensor(&axis_segments()).unwrap();
        assert_eq!(f.get(&[2, 0]), rat(0));
        assert_eq!(f.get(&[1, 1]), rat(1));
        assert_eq!(f.get(&[0, 2]), rat(0));
    }

    #[test]
    fn degenerate_generator_gives_zero_form() {
        let seg = VPolytope::from_int_points(&[&[0, 0], &[1, 1]]).unwrap();
        assert_eq!(mixed_volume_tensor(&[seg]).unwrap_err(), Error::ZeroForm);
        assert_eq!(
            SymmetricForm::new(2, 2, monomials(2, 2).into_iter().map(|m| (m, rat(0)))).unwrap_err(),
            Error::ZeroForm
        );
    }

    #[test]
    fn volume_polynomials() {
        let p = volume_polynomial(&mixed_volume_tensor(&[triangle()]).unwrap());
        assert_eq!(
            p,
            HomogeneousForm::new(1, 2, [(vec![2], ratio(1, 2))]).unwrap()
        );
        let p = volume_polynomial(&mixed_volume_tensor(&axis_segments()).unwrap());
        assert_eq!(
            p,
            HomogeneousForm::new(2, 2, [(vec![1, 1], rat(1))]).unwrap()
        );
        assert_eq!(p.eval(&[rat(2), rat(3)]), rat(6));
    }

    #[test]
    fn differentiation() {
        let half_square = HomogeneousForm::new(1, 2, [(vec![2], ratio(1, 2))]).unwrap();
        let d = apply_operator(&DiffOperatorMonomial::new(vec![2]), &half_square).unwrap();
        assert_eq!(d, HomogeneousForm::new(1, 0, [(vec![0], rat(1))]).unwrap());
        let xy = HomogeneousForm::new(2, 2, [(vec![1, 1], rat(1))]).unwrap();
        let d = apply_operator(&DiffOperatorMonomial::new(vec![1, 1]), &xy).unwrap();
        assert_eq!(d.coefficient(&[0, 0]), rat(1));
        let d = apply_operator(&DiffOperatorMonomial::new(vec![2, 0]), &xy).unwrap();
        assert!(d.is_zero());
        let d = apply_operator(&DiffOperatorMonomial::new(vec![3, 0]), &xy).unwrap();
        assert!(d.is_zero());
        assert!(apply_operator(&DiffOperatorMonomial::new(vec![1]), &xy).is_err());
    }

    #[test]
    fn polarization_round_trip() {
        let f = mixed_volume_tensor(&axis_segments()).unwrap();
        let p = volume_polynomial(&f);
        assert_eq!(SymmetricForm::from_polynomial(&p).unwrap(), f);
        assert_eq!(f.diagonal(&[rat(2), rat(3)]), rat(12));
    }
}
