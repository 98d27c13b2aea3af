//! Newton polytopes of Laurent polynomials and BKK intersection numbers,
//! together with resultant-based root-count oracles in one and two variables.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{mixed_volume, VPolytope};
use crate::poly::{sylvester_resultant, UniPoly};
use crate::rational::{binomial, factorial, Rational, RationalVector};

/// Integer exponent vector, entries may be negative.
pub type Exponent = Vec<i64>;

/// A nonzero Laurent polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl LaurentPolynomial {
    /// Collects terms, summing repeated exponents and dropping zero coefficients.
    pub fn new(dim: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid(
                "Laurent polynomials need at least one variable",
            ));
        }
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != dim {
                return Err(Error::invalid(format!(
                    "exponent {e:?} does not have length {dim}"
                )));
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::invalid("zero polynomial"));
        }
        Ok(LaurentPolynomial { dim, terms: map })
    }

    /// The polynomial with coefficient 1 on every point of `support`.
    pub fn from_support(dim: usize, support: &[Exponent]) -> Result<Self> {
        Self::new(dim, support.iter().map(|e| (e.clone(), Rational::one())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }
}

pub fn newton_polytope(f: &LaurentPolynomial) -> Result<VPolytope> {
    support_polytope(&f.support())
}

fn support_polytope(support: &[Exponent]) -> Result<VPolytope> {
    let pts: Vec<RationalVector> = support
        .iter()
        .map(|e| RationalVector::from_ints(e))
        .collect();
    VPolytope::from_points(&pts)
}

/// `n` supports in ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSystem {
    dim: usize,
    supports: Vec<Vec<Exponent>>,
}

impl SupportSystem {
    pub fn new(dim: usize, supports: Vec<Vec<Exponent>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("support systems need positive dimension"));
        }
        if supports.len() != dim {
            return Err(Error::invalid(format!(
                "a system in dimension {dim} needs {dim} supports, got {}",
                supports.len()
            )));
        }
        let mut clean = Vec::with_capacity(dim);
        for s in supports {
            if s.is_empty() {
                return Err(Error::invalid("empty support"));
            }
            if s.iter().any(|e| e.len() != dim) {
                return Err(Error::invalid("support point has wrong dimension"));
            }
            let set: BTreeSet<Exponent> = s.into_iter().collect();
            clean.push(set.into_iter().collect());
        }
        Ok(SupportSystem {
            dim,
            supports: clean,
        })
    }

    pub fn from_polynomials(polys: &[LaurentPolynomial]) -> Result<Self> {
        let dim = polys
            .first()
            .ok_or_else(|| Error::invalid("empty system"))?
            .dim();
        if polys.iter().any(|p| p.dim() != dim) {
            return Err(Error::invalid("polynomials live in different dimensions"));
        }
        Self::new(dim, polys.iter().map(LaurentPolynomial::support).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn supports(&self) -> &[Vec<Exponent>] {
        &self.supports
    }
}

/// `n!·V(Δ₁,…,Δₙ)` for the Newton polytopes of the system.
pub fn bkk_number(sys: &SupportSystem) -> Result<u64> {
    let polytopes = sys
        .supports
        .iter()
        .map(|s| support_polytope(s))
        .collect::<Result<Vec<_>>>()?;
    let normalized = mixed_volume(&polytopes)? * Rational::from_integer(factorial(sys.dim));
    if !normalized.is_integer() {
        return Err(Error::NonIntegerDegree(crate::format_rational(&normalized)));
    }
    normalized
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::invalid("BKK number does not fit in 64 bits"))
}

/// Randomization parameters for the root-count oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub seed: u64,
    pub trials: usize,
    pub retries: usize,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: i64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 0x5eed_b4b4,
            trials: 5,
            retries: 16,
            coeff_bound: 32,
        }
    }
}

impl OracleConfig {
    fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.retries == 0 {
            return Err(Error::invalid("trials and retries must be positive"));
        }
        if self.coeff_bound < 1 {
            return Err(Error::invalid("coefficient bound must be at least 1"));
        }
        Ok(())
    }

    fn rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}

fn draw_coefficient(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let magnitude = rng.gen_range(1..=bound);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::from_integer(BigInt::from(sign * magnitude))
}

/// Most frequent value; ties go to the smallest.
fn modal(counts: &[usize]) -> usize {
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in counts {
        *freq.entry(c).or_default() += 1;
    }
    let best = freq.values().copied().max().unwrap_or(0);
    freq.into_iter()
        .find(|&(_, f)| f == best)
        .map_or(0, |(c, _)| c)
}

/// Number of distinct roots in ℂ* of a random polynomial with the given
/// one-dimensional support; the modal count over trials.
pub fn oracle_roots_univariate(support: &[i64], cfg: &OracleConfig) -> Result<usize> {
    cfg.validate()?;
    let min = *support
        .iter()
        .min()
        .ok_or_else(|| Error::invalid("empty support"))?;
    let support: BTreeSet<i64> = support.iter().copied().collect();
    let mut counts = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(trial);
        let mut found = None;
        for _ in 0..cfg.retries {
            let top = (support.iter().max().unwrap() - min) as usize;
            let mut coeffs = vec![Rational::zero(); top + 1];
            for &e in &support {
                coeffs[(e - min) as usize] = draw_coefficient(&mut rng, cfg.coeff_bound);
            }
            let p = UniPoly::new(coeffs).strip_variable_powers();
            if p.degree() == Some(0) || p.is_squarefree() {
                found = p.degree();
                break;
            }
        }
        counts.push(found.ok_or(Error::RetriesExhausted {
            attempts: cfg.retries,
        })?);
    }
    Ok(modal(&counts))
}

/// Shifts a support so both coordinates have minimum zero.
fn shift_to_origin(support: &[Exponent]) -> Vec<(usize, usize)> {
    let mx = support.iter().map(|e| e[0]).min().unwrap();
    let my = support.iter().map(|e| e[1]).min().unwrap();
    support
        .iter()
        .map(|e| ((e[0] - mx) as usize, (e[1] - my) as usize))
        .collect()
}

/// Coefficients in `y` (each a polynomial in `t`) of `f(t − c·y, y)`.
fn substitute(terms: &[((usize, usize), Rational)], c: &Rational) -> Vec<UniPoly> {
    let top = terms.iter().map(|((i, j), _)| i + j).max().unwrap_or(0);
    let mut out = vec![UniPoly::zero(); top + 1];
    let neg_c = -c;
    for ((i, j), a) in terms {
        // (t − c y)^i = Σ_k C(i,k) (−c)^k y^k t^(i−k)
        let mut power = Rational::one();
        for k in 0..=*i {
            let coeff = a * Rational::from_integer(binomial(*i, k)) * &power;
            out[j + k] = &out[j + k] + &UniPoly::monomial(coeff, i - k);
            power *= &neg_c;
        }
    }
    while out.last().is_some_and(UniPoly::is_zero) {
        out.pop();
    }
    out
}

/// Number of common roots in (ℂ*)² of two random polynomials with the given
/// supports; the modal count over trials.
///
/// Each draw clears negative exponents, substitutes `x = t − c·y` for a random
/// integer `c` so that distinct solutions get distinct `t`-values, eliminates
/// `y` with the Sylvester resultant, strips powers of `t` (the origin is the
/// only generic non-torus common zero) and checks squarefreeness. Degenerate
/// draws are redrawn up to `retries` times.
pub fn oracle_roots_bivariate(a: &[Exponent], b: &[Exponent], cfg: &OracleConfig) -> Result<usize> {
    cfg.validate()?;
    for s in [a, b] {
        if s.is_empty() {
            return Err(Error::invalid("empty support"));
        }
        if s.iter().any(|e| e.len() != 2) {
            return Err(Error::invalid("bivariate oracle needs exponents in ℤ²"));
        }
    }
    let sa = shift_to_origin(a);
    let sb = shift_to_origin(b);
    let mut counts = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let mut rng = cfg.rng(trial);
        let mut found = None;
        for _ in 0..cfg.retries {
            let mut draw = |s: &[(usize, usize)]| -> Vec<((usize, usize), Rational)> {
                let uniq: BTreeSet<(usize, usize)> = s.iter().copied().collect();
                uniq.into_iter()
                    .map(|e| (e, draw_coefficient(&mut rng, cfg.coeff_bound)))
                    .collect()
            };
            let fa = draw(&sa);
            let fb = draw(&sb);
            let c = Rational::from_integer(BigInt::from(rng.gen_range(1..=97i64)));
            let f = substitute(&fa, &c);
            let g = substitute(&fb, &c);
            if f.is_empty() || g.is_empty() {
                continue;
            }
            let res = sylvester_resultant(&f, &g);
            if res.is_zero() {
                continue;
            }
            let res = res.strip_variable_powers().monic();
            if res.degree() == Some(0) || res.is_squarefree() {
                found = res.degree();
                break;
            }
        }
        counts.push(found.ok_or(Error::RetriesExhausted {
            attempts: cfg.retries,
        })?);
    }
    Ok(modal(&counts))
}

/// Root-count oracle for systems in dimension 1 or 2.
pub fn oracle_roots(sys: &SupportSystem, cfg: &OracleConfig) -> Result<usize> {
    match sys.dim {
        1 => {
            let s: Vec<i64> = sys.supports[0].iter().map(|e| e[0]).collect();
            oracle_roots_univariate(&s, cfg)
        }
        2 => oracle_roots_bivariate(&sys.supports[0], &sys.supports[1], cfg),
        d => Err(Error::invalid(format!(
            "root-count oracles exist only in dimensions 1 and 2, not {d}"
        ))),
    }
}

/// Applies `e ↦ M e` to every exponent of every support.
pub fn transform_supports(sys: &SupportSystem, m: &[Vec<i64>]) -> Result<SupportSystem> {
    let n = sys.dim;
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::invalid("matrix has wrong shape"));
    }
    let apply = |e: &Exponent| -> Exponent {
        m.iter()
            .map(|row| row.iter().zip(e).map(|(a, b)| a * b).sum())
            .collect()
    };
    SupportSystem::new(
        n,
        sys.supports
            .iter()
            .map(|s| s.iter().map(apply).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn sys(dim: usize, s: &[&[&[i64]]]) -> SupportSystem {
        SupportSystem::new(
            dim,
            s.iter()
                .map(|pts| pts.iter().map(|p| p.to_vec()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn newton_polytopes() {
        let f = LaurentPolynomial::from_support(2, &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            newton_polytope(&f).unwrap(),
            VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap()
        );
        let g = LaurentPolynomial::new(
            1,
            [(vec![-1], rat(1)), (vec![0], rat(2)), (vec![1], rat(3))],
        )
        .unwrap();
        assert_eq!(
            newton_polytope(&g).unwrap(),
            VPolytope::from_int_points(&[&[-1], &[1]]).unwrap()
        );
        let h =
            LaurentPolynomial::from_support(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
                .unwrap();
        assert_eq!(newton_polytope(&h).unwrap().vertices().len(), 4);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(LaurentPolynomial::new(1, [(vec![1], rat(0))]).is_err());
        assert!(LaurentPolynomial::new(1, [(vec![1], rat(2)), (vec![1], rat(-2))]).is_err());
        assert!(LaurentPolynomial::new(2, [(vec![1], rat(2))]).is_err());
    }

    #[test]
    fn bkk_examples() {
        let line: &[&[i64]] = &[&[0, 0], &[1, 0], &[0, 1]];
        assert_eq!(bkk_number(&sys(2, &[line, line])).unwrap(), 1);
        let bilinear: &[&[i64]] = &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]];
        assert_eq!(bkk_number(&sys(2, &[bilinear, bilinear])).unwrap(), 2);
        assert!(SupportSystem::new(2, vec![vec![vec![0, 0]]]).is_err());
    }

    #[test]
    fn univariate_oracle_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(oracle_roots_univariate(&[0, 1, 3], &cfg).unwrap(), 3);
        assert_eq!(oracle_roots_univariate(&[-1, 0, 1], &cfg).unwrap(), 2);
        assert_eq!(oracle_roots_univariate(&[5], &cfg).unwrap(), 0);
        assert!(oracle_roots_univariate(&[], &cfg).is_err());
    }

    #[test]
    fn bivariate_oracle_examples() {
        let cfg = OracleConfig::default();
        let v = |p: &[&[i64]]| p.iter().map(|x| x.to_vec()).collect::<Vec<_>>();
        let line = v(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(oracle_roots_bivariate(&line, &line, &cfg).unwrap(), 1);
        let bilinear = v(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            oracle_roots_bivariate(&bilinear, &bilinear, &cfg).unwrap(),
            2
        );
        let conic = v(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(oracle_roots_bivariate(&conic, &line, &cfg).unwrap(), 2);
        // four solutions sharing x-coordinates in pairs
        assert_eq!(oracle_roots_bivariate(&conic, &conic, &cfg).unwrap(), 4);
        assert!(oracle_roots_bivariate(&line, &[vec![1]], &cfg).is_err());
    }

    #[test]
    fn oracle_is_seeded() {
        let cfg = OracleConfig {
            seed: 7,
            ..OracleConfig::default()
        };
        let a = vec![vec![0, 0], vec![2, 1], vec![-1, 1]];
        let b = vec![vec![1, 0], vec![0, 2], vec![1, 1]];
        assert_eq!(
            oracle_roots_bivariate(&a, &b, &cfg).unwrap(),
            oracle_roots_bivariate(&a, &b, &cfg).unwrap()
        );
    }

    #[test]
    fn modal_breaks_ties_low() {
        assert_eq!(modal(&[3, 2, 3, 2]), 2);
        assert_eq!(modal(&[4, 4, 1]), 4);
    }
}
