use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::forms::{
    apply_operator, monomials, DiffOperatorMonomial, HomogeneousForm, Monomial, SymmetricForm,
};
use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, Matrix, RowSpaceSolver};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Quotient of the operator algebra by the annihilator of a polynomial.
    Polynomial,
    /// Quotient of the symmetric algebra by the kernel of a multilinear form.
    Form,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Polynomial => "polynomial",
            Construction::Form => "form",
        }
    }
}

/// Degree-`k` data: every monomial of degree `k` with its image under the
/// catalecticant map, the monomials kept as basis of `A_k`, and the ideal slice.
#[derive(Clone, Debug)]
struct Slice {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    images: Matrix,
    basis: Vec<usize>,
    kernel: Matrix,
    solver: RowSpaceSolver,
}

/// Homogeneous element of a [`GradedPDAlgebra`], in the basis of its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Graded algebra `A = ⊕_{k≤n} A_k` with Poincaré duality, built from a
/// homogeneous polynomial or a symmetric form over `s` generators.
#[derive(Clone, Debug)]
pub struct GradedPDAlgebra {
    construction: Construction,
    generators: usize,
    top_degree: usize,
    slices: Vec<Slice>,
    structure: BTreeMap<(usize, usize, usize, usize), Vec<Rational>>,
    pairings: Vec<Matrix>,
}

impl GradedPDAlgebra {
    fn assemble(
        construction: Construction,
        s: usize,
        n: usize,
        image: impl Fn(&Monomial) -> Vec<Rational>,
    ) -> Self {
        let mut slices = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mons = monomials(s, k);
            let width = monomials(s, n - k).len();
            let images: Matrix = mons.iter().map(&image).collect();
            let mut echelon = EchelonBasis::new();
            let basis: Vec<usize> = (0..mons.len())
                .filter(|&i| echelon.insert(&images[i]))
                .collect();
            let mut kernel = linalg::left_kernel(&images, width);
            linalg::rref(&mut kernel);
            let basis_rows: Matrix = basis.iter().map(|&i| images[i].clone()).collect();
            let solver = RowSpaceSolver::new(&basis_rows, width);
            let index = mons
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            slices.push(Slice {
                monomials: mons,
                index,
                images,
                basis,
                kernel,
                solver,
            });
        }
        let mut alg = GradedPDAlgebra {
            construction,
            generators: s,
            top_degree: n,
            slices,
            structure: BTreeMap::new(),
            pairings: Vec::new(),
        };
        for k in 0..=n {
            for l in 0..=n - k {
                for i in 0..alg.slices[k].basis.len() {
                    for j in 0..alg.slices[l].basis.len() {
                        let a = &alg.slices[k].monomials[alg.slices[k].basis[i]];
                        let b = &alg.slices[l].monomials[alg.slices[l].basis[j]];
                        let product: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        let coords = alg.reduce_monomial(&product);
                        alg.structure.insert((k, i, l, j), coords);
                    }
                }
            }
        }
        alg.pairings = (0..=n)
            .map(|k| {
                (0..alg.dim(k))
                    .map(|i| {
                        (0..alg.dim(n - k))
                            .map(|j| alg.top_form_coords(&alg.structure[&(k, i, n - k, j)]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        alg
    }

    fn reduce_monomial(&self, m: &[u32]) -> Vec<Rational> {
        let k = m.iter().map(|&a| a as usize).sum::<usize>();
        let slice = &self.slices[k];
        let row = &slice.images[slice.index[m]];
        slice
            .solver
            .coordinates(row)
            .expect("every image lies in the span of the pivot images")
    }

    fn top_form_coords(&self, coords: &[Rational]) -> Rational {
        let top = &self.slices[self.top_degree];
        coords
            .iter()
            .zip(&top.basis)
            .map(|(c, &i)| c * &top.images[i][0])
            .sum()
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    /// `dim A_k`; zero above the top degree.
    pub fn dim(&self, k: usize) -> usize {
        self.slices.get(k).map_or(0, |s| s.basis.len())
    }

    pub fn hilbert(&self) -> Vec<usize> {
        (0..=self.top_degree).map(|k| self.dim(k)).collect()
    }

    /// Monomials representing the basis of `A_k`.
    pub fn basis(&self, k: usize) -> Vec<Monomial> {
        self.slices.get(k).map_or_else(Vec::new, |s| {
            s.basis.iter().map(|&i| s.monomials[i].clone()).collect()
        })
    }

    /// Canonical (reduced echelon) basis of the degree-`k` part of the ideal,
    /// as coefficient vectors over `monomials(s, k)`. Above the top degree the
    /// ideal contains everything.
    pub fn ideal_slice(&self, k: usize) -> Matrix {
        match self.slices.get(k) {
            Some(s) => s.kernel.clone(),
            None => {
                let len = monomials(self.generators, k).len();
                (0..len)
                    .map(|i| {
                        (0..len)
                            .map(|j| {
                                if i == j {
                                    Rational::from_integer(1.into())
                                } else {
                                    Rational::zero()
                                }
                            })
                            .collect()
                    })
                    .collect()
            }
        }
    }

    /// Whether the operator `Σ c_β ∂^β` lies in the ideal.
    pub fn in_ideal(&self, k: usize, coeffs: &[Rational]) -> bool {
        let Some(slice) = self.slices.get(k) else {
            return true;
        };
        let width = slice.images.first().map_or(0, Vec::len);
        (0..width).all(|c| {
            coeffs
                .iter()
                .zip(&slice.images)
                .map(|(x, row)| x * &row[c])
                .sum::<Rational>()
                .is_zero()
        })
    }

    /// Structure constants: coordinates of `b_{k,i} · b_{l,j}` in the basis of `A_{k+l}`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize, usize, usize), Vec<Rational>> {
        &self.structure
    }

    /// Pairing matrix `B_k(a, b) = top_form(a·b)` on `A_k × A_{n−k}`.
    pub fn pairing(&self, k: usize) -> &Matrix {
        &self.pairings[k]
    }

    /// Values of the top form on the basis of `A_n`.
    pub fn top_form_values(&self) -> Vec<Rational> {
        let top = &self.slices[self.top_degree];
        top.basis
            .iter()
            .map(|&i| top.images[i][0].clone())
            .collect()
    }

    pub fn top_form(&self, a: &Element) -> Result<Rational> {
        if a.degree != self.top_degree {
            return Err(Error::invalid(format!(
                "top form takes degree {} elements, got degree {}",
                self.top_degree, a.degree
            )));
        }
        Ok(self.top_form_coords(&a.coords))
    }

    pub fn one(&self) -> Element {
        Element {
            degree: 0,
            coords: vec![Rational::from_integer(1.into())],
        }
    }

    pub fn zero(&self, degree: usize) -> Element {
        Element {
            degree,
            coords: vec![Rational::zero(); self.dim(degree)],
        }
    }

    /// Class of the operator `Σ c_β ∂^β` of degree `k`, coefficients listed
    /// against `monomials(s, k)`.
    pub fn class_of(&self, k: usize, coeffs: &[Rational]) -> Result<Element> {
        let expected = monomials(self.generators, k).len();
        if coeffs.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "degree {k} operators have {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        let Some(slice) = self.slices.get(k) else {
            return Ok(self.zero(k));
        };
        let width = slice.images.first().map_or(0, Vec::len);
        let mut image = vec![Rational::zero(); width];
        for (c, row) in coeffs.iter().zip(&slice.images) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in image.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        let coords = slice
            .solver
            .coordinates(&image)
            .expect("image lies in the span");
        Ok(Element { degree: k, coords })
    }

    pub fn class_of_monomial(&self, m: &[u32]) -> Result<Element> {
        if m.len() != self.generators {
            return Err(Error::ShapeMismatch("monomial has wrong length".into()));
        }
        let k = m.iter().map(|&a| a as usize).sum::<usize>();
        if k > self.top_degree {
            return Ok(self.zero(k));
        }
        Ok(Element {
            degree: k,
            coords: self.reduce_monomial(m),
        })
    }

    /// Degree-one class of generator `i`.
    pub fn generator_class(&self, i: usize) -> Result<Element> {
        if i >= self.generators {
            return Err(Error::invalid(format!("no generator {i}")));
        }
        let mut m = vec![0; self.generators];
        m[i] = 1;
        self.class_of_monomial(&m)
    }

    /// Degree-one class of `Σ xᵢ eᵢ`.
    pub fn linear_class(&self, x: &[Rational]) -> Result<Element> {
        self.class_of(1, x)
    }

    /// Product `a·b`. Above the top degree the product is the zero element
    /// of the (zero) space `A_{k+l}`.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        for e in [a, b] {
            if e.coords.len() != self.dim(e.degree) {
                return Err(Error::ShapeMismatch(format!(
                    "element of degree {} has {} coordinates, expected {}",
                    e.degree,
                    e.coords.len(),
                    self.dim(e.degree)
                )));
            }
        }
        let degree = a.degree + b.degree;
        if degree > self.top_degree {
            return Ok(self.zero(degree));
        }
        let mut coords = vec![Rational::zero(); self.dim(degree)];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (c, s) in coords
                    .iter_mut()
                    .zip(&self.structure[&(a.degree, i, b.degree, j)])
                {
                    *c += &xy * s;
                }
            }
        }
        Ok(Element { degree, coords })
    }

    pub fn power(&self, a: &Element, k: usize) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Whether every pairing matrix is square and invertible.
    pub fn pairings_nondegenerate(&self) -> bool {
        self.pairings.iter().enumerate().all(|(k, b)| {
            let rows = self.dim(k);
            let cols = self.dim(self.top_degree - k);
            rows == cols && b.len() == rows && (rows == 0 || !linalg::det(b.clone()).is_zero())
        })
    }

    /// Rank of the multiplication map `A₁ ⊗ A_{k−1} → A_k`.
    pub fn degree_one_generation_rank(&self, k: usize) -> usize {
        if k == 0 || k > self.top_degree {
            return 0;
        }
        let mut echelon = EchelonBasis::new();
        for i in 0..self.dim(1) {
            for j in 0..self.dim(k - 1) {
                echelon.insert(&self.structure[&(1, i, k - 1, j)]);
            }
        }
        echelon.rank()
    }

    pub fn is_generated_in_degree_one(&self) -> bool {
        (1..=self.top_degree).all(|k| self.degree_one_generation_rank(k) == self.dim(k))
    }

    /// Checks every Poincaré duality algebra property; returns the first failure.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let h = self.hilbert();
        if h[0] != 1 {
            return Err(format!("dim A_0 = {}", h[0]));
        }
        if h[self.top_degree] != 1 {
            return Err(format!("dim A_n = {}", h[self.top_degree]));
        }
        if h.iter().ne(h.iter().rev()) {
            return Err(format!("Hilbert function {h:?} is not palindromic"));
        }
        if !self.pairings_nondegenerate() {
            return Err("a pairing matrix is singular".into());
        }
        if !self.is_generated_in_degree_one() {
            return Err("not generated in degree one".into());
        }
        Ok(())
    }
}

/// `A_P = 𝒟 / I_P` where `I_P` is the annihilator of `P`.
pub fn build_algebra_from_polynomial(p: &HomogeneousForm) -> Result<GradedPDAlgebra> {
    if p.is_zero() {
        return Err(Error::ZeroForm);
    }
    let n = p.degree();
    let s = p.vars();
    Ok(GradedPDAlgebra::assemble(
        Construction::Polynomial,
        s,
        n,
        |beta| {
            let d = apply_operator(&DiffOperatorMonomial::new(beta.clone()), p)
                .expect("operator shape matches");
            let k: usize = beta.iter().map(|&a| a as usize).sum();
            monomials(s, n - k)
                .iter()
                .map(|m| d.coefficient(m))
                .collect()
        },
    ))
}

/// `A_F = Sym(V) / I_F` where `I_F = {a : F(a·b) = 0 for all b}`.
pub fn build_algebra_from_form(f: &SymmetricForm) -> Result<GradedPDAlgebra> {
    if f.values().is_empty() {
        return Err(Error::ZeroForm);
    }
    let n = f.degree();
    let s = f.generators();
    Ok(GradedPDAlgebra::assemble(
        Construction::Form,
        s,
        n,
        |beta| {
            let k: usize = beta.iter().map(|&a| a as usize).sum();
            monomials(s, n - k)
                .iter()
                .map(|gamma| {
                    let sum: Vec<u32> = beta.iter().zip(gamma).map(|(a, b)| a + b).collect();
                    f.get(&sum)
                })
                .collect()
        },
    ))
}

/// Degreewise equality of the two ideals.
pub fn check_equivalence(a: &GradedPDAlgebra, b: &GradedPDAlgebra) -> Result<bool> {
    if a.generators != b.generators || a.top_degree != b.top_degree {
        return Err(Error::ShapeMismatch(format!(
            "algebras over ({}, {}) and ({}, {}) generators/degree",
            a.generators, a.top_degree, b.generators, b.top_degree
        )));
    }
    Ok((0..=a.top_degree).all(|k| a.ideal_slice(k) == b.ideal_slice(k)))
}

/// `top_form(dⁿ)` for a degree-one element `d`.
pub fn self_intersection(alg: &GradedPDAlgebra, d: &Element) -> Result<Rational> {
    if d.degree != 1 {
        return Err(Error::invalid(
            "self-intersection takes a degree-one element",
        ));
    }
    alg.top_form(&alg.power(d, alg.top_degree)?)
}
